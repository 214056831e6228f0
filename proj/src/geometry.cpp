#include "fracperim/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>

namespace fracperim {

std::vector<Interval> FatCantorSet::removed_sorted() const {
    std::vector<Interval> out;
    for (const auto& lvl : removed_by_level) out.insert(out.end(), lvl.begin(), lvl.end());
    std::sort(out.begin(), out.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    return out;
}

Rational FatCantorSet::remaining_length() const {
    Rational total = 0;
    for (const auto& I : remaining) total += I.hi - I.lo;
    return total;
}

Rational FatCantorSet::piece_length(int level) const {
    if (level < 0) throw std::invalid_argument("piece_length: level >= 0");
    const Rational& a = spec.a;
    Rational two_a_pow = 1;
    Rational pow2 = 1;
    for (int j = 0; j < level; ++j) {
        two_a_pow *= 2 * a;
        pow2 *= 2;
    }
    return (1 - 3 * a + a * two_a_pow) / (pow2 * (1 - 2 * a));
}

FatCantorSet build_fat_cantor(const FatCantorSpec& spec) {
    if (!(spec.a > 0 && 3 * spec.a < 1))
        throw std::invalid_argument("fat Cantor ratio must satisfy 0 < a < 1/3");
    if (spec.depth < 1 || spec.depth > 22)
        throw std::invalid_argument("fat Cantor depth must be in [1, 22]");

    FatCantorSet set;
    set.spec = spec;
    std::vector<Interval> pieces{{Rational(0), Rational(1)}};
    Rational gap = 1;
    for (int j = 1; j <= spec.depth; ++j) {
        gap *= spec.a;  // a^j
        std::vector<Interval> next;
        next.reserve(pieces.size() * 2);
        std::vector<Interval> level;
        level.reserve(pieces.size());
        for (const auto& piece : pieces) {
            Rational len = piece.hi - piece.lo;
            Rational g_lo = piece.lo + (len - gap) / 2;
            Rational g_hi = g_lo + gap;
            level.push_back({g_lo, g_hi});
            next.push_back({piece.lo, g_lo});
            next.push_back({g_hi, piece.hi});
        }
        set.removed_by_level.push_back(std::move(level));
        pieces = std::move(next);
    }
    set.remaining = std::move(pieces);
    return set;
}

DiscreteSpace build_grid_space(int dim, int n, double extent) {
    if (dim != 1 && dim != 2) throw std::invalid_argument("grid dim must be 1 or 2");
    if (n < 1) throw std::invalid_argument("grid n must be positive");
    if (!(extent > 0.0)) throw std::invalid_argument("grid extent must be positive");
    DiscreteSpace sp;
    sp.dim = dim;
    double h = extent / n;
    sp.resolution_h = h;
    if (dim == 1) {
        sp.xs.resize(static_cast<std::size_t>(n));
        sp.weights.assign(static_cast<std::size_t>(n), h);
        for (int i = 0; i < n; ++i) sp.xs[static_cast<std::size_t>(i)] = (i + 0.5) * h;
    } else {
        std::size_t total = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
        sp.xs.resize(total);
        sp.ys.resize(total);
        sp.weights.assign(total, h * h);
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) {
                std::size_t k = static_cast<std::size_t>(j) * n + i;
                sp.xs[k] = (i + 0.5) * h;
                sp.ys[k] = (j + 0.5) * h;
            }
    }
    return sp;
}

RasterizedSet rasterize_interval_union(const std::vector<Interval>& intervals, int n) {
    RasterizedSet out;
    out.space = build_grid_space(1, n);
    out.set.in.assign(static_cast<std::size_t>(n), 0);
    std::vector<Interval> sorted = intervals;
    std::sort(sorted.begin(), sorted.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    std::size_t k = 0;
    for (int i = 0; i < n; ++i) {
        Rational mid(2 * i + 1, 2 * static_cast<long>(n));
        while (k < sorted.size() && sorted[k].hi < mid) ++k;
        // candidate intervals start at k; an earlier one cannot contain mid
        for (std::size_t j = k; j < sorted.size() && sorted[j].lo <= mid; ++j)
            if (mid <= sorted[j].hi) {
                out.set.in[static_cast<std::size_t>(i)] = 1;
                break;
            }
    }
    return out;
}

namespace {

// floor for nonnegative rationals: cpp_int division truncates toward zero
long long floor_nonneg(const Rational& q) {
    return static_cast<long long>(boost::multiprecision::numerator(q) /
                                  boost::multiprecision::denominator(q));
}

}  // namespace

std::vector<std::size_t> cantor_boundary_cells(const FatCantorSet& cantor, int n,
                                               int min_width_cells) {
    if (n < 1) throw std::invalid_argument("raster n must be positive");
    if (min_width_cells < 1) throw std::invalid_argument("min_width_cells must be positive");
    Rational min_width(min_width_cells, static_cast<long>(n));
    std::vector<std::size_t> cells;
    for (const Interval& gap : cantor.removed_sorted()) {
        if (gap.hi - gap.lo < min_width) continue;
        // cell midpoints sit at (2i+1)/(2n): the last midpoint at or left of the
        // gap entrance is floor(lo*n - 1/2), the first at or right of the exit is
        // ceil(hi*n - 1/2)
        Rational q_left = gap.lo * n - Rational(1, 2);
        Rational q_right = gap.hi * n - Rational(1, 2);
        long long left = q_left < 0 ? 0 : floor_nonneg(q_left);
        long long right = floor_nonneg(q_right);
        if (Rational(right) != q_right) ++right;
        left = std::clamp(left, 0LL, static_cast<long long>(n) - 1);
        right = std::clamp(right, 0LL, static_cast<long long>(n) - 1);
        cells.push_back(static_cast<std::size_t>(left));
        cells.push_back(static_cast<std::size_t>(right));
    }
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    return cells;
}

std::vector<std::size_t> phase_interface_cells(const DiscreteSpace& space, const IndicatorSet& E) {
    std::size_t total = space.xs.size();
    if (E.in.size() != total) throw std::invalid_argument("indicator does not match the space");
    std::vector<std::size_t> cells;
    if (space.dim == 1) {
        for (std::size_t i = 0; i < total; ++i) {
            if (!E.in[i]) continue;
            if ((i > 0 && !E.in[i - 1]) || (i + 1 < total && !E.in[i + 1])) cells.push_back(i);
        }
        return cells;
    }
    std::size_t n = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(total))));
    if (n * n != total) throw std::invalid_argument("square grid space required");
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t k = j * n + i;
            if (!E.in[k]) continue;
            if ((i > 0 && !E.in[k - 1]) || (i + 1 < n && !E.in[k + 1]) ||
                (j > 0 && !E.in[k - n]) || (j + 1 < n && !E.in[k + n]))
                cells.push_back(k);
        }
    return cells;
}

namespace {

// Elements of Q[sqrt(3)]: value = a + b*sqrt(3). Closed under the +-60 degree
// rotations that generate Koch vertices, so every membership predicate below
// is decided by exact rational arithmetic.
struct R3 {
    Rational a, b;
};

int sign_rational(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

int sign(const R3& v) {
    int sa = sign_rational(v.a), sb = sign_rational(v.b);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: compare a^2 against 3 b^2
    Rational lhs = v.a * v.a, rhs = 3 * v.b * v.b;
    int cmp = sign_rational(lhs - rhs);
    return sa > 0 ? cmp : -cmp;  // |a| dominates iff a^2 > 3b^2
}

// Koch vertex in the unit-side frame: (x, y) = (px, py*sqrt(3)).
struct KVert {
    Rational px, py;
};

// Apex of the outward bump over the middle third of segment A->C, for a
// counterclockwise polygon: rotate (C-A) by -60 degrees about A.
// With x = p, y = t*sqrt(3): x' = p/2 + 3t/2, y' = (t - p)/2 * sqrt(3).
KVert bump_apex(const KVert& A, const KVert& C) {
    Rational dp = C.px - A.px, dt = C.py - A.py;
    return {A.px + dp / 2 + 3 * dt / 2, A.py + (dt - dp) / 2};
}

std::vector<KVert> koch_polygon(int depth) {
    std::vector<KVert> poly{{Rational(0), Rational(0)},
                            {Rational(1), Rational(0)},
                            {Rational(1, 2), Rational(1, 2)}};
    for (int it = 0; it < depth; ++it) {
        std::vector<KVert> next;
        next.reserve(poly.size() * 4);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            const KVert& P = poly[i];
            const KVert& Q = poly[(i + 1) % poly.size()];
            KVert A{P.px + (Q.px - P.px) / 3, P.py + (Q.py - P.py) / 3};
            KVert C{P.px + 2 * (Q.px - P.px) / 3, P.py + 2 * (Q.py - P.py) / 3};
            next.push_back(P);
            next.push_back(A);
            next.push_back(bump_apex(A, C));
            next.push_back(C);
        }
        poly = std::move(next);
    }
    return poly;
}

}  // namespace

KochSnowflake build_koch_snowflake(int depth, int n, double margin) {
    if (depth < 0 || depth > 8) throw std::invalid_argument("koch depth must be in [0, 8]");
    if (n < 4) throw std::invalid_argument("koch raster n must be >= 4");
    if (!(margin > 0.0 && margin < 0.45)) throw std::invalid_argument("koch margin in (0, 0.45)");

    std::vector<KVert> poly = koch_polygon(depth);
    const double r3 = std::sqrt(3.0);

    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (const auto& v : poly) {
        double x = to_double(v.px), y = to_double(v.py) * r3;
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
    }
    double span = std::max(xmax - xmin, ymax - ymin);
    double ideal_scale = (1.0 - 2.0 * margin) / span;

    // Rational placement: x -> sx*px + dx, y -> dy + (sx*py)*sqrt(3). Offsets
    // are multiples of 1/(3n); raster midpoints are odd multiples of 1/(2n),
    // so no polygon vertex can land exactly on a scan row (a rational equals
    // k/(3n) only if 3(2j+1) = 2k, odd = even) and the even-odd sweep never
    // sees a vertex tie.
    const long denom = 1 << 20;
    Rational sx(static_cast<long>(std::floor(ideal_scale * denom)), denom);
    auto offset = [&](double target) {
        return Rational(static_cast<long>(std::llround(target * 3.0 * n)),
                        3L * static_cast<long>(n));
    };
    double s = to_double(sx);
    Rational dx = offset(0.5 * (1.0 - s * (xmax - xmin)) - s * xmin);
    Rational dy = offset(0.5 * (1.0 - s * (ymax - ymin)) - s * ymin);

    KochSnowflake out;
    out.depth = depth;
    out.vx.reserve(poly.size());
    out.vy.reserve(poly.size());
    std::vector<Rational> X(poly.size());  // placed x, pure rational
    std::vector<Rational> T(poly.size());  // placed y = dy + T*sqrt(3)... minus dy
    for (std::size_t i = 0; i < poly.size(); ++i) {
        X[i] = sx * poly[i].px + dx;
        T[i] = sx * poly[i].py;
        out.vx.push_back(to_double(X[i]));
        out.vy.push_back(to_double(dy) + to_double(T[i]) * r3);
    }

    out.raster.space = build_grid_space(2, n);
    out.raster.set.in.assign(static_cast<std::size_t>(n) * n, 0);

    // Bucket edges by the raster rows their y-extent can touch (double bounds
    // with generous padding: only a superset is needed, the exact straddle
    // test rejects the extras).
    std::size_t m = poly.size();
    std::vector<std::vector<std::uint32_t>> rows_edges(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < m; ++i) {
        std::size_t j = (i + 1) % m;
        double y1 = out.vy[i], y2 = out.vy[j];
        double lo = std::min(y1, y2) - 1e-9, hi = std::max(y1, y2) + 1e-9;
        int r_lo = std::max(0, static_cast<int>(std::floor(lo * n - 0.5)));
        int r_hi = std::min(n - 1, static_cast<int>(std::ceil(hi * n - 0.5)));
        for (int r = r_lo; r <= r_hi; ++r)
            rows_edges[static_cast<std::size_t>(r)].push_back(static_cast<std::uint32_t>(i));
    }

    for (int r = 0; r < n; ++r) {
        Rational my(2 * r + 1, 2 * static_cast<long>(n));
        Rational my_shift = my - dy;  // compare against T*sqrt(3)
        std::vector<R3> crossings;
        for (std::uint32_t ei : rows_edges[static_cast<std::size_t>(r)]) {
            std::size_t i = ei, j = (ei + 1) % m;
            // sign of (vertex y - my) = sign((T - my_shift/sqrt3)) handled as
            // R3 value (-(my_shift)) + T*sqrt(3)
            int s1 = sign({-my_shift, T[i]});
            int s2 = sign({-my_shift, T[j]});
            if (s1 == 0 || s2 == 0)
                throw std::logic_error("koch sweep: vertex on scan row");
            if (s1 == s2) continue;
            // x_cross = X_i + (my - Y_i) (X_j - X_i) / (Y_j - Y_i); the y-gap
            // is (T_j - T_i) sqrt(3), so the quotient stays inside Q[sqrt(3)]:
            // (A + B sqrt3) / (G sqrt3) = B/G + A/(3G) * sqrt3.
            Rational A = my_shift, B = -T[i], G = T[j] - T[i];
            Rational fa = B / G, fb = A / (3 * G);
            Rational dxx = X[j] - X[i];
            crossings.push_back({X[i] + dxx * fa, dxx * fb});
        }
        std::sort(crossings.begin(), crossings.end(), [](const R3& u, const R3& v) {
            return sign({u.a - v.a, u.b - v.b}) < 0;
        });
        // walk midpoints left to right; parity of strictly-passed crossings
        std::size_t next_cross = 0;
        bool inside = false;
        for (int c = 0; c < n; ++c) {
            Rational mx(2 * c + 1, 2 * static_cast<long>(n));
            while (next_cross < crossings.size() &&
                   sign({crossings[next_cross].a - mx, crossings[next_cross].b}) < 0) {
                inside = !inside;
                ++next_cross;
            }
            if (inside)
                out.raster.set.in[static_cast<std::size_t>(r) * n + c] = 1;
        }
    }
    return out;
}

}  // namespace fracperim
