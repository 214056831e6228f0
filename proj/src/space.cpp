#include "fracperim/space.hpp"

#include "fracperim/summation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace fracperim {

namespace {
constexpr std::size_t kDenseCutoff = 4096;

std::runtime_error bad(const std::string& msg) { return std::runtime_error("space: " + msg); }
}  // namespace

double DiscreteSpace::dist(std::size_t i, std::size_t j) const {
    if (has_table()) return table[i * size() + j];
    double dx = xs[i] - xs[j];
    if (dim == 1) return std::abs(dx);
    double dy = ys[i] - ys[j];
    return std::sqrt(dx * dx + dy * dy);
}

double DiscreteSpace::total_mass() const { return compensated_total(weights); }

double DiscreteSpace::diameter() const {
    std::size_t n = size();
    if (n <= 1) return 0.0;
    if (has_table() || n <= 8192) {
        double best = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) best = std::max(best, dist(i, j));
        return best;
    }
    if (dim == 1) {
        auto [lo, hi] = std::minmax_element(xs.begin(), xs.end());
        return *hi - *lo;
    }
    // Extreme-direction candidates; exact for axis-aligned rasters.
    std::vector<std::size_t> cand;
    auto push_extreme = [&](auto key) {
        std::size_t lo = 0, hi = 0;
        for (std::size_t i = 1; i < n; ++i) {
            if (key(i) < key(lo)) lo = i;
            if (key(i) > key(hi)) hi = i;
        }
        cand.push_back(lo);
        cand.push_back(hi);
    };
    push_extreme([&](std::size_t i) { return xs[i]; });
    push_extreme([&](std::size_t i) { return ys[i]; });
    push_extreme([&](std::size_t i) { return xs[i] + ys[i]; });
    push_extreme([&](std::size_t i) { return xs[i] - ys[i]; });
    double best = 0.0;
    for (std::size_t a : cand)
        for (std::size_t b : cand) best = std::max(best, dist(a, b));
    return best;
}

void DiscreteSpace::validate() const {
    std::size_t n = size();
    if (n == 0) throw bad("empty point set");
    if (!(resolution_h > 0.0)) throw bad("resolution_h must be positive");
    if (has_table()) {
        if (table.size() != n * n) throw bad("metric table size mismatch");
    } else {
        if (dim != 1 && dim != 2) throw bad("dim must be 1 or 2");
        if (xs.size() != n) throw bad("points/weights size mismatch");
        if (dim == 2 && ys.size() != n) throw bad("points/weights size mismatch");
    }
    for (double w : weights)
        if (!(w > 0.0)) throw bad("weights must be positive");

    double min_sep = resolution_h / 2.0;
    if (has_table()) {
        for (std::size_t i = 0; i < n; ++i) {
            if (table[i * n + i] != 0.0) throw bad("metric table diagonal must be zero");
            for (std::size_t j = i + 1; j < n; ++j) {
                double d = table[i * n + j];
                if (!(d >= min_sep)) throw bad("points closer than resolution_h/2");
                if (d != table[j * n + i]) throw bad("metric table not symmetric");
            }
        }
        // Triangle inequality: all triples when small, deterministic sample above.
        auto check = [&](std::size_t a, std::size_t b, std::size_t c) {
            if (table[a * n + c] > table[a * n + b] + table[b * n + c] + 1e-12)
                throw bad("metric table violates the triangle inequality");
        };
        if (n <= 128) {
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    for (std::size_t c = 0; c < n; ++c) check(a, b, c);
        } else {
            std::uint64_t state = 0x9e3779b97f4a7c15ull;
            auto next = [&]() {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                return static_cast<std::size_t>(state % n);
            };
            for (int k = 0; k < 200000; ++k) check(next(), next(), next());
        }
        return;
    }

    if (dim == 1) {
        std::vector<double> sorted = xs;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 1; i < n; ++i)
            if (!(sorted[i] - sorted[i - 1] >= min_sep))
                throw bad("points closer than resolution_h/2");
        return;
    }
    if (n <= kDenseCutoff) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (!(dist(i, j) >= min_sep)) throw bad("points closer than resolution_h/2");
        return;
    }
    // Large 2-D sets: lexicographic neighbours catch duplicates and row-wise
    // crowding; full pairwise checking is quadratic and intentionally skipped.
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        if (ys[a] != ys[b]) return ys[a] < ys[b];
        return xs[a] < xs[b];
    });
    for (std::size_t k = 1; k < n; ++k)
        if (ys[idx[k]] == ys[idx[k - 1]] && !(dist(idx[k], idx[k - 1]) >= min_sep))
            throw bad("points closer than resolution_h/2");
}

std::size_t IndicatorSet::count() const {
    std::size_t c = 0;
    for (auto b : in) c += (b != 0);
    return c;
}

IndicatorSet IndicatorSet::complement() const {
    IndicatorSet out;
    out.in.resize(in.size());
    for (std::size_t i = 0; i < in.size(); ++i) out.in[i] = in[i] ? 0 : 1;
    return out;
}

bool IndicatorSet::empty() const { return count() == 0; }
bool IndicatorSet::full() const { return count() == in.size(); }

IndicatorSet make_empty_set(std::size_t n) {
    IndicatorSet s;
    s.in.assign(n, 0);
    return s;
}

IndicatorSet make_full_set(std::size_t n) {
    IndicatorSet s;
    s.in.assign(n, 1);
    return s;
}

double ball_measure(const DiscreteSpace& space, std::size_t center, double r) {
    if (!(r > 0.0)) throw std::invalid_argument("ball_measure: radius must be positive");
    CompensatedSum acc;
    for (std::size_t j = 0; j < space.size(); ++j)
        if (space.dist(center, j) < r) acc.add(space.weights[j]);
    return acc.value();
}

BallOracle::BallOracle(const DiscreteSpace& space) : space_(&space) {
    if (space.has_table()) return;  // scan per query
    std::size_t n = space.size();
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), 0);
    if (space.dim == 1) {
        std::sort(order_.begin(), order_.end(),
                  [&](std::size_t a, std::size_t b) { return space.xs[a] < space.xs[b]; });
        rows_.push_back({0.0, 0, n});
    } else {
        std::sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
            if (space.ys[a] != space.ys[b]) return space.ys[a] < space.ys[b];
            return space.xs[a] < space.xs[b];
        });
        std::size_t start = 0;
        for (std::size_t k = 1; k <= n; ++k) {
            if (k == n || space.ys[order_[k]] != space.ys[order_[start]]) {
                rows_.push_back({space.ys[order_[start]], start, k});
                start = k;
            }
        }
    }
    sorted_x_.resize(n);
    prefix_.resize(n + 1, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        sorted_x_[k] = space.xs[order_[k]];
        prefix_[k + 1] = prefix_[k] + space.weights[order_[k]];
    }
}

double BallOracle::mass(std::size_t center, double r) const {
    if (space_->has_table()) return ball_measure(*space_, center, r);
    return mass_at(space_->xs[center], space_->dim == 2 ? space_->ys[center] : 0.0, r);
}

double BallOracle::mass_at(double x, double y, double r) const {
    if (space_->has_table())
        throw std::logic_error("mass_at requires a coordinate space");
    if (!(r > 0.0)) throw std::invalid_argument("ball radius must be positive");
    const auto& sx = sorted_x_;
    if (space_->dim == 1) {
        auto b = std::upper_bound(sx.begin(), sx.end(), x - r) - sx.begin();
        auto e = std::lower_bound(sx.begin(), sx.end(), x + r) - sx.begin();
        if (e <= b) return 0.0;
        return prefix_[e] - prefix_[b];
    }
    double total = 0.0;
    // Rows are sorted by y; restrict to |dy| < r.
    auto row_lo = std::lower_bound(rows_.begin(), rows_.end(), y - r,
                                   [](const Row& row, double v) { return row.y <= v; });
    for (auto it = row_lo; it != rows_.end() && it->y < y + r; ++it) {
        double dy = it->y - y;
        double rem = r * r - dy * dy;
        if (rem <= 0.0) continue;
        double w = std::sqrt(rem);
        auto rb = sx.begin() + it->begin, re = sx.begin() + it->end;
        std::size_t b = std::upper_bound(rb, re, x - w) - sx.begin();
        std::size_t e = std::lower_bound(rb, re, x + w) - sx.begin();
        // The half-width is rounded; re-test one candidate on each side with
        // the same predicate dist < r that the plain scan uses.
        auto inside = [&](std::size_t k) {
            double dx = sx[k] - x;
            return std::sqrt(dx * dx + dy * dy) < r;
        };
        if (b > it->begin && inside(b - 1)) --b;
        else if (b < e && !inside(b)) ++b;
        if (e < it->end && inside(e)) ++e;
        else if (e > b && !inside(e - 1)) --e;
        if (e > b) total += prefix_[e] - prefix_[b];
    }
    return total;
}

DoublingEstimate doubling_estimate(const DiscreteSpace& space) {
    BallOracle oracle(space);
    std::size_t n = space.size();
    double diam = space.diameter();
    double h = space.resolution_h;
    DoublingEstimate est;
    std::size_t stride = n <= 2048 ? 1 : (n + 2047) / 2048;
    for (double r = 4.0 * h; 2.0 * r <= std::max(diam / 2.0, 8.0 * h); r *= 2.0) {
        for (std::size_t c = 0; c < n; c += stride) {
            double m1 = oracle.mass(c, r);
            double m2 = oracle.mass(c, 2.0 * r);
            double ratio = m2 / m1;  // m1 >= own weight > 0
            if (ratio > est.c_mu) {
                est.c_mu = ratio;
                est.worst_radius = r;
                est.worst_center = c;
            }
        }
    }
    return est;
}

BallCover bounded_overlap_cover(const DiscreteSpace& space, double eps) {
    if (!(eps >= 2.0 * space.resolution_h))
        throw std::invalid_argument("bounded_overlap_cover: eps must be >= 2h");
    std::size_t n = space.size();
    BallCover cover;
    cover.eps = eps;
    std::vector<double> mind(n, std::numeric_limits<double>::infinity());
    std::size_t next = 0;
    while (true) {
        cover.centers.push_back(next);
        for (std::size_t i = 0; i < n; ++i)
            mind[i] = std::min(mind[i], space.dist(next, i));
        std::size_t far = 0;
        for (std::size_t i = 1; i < n; ++i)
            if (mind[i] > mind[far]) far = i;
        if (!(mind[far] >= eps)) break;
        next = far;
    }
    int worst = 0;
    for (std::size_t i = 0; i < n; ++i) {
        int c = 0;
        for (std::size_t ci : cover.centers)
            if (space.dist(ci, i) < 2.0 * eps) ++c;
        worst = std::max(worst, c);
    }
    cover.max_overlap_2eps = worst;
    return cover;
}

PartitionOfUnity partition_of_unity(const DiscreteSpace& space, const BallCover& cover) {
    std::size_t n = space.size();
    PartitionOfUnity pou;
    pou.at_point.resize(n);
    for (std::size_t p = 0; p < n; ++p) {
        double psi_sum = 0.0;
        auto& entries = pou.at_point[p];
        for (std::size_t k = 0; k < cover.centers.size(); ++k) {
            double d = space.dist(cover.centers[k], p);
            double psi = 1.0 - std::max(0.0, d - cover.eps) / cover.eps;
            if (psi > 0.0) {
                entries.push_back({static_cast<std::uint32_t>(k), psi});
                psi_sum += psi;
            }
        }
        if (entries.empty())
            throw std::logic_error("partition_of_unity: uncovered point (cover not maximal?)");
        for (auto& e : entries) e.phi /= psi_sum;
    }
    return pou;
}

std::vector<double> discrete_convolution(const DiscreteSpace& space, const BallCover& cover,
                                         const PartitionOfUnity& pou,
                                         const std::vector<double>& f) {
    if (f.size() != space.size())
        throw std::invalid_argument("discrete_convolution: function size mismatch");
    std::vector<double> means(cover.centers.size(), 0.0);
    for (std::size_t k = 0; k < cover.centers.size(); ++k) {
        CompensatedSum num, den;
        for (std::size_t j = 0; j < space.size(); ++j) {
            if (space.dist(cover.centers[k], j) < cover.eps) {
                num.add(space.weights[j] * f[j]);
                den.add(space.weights[j]);
            }
        }
        means[k] = num.value() / den.value();  // center itself is inside
    }
    std::vector<double> out(space.size(), 0.0);
    for (std::size_t p = 0; p < space.size(); ++p) {
        CompensatedSum acc;
        for (const auto& e : pou.at_point[p]) acc.add(e.phi * means[e.center_index]);
        out[p] = acc.value();
    }
    return out;
}

}  // namespace fracperim
