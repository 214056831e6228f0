// Bulk evaluation of interval-family Besov energies. The corner antiderivative
// F(t) = t^(1-s) is evaluated on exact integer corner distances over a common
// denominator, so deep-level gaps keep full relative precision even where
// endpoint doubles would cancel. This translation unit is built with
// fast-math + simd pragmas (see CMakeLists): every sum here is either a
// per-interval partial (combined compensated, in index order, by the caller
// code below) or a positive-term reduction, so the relaxed FP semantics only
// reshuffle ~1 ulp noise.

#include "fracperim/kernels.hpp"
#include "fracperim/summation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <thread>
#include <vector>

namespace fracperim {

namespace {

struct PreparedFamily {
    std::vector<std::int64_t> lo, hi;  // removed-interval numerators, ascending
    std::int64_t hull_lo = 0, hull_hi = 0;
    double den = 1.0;
    bool ok = false;
};

// Common-denominator integerization. Also verifies that removed + remaining
// tile the hull exactly, which the complement regrouping below relies on.
PreparedFamily prepare(const std::vector<Interval>& removed,
                       const std::vector<Interval>& remaining) {
    PreparedFamily fam;
    if (removed.empty() || remaining.empty()) return fam;

    std::vector<const Interval*> all;
    all.reserve(removed.size() + remaining.size());
    for (const auto& I : removed) all.push_back(&I);
    for (const auto& I : remaining) all.push_back(&I);
    std::sort(all.begin(), all.end(),
              [](const Interval* a, const Interval* b) { return a->lo < b->lo; });
    for (std::size_t k = 1; k < all.size(); ++k)
        if (all[k]->lo != all[k - 1]->hi)
            throw std::invalid_argument("interval family must tile its hull exactly");

    BigInt den = 1;
    auto fold = [&](const Rational& r) { den = lcm(den, BigInt(denominator(r))); };
    for (const auto* I : all) {
        fold(I->lo);
        fold(I->hi);
    }
    if (msb(den) >= 62) return fam;  // numerators would overflow; caller falls back

    auto scaled = [&](const Rational& r) -> std::pair<bool, std::int64_t> {
        BigInt n = BigInt(numerator(r)) * (den / BigInt(denominator(r)));
        if (n < 0 || msb(n == 0 ? BigInt(1) : n) >= 62) return {false, 0};
        return {true, n.convert_to<std::int64_t>()};
    };

    std::vector<Interval> sorted_removed = removed;
    std::sort(sorted_removed.begin(), sorted_removed.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    fam.lo.reserve(sorted_removed.size());
    fam.hi.reserve(sorted_removed.size());
    for (const auto& I : sorted_removed) {
        auto [ok_lo, nlo] = scaled(I.lo);
        auto [ok_hi, nhi] = scaled(I.hi);
        if (!ok_lo || !ok_hi) return fam;
        fam.lo.push_back(nlo);
        fam.hi.push_back(nhi);
    }
    auto [ok_l, hl] = scaled(all.front()->lo);
    auto [ok_r, hr] = scaled(all.back()->hi);
    if (!ok_l || !ok_r) return fam;
    fam.hull_lo = hl;
    fam.hull_hi = hr;
    fam.den = den.convert_to<double>();
    fam.ok = true;
    return fam;
}

// Scaled interaction of removed interval i with everything to its right among
// the removed family: sum over j > i of the four-corner combination.
double pair_sum_right(const PreparedFamily& fam, std::size_t i, double e) {
    const std::int64_t p = fam.lo[i], q = fam.hi[i];
    const std::int64_t* lo = fam.lo.data();
    const std::int64_t* hi = fam.hi.data();
    const std::size_t n = fam.lo.size();
    double acc = 0.0;
#pragma omp simd reduction(+ : acc)
    for (std::size_t j = i + 1; j < n; ++j) {
        double vp = static_cast<double>(hi[j] - p);
        double vq = static_cast<double>(hi[j] - q);
        double up = static_cast<double>(lo[j] - p);
        double uq = static_cast<double>(lo[j] - q);
        acc += (std::pow(vq, e) + std::pow(up, e)) - (std::pow(vp, e) + std::pow(uq, e));
    }
    return acc;
}

// Scaled interaction with every other removed interval (both sides).
double pair_sum_all(const PreparedFamily& fam, std::size_t i, double e) {
    const std::int64_t p = fam.lo[i], q = fam.hi[i];
    const std::int64_t* lo = fam.lo.data();
    const std::int64_t* hi = fam.hi.data();
    double acc = pair_sum_right(fam, i, e);
#pragma omp simd reduction(+ : acc)
    for (std::size_t j = 0; j < i; ++j) {
        // interval j lies left of i: corners mirror
        double pv = static_cast<double>(q - lo[j]);
        double qu = static_cast<double>(p - hi[j]);
        double pu = static_cast<double>(q - hi[j]);
        double qv = static_cast<double>(p - lo[j]);
        acc += (std::pow(pu, e) + std::pow(qv, e)) - (std::pow(pv, e) + std::pow(qu, e));
    }
    return acc;
}

// Scaled interaction of removed interval i with the two hull pieces that
// flank the family: [hull_lo, lo_i] and [hi_i, hull_hi].
double hull_sum(const PreparedFamily& fam, std::size_t i, double e) {
    auto F = [&](std::int64_t n) { return std::pow(static_cast<double>(n), e); };
    const std::int64_t p = fam.lo[i], q = fam.hi[i];
    double left = F(q - p) + F(p - fam.hull_lo) - F(q - fam.hull_lo);  // + F(0)
    double right = F(q - p) + F(fam.hull_hi - q) - F(fam.hull_hi - p);
    return left + right;
}

void run_blocked(std::size_t n, const std::function<void(std::size_t)>& work) {
    int workers = worker_count();
    if (workers <= 1 || n < 128) {
        for (std::size_t i = 0; i < n; ++i) work(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    constexpr std::size_t chunk = 64;
    auto body = [&]() {
        while (true) {
            std::size_t begin = next.fetch_add(chunk);
            if (begin >= n) return;
            std::size_t end = std::min(begin + chunk, n);
            for (std::size_t i = begin; i < end; ++i) work(i);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < workers; ++t) pool.emplace_back(body);
    body();
    for (auto& th : pool) th.join();
}

}  // namespace

double cantor_energy_bulk(const std::vector<Interval>& removed,
                          const std::vector<Interval>& remaining, double s) {
    if (!(s > 0.0 && s < 1.0)) throw std::invalid_argument("cantor energy: s in (0,1)");
    PreparedFamily fam = prepare(removed, remaining);
    if (!fam.ok) return cantor_energy_exact(removed, remaining, s);
    const double e = 1.0 - s;
    std::size_t n = fam.lo.size();
    // Int(I, remaining-union) = Int(I, hull \ I) - sum_{I' != I} Int(I, I');
    // summing over I and folding the ordered pair sum into i < j halves work.
    std::vector<double> partials(n, 0.0);
    run_blocked(n, [&](std::size_t i) {
        partials[i] = hull_sum(fam, i, e) - 2.0 * pair_sum_right(fam, i, e);
    });
    CompensatedSum total;
    for (double p : partials) total.add(p);
    double scale = std::pow(fam.den, -e) / (s * e);
    return 2.0 * total.value() * scale;
}

std::vector<double> cantor_level_energies(const std::vector<std::vector<Interval>>& levels,
                                          const std::vector<Interval>& remaining, double s) {
    if (!(s > 0.0 && s < 1.0)) throw std::invalid_argument("level energies: s in (0,1)");
    std::vector<Interval> removed;
    std::vector<std::size_t> level_of;  // parallel to removed
    for (std::size_t l = 0; l < levels.size(); ++l)
        for (const auto& I : levels[l]) {
            removed.push_back(I);
            level_of.push_back(l);
        }
    std::vector<double> out(levels.size(), 0.0);
    if (removed.empty()) return out;

    PreparedFamily fam = prepare(removed, remaining);
    const double e = 1.0 - s;
    if (!fam.ok) {
        for (std::size_t l = 0; l < levels.size(); ++l) {
            CompensatedSum acc;
            for (const auto& gap : levels[l])
                for (const auto& piece : remaining)
                    acc.add(interval_interaction_exact(gap, piece, s));
            out[l] = 2.0 * acc.value();
        }
        return out;
    }

    // prepare() sorted the family by left endpoint; recover each interval's
    // level through its position in that order.
    std::vector<std::size_t> order(removed.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return removed[a].lo < removed[b].lo;
    });
    std::vector<std::size_t> level_sorted(order.size());
    for (std::size_t k = 0; k < order.size(); ++k) level_sorted[k] = level_of[order[k]];

    std::size_t n = fam.lo.size();
    std::vector<double> partials(n, 0.0);
    run_blocked(n, [&](std::size_t i) {
        partials[i] = hull_sum(fam, i, e) - pair_sum_all(fam, i, e);
    });
    double scale = std::pow(fam.den, -e) / (s * e);
    std::vector<CompensatedSum> acc(levels.size());
    for (std::size_t i = 0; i < n; ++i) acc[level_sorted[i]].add(partials[i]);
    for (std::size_t l = 0; l < levels.size(); ++l) out[l] = 2.0 * acc[l].value() * scale;
    return out;
}

}  // namespace fracperim
