#pragma once

#include "fracperim/rational.hpp"
#include "fracperim/space.hpp"

#include <cstdint>
#include <vector>

namespace fracperim {

enum class KernelMode {
    MetricMeasure,  // K_s(x,y) = 2 / (d^s * (mu(B(x,d)) + mu(B(y,d)))), d = d(x,y)
    Interval1D,     // pure power |x-y|^(-1-s); 1-D spaces only
};

struct KernelParams {
    double s = 0.5;  // must lie in (0,1)
    KernelMode mode = KernelMode::MetricMeasure;
};

void validate_params(const KernelParams& params);

// Pointwise kernel; throws std::domain_error when i == j or d(i,j) == 0.
double kernel_K_s(const DiscreteSpace& space, const KernelParams& params, std::size_t i,
                  std::size_t j);

// L_s(A, B) = sum_{i in A} sum_{j in B, j != i} K_s(i,j) w_i w_j.
// Summed over canonical ascending index pairs with pair multiplicity, so
// L_s(A,B) == L_s(B,A) bit-exactly. Diagonal pairs are excluded: a point's
// self-interaction cell is below resolution and is reported separately by
// s_perimeter rather than summed.
double interaction_L_s(const DiscreteSpace& space, const KernelParams& params,
                       const IndicatorSet& A, const IndicatorSet& B);

enum class PerimeterForm {
    TwoSided,         // sum |chi(i)-chi(j)| w_i w_j / (d^s mu(B(i,d))) over ordered pairs
    SymmetricKernel,  // 2 * L_s(E, X \ E)
};

struct PerimeterResult {
    double value = 0.0;
    std::uint64_t pair_count = 0;     // unordered contributing pairs
    double self_interaction_scale = 0.0;  // h^(1-s), the omitted sub-resolution cell scale
};

// Discrete s-perimeter of E in X. Zero iff E is empty or full; invariant
// under complementation by construction of |chi_E(i) - chi_E(j)|.
PerimeterResult s_perimeter(const DiscreteSpace& space, const KernelParams& params,
                            const IndicatorSet& E, PerimeterForm form = PerimeterForm::TwoSided);

// J_Omega^s(E) = L_s(E & Omega, X \ E) + L_s(E \ Omega, Omega \ E).
// The exterior-exterior interaction is intentionally absent, so J is finite
// exactly when the data prescribes it. Throws when Omega is empty or all of X.
double functional_J(const DiscreteSpace& space, const KernelParams& params,
                    const IndicatorSet& E, const IndicatorSet& omega);

// Closed interval with exact rational endpoints, lo <= hi.
struct Interval {
    Rational lo, hi;
    Rational length() const { return hi - lo; }
};

// Exact-endpoint interaction of two intervals with disjoint interiors:
//   int_{I1} int_{I2} |x-y|^(-1-s) dy dx
// evaluated by the corner antiderivative F(t) = t^(1-s) / (s(1-s)) with
// alternating signs over the four corner distances. Touching endpoints are
// fine; overlapping interiors throw std::domain_error.
double interval_interaction_exact(const Interval& I1, const Interval& I2, double s);

// Besov energy of an interval family: 2 * sum over (removed x remaining)
// pairs of interval_interaction_exact, accumulated in deterministic order
// (removed ascending, remaining ascending, compensated).
double cantor_energy_exact(const std::vector<Interval>& removed,
                           const std::vector<Interval>& remaining, double s);

// Same value as cantor_energy_exact, evaluated by the algebraic regrouping
//   sum_I Int(I, [lo,hi] \ I) - sum_{I != I'} Int(I, I')
// over a common exact denominator, which halves the pair count and lets the
// corner formula vectorize. Requires the family to tile [lo, hi] exactly.
// Per-removed-interval partial sums are formed in fixed index order and
// combined compensated, so the result is independent of worker count.
double cantor_energy_bulk(const std::vector<Interval>& removed,
                          const std::vector<Interval>& remaining, double s);

// Contribution of each removal level to the total energy, exact intervals.
// levels[j] holds the removed intervals of level j+1. Used by the fractional
// codimension ratio test: successive contributions decay/grow geometrically.
std::vector<double> cantor_level_energies(const std::vector<std::vector<Interval>>& levels,
                                          const std::vector<Interval>& remaining, double s);

}  // namespace fracperim
