#include "fracperim/kernels.hpp"

#include "fracperim/summation.hpp"

#include <cmath>
#include <stdexcept>

namespace fracperim {

void validate_params(const KernelParams& params) {
    if (!(params.s > 0.0 && params.s < 1.0))
        throw std::invalid_argument("kernel: s must lie in (0,1)");
}

double kernel_K_s(const DiscreteSpace& space, const KernelParams& params, std::size_t i,
                  std::size_t j) {
    validate_params(params);
    if (i == j) throw std::domain_error("kernel_K_s: diagonal pair");
    double d = space.dist(i, j);
    if (!(d > 0.0)) throw std::domain_error("kernel_K_s: coincident points");
    if (params.mode == KernelMode::Interval1D) {
        if (space.dim != 1 || space.has_table())
            throw std::invalid_argument("interval-1d kernel requires a 1-D coordinate space");
        return std::pow(d, -1.0 - params.s);
    }
    double mi = ball_measure(space, i, d);
    double mj = ball_measure(space, j, d);
    return 2.0 / (std::pow(d, params.s) * (mi + mj));
}

namespace {

// Kernel evaluator with O(log n) ball masses; used by every pair loop.
class KernelEval {
  public:
    KernelEval(const DiscreteSpace& space, const KernelParams& params)
        : space_(space), params_(params), oracle_(space) {
        validate_params(params);
    }
    double operator()(std::size_t i, std::size_t j) const {
        double d = space_.dist(i, j);
        if (!(d > 0.0)) throw std::domain_error("kernel: coincident points");
        if (params_.mode == KernelMode::Interval1D) return std::pow(d, -1.0 - params_.s);
        return 2.0 / (std::pow(d, params_.s) * (oracle_.mass(i, d) + oracle_.mass(j, d)));
    }

  private:
    const DiscreteSpace& space_;
    KernelParams params_;
    BallOracle oracle_;
};

void check_set_sizes(const DiscreteSpace& space, const IndicatorSet& S, const char* what) {
    if (S.size() != space.size())
        throw std::invalid_argument(std::string(what) + ": indicator size mismatch");
}

}  // namespace

double interaction_L_s(const DiscreteSpace& space, const KernelParams& params,
                       const IndicatorSet& A, const IndicatorSet& B) {
    check_set_sizes(space, A, "interaction_L_s");
    check_set_sizes(space, B, "interaction_L_s");
    if (params.mode == KernelMode::Interval1D && (space.dim != 1 || space.has_table()))
        throw std::invalid_argument("interval-1d kernel requires a 1-D coordinate space");
    KernelEval kernel(space, params);
    std::size_t n = space.size();
    CompensatedSum acc;
    // Canonical ascending pair order with membership multiplicity keeps
    // L_s(A,B) == L_s(B,A) bit-exact.
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
            int mult = (A.contains(p) && B.contains(q)) + (A.contains(q) && B.contains(p));
            if (mult == 0) continue;
            acc.add(mult * kernel(p, q) * space.weights[p] * space.weights[q]);
        }
    }
    return acc.value();
}

PerimeterResult s_perimeter(const DiscreteSpace& space, const KernelParams& params,
                            const IndicatorSet& E, PerimeterForm form) {
    check_set_sizes(space, E, "s_perimeter");
    validate_params(params);
    PerimeterResult out;
    out.self_interaction_scale = std::pow(space.resolution_h, 1.0 - params.s);
    if (E.empty() || E.full()) return out;

    if (form == PerimeterForm::SymmetricKernel) {
        IndicatorSet comp = E.complement();
        out.value = 2.0 * interaction_L_s(space, params, E, comp);
        std::size_t in = E.count();
        out.pair_count = static_cast<std::uint64_t>(in) * (space.size() - in);
        return out;
    }

    BallOracle oracle(space);
    std::size_t n = space.size();
    CompensatedSum acc;
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
            if (E.contains(p) == E.contains(q)) continue;
            double d = space.dist(p, q);
            double ww = space.weights[p] * space.weights[q];
            double ds = params.mode == KernelMode::Interval1D ? std::pow(d, 1.0 + params.s)
                                                              : std::pow(d, params.s);
            if (params.mode == KernelMode::Interval1D) {
                acc.add(2.0 * ww / ds);
            } else {
                acc.add(ww / (ds * oracle.mass(p, d)));
                acc.add(ww / (ds * oracle.mass(q, d)));
            }
            ++out.pair_count;
        }
    }
    out.value = acc.value();
    return out;
}

double functional_J(const DiscreteSpace& space, const KernelParams& params,
                    const IndicatorSet& E, const IndicatorSet& omega) {
    check_set_sizes(space, E, "functional_J");
    check_set_sizes(space, omega, "functional_J");
    if (omega.empty()) throw std::invalid_argument("functional_J: Omega is empty");
    if (omega.full())
        throw std::invalid_argument("functional_J: Omega must leave exterior data");
    std::size_t n = space.size();
    IndicatorSet e_in = make_empty_set(n), e_out = make_empty_set(n);
    IndicatorSet not_e = make_empty_set(n), omega_not_e = make_empty_set(n);
    for (std::size_t i = 0; i < n; ++i) {
        bool in_e = E.contains(i), in_o = omega.contains(i);
        e_in.in[i] = in_e && in_o;
        e_out.in[i] = in_e && !in_o;
        not_e.in[i] = !in_e;
        omega_not_e.in[i] = in_o && !in_e;
    }
    return interaction_L_s(space, params, e_in, not_e) +
           interaction_L_s(space, params, e_out, omega_not_e);
}

double interval_interaction_exact(const Interval& I1, const Interval& I2, double s) {
    if (!(s > 0.0 && s < 1.0)) throw std::invalid_argument("interval interaction: s in (0,1)");
    if (I1.lo > I1.hi || I2.lo > I2.hi)
        throw std::invalid_argument("interval interaction: lo > hi");
    const Interval& L = I1.lo <= I2.lo ? I1 : I2;
    const Interval& R = I1.lo <= I2.lo ? I2 : I1;
    if (L.hi > R.lo) throw std::domain_error("interval interaction: interiors overlap");
    double e = 1.0 - s;
    auto F = [&](const Rational& t) { return std::pow(to_double(t), e); };
    // int_L int_R |x-y|^(-1-s) = [F(v-q) + F(u-p) - F(u-q) - F(v-p)] / (s(1-s))
    // for L = [p,q], R = [u,v]; exact corner distances, one rounding each.
    double val = (F(R.hi - L.hi) + F(R.lo - L.lo)) - (F(R.lo - L.hi) + F(R.hi - L.lo));
    return val / (s * e);
}

double cantor_energy_exact(const std::vector<Interval>& removed,
                           const std::vector<Interval>& remaining, double s) {
    CompensatedSum acc;
    for (const Interval& gap : removed)
        for (const Interval& piece : remaining)
            acc.add(interval_interaction_exact(gap, piece, s));
    return 2.0 * acc.value();
}

}  // namespace fracperim
