#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fracperim/geometry.hpp"
#include "fracperim/kernels.hpp"
#include "fracperim/space.hpp"

#include <cmath>
#include <cstdlib>
#include <random>
#include <vector>

using namespace fracperim;

namespace {

// Gauss-Legendre nodes/weights on [-1,1], Newton iteration on P_m.
void gauss_legendre(int m, std::vector<double>& x, std::vector<double>& w) {
    x.assign(m, 0.0);
    w.assign(m, 0.0);
    for (int i = 0; i < (m + 1) / 2; ++i) {
        double t = std::cos(3.14159265358979323846 * (i + 0.75) / (m + 0.5));
        double p0 = 1.0, p1 = 0.0, dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            p0 = 1.0;
            p1 = 0.0;
            for (int j = 0; j < m; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * t * p1 - j * p2) / (j + 1.0);
            }
            dp = m * (t * p0 - p1) / (t * t - 1.0);
            double step = p0 / dp;
            t -= step;
            if (std::abs(step) < 1e-15) break;
        }
        x[i] = -t;
        x[m - 1 - i] = t;
        w[i] = w[m - 1 - i] = 2.0 / ((1.0 - t * t) * dp * dp);
    }
}

// independent oracle: tensor quadrature of the raw integrand; accurate to
// ~1e-12 when the intervals are separated by a decent gap
double quad_interaction(double p, double q, double u, double v, double s) {
    static std::vector<double> gx, gw;
    if (gx.empty()) gauss_legendre(64, gx, gw);
    double m1 = 0.5 * (p + q), h1 = 0.5 * (q - p);
    double m2 = 0.5 * (u + v), h2 = 0.5 * (v - u);
    double acc = 0.0;
    for (std::size_t i = 0; i < gx.size(); ++i) {
        double xi = m1 + h1 * gx[i];
        double inner = 0.0;
        for (std::size_t j = 0; j < gx.size(); ++j) {
            double yj = m2 + h2 * gx[j];
            inner += gw[j] * std::pow(std::abs(yj - xi), -1.0 - s);
        }
        acc += gw[i] * inner;
    }
    return acc * h1 * h2;
}

Interval make_interval(long a, long b, long den) {
    return {Rational(a, den), Rational(b, den)};
}

DiscreteSpace jittered_line(std::mt19937_64& rng, int n) {
    DiscreteSpace sp = build_grid_space(1, n);
    std::uniform_real_distribution<double> uni(-0.2, 0.2);
    for (auto& x : sp.xs) x += uni(rng) * sp.resolution_h;
    for (auto& w : sp.weights) w *= 1.0 + 0.1 * uni(rng);
    return sp;
}

IndicatorSet random_set(std::mt19937_64& rng, std::size_t n) {
    IndicatorSet s = make_empty_set(n);
    for (auto& b : s.in) b = rng() % 2;
    return s;
}

}  // namespace

TEST_CASE("interval interaction: hand value, positivity, scaling") {
    // [0,1/4] x [1/2,1] at s = 1/2: 2 sqrt3 + 2 sqrt2 - 6
    Interval L = make_interval(0, 1, 4), R = make_interval(2, 4, 4);
    double got = interval_interaction_exact(L, R, 0.5);
    double want = 2.0 * std::sqrt(3.0) + 2.0 * std::sqrt(2.0) - 6.0;
    CHECK(got == doctest::Approx(want).epsilon(1e-13));
    CHECK(got > 0.0);

    // argument order is irrelevant
    CHECK(interval_interaction_exact(R, L, 0.5) == got);

    // scaling: Int(lambda L, lambda R) = lambda^(1-s) Int(L, R)
    for (double s : {0.2, 0.5, 0.8}) {
        Interval L4 = make_interval(0, 3, 20), R4 = make_interval(7, 13, 20);
        Interval L5 = {L4.lo * 3, L4.hi * 3};
        Interval R5 = {R4.lo * 3, R4.hi * 3};
        double base = interval_interaction_exact(L4, R4, s);
        double scaled = interval_interaction_exact(L5, R5, s);
        CHECK(scaled == doctest::Approx(std::pow(3.0, 1.0 - s) * base).epsilon(1e-12));
    }
}

TEST_CASE("interval interaction: additivity and touching endpoints") {
    for (double s : {0.15, 0.5, 0.85}) {
        Interval L = make_interval(0, 2, 10);
        Interval R1 = make_interval(5, 7, 10), R2 = make_interval(7, 9, 10);
        Interval R12 = make_interval(5, 9, 10);
        double split = interval_interaction_exact(L, R1, s) + interval_interaction_exact(L, R2, s);
        double whole = interval_interaction_exact(L, R12, s);
        CHECK(whole == doctest::Approx(split).epsilon(1e-12));

        // touching intervals give a finite positive value
        Interval T = make_interval(2, 5, 10);
        double touch = interval_interaction_exact(L, T, s);
        CHECK(touch > 0.0);
        CHECK(std::isfinite(touch));
    }
    CHECK_THROWS_AS(
        interval_interaction_exact(make_interval(0, 5, 10), make_interval(4, 9, 10), 0.5),
        std::domain_error);
    CHECK_THROWS_AS(
        interval_interaction_exact(make_interval(0, 5, 10), make_interval(6, 9, 10), 1.5),
        std::invalid_argument);
}

TEST_CASE("interval interaction matches tensor quadrature to 1e-8") {
    std::mt19937_64 rng(42);
    for (double s : {0.1, 0.5, 0.9}) {
        for (int trial = 0; trial < 100; ++trial) {
            const long den = 1440;
            long p = static_cast<long>(rng() % 400);
            long q = p + 60 + static_cast<long>(rng() % 300);
            long u = q + 240 + static_cast<long>(rng() % 400);
            long v = u + 60 + static_cast<long>(rng() % 300);
            Interval L = make_interval(p, q, den), R = make_interval(u, v, den);
            double exact = interval_interaction_exact(L, R, s);
            double quad = quad_interaction(double(p) / den, double(q) / den, double(u) / den,
                                           double(v) / den, s);
            CHECK(exact == doctest::Approx(quad).epsilon(1e-8));
        }
    }
}

TEST_CASE("bulk evaluator equals the literal pair sum") {
    for (double s : {0.2, 0.5, 0.8}) {
        for (int depth : {1, 2, 4, 6}) {
            FatCantorSet fat = build_fat_cantor({Rational(1, 4), depth});
            auto removed = fat.removed_sorted();
            double literal = cantor_energy_exact(removed, fat.remaining, s);
            double bulk = cantor_energy_bulk(removed, fat.remaining, s);
            CHECK(bulk == doctest::Approx(literal).epsilon(1e-12));
        }
    }
    FatCantorSet fat5 = build_fat_cantor({Rational(1, 5), 5});
    auto removed = fat5.removed_sorted();
    CHECK(cantor_energy_bulk(removed, fat5.remaining, 0.3) ==
          doctest::Approx(cantor_energy_exact(removed, fat5.remaining, 0.3)).epsilon(1e-12));
}

TEST_CASE("level energies partition the total energy") {
    FatCantorSet fat = build_fat_cantor({Rational(1, 4), 7});
    for (double s : {0.3, 0.6}) {
        std::vector<double> levels = cantor_level_energies(fat.removed_by_level, fat.remaining, s);
        REQUIRE(levels.size() == 7);
        double sum = 0.0;
        for (double v : levels) {
            CHECK(v > 0.0);
            sum += v;
        }
        double total = cantor_energy_exact(fat.removed_sorted(), fat.remaining, s);
        CHECK(sum == doctest::Approx(total).epsilon(1e-10));
    }
}

TEST_CASE("bulk evaluator is independent of the worker count") {
    FatCantorSet fat = build_fat_cantor({Rational(1, 5), 8});
    auto removed = fat.removed_sorted();
    setenv("FRACPERIM_THREADS", "1", 1);
    double one = cantor_energy_bulk(removed, fat.remaining, 0.3);
    setenv("FRACPERIM_THREADS", "7", 1);
    double seven = cantor_energy_bulk(removed, fat.remaining, 0.3);
    unsetenv("FRACPERIM_THREADS");
    CHECK(one == seven);
}

TEST_CASE("L_s is symmetric bit-exactly and additive") {
    std::mt19937_64 rng(7);
    DiscreteSpace sp = jittered_line(rng, 40);
    KernelParams params{0.4, KernelMode::MetricMeasure};
    for (int trial = 0; trial < 20; ++trial) {
        IndicatorSet A = random_set(rng, sp.size());
        IndicatorSet B = random_set(rng, sp.size());
        CHECK(interaction_L_s(sp, params, A, B) == interaction_L_s(sp, params, B, A));

        // split A into two disjoint halves
        IndicatorSet A1 = A, A2 = A;
        for (std::size_t i = 0; i < sp.size(); ++i) {
            if (i % 2) A1.in[i] = 0;
            else A2.in[i] = 0;
        }
        double whole = interaction_L_s(sp, params, A, B);
        double parts = interaction_L_s(sp, params, A1, B) + interaction_L_s(sp, params, A2, B);
        CHECK(whole == doctest::Approx(parts).epsilon(1e-12));
    }
}

TEST_CASE("s-perimeter: complement invariance, triviality, form comparability") {
    std::mt19937_64 rng(11);
    DiscreteSpace sp = jittered_line(rng, 60);
    KernelParams params{0.5, KernelMode::MetricMeasure};
    double c_mu = doubling_estimate(sp).c_mu;
    REQUIRE(c_mu >= 1.0);

    for (int trial = 0; trial < 10; ++trial) {
        IndicatorSet E = random_set(rng, sp.size());
        if (E.empty() || E.full()) continue;
        PerimeterResult two = s_perimeter(sp, params, E, PerimeterForm::TwoSided);
        PerimeterResult two_c = s_perimeter(sp, params, E.complement(), PerimeterForm::TwoSided);
        CHECK(two.value == two_c.value);

        PerimeterResult sym = s_perimeter(sp, params, E, PerimeterForm::SymmetricKernel);
        PerimeterResult sym_c =
            s_perimeter(sp, params, E.complement(), PerimeterForm::SymmetricKernel);
        CHECK(sym.value == sym_c.value);

        // forms agree up to the doubling constant
        double ratio = two.value / sym.value;
        CHECK(ratio >= 1.0 / c_mu - 1e-12);
        CHECK(ratio <= c_mu + 1e-12);
    }
    CHECK(s_perimeter(sp, params, make_empty_set(sp.size())).value == 0.0);
    CHECK(s_perimeter(sp, params, make_full_set(sp.size())).value == 0.0);
}

TEST_CASE("perimeter grows with s and blows up toward s = 1") {
    DiscreteSpace sp = build_grid_space(1, 128);
    IndicatorSet E = make_empty_set(sp.size());
    for (std::size_t i = 0; i < sp.size() / 2; ++i) E.in[i] = 1;
    KernelParams params{0.1, KernelMode::Interval1D};
    double prev = 0.0;
    for (double s : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        params.s = s;
        double value = s_perimeter(sp, params, E).value;
        CHECK(value > prev);
        prev = value;
    }
    // at fixed resolution the sum saturates near log(1/h); divergence as
    // s -> 1 shows up through refinement
    params.s = 0.999;
    double coarse = s_perimeter(sp, params, E).value;
    DiscreteSpace fine = build_grid_space(1, 1024);
    IndicatorSet Ef = make_empty_set(fine.size());
    for (std::size_t i = 0; i < fine.size() / 2; ++i) Ef.in[i] = 1;
    double refined = s_perimeter(fine, params, Ef).value;
    CHECK(refined > 1.4 * coarse);
}

TEST_CASE("domain guards") {
    DiscreteSpace sp = build_grid_space(1, 8);
    KernelParams params{0.5, KernelMode::MetricMeasure};
    CHECK_THROWS_AS(kernel_K_s(sp, params, 3, 3), std::domain_error);
    CHECK_THROWS_AS(validate_params(KernelParams{0.0, KernelMode::MetricMeasure}),
                    std::invalid_argument);
    CHECK_THROWS_AS(validate_params(KernelParams{1.0, KernelMode::MetricMeasure}),
                    std::invalid_argument);

    IndicatorSet E = make_empty_set(sp.size());
    E.in[2] = 1;
    CHECK_THROWS_AS(functional_J(sp, params, E, make_empty_set(sp.size())),
                    std::invalid_argument);
    CHECK_THROWS_AS(functional_J(sp, params, E, make_full_set(sp.size())),
                    std::invalid_argument);

    DiscreteSpace grid2 = build_grid_space(2, 4);
    KernelParams bad{0.5, KernelMode::Interval1D};
    CHECK_THROWS_AS(kernel_K_s(grid2, bad, 0, 1), std::invalid_argument);
}

TEST_CASE("kernel pointwise values match the pair-loop definition") {
    std::mt19937_64 rng(23);
    DiscreteSpace sp = jittered_line(rng, 24);
    KernelParams params{0.35, KernelMode::MetricMeasure};
    // K_s = 2 / (d^s (mu_i + mu_j)) against independent ball_measure calls
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t i = rng() % sp.size(), j = rng() % sp.size();
        if (i == j) continue;
        double d = sp.dist(i, j);
        double want = 2.0 / (std::pow(d, params.s) *
                             (ball_measure(sp, i, d) + ball_measure(sp, j, d)));
        CHECK(kernel_K_s(sp, params, i, j) == doctest::Approx(want).epsilon(1e-14));
    }
}
