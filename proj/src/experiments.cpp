#include "fracperim/experiments.hpp"

#include "fracperim/io.hpp"
#include "fracperim/summation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <vector>

namespace fracperim::experiments {

namespace {

using nlohmann::json;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Canonical uniform double in [0,1); engine output used directly so results
// do not depend on the standard library's distribution implementation.
double u01(std::mt19937_64& rng) { return (rng() >> 11) * 0x1.0p-53; }

json bracket_json(double lower, double upper) {
    return json{{"lower", lower}, {"upper", upper}, {"width", upper - lower}};
}

json codim_estimate_json(const CodimEstimate& est) {
    json j;
    j["bracket"] = bracket_json(est.lower, est.upper);
    j["conclusive"] = est.conclusive;
    j["t_grid"] = est.t_grid;
    j["scales"] = est.scales;
    j["slopes"] = est.slopes;
    if (!est.note.empty()) j["note"] = est.note;
    return j;
}

json fractional_json(const FractionalCodim& fc) {
    json j;
    j["bracket"] = bracket_json(fc.lower, fc.upper);
    j["conclusive"] = fc.conclusive;
    j["s_grid"] = fc.s_grid;
    j["rates"] = fc.rates;
    j["verdicts"] = fc.verdict;
    if (!fc.note.empty()) j["note"] = fc.note;
    return j;
}

std::vector<double> anchored_grid(double center, double step, int half_count, double lo,
                                  double hi) {
    std::vector<double> grid;
    for (int k = -half_count; k <= half_count; ++k) {
        double t = center + step * k;
        if (t > lo && t < hi) grid.push_back(t);
    }
    return grid;
}

constexpr double kKochCodim = 2.0 - 1.2618595071429146;  // 2 - log 4 / log 3

}  // namespace

json cantor_energy_convergence(bool deep) {
    const Rational a(1, 5);
    const int j_min = 6, j_max = deep ? 16 : 10;
    const std::vector<double> s_values = {0.2, 0.3};

    json out;
    out["experiment"] = "cantor-energy";
    out["version"] = kLibraryVersion;
    out["config"] = {{"a", "1/5"},
                     {"depth_min", j_min},
                     {"depth_max", j_max},
                     {"s_values", s_values},
                     {"ratio_tol", 0.02},
                     {"limit_range", {0.1, 10.0}}};

    bool all_pass = true;
    json per_s = json::array();
    for (double s : s_values) {
        const double rho = 2.0 * std::pow(to_double(a), 1.0 - s);
        std::vector<double> energies, ratios, level_sums;
        double deepest_seconds = 0.0;
        for (int J = j_min; J <= j_max; ++J) {
            FatCantorSet fat = build_fat_cantor({a, J});
            auto t0 = std::chrono::steady_clock::now();
            double energy = cantor_energy_bulk(fat.removed_sorted(), fat.remaining, s);
            double dt = seconds_since(t0);
            if (J == j_max) deepest_seconds = dt;
            double model = 0.0, term = 1.0;
            for (int j = 1; j <= J; ++j) {
                term *= rho;
                model += term;
            }
            energies.push_back(energy);
            level_sums.push_back(model);
            ratios.push_back(energy / model);
        }
        bool converged = true;
        double worst_step = 0.0;
        if (deep) {
            // successive-depth ratio changes from J = 12 on
            for (int J = 13; J <= j_max; ++J) {
                std::size_t i = static_cast<std::size_t>(J - j_min);
                double step = std::abs(ratios[i] / ratios[i - 1] - 1.0);
                worst_step = std::max(worst_step, step);
                if (!(step <= 0.02)) converged = false;
            }
        }
        double limit = ratios.back();
        bool limit_ok = limit >= 0.1 && limit <= 10.0;
        bool time_ok = deepest_seconds < 60.0;
        bool pass = converged && limit_ok && time_ok;
        all_pass = all_pass && pass;

        json row;
        row["s"] = s;
        row["geometric_rate"] = rho;
        row["energies"] = energies;
        row["level_sums"] = level_sums;
        row["ratios"] = ratios;
        row["limit_ratio"] = limit;
        row["worst_successive_step"] = worst_step;
        row["deepest_seconds"] = deepest_seconds;
        row["converged"] = converged;
        row["limit_in_range"] = limit_ok;
        row["time_ok"] = time_ok;
        row["pass"] = pass;
        per_s.push_back(row);
    }
    out["results"] = per_s;
    out["pass"] = all_pass;
    return out;
}

json cantor_fractional_codim() {
    auto t0 = std::chrono::steady_clock::now();
    FatCantorSet fat = build_fat_cantor({Rational(1, 4), 13});
    std::vector<double> s_grid = anchored_grid(0.5, 0.02, 5, 0.0, 1.0);
    auto levels_fn = [&](double s) {
        return cantor_level_energies(fat.removed_by_level, fat.remaining, s);
    };
    FractionalCodim fc = fractional_codimension(s_grid, levels_fn, 0.02);
    double dt = seconds_since(t0);

    bool contains = fc.lower <= 0.5 + 1e-12 && fc.upper >= 0.5 - 1e-12;
    bool narrow = fc.upper - fc.lower <= 0.06 + 1e-12;
    bool pass = fc.conclusive && contains && narrow && dt < 120.0;

    json out;
    out["experiment"] = "cantor-fractional";
    out["version"] = kLibraryVersion;
    out["config"] = {{"a", "1/4"}, {"depth", 13}, {"margin", 0.02}, {"target", 0.5}};
    out["result"] = fractional_json(fc);
    out["contains_target"] = contains;
    out["width_ok"] = narrow;
    out["seconds"] = dt;
    out["pass"] = pass;
    return out;
}

json cantor_chain(int raster_n) {
    auto t0 = std::chrono::steady_clock::now();
    FatCantorSet fat = build_fat_cantor({Rational(1, 4), 12});
    RasterizedSet ras = rasterize_interval_union(fat.remaining, raster_n);

    ChainConfig cfg = default_chain_config(ras.space);
    cfg.s_grid = anchored_grid(0.5, 0.02, 5, 0.0, 1.0);
    ChainReport report = codim_chain_report(ras.space, ras.set, cfg, &fat);
    double dt = seconds_since(t0);

    bool mink_ok = report.minkowski.upper <= 0.15 + 1e-12;
    bool frac_ok =
        report.fractional.lower <= 0.5 + 1e-12 && report.fractional.upper >= 0.5 - 1e-12;
    bool haus_ok = report.hausdorff.lower >= 0.8 - 1e-12;
    bool pass = mink_ok && frac_ok && haus_ok && report.ordering_ok;

    json out;
    out["experiment"] = "cantor-chain";
    out["version"] = kLibraryVersion;
    out["config"] = {{"a", "1/4"},
                     {"depth", 12},
                     {"raster_n", raster_n},
                     {"mink_scales", cfg.mink_scales},
                     {"haus_scales", cfg.haus_scales},
                     {"s_grid", cfg.s_grid}};
    out["minkowski"] = codim_estimate_json(report.minkowski);
    out["fractional"] = fractional_json(report.fractional);
    out["hausdorff"] = codim_estimate_json(report.hausdorff);
    out["ordering_ok"] = report.ordering_ok;
    out["strict"] = report.strict;
    out["partial"] = report.partial;
    out["note"] = report.note;
    out["checks"] = {{"minkowski_upper_le_0.15", mink_ok},
                     {"fractional_contains_0.5", frac_ok},
                     {"hausdorff_lower_ge_0.8", haus_ok}};
    out["seconds"] = dt;
    out["pass"] = pass;
    return out;
}

json cantor_trace_refinement() {
    auto t0 = std::chrono::steady_clock::now();
    const double t = 0.3;
    FatCantorSet fat = build_fat_cantor({Rational(1, 4), 12});

    json rows = json::array();
    std::vector<double> contents;
    for (int k = 0; k < 4; ++k) {
        int n = 1 << (10 + 2 * k);
        double r_max = (1.0 / 16.0) / std::pow(4.0, k);
        DiscreteSpace space = build_grid_space(1, n);
        // finite-scale image of the density boundary: gap-endpoint cells, the
        // same convention the chain report uses for its Hausdorff leg
        std::vector<std::size_t> S = cantor_boundary_cells(fat, n);
        HausdorffCover cover = hausdorff_content(space, S, r_max, t);
        contents.push_back(cover.content.value);
        rows.push_back({{"raster_n", n},
                        {"r_max", r_max},
                        {"boundary_points", S.size()},
                        {"content", cover.content.value},
                        {"balls", cover.centers.size()}});
    }
    std::vector<double> factors;
    bool pass = true;
    for (std::size_t k = 1; k < contents.size(); ++k) {
        double f = contents[k] / contents[k - 1];
        factors.push_back(f);
        if (!(f <= 0.5)) pass = false;
    }
    double dt = seconds_since(t0);

    json out;
    out["experiment"] = "cantor-trace-refinement";
    out["version"] = kLibraryVersion;
    out["config"] = {{"a", "1/4"}, {"t", t}, {"refinement", 4}, {"target_factor", 0.5}};
    out["rows"] = rows;
    out["decay_factors"] = factors;
    out["seconds"] = dt;
    out["pass"] = pass;
    if (!pass)
        out["note"] =
            "the visible-endpoint count doubles per 4x refinement while the per-point "
            "content floor shrinks by 4^(t-1), so the per-refinement factor is "
            "2^(2t-1) ~ 0.76 at t = 0.3 at any resolution; the decay is geometric "
            "(ratio < 1 exactly when t < 1/2, the convergent regime) but a factor "
            "of 2 per refinement would need t <= 0";
    return out;
}

json koch_codim(int depth, int n) {
    auto t0 = std::chrono::steady_clock::now();
    const double t_star = kKochCodim;
    KochSnowflake koch = build_koch_snowflake(depth, n);
    const DiscreteSpace& space = koch.raster.space;
    const IndicatorSet& E = koch.raster.set;
    double h = space.resolution_h;

    // One-cell-wide boundary image: a fattened strip would add its half-width
    // to every scan radius and flatten the small-scale mass slopes.
    std::vector<std::size_t> S = phase_interface_cells(space, E);

    BallOracle oracle(space);
    std::map<double, double> net_mass;
    auto mink_fn = [&](double t, double r) {
        auto it = net_mass.find(r);
        if (it == net_mass.end()) {
            std::vector<std::size_t> net = greedy_separated_net(space, S, r);
            CompensatedSum mass;
            for (std::size_t c : net) mass.add(oracle.mass(c, r));
            it = net_mass.emplace(r, mass.value()).first;
        }
        return std::pow(r, -t) * it->second;
    };
    std::vector<double> t_grid = anchored_grid(t_star, 0.05, 9, 0.0, 2.0);
    // Eight dyadic scales; the estimator trims one at each end, so the fit
    // window 8h..256h sits above the raster crossover (finest generation-6
    // feature is 0.7h) and below the outer cutoff (snowflake extent ~0.8).
    std::vector<double> scales(8);
    for (int k = 0; k < 8; ++k) scales[static_cast<std::size_t>(k)] = std::ldexp(4.0 * h, k);
    CodimEstimate mink = estimate_codimension(t_grid, scales, mink_fn, 0.0);
    bool mink_ok = mink.conclusive && mink.lower >= t_star - 0.05 - 1e-9 &&
                   mink.upper <= t_star + 0.05 + 1e-9 && mink.lower <= t_star + 1e-9 &&
                   mink.upper >= t_star - 1e-9;

    std::vector<double> s_grid = anchored_grid(t_star, 0.02, 8, 0.0, 1.0);
    auto levels_fn = [&](double s) { return dyadic_band_energies(space, E, s, 3, 6); };
    FractionalCodim frac = fractional_codimension(s_grid, levels_fn, 0.02);
    bool frac_ok = frac.conclusive && frac.lower >= t_star - 0.08 - 1e-9 &&
                   frac.upper <= t_star + 0.08 + 1e-9 && frac.lower <= t_star + 1e-9 &&
                   frac.upper >= t_star - 1e-9;

    double dt = seconds_since(t0);
    bool pass = mink_ok && frac_ok && dt < 600.0;

    json out;
    out["experiment"] = "koch-codim";
    out["version"] = kLibraryVersion;
    out["config"] = {{"depth", depth},         {"n", n},
                     {"target", t_star},       {"mink_window", 0.05},
                     {"frac_window", 0.08},    {"mink_scales", scales},
                     {"bands", {3, 6}},        {"boundary_points", S.size()}};
    out["minkowski"] = codim_estimate_json(mink);
    out["fractional"] = fractional_json(frac);
    out["checks"] = {{"minkowski_within_0.05", mink_ok}, {"fractional_within_0.08", frac_ok}};
    out["seconds"] = dt;
    out["pass"] = pass;
    return out;
}

namespace {

// Random grid-based problem generator shared by the agreement experiments:
// jittered positions and weights kill ties, exterior data and Omega are
// drawn uniformly.
struct RandomProblem {
    DiscreteSpace space;
    MinimizationProblem problem;
};

RandomProblem make_random_problem(std::mt19937_64& rng, int dim, double s, bool big_omega,
                                  KernelMode mode) {
    RandomProblem rp;
    int n_side = dim == 1 ? 12 + static_cast<int>(rng() % 37)
                          : 4 + static_cast<int>(rng() % 4);
    rp.space = build_grid_space(dim, n_side);
    double h = rp.space.resolution_h;
    for (std::size_t i = 0; i < rp.space.size(); ++i) {
        rp.space.xs[i] += (u01(rng) - 0.5) * 0.4 * h;
        if (dim == 2) rp.space.ys[i] += (u01(rng) - 0.5) * 0.4 * h;
        rp.space.weights[i] *= 0.9 + 0.2 * u01(rng);
    }
    std::size_t n = rp.space.size();

    std::size_t k = big_omega ? 13 + rng() % 4 : 2 + rng() % 11;
    k = std::min(k, n - 2);
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    // partial Fisher-Yates draw of k distinct indices
    for (std::size_t i = 0; i < k; ++i) std::swap(all[i], all[i + rng() % (n - i)]);
    rp.problem.omega = make_empty_set(n);
    for (std::size_t i = 0; i < k; ++i) rp.problem.omega.in[all[i]] = 1;

    rp.problem.exterior_data = make_empty_set(n);
    for (std::size_t i = 0; i < n; ++i)
        if (!rp.problem.omega.contains(i)) rp.problem.exterior_data.in[i] = rng() % 2;

    rp.problem.params.s = s;
    rp.problem.params.mode = mode;
    return rp;
}

json minimize_agreement_impl(int problems, std::uint64_t seed, int dim_mask) {
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(seed);
    const double s_values[3] = {0.2, 0.5, 0.8};

    int energy_mismatches = 0, set_mismatches = 0, supersolution_violations = 0;
    int supersolution_checks = 0, skipped_empty = 0;
    double max_rel_gap = 0.0, max_duality_gap = 0.0;

    for (int p = 0; p < problems; ++p) {
        int dim = dim_mask == 3 ? 1 + p % 2 : dim_mask;
        double s = s_values[p % 3];
        KernelMode mode = dim == 1 && (p / 2) % 2 == 0 ? KernelMode::Interval1D
                                                       : KernelMode::MetricMeasure;
        RandomProblem rp = make_random_problem(rng, dim, s, p % 10 == 9, mode);

        MinimizerResult fast = solve_exact(rp.space, rp.problem);
        MinimizerResult slow = brute_force_minimizer(rp.space, rp.problem);

        double denom = std::max(std::abs(fast.energy), std::abs(slow.energy));
        double rel = denom > 0.0 ? std::abs(fast.energy - slow.energy) / denom : 0.0;
        max_rel_gap = std::max(max_rel_gap, rel);
        max_duality_gap = std::max(max_duality_gap, fast.duality_gap);
        if (rel > 1e-12) ++energy_mismatches;
        if (fast.minimizer.in != slow.minimizer.in) ++set_mismatches;

        // supersolution inequality on the solver output: all singletons of
        // E & Omega plus 100 random nonempty subsets
        std::vector<std::size_t> eo;
        for (std::size_t i = 0; i < rp.space.size(); ++i)
            if (fast.minimizer.contains(i) && rp.problem.omega.contains(i)) eo.push_back(i);
        if (eo.empty()) {
            ++skipped_empty;
            continue;
        }
        auto run_check = [&](const IndicatorSet& A) {
            SupersolutionCheck chk = check_supersolution(rp.space, rp.problem.params,
                                                         fast.minimizer, rp.problem.omega, A);
            ++supersolution_checks;
            if (!chk.holds) ++supersolution_violations;
        };
        for (std::size_t i : eo) {
            IndicatorSet A = make_empty_set(rp.space.size());
            A.in[i] = 1;
            run_check(A);
        }
        for (int trial = 0; trial < 100; ++trial) {
            IndicatorSet A = make_empty_set(rp.space.size());
            bool any = false;
            for (std::size_t i : eo)
                if (rng() % 2) {
                    A.in[i] = 1;
                    any = true;
                }
            if (!any) A.in[eo[rng() % eo.size()]] = 1;
            run_check(A);
        }
    }
    double dt = seconds_since(t0);
    bool pass = energy_mismatches == 0 && set_mismatches == 0 &&
                supersolution_violations == 0 && dt < 300.0;

    json out;
    out["experiment"] = "minimize-agreement";
    out["version"] = kLibraryVersion;
    out["config"] = {{"problems", problems},
                     {"seed", seed},
                     {"dims", dim_mask == 3 ? "1+2" : dim_mask == 1 ? "1" : "2"},
                     {"s_values", {0.2, 0.5, 0.8}},
                     {"max_omega", 16}};
    out["energy_mismatches"] = energy_mismatches;
    out["set_mismatches"] = set_mismatches;
    out["max_relative_energy_gap"] = max_rel_gap;
    out["max_duality_gap"] = max_duality_gap;
    out["supersolution_checks"] = supersolution_checks;
    out["supersolution_violations"] = supersolution_violations;
    out["problems_with_empty_interior"] = skipped_empty;
    out["seconds"] = dt;
    out["pass"] = pass;
    return out;
}

}  // namespace

json minimize_random_agreement(int problems, std::uint64_t seed) {
    return minimize_agreement_impl(problems, seed, 3);
}

json minimize_density_porosity(int n) {
    auto t0 = std::chrono::steady_clock::now();
    DiscreteSpace space = build_grid_space(2, n);
    std::size_t total = space.size();

    MinimizationProblem problem;
    problem.omega = make_empty_set(total);
    problem.exterior_data = make_empty_set(total);
    for (std::size_t i = 0; i < total; ++i) {
        double dx = space.xs[i] - 0.5, dy = space.ys[i] - 0.5;
        if (dx * dx + dy * dy < 0.25 * 0.25) problem.omega.in[i] = 1;
        if (space.ys[i] > 0.5) problem.exterior_data.in[i] = 1;
    }

    bool pass = true;
    json per_s = json::array();
    for (double s : {0.3, 0.6}) {
        problem.params.s = s;
        problem.params.mode = KernelMode::MetricMeasure;
        MinimizerResult res = solve_exact(space, problem);
        DensityReport dens = verify_uniform_density(space, problem, res.minimizer);
        PorosityReport por = verify_porosity(space, problem, res.minimizer);

        bool density_ok = !dens.balls.empty() && dens.min_ratio >= 0.02;
        bool porosity_ok = !por.balls.empty() &&
                           std::isfinite(por.max_constant) && por.max_constant <= 64.0;
        pass = pass && density_ok && porosity_ok;

        per_s.push_back({{"s", s},
                         {"energy", res.energy},
                         {"interface_points", dens.interface_points},
                         {"admissible_balls", dens.balls.size()},
                         {"min_density_ratio", dens.min_ratio},
                         {"gamma0_reference", dens.gamma0_reference},
                         {"measured_Q", dens.measured_Q},
                         {"measured_CQ", dens.measured_CQ},
                         {"max_porosity_constant", por.max_constant},
                         {"porosity_skipped_small", por.skipped_small},
                         {"density_ok", density_ok},
                         {"porosity_ok", porosity_ok}});
    }
    double dt = seconds_since(t0);

    json out;
    out["experiment"] = "minimize-density-porosity";
    out["version"] = kLibraryVersion;
    out["config"] = {{"n", n},
                     {"omega", "disk r=1/4 at center"},
                     {"exterior", "upper half plane"},
                     {"s_values", {0.3, 0.6}},
                     {"density_floor", 0.02},
                     {"porosity_cap", 64.0}};
    out["results"] = per_s;
    out["seconds"] = dt;
    out["pass"] = pass;
    return out;
}

json hypfill_verification(int n) {
    auto t0 = std::chrono::steady_clock::now();
    DiscreteSpace base = build_grid_space(1, n);

    // 16 interior samples, evenly spread across [0.2, 0.8]
    std::vector<std::size_t> samples;
    for (int k = 0; k < 16; ++k) {
        double x = 0.2 + 0.6 * k / 15.0;
        auto idx = static_cast<std::size_t>(
            std::min<long long>(n - 1, std::llround(x * n - 0.5)));
        samples.push_back(idx);
    }

    bool pass = true;
    json per_ratio = json::array();
    for (double beta_ratio : {0.5, 1.0}) {
        FillingParams params;
        params.alpha = 2.0;
        params.tau = 2.0;
        params.levels = 7;
        params.beta_ratio = beta_ratio;
        HyperbolicFilling filling = build_filling(base, params);

        std::vector<double> radii;
        for (int j = 1; j <= 4; ++j)
            radii.push_back(filling.attachment_radius * std::pow(2.0, j));
        CodimRelationReport rep = verify_codim_relation(filling, base, samples, radii);

        std::vector<std::size_t> A;
        for (std::size_t i = 0; i < base.size(); ++i)
            if (base.xs[i] >= 0.25 && base.xs[i] <= 0.5) A.push_back(i);
        std::vector<double> deltas = {radii[2], radii[1], radii[0]};
        TraceCheckReport trace = boundary_trace_check(filling, base, A, deltas);

        bool spread_ok = rep.min_ratio > 0.0 && rep.spread <= 50.0;
        pass = pass && spread_ok && !trace.violation;

        json trace_rows = json::array();
        for (const auto& row : trace.rows)
            trace_rows.push_back(
                {{"delta", row.delta}, {"content", row.content}, {"ratio", row.ratio}});
        per_ratio.push_back({{"beta_ratio", beta_ratio},
                             {"vertices", filling.vertex_count()},
                             {"edges", filling.edges.size()},
                             {"attachment_radius", filling.attachment_radius},
                             {"radii", radii},
                             {"min_ratio", rep.min_ratio},
                             {"max_ratio", rep.max_ratio},
                             {"spread", rep.spread},
                             {"spread_ok", spread_ok},
                             {"trace_nu_A", trace.nu_A},
                             {"trace_rows", trace_rows},
                             {"trace_violation", trace.violation}});
    }
    double dt = seconds_since(t0);
    pass = pass && dt < 120.0;

    json out;
    out["experiment"] = "hypfill-verify";
    out["version"] = kLibraryVersion;
    out["config"] = {{"n", n},       {"alpha", 2.0},          {"tau", 2.0},
                     {"levels", 7},  {"beta_ratios", {0.5, 1.0}}, {"samples", samples},
                     {"spread_cap", 50.0}};
    out["results"] = per_ratio;
    out["seconds"] = dt;
    out["pass"] = pass;
    return out;
}

json run_recipe(const std::string& name) {
    if (name == "cantor-energy") return cantor_energy_convergence(true);
    if (name == "cantor-chain") {
        json out;
        out["experiment"] = "cantor-chain";
        out["version"] = kLibraryVersion;
        out["fractional"] = cantor_fractional_codim();
        out["chain"] = cantor_chain();
        out["pass"] = out["fractional"]["pass"].get<bool>() && out["chain"]["pass"].get<bool>();
        return out;
    }
    if (name == "koch-codim") return koch_codim();
    if (name == "minimize-1d") return minimize_agreement_impl(250, 20260814, 1);
    if (name == "minimize-2d") {
        json out;
        out["experiment"] = "minimize-2d";
        out["version"] = kLibraryVersion;
        out["agreement"] = minimize_agreement_impl(250, 20260815, 2);
        out["density_porosity"] = minimize_density_porosity();
        out["pass"] = out["agreement"]["pass"].get<bool>() &&
                      out["density_porosity"]["pass"].get<bool>();
        return out;
    }
    if (name == "hypfill-verify") return hypfill_verification();
    throw std::invalid_argument("unknown recipe: " + name +
                                " (expected cantor-energy, cantor-chain, koch-codim, "
                                "minimize-1d, minimize-2d, hypfill-verify)");
}

}  // namespace fracperim::experiments
