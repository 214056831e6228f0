// Command-line front end: generation, energy evaluation, codimension
// estimation, exact minimization, hyperbolic fillings, and pinned
// reproduction recipes. JSON reports embed the resolved configuration and
// library version; CSV files carry (scale, content) series for plotting.
//
// Exit codes: 0 success, 2 inconclusive estimate or failed/partial
// verification, 1 usage or input errors.

#include "fracperim/boundary.hpp"
#include "fracperim/experiments.hpp"
#include "fracperim/geometry.hpp"
#include "fracperim/hypfill.hpp"
#include "fracperim/io.hpp"
#include "fracperim/kernels.hpp"
#include "fracperim/minimize.hpp"
#include "fracperim/rational.hpp"
#include "fracperim/space.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;
using namespace fracperim;

namespace {

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// "lo:hi:step" inclusive grid (hi admitted within half a step).
std::vector<double> parse_grid(const std::string& text) {
    double lo, hi, step;
    char c1, c2;
    std::istringstream in(text);
    if (!(in >> lo >> c1 >> hi >> c2 >> step) || c1 != ':' || c2 != ':' || step <= 0 || hi < lo)
        throw std::invalid_argument("bad grid '" + text + "': expected lo:hi:step with step > 0");
    std::vector<double> out;
    for (int k = 0;; ++k) {
        double v = lo + k * step;
        if (v > hi + step * 0.5) break;
        out.push_back(v);
    }
    return out;
}

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> out;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stod(tok));
    }
    if (out.empty()) throw std::invalid_argument("bad list '" + text + "': expected v1,v2,...");
    return out;
}

KernelMode parse_mode(const std::string& m) {
    if (m == "metric-measure") return KernelMode::MetricMeasure;
    if (m == "interval-1d") return KernelMode::Interval1D;
    throw std::invalid_argument("unknown kernel mode '" + m + "'");
}

void write_text(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw std::runtime_error("write failed on '" + path + "'");
}

// Canonical report emission: stdout always, file when requested. File output
// is the deterministic artifact; volatile fields (runtimes) stay on stdout.
void emit_report(const json& report, const std::string& out_path,
                 const json& volatile_fields = json::object()) {
    json shown = report;
    for (auto it = volatile_fields.begin(); it != volatile_fields.end(); ++it)
        shown[it.key()] = it.value();
    std::cout << shown.dump(2) << "\n";
    if (!out_path.empty()) write_text(out_path, report.dump(2) + "\n");
}

json interval_json(const Interval& I) {
    return json{{"lo", format_rational(I.lo)}, {"hi", format_rational(I.hi)}};
}

json cantor_to_json(const FatCantorSet& cs) {
    json removed = json::array();
    for (const auto& level : cs.removed_by_level) {
        json lv = json::array();
        for (const auto& I : level) lv.push_back(interval_json(I));
        removed.push_back(lv);
    }
    json remaining = json::array();
    for (const auto& I : cs.remaining) remaining.push_back(interval_json(I));
    return json{{"type", "fat-cantor"},
                {"a", format_rational(cs.spec.a)},
                {"depth", cs.spec.depth},
                {"remaining_length", format_rational(cs.remaining_length())},
                {"removed_by_level", removed},
                {"remaining", remaining}};
}

// Construction files are reloaded by exact parameters, not by interval lists:
// rebuilding guarantees the rational endpoints match the generator bit for bit.
FatCantorSet load_cantor_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw std::runtime_error("parse error in '" + path + "': " + e.what());
    }
    if (!j.contains("type") || j["type"] != "fat-cantor")
        throw std::runtime_error("'" + path + "': expected a fat-cantor construction file");
    FatCantorSpec spec;
    spec.a = parse_rational(j.at("a").get<std::string>());
    spec.depth = j.at("depth").get<int>();
    return build_fat_cantor(spec);
}

json codim_estimate_to_json(const CodimEstimate& e) {
    return json{{"t_grid", e.t_grid},     {"scales", e.scales}, {"slopes", e.slopes},
                {"lower", e.lower},       {"upper", e.upper},   {"conclusive", e.conclusive},
                {"note", e.note}};
}

json fractional_to_json(const FractionalCodim& f) {
    return json{{"s_grid", f.s_grid},     {"rates", f.rates}, {"verdict", f.verdict},
                {"lower", f.lower},       {"upper", f.upper}, {"conclusive", f.conclusive},
                {"note", f.note}};
}

void append_content_csv(std::string& csv, const std::string& leg, const CodimEstimate& e) {
    for (std::size_t ti = 0; ti < e.t_grid.size(); ++ti)
        for (std::size_t ri = 0; ri < e.scales.size(); ++ri)
            csv += leg + "," + format_double(e.t_grid[ti]) + "," + format_double(e.scales[ri]) +
                   "," + format_double(e.contents[ti][ri]) + "\n";
}

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    }
};

// ---------------------------------------------------------------- gen

int run_gen_cantor(const std::string& a_text, int depth, int raster_n, const std::string& out,
                   const std::string& space_out, const std::string& set_out) {
    FatCantorSpec spec{parse_rational(a_text), depth};
    FatCantorSet cs = build_fat_cantor(spec);
    json report = cantor_to_json(cs);
    report["config"] = json{{"subcommand", "gen cantor"},
                            {"a", a_text},
                            {"depth", depth},
                            {"raster", raster_n}};
    report["version"] = kLibraryVersion;
    if (raster_n > 0) {
        RasterizedSet rs = rasterize_interval_union(cs.remaining, raster_n);
        if (!space_out.empty()) save_space_json(rs.space, space_out);
        if (!set_out.empty()) save_set_json(rs.set, set_out);
        report["raster_points"] = raster_n;
        report["raster_set_count"] = rs.set.count();
    }
    emit_report(report, out);
    return 0;
}

int run_gen_koch(int depth, int n, const std::string& out, const std::string& space_out,
                 const std::string& set_out) {
    KochSnowflake koch = build_koch_snowflake(depth, n);
    if (!space_out.empty()) save_space_json(koch.raster.space, space_out);
    if (!set_out.empty()) save_set_json(koch.raster.set, set_out);
    json report{{"type", "koch-snowflake"},
                {"depth", depth},
                {"n", n},
                {"polygon_vertices", koch.vx.size()},
                {"raster_set_count", koch.raster.set.count()},
                {"config", json{{"subcommand", "gen koch"}, {"depth", depth}, {"n", n}}},
                {"version", kLibraryVersion}};
    emit_report(report, out);
    return 0;
}

int run_gen_grid(int dim, int n, double extent, const std::string& out) {
    DiscreteSpace space = build_grid_space(dim, n, extent);
    if (!out.empty()) save_space_json(space, out);
    json report{{"type", "grid"},
                {"dim", dim},
                {"n", n},
                {"extent", extent},
                {"points", space.size()},
                {"total_mass", space.total_mass()},
                {"config",
                 json{{"subcommand", "gen grid"}, {"dim", dim}, {"n", n}, {"extent", extent}}},
                {"version", kLibraryVersion}};
    emit_report(report, "");
    return 0;
}

// ---------------------------------------------------------------- energy

int run_energy(const std::string& space_path, const std::string& set_path,
               const std::string& cantor_path, double s, const std::string& mode_text,
               const std::string& form_text, const std::string& out) {
    json config{{"subcommand", "energy"}, {"s", s},      {"mode", mode_text},
                {"space", space_path},    {"set", set_path}, {"cantor", cantor_path},
                {"form", form_text}};
    Timer timer;
    json report;
    if (!cantor_path.empty()) {
        if (mode_text != "interval-1d")
            throw std::invalid_argument("--cantor input requires --mode interval-1d");
        FatCantorSet cs = load_cantor_json(cantor_path);
        auto removed = cs.removed_sorted();
        double energy = cantor_energy_bulk(removed, cs.remaining, s);
        report = json{{"perimeter", energy},
                      {"pair_count", std::uint64_t(removed.size()) * cs.remaining.size()},
                      {"evaluation", "exact-interval"}};
    } else {
        if (space_path.empty() || set_path.empty())
            throw std::invalid_argument("energy needs --space and --set (or --cantor)");
        DiscreteSpace space = load_space_json(space_path);
        IndicatorSet set = load_set_json(set_path, space.size());
        KernelParams params{s, parse_mode(mode_text)};
        PerimeterForm form =
            form_text == "symmetric" ? PerimeterForm::SymmetricKernel : PerimeterForm::TwoSided;
        PerimeterResult res = s_perimeter(space, params, set, form);
        report = json{{"perimeter", res.value},
                      {"pair_count", res.pair_count},
                      {"self_interaction_scale", res.self_interaction_scale}};
    }
    report["config"] = config;
    report["version"] = kLibraryVersion;
    emit_report(report, out, json{{"runtime_ms", timer.ms()}});
    return 0;
}

// ---------------------------------------------------------------- codim

int run_codim(const std::string& space_path, const std::string& set_path,
              const std::string& cantor_path, const std::string& what,
              const std::string& t_grid_text, const std::string& s_grid_text,
              const std::string& scales_text, const std::string& out, const std::string& csv_out) {
    DiscreteSpace space = load_space_json(space_path);
    IndicatorSet set = load_set_json(set_path, space.size());
    ChainConfig cfg = default_chain_config(space);
    if (!t_grid_text.empty()) cfg.t_grid = parse_grid(t_grid_text);
    if (!s_grid_text.empty()) cfg.s_grid = parse_grid(s_grid_text);
    if (!scales_text.empty()) {
        cfg.mink_scales = parse_list(scales_text);
        cfg.haus_scales = cfg.mink_scales;
    }
    std::optional<FatCantorSet> exact;
    if (!cantor_path.empty()) exact = load_cantor_json(cantor_path);

    json config{{"subcommand", "codim"},
                {"space", space_path},
                {"set", set_path},
                {"what", what},
                {"t_grid", cfg.t_grid},
                {"s_grid", cfg.s_grid},
                {"mink_scales", cfg.mink_scales},
                {"haus_scales", cfg.haus_scales},
                {"bands", json::array({cfg.band_min, cfg.band_max})},
                {"cantor", cantor_path}};
    json report{{"config", config}, {"version", kLibraryVersion}};
    std::string csv = "leg,t,scale,content\n";
    bool conclusive = true;

    if (what == "mink" || what == "chain" || what == "haus") {
        // Standalone legs reuse the chain defaults but run only the requested
        // estimator; chain delegates to the full report below.
    }
    if (what == "chain") {
        ChainReport chain = codim_chain_report(space, set, cfg, exact ? &*exact : nullptr);
        report["minkowski"] = codim_estimate_to_json(chain.minkowski);
        report["fractional"] = fractional_to_json(chain.fractional);
        report["hausdorff"] = codim_estimate_to_json(chain.hausdorff);
        report["ordering_ok"] = chain.ordering_ok;
        report["strict"] = chain.strict;
        report["partial"] = chain.partial;
        report["note"] = chain.note;
        append_content_csv(csv, "mink", chain.minkowski);
        append_content_csv(csv, "haus", chain.hausdorff);
        for (std::size_t i = 0; i < chain.fractional.s_grid.size(); ++i)
            csv += "frac," + format_double(chain.fractional.s_grid[i]) + ",," +
                   format_double(chain.fractional.rates[i]) + "\n";
        conclusive = !chain.partial;
    } else if (what == "mink") {
        IndicatorSet bdry = regularized_boundary(space, set, cfg.plus_spec);
        auto S = set_to_indices(bdry);
        auto net_content = [&](double t, double r) {
            return minkowski_content(space, S, r, t).value;
        };
        CodimEstimate est =
            estimate_codimension(cfg.t_grid, cfg.mink_scales, net_content, cfg.mink_slope_tol);
        report["minkowski"] = codim_estimate_to_json(est);
        report["boundary_points"] = S.size();
        append_content_csv(csv, "mink", est);
        conclusive = est.conclusive;
    } else if (what == "haus") {
        IndicatorSet bdry = measure_theoretic_boundary(space, set, cfg.star_spec);
        auto S = set_to_indices(bdry);
        auto greedy_content = [&](double t, double r) {
            return hausdorff_content(space, S, r, t).content.value;
        };
        CodimEstimate est =
            estimate_codimension(cfg.t_grid, cfg.haus_scales, greedy_content, cfg.haus_slope_tol);
        report["hausdorff"] = codim_estimate_to_json(est);
        report["boundary_points"] = S.size();
        append_content_csv(csv, "haus", est);
        conclusive = est.conclusive;
    } else if (what == "frac") {
        std::function<std::vector<double>(double)> levels_fn;
        if (exact) {
            levels_fn = [&](double s) {
                return cantor_level_energies(exact->removed_by_level, exact->remaining, s);
            };
        } else {
            levels_fn = [&](double s) {
                return dyadic_band_energies(space, set, s, cfg.band_min, cfg.band_max);
            };
        }
        FractionalCodim fc = fractional_codimension(cfg.s_grid, levels_fn, cfg.margin);
        report["fractional"] = fractional_to_json(fc);
        for (std::size_t i = 0; i < fc.s_grid.size(); ++i)
            csv += "frac," + format_double(fc.s_grid[i]) + ",," + format_double(fc.rates[i]) +
                   "\n";
        conclusive = fc.conclusive;
    } else {
        throw std::invalid_argument("unknown codim target '" + what +
                                    "' (expected mink, haus, frac, or chain)");
    }
    if (!csv_out.empty()) write_text(csv_out, csv);
    emit_report(report, out);
    return conclusive ? 0 : 2;
}

// ---------------------------------------------------------------- minimize

int run_minimize(const std::string& space_path, const std::string& omega_path,
                 const std::string& exterior_path, double s, const std::string& mode_text,
                 bool oracle, bool density, bool porosity, const std::string& out,
                 const std::string& set_out) {
    DiscreteSpace space = load_space_json(space_path);
    MinimizationProblem problem;
    problem.omega = load_set_json(omega_path, space.size());
    problem.exterior_data = load_set_json(exterior_path, space.size());
    problem.params = KernelParams{s, parse_mode(mode_text)};
    validate_problem(space, problem);

    Timer timer;
    MinimizerResult res = solve_exact(space, problem);
    json report{{"omega_count", problem.omega.count()},
                {"minimizer_count", res.minimizer.count()},
                {"energy", res.energy},
                {"flow", res.flow},
                {"duality_gap", res.duality_gap},
                {"pair_count", res.pair_count}};
    bool verified = true;
    if (oracle) {
        MinimizerResult ref = brute_force_minimizer(space, problem);
        bool sets_match = res.minimizer.in == ref.minimizer.in;
        double denom = std::max({std::abs(res.energy), std::abs(ref.energy), 1e-300});
        bool energies_match = std::abs(res.energy - ref.energy) <= 1e-12 * denom;
        report["oracle"] = json{{"energy", ref.energy},
                                {"sets_match", sets_match},
                                {"energies_match", energies_match}};
        verified = verified && sets_match && energies_match;
    }
    if (density) {
        DensityReport d = verify_uniform_density(space, problem, res.minimizer);
        report["density"] = json{{"balls", d.balls.size()},
                                 {"min_ratio", d.min_ratio},
                                 {"interface_points", d.interface_points},
                                 {"gamma0_reference", d.gamma0_reference},
                                 {"measured_Q", d.measured_Q},
                                 {"measured_CQ", d.measured_CQ}};
    }
    if (porosity) {
        PorosityReport p = verify_porosity(space, problem, res.minimizer);
        double max_c = p.max_constant;
        report["porosity"] = json{{"balls", p.balls.size()},
                                  {"max_constant", std::isinf(max_c) ? -1.0 : max_c},
                                  {"skipped_small", p.skipped_small}};
    }
    report["config"] = json{{"subcommand", "minimize"}, {"space", space_path},
                            {"omega", omega_path},      {"exterior", exterior_path},
                            {"s", s},                   {"mode", mode_text},
                            {"oracle", oracle},         {"density", density},
                            {"porosity", porosity}};
    report["version"] = kLibraryVersion;
    if (!set_out.empty()) save_set_json(res.minimizer, set_out);
    emit_report(report, out, json{{"runtime_ms", timer.ms()}});
    return verified ? 0 : 2;
}

// ---------------------------------------------------------------- hypfill

int run_hypfill(const std::string& space_path, double alpha, double tau, double beta_ratio,
                int levels, bool verify, const std::string& out, const std::string& csv_out) {
    DiscreteSpace base = load_space_json(space_path);
    FillingParams params{alpha, tau, levels, beta_ratio};
    HyperbolicFilling filling = build_filling(base, params);

    json vertices = json::array();
    for (const auto& v : filling.vertices)
        vertices.push_back(json{{"base", v.base_index},
                                {"level", v.level},
                                {"depth", v.bfs_depth},
                                {"mu_hat", v.mu_hat}});
    json edges = json::array();
    for (const auto& e : filling.edges)
        edges.push_back(json::array({e.u, e.v, e.unif_length}));
    json net_sizes = json::array();
    for (const auto& net : filling.nets) net_sizes.push_back(net.size());

    json report{{"alpha", params.alpha},
                {"tau", params.tau},
                {"beta_ratio", params.beta_ratio},
                {"levels", params.levels},
                {"rescale", filling.rescale},
                {"eps", filling.eps},
                {"beta", filling.beta},
                {"attachment_radius", filling.attachment_radius},
                {"net_sizes", net_sizes},
                {"vertices", vertices},
                {"edges", edges}};
    report["config"] = json{{"subcommand", "hypfill"},   {"space", space_path},
                            {"alpha", alpha},            {"tau", tau},
                            {"beta_ratio", beta_ratio},  {"levels", levels},
                            {"verify", verify}};
    report["version"] = kLibraryVersion;

    int status = 0;
    if (verify) {
        // 16 deterministic interior samples, radii on dyadic multiples of the
        // attachment scale.
        std::size_t n = base.size();
        std::vector<std::size_t> samples;
        for (int k = 0; k < 16; ++k)
            samples.push_back(n / 5 + std::size_t(k) * (3 * n / 5) / 15);
        std::vector<double> radii;
        for (int k = 1; k <= 4; ++k)
            radii.push_back(filling.attachment_radius * std::pow(2.0, k));
        CodimRelationReport rel = verify_codim_relation(filling, base, samples, radii);
        report["codim_relation"] = json{{"min_ratio", rel.min_ratio},
                                        {"max_ratio", rel.max_ratio},
                                        {"spread", rel.spread},
                                        {"rows", rel.rows.size()}};
        if (!csv_out.empty()) {
            std::string csv = "base_index,r,mu_ball,nu_ball,ratio\n";
            for (const auto& row : rel.rows)
                csv += std::to_string(row.base_index) + "," + format_double(row.r) + "," +
                       format_double(row.mu_ball) + "," + format_double(row.nu_ball) + "," +
                       format_double(row.ratio) + "\n";
            write_text(csv_out, csv);
        }
        if (!(rel.min_ratio > 0.0) || !std::isfinite(rel.spread)) status = 2;
    }
    emit_report(report, out);
    return status;
}

// ---------------------------------------------------------------- reproduce

int run_reproduce(const std::string& recipe, const std::string& out) {
    json report = experiments::run_recipe(recipe);
    report["config"] = json{{"subcommand", "reproduce"}, {"recipe", recipe}};
    report["version"] = kLibraryVersion;
    bool pass = report.value("pass", false);
    std::cout << report.dump(2) << "\n";
    std::cerr << "[fracperim] reproduce " << recipe << ": " << (pass ? "PASS" : "FAIL") << "\n";
    if (!out.empty()) write_text(out, report.dump(2) + "\n");
    return pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fractional perimeters, nonlocal minimizers, and codimension estimates"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate spaces and sets");
    gen->require_subcommand(1);
    std::string g_a = "1/4", g_out, g_space_out, g_set_out;
    int g_depth = 6, g_raster = 0, g_n = 256, g_dim = 1;
    double g_extent = 1.0;
    auto* gen_cantor = gen->add_subcommand("cantor", "fat Cantor construction");
    gen_cantor->add_option("--a", g_a, "removal ratio as P/Q, in (0,1/3)");
    gen_cantor->add_option("--depth", g_depth, "construction depth J >= 1");
    gen_cantor->add_option("--raster", g_raster, "also rasterize on this many points");
    gen_cantor->add_option("--out", g_out, "construction JSON path");
    gen_cantor->add_option("--space-out", g_space_out, "rasterized space JSON path");
    gen_cantor->add_option("--set-out", g_set_out, "rasterized indicator JSON path");
    auto* gen_koch = gen->add_subcommand("koch", "Koch snowflake raster");
    gen_koch->add_option("--depth", g_depth, "subdivision depth");
    gen_koch->add_option("--n", g_n, "raster side length");
    gen_koch->add_option("--out", g_out, "meta JSON path");
    gen_koch->add_option("--space-out", g_space_out, "space JSON path");
    gen_koch->add_option("--set-out", g_set_out, "indicator JSON path");
    auto* gen_grid = gen->add_subcommand("grid", "uniform grid space");
    gen_grid->add_option("--dim", g_dim, "1 or 2")->check(CLI::IsMember({1, 2}));
    gen_grid->add_option("--n", g_n, "points per axis");
    gen_grid->add_option("--extent", g_extent, "box side length");
    gen_grid->add_option("--out", g_out, "space JSON path");

    // energy
    auto* energy = app.add_subcommand("energy", "s-perimeter / interaction energy");
    std::string e_space, e_set, e_cantor, e_mode = "metric-measure", e_form = "two-sided", e_out;
    double e_s = 0.5;
    energy->add_option("--space", e_space, "space JSON");
    energy->add_option("--set", e_set, "indicator JSON");
    energy->add_option("--cantor", e_cantor, "fat-cantor construction JSON (exact evaluation)");
    energy->add_option("--s", e_s, "order s in (0,1)")->required();
    energy->add_option("--mode", e_mode, "kernel mode")
        ->check(CLI::IsMember({"metric-measure", "interval-1d"}));
    energy->add_option("--form", e_form, "perimeter form")
        ->check(CLI::IsMember({"two-sided", "symmetric"}));
    energy->add_option("--out", e_out, "report JSON path");

    // codim
    auto* codim = app.add_subcommand("codim", "codimension estimates");
    std::string c_space, c_set, c_cantor, c_what = "chain", c_tgrid, c_sgrid, c_scales, c_out,
                c_csv;
    codim->add_option("--space", c_space, "space JSON")->required();
    codim->add_option("--set", c_set, "indicator JSON")->required();
    codim->add_option("--cantor", c_cantor, "exact construction JSON for the fractional leg");
    codim->add_option("--what", c_what, "mink | haus | frac | chain")
        ->check(CLI::IsMember({"mink", "haus", "frac", "chain"}));
    codim->add_option("--t-grid", c_tgrid, "lo:hi:step");
    codim->add_option("--s-grid", c_sgrid, "lo:hi:step");
    codim->add_option("--scales", c_scales, "r1,r2,... content scales");
    codim->add_option("--out", c_out, "report JSON path");
    codim->add_option("--csv", c_csv, "(leg,t,scale,content) CSV path");

    // minimize
    auto* minimize = app.add_subcommand("minimize", "exact nonlocal minimal set");
    std::string m_space, m_omega, m_exterior, m_mode = "metric-measure", m_out, m_set_out;
    double m_s = 0.5;
    bool m_oracle = false, m_density = false, m_porosity = false;
    minimize->add_option("--space", m_space, "space JSON")->required();
    minimize->add_option("--omega", m_omega, "free-region indicator JSON")->required();
    minimize->add_option("--exterior", m_exterior, "exterior-data indicator JSON")->required();
    minimize->add_option("--s", m_s, "order s in (0,1)")->required();
    minimize->add_option("--mode", m_mode, "kernel mode")
        ->check(CLI::IsMember({"metric-measure", "interval-1d"}));
    minimize->add_flag("--oracle", m_oracle, "cross-check against exhaustive enumeration");
    minimize->add_flag("--density", m_density, "uniform density report");
    minimize->add_flag("--porosity", m_porosity, "porosity report");
    minimize->add_option("--out", m_out, "report JSON path");
    minimize->add_option("--set-out", m_set_out, "minimizer indicator JSON path");

    // hypfill
    auto* hypfill = app.add_subcommand("hypfill", "hyperbolic filling of a bounded space");
    std::string h_space, h_out, h_csv;
    double h_alpha = 2.0, h_tau = 2.0, h_beta = 0.5;
    int h_levels = 5;
    bool h_verify = false;
    hypfill->add_option("--space", h_space, "base space JSON")->required();
    hypfill->add_option("--alpha", h_alpha, "net ratio > 1");
    hypfill->add_option("--tau", h_tau, "edge slack > 1");
    hypfill->add_option("--beta-ratio", h_beta, "beta/eps in (0,1]");
    hypfill->add_option("--levels", h_levels, "number of net levels");
    hypfill->add_flag("--verify", h_verify, "measure-codimension ratio table");
    hypfill->add_option("--out", h_out, "graph JSON path");
    hypfill->add_option("--csv", h_csv, "ratio table CSV path");

    // reproduce
    auto* reproduce = app.add_subcommand("reproduce", "pinned experiment recipes");
    std::string r_recipe, r_out;
    reproduce
        ->add_option("recipe", r_recipe,
                     "cantor-energy | cantor-chain | koch-codim | minimize-1d | minimize-2d | "
                     "hypfill-verify")
        ->required();
    reproduce->add_option("--out", r_out, "report JSON path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        std::cout << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (gen->parsed()) {
            if (gen_cantor->parsed())
                return run_gen_cantor(g_a, g_depth, g_raster, g_out, g_space_out, g_set_out);
            if (gen_koch->parsed()) return run_gen_koch(g_depth, g_n, g_out, g_space_out, g_set_out);
            if (gen_grid->parsed()) return run_gen_grid(g_dim, g_n, g_extent, g_out);
        }
        if (energy->parsed())
            return run_energy(e_space, e_set, e_cantor, e_s, e_mode, e_form, e_out);
        if (codim->parsed())
            return run_codim(c_space, c_set, c_cantor, c_what, c_tgrid, c_sgrid, c_scales, c_out,
                             c_csv);
        if (minimize->parsed())
            return run_minimize(m_space, m_omega, m_exterior, m_s, m_mode, m_oracle, m_density,
                                m_porosity, m_out, m_set_out);
        if (hypfill->parsed())
            return run_hypfill(h_space, h_alpha, h_tau, h_beta, h_levels, h_verify, h_out, h_csv);
        if (reproduce->parsed()) return run_reproduce(r_recipe, r_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    std::cerr << "usage error: no subcommand\n";
    return 1;
}
