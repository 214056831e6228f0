#pragma once

#include "fracperim/boundary.hpp"
#include "fracperim/geometry.hpp"
#include "fracperim/hypfill.hpp"
#include "fracperim/minimize.hpp"

#include <json.hpp>

#include <string>

namespace fracperim::experiments {

// Each runner reproduces one pinned desk-scale experiment and returns a JSON
// report carrying a top-level "pass" flag (and "conclusive" where the
// estimator may legitimately abstain). Tolerances live here, in one place.

// Level-sum convergence of the exact Cantor energy: a = 1/5, s in {0.2, 0.3},
// depths 6..16; energy(J) / sum_{j<=J} (2 a^(1-s))^j must settle to within 2%
// between successive depths from J = 12 and the limit must land in [0.1, 10].
nlohmann::json cantor_energy_convergence(bool deep = true);

// Fractional codimension bracket for C_{1/4}: must contain 1/2, width <= 0.06.
nlohmann::json cantor_fractional_codim();

// Codimension chain on rasterized C_{1/4} (n = 2^14): Minkowski upper end
// <= 0.15, fractional bracket contains 1/2, Hausdorff lower end >= 0.8,
// ordering verdict passes.
nlohmann::json cantor_chain(int raster_n = 1 << 14);

// Greedy Hausdorff content decay of the finite-scale density boundary of
// C_{1/4} at t = 0.3 under joint (raster, r_max) refinement; the pinned
// target is a factor >= 2 per 4x refinement across three refinements.
nlohmann::json cantor_trace_refinement();

// Koch snowflake (depth 6, n = 1024): Minkowski codim bracket of the
// boundary and fractional codim bracket of the indicator, both against
// 2 - log 4 / log 3.
nlohmann::json koch_codim(int depth = 6, int n = 1024);

// Random exact-solver vs brute-force agreement (500 seeded problems, 1-D and
// 2-D bases, s in {0.2, 0.5, 0.8}, |Omega| <= 16): energies within 1e-12
// relative, canonical minimizers identical; plus supersolution checks on
// every solver output (all singletons + 100 random subsets per problem).
nlohmann::json minimize_random_agreement(int problems = 500, std::uint64_t seed = 20260814);

// Density and porosity on a 2-D problem (n = 64, central disk Omega,
// half-plane exterior, s in {0.3, 0.6}): every admissible interface ball has
// both density ratios >= 0.02 and porosity constant <= 64.
nlohmann::json minimize_density_porosity(int n = 64);

// Hyperbolic filling verification on [0,1] (n = 512, alpha = tau = 2,
// beta/eps in {1/2, 1}, N = 7): codim-relation ratio spread <= 50 over 16
// interior samples and 4 dyadic radii above the attachment scale, plus the
// boundary trace content check.
nlohmann::json hypfill_verification(int n = 512);

// Named recipes for the CLI (cantor-energy, cantor-chain, koch-codim,
// minimize-1d, minimize-2d, hypfill-verify).
nlohmann::json run_recipe(const std::string& name);

}  // namespace fracperim::experiments
