#pragma once

#include "fracperim/geometry.hpp"
#include "fracperim/kernels.hpp"
#include "fracperim/space.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace fracperim {

// Finite-scale boundary detection window. The continuum definitions quantify
// over all radii (regularized boundary) or the limit r -> 0 (density
// boundary); at resolution h only radii in [scale_min, scale_max] are
// observable. scale_min >= 4h, scale_max <= diameter.
struct BoundarySpec {
    double scale_min = 0.0;    // 0 means default 8h
    double scale_max = 0.0;    // 0 means default diameter/8
    double density_delta = 0.2;  // in (0, 1/2]

    BoundarySpec resolved(const DiscreteSpace& space) const;
};

// Points where both mu(B(x,r) & E) and mu(B(x,r) \ E) are positive at
// r = scale_min. Mass monotonicity makes this equivalent to positivity at
// every observable radius.
IndicatorSet regularized_boundary(const DiscreteSpace& space, const IndicatorSet& E,
                                  const BoundarySpec& spec);

// Points whose density ratio stays delta-balanced at some dyadic radius in
// the window: max_r min(theta_r, 1 - theta_r) >= density_delta, intersected
// with the regularized boundary so the containment the continuum definitions
// guarantee survives discretization.
IndicatorSet measure_theoretic_boundary(const DiscreteSpace& space, const IndicatorSet& E,
                                        const BoundarySpec& spec);

// Codimension-t Minkowski content at scale r: r^(-t) * sum mu(B(x_i, r)) over
// a greedy maximal r-separated net of S. An upper-bound cover; slopes across
// scales are what carry information, not absolute values.
struct ContentValue {
    double r = 0.0;
    double value = 0.0;
    std::size_t balls = 0;
};
ContentValue minkowski_content(const DiscreteSpace& space, const std::vector<std::size_t>& S,
                               double r, double t);

// Greedy multi-scale Hausdorff-type content: repeatedly choose the ball
// (center in S, dyadic radius <= r_max) minimizing mu(B)/radius^t per newly
// covered point of S. Returns the chosen cover alongside the value.
struct HausdorffCover {
    ContentValue content;
    std::vector<std::size_t> centers;
    std::vector<double> radii;
};
HausdorffCover hausdorff_content(const DiscreteSpace& space, const std::vector<std::size_t>& S,
                                 double r_max, double t);

// Log-log slope scan over a content table. For each t the slope of
// log content vs log r is estimated over the interior scales (one scale
// dropped at each end when enough scales exist). The slope decreases in t
// and crosses zero at the codimension (for packing contents this is exact:
// slope(t) = slope(log net mass) - t), so the bracket is the first grid
// exponent whose slope drops below -slope_tol together with the last valid
// exponent before it. slope_tol is only a noise dead band for estimators
// with a flat convergent regime (greedy covers); 0 is exact for packing
// contents and gives the unbiased crossing.
struct CodimEstimate {
    std::vector<double> scales;
    std::vector<double> t_grid;
    std::vector<std::vector<double>> contents;  // contents[ti][ri]
    std::vector<double> slopes;                 // per t
    double lower = 0.0, upper = 0.0;            // bracket
    bool conclusive = false;
    std::string note;
};
CodimEstimate estimate_codimension(
    const std::vector<double>& t_grid, const std::vector<double>& scales,
    const std::function<double(double t, double r)>& content_fn, double slope_tol = 0.1);

// Ratio test for the fractional codimension: energy_levels(s) returns the
// depth-indexed contributions of P_s; their successive ratio converges to a
// geometric rate rho(s) with rho < 1 exactly when P_s is finite. s values
// with |rho - 1| <= margin are left unclassified; the bracket spans the
// largest convergent and smallest divergent classified s.
struct FractionalCodim {
    std::vector<double> s_grid;
    std::vector<double> rates;      // estimated rho per s
    std::vector<int> verdict;       // -1 convergent, 0 unclassified, +1 divergent
    double lower = 0.0, upper = 0.0;
    bool conclusive = false;
    std::string note;
};
FractionalCodim fractional_codimension(
    const std::vector<double>& s_grid,
    const std::function<std::vector<double>(double s)>& energy_levels, double margin = 0.02);

// Depth-indexed level energies for a rasterized set: contribution of dyadic
// distance bands [2^-(l+1), 2^-l) to the two-sided perimeter sum, computed
// with the continuum ball volume of the ambient box (exact for the uniform
// raster measure; relative error O(h/d) against discrete ball counts).
// Suitable as the energy_levels argument of fractional_codimension.
std::vector<double> dyadic_band_energies(const DiscreteSpace& space, const IndicatorSet& E,
                                         double s, int level_min, int level_max);

// Full chain report: Minkowski codim of the regularized boundary, fractional
// codim of the set, Hausdorff codim of the density boundary, plus the
// ordering verdict codim_M(del+ E) <= codim_F(E) <= codim_H(del* E) checked
// up to bracket widths.
struct ChainReport {
    CodimEstimate minkowski;
    FractionalCodim fractional;
    CodimEstimate hausdorff;
    bool ordering_ok = false;
    bool strict = false;
    bool partial = false;  // some leg inconclusive
    std::string note;
};

struct ChainConfig {
    BoundarySpec plus_spec;             // window for the regularized boundary
    BoundarySpec star_spec;             // window for the density boundary
    std::vector<double> t_grid;
    std::vector<double> mink_scales;
    std::vector<double> haus_scales;    // r_max values for the greedy content
    std::vector<double> s_grid;
    int band_min = 3, band_max = 7;     // dyadic bands for the fractional leg
    double margin = 0.02;
    double mink_slope_tol = 0.0;        // packing slopes are exact in t
    double haus_slope_tol = 0.05;       // greedy covers need a dead band
};
ChainConfig default_chain_config(const DiscreteSpace& space);

ChainReport codim_chain_report(const DiscreteSpace& space, const IndicatorSet& E,
                               const ChainConfig& config,
                               // exact interval structure when available (fat Cantor):
                               const FatCantorSet* exact = nullptr);

std::vector<std::size_t> set_to_indices(const IndicatorSet& S);

// Greedy maximal r-separated subnet of S (ascending index order, so the
// result is deterministic). The open r-balls around the net cover S.
std::vector<std::size_t> greedy_separated_net(const DiscreteSpace& space,
                                              const std::vector<std::size_t>& S, double r);

}  // namespace fracperim
