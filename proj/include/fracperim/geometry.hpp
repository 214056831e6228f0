#pragma once

#include "fracperim/kernels.hpp"
#include "fracperim/rational.hpp"
#include "fracperim/space.hpp"

#include <vector>

namespace fracperim {

// Fat Cantor construction: at level j, remove the central open interval of
// length a^j from each of the 2^(j-1) surviving closed intervals. Requires
// 0 < a < 1/3 so every removal fits; the limit set keeps measure
// (1-3a)/(1-2a) > 0.
struct FatCantorSpec {
    Rational a;      // removal ratio, in (0, 1/3)
    int depth = 1;   // J >= 1
};

struct FatCantorSet {
    FatCantorSpec spec;
    std::vector<std::vector<Interval>> removed_by_level;  // level j intervals at index j-1
    std::vector<Interval> remaining;                      // 2^J closed intervals, sorted
    std::vector<Interval> removed_sorted() const;
    Rational remaining_length() const;  // sum of remaining interval lengths
    // Closed-form piece length: c_j = (1 - 3a + a(2a)^j) / (2^j (1 - 2a)).
    Rational piece_length(int level) const;
};

FatCantorSet build_fat_cantor(const FatCantorSpec& spec);

// Uniform n-point raster of [0,1] (weight 1/n, midpoint coordinates) with the
// indicator of a union of intervals decided by exact midpoint membership.
struct RasterizedSet {
    DiscreteSpace space;
    IndicatorSet set;
};
RasterizedSet rasterize_interval_union(const std::vector<Interval>& intervals, int n);

// Uniform grid on [0, extent]^dim, weights summing to extent^dim.
DiscreteSpace build_grid_space(int dim, int n, double extent = 1.0);

// Raster cells flanking the removed-interval endpoints, one cell per side of
// every gap the raster resolves (width >= min_width_cells * h). The
// measure-theoretic boundary of a fat Cantor set is exactly its countable
// endpoint set, and this is its honest image at resolution 1/n: finer gaps
// leave no complement cell, so their endpoints are not boundary points of the
// rasterized set. Exact rational arithmetic, deduplicated ascending indices.
std::vector<std::size_t> cantor_boundary_cells(const FatCantorSet& cantor, int n,
                                               int min_width_cells = 4);

// In-phase cells with an axis neighbor of the opposite phase: the one-cell-wide
// image of the set boundary at grid resolution. Requires the build_grid_space
// layout (row-major for dim 2); the domain edge witnesses no interface.
// Ascending indices.
std::vector<std::size_t> phase_interface_cells(const DiscreteSpace& space, const IndicatorSet& E);

// Koch snowflake polygon (side-1 equilateral base, outward bumps) rasterized
// on an n x n grid over a margin-padded bounding box. Vertices live on the
// triangular lattice scaled by 3^-depth and membership is decided by an exact
// even-odd crossing test in the field Q[sqrt(3)], so no raster point is ever
// misclassified by rounding.
struct KochSnowflake {
    int depth = 0;
    std::vector<double> vx, vy;  // polygon vertices, closed implicitly
    RasterizedSet raster;
};
KochSnowflake build_koch_snowflake(int depth, int n, double margin = 0.17);

}  // namespace fracperim
