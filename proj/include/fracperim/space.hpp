#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fracperim {

// Finite metric measure space. Points carry positive weights; the metric is
// either Euclidean on 1-D/2-D coordinates or an explicit dense table.
// resolution_h is the sampling scale: no two distinct points lie closer than
// resolution_h / 2, and geometric claims are only asserted at scales >= 4h.
struct DiscreteSpace {
    int dim = 1;  // 1 or 2; ignored when a metric table is present
    std::vector<double> xs;
    std::vector<double> ys;  // empty for dim == 1
    std::vector<double> weights;
    double resolution_h = 0.0;
    std::vector<double> table;  // dense row-major n*n distances; empty for Euclidean

    std::size_t size() const { return weights.size(); }
    bool has_table() const { return !table.empty(); }

    double dist(std::size_t i, std::size_t j) const;
    double total_mass() const;
    // Exact for table metrics and coordinate grids; above the dense-scan size
    // cutoff it evaluates extreme-direction candidates, which is exact for any
    // axis-aligned raster.
    double diameter() const;

    // Structural validation: positive weights, positive h, min separation
    // >= h/2, metric table symmetry/triangle checks. Pairwise checks switch to
    // deterministic sampling above the dense cutoff (4096 points).
    void validate() const;
};

struct IndicatorSet {
    std::vector<std::uint8_t> in;

    std::size_t size() const { return in.size(); }
    bool contains(std::size_t i) const { return in[i] != 0; }
    std::size_t count() const;
    IndicatorSet complement() const;
    bool empty() const;
    bool full() const;
};

IndicatorSet make_empty_set(std::size_t n);
IndicatorSet make_full_set(std::size_t n);

// Weighted mass of the open ball B(center, r) = { y : d(center, y) < r }.
// Plain O(n) scan; exact tie semantics (distance strictly below r).
double ball_measure(const DiscreteSpace& space, std::size_t center, double r);

// Accelerated open-ball mass queries with the same strict-inequality
// semantics as ball_measure. 1-D spaces use a sorted prefix table, 2-D spaces
// a per-row prefix table with exact boundary fix-up, table metrics a scan.
class BallOracle {
  public:
    explicit BallOracle(const DiscreteSpace& space);
    double mass(std::size_t center, double r) const;
    // Mass around an arbitrary coordinate point (Euclidean spaces only).
    double mass_at(double x, double y, double r) const;
    const DiscreteSpace& space() const { return *space_; }

  private:
    const DiscreteSpace* space_;
    // 1-D: global order; 2-D: row buckets.
    std::vector<std::size_t> order_;
    std::vector<double> sorted_x_;
    std::vector<double> prefix_;
    struct Row {
        double y;
        std::size_t begin, end;  // range in order_/sorted_x_/prefix_
    };
    std::vector<Row> rows_;
};

// Largest observed mu(B(x,2r)) / mu(B(x,r)) over sampled centers and dyadic
// radii in [4h, diam/4]. A doubling-constant estimate, not a certified bound.
struct DoublingEstimate {
    double c_mu = 0.0;
    double worst_radius = 0.0;
    std::size_t worst_center = 0;
};
DoublingEstimate doubling_estimate(const DiscreteSpace& space);

// Greedy farthest-point net: centers pairwise >= eps apart, maximal, so the
// open eps-balls cover and the eps/2-balls are disjoint. Deterministic:
// starts at index 0, ties broken by lowest index.
struct BallCover {
    double eps = 0.0;
    std::vector<std::size_t> centers;
    int max_overlap_2eps = 0;  // max count of centers within 2*eps of a point
};
BallCover bounded_overlap_cover(const DiscreteSpace& space, double eps);

// Normalized tent functions on a cover: psi_i(x) = max(0, 1 - max(0, d(x,c_i)
// - eps)/eps), phi_i = psi_i / sum_j psi_j. Supported in 2*eps balls; the
// unnormalized sum is >= 1 at covered points so phi is well defined.
struct PartitionOfUnity {
    struct Entry {
        std::uint32_t center_index;  // index into cover.centers
        double phi;
    };
    std::vector<std::vector<Entry>> at_point;
};
PartitionOfUnity partition_of_unity(const DiscreteSpace& space, const BallCover& cover);

// Discrete mollification: f_eps(x) = sum_i mean_{B_i}(f) phi_i(x) with
// weighted means over the open cover balls. Preserves constants and range.
std::vector<double> discrete_convolution(const DiscreteSpace& space, const BallCover& cover,
                                         const PartitionOfUnity& pou,
                                         const std::vector<double>& f);

}  // namespace fracperim
