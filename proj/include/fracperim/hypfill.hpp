#pragma once

#include "fracperim/space.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace fracperim {

// Hyperbolic filling of a bounded base space. The base is rescaled on ingest
// so its diameter is 1/2 < 1; level n carries a maximal alpha^-n separated
// net, vertices (z, n) join neighbours whose balls meet, and the uniformizing
// density e^(-eps * depth) with eps = log(alpha) turns the filling into a
// bounded geodesic-ish graph whose boundary recovers the base.
struct FillingParams {
    double alpha = 2.0;   // > 1
    double tau = 2.0;     // > 1
    int levels = 5;       // N; requires alpha^-N >= 2h after rescale
    double beta_ratio = 0.5;  // beta / eps, in (0, 1]
};

struct FillingVertex {
    std::uint32_t base_index = 0;  // index of the net point in the base space
    std::uint16_t level = 0;
    std::uint16_t bfs_depth = 0;   // graph distance to the root, unit edges
    double mu_hat = 0.0;           // e^(-beta n) * nu(B(z, alpha^-n))
};

struct FillingEdge {
    std::uint32_t u = 0, v = 0;    // vertex indices, u < v
    double unif_length = 0.0;      // closed-form uniformized length
};

struct HyperbolicFilling {
    FillingParams params;
    double rescale = 1.0;          // multiplier applied to base distances
    double eps = 0.0;              // log(alpha)
    double beta = 0.0;             // beta_ratio * eps
    std::vector<std::vector<std::uint32_t>> nets;  // base indices per level
    std::vector<FillingVertex> vertices;
    std::vector<FillingEdge> edges;
    double attachment_radius = 0.0;  // closed-form tail below level N

    std::size_t vertex_count() const { return vertices.size(); }
    std::vector<std::vector<std::pair<std::uint32_t, double>>> adjacency() const;
};

HyperbolicFilling build_filling(const DiscreteSpace& base, const FillingParams& params);

// Uniformized graph distance between two vertices (Dijkstra over the
// closed-form edge lengths).
double uniformized_distance(const HyperbolicFilling& filling, std::uint32_t u, std::uint32_t v);
std::vector<double> uniformized_distances_from(const HyperbolicFilling& filling,
                                               std::uint32_t source);

// mu_beta mass of the uniformized ball around an attached base point. The
// base point zeta is identified with its nearest level-N vertex p; distances
// add the attachment tail, so the ball of radius r around zeta is the ball of
// radius r - attachment_radius around p. Edge mass is prorated by the
// uniformized fraction of the edge inside the ball.
struct AttachedPoint {
    std::uint32_t base_index = 0;
    std::uint32_t vertex = 0;   // nearest level-N vertex
};
AttachedPoint attach_base_point(const HyperbolicFilling& filling, const DiscreteSpace& base,
                                std::size_t base_index);
double mu_beta_ball(const HyperbolicFilling& filling, const std::vector<double>& dist_from_vertex,
                    double r);
double mu_beta_total(const HyperbolicFilling& filling);

// Ratio table for the codimension relation
//   mu_beta(B_eps(zeta, r)) * r^(-beta/eps) / nu(B_Z(zeta, r)) asymp 1.
struct CodimRatioRow {
    std::uint32_t base_index = 0;
    double r = 0.0;
    double mu_ball = 0.0;
    double nu_ball = 0.0;
    double ratio = 0.0;
};
struct CodimRelationReport {
    std::vector<CodimRatioRow> rows;
    double min_ratio = 0.0, max_ratio = 0.0;
    double spread = 0.0;  // max/min
};
CodimRelationReport verify_codim_relation(const HyperbolicFilling& filling,
                                          const DiscreteSpace& base,
                                          const std::vector<std::size_t>& sample_points,
                                          const std::vector<double>& radii);

// Content comparison along the boundary trace: nu(A) against the greedy
// codimension-(beta/eps) content of A measured with mu_beta balls at scale
// delta. The ratio nu(A)/content must stay bounded above as delta shrinks;
// zero content with nu(A) > 0 is flagged as a violation.
struct TraceCheckRow {
    double delta = 0.0;
    double content = 0.0;
    double ratio = 0.0;
};
struct TraceCheckReport {
    double nu_A = 0.0;
    std::vector<TraceCheckRow> rows;
    bool violation = false;
};
TraceCheckReport boundary_trace_check(const HyperbolicFilling& filling, const DiscreteSpace& base,
                                      const std::vector<std::size_t>& A,
                                      const std::vector<double>& deltas);

}  // namespace fracperim
