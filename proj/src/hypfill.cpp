#include "fracperim/hypfill.hpp"

#include "fracperim/summation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

namespace fracperim {

std::vector<std::vector<std::pair<std::uint32_t, double>>> HyperbolicFilling::adjacency() const {
    std::vector<std::vector<std::pair<std::uint32_t, double>>> adj(vertices.size());
    for (const FillingEdge& e : edges) {
        adj[e.u].push_back({e.v, e.unif_length});
        adj[e.v].push_back({e.u, e.unif_length});
    }
    return adj;
}

HyperbolicFilling build_filling(const DiscreteSpace& base, const FillingParams& params) {
    if (!(params.alpha > 1.0)) throw std::invalid_argument("filling alpha must exceed 1");
    if (!(params.tau > 1.0)) throw std::invalid_argument("filling tau must exceed 1");
    if (params.levels < 1 || params.levels > 30)
        throw std::invalid_argument("filling levels must lie in [1, 30]");
    if (!(params.beta_ratio > 0.0 && params.beta_ratio <= 1.0))
        throw std::invalid_argument("beta_ratio must lie in (0, 1]");
    if (base.size() < 2) throw std::invalid_argument("filling base needs >= 2 points");

    HyperbolicFilling fill;
    fill.params = params;
    double diam = base.diameter();
    if (!(diam > 0.0)) throw std::invalid_argument("filling base has zero diameter");
    fill.rescale = 0.5 / diam;
    fill.eps = std::log(params.alpha);
    fill.beta = params.beta_ratio * fill.eps;

    int N = params.levels;
    double h_resc = fill.rescale * base.resolution_h;
    if (std::pow(params.alpha, -N) < 2.0 * h_resc)
        throw std::invalid_argument("filling levels exceed the base resolution");

    auto dist_resc = [&](std::size_t i, std::size_t j) { return fill.rescale * base.dist(i, j); };

    // maximal alpha^-n separated nets, greedy in index order
    fill.nets.resize(static_cast<std::size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) {
        double sep = std::pow(params.alpha, -n);
        auto& net = fill.nets[static_cast<std::size_t>(n)];
        for (std::size_t i = 0; i < base.size(); ++i) {
            bool apart = true;
            for (std::uint32_t c : net)
                if (dist_resc(i, c) < sep) {
                    apart = false;
                    break;
                }
            if (apart) net.push_back(static_cast<std::uint32_t>(i));
        }
    }

    BallOracle oracle(base);
    std::vector<std::uint32_t> first_of_level(static_cast<std::size_t>(N) + 2, 0);
    for (int n = 0; n <= N; ++n) {
        first_of_level[static_cast<std::size_t>(n)] =
            static_cast<std::uint32_t>(fill.vertices.size());
        double radius = std::pow(params.alpha, -n);
        for (std::uint32_t z : fill.nets[static_cast<std::size_t>(n)]) {
            FillingVertex v;
            v.base_index = z;
            v.level = static_cast<std::uint16_t>(n);
            v.mu_hat = std::exp(-fill.beta * n) * oracle.mass(z, radius / fill.rescale);
            fill.vertices.push_back(v);
        }
    }
    first_of_level[static_cast<std::size_t>(N) + 1] =
        static_cast<std::uint32_t>(fill.vertices.size());

    // edges: same level when closed balls of radius tau alpha^-n meet, adjacent
    // levels when the open balls B(z, alpha^-n), B(z', alpha^-m) meet
    auto add_edge = [&](std::uint32_t u, std::uint32_t v, double len) {
        if (u > v) std::swap(u, v);
        fill.edges.push_back({u, v, len});
    };
    double eps = fill.eps;
    for (int n = 0; n <= N; ++n) {
        double scale = std::pow(params.alpha, -n);
        double same_len = 2.0 * std::exp(-eps * n) * (1.0 - std::exp(-eps / 2.0)) / eps;
        for (std::uint32_t a = first_of_level[static_cast<std::size_t>(n)];
             a < first_of_level[static_cast<std::size_t>(n) + 1]; ++a)
            for (std::uint32_t b = a + 1; b < first_of_level[static_cast<std::size_t>(n) + 1];
                 ++b)
                if (dist_resc(fill.vertices[a].base_index, fill.vertices[b].base_index) <=
                    2.0 * params.tau * scale)
                    add_edge(a, b, same_len);
        if (n == N) continue;
        double scale_next = std::pow(params.alpha, -(n + 1));
        double cross_len = std::exp(-eps * n) * (1.0 - std::exp(-eps)) / eps;
        for (std::uint32_t a = first_of_level[static_cast<std::size_t>(n)];
             a < first_of_level[static_cast<std::size_t>(n) + 1]; ++a)
            for (std::uint32_t b = first_of_level[static_cast<std::size_t>(n) + 1];
                 b < first_of_level[static_cast<std::size_t>(n) + 2]; ++b)
                if (dist_resc(fill.vertices[a].base_index, fill.vertices[b].base_index) <
                    scale + scale_next)
                    add_edge(a, b, cross_len);
    }

    // unit-edge BFS depth from the root; maximality of each net guarantees a
    // parent one level up, so depth equals level
    std::vector<int> depth(fill.vertices.size(), -1);
    std::vector<std::vector<std::uint32_t>> adj(fill.vertices.size());
    for (const FillingEdge& e : fill.edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<std::uint32_t> queue{0};
    depth[0] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        std::uint32_t u = queue[head];
        for (std::uint32_t w : adj[u])
            if (depth[w] < 0) {
                depth[w] = depth[u] + 1;
                queue.push_back(w);
            }
    }
    for (std::size_t i = 0; i < fill.vertices.size(); ++i) {
        if (depth[i] < 0) throw std::logic_error("filling graph is disconnected");
        fill.vertices[i].bfs_depth = static_cast<std::uint16_t>(depth[i]);
    }

    fill.attachment_radius = std::exp(-eps * N) / eps;
    return fill;
}

std::vector<double> uniformized_distances_from(const HyperbolicFilling& filling,
                                               std::uint32_t source) {
    if (source >= filling.vertices.size()) throw std::invalid_argument("vertex out of range");
    auto adj = filling.adjacency();
    std::vector<double> dist(filling.vertices.size(), std::numeric_limits<double>::infinity());
    using Item = std::pair<double, std::uint32_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
    dist[source] = 0.0;
    heap.push({0.0, source});
    while (!heap.empty()) {
        auto [d, u] = heap.top();
        heap.pop();
        if (d > dist[u]) continue;
        for (auto [v, len] : adj[u])
            if (dist[u] + len < dist[v]) {
                dist[v] = dist[u] + len;
                heap.push({dist[v], v});
            }
    }
    return dist;
}

double uniformized_distance(const HyperbolicFilling& filling, std::uint32_t u, std::uint32_t v) {
    if (v >= filling.vertices.size()) throw std::invalid_argument("vertex out of range");
    return uniformized_distances_from(filling, u)[v];
}

AttachedPoint attach_base_point(const HyperbolicFilling& filling, const DiscreteSpace& base,
                                std::size_t base_index) {
    if (base_index >= base.size()) throw std::invalid_argument("base index out of range");
    int N = filling.params.levels;
    AttachedPoint at;
    at.base_index = static_cast<std::uint32_t>(base_index);
    double best = std::numeric_limits<double>::infinity();
    for (std::uint32_t v = 0; v < filling.vertices.size(); ++v) {
        if (filling.vertices[v].level != N) continue;
        double d = base.dist(base_index, filling.vertices[v].base_index);
        if (d < best) {
            best = d;
            at.vertex = v;
        }
    }
    return at;
}

double mu_beta_ball(const HyperbolicFilling& filling, const std::vector<double>& dist_from_vertex,
                    double r) {
    if (dist_from_vertex.size() != filling.vertices.size())
        throw std::invalid_argument("distance table size mismatch");
    double reach = r - filling.attachment_radius;
    if (reach <= 0.0) return 0.0;
    auto clamp = [](double x, double hi) { return std::min(std::max(x, 0.0), hi); };
    CompensatedSum total;
    for (const FillingEdge& e : filling.edges) {
        double L = e.unif_length;
        double cu = clamp(reach - dist_from_vertex[e.u], L);
        double cv = clamp(reach - dist_from_vertex[e.v], L);
        double covered = std::min(L, cu + cv);
        if (covered <= 0.0) continue;
        total.add((covered / L) * (filling.vertices[e.u].mu_hat + filling.vertices[e.v].mu_hat));
    }
    return total.value();
}

double mu_beta_total(const HyperbolicFilling& filling) {
    CompensatedSum total;
    for (const FillingEdge& e : filling.edges)
        total.add(filling.vertices[e.u].mu_hat + filling.vertices[e.v].mu_hat);
    return total.value();
}

CodimRelationReport verify_codim_relation(const HyperbolicFilling& filling,
                                          const DiscreteSpace& base,
                                          const std::vector<std::size_t>& sample_points,
                                          const std::vector<double>& radii) {
    CodimRelationReport report;
    double exponent = filling.beta / filling.eps;
    for (std::size_t zeta : sample_points) {
        AttachedPoint at = attach_base_point(filling, base, zeta);
        std::vector<double> dist = uniformized_distances_from(filling, at.vertex);
        for (double r : radii) {
            CodimRatioRow row;
            row.base_index = static_cast<std::uint32_t>(zeta);
            row.r = r;
            row.mu_ball = mu_beta_ball(filling, dist, r);
            row.nu_ball = ball_measure(base, zeta, r / filling.rescale);
            row.ratio = row.nu_ball > 0.0
                            ? row.mu_ball * std::pow(r, -exponent) / row.nu_ball
                            : 0.0;
            report.rows.push_back(row);
        }
    }
    if (!report.rows.empty()) {
        report.min_ratio = std::numeric_limits<double>::infinity();
        for (const CodimRatioRow& row : report.rows) {
            report.min_ratio = std::min(report.min_ratio, row.ratio);
            report.max_ratio = std::max(report.max_ratio, row.ratio);
        }
        report.spread = report.min_ratio > 0.0 ? report.max_ratio / report.min_ratio
                                               : std::numeric_limits<double>::infinity();
    }
    return report;
}

TraceCheckReport boundary_trace_check(const HyperbolicFilling& filling, const DiscreteSpace& base,
                                      const std::vector<std::size_t>& A,
                                      const std::vector<double>& deltas) {
    TraceCheckReport report;
    CompensatedSum nu;
    for (std::size_t i : A) {
        if (i >= base.size()) throw std::invalid_argument("trace set index out of range");
        nu.add(base.weights[i]);
    }
    report.nu_A = nu.value();
    double exponent = filling.beta / filling.eps;
    for (double delta : deltas) {
        if (!(delta > 0.0)) throw std::invalid_argument("trace scale must be positive");
        // greedy delta-separated net of A in the rescaled base metric
        std::vector<std::size_t> net;
        for (std::size_t p : A) {
            bool apart = true;
            for (std::size_t c : net)
                if (filling.rescale * base.dist(p, c) < delta) {
                    apart = false;
                    break;
                }
            if (apart) net.push_back(p);
        }
        CompensatedSum mass;
        for (std::size_t c : net) {
            AttachedPoint at = attach_base_point(filling, base, c);
            std::vector<double> dist = uniformized_distances_from(filling, at.vertex);
            mass.add(mu_beta_ball(filling, dist, delta));
        }
        TraceCheckRow row;
        row.delta = delta;
        row.content = std::pow(delta, -exponent) * mass.value();
        row.ratio = row.content > 0.0 ? report.nu_A / row.content
                                      : std::numeric_limits<double>::infinity();
        if (row.content <= 0.0 && report.nu_A > 0.0) report.violation = true;
        report.rows.push_back(row);
    }
    return report;
}

}  // namespace fracperim
