#include "fracperim/minimize.hpp"

#include "fracperim/summation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace fracperim {

void validate_problem(const DiscreteSpace& space, const MinimizationProblem& problem) {
    if (problem.omega.in.size() != space.size() ||
        problem.exterior_data.in.size() != space.size())
        throw std::invalid_argument("problem indicators must match the space size");
    std::size_t count = problem.omega.count();
    if (count == 0 || count == space.size())
        throw std::invalid_argument("Omega and its complement must both be nonempty");
    if (!(problem.params.s > 0.0 && problem.params.s < 1.0))
        throw std::invalid_argument("exponent s must lie in (0,1)");
}

namespace {

// local kernel evaluator: same formula as kernel_K_s but with O(log n) ball
// masses through one shared oracle
struct KernelClosure {
    const DiscreteSpace& space;
    KernelParams params;
    BallOracle oracle;

    KernelClosure(const DiscreteSpace& sp, const KernelParams& p) : space(sp), params(p), oracle(sp) {}

    double operator()(std::size_t i, std::size_t j) const {
        double d = space.dist(i, j);
        if (d <= 0.0) throw std::domain_error("kernel undefined at coincident points");
        if (params.mode == KernelMode::Interval1D) return std::pow(d, -1.0 - params.s);
        double mi = oracle.mass(i, d);
        double mj = oracle.mass(j, d);
        return 2.0 / (std::pow(d, params.s) * (mi + mj));
    }
};

class Dinic {
  public:
    explicit Dinic(std::size_t nodes) : g_(nodes), level_(nodes), it_(nodes) {}

    void add_edge(std::uint32_t u, std::uint32_t v, double cap_uv, double cap_vu) {
        g_[u].push_back({v, cap_uv, static_cast<std::uint32_t>(g_[v].size())});
        g_[v].push_back({u, cap_vu, static_cast<std::uint32_t>(g_[u].size()) - 1});
        max_cap_ = std::max(max_cap_, std::max(cap_uv, cap_vu));
    }

    double max_flow(std::uint32_t s, std::uint32_t t) {
        eps_ = max_cap_ * 1e-13;
        CompensatedSum total;
        while (bfs(s, t)) {
            std::fill(it_.begin(), it_.end(), 0u);
            while (true) {
                double pushed = dfs(s, t, std::numeric_limits<double>::infinity());
                if (pushed <= 0.0) break;
                total.add(pushed);
            }
        }
        return total.value();
    }

    // nodes reachable from s in the residual network (call after max_flow)
    std::vector<std::uint8_t> min_cut_side(std::uint32_t s) const {
        std::vector<std::uint8_t> seen(g_.size(), 0);
        std::vector<std::uint32_t> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            std::uint32_t u = stack.back();
            stack.pop_back();
            for (const Arc& a : g_[u])
                if (!seen[a.to] && a.cap > eps_) {
                    seen[a.to] = 1;
                    stack.push_back(a.to);
                }
        }
        return seen;
    }

  private:
    struct Arc {
        std::uint32_t to;
        double cap;
        std::uint32_t rev;
    };

    bool bfs(std::uint32_t s, std::uint32_t t) {
        std::fill(level_.begin(), level_.end(), -1);
        std::vector<std::uint32_t> queue{s};
        level_[s] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            std::uint32_t u = queue[head];
            for (const Arc& a : g_[u])
                if (level_[a.to] < 0 && a.cap > eps_) {
                    level_[a.to] = level_[u] + 1;
                    queue.push_back(a.to);
                }
        }
        return level_[t] >= 0;
    }

    double dfs(std::uint32_t u, std::uint32_t t, double limit) {
        if (u == t) return limit;
        for (std::uint32_t& i = it_[u]; i < g_[u].size(); ++i) {
            Arc& a = g_[u][i];
            if (a.cap <= eps_ || level_[a.to] != level_[u] + 1) continue;
            double pushed = dfs(a.to, t, std::min(limit, a.cap));
            if (pushed > 0.0) {
                a.cap -= pushed;
                g_[a.to][a.rev].cap += pushed;
                return pushed;
            }
        }
        return 0.0;
    }

    std::vector<std::vector<Arc>> g_;
    std::vector<int> level_;
    std::vector<std::uint32_t> it_;
    double max_cap_ = 0.0;
    double eps_ = 0.0;
};

// cut value of a labeling, summed in fixed (terminal, then edge) order
double cut_value(const CutGraph& graph, const std::vector<std::uint8_t>& label) {
    CompensatedSum total;
    for (std::size_t k = 0; k < graph.omega_points.size(); ++k)
        total.add(label[k] ? graph.sink_cap[k] : graph.source_cap[k]);
    for (const CutGraph::Edge& e : graph.edges)
        if (label[e.a] != label[e.b]) total.add(e.w);
    return total.value();
}

std::uint64_t pairs_meeting_omega(std::size_t n, std::size_t omega_count) {
    std::uint64_t k = omega_count, m = n - omega_count;
    return k * (k - 1) / 2 + k * m;
}

}  // namespace

CutGraph build_cut_graph(const DiscreteSpace& space, const MinimizationProblem& problem) {
    validate_problem(space, problem);
    std::size_t n = space.size();
    CutGraph graph;
    std::vector<std::uint32_t> pos(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        if (problem.omega.in[i]) {
            pos[i] = static_cast<std::uint32_t>(graph.omega_points.size());
            graph.omega_points.push_back(i);
        }
    graph.source_cap.assign(graph.omega_points.size(), 0.0);
    graph.sink_cap.assign(graph.omega_points.size(), 0.0);

    KernelClosure kernel(space, problem.params);
    for (std::size_t i = 0; i < n; ++i) {
        bool oi = problem.omega.in[i];
        for (std::size_t j = i + 1; j < n; ++j) {
            bool oj = problem.omega.in[j];
            if (!oi && !oj) continue;  // pair never enters J on this family
            double w = kernel(i, j) * space.weights[i] * space.weights[j];
            if (oi && oj) {
                graph.edges.push_back({pos[i], pos[j], w});
            } else {
                std::size_t inside = oi ? i : j;
                std::size_t fixed = oi ? j : i;
                if (problem.exterior_data.in[fixed])
                    graph.source_cap[pos[inside]] += w;
                else
                    graph.sink_cap[pos[inside]] += w;
            }
        }
    }
    return graph;
}

MinimizerResult solve_exact(const DiscreteSpace& space, const MinimizationProblem& problem) {
    CutGraph graph = build_cut_graph(space, problem);
    std::size_t k = graph.omega_points.size();
    std::uint32_t source = static_cast<std::uint32_t>(k);
    std::uint32_t sink = static_cast<std::uint32_t>(k) + 1;
    Dinic dinic(k + 2);
    for (std::size_t i = 0; i < k; ++i) {
        if (graph.source_cap[i] > 0.0)
            dinic.add_edge(source, static_cast<std::uint32_t>(i), graph.source_cap[i], 0.0);
        if (graph.sink_cap[i] > 0.0)
            dinic.add_edge(static_cast<std::uint32_t>(i), sink, graph.sink_cap[i], 0.0);
    }
    for (const CutGraph::Edge& e : graph.edges) dinic.add_edge(e.a, e.b, e.w, e.w);

    MinimizerResult result;
    result.flow = dinic.max_flow(source, sink);
    std::vector<std::uint8_t> reach = dinic.min_cut_side(source);

    std::vector<std::uint8_t> label(k, 0);
    for (std::size_t i = 0; i < k; ++i) label[i] = reach[i];  // source side carries label 1
    result.energy = cut_value(graph, label);
    result.duality_gap = std::abs(result.energy - result.flow);
    result.pair_count = pairs_meeting_omega(space.size(), k);

    result.minimizer = problem.exterior_data;
    for (std::size_t i = 0; i < k; ++i) result.minimizer.in[graph.omega_points[i]] = label[i];
    return result;
}

MinimizerResult brute_force_minimizer(const DiscreteSpace& space,
                                      const MinimizationProblem& problem) {
    validate_problem(space, problem);
    std::vector<std::size_t> omega_points;
    for (std::size_t i = 0; i < space.size(); ++i)
        if (problem.omega.in[i]) omega_points.push_back(i);
    std::size_t k = omega_points.size();
    if (k > 20) throw std::invalid_argument("brute force refuses |Omega| > 20");

    auto labeling = [&](std::uint64_t mask) {
        IndicatorSet E = problem.exterior_data;
        for (std::size_t b = 0; b < k; ++b)
            E.in[omega_points[b]] = (mask >> b) & 1u;
        return E;
    };

    std::uint64_t total = 1ull << k;
    std::vector<double> energy(total);
    double best = std::numeric_limits<double>::infinity();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        IndicatorSet E = labeling(mask);
        energy[mask] = functional_J(space, problem.params, E, problem.omega);
        best = std::min(best, energy[mask]);
    }

    // gather exact and near ties, prefer the lattice minimum (intersection of
    // the near-optimal family), fall back to the lexicographically smallest
    double tie_tol = 1e-12 * std::max(best, 1e-300);
    std::vector<std::uint64_t> ties;
    for (std::uint64_t mask = 0; mask < total; ++mask)
        if (energy[mask] <= best + tie_tol) ties.push_back(mask);

    auto lex_less = [&](std::uint64_t a, std::uint64_t b) {
        for (std::size_t bit = 0; bit < k; ++bit) {
            unsigned la = (a >> bit) & 1u, lb = (b >> bit) & 1u;
            if (la != lb) return la < lb;
        }
        return false;
    };
    std::uint64_t chosen = ties.front();
    for (std::uint64_t m : ties)
        if (lex_less(m, chosen)) chosen = m;
    if (ties.size() > 1) {
        std::uint64_t meet = ties.front();
        for (std::uint64_t m : ties) meet &= m;
        if (energy[meet] <= best + tie_tol) chosen = meet;
    }

    MinimizerResult result;
    result.minimizer = labeling(chosen);
    result.energy = energy[chosen];
    result.flow = result.energy;
    result.duality_gap = 0.0;
    result.pair_count = pairs_meeting_omega(space.size(), k);
    return result;
}

SupersolutionCheck check_supersolution(const DiscreteSpace& space, const KernelParams& params,
                                       const IndicatorSet& E, const IndicatorSet& omega,
                                       const IndicatorSet& A, double rel_tol) {
    if (E.in.size() != space.size() || omega.in.size() != space.size() ||
        A.in.size() != space.size())
        throw std::invalid_argument("indicator size mismatch");
    for (std::size_t i = 0; i < space.size(); ++i)
        if (A.in[i] && !(E.in[i] && omega.in[i]))
            throw std::invalid_argument("A must be contained in E & Omega");

    IndicatorSet not_E = E.complement();
    IndicatorSet E_minus_A = E;
    for (std::size_t i = 0; i < space.size(); ++i)
        if (A.in[i]) E_minus_A.in[i] = 0;

    SupersolutionCheck check;
    check.lhs = interaction_L_s(space, params, A, not_E);
    check.rhs = interaction_L_s(space, params, E_minus_A, A);
    double slack = rel_tol * std::max({check.lhs, check.rhs, 1.0});
    check.holds = check.lhs <= check.rhs + slack;
    return check;
}

namespace {

// interface points of a labeled problem: Omega points with an opposite-label
// point within 2h
std::vector<std::size_t> interface_points(const DiscreteSpace& space,
                                          const MinimizationProblem& problem,
                                          const IndicatorSet& E) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < space.size(); ++i) {
        if (!problem.omega.in[i]) continue;
        bool found = false;
        for (std::size_t j = 0; j < space.size() && !found; ++j)
            if (j != i && E.in[j] != E.in[i] && space.dist(i, j) <= 2.0 * space.resolution_h)
                found = true;
        if (found) out.push_back(i);
    }
    return out;
}

// admissible dyadic radii at x0: R0 = 4h 2^k with B(x0, 2 R0) inside Omega
std::vector<double> admissible_radii(const DiscreteSpace& space,
                                     const MinimizationProblem& problem, std::size_t x0) {
    std::vector<double> radii;
    for (double R = 4.0 * space.resolution_h;; R *= 2.0) {
        bool inside = true;
        for (std::size_t j = 0; j < space.size() && inside; ++j)
            if (space.dist(x0, j) < 2.0 * R && !problem.omega.in[j]) inside = false;
        if (!inside) break;
        radii.push_back(R);
        if (R > space.diameter()) break;
    }
    return radii;
}

}  // namespace

DensityReport verify_uniform_density(const DiscreteSpace& space,
                                     const MinimizationProblem& problem,
                                     const IndicatorSet& E) {
    validate_problem(space, problem);
    if (E.in.size() != space.size()) throw std::invalid_argument("indicator size mismatch");
    DensityReport report;
    std::vector<std::size_t> interfaces = interface_points(space, problem, E);
    report.interface_points = interfaces.size();
    for (std::size_t x0 : interfaces) {
        for (double R : admissible_radii(space, problem, x0)) {
            double m_in = 0.0, m_out = 0.0;
            for (std::size_t j = 0; j < space.size(); ++j)
                if (space.dist(x0, j) < R) (E.in[j] ? m_in : m_out) += space.weights[j];
            double total = m_in + m_out;
            if (total <= 0.0) continue;
            DensityBall ball;
            ball.center = x0;
            ball.radius = R;
            ball.ratio_in = m_in / total;
            ball.ratio_out = m_out / total;
            report.balls.push_back(ball);
            report.min_ratio =
                std::min({report.min_ratio, ball.ratio_in, ball.ratio_out});
        }
    }

    DoublingEstimate doubling = doubling_estimate(space);
    double C0 = doubling.c_mu;
    double Q = std::log2(std::max(C0, 1.0 + 1e-12));
    report.measured_Q = Q;
    BallOracle oracle(space);
    double h = space.resolution_h, diam = space.diameter();
    double CQ = 0.0;
    std::size_t stride = std::max<std::size_t>(1, space.size() / 512);
    for (std::size_t i = 0; i < space.size(); i += stride)
        for (double r = 4.0 * h; r <= diam / 4.0; r *= 2.0)
            CQ = std::max(CQ, oracle.mass(i, r) / std::pow(r, Q));
    report.measured_CQ = CQ;
    double s = problem.params.s;
    if (CQ > 0.0)
        report.gamma0_reference =
            1.0 / (std::pow(2.0, Q + 1.0) * std::pow(C0, Q / s) * CQ);
    return report;
}

PorosityReport verify_porosity(const DiscreteSpace& space, const MinimizationProblem& problem,
                               const IndicatorSet& E) {
    validate_problem(space, problem);
    if (E.in.size() != space.size()) throw std::invalid_argument("indicator size mismatch");
    PorosityReport report;
    std::size_t n = space.size();

    // inradius of each point within E & Omega and Omega \ E: distance to the
    // nearest point outside the phase
    std::vector<std::uint8_t> in_phase(n, 0), out_phase(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        in_phase[i] = problem.omega.in[i] && E.in[i];
        out_phase[i] = problem.omega.in[i] && !E.in[i];
    }
    double inf = std::numeric_limits<double>::infinity();
    std::vector<double> inrad_in(n, inf), inrad_out(n, inf);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            double d = space.dist(i, j);
            if (!in_phase[j]) inrad_in[i] = std::min(inrad_in[i], d);
            if (!out_phase[j]) inrad_out[i] = std::min(inrad_out[i], d);
        }

    std::vector<std::size_t> interfaces = interface_points(space, problem, E);
    for (std::size_t x0 : interfaces) {
        std::vector<double> radii = admissible_radii(space, problem, x0);
        if (radii.empty()) {
            ++report.skipped_small;
            continue;
        }
        for (double R : radii) {
            double best_in = 0.0, best_out = 0.0;
            for (std::size_t y = 0; y < n; ++y) {
                if (space.dist(x0, y) >= R) continue;
                if (in_phase[y]) best_in = std::max(best_in, inrad_in[y]);
                if (out_phase[y]) best_out = std::max(best_out, inrad_out[y]);
            }
            PorosityBall ball;
            ball.center = x0;
            ball.radius = R;
            double rho = std::min(best_in, best_out);
            ball.constant = rho > 0.0 ? R / rho : inf;
            report.balls.push_back(ball);
            report.max_constant = std::max(report.max_constant, ball.constant);
        }
    }
    return report;
}

}  // namespace fracperim
