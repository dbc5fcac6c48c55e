#include "hdpot/transport.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace hdpot {

namespace {

double pow_r(double base, double r) {
    if (r == 1.0) return base;
    if (r == 2.0) return base * base;
    return std::pow(base, r);
}

void build_cost(const DiscreteMeasure& g, const DiscreteMeasure& gp, double r,
                std::vector<double>& cost) {
    const std::size_t n = g.size(), m = gp.size();
    cost.resize(n * m);
    for (std::size_t i = 0; i < n; ++i) {
        auto xi = g.location(i);
        for (std::size_t j = 0; j < m; ++j)
            cost[i * m + j] = pow_r(euclidean(xi, gp.location(j)), r);
    }
}

// Monotone (north-west) coupling on sorted atoms: optimal in one dimension
// for convex costs |x-y|^r, r >= 1.
double solve_1d(const DiscreteMeasure& g, const DiscreteMeasure& gp, double r,
                std::vector<double>* plan) {
    const std::size_t n = g.size(), m = gp.size();
    std::vector<std::size_t> pi(n), pj(m);
    std::iota(pi.begin(), pi.end(), 0u);
    std::iota(pj.begin(), pj.end(), 0u);
    std::sort(pi.begin(), pi.end(),
              [&](std::size_t a, std::size_t b) { return g.location(a)[0] < g.location(b)[0]; });
    std::sort(pj.begin(), pj.end(),
              [&](std::size_t a, std::size_t b) { return gp.location(a)[0] < gp.location(b)[0]; });
    if (plan) plan->assign(n * m, 0.0);
    std::vector<double> a(n), b(m);
    for (std::size_t i = 0; i < n; ++i) a[i] = g.weight(pi[i]);
    for (std::size_t j = 0; j < m; ++j) b[j] = gp.weight(pj[j]);
    double total = 0.0;
    std::size_t i = 0, j = 0;
    while (i < n && j < m) {
        double f = std::min(a[i], b[j]);
        if (f > 0.0) {
            total += f * pow_r(std::abs(g.location(pi[i])[0] - gp.location(pj[j])[0]), r);
            if (plan) (*plan)[pi[i] * m + pj[j]] += f;
        }
        a[i] -= f;
        b[j] -= f;
        if (a[i] <= 1e-18 && b[j] <= 1e-18) {
            ++i;
            ++j;
        } else if (a[i] <= 1e-18) {
            ++i;
        } else {
            ++j;
        }
    }
    return total;
}

void check_pair(const DiscreteMeasure& g, const DiscreteMeasure& gp, double r) {
    require(g.domain() == gp.domain(), errc::domain_mismatch,
            "measures must live on the same domain");
    require(r >= 1.0 && std::isfinite(r), errc::invalid_parameter, "order r must satisfy r >= 1");
}

}  // namespace

double solve_transport(std::span<const double> cost, std::span<const double> a,
                       std::span<const double> b, std::vector<double>* plan) {
    const std::size_t n = a.size(), m = b.size();
    // successive shortest augmenting paths over the bipartite residual graph,
    // with potentials keeping all reduced costs nonnegative
    std::vector<double> surplus(a.begin(), a.end());
    std::vector<double> deficit(b.begin(), b.end());
    std::vector<double> u(n, 0.0), v(m, 0.0);
    std::vector<double> flow(n * m, 0.0);

    const std::size_t nodes = n + m;
    std::vector<double> dist(nodes);
    std::vector<int> parent(nodes);
    std::vector<char> done(nodes);

    for (std::size_t s0 = 0; s0 < n; ++s0) {
        while (surplus[s0] > 1e-18) {
            // Dijkstra from s0 on reduced costs
            std::fill(dist.begin(), dist.end(), std::numeric_limits<double>::infinity());
            std::fill(parent.begin(), parent.end(), -1);
            std::fill(done.begin(), done.end(), 0);
            dist[s0] = 0.0;
            std::size_t sink = SIZE_MAX;
            for (;;) {
                std::size_t best = SIZE_MAX;
                double bd = std::numeric_limits<double>::infinity();
                for (std::size_t k = 0; k < nodes; ++k)
                    if (!done[k] && dist[k] < bd) {
                        bd = dist[k];
                        best = k;
                    }
                if (best == SIZE_MAX) break;
                done[best] = 1;
                if (best >= n && deficit[best - n] > 1e-18) {
                    sink = best - n;
                    break;
                }
                if (best < n) {
                    const std::size_t i = best;
                    const double* crow = cost.data() + i * m;
                    for (std::size_t j = 0; j < m; ++j) {
                        if (done[n + j]) continue;
                        double rc = crow[j] - u[i] - v[j];
                        if (rc < 0.0) rc = 0.0;  // float guard
                        if (dist[i] + rc < dist[n + j]) {
                            dist[n + j] = dist[i] + rc;
                            parent[n + j] = static_cast<int>(i);
                        }
                    }
                } else {
                    const std::size_t j = best - n;
                    for (std::size_t i = 0; i < n; ++i) {
                        if (done[i] || flow[i * m + j] <= 0.0) continue;
                        double rc = u[i] + v[j] - cost[i * m + j];
                        if (rc < 0.0) rc = 0.0;
                        if (dist[n + j] + rc < dist[i]) {
                            dist[i] = dist[n + j] + rc;
                            parent[i] = static_cast<int>(n + j);
                        }
                    }
                }
            }
            require(sink != SIZE_MAX, errc::numerical_failure,
                    "transport: no augmenting path (unbalanced problem?)");

            // potential update pi[x] -= (dt - d[x])+ keeps reduced costs >= 0
            // and makes every arc of the augmenting path tight
            const double dt = dist[n + sink];
            for (std::size_t i = 0; i < n; ++i)
                if (dist[i] < dt) u[i] += dt - dist[i];
            for (std::size_t j = 0; j < m; ++j)
                if (dist[n + j] < dt) v[j] -= dt - dist[n + j];

            // bottleneck = min(surplus, deficit); path arcs are uncapacitated
            double push = std::min(surplus[s0], deficit[sink]);
            std::size_t node = n + sink;
            while (parent[node] >= 0) {
                std::size_t p = static_cast<std::size_t>(parent[node]);
                if (node >= n) {
                    // forward arc p -> node
                } else {
                    // backward arc: flow on (node, p - n) is reduced
                    push = std::min(push, flow[node * m + (p - n)]);
                }
                node = p;
            }
            node = n + sink;
            while (parent[node] >= 0) {
                std::size_t p = static_cast<std::size_t>(parent[node]);
                if (node >= n) {
                    std::size_t i = p, j = node - n;
                    flow[i * m + j] += push;
                } else {
                    std::size_t i = node, j = p - n;
                    flow[i * m + j] -= push;
                    if (flow[i * m + j] < 0.0) flow[i * m + j] = 0.0;
                }
                node = p;
            }
            surplus[s0] -= push;
            deficit[sink] -= push;
            if (surplus[s0] < 1e-18) surplus[s0] = 0.0;
            if (deficit[sink] < 1e-18) deficit[sink] = 0.0;
        }
    }

    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) total += flow[i * m + j] * cost[i * m + j];
    if (plan) *plan = std::move(flow);
    return total;
}

TransportResult wasserstein(const DiscreteMeasure& g, const DiscreteMeasure& gp, double r) {
    check_pair(g, gp, r);
    std::vector<double> plan;
    double total;
    if (g.dim() == 1) {
        total = solve_1d(g, gp, r, &plan);
    } else {
        std::vector<double> cost;
        build_cost(g, gp, r, cost);
        total = solve_transport(cost, g.weights(), gp.weights(), &plan);
    }
    TransportResult res;
    res.order = r;
    res.distance = std::pow(std::max(total, 0.0), 1.0 / r);
    res.coupling = Coupling{g, gp, std::move(plan)};
    return res;
}

double wasserstein_distance(const DiscreteMeasure& g, const DiscreteMeasure& gp, double r) {
    check_pair(g, gp, r);
    double total;
    if (g.dim() == 1) {
        total = solve_1d(g, gp, r, nullptr);
    } else {
        std::vector<double> cost;
        build_cost(g, gp, r, cost);
        total = solve_transport(cost, g.weights(), gp.weights(), nullptr);
    }
    return std::pow(std::max(total, 0.0), 1.0 / r);
}

double coupling_cost(const Coupling& kappa, double r) {
    require(r >= 1.0, errc::invalid_parameter, "order r must satisfy r >= 1");
    CouplingReport rep = validate_coupling(kappa);
    require(rep.min_entry >= -1e-12 && rep.max_row_violation <= 1e-10 &&
                rep.max_col_violation <= 1e-10,
            errc::invalid_coupling, "coupling violates marginal constraints");
    const std::size_t n = kappa.source.size(), m = kappa.target.size();
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        auto xi = kappa.source.location(i);
        for (std::size_t j = 0; j < m; ++j) {
            double w = kappa.weights[i * m + j];
            if (w > 0.0) total += w * pow_r(euclidean(xi, kappa.target.location(j)), r);
        }
    }
    return std::pow(std::max(total, 0.0), 1.0 / r);
}

CouplingReport validate_coupling(const Coupling& kappa) {
    const std::size_t n = kappa.source.size(), m = kappa.target.size();
    CouplingReport rep;
    rep.min_entry = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            double w = kappa.weights[i * m + j];
            rep.min_entry = std::min(rep.min_entry, w);
            row += w;
        }
        rep.max_row_violation = std::max(rep.max_row_violation, std::abs(row - kappa.source.weight(i)));
    }
    for (std::size_t j = 0; j < m; ++j) {
        double col = 0.0;
        for (std::size_t i = 0; i < n; ++i) col += kappa.weights[i * m + j];
        rep.max_col_violation = std::max(rep.max_col_violation, std::abs(col - kappa.target.weight(j)));
    }
    return rep;
}

}  // namespace hdpot
