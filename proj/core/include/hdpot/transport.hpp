#pragma once

#include <span>
#include <vector>

#include "hdpot/measure.hpp"

namespace hdpot {

// Joint weight matrix over atom pairs with the two measures as marginals.
struct Coupling {
    DiscreteMeasure source;
    DiscreteMeasure target;
    std::vector<double> weights;  // row-major source.size() x target.size()

    double entry(std::size_t i, std::size_t j) const { return weights[i * target.size() + j]; }
};

struct CouplingReport {
    double max_row_violation = 0.0;
    double max_col_violation = 0.0;
    double min_entry = 0.0;
};

struct TransportResult {
    double order = 1.0;
    double distance = 0.0;
    Coupling coupling;
};

// Exact L_r optimal transport with cost ||x - y||^r, r >= 1.
TransportResult wasserstein(const DiscreteMeasure& g, const DiscreteMeasure& gp, double r);

// Distance only; skips building the coupling matrix.
double wasserstein_distance(const DiscreteMeasure& g, const DiscreteMeasure& gp, double r);

// (sum_ij k_ij ||x_i - y_j||^r)^{1/r}; throws invalid_coupling when the
// marginal constraints are violated beyond 1e-10 or an entry is negative.
double coupling_cost(const Coupling& kappa, double r);

// Diagnostic only, never throws.
CouplingReport validate_coupling(const Coupling& kappa);

// --- lower-level solvers -------------------------------------------------

// Exact transportation problem on a dense cost matrix (row supplies a,
// column demands b, both summing to the same total). Returns the optimal
// cost; if plan != nullptr it receives the row-major optimal plan.
double solve_transport(std::span<const double> cost, std::span<const double> a,
                       std::span<const double> b, std::vector<double>* plan = nullptr);

// Jonker-Volgenant dense assignment. cost is n x n row-major; rowsol[i]
// receives the column assigned to row i. Returns the optimal total cost.
double lapjv(int n, std::span<const double> cost, std::vector<int>& rowsol);

}  // namespace hdpot
