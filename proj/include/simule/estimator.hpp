#ifndef SIMULE_ESTIMATOR_HPP
#define SIMULE_ESTIMATOR_HPP

#include <vector>

#include "simule/covariance.hpp"
#include "simule/lp.hpp"
#include "simule/matrix.hpp"

namespace simule {

enum class EstimatorMode { Gaussian, Nonparanormal };

struct SimuleConfig {
    double lambda_n = 0.1;    // constraint radius, > 0
    double epsilon = 0.5;     // shared-part price, > 0 and != 1
    EstimatorMode mode = EstimatorMode::Gaussian;
    bool intertwined = false;
    double intertwined_alpha = 0.5;
    int workers = 1;
    lp::SolverOptions solver;
    double edge_threshold = 1e-5;  // |entry| above this counts as an edge

    void validate() const;
};

struct ColumnDiagnostics {
    lp::Status status = lp::Status::Optimal;
    int iterations = 0;
    double duality_gap = 0.0;
    // max over tasks of || Sigma^(i) (beta^(i) + beta_s) - e_j ||_inf.
    double constraint_residual = 0.0;
};

// Per-column solution of the joint program.
struct ColumnSolution {
    int col = 1;  // 1-based
    std::vector<std::vector<double>> beta_individual;  // K vectors of length p
    std::vector<double> beta_shared;                   // length p
    bool feasible = true;
    ColumnDiagnostics diag;
};

struct JointPrecisionEstimate {
    SymmetricMatrix omega_shared;
    std::vector<SymmetricMatrix> omega_individual;
    SimuleConfig config;
    std::vector<int> infeasible_columns;  // 1-based
    std::vector<ColumnDiagnostics> column_diagnostics;

    int num_tasks() const { return static_cast<int>(omega_individual.size()); }
    // Totals are always derived as shared + individual, never stored.
    SymmetricMatrix total(int i) const;
};

// The dense inequality form of the column program: variables [theta; u] with
// theta = [beta^(1); ...; beta^(K); eps*K*beta_s], rows +-theta <= u followed
// by +-(A^(i) theta - e_j) <= lambda. col is 1-based.
lp::LinearProgram build_column_lp(const std::vector<ScatterMatrix>& scatters, int col,
                                  const SimuleConfig& cfg);

// Solves one column. Uses a normal-equation factorization that exploits the
// block structure of the constraint matrix; the solved program is exactly the
// one build_column_lp spells out. col is 1-based.
ColumnSolution estimate_column(const std::vector<ScatterMatrix>& scatters, int col,
                               const SimuleConfig& cfg);

// For each off-diagonal pair keeps the entry of smaller absolute value
// (ties keep the (j,k) entry with j < k).
SymmetricMatrix symmetrize(const DenseMatrix& raw);

// Full joint estimation: scatters per mode, optional intertwined blend, all
// p columns (parallel over cfg.workers), column-wise assembly, then
// symmetrization of the shared and individual parts separately.
JointPrecisionEstimate estimate(const std::vector<TaskData>& tasks, const SimuleConfig& cfg);

// Same, starting from prebuilt scatter matrices (one per task).
JointPrecisionEstimate estimate_from_scatters(const std::vector<ScatterMatrix>& scatters,
                                              const SimuleConfig& cfg);

// Single-task baseline: column-wise min ||beta||_1 s.t. ||Sigma beta - e_j||_inf <= lambda.
SymmetricMatrix clime_single(const TaskData& task, double lambda,
                             const lp::SolverOptions& solver = {});
SymmetricMatrix clime_single_from_scatter(const ScatterMatrix& scatter, double lambda,
                                          const lp::SolverOptions& solver = {},
                                          int workers = 1,
                                          std::vector<int>* infeasible_columns = nullptr);

// lambda_n = alpha * sqrt(log(K p) / n_tot).
double lambda_from_alpha(double alpha, int K, int p, long n_tot);

// Edge count above threshold, strictly upper triangle.
int count_edges(const SymmetricMatrix& m, double threshold);

}  // namespace simule

#endif
