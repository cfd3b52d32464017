#ifndef SIMULE_EVALUATE_HPP
#define SIMULE_EVALUATE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "simule/estimator.hpp"
#include "simule/simulate.hpp"

namespace simule {

// Edge-level confusion over the strictly-upper triangle.
struct ConfusionCounts {
    long tp = 0, fp = 0, tn = 0, fn = 0;
    double fpr() const { return (fp + tn) > 0 ? static_cast<double>(fp) / (fp + tn) : 0.0; }
    double tpr() const { return (tp + fn) > 0 ? static_cast<double>(tp) / (tp + fn) : 1.0; }
};

ConfusionCounts edge_confusion(const SymmetricMatrix& est, const BoolMatrix& truth_support,
                               double threshold);

struct RocPoint {
    double fpr = 0.0;
    double tpr = 0.0;
};

// FPR-TPR curve. from_points sorts by FPR, keeps the best TPR where several
// sweep points share an FPR, and appends the (0,0) and (1,1) anchors.
struct RocCurve {
    std::vector<RocPoint> points;
    std::vector<double> lambda_grid;  // the alpha values swept (may be empty)

    static RocCurve from_points(std::vector<RocPoint> pts, std::vector<double> alphas = {});
};

double auc(const RocCurve& curve);
// Un-normalized area over fpr in [0, q]; a perfect curve scores exactly q.
double partial_auc(const RocCurve& curve, double q);

struct AucReport {
    double auc = 0.0;
    std::optional<double> auc_shared;
    std::optional<double> auc_individual;
    double pauc_20 = 0.0;
    double pauc_5 = 0.0;
};

enum class SweepEstimator { Simule, Clime };

// One row of the sweep output (what the roc_*.csv files carry).
struct SweepRecord {
    double alpha = 0.0;
    double lambda = 0.0;
    RocPoint total;
    RocPoint shared;      // joint estimators only
    RocPoint individual;  // joint estimators only
};

struct SweepResult {
    RocCurve total;
    RocCurve shared;
    RocCurve individual;
    std::vector<SweepRecord> records;
    std::vector<double> skipped_alphas;
    SweepEstimator estimator = SweepEstimator::Simule;

    AucReport report() const;
};

// One estimate per alpha (lambda_n from the schedule), FPR/TPR averaged over
// the K tasks for the totals, plus separate shared/individual curves for the
// joint estimator. Alphas whose estimate is infeasible everywhere are skipped;
// if every alpha is skipped an EvaluationError is thrown.
SweepResult roc_sweep(const std::vector<TaskData>& tasks, const GroundTruth& truth,
                      const std::vector<double>& alphas, const SimuleConfig& base,
                      SweepEstimator estimator = SweepEstimator::Simule);

// The same sweep on prebuilt per-task scatters (avoids recomputing Kendall
// matrices across the grid).
SweepResult roc_sweep_from_scatters(const std::vector<ScatterMatrix>& scatters,
                                    const std::vector<int>& counts, const GroundTruth& truth,
                                    const std::vector<double>& alphas, const SimuleConfig& base,
                                    SweepEstimator estimator = SweepEstimator::Simule);

// The alpha grid 0.05, 0.10, ..., 1.50.
std::vector<double> default_alpha_grid();

struct BicScore {
    double bic = 0.0;
    bool logdet_shifted = false;  // omega was not PD; diagonal shift applied for log det
};

std::vector<BicScore> bic_scores(const std::vector<std::pair<SimuleConfig, JointPrecisionEstimate>>& candidates,
                                 const std::vector<TaskData>& tasks);

// argmin of BIC = sum_i [ n_i (tr(Sigma_i Omega_i) - log det Omega_i) + log(n_i) |edges(Omega_i)| ].
// Ties resolve to the smallest index.
int bic_select(const std::vector<std::pair<SimuleConfig, JointPrecisionEstimate>>& candidates,
               const std::vector<TaskData>& tasks);

struct ConvergenceRow {
    int n = 0;
    std::vector<double> frob_per_seed;
    std::vector<double> inf_per_seed;
    double mean_frob = 0.0;
    double mean_inf = 0.0;
};

// Error of the joint estimate against the generating truth as the per-task
// sample count grows, averaged over tasks, one row per n.
std::vector<ConvergenceRow> convergence_probe(int K, int p, const std::vector<int>& n_list,
                                              const std::vector<Seed>& seeds, double alpha,
                                              const SimuleConfig& base);

}  // namespace simule

#endif
