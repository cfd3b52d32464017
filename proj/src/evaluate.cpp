#include "simule/evaluate.hpp"

#include <algorithm>
#include <cmath>

namespace simule {

ConfusionCounts edge_confusion(const SymmetricMatrix& est, const BoolMatrix& truth_support,
                               double threshold) {
    if (est.dim() != truth_support.dim()) throw UsageError("edge_confusion: dimension mismatch");
    if (!(threshold > 0.0)) throw UsageError("edge_confusion: threshold must be positive");
    ConfusionCounts c;
    for (int j = 0; j < est.dim(); ++j) {
        for (int k = j + 1; k < est.dim(); ++k) {
            const bool predicted = std::fabs(est(j, k)) > threshold;
            const bool actual = truth_support.at(j, k);
            if (predicted && actual) ++c.tp;
            else if (predicted && !actual) ++c.fp;
            else if (!predicted && actual) ++c.fn;
            else ++c.tn;
        }
    }
    return c;
}

RocCurve RocCurve::from_points(std::vector<RocPoint> pts, std::vector<double> alphas) {
    std::sort(pts.begin(), pts.end(), [](const RocPoint& a, const RocPoint& b) {
        if (a.fpr != b.fpr) return a.fpr < b.fpr;
        return a.tpr < b.tpr;
    });
    std::vector<RocPoint> dedup;
    for (const RocPoint& p : pts) {
        if (!dedup.empty() && dedup.back().fpr == p.fpr) {
            dedup.back().tpr = std::max(dedup.back().tpr, p.tpr);
        } else {
            dedup.push_back(p);
        }
    }
    RocCurve curve;
    curve.points.push_back({0.0, 0.0});
    for (const RocPoint& p : dedup) {
        if ((p.fpr == 0.0 && p.tpr == 0.0) || (p.fpr == 1.0 && p.tpr == 1.0)) continue;
        curve.points.push_back(p);
    }
    curve.points.push_back({1.0, 1.0});
    curve.lambda_grid = std::move(alphas);
    return curve;
}

double auc(const RocCurve& curve) {
    double area = 0.0;
    for (size_t i = 0; i + 1 < curve.points.size(); ++i) {
        const RocPoint& a = curve.points[i];
        const RocPoint& b = curve.points[i + 1];
        area += (b.fpr - a.fpr) * (a.tpr + b.tpr) * 0.5;
    }
    return area;
}

double partial_auc(const RocCurve& curve, double q) {
    if (!(q > 0.0 && q <= 1.0)) throw UsageError("partial_auc: q must lie in (0, 1]");
    double area = 0.0;
    for (size_t i = 0; i + 1 < curve.points.size(); ++i) {
        RocPoint a = curve.points[i];
        RocPoint b = curve.points[i + 1];
        if (a.fpr >= q) break;
        if (b.fpr > q) {
            // Interpolate at fpr = q.
            const double t = (q - a.fpr) / (b.fpr - a.fpr);
            b = {q, a.tpr + t * (b.tpr - a.tpr)};
        }
        area += (b.fpr - a.fpr) * (a.tpr + b.tpr) * 0.5;
    }
    return area;
}

AucReport SweepResult::report() const {
    AucReport r;
    r.auc = auc(total);
    r.pauc_20 = partial_auc(total, 0.20);
    r.pauc_5 = partial_auc(total, 0.05);
    if (estimator == SweepEstimator::Simule) {
        r.auc_shared = auc(shared);
        r.auc_individual = auc(individual);
    }
    return r;
}

std::vector<double> default_alpha_grid() {
    std::vector<double> g;
    for (int i = 1; i <= 30; ++i) g.push_back(0.05 * i);
    return g;
}

SweepResult roc_sweep_from_scatters(const std::vector<ScatterMatrix>& scatters,
                                    const std::vector<int>& counts, const GroundTruth& truth,
                                    const std::vector<double>& alphas, const SimuleConfig& base,
                                    SweepEstimator estimator) {
    if (alphas.empty()) throw UsageError("roc_sweep: alpha grid is empty");
    if (scatters.size() != counts.size() || scatters.empty()) {
        throw UsageError("roc_sweep: scatters/counts mismatch");
    }
    const int K = static_cast<int>(scatters.size());
    if (truth.num_tasks() != K) throw UsageError("roc_sweep: truth task count mismatch");
    const int p = scatters[0].matrix.dim();
    if (truth.dim() != p) throw UsageError("roc_sweep: truth dimension mismatch");
    long n_tot = 0;
    for (int c : counts) n_tot += c;

    std::vector<BoolMatrix> total_supports;
    for (int i = 0; i < K; ++i) total_supports.push_back(truth.total_support(i));

    SweepResult result;
    result.estimator = estimator;
    std::vector<RocPoint> total_pts, shared_pts, individual_pts;
    std::vector<double> used_alphas;

    for (double alpha : alphas) {
        SweepRecord rec;
        rec.alpha = alpha;
        if (estimator == SweepEstimator::Simule) {
            SimuleConfig cfg = base;
            cfg.lambda_n = lambda_from_alpha(alpha, K, p, n_tot);
            rec.lambda = cfg.lambda_n;
            JointPrecisionEstimate est;
            try {
                est = estimate_from_scatters(scatters, cfg);
            } catch (const EstimationError&) {
                result.skipped_alphas.push_back(alpha);
                continue;
            }
            double fpr = 0.0, tpr = 0.0;
            for (int i = 0; i < K; ++i) {
                const ConfusionCounts c =
                    edge_confusion(est.total(i), total_supports[i], cfg.edge_threshold);
                fpr += c.fpr();
                tpr += c.tpr();
            }
            rec.total = {fpr / K, tpr / K};
            const ConfusionCounts cs =
                edge_confusion(est.omega_shared, truth.shared_support, cfg.edge_threshold);
            rec.shared = {cs.fpr(), cs.tpr()};
            double ifpr = 0.0, itpr = 0.0;
            for (int i = 0; i < K; ++i) {
                const ConfusionCounts ci = edge_confusion(est.omega_individual[i],
                                                          truth.individual_supports[i],
                                                          cfg.edge_threshold);
                ifpr += ci.fpr();
                itpr += ci.tpr();
            }
            rec.individual = {ifpr / K, itpr / K};
            shared_pts.push_back(rec.shared);
            individual_pts.push_back(rec.individual);
        } else {
            // Independent single-task estimates on the single-task schedule
            // lambda_i = alpha * sqrt(log(p) / n_i).
            double fpr = 0.0, tpr = 0.0;
            int solved = 0;
            for (int i = 0; i < K; ++i) {
                const double lam = lambda_from_alpha(alpha, 1, p, counts[i]);
                if (i == 0) rec.lambda = lam;
                try {
                    const SymmetricMatrix om = clime_single_from_scatter(
                        scatters[i], lam, base.solver, base.workers);
                    const ConfusionCounts c =
                        edge_confusion(om, total_supports[i], base.edge_threshold);
                    fpr += c.fpr();
                    tpr += c.tpr();
                    ++solved;
                } catch (const EstimationError&) {
                }
            }
            if (solved == 0) {
                result.skipped_alphas.push_back(alpha);
                continue;
            }
            rec.total = {fpr / solved, tpr / solved};
        }
        total_pts.push_back(rec.total);
        used_alphas.push_back(alpha);
        result.records.push_back(rec);
    }

    if (result.records.empty()) {
        throw EvaluationError("roc_sweep: every alpha in the grid was infeasible");
    }
    result.total = RocCurve::from_points(total_pts, used_alphas);
    if (estimator == SweepEstimator::Simule) {
        result.shared = RocCurve::from_points(shared_pts, used_alphas);
        result.individual = RocCurve::from_points(individual_pts, used_alphas);
    }
    return result;
}

SweepResult roc_sweep(const std::vector<TaskData>& tasks, const GroundTruth& truth,
                      const std::vector<double>& alphas, const SimuleConfig& base,
                      SweepEstimator estimator) {
    if (tasks.empty()) throw UsageError("roc_sweep: no tasks");
    std::vector<ScatterMatrix> scatters;
    std::vector<int> counts;
    for (const auto& t : tasks) {
        scatters.push_back(base.mode == EstimatorMode::Gaussian ? sample_covariance(t)
                                                                : nonparanormal_correlation(t));
        counts.push_back(t.num_samples());
    }
    if (base.intertwined) {
        scatters = intertwined_covariance(scatters, counts, base.intertwined_alpha);
    }
    return roc_sweep_from_scatters(scatters, counts, truth, alphas, base, estimator);
}

std::vector<BicScore> bic_scores(
    const std::vector<std::pair<SimuleConfig, JointPrecisionEstimate>>& candidates,
    const std::vector<TaskData>& tasks) {
    if (candidates.empty()) throw UsageError("bic_scores: no candidates");
    if (tasks.empty()) throw UsageError("bic_scores: no tasks");

    std::vector<ScatterMatrix> covs;
    for (const auto& t : tasks) covs.push_back(sample_covariance(t));

    std::vector<BicScore> out;
    for (const auto& [cfg, est] : candidates) {
        if (est.num_tasks() != static_cast<int>(tasks.size())) {
            throw UsageError("bic_scores: estimate task count does not match data");
        }
        BicScore score;
        for (size_t i = 0; i < tasks.size(); ++i) {
            const SymmetricMatrix omega = est.total(static_cast<int>(i));
            const int p = omega.dim();
            const double n = tasks[i].num_samples();
            double tr = 0.0;
            for (int a = 0; a < p; ++a) {
                const double* crow = covs[i].matrix.row(a);
                const double* orow = omega.row(a);
                for (int b = 0; b < p; ++b) tr += crow[b] * orow[b];
            }
            double logdet;
            try {
                const DenseMatrix chol_l = cholesky(omega);
                logdet = 0.0;
                for (int a = 0; a < p; ++a) logdet += 2.0 * std::log(chol_l(a, a));
            } catch (const NotPositiveDefinite&) {
                const double lmin = min_eigenvalue(omega, 1e-8);
                SymmetricMatrix shifted = omega;
                const double shift = std::fabs(lmin) + 1e-3;
                for (int a = 0; a < p; ++a) shifted.set(a, a, omega(a, a) + shift);
                const DenseMatrix chol_l = cholesky(shifted);
                logdet = 0.0;
                for (int a = 0; a < p; ++a) logdet += 2.0 * std::log(chol_l(a, a));
                score.logdet_shifted = true;
            }
            const int edges = count_edges(omega, cfg.edge_threshold);
            score.bic += n * (tr - logdet) + std::log(n) * edges;
        }
        out.push_back(score);
    }
    return out;
}

int bic_select(const std::vector<std::pair<SimuleConfig, JointPrecisionEstimate>>& candidates,
               const std::vector<TaskData>& tasks) {
    const std::vector<BicScore> scores = bic_scores(candidates, tasks);
    int best = 0;
    for (size_t i = 1; i < scores.size(); ++i) {
        if (scores[i].bic < scores[best].bic) best = static_cast<int>(i);
    }
    return best;
}

std::vector<ConvergenceRow> convergence_probe(int K, int p, const std::vector<int>& n_list,
                                              const std::vector<Seed>& seeds, double alpha,
                                              const SimuleConfig& base) {
    if (n_list.empty()) throw UsageError("convergence_probe: empty n list");
    for (size_t i = 1; i < n_list.size(); ++i) {
        if (n_list[i] <= n_list[i - 1]) {
            throw UsageError("convergence_probe: n list must be increasing");
        }
    }
    if (seeds.empty()) throw UsageError("convergence_probe: no seeds");

    std::vector<ConvergenceRow> rows;
    for (int n : n_list) {
        ConvergenceRow row;
        row.n = n;
        rows.push_back(row);
    }

    for (const Seed& seed : seeds) {
        const GroundTruth truth = gen_model1(K, p, seed);
        for (size_t ni = 0; ni < n_list.size(); ++ni) {
            const int n = n_list[ni];
            std::vector<TaskData> tasks;
            for (int i = 0; i < K; ++i) {
                const Seed s{derive_stream(seed.value, 1000u + static_cast<std::uint64_t>(n) * 16 + i)};
                tasks.push_back(sample_gaussian(truth.omegas[i], n, s));
            }
            SimuleConfig cfg = base;
            cfg.lambda_n = lambda_from_alpha(alpha, K, p, static_cast<long>(n) * K);
            const JointPrecisionEstimate est = estimate(tasks, cfg);

            double frob = 0.0, infn = 0.0;
            for (int i = 0; i < K; ++i) {
                const SymmetricMatrix tot = est.total(i);
                double f2 = 0.0, mx = 0.0;
                for (int a = 0; a < p; ++a) {
                    for (int b = 0; b < p; ++b) {
                        const double d = tot(a, b) - truth.omegas[i](a, b);
                        f2 += d * d;
                        mx = std::max(mx, std::fabs(d));
                    }
                }
                frob += std::sqrt(f2);
                infn += mx;
            }
            rows[ni].frob_per_seed.push_back(frob / K);
            rows[ni].inf_per_seed.push_back(infn / K);
        }
    }
    for (auto& row : rows) {
        double fs = 0.0, is = 0.0;
        for (double v : row.frob_per_seed) fs += v;
        for (double v : row.inf_per_seed) is += v;
        row.mean_frob = fs / row.frob_per_seed.size();
        row.mean_inf = is / row.inf_per_seed.size();
    }
    return rows;
}

}  // namespace simule
