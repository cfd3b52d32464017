#include "simule/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

#include "simule/parallel.hpp"

namespace simule {

void SimuleConfig::validate() const {
    if (!(lambda_n > 0.0)) throw UsageError("SimuleConfig: lambda_n must be positive");
    if (!(epsilon > 0.0)) throw UsageError("SimuleConfig: epsilon must be positive");
    if (epsilon == 1.0) {
        throw UsageError("SimuleConfig: epsilon = 1 breaks the uniqueness of the shared/individual split");
    }
    if (!(intertwined_alpha >= 0.0 && intertwined_alpha <= 1.0)) {
        throw UsageError("SimuleConfig: intertwined_alpha must be in [0, 1]");
    }
    if (workers < 1) throw UsageError("SimuleConfig: workers must be positive");
    if (!(edge_threshold > 0.0)) throw UsageError("SimuleConfig: edge_threshold must be positive");
    solver.validate();
}

SymmetricMatrix JointPrecisionEstimate::total(int i) const {
    const SymmetricMatrix& ind = omega_individual.at(i);
    const int p = ind.dim();
    SymmetricMatrix t(p);
    for (int j = 0; j < p; ++j) {
        for (int k = j; k < p; ++k) t.set(j, k, omega_shared(j, k) + ind(j, k));
    }
    return t;
}

double lambda_from_alpha(double alpha, int K, int p, long n_tot) {
    if (K < 1 || p < 1 || n_tot < 1) {
        throw UsageError("lambda_from_alpha: K, p and n_tot must be positive");
    }
    if (alpha < 0.0) throw UsageError("lambda_from_alpha: alpha must be non-negative");
    return alpha * std::sqrt(std::log(static_cast<double>(K) * p) / static_cast<double>(n_tot));
}

int count_edges(const SymmetricMatrix& m, double threshold) {
    int c = 0;
    for (int j = 0; j < m.dim(); ++j) {
        for (int k = j + 1; k < m.dim(); ++k) {
            if (std::fabs(m(j, k)) > threshold) ++c;
        }
    }
    return c;
}

SymmetricMatrix symmetrize(const DenseMatrix& raw) {
    if (raw.rows() != raw.cols()) throw UsageError("symmetrize: matrix not square");
    const int p = raw.rows();
    SymmetricMatrix out(p);
    for (int j = 0; j < p; ++j) {
        out.set(j, j, raw(j, j));
        for (int k = j + 1; k < p; ++k) {
            const double a = raw(j, k);
            const double b = raw(k, j);
            out.set(j, k, std::fabs(b) < std::fabs(a) ? b : a);
        }
    }
    return out;
}

namespace {

// Constraint operator of the column program. Variable layout is
// [beta^(1); ...; beta^(K); w; u] with w = eps*K*beta_s (the w block is
// omitted in single-task mode), row layout
//   [ -theta - u <= 0 | theta - u <= 0 | per task: -(A theta) , +(A theta) ].
// The normal matrix is block diagonal over the beta blocks plus an arrow to
// the w block, which the factorization eliminates with one Schur complement.
class ColumnOps final : public lp::ConstraintOps {
public:
    ColumnOps(const std::vector<ScatterMatrix>& scatters, bool with_shared, double gamma)
        : scatters_(scatters),
          with_shared_(with_shared),
          gamma_(gamma),
          K_(static_cast<int>(scatters.size())),
          p_(scatters[0].matrix.dim()),
          blocks_(K_ + (with_shared ? 1 : 0)),
          ntheta_(blocks_ * p_),
          rows_(2 * blocks_ * p_ + 2 * K_ * p_) {
        f_.assign(static_cast<size_t>(K_) * p_ * p_, 0.0);
        chol_.assign(static_cast<size_t>(K_) * p_ * p_, 0.0);
        if (with_shared_) {
            yt_.assign(static_cast<size_t>(K_) * p_ * p_, 0.0);
            schur_.assign(static_cast<size_t>(p_) * p_, 0.0);
        }
        q_.assign(ntheta_, 0.0);
        ratio_.assign(ntheta_, 0.0);
        usum_.assign(ntheta_, 0.0);
        scratch_.assign(p_, 0.0);
    }

    int rows() const override { return rows_; }
    int cols() const override { return 2 * ntheta_; }

    void apply(const double* x, double* out) const override {
        const double* theta = x;
        const double* u = x + ntheta_;
        for (int t = 0; t < ntheta_; ++t) {
            out[t] = -theta[t] - u[t];
            out[ntheta_ + t] = theta[t] - u[t];
        }
        const double* w = with_shared_ ? theta + K_ * p_ : nullptr;
        std::vector<double> combo(p_), v(p_);
        for (int i = 0; i < K_; ++i) {
            const double* beta = theta + static_cast<size_t>(i) * p_;
            for (int a = 0; a < p_; ++a) combo[a] = beta[a] + (with_shared_ ? gamma_ * w[a] : 0.0);
            symv(i, combo.data(), v.data());
            double* minus = out + 2 * ntheta_ + static_cast<size_t>(i) * 2 * p_;
            double* plus = minus + p_;
            for (int a = 0; a < p_; ++a) {
                minus[a] = -v[a];
                plus[a] = v[a];
            }
        }
    }

    void apply_transpose(const double* y, double* out) const override {
        const double* y1 = y;
        const double* y2 = y + ntheta_;
        double* otheta = out;
        double* ou = out + ntheta_;
        for (int t = 0; t < ntheta_; ++t) {
            otheta[t] = -y1[t] + y2[t];
            ou[t] = -y1[t] - y2[t];
        }
        std::vector<double> g(p_), v(p_);
        double* oshared = with_shared_ ? otheta + K_ * p_ : nullptr;
        for (int i = 0; i < K_; ++i) {
            const double* ym = y + 2 * ntheta_ + static_cast<size_t>(i) * 2 * p_;
            const double* yp = ym + p_;
            for (int a = 0; a < p_; ++a) g[a] = yp[a] - ym[a];
            symv(i, g.data(), v.data());
            double* oi = otheta + static_cast<size_t>(i) * p_;
            for (int a = 0; a < p_; ++a) oi[a] += v[a];
            if (with_shared_) {
                for (int a = 0; a < p_; ++a) oshared[a] += gamma_ * v[a];
            }
        }
    }

    void factor(const double* weights) override {
        const double* w1 = weights;
        const double* w2 = weights + ntheta_;
        for (int t = 0; t < ntheta_; ++t) {
            const double sum = w1[t] + w2[t];
            usum_[t] = sum;
            ratio_[t] = (w1[t] - w2[t]) / sum;
            q_[t] = 4.0 * w1[t] * w2[t] / sum;
        }

        // F_i = Sigma^(i) diag(Wm + Wp) Sigma^(i).
        double trace_total = 0.0;
        for (int i = 0; i < K_; ++i) {
            const double* sigma = scatters_[i].matrix.data();
            const double* wm = weights + 2 * ntheta_ + static_cast<size_t>(i) * 2 * p_;
            const double* wp = wm + p_;
            double* f = f_.data() + static_cast<size_t>(i) * p_ * p_;
            std::fill(f, f + static_cast<size_t>(p_) * p_, 0.0);
            for (int k = 0; k < p_; ++k) {
                const double wk = wm[k] + wp[k];
                const double* srow = sigma + static_cast<size_t>(k) * p_;
                for (int r = 0; r < p_; ++r) {
                    const double s = wk * srow[r];
                    if (s == 0.0) continue;
                    double* fr = f + static_cast<size_t>(r) * p_;
                    for (int c = 0; c < p_; ++c) fr[c] += s * srow[c];
                }
            }
            for (int a = 0; a < p_; ++a) trace_total += f[static_cast<size_t>(a) * p_ + a];
        }
        for (int t = 0; t < ntheta_; ++t) trace_total += q_[t];
        if (with_shared_) {
            // The shared diagonal block adds gamma^2 * sum tr(F_i) on top.
            double ftr = 0.0;
            for (int i = 0; i < K_; ++i) {
                const double* f = f_.data() + static_cast<size_t>(i) * p_ * p_;
                for (int a = 0; a < p_; ++a) ftr += f[static_cast<size_t>(a) * p_ + a];
            }
            trace_total += gamma_ * gamma_ * ftr;
        }

        double reg = 0.0;
        for (int attempt = 0; attempt < 10; ++attempt) {
            if (try_factor(reg)) return;
            reg = (reg == 0.0) ? std::max(1e-10 * trace_total / ntheta_, 1e-300) : reg * 100.0;
        }
        throw SolverError("ColumnOps: normal matrix factorization failed");
    }

    void solve(const double* rhs, double* out) const override {
        const double* rtheta = rhs;
        const double* ru = rhs + ntheta_;
        std::vector<double> r(ntheta_);
        for (int t = 0; t < ntheta_; ++t) r[t] = rtheta[t] - ratio_[t] * ru[t];

        double* dtheta = out;
        double* du = out + ntheta_;
        // Forward substitutions per beta block.
        for (int i = 0; i < K_; ++i) {
            double* zi = dtheta + static_cast<size_t>(i) * p_;
            std::copy(r.data() + static_cast<size_t>(i) * p_, r.data() + static_cast<size_t>(i + 1) * p_, zi);
            detail::lower_solve_inplace(chol_block(i), p_, zi);
        }
        if (with_shared_) {
            double* dw = dtheta + static_cast<size_t>(K_) * p_;
            std::copy(r.data() + static_cast<size_t>(K_) * p_, r.data() + ntheta_, dw);
            // rs' = rs - gamma * sum_i Y_i^T z_i.
            for (int i = 0; i < K_; ++i) {
                const double* yt = yt_.data() + static_cast<size_t>(i) * p_ * p_;
                const double* zi = dtheta + static_cast<size_t>(i) * p_;
                for (int a = 0; a < p_; ++a) {
                    const double* row = yt + static_cast<size_t>(a) * p_;
                    double acc = 0.0;
                    for (int b = 0; b < p_; ++b) acc += row[b] * zi[b];
                    dw[a] -= gamma_ * acc;
                }
            }
            detail::cholesky_solve_inplace(schur_.data(), p_, dw);
            // Back substitutions: dbeta_i = C_i^{-T} (z_i - gamma * Y_i dw).
            for (int i = 0; i < K_; ++i) {
                const double* yt = yt_.data() + static_cast<size_t>(i) * p_ * p_;
                double* zi = dtheta + static_cast<size_t>(i) * p_;
                std::vector<double>& ydw = scratch_;
                std::fill(ydw.begin(), ydw.end(), 0.0);
                for (int a = 0; a < p_; ++a) {
                    const double f = dw[a];
                    if (f == 0.0) continue;
                    const double* row = yt + static_cast<size_t>(a) * p_;
                    for (int b = 0; b < p_; ++b) ydw[b] += f * row[b];
                }
                for (int b = 0; b < p_; ++b) zi[b] -= gamma_ * ydw[b];
                detail::lower_transpose_solve_inplace(chol_block(i), p_, zi);
            }
        } else {
            for (int i = 0; i < K_; ++i) {
                detail::lower_transpose_solve_inplace(chol_block(i), p_,
                                                      dtheta + static_cast<size_t>(i) * p_);
            }
        }
        for (int t = 0; t < ntheta_; ++t) du[t] = (ru[t] - (ratio_[t] * usum_[t]) * dtheta[t]) / usum_[t];
    }

private:
    double* chol_block(int i) { return chol_.data() + static_cast<size_t>(i) * p_ * p_; }
    const double* chol_block(int i) const { return chol_.data() + static_cast<size_t>(i) * p_ * p_; }

    void symv(int i, const double* v, double* out) const {
        const double* sigma = scatters_[i].matrix.data();
        for (int r = 0; r < p_; ++r) {
            const double* row = sigma + static_cast<size_t>(r) * p_;
            double acc = 0.0;
            for (int c = 0; c < p_; ++c) acc += row[c] * v[c];
            out[r] = acc;
        }
    }

    bool try_factor(double reg) {
        for (int i = 0; i < K_; ++i) {
            const double* f = f_.data() + static_cast<size_t>(i) * p_ * p_;
            double* c = chol_block(i);
            std::memcpy(c, f, sizeof(double) * p_ * p_);
            const double* qi = q_.data() + static_cast<size_t>(i) * p_;
            for (int a = 0; a < p_; ++a) c[static_cast<size_t>(a) * p_ + a] += qi[a] + reg;
            if (!detail::cholesky_inplace(c, p_, 0.0)) return false;
            if (with_shared_) {
                double* yt = yt_.data() + static_cast<size_t>(i) * p_ * p_;
                for (int col = 0; col < p_; ++col) {
                    double* dst = yt + static_cast<size_t>(col) * p_;
                    std::memcpy(dst, f + static_cast<size_t>(col) * p_, sizeof(double) * p_);
                    detail::lower_solve_inplace(c, p_, dst);
                }
            }
        }
        if (!with_shared_) return true;

        const double g2 = gamma_ * gamma_;
        const double* qs = q_.data() + static_cast<size_t>(K_) * p_;
        for (int a = 0; a < p_; ++a) {
            double* srow = schur_.data() + static_cast<size_t>(a) * p_;
            for (int b = a; b < p_; ++b) {
                double acc = 0.0;
                for (int i = 0; i < K_; ++i) {
                    const double* f = f_.data() + static_cast<size_t>(i) * p_ * p_;
                    const double* ya = yt_.data() + static_cast<size_t>(i) * p_ * p_ + static_cast<size_t>(a) * p_;
                    const double* yb = yt_.data() + static_cast<size_t>(i) * p_ * p_ + static_cast<size_t>(b) * p_;
                    double dot = 0.0;
                    for (int t = 0; t < p_; ++t) dot += ya[t] * yb[t];
                    acc += f[static_cast<size_t>(a) * p_ + b] - dot;
                }
                const double v = g2 * acc + ((a == b) ? qs[a] + reg : 0.0);
                srow[b] = v;
                schur_[static_cast<size_t>(b) * p_ + a] = v;
            }
        }
        return detail::cholesky_inplace(schur_.data(), p_, 0.0);
    }

    const std::vector<ScatterMatrix>& scatters_;
    bool with_shared_;
    double gamma_;
    int K_, p_, blocks_, ntheta_, rows_;
    std::vector<double> f_, chol_, yt_, schur_;
    std::vector<double> q_, ratio_, usum_;
    mutable std::vector<double> scratch_;
};

void check_scatters(const std::vector<ScatterMatrix>& scatters) {
    if (scatters.empty()) throw UsageError("column program: no scatter matrices");
    const int p = scatters[0].matrix.dim();
    for (const auto& s : scatters) {
        if (s.matrix.dim() != p) throw UsageError("column program: scatter dimension mismatch");
    }
}

std::vector<double> column_rhs(int K, int p, int col0, double lambda, int ntheta) {
    std::vector<double> h(static_cast<size_t>(2 * ntheta + 2 * K * p), 0.0);
    for (int i = 0; i < K; ++i) {
        double* minus = h.data() + 2 * ntheta + static_cast<size_t>(i) * 2 * p;
        double* plus = minus + p;
        for (int k = 0; k < p; ++k) {
            const double b = (k == col0) ? 1.0 : 0.0;
            minus[k] = lambda - b;
            plus[k] = lambda + b;
        }
    }
    return h;
}

struct ColumnProgramResult {
    std::vector<double> theta;
    lp::LPSolution sol;
};

ColumnProgramResult solve_column_program(const std::vector<ScatterMatrix>& scatters, int col0,
                                         double lambda, bool with_shared, double gamma,
                                         const lp::SolverOptions& solver) {
    const int K = static_cast<int>(scatters.size());
    const int p = scatters[0].matrix.dim();
    const int blocks = K + (with_shared ? 1 : 0);
    const int ntheta = blocks * p;

    ColumnOps ops(scatters, with_shared, gamma);
    std::vector<double> c(static_cast<size_t>(2 * ntheta), 0.0);
    for (int t = 0; t < ntheta; ++t) c[ntheta + t] = 1.0;
    const std::vector<double> h = column_rhs(K, p, col0, lambda, ntheta);

    ColumnProgramResult out;
    out.sol = lp::solve_ipm(ops, c, h, solver);
    out.theta.assign(out.sol.x.begin(), out.sol.x.begin() + ntheta);
    return out;
}

}  // namespace

lp::LinearProgram build_column_lp(const std::vector<ScatterMatrix>& scatters, int col,
                                  const SimuleConfig& cfg) {
    cfg.validate();
    check_scatters(scatters);
    const int K = static_cast<int>(scatters.size());
    const int p = scatters[0].matrix.dim();
    if (col < 1 || col > p) throw UsageError("build_column_lp: column index out of range");
    const int col0 = col - 1;
    const int ntheta = (K + 1) * p;
    const int nvars = 2 * ntheta;
    const int m = 2 * ntheta + 2 * K * p;
    const double gamma = 1.0 / (cfg.epsilon * K);

    DenseMatrix g(m, nvars);
    for (int t = 0; t < ntheta; ++t) {
        g(t, t) = -1.0;
        g(t, ntheta + t) = -1.0;
        g(ntheta + t, t) = 1.0;
        g(ntheta + t, ntheta + t) = -1.0;
    }
    for (int i = 0; i < K; ++i) {
        const SymmetricMatrix& sigma = scatters[i].matrix;
        const int base = 2 * ntheta + i * 2 * p;
        for (int k = 0; k < p; ++k) {
            for (int a = 0; a < p; ++a) {
                g(base + k, i * p + a) = -sigma(k, a);
                g(base + k, K * p + a) = -gamma * sigma(k, a);
                g(base + p + k, i * p + a) = sigma(k, a);
                g(base + p + k, K * p + a) = gamma * sigma(k, a);
            }
        }
    }

    lp::LinearProgram prob;
    prob.num_vars = nvars;
    prob.objective.assign(nvars, 0.0);
    for (int t = 0; t < ntheta; ++t) prob.objective[ntheta + t] = 1.0;
    prob.ineq_matrix = std::move(g);
    prob.ineq_rhs = column_rhs(K, p, col0, cfg.lambda_n, ntheta);
    return prob;
}

namespace {

ColumnSolution extract_column_solution(const std::vector<ScatterMatrix>& scatters, int col0,
                                       double lambda, double epsilon,
                                       const ColumnProgramResult& res) {
    const int K = static_cast<int>(scatters.size());
    const int p = scatters[0].matrix.dim();
    ColumnSolution out;
    out.col = col0 + 1;
    out.diag.status = res.sol.status;
    out.diag.iterations = res.sol.iterations;
    out.diag.duality_gap = res.sol.duality_gap;
    out.beta_individual.assign(K, std::vector<double>(p, 0.0));
    out.beta_shared.assign(p, 0.0);

    if (res.sol.status != lp::Status::Optimal) {
        out.feasible = false;
        return out;
    }
    for (int i = 0; i < K; ++i) {
        std::copy(res.theta.begin() + static_cast<size_t>(i) * p,
                  res.theta.begin() + static_cast<size_t>(i + 1) * p, out.beta_individual[i].begin());
    }
    const double inv = 1.0 / (epsilon * K);
    for (int a = 0; a < p; ++a) out.beta_shared[a] = res.theta[static_cast<size_t>(K) * p + a] * inv;

    double resid = 0.0;
    std::vector<double> combo(p);
    for (int i = 0; i < K; ++i) {
        for (int a = 0; a < p; ++a) combo[a] = out.beta_individual[i][a] + out.beta_shared[a];
        const SymmetricMatrix& sigma = scatters[i].matrix;
        for (int k = 0; k < p; ++k) {
            double acc = 0.0;
            const double* row = sigma.row(k);
            for (int a = 0; a < p; ++a) acc += row[a] * combo[a];
            acc -= (k == col0) ? 1.0 : 0.0;
            resid = std::max(resid, std::fabs(acc));
        }
    }
    out.diag.constraint_residual = resid;
    (void)lambda;
    return out;
}

}  // namespace

ColumnSolution estimate_column(const std::vector<ScatterMatrix>& scatters, int col,
                               const SimuleConfig& cfg) {
    cfg.validate();
    check_scatters(scatters);
    const int p = scatters[0].matrix.dim();
    if (col < 1 || col > p) throw UsageError("estimate_column: column index out of range");
    const int K = static_cast<int>(scatters.size());
    const double gamma = 1.0 / (cfg.epsilon * K);
    const ColumnProgramResult res =
        solve_column_program(scatters, col - 1, cfg.lambda_n, true, gamma, cfg.solver);
    return extract_column_solution(scatters, col - 1, cfg.lambda_n, cfg.epsilon, res);
}

JointPrecisionEstimate estimate_from_scatters(const std::vector<ScatterMatrix>& scatters,
                                              const SimuleConfig& cfg) {
    cfg.validate();
    check_scatters(scatters);
    const int K = static_cast<int>(scatters.size());
    const int p = scatters[0].matrix.dim();
    const double gamma = 1.0 / (cfg.epsilon * K);

    DenseMatrix raw_shared(p, p);
    std::vector<DenseMatrix> raw_ind(K, DenseMatrix(p, p));
    std::vector<ColumnDiagnostics> diags(p);
    std::vector<char> bad(p, 0);

    parallel_for(p, cfg.workers, [&](int j) {
        ColumnSolution sol;
        try {
            const ColumnProgramResult res =
                solve_column_program(scatters, j, cfg.lambda_n, true, gamma, cfg.solver);
            sol = extract_column_solution(scatters, j, cfg.lambda_n, cfg.epsilon, res);
        } catch (const SolverError&) {
            sol.feasible = false;
            sol.diag.status = lp::Status::IterationLimit;
            sol.beta_individual.assign(K, std::vector<double>(p, 0.0));
            sol.beta_shared.assign(p, 0.0);
        }
        diags[j] = sol.diag;
        bad[j] = sol.feasible ? 0 : 1;
        for (int a = 0; a < p; ++a) raw_shared(a, j) = sol.beta_shared[a];
        for (int i = 0; i < K; ++i) {
            for (int a = 0; a < p; ++a) raw_ind[i](a, j) = sol.beta_individual[i][a];
        }
    });

    JointPrecisionEstimate est;
    est.config = cfg;
    est.column_diagnostics = std::move(diags);
    for (int j = 0; j < p; ++j) {
        if (bad[j]) est.infeasible_columns.push_back(j + 1);
    }
    if (static_cast<int>(est.infeasible_columns.size()) == p) {
        throw EstimationError("estimate: every column is infeasible; increase lambda_n");
    }
    est.omega_shared = symmetrize(raw_shared);
    est.omega_individual.reserve(K);
    for (int i = 0; i < K; ++i) est.omega_individual.push_back(symmetrize(raw_ind[i]));
    return est;
}

JointPrecisionEstimate estimate(const std::vector<TaskData>& tasks, const SimuleConfig& cfg) {
    cfg.validate();
    if (tasks.empty()) throw UsageError("estimate: no tasks");
    const int p = tasks[0].num_features();
    const std::optional<std::vector<std::string>>& names = tasks[0].feature_names;
    for (const auto& t : tasks) {
        if (t.num_features() != p) throw DataError("estimate: tasks disagree on feature count");
        if (names && t.feature_names && *t.feature_names != *names) {
            throw DataError("estimate: tasks disagree on feature names");
        }
    }

    std::vector<ScatterMatrix> scatters;
    std::vector<int> counts;
    scatters.reserve(tasks.size());
    for (const auto& t : tasks) {
        scatters.push_back(cfg.mode == EstimatorMode::Gaussian ? sample_covariance(t)
                                                               : nonparanormal_correlation(t));
        counts.push_back(t.num_samples());
    }
    if (cfg.intertwined) {
        scatters = intertwined_covariance(scatters, counts, cfg.intertwined_alpha);
    }
    return estimate_from_scatters(scatters, cfg);
}

SymmetricMatrix clime_single_from_scatter(const ScatterMatrix& scatter, double lambda,
                                          const lp::SolverOptions& solver, int workers,
                                          std::vector<int>* infeasible_columns) {
    if (!(lambda > 0.0)) throw UsageError("clime_single: lambda must be positive");
    solver.validate();
    const int p = scatter.matrix.dim();
    const std::vector<ScatterMatrix> single{scatter};

    DenseMatrix raw(p, p);
    std::vector<char> bad(p, 0);
    parallel_for(p, workers, [&](int j) {
        try {
            const ColumnProgramResult res =
                solve_column_program(single, j, lambda, /*with_shared=*/false, 0.0, solver);
            if (res.sol.status == lp::Status::Optimal) {
                for (int a = 0; a < p; ++a) raw(a, j) = res.theta[a];
            } else {
                bad[j] = 1;
            }
        } catch (const SolverError&) {
            bad[j] = 1;
        }
    });
    int nbad = 0;
    for (int j = 0; j < p; ++j) {
        if (bad[j]) {
            ++nbad;
            if (infeasible_columns) infeasible_columns->push_back(j + 1);
        }
    }
    if (nbad == p) throw EstimationError("clime_single: every column is infeasible; increase lambda");
    return symmetrize(raw);
}

SymmetricMatrix clime_single(const TaskData& task, double lambda, const lp::SolverOptions& solver) {
    return clime_single_from_scatter(sample_covariance(task), lambda, solver);
}

}  // namespace simule
