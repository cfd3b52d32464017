#include "simule/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace simule::lp {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

void LinearProgram::validate() const {
    if (num_vars <= 0) throw UsageError("LinearProgram: num_vars must be positive");
    if (static_cast<int>(objective.size()) != num_vars) {
        throw UsageError("LinearProgram: objective length does not match num_vars");
    }
    if (ineq_matrix.cols() != num_vars) {
        throw UsageError("LinearProgram: constraint matrix width does not match num_vars");
    }
    if (static_cast<int>(ineq_rhs.size()) != ineq_matrix.rows()) {
        throw UsageError("LinearProgram: rhs length does not match constraint rows");
    }
    for (double v : objective) {
        if (!std::isfinite(v)) throw UsageError("LinearProgram: non-finite objective entry");
    }
    for (double v : ineq_rhs) {
        if (!std::isfinite(v)) throw UsageError("LinearProgram: non-finite rhs entry");
    }
    if (!ineq_matrix.all_finite()) throw UsageError("LinearProgram: non-finite constraint entry");
}

void SolverOptions::validate() const {
    if (!(feasibility_tol > 0.0) || !(gap_tol > 0.0)) {
        throw UsageError("SolverOptions: tolerances must be positive");
    }
    if (max_iters < 1) throw UsageError("SolverOptions: max_iters must be at least 1");
    if (!(step_fraction > 0.0 && step_fraction < 1.0)) {
        throw UsageError("SolverOptions: step_fraction must lie in (0, 1)");
    }
}

DenseConstraintOps::DenseConstraintOps(const DenseMatrix& g)
    : g_(g), normal_(g.cols(), g.cols()) {}

void DenseConstraintOps::apply(const double* x, double* out) const {
    const int m = g_.rows(), n = g_.cols();
    for (int i = 0; i < m; ++i) {
        const double* gi = g_.row(i);
        double acc = 0.0;
        for (int j = 0; j < n; ++j) acc += gi[j] * x[j];
        out[i] = acc;
    }
}

void DenseConstraintOps::apply_transpose(const double* y, double* out) const {
    const int m = g_.rows(), n = g_.cols();
    std::fill(out, out + n, 0.0);
    for (int i = 0; i < m; ++i) {
        const double yi = y[i];
        if (yi == 0.0) continue;
        const double* gi = g_.row(i);
        for (int j = 0; j < n; ++j) out[j] += yi * gi[j];
    }
}

void DenseConstraintOps::factor(const double* weights) {
    const int m = g_.rows(), n = g_.cols();
    DenseMatrix normal(n, n);
    for (int i = 0; i < m; ++i) {
        const double wi = weights[i];
        const double* gi = g_.row(i);
        for (int j = 0; j < n; ++j) {
            const double s = wi * gi[j];
            if (s == 0.0) continue;
            double* nj = normal.row(j);
            for (int k = j; k < n; ++k) nj[k] += s * gi[k];
        }
    }
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < j; ++k) normal(j, k) = normal(k, j);
    }
    double trace = 0.0;
    for (int j = 0; j < n; ++j) trace += normal(j, j);

    double reg = 0.0;
    for (int attempt = 0; attempt < 10; ++attempt) {
        normal_ = normal;
        for (int j = 0; j < n; ++j) normal_(j, j) += reg;
        if (detail::cholesky_inplace(normal_.data(), n, 0.0)) return;
        reg = (reg == 0.0) ? std::max(1e-10 * trace / n, 1e-300) : reg * 100.0;
    }
    throw SolverError("DenseConstraintOps: normal matrix factorization failed");
}

void DenseConstraintOps::solve(const double* rhs, double* out) const {
    const int n = g_.cols();
    std::copy(rhs, rhs + n, out);
    detail::cholesky_solve_inplace(normal_.data(), n, out);
}

namespace {

// Adds a single extra variable t with constraint column -1 on every row:
// G'(x, t) = G x - t 1. The normal matrix gains a scalar Schur complement.
class PhaseOneOps final : public ConstraintOps {
public:
    explicit PhaseOneOps(ConstraintOps& inner)
        : inner_(inner), col_sum_(inner.cols()), inner_sol_(inner.cols()) {}

    int rows() const override { return inner_.rows(); }
    int cols() const override { return inner_.cols() + 1; }

    void apply(const double* x, double* out) const override {
        inner_.apply(x, out);
        const double t = x[inner_.cols()];
        for (int i = 0; i < inner_.rows(); ++i) out[i] -= t;
    }

    void apply_transpose(const double* y, double* out) const override {
        inner_.apply_transpose(y, out);
        double s = 0.0;
        for (int i = 0; i < inner_.rows(); ++i) s += y[i];
        out[inner_.cols()] = -s;
    }

    void factor(const double* weights) override {
        inner_.factor(weights);
        // Cross term -G^T w and corner sum(w).
        inner_.apply_transpose(weights, col_sum_.data());
        corner_ = 0.0;
        for (int i = 0; i < inner_.rows(); ++i) corner_ += weights[i];
        inner_.solve(col_sum_.data(), inner_sol_.data());
        double dot = 0.0;
        for (int j = 0; j < inner_.cols(); ++j) dot += col_sum_[j] * inner_sol_[j];
        schur_ = corner_ - dot;
        if (!(schur_ > 0.0)) schur_ = std::max(1e-12 * std::fabs(corner_), 1e-300);
    }

    void solve(const double* rhs, double* out) const override {
        const int n = inner_.cols();
        std::vector<double> a(n);
        inner_.solve(rhs, a.data());
        double dot = 0.0;
        for (int j = 0; j < n; ++j) dot += col_sum_[j] * a[j];
        const double dt = (rhs[n] + dot) / schur_;
        // dx = A^{-1}(rhs_x + w * dt) = a + dt * A^{-1} w.
        for (int j = 0; j < n; ++j) out[j] = a[j] + dt * inner_sol_[j];
        out[n] = dt;
    }

private:
    ConstraintOps& inner_;
    std::vector<double> col_sum_;   // G^T w
    std::vector<double> inner_sol_; // (G^T W G)^{-1} G^T w
    double corner_ = 0.0;
    double schur_ = 0.0;
};

double max_step(const std::vector<double>& v, const std::vector<double>& dv) {
    double a = kInf;
    for (size_t i = 0; i < v.size(); ++i) {
        if (dv[i] < 0.0) a = std::min(a, -v[i] / dv[i]);
    }
    return a;
}

// Returns the phase-I optimum (min t with G x - t 1 <= h), or -inf when a
// strictly feasible point was found early.
double phase_one_optimum(ConstraintOps& ops, const std::vector<double>& h,
                         const SolverOptions& opts) {
    PhaseOneOps p1(ops);
    std::vector<double> c(p1.cols(), 0.0);
    c.back() = 1.0;
    SolverOptions p1_opts = opts;
    p1_opts.max_iters = std::max(opts.max_iters, 100);
    LPSolution sol = solve_ipm(p1, c, h, p1_opts, /*classify_with_phase1=*/false);
    if (sol.status == Status::Optimal || !sol.x.empty()) return sol.objective_value;
    return kInf;
}

}  // namespace

LPSolution solve_ipm(ConstraintOps& ops, const std::vector<double>& c,
                     const std::vector<double>& h, const SolverOptions& opts,
                     bool classify_with_phase1) {
    opts.validate();
    const int n = ops.cols();
    const int m = ops.rows();
    if (static_cast<int>(c.size()) != n || static_cast<int>(h.size()) != m) {
        throw UsageError("solve_ipm: dimension mismatch");
    }
    if (m == 0) throw UsageError("solve_ipm: no constraints");

    double c_norm = 0.0;
    for (double v : c) c_norm = std::max(c_norm, std::fabs(v));

    std::vector<double> x(n, 0.0), s(m), y(m, 1.0);
    std::vector<double> gx(m), rd(n), rp(m);
    std::vector<double> d(m), rhs(n), tmp_m(m), tmp_n(n);
    std::vector<double> dx(n), ds(m), dy(m), dx_cc(n), ds_cc(m), dy_cc(m);

    ops.apply(x.data(), gx.data());
    for (int i = 0; i < m; ++i) s[i] = std::max(1.0, h[i] - gx[i]);

    LPSolution best;
    best.x = x;
    best.status = Status::IterationLimit;

    int iter = 0;
    bool farkas = false;
    for (; iter < opts.max_iters; ++iter) {
        ops.apply(x.data(), gx.data());
        double primal_violation = 0.0;
        double rp_norm = 0.0;
        for (int i = 0; i < m; ++i) {
            rp[i] = gx[i] + s[i] - h[i];
            rp_norm = std::max(rp_norm, std::fabs(rp[i]));
            primal_violation = std::max(primal_violation, gx[i] - h[i]);
        }
        ops.apply_transpose(y.data(), rd.data());
        double rd_norm = 0.0;
        for (int j = 0; j < n; ++j) {
            rd[j] += c[j];
            rd_norm = std::max(rd_norm, std::fabs(rd[j]));
        }
        double pobj = 0.0, dobj = 0.0, mu = 0.0;
        for (int j = 0; j < n; ++j) pobj += c[j] * x[j];
        for (int i = 0; i < m; ++i) {
            dobj -= h[i] * y[i];
            mu += s[i] * y[i];
        }
        mu /= m;
        const double gap_rel = std::fabs(pobj - dobj) / (1.0 + std::fabs(pobj) + std::fabs(dobj));

        best.x = x;
        best.objective_value = pobj;
        best.duality_gap = gap_rel;
        best.primal_residual = std::max(primal_violation, 0.0);
        best.iterations = iter;

        if (rp_norm <= opts.feasibility_tol && rd_norm <= opts.feasibility_tol * (1.0 + c_norm) &&
            (gap_rel <= opts.gap_tol || mu <= opts.gap_tol)) {
            best.status = Status::Optimal;
            return best;
        }

        // Farkas-style certificate: a large dual ray with G^T y ~ 0 and
        // h^T y < 0 witnesses primal infeasibility.
        double y_norm = 0.0, hy = 0.0;
        for (int i = 0; i < m; ++i) {
            y_norm = std::max(y_norm, y[i]);
            hy += h[i] * y[i];
        }
        if (y_norm > 1e8) {
            double ray_res = 0.0;
            ops.apply_transpose(y.data(), tmp_n.data());
            for (int j = 0; j < n; ++j) ray_res = std::max(ray_res, std::fabs(tmp_n[j]));
            if (ray_res <= 1e-6 * y_norm * (1.0 + c_norm) && hy < -1e-6 * y_norm) {
                best.status = Status::Infeasible;
                return best;
            }
        }

        for (int i = 0; i < m; ++i) d[i] = y[i] / s[i];
        ops.factor(d.data());

        // Predictor (affine) step: complementarity target 0.
        // (G^T D G) dx = -rd - G^T [ (y*rp - rc) / s ],  rc_i = s_i y_i.
        for (int i = 0; i < m; ++i) tmp_m[i] = (y[i] * rp[i] - s[i] * y[i]) / s[i];
        ops.apply_transpose(tmp_m.data(), tmp_n.data());
        for (int j = 0; j < n; ++j) rhs[j] = -rd[j] - tmp_n[j];
        ops.solve(rhs.data(), dx.data());
        ops.apply(dx.data(), tmp_m.data());
        for (int i = 0; i < m; ++i) {
            ds[i] = -rp[i] - tmp_m[i];
            dy[i] = -(s[i] * y[i] + y[i] * ds[i]) / s[i];
        }
        const double ap_aff = std::min(1.0, max_step(s, ds));
        const double ad_aff = std::min(1.0, max_step(y, dy));
        double mu_aff = 0.0;
        for (int i = 0; i < m; ++i) {
            mu_aff += (s[i] + ap_aff * ds[i]) * (y[i] + ad_aff * dy[i]);
        }
        mu_aff /= m;
        double sigma = mu > 0.0 ? std::pow(mu_aff / mu, 3.0) : 0.0;
        sigma = std::clamp(sigma, 0.0, 1.0);

        // Corrector: target sigma*mu minus the second-order term.
        for (int i = 0; i < m; ++i) {
            const double rc = s[i] * y[i] - sigma * mu + ds[i] * dy[i];
            tmp_m[i] = (y[i] * rp[i] - rc) / s[i];
        }
        ops.apply_transpose(tmp_m.data(), tmp_n.data());
        for (int j = 0; j < n; ++j) rhs[j] = -rd[j] - tmp_n[j];
        ops.solve(rhs.data(), dx_cc.data());
        ops.apply(dx_cc.data(), tmp_m.data());
        for (int i = 0; i < m; ++i) {
            ds_cc[i] = -rp[i] - tmp_m[i];
            const double rc = s[i] * y[i] - sigma * mu + ds[i] * dy[i];
            dy_cc[i] = -(rc + y[i] * ds_cc[i]) / s[i];
        }

        const double ap = std::min(1.0, opts.step_fraction * max_step(s, ds_cc));
        const double ad = std::min(1.0, opts.step_fraction * max_step(y, dy_cc));
        if (ap < 1e-12 && ad < 1e-12) break;  // stalled
        for (int j = 0; j < n; ++j) x[j] += ap * dx_cc[j];
        for (int i = 0; i < m; ++i) {
            s[i] += ap * ds_cc[i];
            y[i] += ad * dy_cc[i];
        }
    }
    best.iterations = iter;

    if (!farkas && classify_with_phase1) {
        const double t_star = phase_one_optimum(ops, h, opts);
        best.status = (t_star > 10.0 * opts.feasibility_tol) ? Status::Infeasible
                                                             : Status::IterationLimit;
    }
    return best;
}

LPSolution solve_lp(const LinearProgram& prob, const SolverOptions& opts) {
    prob.validate();
    DenseConstraintOps ops(prob.ineq_matrix);
    return solve_ipm(ops, prob.objective, prob.ineq_rhs, opts);
}

namespace {

// Gaussian elimination with partial pivoting for the tiny square systems the
// oracle enumerates. Returns false on (near-)singularity.
bool solve_square(std::vector<double> a, std::vector<double> b, int n, std::vector<double>* out) {
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r) {
            if (std::fabs(a[r * n + col]) > std::fabs(a[piv * n + col])) piv = r;
        }
        if (std::fabs(a[piv * n + col]) < 1e-9) return false;
        if (piv != col) {
            for (int k = 0; k < n; ++k) std::swap(a[col * n + k], a[piv * n + k]);
            std::swap(b[col], b[piv]);
        }
        const double inv = 1.0 / a[col * n + col];
        for (int r = col + 1; r < n; ++r) {
            const double f = a[r * n + col] * inv;
            if (f == 0.0) continue;
            for (int k = col; k < n; ++k) a[r * n + k] -= f * a[col * n + k];
            b[r] -= f * b[col];
        }
    }
    out->assign(n, 0.0);
    for (int r = n - 1; r >= 0; --r) {
        double v = b[r];
        for (int k = r + 1; k < n; ++k) v -= a[r * n + k] * (*out)[k];
        (*out)[r] = v / a[r * n + r];
    }
    return true;
}

struct BoxedEnumeration {
    bool feasible = false;
    double best = kInf;
    bool best_on_box = false;
};

BoxedEnumeration enumerate_with_box(const LinearProgram& prob, double box) {
    const int n = prob.num_vars;
    const int m = prob.ineq_matrix.rows();
    const int total = m + 2 * n;

    auto row_entry = [&](int r, int j) -> double {
        if (r < m) return prob.ineq_matrix(r, j);
        const int k = r - m;
        if (k < n) return (j == k) ? 1.0 : 0.0;   // x_k <= box
        return (j == k - n) ? -1.0 : 0.0;         // -x_k <= box
    };
    auto row_rhs = [&](int r) -> double {
        return (r < m) ? prob.ineq_rhs[r] : box;
    };

    BoxedEnumeration result;
    std::vector<int> pick(n);
    std::vector<double> sub(static_cast<size_t>(n) * n), rhs(n), x;

    // Enumerate all n-subsets of the augmented row set.
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    while (true) {
        for (int r = 0; r < n; ++r) {
            for (int j = 0; j < n; ++j) sub[r * n + j] = row_entry(idx[r], j);
            rhs[r] = row_rhs(idx[r]);
        }
        if (solve_square(sub, rhs, n, &x)) {
            bool ok = true;
            for (int r = 0; r < total && ok; ++r) {
                double acc = 0.0;
                for (int j = 0; j < n; ++j) acc += row_entry(r, j) * x[j];
                if (acc > row_rhs(r) + 1e-7 * (1.0 + std::fabs(row_rhs(r)))) ok = false;
            }
            if (ok) {
                result.feasible = true;
                double obj = 0.0;
                bool on_box = false;
                for (int j = 0; j < n; ++j) {
                    obj += prob.objective[j] * x[j];
                    if (std::fabs(std::fabs(x[j]) - box) <= 1e-3 * box) on_box = true;
                }
                if (obj < result.best - 1e-12) {
                    result.best = obj;
                    result.best_on_box = on_box;
                } else if (obj <= result.best + 1e-12 && !on_box) {
                    result.best_on_box = false;
                }
            }
        }
        // Next combination.
        int i = n - 1;
        while (i >= 0 && idx[i] == total - n + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int k = i + 1; k < n; ++k) idx[k] = idx[k - 1] + 1;
    }
    return result;
}

}  // namespace

double brute_force_lp_oracle(const LinearProgram& prob) {
    prob.validate();
    if (prob.num_vars > 4) throw UsageError("brute_force_lp_oracle: num_vars cap is 4");
    if (prob.ineq_matrix.rows() > 12) throw UsageError("brute_force_lp_oracle: row cap is 12");

    const BoxedEnumeration a = enumerate_with_box(prob, 1e6);
    if (!a.feasible) return kInf;
    const BoxedEnumeration b = enumerate_with_box(prob, 2e6);
    // Objective still improving when the box grows => unbounded below.
    if (b.best < a.best - 1e-6 * (1.0 + std::fabs(a.best))) return -kInf;
    if (a.best_on_box && b.best_on_box && b.best < a.best - 1e-12) return -kInf;
    return a.best;
}

}  // namespace simule::lp
