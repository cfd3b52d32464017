#ifndef SIMULE_LP_HPP
#define SIMULE_LP_HPP

#include <vector>

#include "simule/matrix.hpp"

namespace simule::lp {

// minimize c^T x  subject to  G x <= h.
struct LinearProgram {
    int num_vars = 0;
    std::vector<double> objective;  // length num_vars
    DenseMatrix ineq_matrix;        // m x num_vars
    std::vector<double> ineq_rhs;   // length m

    void validate() const;
};

struct SolverOptions {
    double feasibility_tol = 1e-7;
    double gap_tol = 1e-7;
    int max_iters = 200;
    double step_fraction = 0.99;

    void validate() const;
};

enum class Status { Optimal, Infeasible, IterationLimit };

struct LPSolution {
    std::vector<double> x;
    double objective_value = 0.0;
    double duality_gap = 0.0;      // |primal - dual| / (1 + |primal| + |dual|)
    double primal_residual = 0.0;  // max componentwise violation of G x <= h
    int iterations = 0;
    Status status = Status::IterationLimit;
};

// Abstraction over the constraint matrix G so structured problems can supply
// their own normal-equation factorization. All methods must be deterministic.
class ConstraintOps {
public:
    virtual ~ConstraintOps() = default;
    virtual int rows() const = 0;  // m
    virtual int cols() const = 0;  // n
    virtual void apply(const double* x, double* out) const = 0;            // out = G x
    virtual void apply_transpose(const double* y, double* out) const = 0;  // out = G^T y
    // Prepare (G^T diag(w) G + reg I)^{-1}; implementations pick reg starting
    // at 1e-10 * trace/n and escalate if the factorization fails.
    virtual void factor(const double* weights) = 0;
    virtual void solve(const double* rhs, double* out) const = 0;
};

// Dense row-storage implementation of ConstraintOps.
class DenseConstraintOps final : public ConstraintOps {
public:
    explicit DenseConstraintOps(const DenseMatrix& g);
    int rows() const override { return g_.rows(); }
    int cols() const override { return g_.cols(); }
    void apply(const double* x, double* out) const override;
    void apply_transpose(const double* y, double* out) const override;
    void factor(const double* weights) override;
    void solve(const double* rhs, double* out) const override;

private:
    DenseMatrix g_;
    DenseMatrix normal_;  // factored in place
};

// Infeasible-start Mehrotra predictor-corrector on the inequality form.
// When the iteration cap is reached without an optimality or infeasibility
// certificate, a phase-I problem (minimize t s.t. G x - t 1 <= h) is solved
// through the same engine to separate Infeasible from IterationLimit.
LPSolution solve_ipm(ConstraintOps& ops, const std::vector<double>& c,
                     const std::vector<double>& h, const SolverOptions& opts,
                     bool classify_with_phase1 = true);

LPSolution solve_lp(const LinearProgram& prob, const SolverOptions& opts = {});

// Test oracle: optimal objective by enumerating vertex candidates inside a
// huge artificial box. Returns +inf for infeasible problems and -inf for
// problems whose objective is unbounded below. Capped at num_vars <= 4 and
// m <= 12.
double brute_force_lp_oracle(const LinearProgram& prob);

}  // namespace simule::lp

#endif
