#ifndef SIMULE_MATRIX_HPP
#define SIMULE_MATRIX_HPP

#include <initializer_list>
#include <vector>

#include "simule/errors.hpp"

namespace simule {

// Dense real matrix, row-major. Deliberately minimal: the problem sizes here
// are at most a few hundred on a side, so everything stays dense.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(int rows, int cols);  // zero-initialized
    static DenseMatrix identity(int n);
    static DenseMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows);
    static DenseMatrix from_data(int rows, int cols, std::vector<double> entries);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    double& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    double operator()(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }
    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }
    double* row(int r) { return data_.data() + static_cast<size_t>(r) * cols_; }
    const double* row(int r) const { return data_.data() + static_cast<size_t>(r) * cols_; }

    bool all_finite() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> data_;
};

// Symmetric real matrix with full (redundant) row-major storage so rows can be
// streamed in linear-algebra kernels. Entries (j,k) and (k,j) are kept exactly
// equal.
class SymmetricMatrix {
public:
    SymmetricMatrix() = default;
    explicit SymmetricMatrix(int dim);  // zero-initialized
    static SymmetricMatrix identity(int n);
    // Requires exact entrywise symmetry, else UsageError.
    static SymmetricMatrix from_dense(const DenseMatrix& m);
    // Averages (m + m^T)/2; for cleaning up numerical asymmetry of order eps.
    static SymmetricMatrix from_dense_average(const DenseMatrix& m);
    static SymmetricMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

    int dim() const { return dim_; }
    double operator()(int r, int c) const { return data_[static_cast<size_t>(r) * dim_ + c]; }
    void set(int r, int c, double v) {
        data_[static_cast<size_t>(r) * dim_ + c] = v;
        data_[static_cast<size_t>(c) * dim_ + r] = v;
    }
    const double* data() const { return data_.data(); }
    const double* row(int r) const { return data_.data() + static_cast<size_t>(r) * dim_; }
    double trace() const;
    DenseMatrix to_dense() const;

private:
    int dim_ = 0;
    std::vector<double> data_;
};

// out = a * b; dimension mismatch -> UsageError.
DenseMatrix mat_mul(const DenseMatrix& a, const DenseMatrix& b);

// Max absolute entry (elementwise infinity norm); 0 for an empty/zero matrix.
double inf_norm(const DenseMatrix& a);
double inf_norm(const SymmetricMatrix& a);

// Lower-triangular L with L L^T = s. Throws NotPositiveDefinite when a pivot
// falls at or below 1e-12 * trace/dim.
DenseMatrix cholesky(const SymmetricMatrix& s);

// Smallest eigenvalue within +-tol, via bisection on shifted Cholesky
// feasibility. tol must be positive.
double min_eigenvalue(const SymmetricMatrix& s, double tol);

// Solves s * x = rhs for SPD s (multi-column rhs allowed). One step of
// iterative refinement keeps the residual at ~1e-8 relative even for
// moderately ill-conditioned systems.
DenseMatrix solve_spd(const SymmetricMatrix& s, const DenseMatrix& rhs);

// Square boolean pattern (edge supports). Stored dense, symmetric set().
class BoolMatrix {
public:
    BoolMatrix() = default;
    explicit BoolMatrix(int dim) : dim_(dim), data_(static_cast<size_t>(dim) * dim, 0) {}
    int dim() const { return dim_; }
    bool at(int r, int c) const { return data_[static_cast<size_t>(r) * dim_ + c] != 0; }
    void set(int r, int c, bool v) {
        data_[static_cast<size_t>(r) * dim_ + c] = v ? 1 : 0;
        data_[static_cast<size_t>(c) * dim_ + r] = v ? 1 : 0;
    }
    // Number of true entries strictly above the diagonal.
    int count_upper() const;
    bool operator==(const BoolMatrix& o) const { return dim_ == o.dim_ && data_ == o.data_; }

private:
    int dim_ = 0;
    std::vector<unsigned char> data_;
};

namespace detail {

// In-place Cholesky on a full row-major n x n buffer (lower triangle written,
// upper left untouched). Returns false instead of throwing when a pivot is at
// or below pivot_floor.
bool cholesky_inplace(double* a, int n, double pivot_floor);

// Solve L y = b and then L^T x = y with the lower triangle of a packed full
// row-major factor. b is overwritten with x.
void cholesky_solve_inplace(const double* chol, int n, double* b);

// Forward substitution only: L y = b, b overwritten with y.
void lower_solve_inplace(const double* chol, int n, double* b);

// Backward substitution with L^T: L^T x = b, b overwritten with x.
void lower_transpose_solve_inplace(const double* chol, int n, double* b);

}  // namespace detail

}  // namespace simule

#endif
