#include "simule/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>

namespace simule {

DenseMatrix::DenseMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows <= 0 || cols <= 0) {
        throw UsageError("DenseMatrix: dimensions must be positive");
    }
    data_.assign(static_cast<size_t>(rows) * cols, 0.0);
}

DenseMatrix DenseMatrix::identity(int n) {
    DenseMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

DenseMatrix DenseMatrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    const int r = static_cast<int>(rows.size());
    if (r == 0) throw UsageError("DenseMatrix: empty row list");
    const int c = static_cast<int>(rows.begin()->size());
    DenseMatrix m(r, c);
    int i = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != c) {
            throw UsageError("DenseMatrix: ragged row list");
        }
        int j = 0;
        for (double v : row) m(i, j++) = v;
        ++i;
    }
    if (!m.all_finite()) throw UsageError("DenseMatrix: non-finite entry");
    return m;
}

DenseMatrix DenseMatrix::from_data(int rows, int cols, std::vector<double> entries) {
    if (rows <= 0 || cols <= 0) throw UsageError("DenseMatrix: dimensions must be positive");
    if (entries.size() != static_cast<size_t>(rows) * cols) {
        throw UsageError("DenseMatrix: entry count does not match rows*cols");
    }
    DenseMatrix m;
    m.rows_ = rows;
    m.cols_ = cols;
    m.data_ = std::move(entries);
    if (!m.all_finite()) throw UsageError("DenseMatrix: non-finite entry");
    return m;
}

bool DenseMatrix::all_finite() const {
    for (double v : data_) {
        if (!std::isfinite(v)) return false;
    }
    return true;
}

SymmetricMatrix::SymmetricMatrix(int dim) : dim_(dim) {
    if (dim <= 0) throw UsageError("SymmetricMatrix: dimension must be positive");
    data_.assign(static_cast<size_t>(dim) * dim, 0.0);
}

SymmetricMatrix SymmetricMatrix::identity(int n) {
    SymmetricMatrix s(n);
    for (int i = 0; i < n; ++i) s.set(i, i, 1.0);
    return s;
}

SymmetricMatrix SymmetricMatrix::from_dense(const DenseMatrix& m) {
    if (m.rows() != m.cols()) throw UsageError("SymmetricMatrix: matrix not square");
    SymmetricMatrix s(m.rows());
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j <= i; ++j) {
            if (m(i, j) != m(j, i)) {
                throw UsageError("SymmetricMatrix: input not exactly symmetric");
            }
            s.set(i, j, m(i, j));
        }
    }
    if (!m.all_finite()) throw UsageError("SymmetricMatrix: non-finite entry");
    return s;
}

SymmetricMatrix SymmetricMatrix::from_dense_average(const DenseMatrix& m) {
    if (m.rows() != m.cols()) throw UsageError("SymmetricMatrix: matrix not square");
    SymmetricMatrix s(m.rows());
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j <= i; ++j) {
            s.set(i, j, 0.5 * (m(i, j) + m(j, i)));
        }
    }
    return s;
}

SymmetricMatrix SymmetricMatrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    return from_dense(DenseMatrix::from_rows(rows));
}

double SymmetricMatrix::trace() const {
    double t = 0.0;
    for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

DenseMatrix SymmetricMatrix::to_dense() const {
    DenseMatrix m(dim_, dim_);
    std::memcpy(m.data(), data_.data(), sizeof(double) * data_.size());
    return m;
}

DenseMatrix mat_mul(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols() != b.rows()) throw UsageError("mat_mul: inner dimensions differ");
    DenseMatrix out(a.rows(), b.cols());
    const int n = b.cols();
    for (int i = 0; i < a.rows(); ++i) {
        double* oi = out.row(i);
        for (int k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            const double* bk = b.row(k);
            for (int j = 0; j < n; ++j) oi[j] += aik * bk[j];
        }
    }
    return out;
}

double inf_norm(const DenseMatrix& a) {
    double m = 0.0;
    const double* d = a.data();
    const size_t n = static_cast<size_t>(a.rows()) * a.cols();
    for (size_t i = 0; i < n; ++i) m = std::max(m, std::fabs(d[i]));
    return m;
}

double inf_norm(const SymmetricMatrix& a) {
    double m = 0.0;
    const double* d = a.data();
    const size_t n = static_cast<size_t>(a.dim()) * a.dim();
    for (size_t i = 0; i < n; ++i) m = std::max(m, std::fabs(d[i]));
    return m;
}

namespace detail {

bool cholesky_inplace(double* a, int n, double pivot_floor) {
    for (int j = 0; j < n; ++j) {
        double* aj = a + static_cast<size_t>(j) * n;
        double d = aj[j];
        for (int k = 0; k < j; ++k) d -= aj[k] * aj[k];
        if (d <= pivot_floor || d <= 0.0) return false;
        const double ljj = std::sqrt(d);
        aj[j] = ljj;
        const double inv = 1.0 / ljj;
        for (int i = j + 1; i < n; ++i) {
            double* ai = a + static_cast<size_t>(i) * n;
            double v = ai[j];
            for (int k = 0; k < j; ++k) v -= ai[k] * aj[k];
            ai[j] = v * inv;
        }
    }
    return true;
}

void lower_solve_inplace(const double* chol, int n, double* b) {
    for (int i = 0; i < n; ++i) {
        const double* li = chol + static_cast<size_t>(i) * n;
        double v = b[i];
        for (int k = 0; k < i; ++k) v -= li[k] * b[k];
        b[i] = v / li[i];
    }
}

void lower_transpose_solve_inplace(const double* chol, int n, double* b) {
    for (int i = n - 1; i >= 0; --i) {
        double v = b[i];
        for (int k = i + 1; k < n; ++k) v -= chol[static_cast<size_t>(k) * n + i] * b[k];
        b[i] = v / chol[static_cast<size_t>(i) * n + i];
    }
}

void cholesky_solve_inplace(const double* chol, int n, double* b) {
    lower_solve_inplace(chol, n, b);
    lower_transpose_solve_inplace(chol, n, b);
}

}  // namespace detail

DenseMatrix cholesky(const SymmetricMatrix& s) {
    const int n = s.dim();
    DenseMatrix work = s.to_dense();
    const double pivot_floor = 1e-12 * (s.trace() / n);
    if (!detail::cholesky_inplace(work.data(), n, pivot_floor)) {
        throw NotPositiveDefinite("cholesky: matrix is not numerically positive definite");
    }
    // Zero the strict upper triangle left over from the input copy.
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) work(i, j) = 0.0;
    }
    return work;
}

double min_eigenvalue(const SymmetricMatrix& s, double tol) {
    if (!(tol > 0.0)) throw UsageError("min_eigenvalue: tol must be positive");
    const int n = s.dim();
    // Gershgorin lower bound and the Rayleigh upper bound min_i s_ii.
    double lo = std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
        double off = 0.0;
        for (int j = 0; j < n; ++j) {
            if (j != i) off += std::fabs(s(i, j));
        }
        lo = std::min(lo, s(i, i) - off);
        hi = std::min(hi, s(i, i));
    }
    if (hi - lo <= tol) return 0.5 * (lo + hi);

    DenseMatrix work(n, n);
    const int max_iters = 500;
    int iter = 0;
    while (hi - lo > tol) {
        if (++iter > max_iters) {
            throw SolverError("min_eigenvalue: bisection did not converge");
        }
        const double mid = 0.5 * (lo + hi);
        // s - mid*I is PD  <=>  lambda_min(s) > mid.
        double trace_shift = 0.0;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) work(i, j) = s(i, j);
            work(i, i) -= mid;
            trace_shift += work(i, i);
        }
        const double floor = 1e-12 * (trace_shift / n);
        if (detail::cholesky_inplace(work.data(), n, floor)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

DenseMatrix solve_spd(const SymmetricMatrix& s, const DenseMatrix& rhs) {
    const int n = s.dim();
    if (rhs.rows() != n) throw UsageError("solve_spd: rhs row count does not match matrix");
    const DenseMatrix chol = cholesky(s);

    const int k = rhs.cols();
    DenseMatrix x(n, k);
    std::vector<double> col(n);
    for (int c = 0; c < k; ++c) {
        for (int i = 0; i < n; ++i) col[i] = rhs(i, c);
        detail::cholesky_solve_inplace(chol.data(), n, col.data());
        // One refinement pass.
        std::vector<double> resid(n);
        for (int i = 0; i < n; ++i) {
            double v = rhs(i, c);
            const double* si = s.row(i);
            for (int j = 0; j < n; ++j) v -= si[j] * col[j];
            resid[i] = v;
        }
        detail::cholesky_solve_inplace(chol.data(), n, resid.data());
        for (int i = 0; i < n; ++i) x(i, c) = col[i] + resid[i];
    }
    return x;
}

int BoolMatrix::count_upper() const {
    int c = 0;
    for (int i = 0; i < dim_; ++i) {
        for (int j = i + 1; j < dim_; ++j) {
            if (at(i, j)) ++c;
        }
    }
    return c;
}

}  // namespace simule
