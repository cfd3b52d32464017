#include "simule/simulate.hpp"

#include <cmath>

namespace simule {

BoolMatrix GroundTruth::total_support(int i) const {
    const SymmetricMatrix& om = omegas.at(i);
    BoolMatrix s(om.dim());
    for (int j = 0; j < om.dim(); ++j) {
        for (int k = j + 1; k < om.dim(); ++k) {
            if (om(j, k) != 0.0) s.set(j, k, true);
        }
    }
    return s;
}

GroundTruth gen_model1(int K, int p, Seed seed) {
    if (K < 1) throw UsageError("gen_model1: K must be at least 1");
    if (p < 2) throw UsageError("gen_model1: p must be at least 2");

    // Stream 0 drives the shared part, stream i the individual part of task i.
    Rng shared_rng(seed, 0);
    SymmetricMatrix b_shared(p);
    BoolMatrix shared_support(p);
    for (int j = 0; j < p; ++j) {
        for (int k = j + 1; k < p; ++k) {
            if (shared_rng.bernoulli(0.1)) {
                b_shared.set(j, k, 0.5);
                shared_support.set(j, k, true);
            }
        }
    }

    GroundTruth truth;
    truth.model_tag = ModelTag::Model1;
    truth.shared_support = shared_support;
    for (int i = 1; i <= K; ++i) {
        Rng rng(seed, static_cast<std::uint64_t>(i));
        const double prob = 0.05 * i;
        SymmetricMatrix b(p);
        BoolMatrix support(p);
        for (int j = 0; j < p; ++j) {
            for (int k = j + 1; k < p; ++k) {
                if (rng.bernoulli(prob)) {
                    b.set(j, k, 0.5);
                    support.set(j, k, true);
                }
            }
        }
        SymmetricMatrix base(p);
        for (int j = 0; j < p; ++j) {
            for (int k = j; k < p; ++k) base.set(j, k, b(j, k) + b_shared(j, k));
        }
        const double lambda_min = min_eigenvalue(base, 1e-6);
        const double delta = std::max(0.0, -lambda_min) + 0.5;
        SymmetricMatrix omega = base;
        for (int j = 0; j < p; ++j) omega.set(j, j, base(j, j) + delta);
        truth.omegas.push_back(std::move(omega));
        truth.individual_supports.push_back(std::move(support));
    }
    return truth;
}

GroundTruth gen_model2(int p) {
    if (p < 4) throw UsageError("gen_model2: p must be at least 4");

    // Grid on the ceil(sqrt(p)) x ceil(p/rows) lattice, truncated to p nodes.
    const int rows = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(p))));
    const int cols = (p + rows - 1) / rows;
    BoolMatrix grid(p);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            const int id = r * cols + c;
            if (id >= p) continue;
            const int right = id + 1;
            if (c + 1 < cols && right < p) grid.set(id, right, true);
            const int down = id + cols;
            if (r + 1 < rows && down < p) grid.set(id, down, true);
        }
    }
    BoolMatrix ring(p);
    for (int j = 0; j < p; ++j) ring.set(j, (j + 1) % p, true);

    auto build_omega = [p](const BoolMatrix& support) {
        SymmetricMatrix om(p);
        for (int j = 0; j < p; ++j) {
            om.set(j, j, 1.0);
            for (int k = j + 1; k < p; ++k) {
                if (support.at(j, k)) om.set(j, k, 0.2);
            }
        }
        return om;
    };

    BoolMatrix shared(p);
    BoolMatrix only_grid(p);
    BoolMatrix only_ring(p);
    for (int j = 0; j < p; ++j) {
        for (int k = j + 1; k < p; ++k) {
            const bool g = grid.at(j, k);
            const bool r = ring.at(j, k);
            if (g && r) shared.set(j, k, true);
            if (g && !r) only_grid.set(j, k, true);
            if (r && !g) only_ring.set(j, k, true);
        }
    }

    GroundTruth truth;
    truth.model_tag = ModelTag::Model2;
    truth.omegas.push_back(build_omega(grid));
    truth.omegas.push_back(build_omega(ring));
    truth.shared_support = shared;
    truth.individual_supports.push_back(only_grid);
    truth.individual_supports.push_back(only_ring);
    return truth;
}

TaskData sample_gaussian(const SymmetricMatrix& omega, int n, Seed seed) {
    if (n < 2) throw DataError("sample_gaussian: need n >= 2");
    const int p = omega.dim();

    // Sigma = omega^{-1}, then X = Z L^T with L L^T = Sigma.
    const DenseMatrix sigma_dense = solve_spd(omega, DenseMatrix::identity(p));
    const SymmetricMatrix sigma = SymmetricMatrix::from_dense_average(sigma_dense);
    const DenseMatrix chol = cholesky(sigma);

    Rng rng(seed, 0);
    DenseMatrix x(n, p);
    std::vector<double> z(p);
    for (int s = 0; s < n; ++s) {
        for (int j = 0; j < p; ++j) z[j] = rng.normal();
        double* row = x.row(s);
        for (int j = 0; j < p; ++j) {
            const double* lj = chol.row(j);
            double acc = 0.0;
            for (int t = 0; t <= j; ++t) acc += lj[t] * z[t];
            row[j] = acc;
        }
    }
    return TaskData(std::move(x));
}

TaskData sample_nonparanormal(const SymmetricMatrix& omega, int n, Seed seed) {
    TaskData data = sample_gaussian(omega, n, seed);
    const int p = data.num_features();
    for (int s = 0; s < n; ++s) {
        double* row = data.samples.row(s);
        for (int j = 0; j < p; ++j) {
            const double v = row[j];
            row[j] = (v < 0.0 ? -1.0 : 1.0) * std::sqrt(std::fabs(v));
            if (v == 0.0) row[j] = 0.0;
        }
    }
    return data;
}

}  // namespace simule
