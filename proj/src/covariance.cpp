#include "simule/covariance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace simule {

TaskData::TaskData(DenseMatrix m, int id) : samples(std::move(m)), task_id(id) {
    if (samples.rows() < 2) {
        throw DataError("TaskData: at least 2 samples are required");
    }
}

ScatterMatrix sample_covariance(const TaskData& x) {
    const int n = x.num_samples();
    const int p = x.num_features();
    if (n < 2) throw DataError("sample_covariance: need at least 2 samples");

    std::vector<double> mean(p, 0.0);
    for (int s = 0; s < n; ++s) {
        const double* row = x.samples.row(s);
        for (int j = 0; j < p; ++j) mean[j] += row[j];
    }
    for (int j = 0; j < p; ++j) mean[j] /= n;

    DenseMatrix centered(n, p);
    for (int s = 0; s < n; ++s) {
        const double* row = x.samples.row(s);
        double* out = centered.row(s);
        for (int j = 0; j < p; ++j) out[j] = row[j] - mean[j];
    }

    SymmetricMatrix cov(p);
    const double inv = 1.0 / (n - 1);
    for (int j = 0; j < p; ++j) {
        for (int k = j; k < p; ++k) {
            double acc = 0.0;
            for (int s = 0; s < n; ++s) acc += centered(s, j) * centered(s, k);
            cov.set(j, k, acc * inv);
        }
    }
    return ScatterMatrix{std::move(cov), ScatterKind::SampleCovariance, n};
}

namespace {

// Sign of the pairwise differences of one column, packed over all sample
// pairs i < i' in row-major pair order.
void fill_pair_signs(const DenseMatrix& samples, int col, signed char* out) {
    const int n = samples.rows();
    size_t idx = 0;
    for (int i = 0; i < n; ++i) {
        const double zi = samples(i, col);
        for (int k = i + 1; k < n; ++k) {
            const double d = zi - samples(k, col);
            out[idx++] = (d > 0.0) ? 1 : (d < 0.0 ? -1 : 0);
        }
    }
}

}  // namespace

TauMatrix kendall_tau_matrix(const TaskData& x) {
    const int n = x.num_samples();
    const int p = x.num_features();
    if (n < 2) throw DataError("kendall_tau_matrix: need at least 2 samples");

    const size_t npairs = static_cast<size_t>(n) * (n - 1) / 2;
    const double denom = static_cast<double>(n) * (n - 1);

    // Tile over columns so the precomputed sign vectors stay within a modest
    // memory budget even for large p.
    const int tile = 128;
    std::vector<signed char> sa(static_cast<size_t>(tile) * npairs);
    std::vector<signed char> sb(static_cast<size_t>(tile) * npairs);

    SymmetricMatrix tau(p);
    for (int jb = 0; jb < p; jb += tile) {
        const int ja_end = std::min(jb + tile, p);
        for (int j = jb; j < ja_end; ++j) {
            fill_pair_signs(x.samples, j, sa.data() + static_cast<size_t>(j - jb) * npairs);
        }
        for (int kb = jb; kb < p; kb += tile) {
            const int kb_end = std::min(kb + tile, p);
            const signed char* bbuf;
            if (kb == jb) {
                bbuf = sa.data();
            } else {
                for (int k = kb; k < kb_end; ++k) {
                    fill_pair_signs(x.samples, k, sb.data() + static_cast<size_t>(k - kb) * npairs);
                }
                bbuf = sb.data();
            }
            for (int j = jb; j < ja_end; ++j) {
                const signed char* vj = sa.data() + static_cast<size_t>(j - jb) * npairs;
                const int k_start = (kb == jb) ? j : kb;
                for (int k = k_start; k < kb_end; ++k) {
                    const signed char* vk = bbuf + static_cast<size_t>(k - kb) * npairs;
                    std::int64_t acc = 0;
                    for (size_t t = 0; t < npairs; ++t) {
                        acc += static_cast<int>(vj[t]) * static_cast<int>(vk[t]);
                    }
                    tau.set(j, k, 2.0 * static_cast<double>(acc) / denom);
                }
            }
        }
    }
    return TauMatrix{std::move(tau)};
}

ScatterMatrix nonparanormal_correlation(const TaskData& x) {
    const TauMatrix tau = kendall_tau_matrix(x);
    const int p = tau.matrix.dim();
    SymmetricMatrix s(p);
    constexpr double half_pi = 1.5707963267948966;
    for (int j = 0; j < p; ++j) {
        s.set(j, j, 1.0);
        for (int k = j + 1; k < p; ++k) {
            s.set(j, k, std::sin(half_pi * tau.matrix(j, k)));
        }
    }
    return ScatterMatrix{std::move(s), ScatterKind::KendallCorrelation, x.num_samples()};
}

std::vector<ScatterMatrix> intertwined_covariance(const std::vector<ScatterMatrix>& scatters,
                                                  const std::vector<int>& counts, double alpha) {
    if (scatters.empty()) throw UsageError("intertwined_covariance: no scatter matrices");
    if (scatters.size() != counts.size()) {
        throw UsageError("intertwined_covariance: counts do not match scatters");
    }
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw UsageError("intertwined_covariance: alpha must be in [0, 1]");
    }
    const int p = scatters[0].matrix.dim();
    double n_tot = 0.0;
    for (size_t i = 0; i < scatters.size(); ++i) {
        if (scatters[i].matrix.dim() != p) {
            throw UsageError("intertwined_covariance: dimension mismatch");
        }
        if (counts[i] <= 0) throw UsageError("intertwined_covariance: counts must be positive");
        n_tot += counts[i];
    }

    // K = 1: the global average and the single matrix coincide.
    if (scatters.size() == 1) {
        std::vector<ScatterMatrix> out = scatters;
        out[0].kind = ScatterKind::Intertwined;
        return out;
    }

    SymmetricMatrix global(p);
    for (int j = 0; j < p; ++j) {
        for (int k = j; k < p; ++k) {
            double acc = 0.0;
            for (size_t i = 0; i < scatters.size(); ++i) {
                acc += counts[i] * scatters[i].matrix(j, k);
            }
            global.set(j, k, acc / n_tot);
        }
    }

    std::vector<ScatterMatrix> out;
    out.reserve(scatters.size());
    for (size_t i = 0; i < scatters.size(); ++i) {
        SymmetricMatrix m(p);
        for (int j = 0; j < p; ++j) {
            for (int k = j; k < p; ++k) {
                m.set(j, k, alpha * scatters[i].matrix(j, k) + (1.0 - alpha) * global(j, k));
            }
        }
        out.push_back(ScatterMatrix{std::move(m), ScatterKind::Intertwined, scatters[i].source_n});
    }
    return out;
}

}  // namespace simule
