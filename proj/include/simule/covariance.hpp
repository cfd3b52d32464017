#ifndef SIMULE_COVARIANCE_HPP
#define SIMULE_COVARIANCE_HPP

#include <optional>
#include <string>
#include <vector>

#include "simule/matrix.hpp"

namespace simule {

// One data block: n_i observations (rows) over p features (columns).
struct TaskData {
    DenseMatrix samples;  // n_i x p
    std::optional<std::vector<std::string>> feature_names;
    int task_id = 1;  // 1-based

    TaskData() = default;
    TaskData(DenseMatrix m, int id = 1);

    int num_samples() const { return samples.rows(); }
    int num_features() const { return samples.cols(); }
};

enum class ScatterKind { SampleCovariance, KendallCorrelation, Intertwined };

// A p x p matrix playing the covariance role in the estimation constraints.
struct ScatterMatrix {
    SymmetricMatrix matrix;
    ScatterKind kind = ScatterKind::SampleCovariance;
    int source_n = 0;
};

// Pairwise Kendall rank-correlation coefficients, all in [-1, 1].
struct TauMatrix {
    SymmetricMatrix matrix;
};

// Sample covariance with divisor n_i - 1. Requires n_i >= 2.
ScatterMatrix sample_covariance(const TaskData& x);

// tau_{jk} = 2/(n(n-1)) * sum_{i<i'} sign((z_j^i - z_j^{i'}) (z_k^i - z_k^{i'})).
// Tied pairs contribute 0; no tie correction is applied.
TauMatrix kendall_tau_matrix(const TaskData& x);

// S_{jk} = sin(pi/2 * tau_{jk}) off the diagonal; diagonal forced to exactly 1.
ScatterMatrix nonparanormal_correlation(const TaskData& x);

// Blends each scatter with the sample-size-weighted global average:
//   out_i = alpha * in_i + (1 - alpha) * sum_t n_t in_t / n_tot.
std::vector<ScatterMatrix> intertwined_covariance(const std::vector<ScatterMatrix>& scatters,
                                                  const std::vector<int>& counts, double alpha);

}  // namespace simule

#endif
