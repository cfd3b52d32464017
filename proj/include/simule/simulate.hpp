#ifndef SIMULE_SIMULATE_HPP
#define SIMULE_SIMULATE_HPP

#include <string>
#include <vector>

#include "simule/covariance.hpp"
#include "simule/matrix.hpp"
#include "simule/rng.hpp"

namespace simule {

enum class ModelTag { Model1, Model2 };

// Ground-truth precision matrices plus the edge supports used for scoring.
// Supports exclude the diagonal; the shared support is identical across tasks
// by construction.
struct GroundTruth {
    std::vector<SymmetricMatrix> omegas;       // one per task, positive definite
    BoolMatrix shared_support;                 // p x p
    std::vector<BoolMatrix> individual_supports;
    ModelTag model_tag = ModelTag::Model1;

    int num_tasks() const { return static_cast<int>(omegas.size()); }
    int dim() const { return omegas.empty() ? 0 : omegas[0].dim(); }
    // Off-diagonal support of the full precision matrix of task i.
    BoolMatrix total_support(int i) const;
};

// Random shared + individual supports. Off-diagonal entries of the individual
// part of task i (1-based) are 0.5 with probability 0.05*i; the shared part
// uses probability 0.1. Each omega is shifted by delta*I so its smallest
// eigenvalue is at least 0.5.
GroundTruth gen_model1(int K, int p, Seed seed);

// Deterministic two-task instance: a grid graph (task 1) and a ring graph
// (task 2), edge weight 0.2, unit diagonal. The shared support is the
// intersection of the two edge sets; individual supports are the differences.
GroundTruth gen_model2(int p);

// n i.i.d. draws from N(0, omega^{-1}).
TaskData sample_gaussian(const SymmetricMatrix& omega, int n, Seed seed);

// Gaussian draws pushed through z = sign(x) * sqrt(|x|), so that
// sign(z) z^2 recovers the latent Gaussian sample.
TaskData sample_nonparanormal(const SymmetricMatrix& omega, int n, Seed seed);

}  // namespace simule

#endif
