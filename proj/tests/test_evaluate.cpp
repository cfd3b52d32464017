#include "simule/evaluate.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "simule/rng.hpp"

namespace simule {
namespace {

SymmetricMatrix with_entries(int p, std::initializer_list<std::pair<std::pair<int, int>, double>> es) {
    SymmetricMatrix m(p);
    for (const auto& [jk, v] : es) m.set(jk.first, jk.second, v);
    return m;
}

BoolMatrix support(int p, std::initializer_list<std::pair<int, int>> edges) {
    BoolMatrix b(p);
    for (const auto& [j, k] : edges) b.set(j, k, true);
    return b;
}

TEST(EdgeConfusion, PerfectRecovery) {
    const SymmetricMatrix est = with_entries(3, {{{0, 1}, 0.5}, {{1, 2}, 0.5}});
    const BoolMatrix truth = support(3, {{0, 1}, {1, 2}});
    const ConfusionCounts c = edge_confusion(est, truth, 1e-5);
    EXPECT_EQ(c.fp, 0);
    EXPECT_EQ(c.fn, 0);
    EXPECT_EQ(c.tp, 2);
    EXPECT_EQ(c.tn, 1);
}

TEST(EdgeConfusion, EmptyPrediction) {
    const SymmetricMatrix est(3);
    const BoolMatrix truth = support(3, {{0, 1}, {0, 2}});
    const ConfusionCounts c = edge_confusion(est, truth, 1e-5);
    EXPECT_EQ(c.tp, 0);
    EXPECT_EQ(c.fp, 0);
    EXPECT_EQ(c.fn, 2);
}

TEST(EdgeConfusion, HandCountedThreeSlots) {
    // truth edge {(0,1)}; est nonzero at {(0,1),(0,2)}.
    const SymmetricMatrix est = with_entries(3, {{{0, 1}, 0.3}, {{0, 2}, -0.2}});
    const BoolMatrix truth = support(3, {{0, 1}});
    const ConfusionCounts c = edge_confusion(est, truth, 1e-5);
    EXPECT_EQ(c.tp, 1);
    EXPECT_EQ(c.fp, 1);
    EXPECT_EQ(c.tn, 1);
    EXPECT_EQ(c.fn, 0);
}

TEST(EdgeConfusion, CountsSumToUpperTriangle) {
    Rng rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const int p = 2 + static_cast<int>(rng.uniform01() * 10);
        SymmetricMatrix est(p);
        BoolMatrix truth(p);
        for (int j = 0; j < p; ++j) {
            for (int k = j + 1; k < p; ++k) {
                if (rng.bernoulli(0.4)) est.set(j, k, rng.normal());
                if (rng.bernoulli(0.3)) truth.set(j, k, true);
            }
        }
        const ConfusionCounts c = edge_confusion(est, truth, 1e-5);
        EXPECT_EQ(c.tp + c.fp + c.tn + c.fn, static_cast<long>(p) * (p - 1) / 2);
    }
}

TEST(EdgeConfusion, DimensionMismatchThrows) {
    EXPECT_THROW(edge_confusion(SymmetricMatrix(3), BoolMatrix(4), 1e-5), UsageError);
}

TEST(RocCurve, AnchorsAndSorting) {
    const RocCurve c = RocCurve::from_points({{0.4, 0.9}, {0.1, 0.5}});
    ASSERT_EQ(c.points.size(), 4u);
    EXPECT_EQ(c.points.front().fpr, 0.0);
    EXPECT_EQ(c.points.front().tpr, 0.0);
    EXPECT_EQ(c.points.back().fpr, 1.0);
    EXPECT_EQ(c.points.back().tpr, 1.0);
    for (size_t i = 0; i + 1 < c.points.size(); ++i) {
        EXPECT_LE(c.points[i].fpr, c.points[i + 1].fpr);
    }
}

TEST(Auc, PerfectCurve) {
    const RocCurve c = RocCurve::from_points({{0.0, 1.0}});
    EXPECT_DOUBLE_EQ(auc(c), 1.0);
    EXPECT_DOUBLE_EQ(partial_auc(c, 0.2), 0.2);
    EXPECT_DOUBLE_EQ(partial_auc(c, 0.05), 0.05);
}

TEST(Auc, DiagonalCurve) {
    const RocCurve c = RocCurve::from_points({});
    EXPECT_DOUBLE_EQ(auc(c), 0.5);
}

TEST(Auc, DuplicateFprKeepsMaxTpr) {
    // {(0,0),(0.5,0.5),(1,1)} plus an extra (0.5,1.0): the curve keeps the
    // better TPR at fpr 0.5, so the trapezoid sum is 0.75.
    const RocCurve c = RocCurve::from_points({{0.5, 0.5}, {0.5, 1.0}});
    EXPECT_DOUBLE_EQ(auc(c), 0.75);
}

TEST(Auc, AgreesWithRiemannOracle) {
    Rng rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        // Random monotone curve.
        const int npts = 3 + static_cast<int>(rng.uniform01() * 10);
        std::vector<RocPoint> pts;
        double x = 0.0, y = 0.0;
        for (int i = 0; i < npts; ++i) {
            x = std::min(1.0, x + rng.uniform01() * 0.3);
            y = std::min(1.0, y + rng.uniform01() * 0.4);
            pts.push_back({x, y});
        }
        const RocCurve c = RocCurve::from_points(pts);
        // Riemann sum over fpr with linear interpolation.
        const double step = 1e-4;
        double riemann = 0.0;
        for (double t = 0.0; t < 1.0; t += step) {
            const double mid = t + step / 2.0;
            size_t seg = 0;
            while (seg + 1 < c.points.size() && c.points[seg + 1].fpr < mid) ++seg;
            const RocPoint& a = c.points[seg];
            const RocPoint& b = c.points[seg + 1];
            const double w = (b.fpr > a.fpr) ? (mid - a.fpr) / (b.fpr - a.fpr) : 1.0;
            riemann += step * (a.tpr + w * (b.tpr - a.tpr));
        }
        EXPECT_NEAR(auc(c), riemann, 1e-3);
        EXPECT_GE(auc(c), 0.0);
        EXPECT_LE(auc(c), 1.0);
        EXPECT_LE(partial_auc(c, 0.2), 0.2 + 1e-12);
        EXPECT_LE(partial_auc(c, 0.2), auc(c) + 1e-12);
    }
}

TEST(Bic, SingleCandidateSelected) {
    const GroundTruth truth = gen_model1(2, 6, Seed{5});
    std::vector<TaskData> tasks;
    for (int i = 0; i < 2; ++i) tasks.push_back(sample_gaussian(truth.omegas[i], 60, Seed{6u + i}));
    SimuleConfig cfg;
    cfg.lambda_n = 0.3;
    const JointPrecisionEstimate est = estimate(tasks, cfg);
    EXPECT_EQ(bic_select({{cfg, est}}, tasks), 0);
}

TEST(Bic, DiagonalCandidatesMatchHandFormula) {
    // With Sigma-hat ~ I at n = 100, p = 2 the identity candidate scores
    // ~100*(2 - 0) = 200 and 0.5*I scores ~100*(1 + 2 log 2) ~ 238.6.
    Rng rng(123);
    DenseMatrix m(100, 2);
    for (int i = 0; i < 100; ++i) {
        m(i, 0) = rng.normal();
        m(i, 1) = rng.normal();
    }
    std::vector<TaskData> tasks;
    tasks.emplace_back(m);
    const ScatterMatrix cov = sample_covariance(tasks[0]);

    auto diag_candidate = [](double c) {
        JointPrecisionEstimate est;
        est.omega_shared = SymmetricMatrix(2);
        est.omega_shared.set(0, 0, c);
        est.omega_shared.set(1, 1, c);
        est.omega_individual.push_back(SymmetricMatrix(2));
        return est;
    };
    SimuleConfig cfg;
    const std::vector<std::pair<SimuleConfig, JointPrecisionEstimate>> candidates{
        {cfg, diag_candidate(1.0)}, {cfg, diag_candidate(0.5)}};
    const std::vector<BicScore> scores = bic_scores(candidates, tasks);
    ASSERT_EQ(scores.size(), 2u);

    // Independent evaluation for diagonal candidates c*I:
    //   n (c (s00 + s11) - 2 log c) + log(n) * 0 edges.
    const double s_sum = cov.matrix(0, 0) + cov.matrix(1, 1);
    const double expect_identity = 100.0 * (1.0 * s_sum - 0.0);
    const double expect_half = 100.0 * (0.5 * s_sum + 2.0 * std::log(2.0));
    EXPECT_NEAR(scores[0].bic, expect_identity, 1e-9);
    EXPECT_NEAR(scores[1].bic, expect_half, 1e-9);
    EXPECT_FALSE(scores[0].logdet_shifted);

    // Frozen comparison at the idealized Sigma-hat = I: 200 < 238.6294361.
    EXPECT_NEAR(100.0 * (1.0 + 2.0 * std::log(2.0)), 238.6294361, 1e-6);
    EXPECT_EQ(bic_select(candidates, tasks), 0);
}

TEST(Bic, SparserCandidateWinsOnEqualFit) {
    // Two identical estimates except one extra spurious edge: the edge-count
    // penalty breaks the tie.
    const GroundTruth truth = gen_model1(1, 5, Seed{9});
    std::vector<TaskData> tasks{sample_gaussian(truth.omegas[0], 50, Seed{10})};
    SimuleConfig cfg;
    cfg.lambda_n = 0.5;
    JointPrecisionEstimate sparse = estimate(tasks, cfg);
    JointPrecisionEstimate dense = sparse;
    // Inject a tiny extra edge: fit terms move by O(1e-8), the penalty by log(50).
    SymmetricMatrix bumped = dense.omega_shared;
    bumped.set(0, 4, 1e-4);
    dense.omega_shared = bumped;
    const int pick = bic_select({{cfg, dense}, {cfg, sparse}}, tasks);
    EXPECT_EQ(pick, 1);
}

TEST(Bic, TieBreaksToSmallestIndex) {
    const GroundTruth truth = gen_model1(1, 4, Seed{13});
    std::vector<TaskData> tasks{sample_gaussian(truth.omegas[0], 40, Seed{14})};
    SimuleConfig cfg;
    cfg.lambda_n = 0.4;
    const JointPrecisionEstimate est = estimate(tasks, cfg);
    EXPECT_EQ(bic_select({{cfg, est}, {cfg, est}}, tasks), 0);
}

TEST(RocSweep, TinyModelOneSmoke) {
    const int K = 2, p = 10;
    const GroundTruth truth = gen_model1(K, p, Seed{31});
    std::vector<TaskData> tasks;
    for (int i = 0; i < K; ++i) tasks.push_back(sample_gaussian(truth.omegas[i], 120, Seed{32u + i}));
    SimuleConfig base;
    base.workers = 2;
    const std::vector<double> alphas{0.3, 0.6, 0.9, 1.2};
    const SweepResult sweep = roc_sweep(tasks, truth, alphas, base, SweepEstimator::Simule);
    EXPECT_EQ(sweep.records.size() + sweep.skipped_alphas.size(), alphas.size());
    const AucReport r = sweep.report();
    EXPECT_GE(r.auc, 0.0);
    EXPECT_LE(r.auc, 1.0);
    ASSERT_TRUE(r.auc_shared.has_value());
    ASSERT_TRUE(r.auc_individual.has_value());
    EXPECT_LE(r.pauc_20, 0.2 + 1e-12);
    EXPECT_LE(r.pauc_5, 0.05 + 1e-12);

    // Determinism across worker counts.
    SimuleConfig serial = base;
    serial.workers = 1;
    const SweepResult again = roc_sweep(tasks, truth, alphas, serial, SweepEstimator::Simule);
    ASSERT_EQ(again.records.size(), sweep.records.size());
    for (size_t i = 0; i < sweep.records.size(); ++i) {
        EXPECT_EQ(sweep.records[i].total.fpr, again.records[i].total.fpr);
        EXPECT_EQ(sweep.records[i].total.tpr, again.records[i].total.tpr);
    }
}

TEST(RocSweep, ClimeProducesTotalsOnly) {
    const int K = 2, p = 8;
    const GroundTruth truth = gen_model1(K, p, Seed{47});
    std::vector<TaskData> tasks;
    for (int i = 0; i < K; ++i) tasks.push_back(sample_gaussian(truth.omegas[i], 100, Seed{50u + i}));
    SimuleConfig base;
    const SweepResult sweep = roc_sweep(tasks, truth, {0.4, 0.8}, base, SweepEstimator::Clime);
    const AucReport r = sweep.report();
    EXPECT_FALSE(r.auc_shared.has_value());
    EXPECT_FALSE(r.auc_individual.has_value());
}

TEST(RocSweep, SelfTestPerfectRecoveryScoresOne) {
    // Score the truth against itself through the confusion/curve chain.
    const GroundTruth truth = gen_model2(9);
    const BoolMatrix total = truth.total_support(0);
    SymmetricMatrix est(9);
    for (int j = 0; j < 9; ++j) {
        for (int k = j + 1; k < 9; ++k) {
            if (total.at(j, k)) est.set(j, k, 0.5);
        }
    }
    const ConfusionCounts c = edge_confusion(est, total, 1e-5);
    const RocCurve curve = RocCurve::from_points({{c.fpr(), c.tpr()}});
    EXPECT_DOUBLE_EQ(auc(curve), 1.0);
}

TEST(RocSweep, EmptyGridThrows) {
    const GroundTruth truth = gen_model2(4);
    std::vector<TaskData> tasks;
    for (int i = 0; i < 2; ++i) tasks.push_back(sample_gaussian(truth.omegas[i], 30, Seed{60u + i}));
    SimuleConfig base;
    EXPECT_THROW(roc_sweep(tasks, truth, {}, base), UsageError);
}

TEST(ConvergenceProbe, DeterministicAndShrinking) {
    SimuleConfig base;
    base.workers = 2;
    const std::vector<Seed> seeds{Seed{1}, Seed{2}};
    const auto rows = convergence_probe(2, 10, {50, 400}, seeds, 0.5, base);
    ASSERT_EQ(rows.size(), 2u);
    ASSERT_EQ(rows[0].frob_per_seed.size(), 2u);
    const auto again = convergence_probe(2, 10, {50, 400}, seeds, 0.5, base);
    for (size_t i = 0; i < rows.size(); ++i) {
        for (size_t s = 0; s < seeds.size(); ++s) {
            EXPECT_EQ(rows[i].frob_per_seed[s], again[i].frob_per_seed[s]);
        }
    }
    // More data should help on average at this scale.
    EXPECT_LT(rows[1].mean_frob, rows[0].mean_frob);
}

TEST(ConvergenceProbe, RejectsNonIncreasingN) {
    SimuleConfig base;
    EXPECT_THROW(convergence_probe(2, 10, {100, 100}, {Seed{1}}, 0.5, base), UsageError);
}

}  // namespace
}  // namespace simule
