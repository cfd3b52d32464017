#include "simule/cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

#include "simule/io.hpp"

namespace simule {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

int run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "simule");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    return cli::run(static_cast<int>(argv.size()), argv.data());
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        base_ = fs::path(::testing::TempDir()) /
                ("simule_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(base_);
        fs::create_directories(base_);
    }
    void TearDown() override { fs::remove_all(base_); }

    std::string dir(const std::string& name) const { return (base_ / name).string(); }

    fs::path base_;
};

TEST_F(CliTest, SimulateWritesAllFilesAndIsDeterministic) {
    const std::string out1 = dir("sim1");
    const std::string out2 = dir("sim2");
    for (const std::string& out : {out1, out2}) {
        ASSERT_EQ(run_cli({"simulate", "--model", "model1", "--p", "6", "--K", "2", "--n", "30",
                           "--seed", "42", "--out", out}),
                  0);
    }
    const std::vector<std::string> files{"data_task1.csv",
                                         "data_task2.csv",
                                         "truth_omega1.csv",
                                         "truth_omega2.csv",
                                         "truth_individual_support1.csv",
                                         "truth_individual_support2.csv",
                                         "truth_shared_support.csv",
                                         "meta.json"};
    for (const auto& f : files) {
        EXPECT_TRUE(fs::exists(fs::path(out1) / f)) << f;
    }
    for (const auto& f : files) {
        if (f == "meta.json") continue;  // carries wall-clock time
        EXPECT_EQ(io::read_text_file((fs::path(out1) / f).string()),
                  io::read_text_file((fs::path(out2) / f).string()))
            << f;
    }
    const DenseMatrix data = io::read_matrix_csv((fs::path(out1) / "data_task1.csv").string());
    EXPECT_EQ(data.rows(), 30);
    EXPECT_EQ(data.cols(), 6);
}

TEST_F(CliTest, SimulateModel2IgnoresTaskCount) {
    const std::string out = dir("m2");
    ASSERT_EQ(run_cli({"simulate", "--model", "model2", "--p", "9", "--K", "5", "--n", "20",
                       "--seed", "7", "--out", out}),
              0);
    EXPECT_TRUE(fs::exists(fs::path(out) / "data_task2.csv"));
    EXPECT_FALSE(fs::exists(fs::path(out) / "data_task3.csv"));
    const json meta = json::parse(io::read_text_file((fs::path(out) / "meta.json").string()));
    EXPECT_EQ(meta.at("config").at("K").get<int>(), 2);
}

TEST_F(CliTest, EstimateSimuleWritesDecomposition) {
    const std::string sim = dir("sim");
    ASSERT_EQ(run_cli({"simulate", "--model", "model1", "--p", "6", "--K", "2", "--n", "60",
                       "--seed", "5", "--out", sim}),
              0);
    const std::string out = dir("est");
    ASSERT_EQ(run_cli({"estimate", "--inputs",
                       sim + "/data_task1.csv," + sim + "/data_task2.csv", "--mode", "simule",
                       "--lambda-alpha", "0.6", "--out", out, "--workers", "2"}),
              0);
    for (const std::string f : {"omega_shared.csv", "omega_individual1.csv", "omega_individual2.csv",
                                "omega_total1.csv", "omega_total2.csv", "report.json", "meta.json"}) {
        EXPECT_TRUE(fs::exists(fs::path(out) / f)) << f;
    }
    // Totals equal shared + individual at the emitted precision.
    const DenseMatrix shared = io::read_matrix_csv((fs::path(out) / "omega_shared.csv").string());
    const DenseMatrix ind = io::read_matrix_csv((fs::path(out) / "omega_individual1.csv").string());
    const DenseMatrix tot = io::read_matrix_csv((fs::path(out) / "omega_total1.csv").string());
    for (int j = 0; j < 6; ++j) {
        for (int k = 0; k < 6; ++k) {
            EXPECT_NEAR(tot(j, k), shared(j, k) + ind(j, k),
                        1e-9 * (1.0 + std::fabs(tot(j, k))));
        }
    }
    const json report = json::parse(io::read_text_file((fs::path(out) / "report.json").string()));
    EXPECT_TRUE(report.contains("lambda_n"));
    EXPECT_TRUE(report.contains("edge_counts"));
    EXPECT_TRUE(report.contains("infeasible_columns"));
}

TEST_F(CliTest, EstimateEpsilonOneIsUsageError) {
    const std::string sim = dir("sim");
    ASSERT_EQ(run_cli({"simulate", "--model", "model1", "--p", "4", "--K", "1", "--n", "20",
                       "--seed", "9", "--out", sim}),
              0);
    EXPECT_EQ(run_cli({"estimate", "--inputs", sim + "/data_task1.csv", "--mode", "simule",
                       "--lambda-alpha", "0.5", "--epsilon", "1", "--out", dir("x")}),
              1);
}

TEST_F(CliTest, EstimateClimeHasNoSharedOutput) {
    const std::string sim = dir("sim");
    ASSERT_EQ(run_cli({"simulate", "--model", "model1", "--p", "5", "--K", "2", "--n", "40",
                       "--seed", "11", "--out", sim}),
              0);
    const std::string out = dir("clime");
    ASSERT_EQ(run_cli({"estimate", "--inputs",
                       sim + "/data_task1.csv," + sim + "/data_task2.csv", "--mode", "clime",
                       "--lambda-alpha", "0.6", "--out", out}),
              0);
    EXPECT_FALSE(fs::exists(fs::path(out) / "omega_shared.csv"));
    EXPECT_TRUE(fs::exists(fs::path(out) / "omega_total1.csv"));
    EXPECT_TRUE(fs::exists(fs::path(out) / "omega_total2.csv"));
}

TEST_F(CliTest, EstimateMissingInputIsDataError) {
    EXPECT_EQ(run_cli({"estimate", "--inputs", dir("nope.csv"), "--lambda-alpha", "0.5", "--out",
                       dir("x")}),
              2);
}

TEST_F(CliTest, EstimateRaggedCsvIsDataError) {
    const std::string bad = dir("bad.csv");
    io::write_text_file(bad, "1,2,3\n4,5\n");
    EXPECT_EQ(run_cli({"estimate", "--inputs", bad, "--lambda-alpha", "0.5", "--out", dir("x")}), 2);
}

TEST_F(CliTest, EstimateShapeMismatchIsDataError) {
    const std::string a = dir("a.csv");
    const std::string b = dir("b.csv");
    io::write_text_file(a, "1,2\n3,4\n5,6\n");
    io::write_text_file(b, "1,2,3\n4,5,6\n7,8,9\n");
    EXPECT_EQ(run_cli({"estimate", "--inputs", a + "," + b, "--lambda-alpha", "0.5", "--out",
                       dir("x")}),
              2);
}

TEST_F(CliTest, EstimateDegenerateDataIsEstimationError) {
    const std::string a = dir("flat.csv");
    io::write_text_file(a, "1,2\n1,2\n");  // zero covariance: every column infeasible
    EXPECT_EQ(run_cli({"estimate", "--inputs", a, "--lambda-alpha", "0.1", "--out", dir("x")}), 3);
}

TEST_F(CliTest, UnknownFlagsAreUsageErrors) {
    EXPECT_EQ(run_cli({"simulate", "--model", "model1"}), 1);      // missing required flags
    EXPECT_EQ(run_cli({"frobnicate"}), 1);                          // unknown subcommand
    EXPECT_EQ(run_cli({"roc", "--truth-dir", dir("none"), "--alphas", "oops", "--out", dir("x")}),
              1);
}

TEST_F(CliTest, RocWritesCurvesAndMeans) {
    const std::string sim = dir("sim");
    ASSERT_EQ(run_cli({"simulate", "--model", "model1", "--p", "6", "--K", "2", "--n", "50",
                       "--seed", "3", "--out", sim}),
              0);
    const std::string out = dir("roc");
    ASSERT_EQ(run_cli({"roc", "--truth-dir", sim, "--mode", "simule", "--alphas", "0.3:0.3:0.9",
                       "--seeds", "2", "--out", out, "--workers", "2"}),
              0);
    for (const std::string f : {"roc_total.csv", "roc_shared.csv", "roc_individual.csv", "auc.json",
                                "meta.json"}) {
        EXPECT_TRUE(fs::exists(fs::path(out) / f)) << f;
    }
    const DenseMatrix curve = io::read_matrix_csv((fs::path(out) / "roc_total.csv").string());
    EXPECT_EQ(curve.cols(), 4);  // alpha, lambda_n, fpr, tpr
    EXPECT_LE(curve.rows(), 3);  // at most one row per grid point

    const json aucj = json::parse(io::read_text_file((fs::path(out) / "auc.json").string()));
    ASSERT_EQ(aucj.at("per_seed").size(), 2u);
    double mean = 0.0;
    for (const auto& r : aucj.at("per_seed")) mean += r.at("auc").get<double>();
    mean /= 2.0;
    EXPECT_NEAR(aucj.at("mean").at("auc").get<double>(), mean, 1e-12);
}

TEST_F(CliTest, RocClimeOmitsPartCurves) {
    const std::string sim = dir("sim");
    ASSERT_EQ(run_cli({"simulate", "--model", "model1", "--p", "5", "--K", "2", "--n", "40",
                       "--seed", "13", "--out", sim}),
              0);
    const std::string out = dir("roc");
    ASSERT_EQ(run_cli({"roc", "--truth-dir", sim, "--mode", "clime", "--alphas", "0.4:0.4:0.8",
                       "--seeds", "1", "--out", out}),
              0);
    EXPECT_TRUE(fs::exists(fs::path(out) / "roc_total.csv"));
    EXPECT_FALSE(fs::exists(fs::path(out) / "roc_shared.csv"));
    const json aucj = json::parse(io::read_text_file((fs::path(out) / "auc.json").string()));
    EXPECT_TRUE(aucj.at("mean").at("auc_shared").is_null());
}

TEST_F(CliTest, BenchTableHasDenominatorRow) {
    const std::string out = dir("bench");
    ASSERT_EQ(run_cli({"bench", "--p", "8", "--K", "2", "--workers", "2", "--seed", "1", "--out",
                       out}),
              0);
    const DenseMatrix t = io::read_matrix_csv((fs::path(out) / "timing.csv").string());
    EXPECT_EQ(t.cols(), 3);
    bool has_serial = false;
    for (int r = 0; r < t.rows(); ++r) {
        if (t(r, 0) == 8.0 && t(r, 1) == 1.0) has_serial = true;
    }
    EXPECT_TRUE(has_serial);
}

TEST_F(CliTest, CsvRoundTripAtEmittedPrecision) {
    DenseMatrix m(3, 2);
    m(0, 0) = 1.0 / 3.0;
    m(0, 1) = -2.5e-7;
    m(1, 0) = 123456.789;
    m(1, 1) = 0.0;
    m(2, 0) = -1e10;
    m(2, 1) = 3.14159265358979;
    const std::string path = dir("roundtrip.csv");
    io::write_matrix_csv(path, m);
    const DenseMatrix back = io::read_matrix_csv(path);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 2; ++j) {
            EXPECT_NEAR(back(i, j), m(i, j), 1e-9 * std::max(1.0, std::fabs(m(i, j))));
        }
    }
    // Writing the parsed values again reproduces the bytes.
    const std::string path2 = dir("roundtrip2.csv");
    io::write_matrix_csv(path2, back);
    EXPECT_EQ(io::read_text_file(path), io::read_text_file(path2));
}

}  // namespace
}  // namespace simule
