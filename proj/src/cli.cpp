#include "simule/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "simule/estimator.hpp"
#include "simule/evaluate.hpp"
#include "simule/io.hpp"
#include "simule/simulate.hpp"

namespace simule::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr const char* kVersion = "simule 0.1.0";

// Stream tags for deriving sampling seeds; keep these stable so outputs are
// reproducible across releases.
constexpr std::uint64_t kSimulateDataTag = 100;  // + task index (1-based)
constexpr std::uint64_t kRocDataTag = 5000;      // + 64*seed_index + task index

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

int default_workers() {
    if (const char* env = std::getenv("SIMULE_WORKERS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

std::vector<std::string> command_echo(int argc, const char* const* argv) {
    std::vector<std::string> cmd;
    for (int i = 0; i < argc; ++i) cmd.emplace_back(argv[i]);
    return cmd;
}

void write_meta(const fs::path& out_dir, const std::vector<std::string>& command,
                const json& config, double wall_seconds) {
    json meta;
    meta["version"] = kVersion;
    meta["command"] = command;
    meta["config"] = config;
    meta["wall_seconds"] = wall_seconds;
    io::write_text_file((out_dir / "meta.json").string(), meta.dump(2) + "\n");
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    size_t pos = 0;
    while (pos <= s.size()) {
        const size_t next = s.find(sep, pos);
        parts.push_back(s.substr(pos, next == std::string::npos ? std::string::npos : next - pos));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return parts;
}

std::vector<double> parse_alpha_grid(const std::string& spec) {
    const std::vector<std::string> parts = split(spec, ':');
    if (parts.size() != 3) throw UsageError("--alphas must look like start:step:stop");
    double start, step, stop;
    try {
        start = std::stod(parts[0]);
        step = std::stod(parts[1]);
        stop = std::stod(parts[2]);
    } catch (const std::exception&) {
        throw UsageError("--alphas must contain numbers");
    }
    if (!(start > 0.0) || !(step > 0.0) || stop < start) {
        throw UsageError("--alphas requires 0 < start <= stop and step > 0");
    }
    std::vector<double> grid;
    for (double a = start; a <= stop + 1e-9; a += step) grid.push_back(a);
    return grid;
}

struct ModeSpec {
    SweepEstimator estimator = SweepEstimator::Simule;
    EstimatorMode scatter = EstimatorMode::Gaussian;
};

ModeSpec parse_mode(const std::string& mode) {
    if (mode == "simule") return {SweepEstimator::Simule, EstimatorMode::Gaussian};
    if (mode == "nsimule") return {SweepEstimator::Simule, EstimatorMode::Nonparanormal};
    if (mode == "clime") return {SweepEstimator::Clime, EstimatorMode::Gaussian};
    if (mode == "nclime") return {SweepEstimator::Clime, EstimatorMode::Nonparanormal};
    throw UsageError("unknown mode: " + mode);
}

std::optional<std::vector<std::string>> maybe_names(bool header, int p) {
    if (!header) return std::nullopt;
    std::vector<std::string> names;
    for (int j = 1; j <= p; ++j) names.push_back("V" + std::to_string(j));
    return names;
}

// ---------------------------------------------------------------- simulate

struct SimulateArgs {
    std::string model;
    int p = 0;
    int K = 3;
    int n = 500;
    std::string dist = "gaussian";
    std::uint64_t seed = 0;
    std::string out;
    bool header = false;
};

int cmd_simulate(const SimulateArgs& a, const std::vector<std::string>& command) {
    Timer timer;
    if (a.n < 2) throw UsageError("--n must be at least 2");
    GroundTruth truth;
    if (a.model == "model1") {
        truth = gen_model1(a.K, a.p, Seed{a.seed});
    } else if (a.model == "model2") {
        truth = gen_model2(a.p);  // always two tasks; --K is ignored
    } else {
        throw UsageError("--model must be model1 or model2");
    }
    const int K = truth.num_tasks();

    fs::create_directories(a.out);
    const fs::path out_dir(a.out);
    const auto names = maybe_names(a.header, a.p);
    for (int i = 1; i <= K; ++i) {
        const Seed data_seed{derive_stream(a.seed, kSimulateDataTag + static_cast<std::uint64_t>(i))};
        const TaskData data = (a.dist == "nonparanormal")
                                  ? sample_nonparanormal(truth.omegas[i - 1], a.n, data_seed)
                                  : sample_gaussian(truth.omegas[i - 1], a.n, data_seed);
        io::write_matrix_csv((out_dir / ("data_task" + std::to_string(i) + ".csv")).string(),
                             data.samples, names);
        io::write_matrix_csv((out_dir / ("truth_omega" + std::to_string(i) + ".csv")).string(),
                             truth.omegas[i - 1]);
        io::write_support_csv(
            (out_dir / ("truth_individual_support" + std::to_string(i) + ".csv")).string(),
            truth.individual_supports[i - 1]);
    }
    io::write_support_csv((out_dir / "truth_shared_support.csv").string(), truth.shared_support);

    json config;
    config["model"] = a.model;
    config["p"] = a.p;
    config["K"] = K;
    config["n"] = a.n;
    config["dist"] = a.dist;
    config["seed"] = a.seed;
    config["out"] = a.out;
    write_meta(out_dir, command, config, timer.seconds());
    std::cout << "simulate: wrote " << K << " task(s) of " << a.n << "x" << a.p << " "
              << a.dist << " samples to " << a.out << "\n";
    return 0;
}

// ---------------------------------------------------------------- estimate

struct EstimateArgs {
    std::string inputs;
    std::string mode = "simule";
    bool intertwined = false;
    double alpha_cov = 0.5;
    double lambda_alpha = 0.0;
    double epsilon = 0.5;
    int workers = 0;
    std::string out = ".";
    bool header = false;
};

json diagnostics_summary(const JointPrecisionEstimate& est) {
    double max_gap = 0.0, max_resid = 0.0;
    long iters = 0;
    for (const auto& d : est.column_diagnostics) {
        max_gap = std::max(max_gap, d.duality_gap);
        max_resid = std::max(max_resid, d.constraint_residual);
        iters += d.iterations;
    }
    json j;
    j["max_duality_gap"] = max_gap;
    j["max_constraint_residual"] = max_resid;
    j["mean_iterations"] =
        est.column_diagnostics.empty() ? 0.0
                                       : static_cast<double>(iters) / est.column_diagnostics.size();
    return j;
}

int cmd_estimate(const EstimateArgs& a, const std::vector<std::string>& command) {
    Timer timer;
    const ModeSpec mode = parse_mode(a.mode);
    if (a.intertwined && mode.estimator != SweepEstimator::Simule) {
        throw UsageError("--intertwined applies to the simule/nsimule modes");
    }
    const std::vector<std::string> paths = split(a.inputs, ',');
    if (paths.empty() || paths[0].empty()) throw UsageError("--inputs requires at least one CSV");

    std::vector<TaskData> tasks;
    for (size_t i = 0; i < paths.size(); ++i) {
        TaskData t(io::read_matrix_csv(paths[i]), static_cast<int>(i) + 1);
        if (!tasks.empty() && t.num_features() != tasks[0].num_features()) {
            throw DataError("inputs disagree on feature count: " + paths[i]);
        }
        tasks.push_back(std::move(t));
    }
    const int K = static_cast<int>(tasks.size());
    const int p = tasks[0].num_features();
    long n_tot = 0;
    for (const auto& t : tasks) n_tot += t.num_samples();

    fs::create_directories(a.out);
    const fs::path out_dir(a.out);
    const auto names = maybe_names(a.header, p);
    const int workers = a.workers >= 1 ? a.workers : default_workers();

    json config;
    config["mode"] = a.mode;
    config["lambda_alpha"] = a.lambda_alpha;
    config["epsilon"] = a.epsilon;
    config["intertwined"] = a.intertwined;
    config["alpha_cov"] = a.alpha_cov;
    config["workers"] = workers;
    config["inputs"] = paths;
    config["edge_threshold"] = 1e-5;

    json report;
    report["config"] = config;

    if (mode.estimator == SweepEstimator::Simule) {
        SimuleConfig cfg;
        cfg.mode = mode.scatter;
        cfg.epsilon = a.epsilon;
        cfg.intertwined = a.intertwined;
        cfg.intertwined_alpha = a.alpha_cov;
        cfg.workers = workers;
        cfg.lambda_n = lambda_from_alpha(a.lambda_alpha, K, p, n_tot);
        cfg.validate();

        const JointPrecisionEstimate est = estimate(tasks, cfg);
        io::write_matrix_csv((out_dir / "omega_shared.csv").string(), est.omega_shared, names);
        json edge_counts;
        edge_counts["shared"] = count_edges(est.omega_shared, cfg.edge_threshold);
        for (int i = 1; i <= K; ++i) {
            const SymmetricMatrix total = est.total(i - 1);
            io::write_matrix_csv(
                (out_dir / ("omega_individual" + std::to_string(i) + ".csv")).string(),
                est.omega_individual[i - 1], names);
            io::write_matrix_csv((out_dir / ("omega_total" + std::to_string(i) + ".csv")).string(),
                                 total, names);
            edge_counts["individual" + std::to_string(i)] =
                count_edges(est.omega_individual[i - 1], cfg.edge_threshold);
            edge_counts["total" + std::to_string(i)] = count_edges(total, cfg.edge_threshold);
        }
        report["lambda_n"] = cfg.lambda_n;
        report["edge_counts"] = edge_counts;
        report["infeasible_columns"] = est.infeasible_columns;
        report["diagnostics"] = diagnostics_summary(est);
        std::cout << "estimate: " << a.mode << " on " << K << " task(s), lambda_n = "
                  << io::format_value(cfg.lambda_n) << ", " << est.infeasible_columns.size()
                  << " infeasible column(s)\n";
    } else {
        // Independent single-task estimates; no shared/individual split.
        json lambdas = json::array();
        json edge_counts;
        json infeasible = json::array();
        for (int i = 1; i <= K; ++i) {
            const TaskData& t = tasks[i - 1];
            const ScatterMatrix scatter = (mode.scatter == EstimatorMode::Gaussian)
                                              ? sample_covariance(t)
                                              : nonparanormal_correlation(t);
            const double lam = lambda_from_alpha(a.lambda_alpha, 1, p, t.num_samples());
            std::vector<int> bad;
            const SymmetricMatrix om =
                clime_single_from_scatter(scatter, lam, lp::SolverOptions{}, workers, &bad);
            io::write_matrix_csv((out_dir / ("omega_total" + std::to_string(i) + ".csv")).string(),
                                 om, names);
            lambdas.push_back(lam);
            edge_counts["total" + std::to_string(i)] = count_edges(om, 1e-5);
            infeasible.push_back(bad);
        }
        report["lambda_n"] = lambdas;
        report["edge_counts"] = edge_counts;
        report["infeasible_columns"] = infeasible;
        std::cout << "estimate: " << a.mode << " on " << K << " independent task(s)\n";
    }
    io::write_text_file((out_dir / "report.json").string(), report.dump(2) + "\n");
    write_meta(out_dir, command, config, timer.seconds());
    return 0;
}

// ---------------------------------------------------------------- roc

struct RocArgs {
    std::string truth_dir;
    std::string mode = "simule";
    std::string alphas = "0.05:0.05:1.5";
    double epsilon = 0.5;
    bool intertwined = false;
    double alpha_cov = 0.5;
    int seeds = 3;
    int workers = 0;
    std::string out;
};

struct TruthBundle {
    GroundTruth truth;
    int n = 0;
    std::string dist;
    std::uint64_t seed = 0;
};

TruthBundle load_truth_dir(const std::string& dir) {
    const fs::path d(dir);
    const json meta = json::parse(io::read_text_file((d / "meta.json").string()));
    TruthBundle b;
    const json& config = meta.at("config");
    b.n = config.at("n").get<int>();
    b.dist = config.at("dist").get<std::string>();
    b.seed = config.at("seed").get<std::uint64_t>();
    const int K = config.at("K").get<int>();
    const std::string model = config.value("model", "model1");
    b.truth.model_tag = (model == "model2") ? ModelTag::Model2 : ModelTag::Model1;
    for (int i = 1; i <= K; ++i) {
        const DenseMatrix m =
            io::read_matrix_csv((d / ("truth_omega" + std::to_string(i) + ".csv")).string());
        b.truth.omegas.push_back(SymmetricMatrix::from_dense(m));
        b.truth.individual_supports.push_back(io::read_support_csv(
            (d / ("truth_individual_support" + std::to_string(i) + ".csv")).string()));
    }
    b.truth.shared_support = io::read_support_csv((d / "truth_shared_support.csv").string());
    return b;
}

json report_to_json(const AucReport& r) {
    json j;
    j["auc"] = r.auc;
    j["auc_shared"] = r.auc_shared ? json(*r.auc_shared) : json(nullptr);
    j["auc_individual"] = r.auc_individual ? json(*r.auc_individual) : json(nullptr);
    j["pauc_20"] = r.pauc_20;
    j["pauc_5"] = r.pauc_5;
    return j;
}

void write_curve_csv(const fs::path& path, const std::vector<SweepRecord>& mean_records,
                     RocPoint SweepRecord::*member) {
    std::string text;
    for (const auto& rec : mean_records) {
        text += io::format_value(rec.alpha);
        text += ',';
        text += io::format_value(rec.lambda);
        text += ',';
        text += io::format_value((rec.*member).fpr);
        text += ',';
        text += io::format_value((rec.*member).tpr);
        text += '\n';
    }
    io::write_text_file(path.string(), text);
}

int cmd_roc(const RocArgs& a, const std::vector<std::string>& command) {
    Timer timer;
    const ModeSpec mode = parse_mode(a.mode);
    if (a.intertwined && mode.estimator != SweepEstimator::Simule) {
        throw UsageError("--intertwined applies to the simule/nsimule modes");
    }
    if (a.seeds < 1) throw UsageError("--seeds must be at least 1");
    const std::vector<double> grid = parse_alpha_grid(a.alphas);
    const TruthBundle bundle = load_truth_dir(a.truth_dir);
    const int K = bundle.truth.num_tasks();

    SimuleConfig base;
    base.mode = mode.scatter;
    base.epsilon = a.epsilon;
    base.intertwined = a.intertwined;
    base.intertwined_alpha = a.alpha_cov;
    base.workers = a.workers >= 1 ? a.workers : default_workers();
    base.lambda_n = 1.0;  // replaced per sweep point
    base.validate();

    std::vector<AucReport> reports;
    // alpha -> accumulated records across seeds.
    std::vector<std::vector<SweepRecord>> per_alpha(grid.size());
    json skipped = json::array();
    for (int s = 0; s < a.seeds; ++s) {
        std::vector<TaskData> tasks;
        for (int i = 1; i <= K; ++i) {
            const Seed data_seed{derive_stream(
                bundle.seed, kRocDataTag + 64 * static_cast<std::uint64_t>(s) + i)};
            tasks.push_back(bundle.dist == "nonparanormal"
                                ? sample_nonparanormal(bundle.truth.omegas[i - 1], bundle.n, data_seed)
                                : sample_gaussian(bundle.truth.omegas[i - 1], bundle.n, data_seed));
        }
        const SweepResult sweep = roc_sweep(tasks, bundle.truth, grid, base, mode.estimator);
        reports.push_back(sweep.report());
        skipped.push_back(sweep.skipped_alphas);
        for (const auto& rec : sweep.records) {
            for (size_t gi = 0; gi < grid.size(); ++gi) {
                if (std::fabs(grid[gi] - rec.alpha) < 1e-12) {
                    per_alpha[gi].push_back(rec);
                    break;
                }
            }
        }
    }

    // Pointwise mean across seeds for the plot-ready CSVs.
    std::vector<SweepRecord> mean_records;
    for (size_t gi = 0; gi < grid.size(); ++gi) {
        if (per_alpha[gi].empty()) continue;
        SweepRecord m;
        m.alpha = grid[gi];
        const double cnt = static_cast<double>(per_alpha[gi].size());
        for (const auto& rec : per_alpha[gi]) {
            m.lambda += rec.lambda / cnt;
            m.total.fpr += rec.total.fpr / cnt;
            m.total.tpr += rec.total.tpr / cnt;
            m.shared.fpr += rec.shared.fpr / cnt;
            m.shared.tpr += rec.shared.tpr / cnt;
            m.individual.fpr += rec.individual.fpr / cnt;
            m.individual.tpr += rec.individual.tpr / cnt;
        }
        mean_records.push_back(m);
    }

    fs::create_directories(a.out);
    const fs::path out_dir(a.out);
    write_curve_csv(out_dir / "roc_total.csv", mean_records, &SweepRecord::total);
    if (mode.estimator == SweepEstimator::Simule) {
        write_curve_csv(out_dir / "roc_shared.csv", mean_records, &SweepRecord::shared);
        write_curve_csv(out_dir / "roc_individual.csv", mean_records, &SweepRecord::individual);
    }

    AucReport mean;
    double sh = 0.0, ind = 0.0;
    int sh_cnt = 0, ind_cnt = 0;
    for (const auto& r : reports) {
        mean.auc += r.auc / reports.size();
        mean.pauc_20 += r.pauc_20 / reports.size();
        mean.pauc_5 += r.pauc_5 / reports.size();
        if (r.auc_shared) {
            sh += *r.auc_shared;
            ++sh_cnt;
        }
        if (r.auc_individual) {
            ind += *r.auc_individual;
            ++ind_cnt;
        }
    }
    if (sh_cnt > 0) mean.auc_shared = sh / sh_cnt;
    if (ind_cnt > 0) mean.auc_individual = ind / ind_cnt;

    json aucj;
    aucj["mode"] = a.mode;
    aucj["seeds"] = a.seeds;
    json per_seed = json::array();
    for (const auto& r : reports) per_seed.push_back(report_to_json(r));
    aucj["per_seed"] = per_seed;
    aucj["mean"] = report_to_json(mean);
    aucj["skipped_alphas"] = skipped;
    io::write_text_file((out_dir / "auc.json").string(), aucj.dump(2) + "\n");

    json config;
    config["mode"] = a.mode;
    config["alphas"] = a.alphas;
    config["epsilon"] = a.epsilon;
    config["intertwined"] = a.intertwined;
    config["alpha_cov"] = a.alpha_cov;
    config["seeds"] = a.seeds;
    config["truth_dir"] = a.truth_dir;
    config["workers"] = base.workers;
    write_meta(out_dir, command, config, timer.seconds());
    std::cout << "roc: " << a.mode << " mean AUC = " << io::format_value(mean.auc) << " over "
              << a.seeds << " seed(s)\n";
    return 0;
}

// ---------------------------------------------------------------- bench

struct BenchArgs {
    std::string p_list;
    int K = 3;
    std::string workers_list = "1,4";
    std::uint64_t seed = 0;
    std::string out;
};

int cmd_bench(const BenchArgs& a, const std::vector<std::string>& command) {
    Timer timer;
    std::vector<int> ps;
    for (const auto& s : split(a.p_list, ',')) {
        const int v = std::atoi(s.c_str());
        if (v < 2) throw UsageError("--p entries must be at least 2");
        ps.push_back(v);
    }
    std::vector<int> workers{1};  // the speedup denominator row is always present
    for (const auto& s : split(a.workers_list, ',')) {
        const int v = std::atoi(s.c_str());
        if (v < 1) throw UsageError("--workers entries must be at least 1");
        if (std::find(workers.begin(), workers.end(), v) == workers.end()) workers.push_back(v);
    }
    if (ps.empty()) throw UsageError("--p requires at least one value");

    fs::create_directories(a.out);
    const fs::path out_dir(a.out);
    std::string csv;
    for (int p : ps) {
        const GroundTruth truth = gen_model1(a.K, p, Seed{a.seed});
        std::vector<ScatterMatrix> scatters;
        long n_tot = 0;
        for (int i = 0; i < a.K; ++i) {
            const Seed s{derive_stream(a.seed, kSimulateDataTag + static_cast<std::uint64_t>(i) + 1)};
            const TaskData data = sample_gaussian(truth.omegas[i], 500, s);
            scatters.push_back(sample_covariance(data));
            n_tot += data.num_samples();
        }
        SimuleConfig cfg;
        cfg.lambda_n = lambda_from_alpha(0.5, a.K, p, n_tot);
        for (int w : workers) {
            cfg.workers = w;
            Timer t;
            (void)estimate_from_scatters(scatters, cfg);
            csv += std::to_string(p) + "," + std::to_string(w) + "," +
                   io::format_value(t.seconds()) + "\n";
        }
    }
    io::write_text_file((out_dir / "timing.csv").string(), csv);

    json config;
    config["p"] = a.p_list;
    config["K"] = a.K;
    config["workers"] = a.workers_list;
    config["seed"] = a.seed;
    write_meta(out_dir, command, config, timer.seconds());
    std::cout << "bench: timing table written to " << (out_dir / "timing.csv").string() << "\n";
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"Joint estimation of multiple sparse Gaussian / nonparanormal graphical models"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    SimulateArgs sim;
    CLI::App* simulate = app.add_subcommand("simulate", "Generate benchmark instances");
    simulate->add_option("--model", sim.model, "model1 or model2")->required();
    simulate->add_option("--p", sim.p, "feature count")->required();
    simulate->add_option("--K", sim.K, "task count (model1 only; model2 is always 2 tasks)");
    simulate->add_option("--n", sim.n, "samples per task (default 500)");
    simulate->add_option("--dist", sim.dist, "gaussian or nonparanormal")
        ->check(CLI::IsMember({"gaussian", "nonparanormal"}));
    simulate->add_option("--seed", sim.seed, "RNG seed")->required();
    simulate->add_option("--out", sim.out, "output directory")->required();
    simulate->add_flag("--header", sim.header, "write feature-name headers on data files");

    EstimateArgs est;
    CLI::App* estimate_cmd = app.add_subcommand("estimate", "Run an estimator on data CSVs");
    estimate_cmd->add_option("--inputs", est.inputs, "comma-separated data CSVs, one per task")
        ->required();
    estimate_cmd->add_option("--mode", est.mode, "simule, nsimule, clime or nclime")
        ->check(CLI::IsMember({"simule", "nsimule", "clime", "nclime"}));
    estimate_cmd->add_flag("--intertwined", est.intertwined, "blend covariances across tasks");
    estimate_cmd->add_option("--alpha-cov", est.alpha_cov, "intertwined blend weight (default 0.5)");
    estimate_cmd->add_option("--lambda-alpha", est.lambda_alpha,
                             "alpha in lambda_n = alpha sqrt(log(Kp)/n_tot)")
        ->required();
    estimate_cmd->add_option("--epsilon", est.epsilon, "shared-part price (default 0.5)");
    estimate_cmd->add_option("--workers", est.workers, "worker threads (default: available cores)");
    estimate_cmd->add_option("--out", est.out, "output directory (default .)");
    estimate_cmd->add_flag("--header", est.header, "write feature-name headers on outputs");

    RocArgs roc;
    CLI::App* roc_cmd = app.add_subcommand("roc", "Sweep the lambda grid and score ROC/AUC");
    roc_cmd->add_option("--truth-dir", roc.truth_dir, "directory produced by simulate")->required();
    roc_cmd->add_option("--mode", roc.mode, "simule, nsimule, clime or nclime")
        ->check(CLI::IsMember({"simule", "nsimule", "clime", "nclime"}));
    roc_cmd->add_option("--alphas", roc.alphas, "grid start:step:stop (default 0.05:0.05:1.5)");
    roc_cmd->add_option("--epsilon", roc.epsilon, "shared-part price (default 0.5)");
    roc_cmd->add_flag("--intertwined", roc.intertwined, "blend covariances across tasks");
    roc_cmd->add_option("--alpha-cov", roc.alpha_cov, "intertwined blend weight (default 0.5)");
    roc_cmd->add_option("--seeds", roc.seeds, "number of sampling repetitions (default 3)");
    roc_cmd->add_option("--workers", roc.workers, "worker threads (default: available cores)");
    roc_cmd->add_option("--out", roc.out, "output directory")->required();

    BenchArgs bench;
    CLI::App* bench_cmd = app.add_subcommand("bench", "Time estimates across worker counts");
    bench_cmd->add_option("--p", bench.p_list, "comma-separated feature counts")->required();
    bench_cmd->add_option("--K", bench.K, "task count (default 3)");
    bench_cmd->add_option("--workers", bench.workers_list, "comma-separated worker counts");
    bench_cmd->add_option("--seed", bench.seed, "RNG seed")->required();
    bench_cmd->add_option("--out", bench.out, "output directory")->required();

    try {
        app.parse(argc, const_cast<char**>(argv));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    const std::vector<std::string> command = command_echo(argc, argv);
    try {
        if (app.got_subcommand(simulate)) return cmd_simulate(sim, command);
        if (app.got_subcommand(estimate_cmd)) return cmd_estimate(est, command);
        if (app.got_subcommand(roc_cmd)) return cmd_roc(roc, command);
        if (app.got_subcommand(bench_cmd)) return cmd_bench(bench, command);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const EvaluationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const EstimationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const SolverError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const NotPositiveDefinite& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}

}  // namespace simule::cli
