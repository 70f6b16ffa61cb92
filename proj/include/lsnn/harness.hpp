#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "lsnn/reference.hpp"
#include "lsnn/trainer.hpp"

namespace lsnn {

struct RiemannInitial {
    double u_left = 1.0;
    double u_right = 0.0;
};
struct SinusoidalInitial {};  // 0.5 + sin(pi x)
struct PiecewiseLinearInitial {};

using InitialCondition = std::variant<RiemannInitial, SinusoidalInitial, PiecewiseLinearInitial>;

struct ExactReference {};
struct WenoReference {
    double dx = 0.001;
    double dt = 0.0002;
};
using ReferenceSpec = std::variant<ExactReference, WenoReference>;

struct ProblemSpec {
    std::string flux = "burgers";
    SpaceTimeDomain domain;
    InitialCondition initial;
    double g_left = 0.0;
    double g_right = 0.0;
    ReferenceSpec reference;

    FluxModel flux_model() const { return FluxModel::from_name(flux); }
    double u0(double x) const;
    double g(Side side) const { return side == Side::Left ? g_left : g_right; }
    BlockProblem block_problem() const;
    /// Exact solution for problems that have one.
    std::optional<ExactSolution> exact() const;
    void validate() const;
};

/// One parameter sweep ("h" or "width") over a base experiment.
struct StudySpec {
    std::string parameter;
    std::vector<double> values;
};

struct ExperimentConfig {
    std::string name;
    std::string description;
    ProblemSpec problem;
    TrainPlan plan;
    std::optional<StudySpec> study;
    std::filesystem::path output_dir;
};

ExperimentConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const ExperimentConfig& cfg);
ExperimentConfig load_config(const std::filesystem::path& path);

/// LSNN_SEED overrides the seed and LSNN_THREADS the worker count when set.
void apply_environment(ExperimentConfig& cfg);

/// FNV-1a over the canonical JSON dump of the config (output_dir excluded).
std::string config_hash(const ExperimentConfig& cfg);

/// Identifier of the library sources this binary was built from.
std::string source_hash();

using ReferenceFunction = std::function<double(double x, double t)>;

/// sqrt(sum_K (u - u_T)^2 |K|) / sqrt(sum_K u^2 |K|) over the block centroids.
double relative_l2(const NetworkParams& params, const BlockMesh& mesh, const ReferenceFunction& reference);

struct TracePoint {
    double x = 0.0;
    double u_reference = 0.0;
    double u_network = 0.0;
};

/// Network values on the plane t = t_plane at the given x samples.
std::vector<TracePoint> extract_trace(const NetworkParams& params, double t_plane, std::span<const double> xs,
                                      const ReferenceFunction& reference = {});

/// Planes t = i T / m0 and their owning block (the block whose top is the plane).
struct TracePlane {
    int block = 0;
    double t = 0.0;
};
std::vector<TracePlane> trace_planes(const SpaceTimeDomain& domain, int m0);

/// First x where the piecewise-linear trace crosses `level`; nullopt if it never does.
std::optional<double> fit_jump_location(std::span<const TracePoint> trace, double level);

/// Largest |u(x_{k+1}) - u(x_k)| over adjacent samples with both x in [lo, hi].
double max_adjacent_jump(std::span<const TracePoint> trace, double lo, double hi);

struct RunOptions {
    bool resume = true;
    std::filesystem::path cache_dir;  // WENO reference cache; empty means <output_dir>/cache
    bool verbose = true;
    std::int64_t log_every = 1000;
};

struct BlockReport {
    int block = 0;
    double rel_l2 = 0.0;
    std::int64_t iterations = 0;
    LossValue final_loss;
    bool resumed = false;
};

struct ExperimentResult {
    ExperimentConfig config;
    std::vector<BlockReport> blocks;
    std::filesystem::path output_dir;
};

/// Builds (or loads from cache) the reference solution of the problem.
ReferenceFunction build_reference(const ProblemSpec& problem, const std::filesystem::path& cache_dir, bool verbose);

/// WENO grid of a problem, cached by its parameters under cache_dir.
GridReference weno_reference(const ProblemSpec& problem, const WenoReference& spec,
                             const std::filesystem::path& cache_dir, bool verbose);

/// Trains every block and writes errors.csv, traces/, loss_history/,
/// checkpoints/ and manifest.json into cfg.output_dir.
ExperimentResult run_experiment(const ExperimentConfig& cfg, const RunOptions& options = {});

/// Runs each variant of cfg.study into <output_dir>/<parameter>-<value>/ and writes study.csv.
std::vector<ExperimentResult> run_study(const ExperimentConfig& cfg, const RunOptions& options = {});

/// Variant of a study base config with one parameter replaced.
ExperimentConfig study_variant(const ExperimentConfig& cfg, double value);

std::vector<BlockReport> read_errors_csv(const std::filesystem::path& path);

}  // namespace lsnn
