#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "lsnn/flux.hpp"
#include "lsnn/geometry.hpp"
#include "lsnn/loss.hpp"
#include "lsnn/network.hpp"
#include "lsnn/optimizer.hpp"

namespace lsnn {

struct TrainPlan {
    Architecture arch{std::vector<int>{2, 10, 10, 1}};
    int m0 = 1;
    SchemeKind scheme = SchemeKind::Roe;
    TimeDifferenceRule time_rule = TimeDifferenceRule::PaperLiteral;
    double alpha = 1.0;
    LrSchedule lr = LrSchedule::fixed(0.003);
    StopRule stop{1000, std::nullopt};
    std::uint64_t seed = 0;
    double h = 0.01;
    double tau = 0.0;  // 0 means tau = h
    int threads = 1;

    LossConfig loss_config() const { return {alpha, scheme, time_rule}; }
};

/// What the trainer needs to know about a problem: domain, flux, initial and boundary data.
struct BlockProblem {
    SpaceTimeDomain domain;
    FluxModel flux = FluxModel::burgers();
    std::function<double(double)> u0;
    BoundaryData g;
};

struct BlockSolution {
    int index = 0;
    NetworkParams params;
    LossValue final_loss;
    double rel_l2 = std::numeric_limits<double>::quiet_NaN();
    std::int64_t iterations = 0;
    bool resumed = false;
};

/// Thrown when the loss becomes non-finite; carries the last finite iterate.
class TrainingDiverged : public std::runtime_error {
public:
    TrainingDiverged(const std::string& what, NetworkParams last_good, std::int64_t iteration)
        : std::runtime_error(what), last_good(std::move(last_good)), iteration(iteration) {}
    NetworkParams last_good;
    std::int64_t iteration;
};

/// First hidden layer: n1 lines w_i . (x, t) = b_i with |w_i| = 1 in
/// G = min(n1, 4) orientation groups at angles pi g / G (neuron i in group
/// i mod G); within a group the offsets are evenly spaced (cell midpoints)
/// across the range of w . corner over the block corners. Later layers are
/// uniform on [-1/sqrt(fan_in), 1/sqrt(fan_in)] from the seeded generator,
/// with the output bias set to 0. Only 2-n1-n2-1 networks are supported.
NetworkParams init_first_block(const Architecture& arch, const Block& block, std::uint64_t seed);

using IterationObserver = std::function<void(std::int64_t iteration, const LossValue& loss)>;

BlockSolution train_block(const TrainPlan& plan, const Block& block, const NetworkParams& init,
                          const FluxModel& flux, const BoundaryData& g, const InterfaceData& u_prev,
                          const IterationObserver& observer = {});

/// Interface targets for a block: u0 on the first block, the previous block's network afterwards.
InterfaceData interface_data(const BlockMesh& mesh, const BlockProblem& problem, const NetworkParams* previous);

struct SolveHooks {
    /// Return trained parameters for a block to skip its training (resume).
    std::function<std::optional<BlockSolution>(int block)> resume;
    std::function<void(int block, std::int64_t iteration, const LossValue& loss)> iteration;
    std::function<void(BlockSolution&, const BlockMesh&)> block_done;
};

std::vector<BlockSolution> solve(const TrainPlan& plan, const BlockProblem& problem, const SolveHooks& hooks = {});

}  // namespace lsnn
