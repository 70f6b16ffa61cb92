#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lsnn/network.hpp"

namespace lsnn {

struct AdamState {
    std::vector<double> m;
    std::vector<double> v;
    std::int64_t t = 0;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;

    explicit AdamState(std::size_t n = 0) : m(n, 0.0), v(n, 0.0) {}
};

/// Standard bias-corrected Adam update, in place. Throws on non-finite gradients.
void adam_step(AdamState& state, NetworkParams& params, const GradientVector& grad, double lr);

/// Fixed(eta) or Halving(eta0, every_n): eta0 * 2^-floor(k / every_n).
struct LrSchedule {
    enum class Kind { Fixed, Halving };
    Kind kind = Kind::Fixed;
    double initial = 1e-3;
    std::int64_t every = 1;

    static LrSchedule fixed(double lr);
    static LrSchedule halving(double lr0, std::int64_t every_n);
    double at(std::int64_t iteration) const;
};

struct Plateau {
    std::int64_t window = 2000;
    double rel_decrease = 0.001;
};

struct StopRule {
    std::int64_t max_iters = 1;
    std::optional<Plateau> plateau;
};

inline constexpr double kPlateauTiny = 1e-30;

/// history[k] is the loss at iteration k (0-based); iter is the latest index.
bool should_stop(std::span<const double> history, const StopRule& rule, std::int64_t iter);

}  // namespace lsnn
