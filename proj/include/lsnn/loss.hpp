#pragma once

#include <functional>
#include <span>
#include <vector>

#include "lsnn/flux.hpp"
#include "lsnn/geometry.hpp"
#include "lsnn/network.hpp"

namespace lsnn {

struct LossConfig {
    double alpha = 1.0;  // weight of the bottom-edge (initial / interface) term
    SchemeKind scheme = SchemeKind::Roe;
    TimeDifferenceRule time_rule = TimeDifferenceRule::PaperLiteral;
};

/// Boundary data g(side, t) on the inflow sides.
using BoundaryData = std::function<double(Side, double)>;

/// Target values at the block's interface edge midpoints, in mesh order.
struct InterfaceData {
    std::vector<double> values;
};

struct LossValue {
    double total = 0.0;
    double interior = 0.0;
    double inflow = 0.0;
    double interface = 0.0;
};

struct LossResult {
    LossValue loss;
    GradientVector grad;
};

/// Discrete block least-squares functional
///   sum_K r_K^2 |K| + sum_{inflow E} (v - g)^2 |E| + alpha sum_{interface E} (v - u_prev)^2 |E|
/// with r_K the finite-volume residual of the network at centroid K.
///
/// Network evaluation points are laid out once per block: for each time row,
/// the x-lattice at t_K (padded by the stencil half-width) followed by the
/// half-step points (x_K, t_K - tau/2); then the inflow edge midpoints. The
/// first row's half-step points coincide with the interface midpoints and are
/// shared. Face fluxes are computed once per face, so adjacent cells see the
/// same value.
class BlockLoss {
public:
    BlockLoss(const BlockMesh& mesh, const FluxModel& flux, const LossConfig& cfg, const BoundaryData& g,
              InterfaceData u_prev, int threads = 1);

    LossResult evaluate(const NetworkParams& params) const;
    LossValue value(const NetworkParams& params) const;

    /// Residual r_K at every cell for the given parameters (row-major order).
    std::vector<double> residuals(const NetworkParams& params) const;

    std::span<const Point> points() const { return points_; }
    const BlockMesh& mesh() const { return mesh_; }

private:
    LossValue accumulate(std::span<const double> v, std::vector<double>* cotangent) const;
    std::size_t lattice(int row, int j) const {
        return static_cast<std::size_t>(row) * row_stride_ + static_cast<std::size_t>(j + pad_);
    }
    std::size_t half(int row, int j) const {
        return static_cast<std::size_t>(row) * row_stride_ + static_cast<std::size_t>(mesh_.nx + 2 * pad_ + j);
    }

    BlockMesh mesh_;
    FluxModel flux_;
    LossConfig cfg_;
    int pad_ = 1;
    std::size_t row_stride_ = 0;
    std::vector<Point> points_;
    std::vector<std::size_t> inflow_index_;
    std::vector<double> inflow_target_;
    std::vector<double> interface_target_;
    int threads_ = 1;
};

/// One-shot evaluation of loss and gradient (builds a BlockLoss internally).
LossResult evaluate_loss(const NetworkParams& params, const BlockMesh& mesh, const FluxModel& flux,
                         const LossConfig& cfg, const BoundaryData& g, const InterfaceData& u_prev);

}  // namespace lsnn
