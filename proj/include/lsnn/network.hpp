#pragma once

#include <algorithm>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace lsnn {

/// A space-time sample point (x, t).
struct Point {
    double x = 0.0;
    double t = 0.0;
    friend bool operator==(const Point&, const Point&) = default;
};

/// Layer widths [n0, n1, ..., nL] of a fully connected ReLU network with
/// input (x, t) and a scalar output.
class Architecture {
public:
    Architecture() = default;
    explicit Architecture(std::vector<int> widths);

    const std::vector<int>& widths() const { return widths_; }
    int depth() const { return static_cast<int>(widths_.size()) - 1; }
    int width(int layer) const { return widths_[static_cast<std::size_t>(layer)]; }

    std::size_t param_count() const { return total_; }
    std::size_t weight_offset(int layer) const;  // layer in 1..L
    std::size_t bias_offset(int layer) const;

    std::string to_string() const;  // "2-10-10-1"
    friend bool operator==(const Architecture& a, const Architecture& b) { return a.widths_ == b.widths_; }

private:
    std::vector<int> widths_;
    std::vector<std::size_t> offsets_;
    std::size_t total_ = 0;
};

std::size_t param_count(const Architecture& arch);

/// Flat per-layer storage: W(1) row-major, b(1), W(2), b(2), ..., b(L).
/// NetworkParams and GradientVector share this layout but are distinct types.
template <typename Tag>
class LayeredVector {
public:
    LayeredVector() = default;
    explicit LayeredVector(Architecture arch) : arch_(std::move(arch)), data_(arch_.param_count(), 0.0) {}
    LayeredVector(Architecture arch, std::vector<double> data);

    const Architecture& arch() const { return arch_; }
    std::size_t size() const { return data_.size(); }

    std::span<double> flat() { return data_; }
    std::span<const double> flat() const { return data_; }
    double& operator[](std::size_t i) { return data_[i]; }
    double operator[](std::size_t i) const { return data_[i]; }

    std::span<double> weights(int layer);
    std::span<const double> weights(int layer) const;
    std::span<double> biases(int layer);
    std::span<const double> biases(int layer) const;

    double& weight(int layer, int row, int col) {
        return data_[arch_.weight_offset(layer) + static_cast<std::size_t>(row * arch_.width(layer - 1) + col)];
    }
    double weight(int layer, int row, int col) const {
        return data_[arch_.weight_offset(layer) + static_cast<std::size_t>(row * arch_.width(layer - 1) + col)];
    }
    double& bias(int layer, int row) { return data_[arch_.bias_offset(layer) + static_cast<std::size_t>(row)]; }
    double bias(int layer, int row) const { return data_[arch_.bias_offset(layer) + static_cast<std::size_t>(row)]; }

    void set_zero() { std::fill(data_.begin(), data_.end(), 0.0); }

    friend bool operator==(const LayeredVector& a, const LayeredVector& b) {
        return a.arch_ == b.arch_ && a.data_ == b.data_;
    }

private:
    Architecture arch_;
    // Aligned so that vectorized kernels see the same layout on every run.
    std::vector<double, Eigen::aligned_allocator<double>> data_;
};

using NetworkParams = LayeredVector<struct NetworkParamsTag>;
using GradientVector = LayeredVector<struct GradientVectorTag>;

inline double relu(double s) { return s > 0.0 ? s : 0.0; }

/// Hidden activations retained by forward() so that pullback can reuse them.
/// Column j of activations[l] holds layer-l outputs for point j (l = 0 is the input).
struct ForwardCache {
    std::vector<Eigen::MatrixXd> activations;
};

std::vector<double> forward(const NetworkParams& params, std::span<const Point> points);
double forward(const NetworkParams& params, Point p);

/// Same as forward() but keeps the activations for a following pullback_cached().
std::vector<double> forward(const NetworkParams& params, std::span<const Point> points, ForwardCache& cache);

/// Sum_j cotangents[j] * d forward(params, points[j]) / d theta.
GradientVector pullback(const NetworkParams& params, std::span<const Point> points,
                        std::span<const double> cotangents);

/// pullback() using activations from the matching forward(params, points, cache).
/// The result is accumulated into grad.
void pullback_cached(const NetworkParams& params, const ForwardCache& cache,
                     std::span<const double> cotangents, GradientVector& grad);

/// Checkpoint text format: header line "lsnn-params v1 <arch>" followed by one
/// value per line in flat layer order, printed with 17 significant digits.
void write_params(std::ostream& os, const NetworkParams& params);
NetworkParams read_params(std::istream& is);
void save_params(const std::string& path, const NetworkParams& params);
NetworkParams load_params(const std::string& path);

}  // namespace lsnn
