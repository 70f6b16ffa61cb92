#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lsnn/flux.hpp"
#include "lsnn/network.hpp"

namespace lsnn {

/// Parameters with N(0, 1) weights and biases from mt19937_64(seed).
NetworkParams random_params(const Architecture& arch, std::uint64_t seed);

/// Central-difference gradient of a scalar function of the flat parameters.
template <class F>
std::vector<double> central_difference(const NetworkParams& params, F&& fn, double step = 1e-6) {
    std::vector<double> g(params.size());
    NetworkParams p = params;
    for (std::size_t k = 0; k < params.size(); ++k) {
        const double orig = p.flat()[k];
        p.flat()[k] = orig + step;
        const double up = fn(p);
        p.flat()[k] = orig - step;
        const double down = fn(p);
        p.flat()[k] = orig;
        g[k] = (up - down) / (2.0 * step);
    }
    return g;
}

/// ||a - b|| / max(||a||, ||b||, tiny).
double relative_difference(std::span<const double> a, std::span<const double> b);

/// Worst relative error of pullback() against finite differences over
/// `instances` random networks with random points and cotangents.
double network_gradcheck(const Architecture& arch, int instances, std::uint64_t seed);

/// Worst relative error of the block loss gradient against finite differences
/// over random networks, interface data and block geometry on an n x n mesh.
double loss_gradcheck(const Architecture& arch, int n, SchemeKind scheme, TimeDifferenceRule rule, int instances,
                      std::uint64_t seed, const FluxModel& flux = FluxModel::burgers());

struct GradcheckCase {
    std::string name;
    double max_rel_error = 0.0;
};

/// Network check plus the Burgers loss check for both schemes, both time rules and 2x2 / 4x4 meshes,
/// and the quartic-flux loss check for both schemes on a 4x4 mesh.
std::vector<GradcheckCase> gradcheck_suite(int instances, std::uint64_t seed);

}  // namespace lsnn
