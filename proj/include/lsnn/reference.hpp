#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "lsnn/flux.hpp"
#include "lsnn/geometry.hpp"

namespace lsnn {

/// u_L for x <= s t, u_R otherwise. Requires u_L > u_R.
struct RiemannShock {
    double u_left = 1.0;
    double u_right = 0.0;
    double speed = 0.5;
};

/// Burgers rarefaction fan: u_L, x / t, u_R. Requires u_L < u_R.
struct RiemannRarefaction {
    double u_left = 0.0;
    double u_right = 1.0;
};

/// Burgers with u0 = 1 (x < 0), 1 - 2x (0 <= x <= 1/2), 0 (x > 1/2); the
/// compression wave steepens into a shock at t = 1/2 moving with speed 1/2.
struct PiecewiseLinearWave {};

using ExactSolution = std::variant<RiemannShock, RiemannRarefaction, PiecewiseLinearWave>;

RiemannShock make_riemann_shock(const FluxModel& f, double u_left, double u_right);
RiemannRarefaction make_riemann_rarefaction(double u_left, double u_right);

double rh_shock_speed(const FluxModel& f, double u_left, double u_right);
double eval_exact(const ExactSolution& sol, double x, double t);

/// Node values of u on a uniform space-time grid: value(n, i) = u(a + i dx, n dt_store).
struct GridReference {
    double a = 0.0;
    double dx = 0.0;
    double dt = 0.0;  // integrator step
    int store_every = 1;
    int nx_nodes = 0;
    int nt_levels = 0;
    std::string flux_name;
    std::string scheme = "weno3-rk4-lf";
    std::vector<double> values;

    double stored_dt() const { return dt * store_every; }
    double b() const { return a + dx * (nx_nodes - 1); }
    double t_end() const { return stored_dt() * (nt_levels - 1); }
    double value(int level, int node) const {
        return values[static_cast<std::size_t>(level) * static_cast<std::size_t>(nx_nodes) + static_cast<std::size_t>(node)];
    }
};

/// Boundary treatment of the WENO reference solver.
struct WenoBoundary {
    enum class Kind { Periodic, Dirichlet, Extrapolate };
    Kind left = Kind::Extrapolate;
    Kind right = Kind::Extrapolate;
    double g_left = 0.0;
    double g_right = 0.0;
};

inline constexpr double kWenoEpsilon = 1e-6;
inline constexpr double kWenoCflLimit = 0.5;

/// Method-of-lines solve with 3rd-order WENO reconstruction of the global
/// Lax-Friedrichs split fluxes and classical RK4. For periodic boundaries the
/// node at x = b is the image of x = a and is stored as such.
GridReference weno3_rk4_solve(const FluxModel& f, const std::function<double(double)>& u0,
                              const SpaceTimeDomain& domain, double dx, double dt, const WenoBoundary& bc,
                              int store_every = 1);

/// Bilinear interpolation; throws outside the grid hull.
double sample_reference(const GridReference& ref, double x, double t);

/// Binary format: one text header line
///   "lsnn-grid v1 a=<a> dx=<dx> dt=<dt> store_every=<k> nx=<nodes> nt=<levels> flux=<name> scheme=<scheme>\n"
/// followed by nx * nt little-endian float64 values, level-major.
void save_grid(const std::string& path, const GridReference& ref);
GridReference load_grid(const std::string& path);

}  // namespace lsnn
