#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace lsnn {

/// Scalar flux f(u) with its derivative. Registry names: "burgers" (u^2/2),
/// "quartic" (u^4/4), "linear:<a>" (a*u).
class FluxModel {
public:
    enum class Kind { Burgers, Quartic, Linear };

    static FluxModel burgers() { return FluxModel(Kind::Burgers, 0.0); }
    static FluxModel quartic() { return FluxModel(Kind::Quartic, 0.0); }
    static FluxModel linear(double a) { return FluxModel(Kind::Linear, a); }
    static FluxModel from_name(std::string_view name);

    std::string name() const;
    Kind kind() const { return kind_; }

    double f(double u) const {
        switch (kind_) {
            case Kind::Burgers: return 0.5 * u * u;
            case Kind::Quartic: return 0.25 * (u * u) * (u * u);
            case Kind::Linear: break;
        }
        return speed_ * u;
    }
    double fprime(double u) const {
        switch (kind_) {
            case Kind::Burgers: return u;
            case Kind::Quartic: return u * u * u;
            case Kind::Linear: break;
        }
        return speed_;
    }

private:
    FluxModel(Kind kind, double speed) : kind_(kind), speed_(speed) {}
    Kind kind_;
    double speed_;
};

enum class SchemeKind { Roe, Eno2 };

/// Denominator of the one-sided time difference v(t_K) - v(t_K - tau/2):
/// PaperLiteral divides by tau, HalfStep by tau/2.
enum class TimeDifferenceRule { PaperLiteral, HalfStep };

SchemeKind parse_scheme(std::string_view name);
std::string to_string(SchemeKind s);
TimeDifferenceRule parse_time_rule(std::string_view name);
std::string to_string(TimeDifferenceRule r);

inline constexpr double kRoeDegeneracy = 1e-12;

double roe_speed(const FluxModel& f, double v_c, double v_n);
double roe_face_flux(const FluxModel& f, double u_left, double u_right);
double eno2_face_flux(const FluxModel& f, double u_m1, double u_0, double u_1, double u_2);

/// Face flux value together with its partial derivatives with respect to the
/// stencil values feeding it. Roe faces use slots 1 and 2 only (u_0, u_1).
struct FaceFlux {
    double value = 0.0;
    std::array<double, 4> d{};  // d/du_m1, d/du_0, d/du_1, d/du_2
};

FaceFlux roe_face_flux_with_partials(const FluxModel& f, double u_left, double u_right);
FaceFlux eno2_face_flux_with_partials(const FluxModel& f, double u_m1, double u_0, double u_1, double u_2);

struct StencilValues {
    double v_c = 0.0;
    double v_tm = 0.0;
    double v_pm1 = 0.0;
    double v_pp1 = 0.0;
    std::optional<double> v_pm2;
    std::optional<double> v_pp2;
    double h = 0.0;
    double tau = 0.0;
};

double time_difference_denominator(double tau, TimeDifferenceRule rule);

/// delta_tau v + (F(x_K + h/2) - F(x_K - h/2)) / h at one cell centroid.
double fv_residual(const StencilValues& s, const FluxModel& f, SchemeKind scheme, TimeDifferenceRule rule);

}  // namespace lsnn
