#ifndef FIF_MODEL_HPP
#define FIF_MODEL_HPP

#include <array>
#include <cstddef>
#include <vector>

#include "fif/hermite_data.hpp"
#include "fif/parameters.hpp"

namespace fif {

/// A fitted C^1 rational cubic spline fractal interpolant.
///
/// The model satisfies, per interval i with L_i(x) = a_i x + b_i and the
/// global variable theta = (x - x_1) / (x_N - x_1),
///
///   S(L_i(x))       = alpha_i S(x) + P_i(theta) / Q_i(theta)
///   S'(L_i(x))      = (alpha_i / a_i) S'(x) + N_i(theta) / Q_i(theta)^2
///   S''(L_i(x))     = (alpha_i / a_i^2) S''(x) + R''_i(theta)
///
/// where P_i is cubic in the Bernstein-like basis {(1-t)^3, t(1-t)^2,
/// t^2(1-t), t^3}, Q_i(t) = 1 + (r_i - 3) t (1-t) > 0 for r_i > -1, N_i is
/// quartic in {t^4, t^3(1-t), t^2(1-t)^2, t(1-t)^3, (1-t)^4} and the
/// second-derivative numerator is cubic in {t^3, t^2(1-t), t(1-t)^2,
/// (1-t)^3}. All coefficients are precomputed at build time.
class RationalCubicFif {
public:
    RationalCubicFif(HermiteData data, FifParameters params);

    const HermiteData& data() const { return data_; }
    const FifParameters& params() const { return params_; }

    std::size_t interval_count() const { return data_.interval_count(); }

    // Affine map L_i(x) = a_i x + b_i and its inverse.
    double map_forward(std::size_t i, double x) const { return map_a_[i] * x + map_b_[i]; }
    double map_inverse(std::size_t i, double x) const { return (x - map_b_[i]) / map_a_[i]; }
    double map_b(std::size_t i) const { return map_b_[i]; }

    double theta(double x) const { return (x - data_.x_front()) / data_.span(); }

    // Value numerator coefficients {A_i, B_i, C_i, D_i}.
    const std::array<double, 4>& value_coeffs(std::size_t i) const { return value_[i]; }
    // Derivative numerator coefficients {T_i, S_i, U_i, V_i, W_i}
    // (theta^4 down to (1-theta)^4).
    const std::array<double, 5>& deriv_coeffs(std::size_t i) const { return deriv_[i]; }
    // Second-derivative numerator coefficients {A*_i, B*_i, C*_i, D*_i}.
    const std::array<double, 4>& second_coeffs(std::size_t i) const { return second_[i]; }

    double q(std::size_t i, double t) const {
        return 1.0 + (params_.r[i] - 3.0) * t * (1.0 - t);
    }

    /// Inhomogeneous value term P_i(t)/Q_i(t).
    double rational(std::size_t i, double t) const;

    /// Inhomogeneous slope term N_i(t)/Q_i(t)^2.
    double rational_deriv(std::size_t i, double t) const;

    /// Inhomogeneous second-derivative term (right-hand limits),
    /// 2 [A* t^3 + B* t^2(1-t) + C* t(1-t)^2 + D* (1-t)^3] / (h_i Q_i(t)^3).
    double rational_second(std::size_t i, double t) const;

private:
    HermiteData data_;
    FifParameters params_;
    std::vector<double> map_a_, map_b_;
    std::vector<std::array<double, 4>> value_;
    std::vector<std::array<double, 5>> deriv_;
    std::vector<std::array<double, 4>> second_;
};

/// Builds the fractal interpolant; throws std::invalid_argument when the
/// parameters fail validate_parameters().
RationalCubicFif build_fif(const HermiteData& data, const FifParameters& params);

/// The classical (non-fractal) rational cubic spline: alpha identically zero.
RationalCubicFif classical_spline(const HermiteData& data, std::vector<double> r);

/// Closed-form evaluation of a model with alpha == 0 using the local
/// variable phi = (x - x_i)/h_i. Throws if any alpha_i != 0.
double classical_eval(const RationalCubicFif& fif, double x);

} // namespace fif

#endif
