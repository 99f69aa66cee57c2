#include "fif/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace fif {

RationalCubicFif::RationalCubicFif(HermiteData data, FifParameters params)
    : data_(std::move(data)), params_(std::move(params)) {
    const auto report = validate_parameters(data_, params_);
    if (!report.ok())
        throw std::invalid_argument("invalid FIF parameters: " + report.to_string());

    const std::size_t m = data_.interval_count();
    const auto& x = data_.x();
    const auto& y = data_.y();
    const auto& d = data_.d();
    const auto& h = data_.h();
    const auto& delta = data_.delta();
    const double span = data_.span();
    const double y1 = y.front(), yn = y.back();
    const double d1 = d.front(), dn = d.back();
    const double rise = yn - y1;

    map_a_.resize(m);
    map_b_.resize(m);
    value_.resize(m);
    deriv_.resize(m);
    second_.resize(m);

    for (std::size_t i = 0; i < m; ++i) {
        const double al = params_.alpha[i];
        const double r = params_.r[i];

        map_a_[i] = data_.a()[i];
        map_b_[i] = x[i] - map_a_[i] * x.front(); // L_i(x_1) = x_i

        value_[i] = {
            y[i] - al * y1,
            (r * y[i] + h[i] * d[i]) - al * (r * y1 + d1 * span),
            (r * y[i + 1] - h[i] * d[i + 1]) - al * (r * yn - dn * span),
            y[i + 1] - al * yn,
        };

        const double g = al / h[i];
        deriv_[i] = {
            d[i + 1] - g * span * dn,
            2.0 * (r * delta[i] - d[i]) - 2.0 * g * (r * rise - d1 * span),
            (r * r + 3.0) * delta[i] - r * (d[i] + d[i + 1]) -
                g * ((r * r + 3.0) * rise - r * span * (d1 + dn)),
            2.0 * (r * delta[i] - d[i + 1]) - 2.0 * g * (r * rise - dn * span),
            d[i] - g * span * d1,
        };

        second_[i] = {
            r * (d[i + 1] - delta[i]) + d[i] - d[i + 1] -
                g * (r * (dn * span - rise) + span * (d1 - dn)),
            3.0 * (d[i + 1] - delta[i]) - 3.0 * g * (dn * span - rise),
            3.0 * (delta[i] - d[i]) - 3.0 * g * (rise - d1 * span),
            r * (delta[i] - d[i]) + d[i] - d[i + 1] -
                g * (r * (rise - d1 * span) + span * (d1 - dn)),
        };
    }
}

double RationalCubicFif::rational(std::size_t i, double t) const {
    const double u = 1.0 - t;
    const auto& c = value_[i];
    const double p = c[0] * u * u * u + c[1] * t * u * u + c[2] * t * t * u +
                     c[3] * t * t * t;
    return p / q(i, t);
}

double RationalCubicFif::rational_deriv(std::size_t i, double t) const {
    const double u = 1.0 - t;
    const auto& c = deriv_[i];
    const double n = c[0] * t * t * t * t + c[1] * t * t * t * u +
                     c[2] * t * t * u * u + c[3] * t * u * u * u +
                     c[4] * u * u * u * u;
    const double qq = q(i, t);
    return n / (qq * qq);
}

double RationalCubicFif::rational_second(std::size_t i, double t) const {
    const double u = 1.0 - t;
    const auto& c = second_[i];
    const double n = c[0] * t * t * t + c[1] * t * t * u + c[2] * t * u * u +
                     c[3] * u * u * u;
    const double qq = q(i, t);
    return 2.0 * n / (data_.h()[i] * qq * qq * qq);
}

RationalCubicFif build_fif(const HermiteData& data, const FifParameters& params) {
    return RationalCubicFif(data, params);
}

RationalCubicFif classical_spline(const HermiteData& data, std::vector<double> r) {
    FifParameters params;
    params.alpha.assign(data.interval_count(), 0.0);
    params.r = std::move(r);
    return RationalCubicFif(data, params);
}

double classical_eval(const RationalCubicFif& fif, double x) {
    const auto& alpha = fif.params().alpha;
    if (std::any_of(alpha.begin(), alpha.end(), [](double a) { return a != 0.0; }))
        throw std::invalid_argument("classical_eval requires alpha == 0");
    const auto& data = fif.data();
    const auto& xs = data.x();
    if (x < xs.front() || x > xs.back())
        throw std::domain_error("classical_eval: x outside data range");

    auto it = std::upper_bound(xs.begin(), xs.end(), x);
    std::size_t i = (it == xs.end()) ? xs.size() - 2 : std::size_t(it - xs.begin()) - 1;

    const double h = data.h()[i];
    const double phi = (x - xs[i]) / h;
    const double u = 1.0 - phi;
    const double r = fif.params().r[i];
    const double yi = data.y()[i], yi1 = data.y()[i + 1];
    const double di = data.d()[i], di1 = data.d()[i + 1];
    const double num = yi * u * u * u + (r * yi + h * di) * phi * u * u +
                       (r * yi1 - h * di1) * phi * phi * u + yi1 * phi * phi * phi;
    const double den = 1.0 + (r - 3.0) * phi * u;
    return num / den;
}

} // namespace fif
