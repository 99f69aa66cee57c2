#include "fif/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fif/eval.hpp"

namespace fif {

std::vector<double> c_values(const std::vector<double>& r) {
    std::vector<double> c(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (!(r[i] > -1.0))
            throw std::invalid_argument("c_values: r_i <= -1");
        c[i] = r[i] < 3.0 ? (1.0 + r[i]) / 4.0 : 1.0;
    }
    return c;
}

double c_min(const std::vector<double>& r) {
    const auto c = c_values(r);
    return *std::min_element(c.begin(), c.end());
}

namespace {

double abs_max(const std::vector<double>& v) {
    double m = 0.0;
    for (double e : v)
        m = std::max(m, std::abs(e));
    return m;
}

ErrorBoundReport common_terms(const HermiteData& data, const FifParameters& params) {
    const auto report = validate_parameters(data, params);
    if (!report.ok())
        throw std::invalid_argument("error bound: " + report.to_string());

    ErrorBoundReport out;
    out.c = c_min(params.r);
    out.h = *std::max_element(data.h().begin(), data.h().end());
    out.y_inf = abs_max(data.y());
    out.d_inf = abs_max(data.d());
    out.r_inf = abs_max(params.r);
    out.alpha_inf = abs_max(params.alpha);
    if (!(out.alpha_inf < 1.0))
        throw std::invalid_argument("error bound: |alpha|_inf >= 1");

    out.s_sup_bound =
        (out.y_inf + 0.25 * (out.r_inf * out.y_inf + out.h * out.d_inf)) / out.c;
    const double y_end = std::max(std::abs(data.y().front()), std::abs(data.y().back()));
    const double d_end = std::max(std::abs(data.d().front()), std::abs(data.d().back()));
    out.z0 = (y_end * (1.0 + 0.25 * out.r_inf) + 0.25 * data.span() * d_end) / out.c;
    out.perturbation =
        out.alpha_inf * (out.s_sup_bound + out.z0) / (1.0 - out.alpha_inf);
    return out;
}

} // namespace

ErrorBoundReport error_bound_c4(const HermiteData& data, const FifParameters& params,
                                double f2_norm, double f3_norm, double f4_norm,
                                double derivative_mismatch) {
    if (f2_norm < 0.0 || f3_norm < 0.0 || f4_norm < 0.0 || derivative_mismatch < 0.0)
        throw std::invalid_argument("error_bound_c4: norms must be nonnegative");
    ErrorBoundReport out = common_terms(data, params);

    double r3_max = 0.0;
    for (double ri : params.r)
        r3_max = std::max(r3_max, std::abs(ri - 3.0));

    const double h = out.h;
    out.classical = (h / (4.0 * out.c)) * derivative_mismatch +
                    (1.0 / (384.0 * out.c)) *
                        (h * h * h * h * f4_norm * (1.0 + 0.25 * r3_max) +
                         4.0 * r3_max * (h * h * h * f3_norm + 3.0 * h * h * f2_norm));
    out.total = out.classical + out.perturbation;
    return out;
}

ErrorBoundReport error_bound_c1(const HermiteData& data, const FifParameters& params,
                                double omega) {
    if (omega < 0.0)
        throw std::invalid_argument("error_bound_c1: omega must be nonnegative");
    ErrorBoundReport out = common_terms(data, params);
    out.classical = (out.h * out.d_inf + omega * (out.r_inf + 4.0)) / (4.0 * out.c);
    out.total = out.classical + out.perturbation;
    return out;
}

DerivativeNorms sample_derivative_norms(const std::function<double(double)>& f,
                                        double a, double b, int grid) {
    if (!(b > a) || grid < 2)
        throw std::invalid_argument("sample_derivative_norms: bad interval or grid");
    // Stencil steps chosen per derivative order to balance truncation and
    // cancellation; clamped so the stencil stays inside [a, b].
    const double scale = b - a;
    const double u2 = 1e-4 * scale, u3 = 1e-3 * scale, u4 = 5e-3 * scale;

    DerivativeNorms norms;
    for (int k = 0; k < grid; ++k) {
        const double x0 = a + (b - a) * k / (grid - 1);
        {
            const double u = u2;
            const double x = std::clamp(x0, a + u, b - u);
            const double v = (f(x + u) - 2.0 * f(x) + f(x - u)) / (u * u);
            norms.f2 = std::max(norms.f2, std::abs(v));
        }
        {
            const double u = u3;
            const double x = std::clamp(x0, a + 2 * u, b - 2 * u);
            const double v = (f(x + 2 * u) - 2.0 * f(x + u) + 2.0 * f(x - u) -
                              f(x - 2 * u)) /
                             (2.0 * u * u * u);
            norms.f3 = std::max(norms.f3, std::abs(v));
        }
        {
            const double u = u4;
            const double x = std::clamp(x0, a + 2 * u, b - 2 * u);
            const double v = (f(x + 2 * u) - 4.0 * f(x + u) + 6.0 * f(x) -
                              4.0 * f(x - u) + f(x - 2 * u)) /
                             (u * u * u * u);
            norms.f4 = std::max(norms.f4, std::abs(v));
        }
    }
    return norms;
}

ConvergenceResult convergence_order(const std::function<double(double)>& f,
                                    const std::function<double(double)>& df,
                                    double a, double b,
                                    const std::vector<int>& knot_counts,
                                    AlphaRule alpha_rule, TensionRule r_rule,
                                    double fixed_r, const DerivativeNorms* norms) {
    if (knot_counts.size() < 3)
        throw std::invalid_argument("convergence_order: need at least 3 mesh sizes");
    if (!(b > a))
        throw std::invalid_argument("convergence_order: empty interval");

    constexpr int kGrid = 2048;
    const EvalSettings settings{1e-10, 64};

    ConvergenceResult result;
    double y_scale = 1.0;
    for (int n : knot_counts) {
        if (n < 2)
            throw std::invalid_argument("convergence_order: mesh needs >= 2 knots");
        const auto nn = std::size_t(n);
        std::vector<double> x(nn), y(nn), d(nn);
        for (int j = 0; j < n; ++j) {
            x[std::size_t(j)] = a + (b - a) * j / (n - 1);
            y[std::size_t(j)] = f(x[std::size_t(j)]);
            d[std::size_t(j)] = df(x[std::size_t(j)]);
        }
        HermiteData data(x, y, d);
        y_scale = std::max(y_scale, abs_max(y));

        const std::size_t m = data.interval_count();
        FifParameters params;
        params.alpha.resize(m);
        params.r.resize(m);
        for (std::size_t i = 0; i < m; ++i) {
            const double ai = data.a()[i];
            double al = ai * ai / 2.0;
            if (alpha_rule == AlphaRule::Cubic)
                al *= ai;
            else if (alpha_rule == AlphaRule::Quartic)
                al *= ai * ai;
            params.alpha[i] = al;
            switch (r_rule) {
            case TensionRule::Fixed: params.r[i] = fixed_r; break;
            case TensionRule::ThreePlusH: params.r[i] = 3.0 + data.h()[i]; break;
            case TensionRule::ThreePlusHSquared:
                params.r[i] = 3.0 + data.h()[i] * data.h()[i];
                break;
            }
        }

        const RationalCubicFif fif = build_fif(data, params);
        double err = 0.0;
        for (int k = 0; k < kGrid; ++k) {
            const double xq = a + (b - a) * k / (kGrid - 1);
            err = std::max(err, std::abs(f(xq) - eval_at(fif, xq, settings).value));
        }
        result.mesh_h.push_back((b - a) / (n - 1));
        result.errors.push_back(err);
        if (norms)
            result.bound_totals.push_back(
                error_bound_c4(data, params, norms->f2, norms->f3, norms->f4, 0.0).total);
    }

    result.exact = std::all_of(result.errors.begin(), result.errors.end(),
                               [&](double e) { return e <= 1e-13 * y_scale; });
    if (!result.exact) {
        // least-squares slope of log(err) against log(h)
        const std::size_t n = result.errors.size();
        double mx = 0.0, my = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            mx += std::log(result.mesh_h[k]);
            my += std::log(result.errors[k]);
        }
        mx /= double(n);
        my /= double(n);
        double sxy = 0.0, sxx = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            const double dx = std::log(result.mesh_h[k]) - mx;
            sxy += dx * (std::log(result.errors[k]) - my);
            sxx += dx * dx;
        }
        result.order = sxy / sxx;
    }
    return result;
}

} // namespace fif
