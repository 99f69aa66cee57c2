#include "fif/eval.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fif {

namespace {

double min_denominator(const std::vector<double>& r) {
    double c = 1.0;
    for (double ri : r)
        c = std::min(c, ri < 3.0 ? (1.0 + ri) / 4.0 : 1.0);
    return c;
}

double abs_max(const std::vector<double>& v) {
    double m = 0.0;
    for (double e : v)
        m = std::max(m, std::abs(e));
    return m;
}

// Binary search for an exact knot hit.
bool knot_index(const std::vector<double>& xs, double x, std::size_t& out) {
    auto it = std::lower_bound(xs.begin(), xs.end(), x);
    if (it != xs.end() && *it == x) {
        out = std::size_t(it - xs.begin());
        return true;
    }
    return false;
}

std::size_t interval_index(const std::vector<double>& xs, double x) {
    auto it = std::upper_bound(xs.begin(), xs.end(), x);
    std::size_t i = std::size_t(it - xs.begin());
    if (i == 0)
        return 0;
    if (i >= xs.size())
        return xs.size() - 2;
    return i - 1;
}

// Piecewise linear interpolant of (x_j, v_j); x inside the data range.
double linear_base(const std::vector<double>& xs, const std::vector<double>& vs,
                   double x) {
    const std::size_t i = interval_index(xs, x);
    const double w = (x - xs[i]) / (xs[i + 1] - xs[i]);
    return vs[i] + w * (vs[i + 1] - vs[i]);
}

struct Level {
    std::size_t interval;
    double t; // theta of the preimage
};

// Shared address-expansion driver for S and S'.
template <typename Contraction, typename Addend, typename Base>
EvalResult expand(const RationalCubicFif& fif, double x,
                  const EvalSettings& settings, double base_uncertainty,
                  Contraction contraction, Addend addend, Base base_value) {
    const auto& xs = fif.data().x();
    if (x < xs.front() || x > xs.back())
        throw std::domain_error("eval: x outside [x_1, x_N]");
    if (!(settings.tolerance > 0.0) || settings.max_depth < 1)
        throw std::invalid_argument("eval: tolerance must be > 0 and max_depth >= 1");

    std::vector<Level> levels;
    double prod = 1.0;
    double base = 0.0;
    double base_err = 0.0;

    for (;;) {
        std::size_t j;
        if (knot_index(xs, x, j)) {
            base = base_value(j, x, true);
            base_err = 0.0;
            break;
        }
        if (!levels.empty() &&
            (prod * base_uncertainty <= settings.tolerance ||
             int(levels.size()) >= settings.max_depth)) {
            base = base_value(0, x, false);
            base_err = prod * base_uncertainty;
            break;
        }
        const std::size_t i = interval_index(xs, x);
        x = fif.map_inverse(i, x);
        x = std::clamp(x, xs.front(), xs.back());
        levels.push_back({i, fif.theta(x)});
        prod *= contraction(i);
    }

    double v = base;
    for (auto it = levels.rbegin(); it != levels.rend(); ++it)
        v = addend(it->interval, it->t, v);

    EvalResult result;
    result.value = v;
    result.error_bound = base_err;
    result.depth = int(levels.size());
    return result;
}

} // namespace

double range_bound(const RationalCubicFif& fif) {
    const auto& data = fif.data();
    const double y_inf = abs_max(data.y());
    const double d_inf = abs_max(data.d());
    const double r_inf = abs_max(fif.params().r);
    const double h = *std::max_element(data.h().begin(), data.h().end());
    const double c = min_denominator(fif.params().r);
    const double alpha_inf = abs_max(fif.params().alpha);
    const double classical = (y_inf + 0.25 * (r_inf * y_inf + h * d_inf)) / c;
    return classical / (1.0 - alpha_inf);
}

EvalResult eval_at(const RationalCubicFif& fif, double x,
                   const EvalSettings& settings) {
    const auto& data = fif.data();
    const double uncertainty = range_bound(fif) + abs_max(data.y());
    return expand(
        fif, x, settings, uncertainty,
        [&](std::size_t i) { return std::abs(fif.params().alpha[i]); },
        [&](std::size_t i, double t, double v) {
            return fif.params().alpha[i] * v + fif.rational(i, t);
        },
        [&](std::size_t j, double xq, bool knot) {
            return knot ? data.y()[j] : linear_base(data.x(), data.y(), xq);
        });
}

EvalResult eval_derivative_at(const RationalCubicFif& fif, double x,
                              const EvalSettings& settings) {
    const auto& data = fif.data();
    const auto& params = fif.params();
    const std::size_t m = data.interval_count();

    // Fixed-point bound on |S'|: each level contracts by |alpha_i|/a_i and
    // the inhomogeneous quartic over Q^2 is bounded by max|coeff| / c_i^2.
    double contraction_inf = 0.0;
    double addend_sup = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        contraction_inf = std::max(contraction_inf,
                                   std::abs(params.alpha[i]) / data.a()[i]);
        const auto& c = fif.deriv_coeffs(i);
        const double top = std::max({std::abs(c[0]), std::abs(c[1]), std::abs(c[2]),
                                     std::abs(c[3]), std::abs(c[4])});
        const double ci = params.r[i] < 3.0 ? (1.0 + params.r[i]) / 4.0 : 1.0;
        addend_sup = std::max(addend_sup, top / (ci * ci));
    }
    const double slope_sup = addend_sup / (1.0 - contraction_inf);
    const double uncertainty = slope_sup + abs_max(data.d());

    return expand(
        fif, x, settings, uncertainty,
        [&](std::size_t i) { return std::abs(params.alpha[i]) / data.a()[i]; },
        [&](std::size_t i, double t, double v) {
            return (params.alpha[i] / data.a()[i]) * v + fif.rational_deriv(i, t);
        },
        [&](std::size_t j, double xq, bool knot) {
            return knot ? data.d()[j] : linear_base(data.x(), data.d(), xq);
        });
}

CurveSample sample_attractor(const RationalCubicFif& fif, int depth,
                             std::size_t max_points) {
    if (depth < 1)
        throw std::invalid_argument("sample_attractor: depth must be >= 1");
    const auto& data = fif.data();
    const auto& params = fif.params();
    const std::size_t m = data.interval_count();

    struct Tagged {
        double x, value, slope;
        bool knot;
    };

    std::vector<Tagged> cur;
    cur.reserve(data.knot_count());
    for (std::size_t j = 0; j < data.knot_count(); ++j)
        cur.push_back({data.x()[j], data.y()[j], data.d()[j], true});

    for (int level = 0; level < depth; ++level) {
        const std::size_t projected = m * cur.size();
        if (projected > max_points)
            throw std::length_error("sample_attractor: point budget exceeded");
        std::vector<Tagged> next;
        next.reserve(projected);
        for (std::size_t i = 0; i < m; ++i) {
            const std::size_t first = next.size();
            for (const Tagged& p : cur) {
                const double t = fif.theta(p.x);
                next.push_back({fif.map_forward(i, p.x),
                                params.alpha[i] * p.value + fif.rational(i, t),
                                (params.alpha[i] / data.a()[i]) * p.slope +
                                    fif.rational_deriv(i, t),
                                false});
            }
            // Endpoints of each block are knot images of the extreme knots;
            // pin them to the exact knot data.
            next[first] = {data.x()[i], data.y()[i], data.d()[i], true};
            next.back() = {data.x()[i + 1], data.y()[i + 1], data.d()[i + 1], true};
            if (i > 0)
                next.erase(next.begin() + long(first)); // shared with previous block
        }
        cur = std::move(next);
    }

    // Dedup abscissae closer than 1e-14, preferring exact knot entries.
    CurveSample sample;
    sample.depth = depth;
    sample.points.reserve(cur.size());
    for (const Tagged& p : cur) {
        if (!sample.points.empty() &&
            std::abs(p.x - sample.points.back().x) <= 1e-14) {
            if (p.knot)
                sample.points.back() = {p.x, p.value, p.slope};
            continue;
        }
        sample.points.push_back({p.x, p.value, p.slope});
    }
    return sample;
}

std::vector<double> second_derivative_right_at_knots(const RationalCubicFif& fif) {
    const auto& data = fif.data();
    const auto& params = fif.params();
    const std::size_t m = data.interval_count();
    for (std::size_t i = 0; i < m; ++i) {
        if (!(params.alpha[i] < data.a()[i] * data.a()[i]))
            throw std::domain_error("second derivative limits need alpha_i < a_i^2");
    }

    std::vector<double> out(data.knot_count());
    const double a0 = data.a()[0];
    out[0] = (2.0 * fif.second_coeffs(0)[3] / data.h()[0]) /
             (1.0 - params.alpha[0] / (a0 * a0));
    for (std::size_t i = 1; i < m; ++i) {
        const double ai = data.a()[i];
        out[i] = (params.alpha[i] / (ai * ai)) * out[0] +
                 2.0 * fif.second_coeffs(i)[3] / data.h()[i];
    }
    const double am = data.a()[m - 1];
    out[m] = (2.0 * fif.second_coeffs(m - 1)[0] / data.h()[m - 1]) /
             (1.0 - params.alpha[m - 1] / (am * am));
    return out;
}

} // namespace fif
