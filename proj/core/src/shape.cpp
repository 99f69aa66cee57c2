#include "fif/shape.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace fif {

namespace {

constexpr double kDefaultKappa = 0.999;
constexpr double kInf = std::numeric_limits<double>::infinity();

std::string fmt_index(const char* base, std::size_t i) {
    return std::string(base) + "_" + std::to_string(i + 1);
}

void finish_interval(IntervalBounds& b) {
    double full = kInf, data_only = kInf;
    for (const auto& term : b.alpha_terms) {
        if (!term.value)
            continue;
        full = std::min(full, *term.value);
        if (term.name.rfind("contraction", 0) != 0)
            data_only = std::min(data_only, *term.value);
    }
    b.alpha_max = b.forced_zero ? 0.0 : full;
    b.alpha_max_data = b.forced_zero ? 0.0 : data_only;
}

} // namespace

BoundsReport monotone_alpha_bounds(const HermiteData& data) {
    BoundsReport report;
    report.shape = ShapeClass::MonotoneIncreasing;
    const std::size_t m = data.interval_count();
    const auto& d = data.d();
    const auto& h = data.h();
    const auto& delta = data.delta();
    const double span = data.span();
    const double rise = data.y().back() - data.y().front();
    const double d1 = d.front(), dn = d.back();

    for (std::size_t j = 0; j < data.knot_count(); ++j) {
        if (d[j] < 0.0)
            report.necessary_violations.push_back(fmt_index("d", j) + " < 0");
    }
    for (std::size_t i = 0; i < m; ++i) {
        if (delta[i] < 0.0)
            report.necessary_violations.push_back(fmt_index("delta", i) + " < 0 (data not nondecreasing)");
        if (delta[i] == 0.0 && (d[i] != 0.0 || d[i + 1] != 0.0))
            report.necessary_violations.push_back(fmt_index("delta", i) +
                                                  " = 0 but the endpoint derivatives are nonzero");
    }

    report.intervals.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        IntervalBounds& b = report.intervals[i];
        b.alpha_terms.push_back({"contraction kappa*a", kDefaultKappa * data.a()[i]});
        if (d1 != 0.0)
            b.alpha_terms.push_back({"start derivative d_i*h_i/(d_1*|I|)",
                                     d[i] * h[i] / (d1 * span)});
        else
            b.alpha_terms.push_back({"start derivative d_i*h_i/(d_1*|I|)", std::nullopt});
        if (dn != 0.0)
            b.alpha_terms.push_back({"end derivative d_{i+1}*h_i/(d_N*|I|)",
                                     d[i + 1] * h[i] / (dn * span)});
        else
            b.alpha_terms.push_back({"end derivative d_{i+1}*h_i/(d_N*|I|)", std::nullopt});
        if (rise != 0.0)
            b.alpha_terms.push_back({"chord delta_i*h_i/(y_N-y_1)",
                                     delta[i] * h[i] / rise});
        else
            b.alpha_terms.push_back({"chord delta_i*h_i/(y_N-y_1)", std::nullopt});
        b.forced_zero = (delta[i] == 0.0); // constant segment convention
        finish_interval(b);
    }
    return report;
}

RSelection monotone_r_bound(const HermiteData& data, const std::vector<double>& alpha) {
    const std::size_t m = data.interval_count();
    if (alpha.size() != m)
        throw std::invalid_argument("monotone_r_bound: alpha length mismatch");
    const auto& d = data.d();
    const auto& h = data.h();
    const auto& delta = data.delta();
    const double span = data.span();
    const double rise = data.y().back() - data.y().front();
    const double dsum = d.front() + d.back();

    RSelection sel;
    sel.lower.resize(m);
    sel.optimal.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (delta[i] == 0.0) {
            // constant segment: alpha_i = 0 and any admissible r
            sel.lower[i] = -1.0;
            sel.optimal[i] = 3.0;
            continue;
        }
        const double den = h[i] * delta[i] - alpha[i] * rise;
        if (!(den > 0.0))
            throw std::invalid_argument(fmt_index("alpha", i) +
                                        " too large: chord term h*delta - alpha*(y_N-y_1) <= 0");
        const double num = h[i] * (d[i] + d[i + 1]) - alpha[i] * span * dsum;
        sel.lower[i] = num / den;
        sel.optimal[i] = 1.0 + sel.lower[i];
    }
    return sel;
}

BoundsReport convex_alpha_bounds(const HermiteData& data) {
    BoundsReport report;
    report.shape = ShapeClass::Convex;
    const std::size_t m = data.interval_count();
    const auto& d = data.d();
    const auto& h = data.h();
    const auto& delta = data.delta();
    const double span = data.span();
    const double rise = data.y().back() - data.y().front();

    // necessary chain d_1 < delta_1 < d_2 < ... < delta_{N-1} < d_N
    for (std::size_t i = 0; i < m; ++i) {
        if (!(d[i] < delta[i]))
            report.necessary_violations.push_back(fmt_index("d", i) + " < " +
                                                  fmt_index("delta", i) + " fails");
        if (!(delta[i] < d[i + 1]))
            report.necessary_violations.push_back(fmt_index("delta", i) + " < " +
                                                  fmt_index("d", i + 1) + " fails");
    }

    const double upper_den = d.back() * span - rise; // > 0 for strictly convex data
    const double lower_den = rise - d.front() * span;

    report.intervals.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        IntervalBounds& b = report.intervals[i];
        b.alpha_terms.push_back({"contraction kappa*a^2",
                                 kDefaultKappa * data.a()[i] * data.a()[i]});
        if (upper_den != 0.0)
            b.alpha_terms.push_back({"upper h_i*(d_{i+1}-delta_i)/(d_N*|I|-(y_N-y_1))",
                                     h[i] * (d[i + 1] - delta[i]) / upper_den});
        else
            b.alpha_terms.push_back({"upper h_i*(d_{i+1}-delta_i)/(d_N*|I|-(y_N-y_1))",
                                     std::nullopt});
        if (lower_den != 0.0)
            b.alpha_terms.push_back({"lower h_i*(delta_i-d_i)/((y_N-y_1)-d_1*|I|)",
                                     h[i] * (delta[i] - d[i]) / lower_den});
        else
            b.alpha_terms.push_back({"lower h_i*(delta_i-d_i)/((y_N-y_1)-d_1*|I|)",
                                     std::nullopt});
        // straight-line segment: equal chords force alpha = 0
        b.forced_zero = (delta[i] == d[i] && d[i + 1] == delta[i]) ||
                        (i + 1 < m && delta[i] == delta[i + 1]);
        finish_interval(b);
    }
    return report;
}

RSelection convex_r_bound(const HermiteData& data, const std::vector<double>& alpha) {
    const std::size_t m = data.interval_count();
    if (alpha.size() != m)
        throw std::invalid_argument("convex_r_bound: alpha length mismatch");
    const auto& d = data.d();
    const auto& h = data.h();
    const auto& delta = data.delta();
    const double span = data.span();
    const double rise = data.y().back() - data.y().front();

    RSelection sel;
    sel.lower.resize(m);
    sel.optimal.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        const double g = alpha[i] / h[i];
        const double p = (d[i + 1] - delta[i]) - g * (d.back() * span - rise);
        const double q = (delta[i] - d[i]) - g * (rise - d.front() * span);
        const double big = std::max(p, q), small = std::min(p, q);
        if (!(small > 0.0))
            throw std::invalid_argument(fmt_index("alpha", i) +
                                        " too large: min{M,m} term nonpositive");
        sel.lower[i] = 1.0 + big / small;
        sel.optimal[i] = 1.0 + big / small + small / big;
    }
    return sel;
}

BoundsReport positivity_bounds(const HermiteData& data) {
    BoundsReport report;
    report.shape = ShapeClass::Positive;
    const std::size_t m = data.interval_count();
    const auto& y = data.y();

    for (std::size_t j = 0; j < data.knot_count(); ++j) {
        if (!(y[j] > 0.0))
            report.necessary_violations.push_back(fmt_index("y", j) + " <= 0");
    }
    report.intervals.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        IntervalBounds& b = report.intervals[i];
        b.alpha_terms.push_back({"contraction kappa*a", kDefaultKappa * data.a()[i]});
        if (y.front() > 0.0)
            b.alpha_terms.push_back({"start value y_i/y_1", y[i] / y.front()});
        if (y.back() > 0.0)
            b.alpha_terms.push_back({"end value y_{i+1}/y_N", y[i + 1] / y.back()});
        finish_interval(b);
    }
    return report;
}

std::vector<double> positive_r_lower(const HermiteData& data,
                                     const std::vector<double>& alpha) {
    const std::size_t m = data.interval_count();
    if (alpha.size() != m)
        throw std::invalid_argument("positive_r_lower: alpha length mismatch");
    const auto& y = data.y();
    const auto& d = data.d();
    const auto& h = data.h();
    const double span = data.span();

    std::vector<double> lower(m);
    for (std::size_t i = 0; i < m; ++i) {
        const double da = y[i] - alpha[i] * y.front();
        const double dd = y[i + 1] - alpha[i] * y.back();
        if (!(da > 0.0) || !(dd > 0.0))
            throw std::invalid_argument(fmt_index("alpha", i) +
                                        " outside the positivity bounds");
        lower[i] = std::max({-1.0,
                             (-h[i] * d[i] + alpha[i] * d.front() * span) / da,
                             (h[i] * d[i + 1] - alpha[i] * d.back() * span) / dd});
    }
    return lower;
}

BoundsReport alpha_bounds(const HermiteData& data, ShapeClass shape) {
    switch (shape) {
    case ShapeClass::MonotoneIncreasing:
        return monotone_alpha_bounds(data);
    case ShapeClass::MonotoneDecreasing: {
        auto report = monotone_alpha_bounds(data.negated());
        report.shape = shape;
        return report;
    }
    case ShapeClass::Convex:
    case ShapeClass::ConvexMonotoneIncreasing: {
        auto report = convex_alpha_bounds(data);
        report.shape = shape;
        return report;
    }
    case ShapeClass::Concave: {
        auto report = convex_alpha_bounds(data.negated());
        report.shape = shape;
        return report;
    }
    case ShapeClass::Positive:
        return positivity_bounds(data);
    case ShapeClass::Unconstrained: {
        BoundsReport report;
        report.shape = shape;
        report.intervals.resize(data.interval_count());
        for (std::size_t i = 0; i < data.interval_count(); ++i) {
            report.intervals[i].alpha_terms.push_back(
                {"contraction kappa*a", kDefaultKappa * data.a()[i]});
            finish_interval(report.intervals[i]);
        }
        return report;
    }
    }
    throw std::logic_error("alpha_bounds: unknown shape class");
}

FifParameters select_parameters(const HermiteData& data, ShapeClass shape,
                                double t, const std::vector<double>* user_r) {
    if (!(t >= 0.0 && t < 1.0))
        throw std::invalid_argument("select_parameters: t must lie in [0,1)");

    const BoundsReport report = alpha_bounds(data, shape);
    if (!report.feasible()) {
        std::ostringstream os;
        os << "necessary " << to_string(shape) << " conditions violated: ";
        for (std::size_t k = 0; k < report.necessary_violations.size(); ++k)
            os << (k ? "; " : "") << report.necessary_violations[k];
        throw std::invalid_argument(os.str());
    }

    const std::size_t m = data.interval_count();
    FifParameters params;
    params.kappa = kDefaultKappa;
    params.alpha.resize(m);
    for (std::size_t i = 0; i < m; ++i)
        params.alpha[i] = t * report.intervals[i].alpha_max;

    const bool mirror = (shape == ShapeClass::MonotoneDecreasing ||
                         shape == ShapeClass::Concave);
    const HermiteData work = mirror ? data.negated() : data;

    std::vector<double> lower(m, -1.0), optimal(m, 3.0);
    switch (shape) {
    case ShapeClass::MonotoneIncreasing:
    case ShapeClass::MonotoneDecreasing: {
        const RSelection sel = monotone_r_bound(work, params.alpha);
        lower = sel.lower;
        optimal = sel.optimal;
        break;
    }
    case ShapeClass::Convex:
    case ShapeClass::Concave:
    case ShapeClass::ConvexMonotoneIncreasing: {
        const RSelection sel = convex_r_bound(work, params.alpha);
        lower = sel.lower;
        optimal = sel.optimal;
        break;
    }
    case ShapeClass::Positive: {
        lower = positive_r_lower(work, params.alpha);
        for (std::size_t i = 0; i < m; ++i)
            optimal[i] = lower[i] < 3.0 ? 3.0 : lower[i] + 1.0;
        break;
    }
    case ShapeClass::Unconstrained:
        break;
    }

    if (user_r) {
        if (user_r->size() != m)
            throw std::invalid_argument("select_parameters: r length mismatch");
        for (std::size_t i = 0; i < m; ++i) {
            const bool strict = (shape == ShapeClass::Positive);
            const bool ok = strict ? ((*user_r)[i] > lower[i])
                                   : ((*user_r)[i] >= lower[i]);
            if (!ok)
                throw std::invalid_argument(fmt_index("r", i) + " below its shape bound " +
                                            std::to_string(lower[i]));
        }
        params.r = *user_r;
    } else {
        params.r = optimal;
    }
    return params;
}

ValidationReport validate_shape_parameters(const HermiteData& data,
                                           const FifParameters& params,
                                           ShapeClass shape) {
    ValidationReport out = validate_parameters(data, params);
    if (!out.ok())
        return out;

    const BoundsReport report = alpha_bounds(data, shape);
    for (const auto& msg : report.necessary_violations)
        out.violations.push_back({0, "necessary condition: " + msg});
    if (!out.ok())
        return out;

    const std::size_t m = data.interval_count();
    if (shape != ShapeClass::Unconstrained) {
        for (std::size_t i = 0; i < m; ++i) {
            if (params.alpha[i] < 0.0)
                out.violations.push_back({i, fmt_index("alpha", i) + " < 0"});
            else if (!(params.alpha[i] < report.intervals[i].alpha_max))
                out.violations.push_back({i, fmt_index("alpha", i) + " not strictly below its bound"});
        }
        if (!out.ok())
            return out;
    }

    const bool mirror = (shape == ShapeClass::MonotoneDecreasing ||
                         shape == ShapeClass::Concave);
    const HermiteData work = mirror ? data.negated() : data;

    switch (shape) {
    case ShapeClass::MonotoneIncreasing:
    case ShapeClass::MonotoneDecreasing: {
        const RSelection sel = monotone_r_bound(work, params.alpha);
        for (std::size_t i = 0; i < m; ++i)
            if (!(params.r[i] >= sel.lower[i]))
                out.violations.push_back({i, fmt_index("r", i) + " below the monotonicity bound"});
        break;
    }
    case ShapeClass::Convex:
    case ShapeClass::Concave:
    case ShapeClass::ConvexMonotoneIncreasing: {
        const RSelection sel = convex_r_bound(work, params.alpha);
        for (std::size_t i = 0; i < m; ++i)
            if (!(params.r[i] >= sel.lower[i]))
                out.violations.push_back({i, fmt_index("r", i) + " below the convexity bound"});
        break;
    }
    case ShapeClass::Positive: {
        const auto lower = positive_r_lower(work, params.alpha);
        for (std::size_t i = 0; i < m; ++i)
            if (!(params.r[i] > lower[i]))
                out.violations.push_back({i, fmt_index("r", i) + " not above the positivity bound"});
        break;
    }
    case ShapeClass::Unconstrained:
        break;
    }
    return out;
}

namespace {

ShapeCheck check_monotone(const CurveSample& sample, bool increasing) {
    ShapeCheck check;
    const double tol = 1e-10;
    for (std::size_t k = 0; k + 1 < sample.points.size(); ++k) {
        const auto& p0 = sample.points[k];
        const auto& p1 = sample.points[k + 1];
        const double step = increasing ? p1.value - p0.value : p0.value - p1.value;
        if (step < -tol) {
            check.pass = false;
            check.witness_x0 = p0.x;
            check.witness_x1 = p1.x;
            std::ostringstream os;
            os << "value moves " << (increasing ? "down" : "up") << " by " << -step
               << " between x = " << p0.x << " and " << p1.x;
            check.detail = os.str();
            return check;
        }
    }
    return check;
}

ShapeCheck check_convex(const CurveSample& sample, bool convex) {
    ShapeCheck check;
    double v_inf = 0.0;
    for (const auto& p : sample.points)
        v_inf = std::max(v_inf, std::abs(p.value));
    for (std::size_t k = 0; k + 2 < sample.points.size(); ++k) {
        const auto& p0 = sample.points[k];
        const auto& p1 = sample.points[k + 1];
        const auto& p2 = sample.points[k + 2];
        const double g0 = p1.x - p0.x, g1 = p2.x - p1.x;
        const double s = convex ? 1.0 : -1.0;
        // cross-product form of "chord slopes nondecreasing"; stays robust
        // when the gaps get tiny at depth
        const double cross = s * ((p2.value - p1.value) * g0 - (p1.value - p0.value) * g1);
        const double tol = 1e-10 * (1.0 + v_inf) * (g0 + g1);
        if (cross < -tol) {
            check.pass = false;
            check.witness_x0 = p0.x;
            check.witness_x1 = p2.x;
            std::ostringstream os;
            os << "chord slope " << (convex ? "decreases" : "increases")
               << " across x = " << p0.x << " .. " << p2.x;
            check.detail = os.str();
            return check;
        }
    }
    return check;
}

ShapeCheck check_positive(const CurveSample& sample) {
    ShapeCheck check;
    for (std::size_t k = 0; k < sample.points.size(); ++k) {
        if (sample.points[k].value < -1e-10) {
            check.pass = false;
            check.witness_x0 = sample.points[k].x;
            check.witness_x1 = sample.points[k].x;
            std::ostringstream os;
            os << "value " << sample.points[k].value << " at x = " << sample.points[k].x;
            check.detail = os.str();
            return check;
        }
    }
    return check;
}

} // namespace

ShapeCheck verify_shape(const RationalCubicFif& fif, ShapeClass shape, int depth) {
    const CurveSample sample = sample_attractor(fif, depth);
    switch (shape) {
    case ShapeClass::MonotoneIncreasing:
        return check_monotone(sample, true);
    case ShapeClass::MonotoneDecreasing:
        return check_monotone(sample, false);
    case ShapeClass::Convex:
        return check_convex(sample, true);
    case ShapeClass::Concave:
        return check_convex(sample, false);
    case ShapeClass::Positive:
        return check_positive(sample);
    case ShapeClass::ConvexMonotoneIncreasing: {
        ShapeCheck check = check_convex(sample, true);
        if (!check.pass)
            return check;
        return check_monotone(sample, true);
    }
    case ShapeClass::Unconstrained:
        return {};
    }
    throw std::logic_error("verify_shape: unknown shape class");
}

} // namespace fif
