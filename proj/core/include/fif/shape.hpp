#ifndef FIF_SHAPE_HPP
#define FIF_SHAPE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fif/eval.hpp"
#include "fif/model.hpp"

namespace fif {

/// One named contribution to an interval's scaling-factor cap; an empty
/// value means the criterion imposes no constraint (its denominator
/// vanishes).
struct BoundTerm {
    std::string name;
    std::optional<double> value;
};

struct IntervalBounds {
    std::vector<BoundTerm> alpha_terms;
    double alpha_max = 0.0;      // min over all terms, contraction included
    double alpha_max_data = 0.0; // min over the data-dependent terms only
    bool forced_zero = false;    // degenerate interval (flat chord / straight run)
};

/// Admissible scaling-factor ranges per interval for a shape class, with a
/// per-criterion breakdown. All bounds are exclusive: alpha_i must lie in
/// [0, alpha_max).
struct BoundsReport {
    ShapeClass shape = ShapeClass::Unconstrained;
    std::vector<IntervalBounds> intervals;
    std::vector<std::string> necessary_violations; // diagnostics on d (and y)
    bool feasible() const { return necessary_violations.empty(); }
};

/// Per-interval shape-parameter selection: the sufficient lower bound and
/// the choice that collapses the cubic to its reduced (quadratic-numerator)
/// form while meeting the optimal error-order requirement.
struct RSelection {
    std::vector<double> lower;
    std::vector<double> optimal;
};

/// Increasing data (d_i >= 0 required). Decreasing data mirrors through
/// HermiteData::negated().
BoundsReport monotone_alpha_bounds(const HermiteData& data);
RSelection monotone_r_bound(const HermiteData& data, const std::vector<double>& alpha);

/// Strictly convex data (d_1 < delta_1 < d_2 < ... < d_N required).
/// Concave data mirrors through negated().
BoundsReport convex_alpha_bounds(const HermiteData& data);
RSelection convex_r_bound(const HermiteData& data, const std::vector<double>& alpha);

/// Strictly positive data (y_i > 0 required).
BoundsReport positivity_bounds(const HermiteData& data);
/// Strict lower bounds on r_i given a candidate alpha within the positivity
/// bounds.
std::vector<double> positive_r_lower(const HermiteData& data,
                                     const std::vector<double>& alpha);

/// Shape-class dispatch; handles the decreasing/concave mirror internally
/// (the reported bounds apply to the original data's parameters).
BoundsReport alpha_bounds(const HermiteData& data, ShapeClass shape);

/// Automatic parameter selection: alpha_i = t * (interval's alpha cap),
/// r_i from the class's optimal rule (or user-supplied values checked
/// against the lower bound). Throws std::invalid_argument when the shape
/// class's necessary conditions fail or a user r is below its bound.
FifParameters select_parameters(const HermiteData& data, ShapeClass shape,
                                double t = 0.5,
                                const std::vector<double>* user_r = nullptr);

/// Checks parameters against a shape class's sufficient conditions
/// (strict alpha bounds, r at-or-above the lower bound).
ValidationReport validate_shape_parameters(const HermiteData& data,
                                           const FifParameters& params,
                                           ShapeClass shape);

struct ShapeCheck {
    bool pass = true;
    double witness_x0 = 0.0; // abscissa pair exhibiting the violation
    double witness_x1 = 0.0;
    std::string detail;
};

/// Numerical shape verification on exact attractor samples at the given
/// composition depth.
ShapeCheck verify_shape(const RationalCubicFif& fif, ShapeClass shape, int depth);

} // namespace fif

#endif
