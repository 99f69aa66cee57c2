#ifndef FIF_EVAL_HPP
#define FIF_EVAL_HPP

#include <cstddef>
#include <vector>

#include "fif/model.hpp"

namespace fif {

struct EvalSettings {
    double tolerance = 1e-10; // absolute, value units
    int max_depth = 64;       // address expansion limit
};

struct EvalResult {
    double value = 0.0;
    double error_bound = 0.0; // certified |value - S(x)|
    int depth = 0;            // composition length actually used
};

/// Point evaluation of S by inverse-map address expansion. Descends through
/// preimages until either a knot is hit (exact), the certified error bound
/// (product of encountered |alpha_i| times a range bound on S) drops below
/// the tolerance, or max_depth is reached; the base case is the piecewise
/// linear interpolant of the data. If the tolerance is unachievable within
/// max_depth the result carries the achieved bound (> tolerance).
EvalResult eval_at(const RationalCubicFif& fif, double x,
                   const EvalSettings& settings = {});

/// Same scheme for S'; the per-level contraction factor is |alpha_i|/a_i
/// and the base case interpolates the derivative parameters d_j linearly.
EvalResult eval_derivative_at(const RationalCubicFif& fif, double x,
                              const EvalSettings& settings = {});

/// Exact graph points of S (and S') generated by iterating the IFS maps on
/// the knot set. Points are sorted, contain all knots exactly, and carry
/// exact values: the functional equation propagates exactness level by
/// level.
struct CurveSample {
    struct Point {
        double x;
        double value;
        double slope;
    };
    std::vector<Point> points;
    int depth = 0;
    bool exact = true;
};

CurveSample sample_attractor(const RationalCubicFif& fif, int depth,
                             std::size_t max_points = 20000000);

/// Right-hand second-derivative limits at the knots x_1 .. x_{N-1} plus the
/// left-hand limit at x_N (last entry). Requires alpha_i < a_i^2 on every
/// interval; throws std::domain_error otherwise.
std::vector<double> second_derivative_right_at_knots(const RationalCubicFif& fif);

/// Conservative sup-norm bound on |S| used by the evaluation certificate:
/// (|y|_inf + (|r|_inf |y|_inf + h |d|_inf)/4) / c, inflated by
/// 1/(1 - |alpha|_inf).
double range_bound(const RationalCubicFif& fif);

} // namespace fif

#endif
