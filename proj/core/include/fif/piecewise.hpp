#ifndef FIF_PIECEWISE_HPP
#define FIF_PIECEWISE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "fif/eval.hpp"
#include "fif/model.hpp"
#include "fif/parameters.hpp"

namespace fif {

/// One segment of a mixed-shape plan, indexing into the original knot list
/// (first..last inclusive). Two-point shape segments carry a midpoint node;
/// constant runs are flagged and later realized as exact constants.
struct Segment {
    std::size_t first = 0;
    std::size_t last = 0;
    ShapeClass shape = ShapeClass::Unconstrained;
    bool constant = false;
    std::optional<double> inserted_x; // midpoint node for two-point segments
    std::optional<double> inserted_y;
};

/// User override for plan_segments: explicit index ranges with shape labels.
struct SegmentSpec {
    std::size_t first = 0;
    std::size_t last = 0;
    ShapeClass shape = ShapeClass::Unconstrained;
};

struct SegmentPlan {
    std::vector<Segment> segments;           // tile 0..N-1 with shared endpoints
    std::vector<std::size_t> zero_slope_knots; // joints where d is forced to 0
};

/// Splits the data into maximal runs of uniform monotone direction (ties
/// become constant runs). Joints where the direction flips, and joints
/// adjacent to a constant run, get their slope pinned to zero. Two-point
/// non-constant segments receive a midpoint node with linearly interpolated
/// value. Explicit annotations replace the auto-detected ranges (they must
/// tile the knots); constant runs are still recognized within them.
SegmentPlan plan_segments(const std::vector<double>& x, const std::vector<double>& y,
                          const std::vector<SegmentSpec>* annotations = nullptr);

/// Per-segment Hermite slices: global slopes with the plan's zero-slope
/// forcing applied, inserted nodes spliced in (slope = segment chord slope).
std::vector<HermiteData> segment_hermite_data(const SegmentPlan& plan,
                                              const std::vector<double>& x,
                                              const std::vector<double>& y,
                                              const std::vector<double>& d);

/// Global C1 model dispatching to independent per-segment models. Constant
/// segments evaluate to the exact constant.
class PiecewiseFif {
public:
    struct Piece {
        Segment segment;
        bool constant = false;
        double constant_value = 0.0;
        std::optional<RationalCubicFif> fif; // empty for constant pieces
        double x_left = 0.0;
        double x_right = 0.0;
    };

    PiecewiseFif(std::vector<Piece> pieces);

    double x_front() const { return pieces_.front().x_left; }
    double x_back() const { return pieces_.back().x_right; }
    const std::vector<Piece>& pieces() const { return pieces_; }

    /// Index of the piece whose span contains x (ties at joints resolve to
    /// the left piece).
    std::size_t piece_index(double x) const;

    EvalResult eval_at(double x, const EvalSettings& settings = {}) const;
    EvalResult eval_derivative_at(double x, const EvalSettings& settings = {}) const;

    /// Concatenated per-segment attractor samples; joint points appear once.
    CurveSample sample(int depth, std::size_t max_points = 20000000) const;

private:
    std::vector<Piece> pieces_;
};

/// Builds the global model. segment_data must align with plan.segments and
/// agree at shared joints (knot, value, slope within 1e-12 relative).
/// When params is null each non-constant segment gets automatic parameters
/// via select_parameters(shape, t); user parameters are checked against the
/// segment's shape conditions. Throws std::invalid_argument on joint
/// mismatch or infeasible shape constraints.
PiecewiseFif assemble_piecewise(const SegmentPlan& plan,
                                const std::vector<HermiteData>& segment_data,
                                const std::vector<FifParameters>* params = nullptr,
                                double t = 0.5);

} // namespace fif

#endif
