#ifndef FIF_HERMITE_DATA_HPP
#define FIF_HERMITE_DATA_HPP

#include <cstddef>
#include <vector>

namespace fif {

/// Hermite interpolation data: strictly increasing knots x_i with values y_i
/// and derivative parameters d_i (slope units), together with the derived
/// per-interval quantities used everywhere else:
///   h_i     = x_{i+1} - x_i
///   delta_i = (y_{i+1} - y_i) / h_i          (chord slope)
///   a_i     = h_i / (x_N - x_1)              (horizontal contraction of L_i)
class HermiteData {
public:
    HermiteData(std::vector<double> x, std::vector<double> y,
                std::vector<double> d);

    std::size_t knot_count() const { return x_.size(); }
    std::size_t interval_count() const { return x_.size() - 1; }

    const std::vector<double>& x() const { return x_; }
    const std::vector<double>& y() const { return y_; }
    const std::vector<double>& d() const { return d_; }
    const std::vector<double>& h() const { return h_; }
    const std::vector<double>& delta() const { return delta_; }
    const std::vector<double>& a() const { return a_; }

    double x_front() const { return x_.front(); }
    double x_back() const { return x_.back(); }
    double span() const { return x_.back() - x_.front(); }

    /// Mirror image (y -> -y, d -> -d); turns decreasing data increasing and
    /// concave data convex.
    HermiteData negated() const;

private:
    std::vector<double> x_, y_, d_;
    std::vector<double> h_, delta_, a_;
};

enum class ShapeClass {
    MonotoneIncreasing,
    MonotoneDecreasing,
    Convex,
    Concave,
    Positive,
    ConvexMonotoneIncreasing,
    Unconstrained,
};

const char* to_string(ShapeClass shape);

} // namespace fif

#endif
