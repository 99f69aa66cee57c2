#include "fif/hermite_data.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace fif {

HermiteData::HermiteData(std::vector<double> x, std::vector<double> y,
                         std::vector<double> d)
    : x_(std::move(x)), y_(std::move(y)), d_(std::move(d)) {
    const std::size_t n = x_.size();
    if (n < 2)
        throw std::invalid_argument("HermiteData: need at least two knots");
    if (y_.size() != n || d_.size() != n)
        throw std::invalid_argument("HermiteData: x, y, d must have equal length");
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (!(x_[i] < x_[i + 1]))
            throw std::invalid_argument("HermiteData: knots must be strictly increasing (knot " +
                                        std::to_string(i + 2) + ")");
    }
    const double len = x_.back() - x_.front();
    h_.resize(n - 1);
    delta_.resize(n - 1);
    a_.resize(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        h_[i] = x_[i + 1] - x_[i];
        delta_[i] = (y_[i + 1] - y_[i]) / h_[i];
        a_[i] = h_[i] / len;
    }
}

HermiteData HermiteData::negated() const {
    std::vector<double> ny(y_.size()), nd(d_.size());
    for (std::size_t i = 0; i < y_.size(); ++i) {
        ny[i] = -y_[i];
        nd[i] = -d_[i];
    }
    return HermiteData(x_, std::move(ny), std::move(nd));
}

const char* to_string(ShapeClass shape) {
    switch (shape) {
    case ShapeClass::MonotoneIncreasing: return "monotone-increasing";
    case ShapeClass::MonotoneDecreasing: return "monotone-decreasing";
    case ShapeClass::Convex: return "convex";
    case ShapeClass::Concave: return "concave";
    case ShapeClass::Positive: return "positive";
    case ShapeClass::ConvexMonotoneIncreasing: return "convex-monotone-increasing";
    case ShapeClass::Unconstrained: return "unconstrained";
    }
    return "unknown";
}

} // namespace fif
