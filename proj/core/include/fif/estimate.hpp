#ifndef FIF_ESTIMATE_HPP
#define FIF_ESTIMATE_HPP

#include <vector>

namespace fif {

/// Three-point arithmetic-mean derivative estimates: weighted chord-slope
/// averages at interior knots with extrapolated end conditions. Exact for
/// linear data. Requires N >= 3 strictly increasing knots.
std::vector<double> arithmetic_mean_derivatives(const std::vector<double>& x,
                                                const std::vector<double>& y);

} // namespace fif

#endif
