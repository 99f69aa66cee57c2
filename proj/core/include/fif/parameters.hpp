#ifndef FIF_PARAMETERS_HPP
#define FIF_PARAMETERS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "fif/hermite_data.hpp"

namespace fif {

/// Per-interval iterated-function-system parameters of the rational cubic
/// spline model: vertical scaling factors alpha_i, shape (tension)
/// parameters r_i, and the contraction margin kappa used by the C^1
/// admissibility condition |alpha_i| <= kappa * a_i < a_i.
struct FifParameters {
    std::vector<double> alpha;
    std::vector<double> r;
    double kappa = 0.999;
};

struct Violation {
    std::size_t interval;   // 0-based
    std::string constraint; // human-readable, 1-based indices in the text
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    std::string to_string() const;
};

/// Checks the hypotheses of the model construction: matching vector lengths,
/// |alpha_i| <= kappa * a_i and r_i > -1 on every interval. Reporting only;
/// never throws.
ValidationReport validate_parameters(const HermiteData& data,
                                     const FifParameters& params);

} // namespace fif

#endif
