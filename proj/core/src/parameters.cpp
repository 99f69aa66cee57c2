#include "fif/parameters.hpp"

#include <cmath>
#include <sstream>

namespace fif {

std::string ValidationReport::to_string() const {
    if (violations.empty())
        return "ok";
    std::ostringstream os;
    for (std::size_t k = 0; k < violations.size(); ++k) {
        if (k)
            os << "; ";
        os << violations[k].constraint;
    }
    return os.str();
}

ValidationReport validate_parameters(const HermiteData& data,
                                     const FifParameters& params) {
    ValidationReport report;
    const std::size_t m = data.interval_count();
    if (params.alpha.size() != m) {
        report.violations.push_back({0, "alpha has " + std::to_string(params.alpha.size()) +
                                            " entries, expected " + std::to_string(m)});
        return report;
    }
    if (params.r.size() != m) {
        report.violations.push_back({0, "r has " + std::to_string(params.r.size()) +
                                            " entries, expected " + std::to_string(m)});
        return report;
    }
    if (!(params.kappa >= 0.0 && params.kappa < 1.0)) {
        report.violations.push_back({0, "kappa must lie in [0,1)"});
        return report;
    }
    for (std::size_t i = 0; i < m; ++i) {
        const double cap = params.kappa * data.a()[i];
        if (!(std::abs(params.alpha[i]) <= cap)) {
            std::ostringstream os;
            os << "|alpha_" << i + 1 << "| = " << std::abs(params.alpha[i])
               << " exceeds kappa*a_" << i + 1 << " = " << cap;
            report.violations.push_back({i, os.str()});
        }
        if (!(params.r[i] > -1.0)) {
            std::ostringstream os;
            os << "r_" << i + 1 << " = " << params.r[i] << " <= -1";
            report.violations.push_back({i, os.str()});
        }
    }
    return report;
}

} // namespace fif
