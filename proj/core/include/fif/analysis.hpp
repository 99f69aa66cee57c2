#ifndef FIF_ANALYSIS_HPP
#define FIF_ANALYSIS_HPP

#include <functional>
#include <vector>

#include "fif/model.hpp"

namespace fif {

/// Denominator floor per interval: c_i = (1+r_i)/4 for -1 < r_i < 3,
/// otherwise 1.
std::vector<double> c_values(const std::vector<double>& r);
double c_min(const std::vector<double>& r);

/// A-priori sup-norm error bound, assembled term by term.
struct ErrorBoundReport {
    double c = 1.0;
    double z0 = 0.0;           // bound on |dR_i/dalpha_i|
    double s_sup_bound = 0.0;  // bound on ||s||_inf (classical spline)
    double classical = 0.0;    // ||f - s||_inf part
    double perturbation = 0.0; // |alpha|_inf (||s||_inf + Z_0) / (1 - |alpha|_inf)
    double total = 0.0;
    // echoed inputs
    double h = 0.0, r_inf = 0.0, d_inf = 0.0, y_inf = 0.0, alpha_inf = 0.0;
};

/// Bound for a C^4 generator: classical part driven by the derivative
/// mismatch and the norms ||f''||, ||f'''||, ||f''''||, plus the fractal
/// perturbation term.
ErrorBoundReport error_bound_c4(const HermiteData& data, const FifParameters& params,
                                double f2_norm, double f3_norm, double f4_norm,
                                double derivative_mismatch);

/// Bound for a C^1 generator in terms of the modulus of continuity
/// omega(f; h).
ErrorBoundReport error_bound_c1(const HermiteData& data, const FifParameters& params,
                                double omega);

enum class AlphaRule { Quadratic, Cubic, Quartic }; // |alpha_i| = a_i^p / 2
enum class TensionRule { Fixed, ThreePlusH, ThreePlusHSquared };

struct ConvergenceResult {
    std::vector<double> mesh_h;
    std::vector<double> errors;       // max |f - S| on a dense grid
    std::vector<double> bound_totals; // error_bound_c4 per mesh (when norms given)
    double order = 0.0;               // least-squares slope of log err vs log h
    bool exact = false;               // all errors at roundoff level
};

/// Empirical convergence-order harness: builds a FIF on each (uniform) mesh
/// with exact derivatives d_i = f'(x_i), measures the dense-grid error and
/// fits the order. knot_counts need >= 3 entries. When norms is non-null,
/// the C^4 bound is evaluated per mesh for comparison against the measured
/// error.
struct DerivativeNorms {
    double f2 = 0.0, f3 = 0.0, f4 = 0.0;
};

ConvergenceResult convergence_order(const std::function<double(double)>& f,
                                    const std::function<double(double)>& df,
                                    double a, double b,
                                    const std::vector<int>& knot_counts,
                                    AlphaRule alpha_rule, TensionRule r_rule,
                                    double fixed_r = 3.0,
                                    const DerivativeNorms* norms = nullptr);

/// Numerically sampled sup norms of f'', f''', f'''' on a uniform grid
/// (central differences; interior points only).
DerivativeNorms sample_derivative_norms(const std::function<double(double)>& f,
                                        double a, double b, int grid = 10000);

} // namespace fif

#endif
