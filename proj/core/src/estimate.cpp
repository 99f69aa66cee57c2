#include "fif/estimate.hpp"

#include <cstddef>
#include <stdexcept>

namespace fif {

std::vector<double> arithmetic_mean_derivatives(const std::vector<double>& x,
                                                const std::vector<double>& y) {
    const std::size_t n = x.size();
    if (n < 3)
        throw std::invalid_argument("arithmetic_mean_derivatives: need N >= 3");
    if (y.size() != n)
        throw std::invalid_argument("arithmetic_mean_derivatives: x/y length mismatch");
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (!(x[i] < x[i + 1]))
            throw std::invalid_argument("arithmetic_mean_derivatives: knots must be strictly increasing");

    std::vector<double> h(n - 1), delta(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        h[i] = x[i + 1] - x[i];
        delta[i] = (y[i + 1] - y[i]) / h[i];
    }

    std::vector<double> d(n);
    for (std::size_t i = 1; i + 1 < n; ++i)
        d[i] = (h[i] * delta[i - 1] + h[i - 1] * delta[i]) / (h[i - 1] + h[i]);

    const double delta31 = (y[2] - y[0]) / (x[2] - x[0]);
    d[0] = (1.0 + h[0] / h[1]) * delta[0] - (h[0] / h[1]) * delta31;

    const double deltann2 = (y[n - 1] - y[n - 3]) / (x[n - 1] - x[n - 3]);
    d[n - 1] = (1.0 + h[n - 2] / h[n - 3]) * delta[n - 2] -
               (h[n - 2] / h[n - 3]) * deltann2;
    return d;
}

} // namespace fif
