#include "grovent/maximize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include <boost/math/tools/toms748_solve.hpp>

namespace grovent {

std::size_t scan_samples(int qubits)
{
    return std::max<std::size_t>(1024, 64 * static_cast<std::size_t>(std::max(qubits, 0)));
}

SquaredMaximum maximize_squared(const std::function<ValueAndSlope(double)>& f, std::size_t samples,
                                double lo, double hi, double phi_tolerance)
{
    if (samples < 2) throw std::invalid_argument("maximize_squared needs at least two samples");
    if (!(hi > lo)) throw std::invalid_argument("maximize_squared needs lo < hi");

    const double h = (hi - lo) / double(samples);
    std::vector<double> grid(samples + 1), value(samples + 1), grad(samples + 1);
    for (std::size_t i = 0; i <= samples; ++i) {
        grid[i] = i == samples ? hi : lo + double(i) * h;
        const auto vs = f(grid[i]);
        value[i] = vs.value;
        grad[i] = 2.0 * vs.value * vs.slope;
    }

    SquaredMaximum best{grid[0], value[0]};
    auto consider = [&](double phi, double v) {
        if (v * v > best.value * best.value || (v * v == best.value * best.value && phi < best.phi)) {
            best = {phi, v};
        }
    };
    for (std::size_t i = 0; i <= samples; ++i) consider(grid[i], value[i]);

    auto g = [&](double phi) {
        const auto vs = f(phi);
        return 2.0 * vs.value * vs.slope;
    };
    auto done = [phi_tolerance](double a, double b) { return std::abs(b - a) <= phi_tolerance; };

    for (std::size_t i = 0; i < samples; ++i) {
        if (!(grad[i] > 0.0 && grad[i + 1] <= 0.0)) continue;
        if (grad[i + 1] == 0.0) {
            consider(grid[i + 1], value[i + 1]);
            continue;
        }
        std::uintmax_t max_iter = 200;
        const auto [a, b] = boost::math::tools::toms748_solve(g, grid[i], grid[i + 1], grad[i], grad[i + 1],
                                                              done, max_iter);
        const double phi = 0.5 * (a + b);
        consider(phi, f(phi).value);
    }
    return best;
}

SquaredMaximum maximize_symmetric(const std::function<ValueAndSlope(double)>& f, std::size_t samples,
                                  bool mixed_signs, double phi_tolerance)
{
    const auto best = maximize_squared(f, samples, 0.0, std::numbers::pi, phi_tolerance);
    if (!mixed_signs) return best;
    const auto other = maximize_squared(f, samples, -std::numbers::pi, 0.0, phi_tolerance);
    return std::abs(other.value) > std::abs(best.value) * (1.0 + 1e-14) ? other : best;
}

}  // namespace grovent
