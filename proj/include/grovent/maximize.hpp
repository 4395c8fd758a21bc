#ifndef GROVENT_MAXIMIZE_HPP
#define GROVENT_MAXIMIZE_HPP

#include <cstddef>
#include <functional>
#include <numbers>

namespace grovent {

struct ValueAndSlope {
    double value = 0.0;
    double slope = 0.0;
};

struct SquaredMaximum {
    double phi = 0.0;
    /// f(phi); may be negative, the maximized quantity is its square.
    double value = 0.0;
};

/// Scan density used for n-qubit overlaps: max(1024, 64 n) intervals. The
/// narrowest feature of cos^(n-k) sin^k(phi/2) has width ~ 1/sqrt(n), so
/// this leaves many samples per lobe.
std::size_t scan_samples(int qubits);

/// Global maximizer of f(phi)^2 on [lo, hi].
///
/// Samples f on a uniform grid, brackets every sign change (+ to -) of
/// d(f^2)/dphi between neighbouring samples and refines each with TOMS 748
/// to `phi_tolerance`. Endpoints count as candidates when the slope points
/// outward. Returns the best candidate; ties go to the smallest phi.
SquaredMaximum maximize_squared(const std::function<ValueAndSlope(double)>& f, std::size_t samples,
                                double lo = 0.0, double hi = std::numbers::pi,
                                double phi_tolerance = 1e-13);

/// Maximizer over symmetric real product states (cos(phi/2)|0> + sin(phi/2)|1>)^n.
///
/// [0, pi] covers them when every amplitude has the same sign. With mixed
/// signs (e.g. an overshot Grover iterate, theta > pi/2) factors with a
/// negative |1> component can win, so [-pi, 0) is searched as well and used
/// only if it is strictly better. phi is then negative.
SquaredMaximum maximize_symmetric(const std::function<ValueAndSlope(double)>& f, std::size_t samples,
                                  bool mixed_signs, double phi_tolerance = 1e-13);

}  // namespace grovent

#endif
