#ifndef GROVENT_GEOMETRIC_HPP
#define GROVENT_GEOMETRIC_HPP

#include <vector>

#include "grovent/grover_model.hpp"
#include "grovent/marked_profile.hpp"
#include "grovent/maximize.hpp"

namespace grovent {

inline constexpr double kDefaultTolerance = 1e-10;

/// Overlap of a Grover iterate with the symmetric product state
/// (cos(phi/2)|0> + sin(phi/2)|1>)^n is
///
///   a (cos(phi/2) + sin(phi/2))^n + b sum_i cos^(n-w_i)(phi/2) sin^(w_i)(phi/2)
///
/// with a = cos(theta)/sqrt(N-M) and b = sin(theta)/sqrt(M) - a.
struct OverlapCoefficients {
    double a = 0.0;
    double b = 0.0;
    MarkedProfile profile;

    static OverlapCoefficients from_state(const SubspaceState& state, const MarkedProfile& profile);
    /// Uniform superposition of the profile's states (theta = pi/2): a = 0, b = 1/sqrt(M).
    static OverlapCoefficients target_state(const MarkedProfile& profile);
};

/// Coefficients of the r-th iterate over the instance's canonical profile.
OverlapCoefficients coefficients(const GroverInstance& instance, int r);

double overlap(double phi, const OverlapCoefficients& coeffs);
ValueAndSlope overlap_with_slope(double phi, const OverlapCoefficients& coeffs);

struct OverlapMaximum {
    /// In [0, pi]; in [-pi, 0) only when the state has amplitudes of both signs.
    double phi_star = 0.0;
    /// |overlap(phi_star)|
    double overlap_max = 0.0;
};

OverlapMaximum max_overlap(const OverlapCoefficients& coeffs, double tol = kDefaultTolerance);

/// 1 - (s1 - s2)^2/(N - M) - s2^2/M evaluated at phi.
///
/// For fixed phi the overlap is k1 cos(theta) + k2 sin(theta), so by
/// Cauchy-Schwarz this never exceeds the entanglement at the same phi: it
/// is a lower bound on E, reached only when (cos, sin) is parallel to (k1, k2).
double entanglement_bound(const OverlapCoefficients& coeffs, double phi);

struct EntanglementRecord {
    int r = 0;
    double E = 0.0;
    double phi_star = 0.0;
    double overlap_max = 0.0;
    double bound = 0.0;
};

EntanglementRecord entanglement_at(const GroverInstance& instance, int r, double tol = kDefaultTolerance);

/// Maximum symmetric overlap of the subspace state at an arbitrary angle.
OverlapMaximum max_overlap_at_theta(const GroverInstance& instance, double theta, double tol = kDefaultTolerance);

struct EntanglementCurve {
    GroverInstance instance;
    /// r = 0 .. r_opt
    std::vector<EntanglementRecord> records;
    std::vector<double> concurrence;
    /// False when no bit flip makes the marked set permutation-symmetric; the
    /// symmetric ansatz then only bounds the true entanglement from above.
    bool ansatz_exact = true;
};

/// Evaluates r = 0..r_opt in parallel; records are ordered by r.
EntanglementCurve entanglement_curve(const GroverInstance& instance, double tol = kDefaultTolerance);

struct AnalyticQuantities {
    double phi = 0.0;
    double s1 = 0.0;
    double s2 = 0.0;
    double k1 = 0.0;
    double k2 = 0.0;
    double lambda = 0.0;
};

AnalyticQuantities analytic_quantities(const GroverInstance& instance, const EntanglementRecord& record);

/// Both roots of k1 cos(theta) + k2 sin(theta) = lambda, as real iteration counts.
struct IterationRoots {
    /// cos(theta) = (lambda k1 + k2 sqrt(k1^2 + k2^2 - lambda^2)) / (k1^2 + k2^2)
    double plus = 0.0;
    /// cos(theta) = (lambda k1 - k2 sqrt(...)) / (k1^2 + k2^2)
    double minus = 0.0;
};

IterationRoots iteration_roots(const AnalyticQuantities& q, const GroverInstance& instance);

/// Real-valued iteration count at which the iterate has entanglement
/// 1 - lambda^2 with optimal product angle q.phi. Of the two roots, returns
/// the one where q.phi really is the best product angle.
/// Throws std::domain_error when k1^2 + k2^2 < lambda^2.
double iterations_for_entanglement(const AnalyticQuantities& q, const GroverInstance& instance);

struct PeakEntanglement {
    int r_star = 0;
    double E_max = 0.0;
};

/// Ties resolve to the smallest r.
PeakEntanglement e_max(const EntanglementCurve& curve);

}  // namespace grovent

#endif
