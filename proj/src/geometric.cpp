#include "grovent/geometric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace grovent {

namespace {

struct SymmetricSums {
    double s1 = 0.0;
    double ds1 = 0.0;
    double s2 = 0.0;
    double ds2 = 0.0;
};

// s1 = (c + s)^n and s2 = sum_w count[w] c^(n-w) s^w with c = cos(phi/2),
// s = sin(phi/2), plus their phi-derivatives.
SymmetricSums symmetric_sums(double phi, const MarkedProfile& profile)
{
    const int n = profile.qubits();
    const double c = std::cos(0.5 * phi);
    const double s = std::sin(0.5 * phi);

    std::vector<double> cp(n + 1), sp(n + 1);
    cp[0] = sp[0] = 1.0;
    for (int j = 1; j <= n; ++j) {
        cp[j] = cp[j - 1] * c;
        sp[j] = sp[j - 1] * s;
    }

    SymmetricSums out;
    const double cs = c + s;
    out.s1 = std::pow(cs, n);
    out.ds1 = 0.5 * n * std::pow(cs, n - 1) * (c - s);

    const auto counts = profile.counts();
    for (int w = 0; w <= n; ++w) {
        if (counts[w] == 0) continue;
        const double m = double(counts[w]);
        out.s2 += m * cp[n - w] * sp[w];
        double d = 0.0;
        if (w > 0) d += w * cp[n - w] * c * sp[w - 1];
        if (w < n) d -= (n - w) * cp[n - w - 1] * sp[w] * s;
        out.ds2 += 0.5 * m * d;
    }
    return out;
}

double phi_tolerance(double tol)
{
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    return std::min(1e-12, tol);
}

}  // namespace

OverlapCoefficients OverlapCoefficients::from_state(const SubspaceState& state, const MarkedProfile& profile)
{
    return {state.amp_unmarked, state.amp_marked - state.amp_unmarked, profile};
}

OverlapCoefficients OverlapCoefficients::target_state(const MarkedProfile& profile)
{
    return {0.0, 1.0 / std::sqrt(double(profile.size())), profile};
}

OverlapCoefficients coefficients(const GroverInstance& instance, int r)
{
    return OverlapCoefficients::from_state(subspace_state(instance, r), canonical_marking(instance).profile);
}

double overlap(double phi, const OverlapCoefficients& coeffs)
{
    const auto sums = symmetric_sums(phi, coeffs.profile);
    return coeffs.a * sums.s1 + coeffs.b * sums.s2;
}

ValueAndSlope overlap_with_slope(double phi, const OverlapCoefficients& coeffs)
{
    const auto sums = symmetric_sums(phi, coeffs.profile);
    return {coeffs.a * sums.s1 + coeffs.b * sums.s2, coeffs.a * sums.ds1 + coeffs.b * sums.ds2};
}

OverlapMaximum max_overlap(const OverlapCoefficients& coeffs, double tol)
{
    // unmarked amplitude a, marked amplitude a + b
    const bool mixed = coeffs.a * (coeffs.a + coeffs.b) < 0.0;
    const auto best = maximize_symmetric([&](double phi) { return overlap_with_slope(phi, coeffs); },
                                         scan_samples(coeffs.profile.qubits()), mixed, phi_tolerance(tol));
    return {best.phi, std::abs(best.value)};
}

double entanglement_bound(const OverlapCoefficients& coeffs, double phi)
{
    const auto sums = symmetric_sums(phi, coeffs.profile);
    const double m = double(coeffs.profile.size());
    const double n_total = std::ldexp(1.0, coeffs.profile.qubits());
    const double diff = sums.s1 - sums.s2;
    return 1.0 - diff * diff / (n_total - m) - sums.s2 * sums.s2 / m;
}

EntanglementRecord entanglement_at(const GroverInstance& instance, int r, double tol)
{
    const auto coeffs = coefficients(instance, r);
    const auto best = max_overlap(coeffs, tol);
    EntanglementRecord rec;
    rec.r = r;
    rec.phi_star = best.phi_star;
    rec.overlap_max = best.overlap_max;
    rec.E = std::max(0.0, 1.0 - best.overlap_max * best.overlap_max);
    rec.bound = entanglement_bound(coeffs, best.phi_star);
    return rec;
}

namespace {

OverlapCoefficients coefficients_at_theta(const GroverInstance& instance, double theta)
{
    const double m = double(instance.marked_count());
    SubspaceState state;
    state.theta = theta;
    state.amp_unmarked = std::cos(theta) / std::sqrt(instance.dimension() - m);
    state.amp_marked = std::sin(theta) / std::sqrt(m);
    return OverlapCoefficients::from_state(state, canonical_marking(instance).profile);
}

}  // namespace

OverlapMaximum max_overlap_at_theta(const GroverInstance& instance, double theta, double tol)
{
    return max_overlap(coefficients_at_theta(instance, theta), tol);
}

EntanglementCurve entanglement_curve(const GroverInstance& instance, double tol)
{
    const int last = r_opt(instance);
    EntanglementCurve curve{instance, std::vector<EntanglementRecord>(last + 1), std::vector<double>(last + 1),
                            canonical_marking(instance).ansatz_exact};

#pragma omp parallel for schedule(dynamic)
    for (int r = 0; r <= last; ++r) {
        curve.records[r] = entanglement_at(instance, r, tol);
        curve.concurrence[r] = concurrence(instance, r);
    }
    return curve;
}

AnalyticQuantities analytic_quantities(const GroverInstance& instance, const EntanglementRecord& record)
{
    const auto profile = canonical_marking(instance).profile;
    const auto sums = symmetric_sums(record.phi_star, profile);
    const double m = double(instance.marked_count());
    AnalyticQuantities q;
    q.phi = record.phi_star;
    q.s1 = sums.s1;
    q.s2 = sums.s2;
    q.k1 = (sums.s1 - sums.s2) / std::sqrt(instance.dimension() - m);
    q.k2 = sums.s2 / std::sqrt(m);
    q.lambda = std::sqrt(std::max(0.0, 1.0 - record.E));
    return q;
}

IterationRoots iteration_roots(const AnalyticQuantities& q, const GroverInstance& instance)
{
    const double rho2 = q.k1 * q.k1 + q.k2 * q.k2;
    const double lambda2 = q.lambda * q.lambda;
    if (rho2 < lambda2 * (1.0 - 1e-12)) {
        throw std::domain_error("k1^2 + k2^2 < lambda^2: entanglement below the attainable minimum at this phi");
    }
    // k1 cos(t) + k2 sin(t) = rho cos(t - alpha)
    const double rho = std::sqrt(rho2);
    const double alpha = std::atan2(q.k2, q.k1);
    const double beta = std::acos(std::clamp(q.lambda / rho, -1.0, 1.0));
    const double step = step_angle(instance);
    return {(alpha - beta) / step - 0.5, (alpha + beta) / step - 0.5};
}

double iterations_for_entanglement(const AnalyticQuantities& q, const GroverInstance& instance)
{
    const auto roots = iteration_roots(q, instance);
    if (roots.plus == roots.minus) return roots.plus;

    // Both roots reproduce lambda at q.phi; only at the true angle is q.phi
    // also the maximizing product angle. Near saturation the two roots almost
    // coincide and the maximum barely moves, so stationarity at an interior
    // q.phi is scored as well; it separates the roots to first order.
    const bool interior = std::abs(q.phi) > 1e-9 && std::abs(q.phi) < std::numbers::pi - 1e-9;
    auto mismatch = [&](double r) {
        const auto coeffs = coefficients_at_theta(instance, theta_at(instance, r));
        double score = std::abs(max_overlap(coeffs).overlap_max - q.lambda);
        if (interior) score += std::abs(overlap_with_slope(q.phi, coeffs).slope);
        return score;
    };

    // Past theta = pi/2 the signed overlap can be -lambda, which adds the two
    // roots of rho cos(theta - alpha) = -lambda. Complement-symmetric
    // profiles (GHZ-like) can also match equally well on mirrored roots.
    // Iteration counts are nonnegative and theta stays below pi, which
    // settles those ties.
    const double step = step_angle(instance);
    const double shift = std::numbers::pi / step;
    const double alt_mid = (roots.plus + roots.minus) / 2;  // alpha, in iteration units
    const double half = (roots.minus - roots.plus) / 2;     // beta
    const double candidates[] = {roots.plus, roots.minus, alt_mid - (shift - half), alt_mid + (shift - half)};

    double best = roots.plus;
    double best_score = std::numeric_limits<double>::infinity();
    for (double r : candidates) {
        // bring theta into (-pi, pi]
        double t = theta_at(instance, r);
        t = std::remainder(t, 2 * std::numbers::pi);
        r = t / step - 0.5;
        if (r <= -1e-6 || t >= std::numbers::pi) continue;
        const double score = mismatch(r);
        if (score < best_score - 1e-12) {
            best = r;
            best_score = score;
        }
    }
    return best;
}

PeakEntanglement e_max(const EntanglementCurve& curve)
{
    if (curve.records.empty()) throw std::invalid_argument("e_max of an empty curve");
    PeakEntanglement peak{curve.records.front().r, curve.records.front().E};
    for (const auto& rec : curve.records) {
        if (rec.E > peak.E_max) peak = {rec.r, rec.E};
    }
    return peak;
}

}  // namespace grovent
