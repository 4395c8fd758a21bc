#include "grovent/grover_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace grovent {

std::string to_string(AngleConvention convention)
{
    return convention == AngleConvention::PaperStep ? "paper" : "exact";
}

AngleConvention angle_convention_from_string(const std::string& name)
{
    if (name == "paper") return AngleConvention::PaperStep;
    if (name == "exact") return AngleConvention::ExactRotation;
    throw InvalidInstance("unknown angle convention '" + name + "' (expected paper|exact)");
}

GroverInstance::GroverInstance(int qubits, std::vector<Pattern> marked, AngleConvention convention)
    : qubits_(qubits), marked_(std::move(marked)), convention_(convention)
{
    if (qubits_ < 2 || qubits_ > kMaxQubits) {
        throw InvalidInstance("qubit count must be in [2, " + std::to_string(kMaxQubits) +
                              "], got " + std::to_string(qubits_));
    }
    if (marked_.empty()) {
        throw InvalidInstance("at least one marked state is required");
    }
    std::sort(marked_.begin(), marked_.end());
    if (std::adjacent_find(marked_.begin(), marked_.end()) != marked_.end()) {
        throw InvalidInstance("marked states must be distinct");
    }
    const Pattern limit = Pattern{1} << qubits_;
    if (marked_.back() >= limit) {
        throw InvalidInstance("marked pattern " + std::to_string(marked_.back()) +
                              " out of range for n=" + std::to_string(qubits_));
    }
    // M = N leaves no unmarked amplitude to normalize.
    if (marked_.size() >= limit) {
        throw InvalidInstance("marking every basis state (M = N) is not a search problem");
    }
    if (convention_ == AngleConvention::PaperStep && 4.0 * double(marked_.size()) > dimension()) {
        throw InvalidInstance("PaperStep convention requires M <= N/4 (asin argument 2*sqrt(M/N) <= 1); got M=" +
                              std::to_string(marked_.size()) + ", N=2^" + std::to_string(qubits_));
    }
}

double GroverInstance::dimension() const noexcept
{
    return std::ldexp(1.0, qubits_);
}

GroverInstance GroverInstance::with_convention(AngleConvention convention) const
{
    return GroverInstance(qubits_, marked_, convention);
}

double step_angle(const GroverInstance& instance)
{
    const double ratio = double(instance.marked_count()) / instance.dimension();
    if (instance.convention() == AngleConvention::PaperStep) {
        const double arg = 2.0 * std::sqrt(ratio);
        if (arg > 1.0) throw std::domain_error("asin argument 2*sqrt(M/N) exceeds 1");
        return std::asin(arg);
    }
    return 2.0 * std::asin(std::sqrt(ratio));
}

double theta_at(const GroverInstance& instance, double r)
{
    return (r + 0.5) * step_angle(instance);
}

double theta(const GroverInstance& instance, int r)
{
    if (r < 0) throw std::invalid_argument("iteration index must be >= 0");
    return theta_at(instance, double(r));
}

int r_opt(const GroverInstance& instance)
{
    const double x = (std::numbers::pi / step_angle(instance) - 1.0) / 2.0;
    return static_cast<int>(std::round(x));
}

SubspaceState subspace_state(const GroverInstance& instance, int r)
{
    SubspaceState s;
    s.r = r;
    s.theta = theta(instance, r);
    const double m = double(instance.marked_count());
    s.amp_unmarked = std::cos(s.theta) / std::sqrt(instance.dimension() - m);
    s.amp_marked = std::sin(s.theta) / std::sqrt(m);
    return s;
}

double success_probability(const GroverInstance& instance, int r)
{
    const double s = std::sin(theta(instance, r));
    return s * s;
}

double concurrence_at_angle(const GroverInstance& instance, double theta)
{
    // d/dr sin^2(theta_r) = sin(2 theta_r) * step
    const double a0 = std::sqrt(double(instance.marked_count()) / instance.dimension());
    const double c = std::sin(2.0 * theta) * step_angle(instance) / (2.0 * a0);
    return std::max(0.0, c);
}

double concurrence_at(const GroverInstance& instance, double r)
{
    return concurrence_at_angle(instance, theta_at(instance, r));
}

double concurrence(const GroverInstance& instance, int r)
{
    return concurrence_at_angle(instance, theta(instance, r));
}

}  // namespace grovent
