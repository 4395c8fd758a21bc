#ifndef GROVENT_GROVER_MODEL_HPP
#define GROVENT_GROVER_MODEL_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace grovent {

/// Basis-state bit pattern; bit j is the value of qubit j.
using Pattern = std::uint64_t;

inline constexpr int kMaxQubits = 62;

class InvalidInstance : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// How the per-iteration rotation angle is derived from M/N.
///
/// PaperStep uses asin(2 sqrt(M/N)), the small-M/N form of the rotation
/// used for the reference curves. ExactRotation uses the true Grover
/// rotation 2 asin(sqrt(M/N)) and reproduces the dense simulation.
enum class AngleConvention { PaperStep, ExactRotation };

std::string to_string(AngleConvention convention);
AngleConvention angle_convention_from_string(const std::string& name);

/// A search problem: n qubits, a set of marked basis states, and the angle
/// convention. Validated on construction; immutable afterwards.
class GroverInstance {
public:
    GroverInstance(int qubits, std::vector<Pattern> marked,
                   AngleConvention convention = AngleConvention::PaperStep);

    int qubits() const noexcept { return qubits_; }
    /// N = 2^n as a double (exact for n <= 62).
    double dimension() const noexcept;
    std::size_t marked_count() const noexcept { return marked_.size(); }
    /// Sorted ascending.
    std::span<const Pattern> marked() const noexcept { return marked_; }
    AngleConvention convention() const noexcept { return convention_; }

    GroverInstance with_convention(AngleConvention convention) const;

private:
    int qubits_;
    std::vector<Pattern> marked_;
    AngleConvention convention_;
};

/// Position of the state in the two-dimensional invariant subspace after r
/// Grover iterations.
struct SubspaceState {
    int r = 0;
    double theta = 0.0;
    /// Amplitude of every unmarked basis state, cos(theta) / sqrt(N - M).
    double amp_unmarked = 0.0;
    /// Amplitude of every marked basis state, sin(theta) / sqrt(M).
    double amp_marked = 0.0;
};

double step_angle(const GroverInstance& instance);

double theta(const GroverInstance& instance, int r);
/// theta at a real-valued iteration count; theta_at(instance, -0.5) == 0.
double theta_at(const GroverInstance& instance, double r);

/// Closest integer to (pi / step - 1) / 2, ties rounded away from zero.
int r_opt(const GroverInstance& instance);

SubspaceState subspace_state(const GroverInstance& instance, int r);

/// sin^2(theta_r): probability of measuring a marked state.
double success_probability(const GroverInstance& instance, int r);

/// (1 / 2A0) dA_r^2/dr with A_r^2 = sin^2(theta_r) and A0 = sqrt(M/N).
/// Clamped at zero past theta = pi/2.
double concurrence(const GroverInstance& instance, int r);
double concurrence_at(const GroverInstance& instance, double r);
double concurrence_at_angle(const GroverInstance& instance, double theta);

}  // namespace grovent

#endif
