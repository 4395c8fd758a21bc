#ifndef GROVENT_STATEVECTOR_HPP
#define GROVENT_STATEVECTOR_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "grovent/grover_model.hpp"
#include "grovent/maximize.hpp"

namespace grovent {

/// Default memory guard: 2^24 doubles = 128 MiB.
inline constexpr int kMaxDenseQubits = 24;

/// Full register state with real amplitudes. Index bit j is qubit j.
class DenseState {
public:
    DenseState(int qubits, std::vector<double> amplitudes);

    int qubits() const noexcept { return qubits_; }
    std::size_t size() const noexcept { return amplitudes_.size(); }
    std::span<const double> amplitudes() const noexcept { return amplitudes_; }
    std::span<double> amplitudes() noexcept { return amplitudes_; }
    double operator[](std::size_t i) const { return amplitudes_[i]; }

    double norm_squared() const;

private:
    int qubits_;
    std::vector<double> amplitudes_;
};

DenseState uniform_state(int n, int max_qubits = kMaxDenseQubits);

/// Equal-weight superposition of the given basis states (GHZ, W, Dicke, ...).
DenseState uniform_over(int n, std::span<const Pattern> patterns, int max_qubits = kMaxDenseQubits);

/// Dense form of the subspace state: marked amplitudes sin(theta)/sqrt(M),
/// unmarked cos(theta)/sqrt(N - M).
DenseState from_subspace(const GroverInstance& instance, const SubspaceState& state,
                         int max_qubits = kMaxDenseQubits);

/// Oracle sign flip on the marked states, then inversion about the mean.
/// OpenMP over amplitudes; the mean uses a fixed block decomposition so the
/// result does not depend on the thread count.
void apply_grover_iterate(DenseState& state, std::span<const Pattern> marked);
DenseState grover_iterate(DenseState state, std::span<const Pattern> marked);

/// r Grover iterates applied to the uniform state.
DenseState run(int n, std::span<const Pattern> marked, int r, int max_qubits = kMaxDenseQubits);

/// sum_i a_i cos^(n-w(i))(phi/2) sin^(w(i))(phi/2): overlap with the
/// symmetric real product state.
double dense_overlap(const DenseState& state, double phi);
ValueAndSlope dense_overlap_with_slope(const DenseState& state, double phi);

double inner_product(const DenseState& lhs, const DenseState& rhs);

/// Single-threaded reference kernels. Same arithmetic, plain left-to-right
/// summation.
namespace serial {

void apply_grover_iterate(DenseState& state, std::span<const Pattern> marked);
double dense_overlap(const DenseState& state, double phi);

}  // namespace serial

}  // namespace grovent

#endif
