#ifndef GROVENT_MARKED_PROFILE_HPP
#define GROVENT_MARKED_PROFILE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "grovent/grover_model.hpp"

namespace grovent {

int hamming_weight(Pattern p) noexcept;

/// Binomial coefficient as a double (exact while it fits in 53 bits).
double binomial(int n, int k);

/// Multiset of Hamming weights of the marked states, stored as a count per
/// weight 0..n. The symmetric overlap only depends on this.
class MarkedProfile {
public:
    static MarkedProfile from_patterns(int qubits, std::span<const Pattern> patterns);
    /// counts[w] = number of marked states with w ones; size must be qubits + 1.
    static MarkedProfile from_counts(int qubits, std::vector<std::uint64_t> counts);

    int qubits() const noexcept { return qubits_; }
    /// M, the total number of marked states.
    std::uint64_t size() const noexcept { return size_; }
    std::span<const std::uint64_t> counts() const noexcept { return counts_; }
    /// Expanded multiset, ascending.
    std::vector<int> weights() const;

    /// Every weight w replaced by n - w.
    MarkedProfile complemented() const;

    /// True when each weight class is either empty or complete, i.e. the
    /// marked set is invariant under qubit permutations.
    bool is_permutation_symmetric() const;

    friend bool operator==(const MarkedProfile&, const MarkedProfile&) = default;

private:
    MarkedProfile(int qubits, std::vector<std::uint64_t> counts);

    int qubits_ = 0;
    std::uint64_t size_ = 0;
    std::vector<std::uint64_t> counts_;
};

/// Marked set after a global bit flip (X on every qubit set in `flip`).
///
/// The uniform start state is invariant under such flips, so the geometric
/// entanglement of every Grover iterate is too. When some flip makes the
/// marked set permutation-symmetric, the shared-angle product ansatz is
/// exact on the flipped set; `ansatz_exact` records whether one was found.
struct CanonicalMarking {
    Pattern flip = 0;
    MarkedProfile profile;
    bool ansatz_exact = false;
};

CanonicalMarking canonical_marking(int qubits, std::span<const Pattern> patterns);
CanonicalMarking canonical_marking(const GroverInstance& instance);

}  // namespace grovent

#endif
