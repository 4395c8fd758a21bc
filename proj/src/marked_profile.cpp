#include "grovent/marked_profile.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace grovent {

namespace {

std::uint64_t binomial_exact(int n, int k)
{
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    // c * (n-k+i) / i is exact; dividing out gcd(c, i) first keeps it in 64 bits
    std::uint64_t c = 1;
    for (int i = 1; i <= k; ++i) {
        const std::uint64_t g = std::gcd(c, std::uint64_t(i));
        c = (c / g) * ((n - k + i) / (i / g));
    }
    return c;
}

bool weight_closed(int qubits, std::span<const Pattern> patterns, Pattern flip)
{
    std::vector<std::uint64_t> counts(qubits + 1, 0);
    for (Pattern p : patterns) ++counts[hamming_weight(p ^ flip)];
    for (int w = 0; w <= qubits; ++w) {
        if (counts[w] != 0 && counts[w] != binomial_exact(qubits, w)) return false;
    }
    return true;
}

}  // namespace

int hamming_weight(Pattern p) noexcept
{
    return std::popcount(p);
}

double binomial(int n, int k)
{
    if (k < 0 || k > n) return 0.0;
    if (n <= kMaxQubits) return double(binomial_exact(n, k));
    return std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0));
}

MarkedProfile::MarkedProfile(int qubits, std::vector<std::uint64_t> counts)
    : qubits_(qubits), counts_(std::move(counts))
{
    for (auto c : counts_) size_ += c;
}

MarkedProfile MarkedProfile::from_patterns(int qubits, std::span<const Pattern> patterns)
{
    if (qubits < 1 || qubits > kMaxQubits) throw std::invalid_argument("qubit count out of range");
    std::vector<std::uint64_t> counts(qubits + 1, 0);
    for (Pattern p : patterns) {
        const int w = hamming_weight(p);
        if (w > qubits || (qubits < 64 && (p >> qubits) != 0)) {
            throw std::invalid_argument("pattern out of range for qubit count");
        }
        ++counts[w];
    }
    return MarkedProfile(qubits, std::move(counts));
}

MarkedProfile MarkedProfile::from_counts(int qubits, std::vector<std::uint64_t> counts)
{
    if (qubits < 1) throw std::invalid_argument("qubit count must be >= 1");
    if (counts.size() != static_cast<std::size_t>(qubits) + 1) {
        throw std::invalid_argument("profile needs one count per weight 0..n");
    }
    return MarkedProfile(qubits, std::move(counts));
}

std::vector<int> MarkedProfile::weights() const
{
    std::vector<int> out;
    out.reserve(size_);
    for (int w = 0; w <= qubits_; ++w) out.insert(out.end(), counts_[w], w);
    return out;
}

MarkedProfile MarkedProfile::complemented() const
{
    std::vector<std::uint64_t> c(counts_.rbegin(), counts_.rend());
    return MarkedProfile(qubits_, std::move(c));
}

bool MarkedProfile::is_permutation_symmetric() const
{
    for (int w = 0; w <= qubits_; ++w) {
        if (counts_[w] != 0 && counts_[w] != binomial_exact(qubits_, w)) return false;
    }
    return true;
}

CanonicalMarking canonical_marking(int qubits, std::span<const Pattern> patterns)
{
    auto make = [&](Pattern flip, bool exact) {
        std::vector<Pattern> flipped(patterns.begin(), patterns.end());
        for (auto& p : flipped) p ^= flip;
        return CanonicalMarking{flip, MarkedProfile::from_patterns(qubits, flipped), exact};
    };

    if (weight_closed(qubits, patterns, 0)) return make(0, true);

    // If some flip symmetrizes the set, every qubit then carries the same
    // fraction of ones, so the flip is the per-bit majority pattern (or its
    // complement, which is equally symmetric).
    Pattern majority = 0;
    for (int j = 0; j < qubits; ++j) {
        std::size_t ones = 0;
        for (Pattern p : patterns) ones += (p >> j) & 1u;
        if (2 * ones > patterns.size()) majority |= Pattern{1} << j;
    }
    if (weight_closed(qubits, patterns, majority)) return make(majority, true);

    // Balanced bit fractions carry no information; fall back to centring on
    // each marked pattern.
    constexpr std::size_t kMaxCandidates = 64;
    for (std::size_t i = 0; i < std::min(patterns.size(), kMaxCandidates); ++i) {
        if (weight_closed(qubits, patterns, patterns[i])) return make(patterns[i], true);
    }
    return make(0, false);
}

CanonicalMarking canonical_marking(const GroverInstance& instance)
{
    return canonical_marking(instance.qubits(), instance.marked());
}

}  // namespace grovent
