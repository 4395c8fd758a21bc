#include "grovent/statevector.hpp"

#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace grovent {

namespace {

// Partial sums are formed per fixed-size block and combined in block order,
// so parallel reductions are bit-identical for any thread count. States
// that fit in one block reduce exactly like the serial loop.
constexpr std::size_t kReductionBlock = std::size_t{1} << 12;

template <typename Term>
double blocked_sum(std::size_t count, Term term)
{
    const std::size_t blocks = (count + kReductionBlock - 1) / kReductionBlock;
    std::vector<double> partial(blocks, 0.0);

#pragma omp parallel for schedule(static)
    for (std::size_t b = 0; b < blocks; ++b) {
        const std::size_t end = std::min(count, (b + 1) * kReductionBlock);
        double acc = 0.0;
        for (std::size_t i = b * kReductionBlock; i < end; ++i) acc += term(i);
        partial[b] = acc;
    }
    return std::accumulate(partial.begin(), partial.end(), 0.0);
}

void require_dense_qubits(int n, int max_qubits)
{
    if (n < 1 || n > max_qubits || n > kMaxQubits) {
        throw std::length_error("dense simulation supports 1.." + std::to_string(max_qubits) + " qubits, got " +
                                std::to_string(n));
    }
}

void check_patterns(const DenseState& state, std::span<const Pattern> marked)
{
    for (Pattern p : marked) {
        if (p >= state.size()) throw std::invalid_argument("marked pattern out of range for dense state");
    }
}

void flip_marked(DenseState& state, std::span<const Pattern> marked)
{
    auto amps = state.amplitudes();
    for (Pattern p : marked) amps[p] = -amps[p];
}

// table[w] = c^(n-w) s^w
std::vector<double> weight_table(int n, double c, double s)
{
    std::vector<double> cp(n + 1), sp(n + 1), table(n + 1);
    cp[0] = sp[0] = 1.0;
    for (int j = 1; j <= n; ++j) {
        cp[j] = cp[j - 1] * c;
        sp[j] = sp[j - 1] * s;
    }
    for (int w = 0; w <= n; ++w) table[w] = cp[n - w] * sp[w];
    return table;
}

}  // namespace

DenseState::DenseState(int qubits, std::vector<double> amplitudes)
    : qubits_(qubits), amplitudes_(std::move(amplitudes))
{
    if (qubits_ < 1 || qubits_ > kMaxQubits) throw std::invalid_argument("qubit count out of range");
    if (amplitudes_.size() != (std::size_t{1} << qubits_)) {
        throw std::invalid_argument("dense state needs exactly 2^n amplitudes");
    }
}

double DenseState::norm_squared() const
{
    return blocked_sum(size(), [this](std::size_t i) { return amplitudes_[i] * amplitudes_[i]; });
}

DenseState uniform_state(int n, int max_qubits)
{
    if (n < 2) throw std::length_error("uniform_state needs at least 2 qubits");
    require_dense_qubits(n, max_qubits);
    const std::size_t dim = std::size_t{1} << n;
    return DenseState(n, std::vector<double>(dim, 1.0 / std::sqrt(double(dim))));
}

DenseState uniform_over(int n, std::span<const Pattern> patterns, int max_qubits)
{
    require_dense_qubits(n, max_qubits);
    if (patterns.empty()) throw std::invalid_argument("uniform_over needs at least one pattern");
    std::vector<double> amps(std::size_t{1} << n, 0.0);
    const double value = 1.0 / std::sqrt(double(patterns.size()));
    for (Pattern p : patterns) {
        if (p >= amps.size()) throw std::invalid_argument("pattern out of range");
        if (amps[p] != 0.0) throw std::invalid_argument("patterns must be distinct");
        amps[p] = value;
    }
    return DenseState(n, std::move(amps));
}

DenseState from_subspace(const GroverInstance& instance, const SubspaceState& state, int max_qubits)
{
    require_dense_qubits(instance.qubits(), max_qubits);
    std::vector<double> amps(std::size_t{1} << instance.qubits(), state.amp_unmarked);
    for (Pattern p : instance.marked()) amps[p] = state.amp_marked;
    return DenseState(instance.qubits(), std::move(amps));
}

void apply_grover_iterate(DenseState& state, std::span<const Pattern> marked)
{
    check_patterns(state, marked);
    flip_marked(state, marked);

    auto amps = state.amplitudes();
    const std::size_t dim = amps.size();
    const double mean = blocked_sum(dim, [&](std::size_t i) { return amps[i]; }) / double(dim);
    const double twice_mean = 2.0 * mean;

#pragma omp parallel for schedule(static)
    for (std::size_t i = 0; i < dim; ++i) amps[i] = twice_mean - amps[i];
}

DenseState grover_iterate(DenseState state, std::span<const Pattern> marked)
{
    apply_grover_iterate(state, marked);
    return state;
}

DenseState run(int n, std::span<const Pattern> marked, int r, int max_qubits)
{
    if (r < 0) throw std::invalid_argument("iteration count must be >= 0");
    auto state = uniform_state(n, max_qubits);
    check_patterns(state, marked);
    for (int i = 0; i < r; ++i) apply_grover_iterate(state, marked);
    return state;
}

double dense_overlap(const DenseState& state, double phi)
{
    const auto table = weight_table(state.qubits(), std::cos(0.5 * phi), std::sin(0.5 * phi));
    const auto amps = state.amplitudes();
    return blocked_sum(amps.size(), [&](std::size_t i) { return amps[i] * table[std::popcount(i)]; });
}

ValueAndSlope dense_overlap_with_slope(const DenseState& state, double phi)
{
    const int n = state.qubits();
    const double c = std::cos(0.5 * phi);
    const double s = std::sin(0.5 * phi);
    const auto table = weight_table(n, c, s);

    // d/dphi c^(n-w) s^w = (w c^(n-w+1) s^(w-1) - (n-w) c^(n-w-1) s^(w+1)) / 2
    std::vector<double> slope(n + 1, 0.0);
    const auto shorter = weight_table(n - 1, c, s);  // c^(n-1-w) s^w
    for (int w = 0; w <= n; ++w) {
        double d = 0.0;
        if (w > 0) d += w * shorter[w - 1] * c;
        if (w < n) d -= (n - w) * shorter[w] * s;
        slope[w] = 0.5 * d;
    }

    const auto amps = state.amplitudes();
    const double value = blocked_sum(amps.size(), [&](std::size_t i) { return amps[i] * table[std::popcount(i)]; });
    const double deriv = blocked_sum(amps.size(), [&](std::size_t i) { return amps[i] * slope[std::popcount(i)]; });
    return {value, deriv};
}

double inner_product(const DenseState& lhs, const DenseState& rhs)
{
    if (lhs.size() != rhs.size()) throw std::invalid_argument("inner product of states with different sizes");
    const auto a = lhs.amplitudes();
    const auto b = rhs.amplitudes();
    return blocked_sum(a.size(), [&](std::size_t i) { return a[i] * b[i]; });
}

namespace serial {

void apply_grover_iterate(DenseState& state, std::span<const Pattern> marked)
{
    check_patterns(state, marked);
    flip_marked(state, marked);
    auto amps = state.amplitudes();
    double sum = 0.0;
    for (double a : amps) sum += a;
    const double twice_mean = 2.0 * sum / double(amps.size());
    for (double& a : amps) a = twice_mean - a;
}

double dense_overlap(const DenseState& state, double phi)
{
    const auto table = weight_table(state.qubits(), std::cos(0.5 * phi), std::sin(0.5 * phi));
    const auto amps = state.amplitudes();
    double sum = 0.0;
    for (std::size_t i = 0; i < amps.size(); ++i) sum += amps[i] * table[std::popcount(i)];
    return sum;
}

}  // namespace serial

}  // namespace grovent
