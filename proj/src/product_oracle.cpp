#include "grovent/product_oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <stdexcept>

namespace grovent {

namespace {

using cplx = std::complex<double>;
using Qubit = std::array<cplx, 2>;

Qubit from_angles(const QubitAngles& a)
{
    return {cplx(std::cos(0.5 * a.phi), 0.0), std::polar(std::sin(0.5 * a.phi), a.gamma)};
}

QubitAngles to_angles(const Qubit& q)
{
    QubitAngles a;
    a.phi = 2.0 * std::atan2(std::abs(q[1]), std::abs(q[0]));
    if (std::abs(q[0]) > 0.0 && std::abs(q[1]) > 0.0) {
        a.gamma = std::arg(q[1]) - std::arg(q[0]);
        a.gamma = std::fmod(a.gamma + 2.0 * std::numbers::pi, 2.0 * std::numbers::pi);
    }
    return a;
}

// table[x] = prod_{k in [first, first + count)} conj(q_k[bit k-first of x])
std::vector<cplx> factor_table(const std::vector<Qubit>& qubits, int first, int count)
{
    std::vector<cplx> table(std::size_t{1} << count);
    table[0] = 1.0;
    for (int k = 0; k < count; ++k) {
        const std::size_t half = std::size_t{1} << k;
        const cplx f0 = std::conj(qubits[first + k][0]);
        const cplx f1 = std::conj(qubits[first + k][1]);
        for (std::size_t x = 0; x < half; ++x) {
            table[x + half] = table[x] * f1;
            table[x] *= f0;
        }
    }
    return table;
}

// v[b] = sum over indices with bit j = b of psi_i * prod_{k != j} conj(q_k[i_k])
Qubit contract_except(const DenseState& state, const std::vector<Qubit>& qubits, int j)
{
    const int n = state.qubits();
    const auto low = factor_table(qubits, 0, j);
    const auto high = factor_table(qubits, j + 1, n - j - 1);
    const auto amps = state.amplitudes();

    Qubit v{0.0, 0.0};
    for (std::size_t y = 0; y < high.size(); ++y) {
        for (int b = 0; b < 2; ++b) {
            const std::size_t base = (y << (j + 1)) | (std::size_t(b) << j);
            cplx acc = 0.0;
            for (std::size_t x = 0; x < low.size(); ++x) acc += amps[base | x] * low[x];
            v[b] += acc * high[y];
        }
    }
    return v;
}

double unit_uniform(std::mt19937_64& gen)
{
    return double(gen() >> 11) * 0x1.0p-53;
}

ProductAnsatz random_ansatz(int n, std::uint64_t seed, int restart)
{
    std::seed_seq seq{std::uint32_t(seed), std::uint32_t(seed >> 32), std::uint32_t(restart)};
    std::mt19937_64 gen(seq);
    ProductAnsatz ansatz;
    ansatz.angles.resize(n);
    for (auto& a : ansatz.angles) {
        a.phi = std::numbers::pi * unit_uniform(gen);
        a.gamma = 2.0 * std::numbers::pi * unit_uniform(gen);
    }
    return ansatz;
}

}  // namespace

AlternatingRun alternating_maximize(const DenseState& state, const ProductAnsatz& start, double tol, int max_sweeps)
{
    const int n = state.qubits();
    if (static_cast<int>(start.angles.size()) != n) throw std::invalid_argument("ansatz size must equal qubit count");
    if (max_sweeps < 1) throw std::invalid_argument("max_sweeps must be >= 1");

    std::vector<Qubit> qubits;
    qubits.reserve(n);
    for (const auto& a : start.angles) qubits.push_back(from_angles(a));

    AlternatingRun run;
    double previous = -1.0;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double current = 0.0;
        for (int j = 0; j < n; ++j) {
            const Qubit v = contract_except(state, qubits, j);
            const double norm = std::hypot(std::abs(v[0]), std::abs(v[1]));
            if (norm > 0.0) qubits[j] = {v[0] / norm, v[1] / norm};
            current = norm;
        }
        run.history.push_back(current);
        if (current - previous < tol) {
            run.converged = true;
            break;
        }
        previous = current;
    }

    run.overlap = run.history.back();
    run.ansatz.angles.reserve(n);
    for (const auto& q : qubits) run.ansatz.angles.push_back(to_angles(q));
    return run;
}

OracleResult general_geometric_entanglement(const DenseState& state, const OracleOptions& options)
{
    if (options.restarts < 1) throw std::invalid_argument("restarts must be >= 1");
    const double norm2 = state.norm_squared();
    if (std::abs(norm2 - 1.0) > 1e-9) throw std::invalid_argument("state must be normalized");

    std::vector<AlternatingRun> runs(options.restarts);
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < options.restarts; ++i) {
        runs[i] = alternating_maximize(state, random_ansatz(state.qubits(), options.seed, i), options.tol,
                                       options.max_sweeps);
    }

    int best = 0;
    for (int i = 1; i < options.restarts; ++i) {
        if (runs[i].overlap > runs[best].overlap) best = i;
    }
    OracleResult result;
    result.overlap = std::min(1.0, runs[best].overlap);
    result.E = std::max(0.0, 1.0 - result.overlap * result.overlap);
    result.ansatz = runs[best].ansatz;
    result.converged = runs[best].converged;
    result.sweeps = static_cast<int>(runs[best].history.size());
    result.best_restart = best;
    return result;
}

double symmetric_entanglement(const DenseState& state, double tol)
{
    const auto amps = state.amplitudes();
    const bool mixed = std::any_of(amps.begin(), amps.end(), [](double x) { return x < 0.0; }) &&
                       std::any_of(amps.begin(), amps.end(), [](double x) { return x > 0.0; });
    const auto best = maximize_symmetric([&](double phi) { return dense_overlap_with_slope(state, phi); },
                                         scan_samples(state.qubits()), mixed, std::min(1e-12, tol));
    return std::max(0.0, 1.0 - best.value * best.value);
}

double symmetric_restriction_gap(const DenseState& state, const OracleOptions& options)
{
    return general_geometric_entanglement(state, options).E - symmetric_entanglement(state, options.tol);
}

}  // namespace grovent
