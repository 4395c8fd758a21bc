#ifndef GROVENT_PRODUCT_ORACLE_HPP
#define GROVENT_PRODUCT_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "grovent/statevector.hpp"

namespace grovent {

/// Bloch angles of one qubit: cos(phi/2)|0> + e^{i gamma} sin(phi/2)|1>.
struct QubitAngles {
    double phi = 0.0;    // [0, pi]
    double gamma = 0.0;  // [0, 2 pi)
};

/// Independent angles per qubit; no permutation symmetry or phase
/// restriction is assumed.
struct ProductAnsatz {
    std::vector<QubitAngles> angles;
};

struct OracleOptions {
    int restarts = 16;
    /// Stop a restart once a full sweep improves the overlap by less than this.
    double tol = 1e-13;
    int max_sweeps = 10000;
    std::uint64_t seed = 20240611;
};

struct OracleResult {
    double E = 1.0;
    double overlap = 0.0;
    ProductAnsatz ansatz;
    /// False if the winning restart hit max_sweeps before meeting tol.
    bool converged = false;
    int sweeps = 0;
    int best_restart = 0;
};

/// Single alternating-optimization run from a given start. `history` holds
/// the overlap after every full sweep.
struct AlternatingRun {
    double overlap = 0.0;
    ProductAnsatz ansatz;
    std::vector<double> history;
    bool converged = false;
};

AlternatingRun alternating_maximize(const DenseState& state, const ProductAnsatz& start, double tol,
                                    int max_sweeps);

/// 1 - max over product states of |<zeta|psi>|^2, by alternating exact
/// single-qubit updates from `restarts` random starts. Restarts run in
/// parallel; the winner is the largest overlap, ties to the lowest index.
OracleResult general_geometric_entanglement(const DenseState& state, const OracleOptions& options = {});

/// Same measure restricted to identical real qubit factors (shared phi, gamma = 0).
double symmetric_entanglement(const DenseState& state, double tol = 1e-12);

/// general - symmetric. Never meaningfully positive; zero when the
/// symmetric ansatz is exact for this state.
double symmetric_restriction_gap(const DenseState& state, const OracleOptions& options = {});

}  // namespace grovent

#endif
