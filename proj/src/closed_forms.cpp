#include "grovent/closed_forms.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace grovent {

namespace {

void require_qubits(int n, int minimum)
{
    if (n < minimum || n > kMaxQubits) {
        throw std::invalid_argument("qubit count " + std::to_string(n) + " outside [" + std::to_string(minimum) +
                                    ", " + std::to_string(kMaxQubits) + "]");
    }
}

void validate(const DickeSpec& spec)
{
    require_qubits(spec.n, 1);
    if (spec.k < 0 || spec.k > spec.n) throw std::invalid_argument("Dicke excitation count must be in [0, n]");
}

// x log x with the 0 log 0 = 0 convention
double xlogx(double x)
{
    return x == 0.0 ? 0.0 : x * std::log(x);
}

}  // namespace

double ghz_entanglement(int n)
{
    require_qubits(n, 2);
    return 0.5;
}

double dicke_entanglement(const DickeSpec& spec)
{
    validate(spec);
    const double n = spec.n;
    const double k = spec.k;
    const double log_overlap2 = std::log(binomial(spec.n, spec.k)) + xlogx(k) + xlogx(n - k) - xlogx(n);
    return 1.0 - std::exp(log_overlap2);
}

double w_entanglement(int n)
{
    require_qubits(n, 2);
    return 1.0 - std::pow(double(n - 1) / n, n - 1);
}

MarkedProfile ghz_profile(int n)
{
    require_qubits(n, 2);
    std::vector<std::uint64_t> counts(n + 1, 0);
    counts.front() = counts.back() = 1;
    return MarkedProfile::from_counts(n, std::move(counts));
}

MarkedProfile dicke_profile(const DickeSpec& spec)
{
    validate(spec);
    std::vector<std::uint64_t> counts(spec.n + 1, 0);
    counts[spec.k] = static_cast<std::uint64_t>(binomial(spec.n, spec.k));
    return MarkedProfile::from_counts(spec.n, std::move(counts));
}

MarkedProfile w_profile(int n)
{
    require_qubits(n, 2);
    return dicke_profile({n, 1});
}

}  // namespace grovent
