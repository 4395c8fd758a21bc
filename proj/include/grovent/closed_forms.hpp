#ifndef GROVENT_CLOSED_FORMS_HPP
#define GROVENT_CLOSED_FORMS_HPP

#include "grovent/marked_profile.hpp"

namespace grovent {

struct DickeSpec {
    int n = 1;
    /// number of excitations, 0 <= k <= n
    int k = 0;
};

/// Geometric entanglement of (|0..0> + |1..1>)/sqrt(2): always 1/2.
double ghz_entanglement(int n);

/// 1 - C(n,k) k^k (n-k)^(n-k) / n^n, with 0^0 = 1. Evaluated in log space.
double dicke_entanglement(const DickeSpec& spec);

/// 1 - ((n-1)/n)^(n-1); the k = 1 Dicke state.
double w_entanglement(int n);

/// Weight profiles of the named targets, for numeric cross-checks.
MarkedProfile ghz_profile(int n);
MarkedProfile dicke_profile(const DickeSpec& spec);
MarkedProfile w_profile(int n);

}  // namespace grovent

#endif
