// Acceptance gate: one PASS/FAIL line per criterion, detail lines indented
// below. Exit status is nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "grovent/closed_forms.hpp"
#include "grovent/geometric.hpp"
#include "grovent/product_oracle.hpp"
#include "grovent/statevector.hpp"
#include "grovent/sweep.hpp"

using namespace grovent;

namespace {

using Clock = std::chrono::steady_clock;

struct Criterion {
    int id;
    std::string title;
    bool pass = true;
    std::vector<std::string> details;

    void check(bool ok, const char* fmt, auto... args)
    {
        char buf[512];
        std::snprintf(buf, sizeof buf, fmt, args...);
        details.push_back(std::string(ok ? "ok   " : "FAIL ") + buf);
        pass = pass && ok;
    }

    // context only; does not affect the verdict
    void note(const char* fmt, auto... args)
    {
        char buf[512];
        std::snprintf(buf, sizeof buf, fmt, args...);
        details.push_back(std::string("note ") + buf);
    }
};

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<Pattern> marked(MarkedKind kind, int n, int m = 0)
{
    return build_marked_set({kind, {}}, n, m);
}

// every instance evaluated below, for the r = 0 separability check
std::vector<GroverInstance> g_seen;

EntanglementCurve curve_of(const GroverInstance& g)
{
    g_seen.push_back(g);
    return entanglement_curve(g);
}

Criterion iteration_table()
{
    Criterion c{1, "iteration table, n = 10"};
    const auto t0 = Clock::now();
    const int ms[] = {2, 3, 5, 10};
    const int want_ropt[] = {17, 14, 11, 7};
    const int want_peak[] = {11, 10, 8, 7};
    for (int i = 0; i < 4; ++i) {
        const auto curve = curve_of(GroverInstance(10, marked(MarkedKind::PaperM, 10, ms[i])));
        const int ropt = r_opt(curve.instance);
        const int peak = e_max(curve).r_star;
        c.check(ropt == want_ropt[i] && peak == want_peak[i], "M=%d: r_opt=%d (want %d) peak=%d (want %d)", ms[i],
                ropt, want_ropt[i], peak, want_peak[i]);
    }
    const auto single = curve_of(GroverInstance(10, {0}));
    const int ropt = r_opt(single.instance);
    const int peak = e_max(single).r_star;
    c.check(std::abs(ropt - 24) <= 1 && std::abs(peak - 0.5 * ropt) <= 0.5,
            "M=1: r_opt=%d (24 +- 1) peak=%d (r_opt/2 = %.1f, either neighbour)", ropt, peak, 0.5 * ropt);
    const double s = seconds_since(t0);
    c.check(s < 10.0, "runtime %.2f s", s);
    return c;
}

Criterion single_peaks()
{
    Criterion c{2, "single-target peaks and monotone E_max"};
    struct Want {
        int n, ropt, r;
        double e;
    };
    for (const Want w : {Want{7, 8, 4, 0.37}, Want{8, 12, 6, 0.44}}) {
        const auto curve = curve_of(GroverInstance(w.n, {0}));
        const auto peak = e_max(curve);
        const int ropt = r_opt(curve.instance);
        c.check(ropt == w.ropt && peak.r_star == w.r && std::abs(peak.E_max - w.e) <= 0.01,
                "n=%d: r_opt=%d peak r=%d E_max=%.6f (want %d, %d, %.2f +- 0.01)", w.n, ropt, peak.r_star, peak.E_max,
                w.ropt, w.r, w.e);
    }
    double prev = -1.0;
    bool monotone = true;
    std::string values;
    for (int n = 4; n <= 12; ++n) {
        const double e = e_max(curve_of(GroverInstance(n, {0}))).E_max;
        monotone = monotone && e >= prev;
        prev = e;
        char buf[32];
        std::snprintf(buf, sizeof buf, " %.4f", e);
        values += buf;
    }
    c.check(monotone, "E_max for n=4..12 nondecreasing:%s", values.c_str());

    // peak over real-valued r, for comparison with the integer grid above
    values.clear();
    for (int n = 4; n <= 12; ++n) {
        const GroverInstance g(n, {0});
        auto e_at = [&](double r) {
            const double ov = max_overlap_at_theta(g, theta_at(g, r)).overlap_max;
            return 1.0 - ov * ov;
        };
        // golden section within one iteration of the integer peak
        const int r_star = e_max(entanglement_curve(g)).r_star;
        double lo = std::max(0, r_star - 1), hi = std::min(r_opt(g), r_star + 1);
        const double k = (std::sqrt(5.0) - 1) / 2;
        for (int it = 0; it < 60; ++it) {
            const double a = hi - k * (hi - lo), b = lo + k * (hi - lo);
            if (e_at(a) < e_at(b)) lo = a; else hi = b;
        }
        char buf[32];
        std::snprintf(buf, sizeof buf, " %.4f", e_at(0.5 * (lo + hi)));
        values += buf;
    }
    c.note("E_max over real-valued r:%s", values.c_str());
    return c;
}

Criterion ghz_convergence()
{
    Criterion c{3, "GHZ target"};
    for (int n = 7; n <= 10; ++n) {
        const auto curve = curve_of(GroverInstance(n, marked(MarkedKind::ZerosAndOnes, n)));
        const double final_e = curve.records.back().E;
        c.check(std::abs(final_e - 0.5) <= 0.02, "n=%d: E(r_opt=%d)=%.6f (0.5 +- 0.02)", n, r_opt(curve.instance),
                final_e);
        if (n == 7 || n == 10) {
            const double want = n == 7 ? 0.58 : 0.64;
            const double got = e_max(curve).E_max;
            c.check(std::abs(got - want) <= 0.01, "n=%d: E_max=%.6f (%.2f +- 0.01)", n, got, want);
        }
    }
    return c;
}

Criterion w_convergence()
{
    Criterion c{4, "W target"};
    const auto curve = curve_of(GroverInstance(12, marked(MarkedKind::WeightOne, 12)));
    const double closed = 1.0 - std::pow(11.0 / 12.0, 11);
    c.check(std::abs(curve.records.back().E - closed) <= 0.02, "n=12: E(r_opt=%d)=%.6f vs %.6f (+- 0.02)",
            r_opt(curve.instance), curve.records.back().E, closed);
    double worst = 0.0;
    for (int n = 2; n <= 12; ++n) {
        const double ov = max_overlap(OverlapCoefficients::target_state(w_profile(n))).overlap_max;
        worst = std::max(worst, std::abs(w_entanglement(n) - (1.0 - ov * ov)));
    }
    c.check(worst <= 1e-9, "closed form vs numeric, n=2..12: max |diff| = %.3g (<= 1e-9)", worst);
    return c;
}

Criterion dicke_closed_form()
{
    Criterion c{5, "Dicke closed form"};
    double worst = 0.0, boundary = 0.0;
    for (int n = 1; n <= 12; ++n) {
        for (int k = 0; k <= n; ++k) {
            const double ov = max_overlap(OverlapCoefficients::target_state(dicke_profile({n, k}))).overlap_max;
            const double closed = dicke_entanglement({n, k});
            worst = std::max(worst, std::abs(closed - (1.0 - ov * ov)));
            if (k == 0 || k == n) boundary = std::max(boundary, std::abs(closed));
        }
    }
    c.check(worst <= 1e-9, "n<=12, all k: max |closed - numeric| = %.3g (<= 1e-9)", worst);
    c.check(boundary == 0.0, "k in {0, n}: max |E| = %.3g (exactly 0)", boundary);
    return c;
}

Criterion inversion()
{
    Criterion c{6, "inversion round trip and closed-form bound"};
    struct Inst {
        int n, m;
    };
    double worst_slack = 1.0;
    int worst_r = -1, worst_n = 0, worst_m = 0;
    for (const Inst in : {Inst{7, 1}, Inst{8, 1}, Inst{10, 2}, Inst{10, 5}}) {
        const auto curve = curve_of(GroverInstance(in.n, marked(MarkedKind::PaperM, in.n, in.m)));
        double worst = 0.0;
        bool solved = true;
        for (const auto& rec : curve.records) {
            try {
                const double r = iterations_for_entanglement(analytic_quantities(curve.instance, rec), curve.instance);
                worst = std::max(worst, std::abs(r - rec.r));
            } catch (const std::domain_error&) {
                solved = false;
            }
            if (rec.bound - rec.E < worst_slack) {
                worst_slack = rec.bound - rec.E;
                worst_r = rec.r;
                worst_n = in.n;
                worst_m = in.m;
            }
        }
        c.check(solved && worst <= 1e-6, "(n=%d, M=%d): max |r_recovered - r| = %.3g over r=0..%d (<= 1e-6)", in.n,
                in.m, worst, r_opt(curve.instance));
    }
    c.check(worst_slack >= -1e-9, "bound - E >= -1e-9: worst %.6f at n=%d M=%d r=%d", worst_slack, worst_n, worst_m,
            worst_r);
    return c;
}

Criterion dense_equivalence()
{
    Criterion c{7, "dense simulation vs subspace model"};
    double amp = 0.0, ov = 0.0;
    int cases = 0;
    for (int n = 2; n <= 12; ++n) {
        for (const auto& set : {marked(MarkedKind::AllZeros, n), marked(MarkedKind::ZerosAndOnes, n),
                                marked(MarkedKind::WeightOne, n)}) {
            const GroverInstance g(n, set, AngleConvention::ExactRotation);
            g_seen.push_back(g);
            const auto profile = MarkedProfile::from_patterns(n, g.marked());
            auto state = uniform_state(n);
            for (int r = 0; r <= r_opt(g); ++r, apply_grover_iterate(state, set)) {
                const auto sub = subspace_state(g, r);
                const auto model = from_subspace(g, sub);
                for (std::size_t i = 0; i < state.size(); ++i) amp = std::max(amp, std::abs(state[i] - model[i]));
                const auto coeffs = OverlapCoefficients::from_state(sub, profile);
                for (int t = 0; t <= 16; ++t) {
                    const double phi = std::numbers::pi * t / 16;
                    ov = std::max(ov, std::abs(dense_overlap(state, phi) - overlap(phi, coeffs)));
                }
                ++cases;
            }
        }
    }
    c.check(amp <= 1e-12, "n=2..12, M in {1,2,n}, %d iterates: max amplitude error %.3g (<= 1e-12)", cases, amp);
    c.check(ov <= 1e-12, "symmetric overlap, 17 angles per iterate: max error %.3g (<= 1e-12)", ov);
    return c;
}

Criterion product_equivalence()
{
    Criterion c{8, "general product states vs symmetric ansatz, n <= 8"};
    const auto t0 = Clock::now();
    OracleOptions options;  // 16 restarts, fixed seed
    struct Family {
        const char* label;
        std::function<std::vector<Pattern>(int)> build;
    };
    std::vector<Family> families{
        {"all-zeros", [](int n) { return marked(MarkedKind::AllZeros, n); }},
        {"zeros-ones", [](int n) { return marked(MarkedKind::ZerosAndOnes, n); }},
        {"weight-one", [](int n) { return marked(MarkedKind::WeightOne, n); }},
    };
    for (int m : {3, 5, 10}) {
        families.push_back({m == 3 ? "paper-m M=3" : m == 5 ? "paper-m M=5" : "paper-m M=10",
                            [m](int n) { return marked(MarkedKind::PaperM, n, m); }});
    }
    for (const auto& fam : families) {
        double worst = 0.0;
        int where_n = 0, where_r = 0, instances = 0;
        for (int n = 2; n <= 8; ++n) {
            std::vector<Pattern> set;
            try {
                set = fam.build(n);
            } catch (const ConfigError&) {
                continue;
            }
            if (set.size() >= (std::size_t{1} << n)) continue;
            const GroverInstance g(n, set, AngleConvention::ExactRotation);
            g_seen.push_back(g);
            ++instances;
            auto state = uniform_state(n);
            for (int r = 0; r <= r_opt(g); ++r, apply_grover_iterate(state, set)) {
                const double diff = std::abs(general_geometric_entanglement(state, options).E - entanglement_at(g, r).E);
                if (diff > worst) {
                    worst = diff;
                    where_n = n;
                    where_r = r;
                }
            }
        }
        c.check(worst <= 1e-6, "%s (%d instances): max |E_general - E_symmetric| = %.3g at n=%d r=%d (<= 1e-6)",
                fam.label, instances, worst, where_n, where_r);
    }
    const double s = seconds_since(t0);
    c.check(s < 300.0, "runtime %.2f s (< 300 s)", s);
    return c;
}

Criterion concurrence_checks()
{
    Criterion c{9, "concurrence"};
    double at_ends = 0.0, fd_rel = 0.0;
    for (int n = 4; n <= 12; ++n) {
        for (auto conv : {AngleConvention::PaperStep, AngleConvention::ExactRotation}) {
            const GroverInstance g(n, {0}, conv);
            at_ends = std::max({at_ends, concurrence_at_angle(g, 0.0), concurrence_at_angle(g, std::numbers::pi / 2)});
            const double a0 = std::sqrt(1.0 / g.dimension());
            for (int r = 0; r < r_opt(g); ++r) {
                const double h = 1e-4;
                const double fd = (std::pow(std::sin(theta_at(g, r + h)), 2) - std::pow(std::sin(theta_at(g, r - h)), 2)) /
                                  (2 * h) / (2 * a0);
                fd_rel = std::max(fd_rel, std::abs(concurrence(g, r) - fd) / std::abs(fd));
            }
        }
    }
    c.check(at_ends <= 1e-9, "C at theta = 0 and theta = pi/2: max %.3g (<= 1e-9)", at_ends);
    c.check(fd_rel <= 1e-8, "analytic vs central difference, n=4..12: max relative error %.3g (<= 1e-8)", fd_rel);

    const auto curve = curve_of(GroverInstance(10, {0}));
    const auto c_peak = std::max_element(curve.concurrence.begin(), curve.concurrence.end()) - curve.concurrence.begin();
    const int e_peak = e_max(curve).r_star;
    c.check(std::abs(int(c_peak) - e_peak) <= 1, "n=10, M=1: concurrence peak r=%d, E peak r=%d (within 1)",
            int(c_peak), e_peak);
    return c;
}

Criterion initial_separability()
{
    Criterion c{10, "initial state separable"};
    double worst_paper = 0.0, worst_exact = 0.0;
    int paper_count = 0, exact_count = 0;
    for (const auto& g : g_seen) {
        const double e = entanglement_at(g, 0).E;
        if (g.convention() == AngleConvention::PaperStep) {
            worst_paper = std::max(worst_paper, e);
            ++paper_count;
        } else {
            worst_exact = std::max(worst_exact, e);
            ++exact_count;
        }
    }
    c.check(worst_exact <= 1e-9, "ExactRotation angle, %d instances: max E(0) = %.3g (<= 1e-9)", exact_count,
            worst_exact);
    c.check(worst_paper <= 1e-9, "PaperStep angle, %d instances: max E(0) = %.3g (<= 1e-9)", paper_count,
            worst_paper);
    return c;
}

}  // namespace

int main()
{
    const auto t0 = Clock::now();
    std::vector<std::function<Criterion()>> gates{
        iteration_table, single_peaks,        ghz_convergence,    w_convergence,      dicke_closed_form,
        inversion,       dense_equivalence,   product_equivalence, concurrence_checks, initial_separability,
    };
    int failed = 0;
    for (const auto& gate : gates) {
        const auto c = gate();
        std::printf("[%s] %2d %s\n", c.pass ? "PASS" : "FAIL", c.id, c.title.c_str());
        for (const auto& d : c.details) std::printf("         %s\n", d.c_str());
        std::fflush(stdout);
        failed += !c.pass;
    }
    std::printf("%d/%zu criteria passed (%.1f s)\n", int(gates.size()) - failed, gates.size(), seconds_since(t0));
    return failed == 0 ? 0 : 1;
}
