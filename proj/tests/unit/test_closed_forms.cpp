#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include "grovent/closed_forms.hpp"
#include "grovent/geometric.hpp"
#include "grovent/statevector.hpp"

using namespace grovent;

namespace {

double numeric(const MarkedProfile& profile)
{
    const double ov = max_overlap(OverlapCoefficients::target_state(profile)).overlap_max;
    return 1.0 - ov * ov;
}

}  // namespace

TEST(ClosedForms, Ghz)
{
    for (int n = 2; n <= 30; ++n) {
        EXPECT_EQ(ghz_entanglement(n), 0.5);
        EXPECT_NEAR(numeric(ghz_profile(n)), 0.5, 1e-12) << n;
    }
    EXPECT_THROW(ghz_entanglement(1), std::invalid_argument);
}

TEST(ClosedForms, WFrozenValues)
{
    EXPECT_NEAR(w_entanglement(3), 5.0 / 9.0, 1e-15);
    EXPECT_NEAR(w_entanglement(12), 0.61600476943912316711, 1e-14);
    EXPECT_NEAR(w_entanglement(2), 0.5, 1e-15);
    // approaches 1 - 1/e from below
    double prev = 0.0;
    for (int n = 2; n <= 60; ++n) {
        const double e = w_entanglement(n);
        EXPECT_GT(e, prev);
        EXPECT_LT(e, 0.63212055882855767840);
        prev = e;
    }
    EXPECT_NEAR(w_entanglement(62), 0.63212055882855767840, 5e-3);
}

TEST(ClosedForms, DickeMatchesNumericMaximization)
{
    for (int n = 1; n <= 20; ++n) {
        for (int k = 0; k <= n; ++k) {
            const DickeSpec d{n, k};
            EXPECT_NEAR(dicke_entanglement(d), numeric(dicke_profile(d)), 1e-9) << n << ' ' << k;
        }
        EXPECT_EQ(dicke_entanglement({n, 0}), 0.0);
        EXPECT_EQ(dicke_entanglement({n, n}), 0.0);
    }
    EXPECT_NEAR(dicke_entanglement({12, 1}), w_entanglement(12), 1e-14);
}

TEST(ClosedForms, DickeSymmetricInExcitations)
{
    for (int n = 2; n <= 40; ++n) {
        for (int k = 0; k <= n; ++k) {
            EXPECT_NEAR(dicke_entanglement({n, k}), dicke_entanglement({n, n - k}), 1e-14);
        }
    }
}

TEST(ClosedForms, DickeLargeNStaysFinite)
{
    const double e = dicke_entanglement({62, 31});
    EXPECT_TRUE(std::isfinite(e));
    EXPECT_GT(e, 0.0);
    EXPECT_LT(e, 1.0);
}

TEST(ClosedForms, RejectsBadSpecs)
{
    EXPECT_THROW(dicke_entanglement({4, 5}), std::invalid_argument);
    EXPECT_THROW(dicke_entanglement({4, -1}), std::invalid_argument);
    EXPECT_THROW(dicke_entanglement({0, 0}), std::invalid_argument);
    EXPECT_THROW(w_entanglement(70), std::invalid_argument);
}

TEST(ClosedForms, DenseDickeOverlapAgrees)
{
    // independent of the weight-profile path: build the state explicitly
    const int n = 6;
    for (int k = 0; k <= n; ++k) {
        std::vector<Pattern> support;
        for (Pattern p = 0; p < (Pattern{1} << n); ++p) {
            if (std::popcount(p) == k) support.push_back(p);
        }
        const auto state = uniform_over(n, support);
        double best = 0.0;
        for (int i = 0; i <= 20000; ++i) best = std::max(best, std::abs(dense_overlap(state, std::numbers::pi * i / 20000)));
        EXPECT_NEAR(1.0 - best * best, dicke_entanglement({n, k}), 1e-7);
    }
}
