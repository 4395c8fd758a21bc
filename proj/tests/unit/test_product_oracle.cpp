#include <gtest/gtest.h>

#include <cmath>

#include "grovent/geometric.hpp"
#include "grovent/product_oracle.hpp"

using namespace grovent;

namespace {

DenseState basis(int n, Pattern p)
{
    const std::vector<Pattern> one{p};
    return uniform_over(n, one);
}

}  // namespace

TEST(ProductOracle, BasisStateIsSeparable)
{
    const auto r = general_geometric_entanglement(basis(5, 0b10110));
    EXPECT_NEAR(r.E, 0.0, 1e-12);
    EXPECT_TRUE(r.converged);
    EXPECT_NEAR(general_geometric_entanglement(uniform_state(6)).E, 0.0, 1e-12);
}

TEST(ProductOracle, GhzAndW)
{
    const std::vector<Pattern> ghz{0, 15};
    EXPECT_NEAR(general_geometric_entanglement(uniform_over(4, ghz)).E, 0.5, 1e-10);
    const std::vector<Pattern> w{1, 2, 4};
    EXPECT_NEAR(general_geometric_entanglement(uniform_over(3, w)).E, 5.0 / 9.0, 1e-10);
}

TEST(ProductOracle, FindsComplexFactorsTheSymmetricAnsatzMisses)
{
    // |0>|+> - like states with a relative phase still factor exactly
    const double h = 1 / std::sqrt(2.0);
    DenseState s(2, {h, 0.0, 0.0, -h});
    // (|00> - |11>)/sqrt2 is a GHZ state up to local phase
    EXPECT_NEAR(general_geometric_entanglement(s).E, 0.5, 1e-10);

    DenseState product(2, {0.5, -0.5, 0.5, -0.5});  // |+>|->
    EXPECT_NEAR(general_geometric_entanglement(product).E, 0.0, 1e-12);
    EXPECT_GT(symmetric_entanglement(product), 0.5);
}

TEST(ProductOracle, SweepHistoryIsMonotone)
{
    const std::vector<Pattern> marked{0, 63, 7};
    const auto state = run(6, marked, 2);
    ProductAnsatz start;
    for (int j = 0; j < 6; ++j) start.angles.push_back({0.3 + 0.4 * j, 0.9 * j});
    const auto r = alternating_maximize(state, start, 1e-14, 500);
    ASSERT_GE(r.history.size(), 2u);
    for (std::size_t i = 1; i < r.history.size(); ++i) EXPECT_GE(r.history[i], r.history[i - 1] - 1e-15);
    EXPECT_THROW(alternating_maximize(state, ProductAnsatz{}, 1e-12, 10), std::invalid_argument);
    EXPECT_THROW(alternating_maximize(state, start, 1e-12, 0), std::invalid_argument);
}

TEST(ProductOracle, DeterministicForFixedSeed)
{
    const std::vector<Pattern> marked{0, 63, 7};
    const auto state = run(6, marked, 2);
    const auto a = general_geometric_entanglement(state);
    const auto b = general_geometric_entanglement(state);
    EXPECT_EQ(a.E, b.E);
    EXPECT_EQ(a.best_restart, b.best_restart);
}

TEST(ProductOracle, RejectsBadInput)
{
    EXPECT_THROW(general_geometric_entanglement(DenseState(2, {1.0, 1.0, 0.0, 0.0})), std::invalid_argument);
    OracleOptions none;
    none.restarts = 0;
    EXPECT_THROW(general_geometric_entanglement(uniform_state(3), none), std::invalid_argument);
}

TEST(RestrictionGap, ZeroForSymmetricMarkedSets)
{
    for (int n : {4, 6, 8}) {
        for (std::vector<Pattern> marked : {std::vector<Pattern>{0}, std::vector<Pattern>{0, (Pattern{1} << n) - 1}}) {
            const GroverInstance g(n, marked, AngleConvention::ExactRotation);
            for (int r = 0; r <= r_opt(g); ++r) {
                const auto state = run(n, marked, r);
                EXPECT_NEAR(symmetric_restriction_gap(state), 0.0, 1e-6) << n << ' ' << r;
                EXPECT_NEAR(symmetric_entanglement(state), entanglement_at(g, r).E, 1e-10);
            }
        }
    }
}

TEST(RestrictionGap, NegativeForBalancedExtras)
{
    // {0000, 1111, 0011} has no symmetric relabelling: general product
    // states do strictly better than the shared-angle family.
    const std::vector<Pattern> marked{0, 15, 3};
    const auto state = run(4, marked, 1);
    const auto general = general_geometric_entanglement(state);
    const double sym = symmetric_entanglement(state);
    EXPECT_LT(general.E, sym - 0.05);
    EXPECT_GE(general.E, 0.0);
    EXPECT_LE(sym, 1.0);
}
