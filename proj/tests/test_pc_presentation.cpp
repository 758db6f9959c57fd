#include <gtest/gtest.h>

#include <map>
#include <set>

#include "fixtures.hpp"
#include "pgroup/errors.hpp"
#include "pgroup/group.hpp"
#include "pgroup/rng.hpp"

using namespace pgroup;
using fixtures::elem;

namespace {

// Collection by adjacent swaps: letters are (generator, exponent) with every
// swap of g_a^x past g_b^y (a > b) emitting the central factor c^{x y f(a,b)}.
// Central letters are pulled to an accumulator immediately.
GroupElement swap_collect(const PcPresentation& g, Word word) {
    const std::size_t n = g.size();
    const int p = g.prime();
    Exponents central(n, 0);
    std::int64_t cexp = 0;
    Word nc;
    for (auto [i, e] : word) {
        if (g.generator(i).central)
            central[i] += e;
        else
            nc.emplace_back(i, e);
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t k = 0; k + 1 < nc.size(); ++k) {
            auto [a, x] = nc[k];
            auto [b, y] = nc[k + 1];
            if (a > b) {
                cexp += x * y * g.commutator_entry(a, b);
                std::swap(nc[k], nc[k + 1]);
                changed = true;
            } else if (a == b) {
                nc[k].second += y;
                nc.erase(nc.begin() + static_cast<std::ptrdiff_t>(k) + 1);
                changed = true;
                break;
            }
        }
    }
    Exponents v(n, 0);
    for (auto [i, e] : nc) v[i] += e;
    for (std::size_t i = 0; i < n; ++i) v[i] += central[i] + mod(cexp, p) * g.derived_vector()[i];
    return g.reduce(v);
}

Word to_word(const GroupElement& a) {
    Word w;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) w.emplace_back(i, a[i]);
    return w;
}

}  // namespace

TEST(PcPresentation, EmptyWordIsIdentity) {
    const auto g = fixtures::heisenberg(3);
    EXPECT_EQ(g.normalize({}), g.identity());
}

TEST(PcPresentation, SwappedGeneratorsPickUpInverseCommutator) {
    const auto g = fixtures::heisenberg(3);
    EXPECT_EQ(g.normalize({{1, 1}, {0, 1}}), elem({1, 1, 2}));
}

TEST(PcPresentation, MetacyclicConjugationRaisesToPowerFour) {
    const auto g = fixtures::metacyclic(3, 2, 1);
    const auto a = g.generator_element(0), b = g.generator_element(1);
    // b^{-1} a b = a^4
    EXPECT_EQ(g.multiply(g.multiply(g.inverse(b), a), b), g.power(a, 4));
    // hence b a = a^7 b, i.e. a * b * (a^3)^2 in normal form
    EXPECT_EQ(g.normalize({{1, 1}, {0, 1}}), elem({1, 1, 2}));
    EXPECT_EQ(g.order_log(a), 2);
    EXPECT_EQ(g.order_log(b), 1);
}

TEST(PcPresentation, CommutatorOfGeneratorsIsC) {
    const auto g = fixtures::heisenberg(3);
    EXPECT_EQ(g.commutator(g.generator_element(0), g.generator_element(1)), g.derived_element());
    EXPECT_EQ(g.format(g.derived_element()), "c");
}

TEST(PcPresentation, InverseAndExponentThree) {
    const Group g(fixtures::heisenberg(3));
    const auto& pres = g.presentation();
    for (const auto& x : g.elements()) {
        EXPECT_TRUE(pres.multiply(x, pres.inverse(x)).is_identity());
        EXPECT_TRUE(pres.multiply(pres.inverse(x), x).is_identity());
        EXPECT_TRUE(pres.power(x, 3).is_identity());
    }
    const auto xy = pres.multiply(pres.generator_element(0), pres.generator_element(1));
    EXPECT_TRUE(pres.power(xy, 3).is_identity());
    EXPECT_EQ(pres.power(xy, -1), pres.inverse(xy));
}

TEST(PcPresentation, AgreesWithUnitriangularMatrices) {
    for (int p : {3, 5}) {
        const Group g(fixtures::heisenberg(p));
        const fixtures::UniTri model{p};
        std::set<fixtures::UniTri::M> images;
        for (std::size_t a = 0; a < g.order(); ++a) {
            images.insert(model.image(g.element(a)));
            for (std::size_t b = 0; b < g.order(); ++b)
                ASSERT_EQ(model.image(g.element(g.mul(a, b))),
                          model.mul(model.image(g.element(a)), model.image(g.element(b))));
        }
        EXPECT_EQ(images.size(), g.order()) << "normal forms must be distinct group elements";
    }
}

TEST(PcPresentation, AgreesWithSemidirectModel) {
    for (auto [p, n, m] : {std::tuple{3, 2, 1}, std::tuple{3, 2, 2}, std::tuple{3, 3, 1}, std::tuple{5, 2, 1}}) {
        const Group g(fixtures::metacyclic(p, n, m));
        const fixtures::Semidirect model(p, n, m);
        ASSERT_EQ(g.order(), static_cast<std::size_t>(model.pn * model.pm));
        std::set<fixtures::Semidirect::M> images;
        for (std::size_t a = 0; a < g.order(); ++a) {
            images.insert(model.image(g.element(a)));
            for (std::size_t b = 0; b < g.order(); ++b)
                ASSERT_EQ(model.image(g.element(g.mul(a, b))),
                          model.mul(model.image(g.element(a)), model.image(g.element(b))))
                    << "p=" << p << " n=" << n << " m=" << m;
        }
        EXPECT_EQ(images.size(), g.order());
    }
}

TEST(PcPresentation, AgreesWithSwapCollectionOnRandomWords) {
    for (const auto& pres : {fixtures::two_pairs(3), fixtures::metacyclic(3, 2, 2), fixtures::heisenberg(5)}) {
        CounterRng rng(20240917);
        const Group g(pres);
        for (int trial = 0; trial < 1000; ++trial) {
            const auto& a = g.element(rng.below(g.order()));
            const auto& b = g.element(rng.below(g.order()));
            Word w = to_word(a);
            for (auto l : to_word(b)) w.push_back(l);
            ASSERT_EQ(pres.multiply(a, b), swap_collect(pres, w));
        }
        // Words with negative and oversized exponents
        for (int trial = 0; trial < 200; ++trial) {
            Word w;
            for (int k = 0; k < 6; ++k)
                w.emplace_back(rng.below(pres.size()), static_cast<std::int64_t>(rng.below(41)) - 20);
            ASSERT_EQ(pres.normalize(w), swap_collect(pres, w));
        }
    }
}

TEST(PcPresentation, PowerIsRepeatedMultiplication) {
    const auto pres = fixtures::two_pairs(3);
    const Group g(pres);
    CounterRng rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const auto& x = g.element(rng.below(g.order()));
        GroupElement acc = pres.identity();
        for (int k = 0; k <= 30; ++k) {
            ASSERT_EQ(pres.power(x, k), acc);
            acc = pres.multiply(acc, x);
        }
    }
}

TEST(PcPresentation, ConsistencyAcceptsStandardPresentations) {
    EXPECT_TRUE(fixtures::heisenberg(3).consistency_check());
    EXPECT_TRUE(fixtures::heisenberg(7).consistency_check());
    EXPECT_TRUE(fixtures::metacyclic(3, 3, 2).consistency_check());
    EXPECT_TRUE(fixtures::two_pairs(5).consistency_check());
}

TEST(PcPresentation, ConsistencyRejectsDerivedGeneratorOfOrderNine) {
    PcPresentation g(3, {{"x", 1, false}, {"y", 1, false}, {"c", 2, true}});
    g.set_commutator(0, 1, 1);
    g.set_derived({0, 0, 1});
    const auto report = g.consistency_check();
    EXPECT_FALSE(report.ok);
    EXPECT_NE(report.witness.find("order 9"), std::string::npos) << report.witness;
}

TEST(PcPresentation, ConsistencyRejectsBrokenTables) {
    {
        auto g = fixtures::heisenberg(3);
        g.set_commutator_entry(1, 0, 1);  // should be 2
        const auto r = g.consistency_check();
        EXPECT_FALSE(r.ok);
        EXPECT_NE(r.witness.find("antisymmetric"), std::string::npos);
    }
    {
        auto g = fixtures::heisenberg(3);
        g.set_power(2, {1, 0, 0});  // c^3 = x refers backwards to a noncentral generator
        EXPECT_FALSE(g.consistency_check().ok);
    }
    {
        auto g = fixtures::heisenberg(3);
        g.set_commutator(0, 2, 1);  // c flagged central but does not commute with x
        EXPECT_FALSE(g.consistency_check().ok);
    }
    {
        auto g = fixtures::heisenberg(4);
        EXPECT_FALSE(g.consistency_check().ok);
    }
}

TEST(PcPresentation, RejectsForeignElements) {
    const auto g = fixtures::heisenberg(3);
    EXPECT_THROW(g.multiply(elem({1, 0}), g.identity()), std::invalid_argument);
}

TEST(Group, EnumerationIndexRoundTrip) {
    const Group g(fixtures::two_pairs(3));
    EXPECT_EQ(g.order(), 729u);
    EXPECT_EQ(Group::identity(), g.index(g.presentation().identity()));
    for (std::size_t i = 0; i < g.order(); ++i) EXPECT_EQ(g.index(g.element(i)), i);
}

TEST(Group, BudgetIsEnforced) {
    EXPECT_THROW(Group(fixtures::two_pairs(3), 100), BudgetExceeded);
}

TEST(Subgroup, ClosureSatisfiesLagrange) {
    const Group g(fixtures::two_pairs(3));
    CounterRng rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<std::size_t> gens;
        const auto k = rng.below(3) + 1;
        for (std::uint64_t i = 0; i < k; ++i) gens.push_back(rng.below(g.order()));
        const auto s = Subgroup::generated(g, gens);
        EXPECT_EQ(g.order() % s.order(), 0u);
        EXPECT_TRUE(s.contains(Group::identity()));
        EXPECT_TRUE(is_subgroup_set(g, s.elements()));
        for (auto x : s.elements()) EXPECT_TRUE(s.contains(g.inv(x)));
    }
}
