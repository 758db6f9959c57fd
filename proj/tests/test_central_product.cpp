#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"
#include "pgroup/catalog.hpp"
#include "pgroup/central_product.hpp"
#include "pgroup/errors.hpp"
#include "pgroup/isomorphism.hpp"
#include "pgroup/rng.hpp"
#include "pgroup/structure.hpp"

using namespace pgroup;

namespace {

using Mat = std::vector<std::vector<std::int64_t>>;

// Solves x * H = v for upper triangular H; true when v lies in the row lattice of H.
bool in_lattice(const Mat& h, std::vector<std::int64_t> v) {
    for (std::size_t j = 0; j < h.size(); ++j) {
        if (v[j] % h[j][j] != 0) return false;
        const std::int64_t q = v[j] / h[j][j];
        for (std::size_t k = j; k < v.size(); ++k) v[k] -= q * h[j][k];
    }
    return true;
}

std::pair<GroupElement, GroupElement> derived_pair(const PcPresentation& h, const PcPresentation& k) {
    return {h.derived_element(), k.derived_element()};
}

}  // namespace

TEST(HermiteNormalForm, SmallLattice) {
    // rows 9e0, 3e1, e0 - e1 span {(a, b) : a = b mod 3, 9 | ...}; index 9
    const Mat h = hermite_normal_form({{9, 0}, {0, 3}, {1, -1}}, 2);
    EXPECT_EQ(h, (Mat{{1, 2}, {0, 3}}));
}

TEST(HermiteNormalForm, RandomLatticesAreNormalizedAndEqual) {
    CounterRng rng(1234);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng.below(5);
        Mat rows;
        std::int64_t det = 1;
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<std::int64_t> r(n, 0);
            r[i] = ipow(3, static_cast<unsigned>(rng.below(3)));
            det *= r[i];
            for (std::size_t j = i + 1; j < n; ++j) r[j] = static_cast<std::int64_t>(rng.below(7)) - 3;
            rows.push_back(r);
        }
        // extra relations that are integer combinations of the triangular ones
        Mat all = rows;
        for (int e = 0; e < 3; ++e) {
            std::vector<std::int64_t> r(n, 0);
            for (const auto& row : rows) {
                const std::int64_t c = static_cast<std::int64_t>(rng.below(5)) - 2;
                for (std::size_t j = 0; j < n; ++j) r[j] += c * row[j];
            }
            all.push_back(r);
        }
        const Mat h = hermite_normal_form(all, n);
        std::int64_t prod = 1;
        for (std::size_t j = 0; j < n; ++j) {
            ASSERT_GT(h[j][j], 0);
            prod *= h[j][j];
            for (std::size_t i = 0; i < j; ++i) {
                EXPECT_GE(h[i][j], 0);
                EXPECT_LT(h[i][j], h[j][j]);
            }
            for (std::size_t i = j + 1; i < n; ++i) EXPECT_EQ(h[i][j], 0);
        }
        EXPECT_EQ(prod, det);
        for (const auto& r : all) EXPECT_TRUE(in_lattice(h, r));
    }
}

TEST(CentralProduct, TrivialIdentificationIsDirectProduct) {
    const auto h = fixtures::heisenberg(3);
    const auto k = build_cyclic(3, 2);
    const auto cp = central_product(h, k, {});
    EXPECT_TRUE(cp.presentation.consistency_check());
    EXPECT_EQ(cp.presentation.order(), 27u * 9u);
    const Group g(cp.presentation);
    EXPECT_EQ(abelian_invariants(center(g)), (std::vector<int>{2, 1}));
}

TEST(CentralProduct, TwoHeisenbergGroupsOverC) {
    const auto h = build_mp111_family(3, 1, 1);
    const auto cp = central_product(h, h, {derived_pair(h, h)});
    const auto& pres = cp.presentation;
    ASSERT_TRUE(pres.consistency_check()) << pres.consistency_check().witness;
    EXPECT_EQ(pres.order(), 243u);
    const Group g(pres);
    EXPECT_EQ(center(g).order(), 3u);
    EXPECT_EQ(exponent(g), 3u);
    const auto f = symplectic_form(g);
    EXPECT_EQ(f.dimension(), 4u);
    EXPECT_EQ(rank_mod_p(f.matrix, 3), 4u);
    // K's generators were primed
    EXPECT_TRUE(pres.find("a'").has_value());
}

TEST(CentralProduct, FactorsEmbedAndCommute) {
    const auto h = build_mp(3, 2, 1);
    const auto k = build_mp111_family(3, 2, 1);
    const auto cp = central_product(h, k, {derived_pair(h, k)});
    ASSERT_TRUE(cp.presentation.consistency_check());
    const Group g(cp.presentation);
    const Group gh(h), gk(k);
    // embeddings are injective homomorphisms with commuting images
    std::set<GroupElement> imgs;
    for (std::size_t a = 0; a < gh.order(); ++a) {
        imgs.insert(cp.embed_h(gh.element(a)));
        for (std::size_t b = 0; b < gh.order(); b += 5)
            ASSERT_EQ(cp.embed_h(gh.element(gh.mul(a, b))),
                      cp.presentation.multiply(cp.embed_h(gh.element(a)), cp.embed_h(gh.element(b))));
        for (std::size_t b = 0; b < gk.order(); b += 3)
            ASSERT_TRUE(cp.presentation.commutes(cp.embed_h(gh.element(a)), cp.embed_k(gk.element(b))));
    }
    EXPECT_EQ(imgs.size(), gh.order());
    for (std::size_t a = 0; a < gk.order(); ++a)
        for (std::size_t b = 0; b < gk.order(); b += 7)
            ASSERT_EQ(cp.embed_k(gk.element(gk.mul(a, b))),
                      cp.presentation.multiply(cp.embed_k(gk.element(a)), cp.embed_k(gk.element(b))));
}

TEST(CentralProduct, OrderLaw) {
    const int p = 3;
    struct Case {
        PcPresentation h, k;
        bool share;
    };
    std::vector<Case> cases{
        {build_mp111_family(p, 1, 1), build_mp111_family(p, 1, 1), true},
        {build_mp(p, 2, 1), build_mp111_family(p, 1, 1), true},
        {build_mp(p, 2, 2), build_cyclic(p, 2), false},
        {build_mp111_family(p, 2, 1), build_cyclic(p, 3), false},
    };
    for (const auto& c : cases) {
        std::vector<std::pair<GroupElement, GroupElement>> ident;
        std::uint64_t ident_order = 1;
        if (c.share) {
            ident.push_back(derived_pair(c.h, c.k));
            ident_order = p;
        }
        const auto cp = central_product(c.h, c.k, ident);
        EXPECT_TRUE(cp.presentation.consistency_check());
        EXPECT_EQ(cp.presentation.order() * ident_order, c.h.order() * c.k.order());
    }
    // amalgamating c with the order-p subgroup of Z_27
    const auto h = build_mp111_family(p, 1, 1);
    const auto z = build_cyclic(p, 3);
    const auto cp = central_product(h, z, {{h.derived_element(), z.power(z.generator_element(0), 9)}});
    EXPECT_TRUE(cp.presentation.consistency_check());
    EXPECT_EQ(cp.presentation.order(), 27u * 27u / 3u);
    const Group g(cp.presentation);
    EXPECT_EQ(abelian_invariants(center(g)), (std::vector<int>{3}));
}

TEST(CentralProduct, RejectsBadIdentifications) {
    const auto h = build_mp111_family(3, 1, 1);
    const auto z = build_cyclic(3, 2);
    // c has order 3, the generator of Z_9 has order 9
    EXPECT_THROW(central_product(h, z, {{h.derived_element(), z.generator_element(0)}}), ConstraintError);
    // noncentral identification
    EXPECT_THROW(central_product(h, h, {{h.generator_element(0), h.generator_element(0)}}), ConstraintError);
    // both nonabelian but derived subgroups kept apart
    EXPECT_THROW(central_product(h, h, {}), OutOfClass);
}

TEST(CentralProduct, MetacyclicAmalgamationMatchesHeisenbergFactor) {
    const int p = 3;
    const auto g1 = build_mp(p, 2, 2);
    const auto lhs = central_product(g1, build_mp(p, 2, 1), {derived_pair(g1, build_mp(p, 2, 1))});
    const auto rhs =
        central_product(g1, build_mp111_family(p, 1, 1), {derived_pair(g1, build_mp111_family(p, 1, 1))});
    const Group a(lhs.presentation), b(rhs.presentation);
    EXPECT_EQ(a.order(), 729u);
    EXPECT_EQ(fingerprint(a), fingerprint(b));
    EXPECT_TRUE(is_isomorphic_bruteforce(a, b, 729));
}
