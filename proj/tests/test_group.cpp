#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "davlab/group.hpp"
#include "davlab/index2.hpp"

using namespace davlab;

TEST_CASE("construction validates the group axioms") {
    CHECK_THROWS(FiniteGroup(2, {0, 1, 1, 1}));        // not associative/inverse
    CHECK_THROWS(FiniteGroup(2, {1, 0, 0, 1}));        // 0 is not the identity
    CHECK_THROWS(FiniteGroup(2, {0, 1, 1}));           // wrong table size
    CHECK_THROWS(FiniteGroup(2, {0, 1, 1, 2}));        // entry out of range
    CHECK_NOTHROW(FiniteGroup(2, {0, 1, 1, 0}));
    CHECK_THROWS(FiniteGroup(0, {}));
}

TEST_CASE("identity and inverse laws on a constructed group") {
    auto p = Index2Params::make(0, 3, 2, PresentationType::A);  // S3
    FiniteGroup g = build_group(p);
    CHECK(g.order() == 6);
    CHECK_FALSE(g.is_abelian());
    for (int x = 0; x < g.order(); ++x) {
        CHECK(g.mul(g.identity(), x) == x);
        CHECK(g.mul(x, g.inverse(x)) == g.identity());
    }
    // a t = t a^r with r = 2: alpha=1, tau=3 -> expect t a^2 = 5
    CHECK(g.mul(1, 3) == 5);
}

TEST_CASE("element orders") {
    FiniteGroup c6 = cyclic_group(6);
    CHECK(c6.element_order(0) == 1);
    CHECK(c6.element_order(1) == 6);
    CHECK(c6.element_order(2) == 3);
    CHECK(c6.element_order(3) == 2);
    CHECK(c6.is_cyclic());

    // reflections in a type-A group have order 2 exactly when (r+1)x = 0 mod n
    auto p = Index2Params::make(2, 1, 3, PresentationType::A);  // D8
    FiniteGroup d8 = build_group(p);
    for (int x = 0; x < 4; ++x) {
        bool expect2 = (3 + 1) * x % 4 == 0;
        CHECK((d8.element_order(4 + x) == 2) == expect2);
    }
}

TEST_CASE("generated subgroups by closure") {
    auto d12 = build_group(Index2Params::make(1, 3, 5, PresentationType::A));
    auto h = d12.generated_subgroup(ElementSet::single(12, 1));  // <a>
    CHECK(h.order() == 6);
    CHECK(d12.is_subgroup(h.members));

    auto d8 = build_group(Index2Params::make(2, 1, 3, PresentationType::A));
    ElementSet gens(8);
    gens.insert(2);  // a^2
    gens.insert(4);  // t
    CHECK(d8.generated_subgroup(gens).order() == 4);
    CHECK(d12.generated_subgroup(ElementSet::single(12, 0)).order() == 1);
    CHECK_THROWS(d8.generated_subgroup(ElementSet(8)));
}

TEST_CASE("commutator subgroup and center") {
    FiniteGroup c6 = cyclic_group(6);
    CHECK(c6.commutator_subgroup().order() == 1);
    CHECK(c6.center().order() == 6);

    auto s3 = build_group(Index2Params::make(0, 3, 2, PresentationType::A));
    auto comm = s3.commutator_subgroup();
    CHECK(comm.order() == 3);
    CHECK(comm.contains(1));  // <a>

    auto q8 = build_group(Index2Params::make(2, 1, 3, PresentationType::B));
    CHECK(q8.commutator_subgroup().order() == 2);
    CHECK(q8.commutator_subgroup().contains(2));  // a^2
    CHECK(q8.center().order() == 2);
    CHECK(q8.center().contains(2));
}

TEST_CASE("centralizer matches the defining filter") {
    auto d8 = build_group(Index2Params::make(2, 1, 3, PresentationType::A));
    auto c = d8.centralizer(ElementSet::single(8, 4));  // centralizer of t
    CHECK(c.order() == 4);
    for (int e : {0, 2, 4, 6}) CHECK(c.contains(e));
    CHECK(d8.center().members == d8.centralizer(d8.all_elements()).members);
}

TEST_CASE("left stabilizer") {
    FiniteGroup c6 = cyclic_group(6);
    ElementSet a(6);
    for (int e : {0, 2, 4}) a.insert(e);
    auto h = c6.left_stabilizer(a);
    CHECK(h.members == a);  // {0,2,4} is its own stabilizer
    CHECK(c6.left_stabilizer(c6.all_elements()).order() == 6);
    CHECK(c6.left_stabilizer(ElementSet::single(6, 3)).order() == 1);
    // A is a union of H(A)-cosets: |A| divisible by |H(A)|
    CHECK(a.size() % h.order() == 0);
}

TEST_CASE("quotient groups") {
    FiniteGroup c6 = cyclic_group(6);
    ElementSet h(6);
    h.insert(0);
    h.insert(3);
    auto q = quotient_group(c6, {&c6, h});
    CHECK(q.group.order() == 3);
    CHECK(q.projection[0] == 0);
    CHECK(q.projection[3] == 0);

    auto q12 = build_group(Index2Params::make(1, 3, 5, PresentationType::B));
    auto comm = q12.commutator_subgroup();
    CHECK(comm.order() == 3);
    CHECK(quotient_group(q12, comm).group.order() == 4);

    // non-normal subgroup is rejected
    auto s3 = build_group(Index2Params::make(0, 3, 2, PresentationType::A));
    auto refl = s3.generated_subgroup(ElementSet::single(6, 3));
    CHECK(refl.order() == 2);
    CHECK_FALSE(s3.is_normal(refl));
    CHECK_THROWS(quotient_group(s3, refl));
}

TEST_CASE("quotient by the commutator subgroup is abelian") {
    for (const auto& p : enumerate_groups(16)) {
        FiniteGroup g = build_group(p);
        auto q = quotient_group(g, g.commutator_subgroup());
        CHECK(q.group.is_abelian());
        CHECK(g.is_normal(g.commutator_subgroup()));
    }
}

TEST_CASE("subgroup reindexing and the subgroup lattice") {
    auto q8 = build_group(Index2Params::make(2, 1, 3, PresentationType::B));
    auto subs = q8.all_subgroups();
    CHECK(subs.size() == 6);  // 1, Z, three C4, G
    for (const auto& h : subs) {
        CHECK(q8.is_subgroup(h.members));
        auto emb = subgroup_as_group(q8, h);
        CHECK(emb.group.order() == h.order());
        CHECK(emb.to_parent[0] == 0);
    }
    CHECK(subs.front().order() == 1);
    CHECK(subs.back().order() == 8);
}

TEST_CASE("labels round-trip") {
    auto s3 = build_group(Index2Params::make(0, 3, 2, PresentationType::A));
    CHECK(s3.label(0) == "1");
    CHECK(s3.label(1) == "a");
    CHECK(s3.label(3) == "t");
    CHECK(s3.element_by_label("t*a") == 4);
    CHECK_FALSE(s3.element_by_label("bogus").has_value());
}
