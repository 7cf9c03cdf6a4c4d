#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "davlab/index2.hpp"

using namespace davlab;

TEST_CASE("parameter validation") {
    CHECK_THROWS(Index2Params::make(0, 4, 1, PresentationType::A));   // m even
    CHECK_THROWS(Index2Params::make(0, 3, 4, PresentationType::A));   // r > n
    CHECK_THROWS(Index2Params::make(0, 5, 2, PresentationType::A));   // r^2 != 1 mod n
    CHECK_THROWS(Index2Params::make(0, 3, 2, PresentationType::B));   // B needs s >= 1
    CHECK_THROWS(Index2Params::make(2, 1, 3, PresentationType::C));   // C needs r = 1 mod 2^s
    CHECK_THROWS(Index2Params::make(0, 33, 1, PresentationType::A));  // order cap
    CHECK_NOTHROW(Index2Params::make(2, 1, 3, PresentationType::B));  // Q8
}

TEST_CASE("derived invariants") {
    auto q12 = Index2Params::make(1, 3, 5, PresentationType::B);
    CHECK(q12.n == 6);
    CHECK(q12.n_minus == 2);
    CHECK(q12.n_plus == 3);
    CHECK(q12.order() == 12);
    CHECK(q12.name() == "Q12");
    CHECK(q12.sylow_kind() == TwoGroupKind::Cyclic);  // Sylow 2-subgroup is C4

    auto sd16 = Index2Params::make(3, 1, 3, PresentationType::A);
    CHECK(sd16.n_minus == 2);
    CHECK(sd16.n_plus == 4);
    CHECK(sd16.rho == 3);
    CHECK(sd16.sylow_kind() == TwoGroupKind::SemiDihedral);
    CHECK(sd16.name() == "SD16");

    auto m16 = Index2Params::make(3, 1, 5, PresentationType::A);
    CHECK(m16.sylow_kind() == TwoGroupKind::OrdinaryMetacyclic);
    CHECK(m16.n_plus == 2);
    CHECK(m16.name() == "M16");
}

TEST_CASE("multiplication matches the defining relations") {
    // S3: order 6 dihedral
    auto s3 = build_group(Index2Params::make(0, 3, 2, PresentationType::A));
    CHECK_FALSE(s3.is_abelian());
    CHECK(s3.element_order(3) == 2);  // t^2 = 1

    // Q8: t^2 = a^2
    auto q8 = build_group(Index2Params::make(2, 1, 3, PresentationType::B));
    CHECK(q8.mul(4, 4) == 2);
    CHECK(q8.element_order(4) == 4);

    // Q12 is dicyclic: every element outside <a> has order 4
    auto q12 = build_group(Index2Params::make(1, 3, 5, PresentationType::B));
    for (int x = 6; x < 12; ++x) CHECK(q12.element_order(x) == 4);

    // type C with s >= 2: cyclic of order 2n when r = 1
    auto c8 = build_group(Index2Params::make(2, 1, 1, PresentationType::C));
    CHECK(c8.is_cyclic());
    CHECK(c8.element_order(4) == 8);  // t generates
}

TEST_CASE("enumeration counts and names") {
    auto upto12 = enumerate_groups(12);
    CHECK(upto12.size() == 15);
    std::multiset<std::string> names;
    for (const auto& p : upto12) names.insert(p.name());
    for (const char* want :
         {"C2", "C4", "C2xC2", "C6", "D6", "C8", "C2xC4", "D8", "Q8", "C10", "D10",
          "C12", "C2xC6", "D12", "Q12"})
        CHECK_MESSAGE(names.count(want) == 1, want);

    int order8 = 0, order16 = 0;
    std::multiset<std::string> names16;
    for (const auto& p : enumerate_groups(16)) {
        if (p.order() == 8) ++order8;
        if (p.order() == 16) {
            ++order16;
            names16.insert(p.name());
        }
    }
    CHECK(order8 == 4);
    CHECK(order16 == 6);
    for (const char* want : {"C16", "C2xC8", "D16", "Q16", "SD16", "M16"})
        CHECK_MESSAGE(names16.count(want) == 1, want);
}

TEST_CASE("every enumerated group is well formed with <a> of index 2") {
    for (const auto& p : enumerate_groups(32)) {
        FiniteGroup g = build_group(p);  // ctor runs the axiom checks
        CHECK(g.order() == 2 * p.n);
        auto a = g.generated_subgroup(ElementSet::single(g.order(), 1 % p.n));
        if (p.n > 1) CHECK(a.order() == p.n);
        CHECK((p.s == 0 || p.n_minus % 2 == 0));
    }
}

TEST_CASE("closed-form commutator and center match direct computation") {
    for (const auto& p : enumerate_groups(32)) {
        FiniteGroup g = build_group(p);
        auto inv = structural_invariants(p, g);  // throws on mismatch
        if (p.r != 1) {
            CHECK(inv.commutator_order == p.n_plus);
            CHECK(inv.center_order == p.n_minus);
        } else {
            CHECK(inv.commutator_order == 1);
            CHECK(inv.center_order == g.order());
        }
    }
}

TEST_CASE("equal-order entries are pairwise non-isomorphic") {
    std::map<int, std::vector<Index2Params>> by_order;
    for (const auto& p : enumerate_groups(16)) by_order[p.order()].push_back(p);
    for (auto& [order, list] : by_order) {
        std::set<std::vector<int>> signatures;
        for (const auto& p : list) {
            FiniteGroup g = build_group(p);
            std::vector<int> sig(order + 1, 0);
            for (int e = 0; e < order; ++e) ++sig[g.element_order(e)];
            sig.push_back(g.commutator_subgroup().order());
            sig.push_back(g.center().order());
            CHECK_MESSAGE(signatures.insert(sig).second,
                          "duplicate invariant signature at order " << order);
        }
    }
}

TEST_CASE("centralizer of t") {
    auto d8p = Index2Params::make(2, 1, 3, PresentationType::A);
    auto d8 = build_group(d8p);
    auto c = centralizer_of_tau(d8p, d8);
    CHECK(c.order() == 4);
    for (int e : {0, 2, 4, 6}) CHECK(c.contains(e));

    auto d12p = Index2Params::make(1, 3, 5, PresentationType::A);
    auto d12 = build_group(d12p);
    CHECK(centralizer_of_tau(d12p, d12).order() == 4);  // 2 n^-, C2 x C2

    auto q8p = Index2Params::make(2, 1, 3, PresentationType::B);
    auto q8 = build_group(q8p);
    CHECK_THROWS(centralizer_of_tau(q8p, q8));  // quaternion Sylow subgroup

    auto s3p = Index2Params::make(0, 3, 2, PresentationType::A);
    auto s3 = build_group(s3p);
    CHECK_THROWS(centralizer_of_tau(s3p, s3));  // cyclic Sylow subgroup
}

TEST_CASE("reduction subgroup") {
    auto d30p = Index2Params::make(0, 15, 14, PresentationType::A);
    CHECK(d30p.n_plus == 15);
    auto d30 = build_group(d30p);
    auto h = reduction_subgroup(d30p, d30, 5);
    CHECK(h.order() == 10);  // 2 n^- q = 2*1*5
    auto emb = subgroup_as_group(d30, h);
    CHECK(emb.group.commutator_subgroup().order() == 5);

    auto d12p = Index2Params::make(1, 3, 5, PresentationType::A);
    auto d12 = build_group(d12p);
    CHECK(reduction_subgroup(d12p, d12, 3).order() == 12);  // n+/q = 1, whole group

    auto q12p = Index2Params::make(1, 3, 5, PresentationType::B);
    auto q12 = build_group(q12p);
    CHECK_THROWS(reduction_subgroup(q12p, q12, 2));  // 2 does not divide n+ = 3
}
