#pragma once

#include <memory>
#include <string>
#include <vector>

#include "davlab/group.hpp"
#include "davlab/index2.hpp"
#include "davlab/sequence.hpp"

namespace davlab {

struct SearchStats {
    long long states = 0;        // multisets visited in the level DP
    long long split_leaves = 0;  // factorization splits examined
    double seconds = 0.0;
};

struct DavenportResult {
    int value = 0;
    Sequence witness;
    SearchStats stats;
};

/// d(G): maximum length of a sequence with no nontrivial product-one
/// subsequence, with a witness of that length. Exhaustive; |G| <= 16.
/// The witness references g, so g must outlive the result (rvalues rejected).
DavenportResult small_davenport(const FiniteGroup& g);
DavenportResult small_davenport(FiniteGroup&&) = delete;

/// D(G): maximum length of an atom, with a witness atom. Exhaustive; |G| <= 16.
DavenportResult large_davenport(const FiniteGroup& g);
DavenportResult large_davenport(FiniteGroup&&) = delete;

/// Both constants in one pass over the multiset lattice.
struct DavenportPair {
    DavenportResult small;
    DavenportResult large;
};
DavenportPair davenport_pair(const FiniteGroup& g);
DavenportPair davenport_pair(FiniteGroup&&) = delete;

struct DavenportReport {
    Index2Params params;
    int d = 0, dav = 0;            // computed by search
    int d_formula = 0, dav_formula = 0;  // |G|-1 or |G|/2, plus |G'|
    bool match = false;
    Sequence witness_free;
    Sequence witness_atom;
    SearchStats stats;
    std::shared_ptr<const FiniteGroup> group;  // owns the group the witnesses reference
};

/// Computes d and D by search and compares with the closed forms
/// d = |G|-1 (cyclic) or |G|/2 (non-cyclic) and D = d + |G'|. A mismatch is
/// reported in the result, not thrown.
DavenportReport verify_main_theorem(const Index2Params& p);

/// Bounded check of the minimal-length characterization of D(G): for every
/// S with |S| in [ell, ell+max_extra] and every x in pi(S) there is a
/// nontrivial product-one T | S with |T| <= ell and x in pi(S T^{-1}).
/// Exhaustive over that finite window only.
bool check_characterization(const FiniteGroup& g, int ell, int max_extra);

struct BoundCheck {
    std::string description;
    int lhs = 0, rhs = 0;
    bool ok = false;
};

struct BoundsReport {
    std::vector<BoundCheck> checks;
    bool all_ok = false;
};

/// Inequalities tying D(G) to subgroup data, evaluated on exactly computed
/// values: D(G) <= D(H) [G:H] for every subgroup H; D(G) <= D(H) D(G/H) for
/// normal H meeting G' trivially; D(G) <= d(G) + |G'| when |G'| <= 2;
/// d(G) <= |G|/2 for non-cyclic G.
BoundsReport check_upper_bounds(const FiniteGroup& g);

}  // namespace davlab
