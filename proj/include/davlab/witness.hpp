#pragma once

#include <optional>
#include <utility>

#include "davlab/group.hpp"
#include "davlab/index2.hpp"
#include "davlab/sequence.hpp"

namespace davlab {

struct WitnessRecord {
    Index2Params params;
    Sequence witness;
    int claimed_length = 0;
    bool product_one = false;
    bool atom = false;
    bool length_ok = false;

    bool all_ok() const { return product_one && atom && length_ok; }
};

/// The explicit atom of length n + n+ for a non-abelian group with a cyclic
/// index-2 subgroup:
///   U = (t^{-1} a) . a^{[n+ - 1]} . (t a^{1 - n+}) . a^{[n - 1]},
/// whose existence shows |G|/2 + |G'| <= D(G). The record carries the
/// independently checked properties. g must be build_group(p); r != 1.
WitnessRecord lower_bound_witness(const Index2Params& p, const FiniteGroup& g);

/// For n+ = p prime: a product-one S with |S| >= n + p + 1 and at least
/// p - 1 terms from <a> outside the center is never an atom; returns a
/// factorization into two nontrivial product-one parts (T, S T^{-1}) with
/// |T| <= n + 1. Absent return value would falsify the criterion.
std::optional<std::pair<Sequence, Sequence>> nonatom_certificate(
    const Index2Params& p, const FiniteGroup& g, const Sequence& s);

}  // namespace davlab
