#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "davlab/group.hpp"

namespace davlab {

/// Unordered multiset of group elements, stored as a multiplicity vector.
class Sequence {
public:
    explicit Sequence(const FiniteGroup& g)
        : group_(&g), mult_(g.order(), 0) {}
    /// From (element, multiplicity) pairs; multiplicities accumulate.
    Sequence(const FiniteGroup& g, const std::vector<std::pair<int, int>>& elems);

    const FiniteGroup& group() const { return *group_; }
    int multiplicity(int g) const { return mult_[g]; }
    const std::vector<int>& multiplicities() const { return mult_; }
    int length() const { return length_; }
    bool trivial() const { return length_ == 0; }
    /// h(S): the largest multiplicity.
    int max_multiplicity() const;
    std::vector<int> support() const;
    /// All terms expanded, in increasing element order.
    std::vector<int> terms() const;

    void add(int g, int k = 1);
    void remove(int g, int k = 1);

    /// True if every multiplicity of this is <= that of s.
    bool divides(const Sequence& s) const;
    /// S with the terms of t removed; throws if t does not divide this.
    Sequence minus(const Sequence& t) const;

    /// sigma(S), abelian groups only.
    int sum() const;

    bool operator==(const Sequence& o) const {
        return group_ == o.group_ && mult_ == o.mult_;
    }

private:
    const FiniteGroup* group_;
    std::vector<int> mult_;
    int length_ = 0;
};

/// Tuple of group elements.
struct OrderedSequence {
    const FiniteGroup* group = nullptr;
    std::vector<int> terms;

    int length() const { return static_cast<int>(terms.size()); }
    /// Product of the terms in order (identity when empty).
    int product() const;
    Sequence abelianization() const;
};

/// pi(S): products over all orderings of S; {1} for the trivial sequence.
/// Computed by memoized recursion over sub-multisets.
ElementSet product_set(const Sequence& s);

/// Pi_n(S): union of pi(T) over subsequences T with |T| = n.
ElementSet n_products(const Sequence& s, int n);

/// Pi(S): union of pi(T) over nontrivial subsequences T.
ElementSet subsequence_products(const Sequence& s);

/// Sigma_n(S) for abelian groups, by counted subset-sum DP.
ElementSet n_sums(const Sequence& s, int n);

/// 1 in pi(S). True for the trivial sequence.
bool is_product_one(const Sequence& s);

/// No nontrivial subsequence has product one: 1 not in Pi(S).
bool is_product_one_free(const Sequence& s);

/// Nontrivial product-one sequence with no factorization into two nontrivial
/// product-one subsequences.
bool is_atom(const Sequence& u);

/// Rotation starting at position j (1-based, j in [1, |S|]).
OrderedSequence cyclic_shift(const OrderedSequence& s, int j);

/// First consecutive interval [lo, hi] (1-based, inclusive) whose term
/// product is 1, found via equal prefix products; guaranteed to exist when
/// |S| >= |G|.
std::optional<std::pair<int, int>> consecutive_product_one_scan(const OrderedSequence& s);

/// For T | S: check pi(S with T removed) is contained in G'.
bool g_prime_complement_check(const Sequence& s, const Sequence& t);

}  // namespace davlab
