#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace davlab {

class FiniteGroup;

/// Subset of a group's elements, backed by a 64-bit mask (group order <= 64).
class ElementSet {
public:
    ElementSet() = default;
    explicit ElementSet(int universe_size) : universe_(universe_size) {}

    static ElementSet single(int universe_size, int e) {
        ElementSet s(universe_size);
        s.insert(e);
        return s;
    }

    int universe_size() const { return universe_; }
    bool contains(int e) const { return (bits_ >> e) & 1u; }
    void insert(int e) { bits_ |= (std::uint64_t{1} << e); }
    void erase(int e) { bits_ &= ~(std::uint64_t{1} << e); }
    int size() const { return __builtin_popcountll(bits_); }
    bool empty() const { return bits_ == 0; }
    std::uint64_t bits() const { return bits_; }
    void set_bits(std::uint64_t b) { bits_ = b; }

    bool operator==(const ElementSet& o) const { return bits_ == o.bits_; }
    bool operator!=(const ElementSet& o) const { return bits_ != o.bits_; }

    ElementSet operator|(const ElementSet& o) const {
        ElementSet s(universe_);
        s.bits_ = bits_ | o.bits_;
        return s;
    }
    ElementSet operator&(const ElementSet& o) const {
        ElementSet s(universe_);
        s.bits_ = bits_ & o.bits_;
        return s;
    }
    bool subset_of(const ElementSet& o) const { return (bits_ & ~o.bits_) == 0; }

    std::vector<int> elements() const {
        std::vector<int> out;
        for (std::uint64_t b = bits_; b; b &= b - 1)
            out.push_back(__builtin_ctzll(b));
        return out;
    }

private:
    std::uint64_t bits_ = 0;
    int universe_ = 0;
};

struct Subgroup {
    const FiniteGroup* parent = nullptr;
    ElementSet members;

    int order() const { return members.size(); }
    bool contains(int e) const { return members.contains(e); }
};

/// Immutable finite group given by its Cayley table. Element 0 is the
/// identity; inverses and element orders are cached at construction.
/// Construction verifies the group axioms exhaustively.
class FiniteGroup {
public:
    FiniteGroup(int order, std::vector<int> table_row_major,
                std::vector<std::string> labels = {});

    int order() const { return order_; }
    int identity() const { return 0; }
    int mul(int g, int h) const { return table_[g * order_ + h]; }
    int inverse(int g) const { return inverse_[g]; }
    int element_order(int g) const { return elem_order_[g]; }
    bool is_abelian() const { return abelian_; }
    bool is_cyclic() const;
    int power(int g, long long k) const;

    const std::string& label(int g) const { return labels_[g]; }
    const std::vector<std::string>& labels() const { return labels_; }
    /// Index of the element with the given label, if any.
    std::optional<int> element_by_label(const std::string& name) const;

    ElementSet all_elements() const;

    Subgroup trivial_subgroup() const;
    Subgroup full_subgroup() const;
    Subgroup generated_subgroup(const ElementSet& gens) const;
    Subgroup commutator_subgroup() const;
    Subgroup center() const;
    Subgroup centralizer(const ElementSet& a) const;
    /// Left stabilizer H(A) = {g : gA = A}.
    Subgroup left_stabilizer(const ElementSet& a) const;

    bool is_subgroup(const ElementSet& a) const;
    bool is_normal(const Subgroup& h) const;

    /// All subgroups, ordered by (order, member bitmask).
    std::vector<Subgroup> all_subgroups() const;

private:
    int order_;
    std::vector<int> table_;
    std::vector<int> inverse_;
    std::vector<int> elem_order_;
    std::vector<std::string> labels_;
    bool abelian_;
};

struct QuotientGroup {
    FiniteGroup group;
    std::vector<int> projection;  // element index -> coset index in group
};

/// Quotient G/H with the canonical projection. Throws if H is not normal.
QuotientGroup quotient_group(const FiniteGroup& g, const Subgroup& h);

struct EmbeddedGroup {
    FiniteGroup group;
    std::vector<int> to_parent;  // element index in group -> index in parent
};

/// A subgroup reindexed as a standalone group.
EmbeddedGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h);

/// The cyclic group Z_n, written additively: element i is the residue i.
FiniteGroup cyclic_group(int n);

}  // namespace davlab
