#include "davlab/group.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace davlab {

FiniteGroup::FiniteGroup(int order, std::vector<int> table_row_major,
                         std::vector<std::string> labels)
    : order_(order), table_(std::move(table_row_major)), labels_(std::move(labels)) {
    if (order_ < 1 || order_ > 64)
        throw std::invalid_argument("group order must be in [1, 64]");
    if (static_cast<int>(table_.size()) != order_ * order_)
        throw std::invalid_argument("Cayley table size does not match order");
    for (int v : table_)
        if (v < 0 || v >= order_)
            throw std::invalid_argument("Cayley table entry out of range");

    // identity must be element 0, two-sided
    for (int g = 0; g < order_; ++g)
        if (mul(0, g) != g || mul(g, 0) != g)
            throw std::invalid_argument("element 0 is not a two-sided identity");

    // associativity, exhaustive
    for (int a = 0; a < order_; ++a)
        for (int b = 0; b < order_; ++b)
            for (int c = 0; c < order_; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw std::invalid_argument("Cayley table is not associative");

    inverse_.assign(order_, -1);
    for (int g = 0; g < order_; ++g) {
        for (int h = 0; h < order_; ++h) {
            if (mul(g, h) == 0 && mul(h, g) == 0) {
                inverse_[g] = h;
                break;
            }
        }
        if (inverse_[g] < 0)
            throw std::invalid_argument("element without two-sided inverse");
    }

    elem_order_.assign(order_, 0);
    for (int g = 0; g < order_; ++g) {
        int x = g, k = 1;
        while (x != 0) {
            x = mul(x, g);
            ++k;
        }
        elem_order_[g] = k;
    }

    abelian_ = true;
    for (int a = 0; a < order_ && abelian_; ++a)
        for (int b = a + 1; b < order_; ++b)
            if (mul(a, b) != mul(b, a)) {
                abelian_ = false;
                break;
            }

    if (labels_.empty()) {
        labels_.reserve(order_);
        for (int g = 0; g < order_; ++g)
            labels_.push_back("g" + std::to_string(g));
        labels_[0] = "1";
    }
    if (static_cast<int>(labels_.size()) != order_)
        throw std::invalid_argument("label count does not match order");
}

bool FiniteGroup::is_cyclic() const {
    for (int g = 0; g < order_; ++g)
        if (elem_order_[g] == order_) return true;
    return false;
}

int FiniteGroup::power(int g, long long k) const {
    int o = elem_order_[g];
    long long e = ((k % o) + o) % o;
    int out = 0;
    for (long long i = 0; i < e; ++i) out = mul(out, g);
    return out;
}

std::optional<int> FiniteGroup::element_by_label(const std::string& name) const {
    for (int g = 0; g < order_; ++g)
        if (labels_[g] == name) return g;
    return std::nullopt;
}

ElementSet FiniteGroup::all_elements() const {
    ElementSet s(order_);
    if (order_ == 64)
        s.set_bits(~std::uint64_t{0});
    else
        s.set_bits((std::uint64_t{1} << order_) - 1);
    return s;
}

Subgroup FiniteGroup::trivial_subgroup() const {
    return {this, ElementSet::single(order_, 0)};
}

Subgroup FiniteGroup::full_subgroup() const { return {this, all_elements()}; }

Subgroup FiniteGroup::generated_subgroup(const ElementSet& gens) const {
    if (gens.empty())
        throw std::invalid_argument("generated_subgroup: empty generating set");
    ElementSet closure = ElementSet::single(order_, 0);
    std::vector<int> frontier = {0};
    auto gen_list = gens.elements();
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int x : frontier) {
            for (int g : gen_list) {
                for (int y : {mul(x, g), mul(x, inverse(g))}) {
                    if (!closure.contains(y)) {
                        closure.insert(y);
                        next.push_back(y);
                    }
                }
            }
        }
        frontier = std::move(next);
    }
    return {this, closure};
}

Subgroup FiniteGroup::commutator_subgroup() const {
    ElementSet comms(order_);
    for (int x = 0; x < order_; ++x)
        for (int y = 0; y < order_; ++y)
            comms.insert(mul(mul(inverse(x), inverse(y)), mul(x, y)));
    return generated_subgroup(comms);
}

Subgroup FiniteGroup::center() const { return centralizer(all_elements()); }

Subgroup FiniteGroup::centralizer(const ElementSet& a) const {
    if (a.empty())
        throw std::invalid_argument("centralizer: empty set");
    ElementSet out(order_);
    for (int g = 0; g < order_; ++g) {
        bool ok = true;
        for (int x : a.elements())
            if (mul(g, x) != mul(x, g)) {
                ok = false;
                break;
            }
        if (ok) out.insert(g);
    }
    return {this, out};
}

Subgroup FiniteGroup::left_stabilizer(const ElementSet& a) const {
    if (a.empty())
        throw std::invalid_argument("left_stabilizer: empty set");
    ElementSet out(order_);
    for (int g = 0; g < order_; ++g) {
        ElementSet ga(order_);
        for (int x : a.elements()) ga.insert(mul(g, x));
        if (ga == a) out.insert(g);
    }
    return {this, out};
}

bool FiniteGroup::is_subgroup(const ElementSet& a) const {
    if (!a.contains(0)) return false;
    for (int x : a.elements()) {
        if (!a.contains(inverse(x))) return false;
        for (int y : a.elements())
            if (!a.contains(mul(x, y))) return false;
    }
    return true;
}

bool FiniteGroup::is_normal(const Subgroup& h) const {
    for (int g = 0; g < order_; ++g)
        for (int x : h.members.elements())
            if (!h.contains(mul(mul(g, x), inverse(g)))) return false;
    return true;
}

std::vector<Subgroup> FiniteGroup::all_subgroups() const {
    std::set<std::uint64_t> known;
    known.insert(ElementSet::single(order_, 0).bits());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::uint64_t> snapshot(known.begin(), known.end());
        for (std::uint64_t bits : snapshot) {
            for (int g = 1; g < order_; ++g) {
                ElementSet gens(order_);
                gens.set_bits(bits);
                gens.insert(g);
                auto h = generated_subgroup(gens);
                if (known.insert(h.members.bits()).second) grew = true;
            }
        }
    }
    std::vector<Subgroup> out;
    for (std::uint64_t bits : known) {
        ElementSet s(order_);
        s.set_bits(bits);
        out.push_back({this, s});
    }
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.members.bits() < b.members.bits();
    });
    return out;
}

QuotientGroup quotient_group(const FiniteGroup& g, const Subgroup& h) {
    if (h.parent != &g)
        throw std::invalid_argument("quotient_group: subgroup of a different group");
    if (!g.is_normal(h))
        throw std::invalid_argument("quotient_group: subgroup is not normal");

    int n = g.order();
    std::vector<int> coset_of(n, -1);
    std::vector<int> reps;
    // assign coset ids so the identity coset gets id 0
    for (int x = 0; x < n; ++x) {
        if (coset_of[x] >= 0) continue;
        int id = static_cast<int>(reps.size());
        reps.push_back(x);
        for (int m : h.members.elements()) coset_of[g.mul(x, m)] = id;
    }
    int q = static_cast<int>(reps.size());
    std::vector<int> table(q * q);
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j)
            table[i * q + j] = coset_of[g.mul(reps[i], reps[j])];
    std::vector<std::string> labels;
    labels.reserve(q);
    for (int i = 0; i < q; ++i) labels.push_back(g.label(reps[i]) + "H");
    return {FiniteGroup(q, std::move(table), std::move(labels)), std::move(coset_of)};
}

EmbeddedGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h) {
    if (h.parent != &g)
        throw std::invalid_argument("subgroup_as_group: subgroup of a different group");
    std::vector<int> to_parent = h.members.elements();
    // element 0 of the subgroup must be the identity; elements() is sorted and
    // every subgroup contains 0, so this holds automatically.
    int k = static_cast<int>(to_parent.size());
    std::vector<int> index_in(g.order(), -1);
    for (int i = 0; i < k; ++i) index_in[to_parent[i]] = i;
    std::vector<int> table(k * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            int prod = g.mul(to_parent[i], to_parent[j]);
            if (index_in[prod] < 0)
                throw std::invalid_argument("subgroup_as_group: set not closed");
            table[i * k + j] = index_in[prod];
        }
    std::vector<std::string> labels;
    labels.reserve(k);
    for (int i = 0; i < k; ++i) labels.push_back(g.label(to_parent[i]));
    return {FiniteGroup(k, std::move(table), std::move(labels)), std::move(to_parent)};
}

FiniteGroup cyclic_group(int n) {
    std::vector<int> table(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) table[i * n + j] = (i + j) % n;
    std::vector<std::string> labels;
    labels.reserve(n);
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    return FiniteGroup(n, std::move(table), std::move(labels));
}

}  // namespace davlab
