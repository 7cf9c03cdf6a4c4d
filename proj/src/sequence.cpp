#include "davlab/sequence.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <unordered_map>

namespace davlab {

Sequence::Sequence(const FiniteGroup& g, const std::vector<std::pair<int, int>>& elems)
    : group_(&g), mult_(g.order(), 0) {
    for (auto [e, k] : elems) add(e, k);
}

int Sequence::max_multiplicity() const {
    return mult_.empty() ? 0 : *std::max_element(mult_.begin(), mult_.end());
}

std::vector<int> Sequence::support() const {
    std::vector<int> out;
    for (int g = 0; g < static_cast<int>(mult_.size()); ++g)
        if (mult_[g] > 0) out.push_back(g);
    return out;
}

std::vector<int> Sequence::terms() const {
    std::vector<int> out;
    out.reserve(length_);
    for (int g = 0; g < static_cast<int>(mult_.size()); ++g)
        for (int k = 0; k < mult_[g]; ++k) out.push_back(g);
    return out;
}

void Sequence::add(int g, int k) {
    if (g < 0 || g >= group_->order())
        throw std::invalid_argument("Sequence::add: element out of range");
    if (k < 0) throw std::invalid_argument("Sequence::add: negative multiplicity");
    mult_[g] += k;
    length_ += k;
}

void Sequence::remove(int g, int k) {
    if (g < 0 || g >= group_->order())
        throw std::invalid_argument("Sequence::remove: element out of range");
    if (k < 0 || mult_[g] < k)
        throw std::invalid_argument("Sequence::remove: multiplicity underflow");
    mult_[g] -= k;
    length_ -= k;
}

bool Sequence::divides(const Sequence& s) const {
    if (group_ != s.group_) return false;
    for (size_t g = 0; g < mult_.size(); ++g)
        if (mult_[g] > s.mult_[g]) return false;
    return true;
}

Sequence Sequence::minus(const Sequence& t) const {
    if (!t.divides(*this))
        throw std::invalid_argument("Sequence::minus: not a subsequence");
    Sequence out(*group_);
    for (size_t g = 0; g < mult_.size(); ++g)
        if (mult_[g] > t.mult_[g]) out.add(static_cast<int>(g), mult_[g] - t.mult_[g]);
    return out;
}

int Sequence::sum() const {
    if (!group_->is_abelian())
        throw std::logic_error("Sequence::sum: group is not abelian");
    int acc = group_->identity();
    for (int g = 0; g < static_cast<int>(mult_.size()); ++g)
        for (int k = 0; k < mult_[g]; ++k) acc = group_->mul(acc, g);
    return acc;
}

int OrderedSequence::product() const {
    int acc = group->identity();
    for (int t : terms) acc = group->mul(acc, t);
    return acc;
}

Sequence OrderedSequence::abelianization() const {
    Sequence out(*group);
    for (int t : terms) out.add(t);
    return out;
}

namespace {

/// Memoized pi over sub-multisets of one root sequence. Counts are aligned
/// to the root support; the memo key is the counts vector in mixed radix.
class PiMemo {
public:
    explicit PiMemo(const Sequence& root) : g_(&root.group()) {
        for (int e : root.support()) {
            supp_.push_back(e);
            radix_.push_back(root.multiplicity(e) + 1);
        }
    }

    const std::vector<int>& supp() const { return supp_; }
    const std::vector<int>& radix() const { return radix_; }

    std::uint64_t pi(std::vector<int>& counts, int len) {
        if (len == 0) return 1u;  // {identity}
        std::uint64_t k = key(counts);
        auto it = memo_.find(k);
        if (it != memo_.end()) return it->second;
        std::uint64_t mask = 0;
        for (size_t i = 0; i < supp_.size(); ++i) {
            if (counts[i] == 0) continue;
            --counts[i];
            std::uint64_t sub = pi(counts, len - 1);
            ++counts[i];
            for (std::uint64_t b = sub; b; b &= b - 1) {
                int e = __builtin_ctzll(b);
                mask |= std::uint64_t{1} << g_->mul(e, supp_[i]);
            }
        }
        memo_.emplace(k, mask);
        return mask;
    }

private:
    std::uint64_t key(const std::vector<int>& counts) const {
        std::uint64_t k = 0;
        for (size_t i = 0; i < counts.size(); ++i)
            k = k * static_cast<std::uint64_t>(radix_[i]) + counts[i];
        return k;
    }

    const FiniteGroup* g_;
    std::vector<int> supp_;
    std::vector<int> radix_;
    std::unordered_map<std::uint64_t, std::uint64_t> memo_;
};

ElementSet to_set(const FiniteGroup& g, std::uint64_t mask) {
    ElementSet out(g.order());
    out.set_bits(mask);
    return out;
}

/// Visit every counts vector of a fixed total length; f may end the walk
/// early by returning true.
bool walk_fixed_length(const std::vector<int>& radix, int want, size_t i,
                       std::vector<int>& counts,
                       const std::function<bool(std::vector<int>&)>& f) {
    if (i == radix.size()) return want == 0 && f(counts);
    for (int c = 0; c <= std::min(radix[i] - 1, want); ++c) {
        counts[i] = c;
        if (walk_fixed_length(radix, want - c, i + 1, counts, f)) return true;
        counts[i] = 0;
    }
    return false;
}

}  // namespace

ElementSet product_set(const Sequence& s) {
    PiMemo memo(s);
    std::vector<int> counts;
    for (size_t i = 0; i < memo.supp().size(); ++i)
        counts.push_back(memo.radix()[i] - 1);
    return to_set(s.group(), memo.pi(counts, s.length()));
}

ElementSet n_products(const Sequence& s, int n) {
    if (n < 0 || n > s.length())
        throw std::invalid_argument("n_products: n out of range");
    PiMemo memo(s);
    std::uint64_t acc = 0;
    std::vector<int> counts(memo.supp().size(), 0);
    walk_fixed_length(memo.radix(), n, 0, counts, [&](std::vector<int>& c) {
        acc |= memo.pi(c, n);
        return false;
    });
    return to_set(s.group(), acc);
}

ElementSet subsequence_products(const Sequence& s) {
    PiMemo memo(s);
    std::uint64_t acc = 0;
    std::vector<int> counts(memo.supp().size(), 0);
    for (int n = 1; n <= s.length(); ++n)
        walk_fixed_length(memo.radix(), n, 0, counts, [&](std::vector<int>& c) {
            acc |= memo.pi(c, n);
            return false;
        });
    return to_set(s.group(), acc);
}

ElementSet n_sums(const Sequence& s, int n) {
    const FiniteGroup& g = s.group();
    if (!g.is_abelian())
        throw std::invalid_argument("n_sums: group is not abelian");
    if (n < 0 || n > s.length())
        throw std::invalid_argument("n_sums: n out of range");
    // dp[j] = set of sums of j-term subsequences of the scanned prefix
    std::vector<std::uint64_t> dp(n + 1, 0);
    dp[0] = 1u;  // {identity}
    for (int e : s.support()) {
        int v = s.multiplicity(e);
        std::vector<std::uint64_t> next(n + 1, 0);
        for (int j = 0; j <= n; ++j) {
            int gk = g.identity();
            for (int k = 0; k <= std::min(v, j); ++k) {
                for (std::uint64_t b = dp[j - k]; b; b &= b - 1)
                    next[j] |= std::uint64_t{1} << g.mul(__builtin_ctzll(b), gk);
                gk = g.mul(gk, e);
            }
        }
        dp = std::move(next);
    }
    return to_set(g, dp[n]);
}

bool is_product_one(const Sequence& s) {
    return product_set(s).contains(s.group().identity());
}

bool is_product_one_free(const Sequence& s) {
    PiMemo memo(s);
    std::vector<int> counts(memo.supp().size(), 0);
    for (int n = 1; n <= s.length(); ++n) {
        bool hit = walk_fixed_length(memo.radix(), n, 0, counts,
                                     [&](std::vector<int>& c) {
                                         return (memo.pi(c, n) & 1u) != 0;
                                     });
        if (hit) return false;
    }
    return true;
}

bool is_atom(const Sequence& u) {
    if (u.trivial()) return false;
    PiMemo memo(u);
    size_t k = memo.supp().size();
    std::vector<int> full(k), counts(k, 0);
    for (size_t i = 0; i < k; ++i) full[i] = memo.radix()[i] - 1;
    if ((memo.pi(full, u.length()) & 1u) == 0) return false;
    // look for a nontrivial proper T with both halves product-one
    for (int n = 1; n <= u.length() / 2; ++n) {
        bool split = walk_fixed_length(
            memo.radix(), n, 0, counts, [&](std::vector<int>& c) {
                if ((memo.pi(c, n) & 1u) == 0) return false;
                std::vector<int> rest(k);
                for (size_t i = 0; i < k; ++i) rest[i] = full[i] - c[i];
                return (memo.pi(rest, u.length() - n) & 1u) != 0;
            });
        if (split) return false;
    }
    return true;
}

OrderedSequence cyclic_shift(const OrderedSequence& s, int j) {
    if (j < 1 || j > s.length())
        throw std::invalid_argument("cyclic_shift: position out of range");
    OrderedSequence out{s.group, {}};
    out.terms.reserve(s.terms.size());
    for (int i = 0; i < s.length(); ++i)
        out.terms.push_back(s.terms[(j - 1 + i) % s.length()]);
    return out;
}

std::optional<std::pair<int, int>> consecutive_product_one_scan(const OrderedSequence& s) {
    std::vector<int> prefix{s.group->identity()};
    for (int t : s.terms) prefix.push_back(s.group->mul(prefix.back(), t));
    for (int k = 1; k <= s.length(); ++k)
        for (int j = 0; j < k; ++j)
            if (prefix[j] == prefix[k]) return std::make_pair(j + 1, k);
    return std::nullopt;
}

bool g_prime_complement_check(const Sequence& s, const Sequence& t) {
    if (!t.divides(s))
        throw std::invalid_argument("g_prime_complement_check: T does not divide S");
    Subgroup gp = s.group().commutator_subgroup();
    return product_set(s.minus(t)).subset_of(gp.members);
}

}  // namespace davlab
