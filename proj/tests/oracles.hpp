#pragma once

// Independent brute-force reference implementations. Everything here is
// deliberately naive (factorial or exponential) and is only run at small
// sizes to validate the fast code paths.

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "davlab/group.hpp"
#include "davlab/sequence.hpp"

namespace oracles {

/// pi(S) by multiplying out every permutation of the terms.
inline davlab::ElementSet pi_by_permutations(const davlab::Sequence& s) {
    const davlab::FiniteGroup& g = s.group();
    std::vector<int> terms = s.terms();
    std::sort(terms.begin(), terms.end());
    davlab::ElementSet out(g.order());
    if (terms.empty()) {
        out.insert(g.identity());
        return out;
    }
    do {
        int acc = g.identity();
        for (int t : terms) acc = g.mul(acc, t);
        out.insert(acc);
    } while (std::next_permutation(terms.begin(), terms.end()));
    return out;
}

/// Visit every sub-multiset of s (including trivial and full).
inline void each_subsequence(const davlab::Sequence& s,
                             const std::function<void(const davlab::Sequence&)>& f) {
    auto supp = s.support();
    davlab::Sequence acc(s.group());
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == supp.size()) {
            f(acc);
            return;
        }
        for (int c = 0; c <= s.multiplicity(supp[i]); ++c) {
            if (c > 0) acc.add(supp[i]);
            rec(i + 1);
        }
        while (acc.multiplicity(supp[i]) > 0) acc.remove(supp[i]);
    };
    rec(0);
}

inline bool product_one_by_permutations(const davlab::Sequence& s) {
    return pi_by_permutations(s).contains(s.group().identity());
}

inline bool product_one_free_by_enumeration(const davlab::Sequence& s) {
    bool free = true;
    each_subsequence(s, [&](const davlab::Sequence& t) {
        if (!t.trivial() && product_one_by_permutations(t)) free = false;
    });
    return free;
}

inline bool atom_by_definition(const davlab::Sequence& u) {
    if (u.trivial() || !product_one_by_permutations(u)) return false;
    bool splits = false;
    each_subsequence(u, [&](const davlab::Sequence& t) {
        if (t.trivial() || t.length() == u.length() || splits) return;
        if (product_one_by_permutations(t) &&
            product_one_by_permutations(u.minus(t)))
            splits = true;
    });
    return !splits;
}

/// Can the multiset be split into exactly n nonempty repetition-free blocks?
/// Backtracking over term-to-block assignments.
inline bool setpartition_exists_bruteforce(const std::vector<int>& mult, int n) {
    std::vector<int> terms;
    for (size_t e = 0; e < mult.size(); ++e)
        for (int k = 0; k < mult[e]; ++k) terms.push_back(static_cast<int>(e));
    int len = static_cast<int>(terms.size());
    if (len < n) return false;
    std::vector<std::vector<bool>> has(n, std::vector<bool>(mult.size(), false));
    std::vector<int> fill(n, 0);
    std::function<bool(int, int)> rec = [&](int i, int used) -> bool {
        if (i == len) return used == n;
        if (len - i < n - used) return false;
        int cap = std::min(used + 1, n);  // first empty block breaks symmetry
        for (int b = 0; b < cap; ++b) {
            if (has[b][terms[i]]) continue;
            has[b][terms[i]] = true;
            ++fill[b];
            if (rec(i + 1, std::max(used, b + 1))) return true;
            has[b][terms[i]] = false;
            --fill[b];
        }
        return false;
    };
    return rec(0, 0);
}

/// Does some subsequence of size target admit an n-setpartition? Exhaustive
/// over sub-multisets.
inline bool subsequence_setpartition_bruteforce(const std::vector<int>& mult, int ell,
                                                int n) {
    int len = std::accumulate(mult.begin(), mult.end(), 0);
    int target = ell + n;
    if (len < target) return false;
    std::vector<int> cur(mult.size(), 0);
    std::function<bool(size_t, int)> rec = [&](size_t i, int want) -> bool {
        if (i == mult.size())
            return want == 0 && setpartition_exists_bruteforce(cur, n);
        for (int c = 0; c <= std::min(mult[i], want); ++c) {
            cur[i] = c;
            if (rec(i + 1, want - c)) return true;
            cur[i] = 0;
        }
        return false;
    };
    return rec(0, target);
}

}  // namespace oracles
