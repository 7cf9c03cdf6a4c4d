#include "davlab/additive.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace davlab {

namespace {

bool is_prime(int q) {
    if (q < 2) return false;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

/// Visit every sub-multiset of the given multiplicity profile with total
/// size want; f gets counts aligned to supp and may stop the walk.
bool walk_subsequences(const std::vector<int>& avail, int want, size_t i,
                       std::vector<int>& counts,
                       const std::function<bool(const std::vector<int>&)>& f) {
    if (i == avail.size()) return want == 0 && f(counts);
    for (int c = 0; c <= std::min(avail[i], want); ++c) {
        counts[i] = c;
        if (walk_subsequences(avail, want - c, i + 1, counts, f)) return true;
        counts[i] = 0;
    }
    return false;
}

}  // namespace

CauchyDavenportResult cauchy_davenport_check(const std::vector<ElementSet>& sets, int p) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (sets.empty()) throw std::invalid_argument("at least one set is required");
    int total = 0;
    for (const auto& a : sets) {
        if (a.empty()) throw std::invalid_argument("summand sets must be nonempty");
        for (int e : a.elements())
            if (e >= p) throw std::invalid_argument("set element outside Z_p");
        total += a.size();
    }
    std::uint64_t acc = sets[0].bits();
    for (size_t i = 1; i < sets.size(); ++i) {
        std::uint64_t next = 0;
        for (std::uint64_t b = acc; b; b &= b - 1) {
            int x = __builtin_ctzll(b);
            for (int y : sets[i].elements())
                next |= std::uint64_t{1} << ((x + y) % p);
        }
        acc = next;
    }
    CauchyDavenportResult out;
    out.sumset_size = __builtin_popcountll(acc);
    out.bound = std::min(p, total - static_cast<int>(sets.size()) + 1);
    out.ok = out.sumset_size >= out.bound;
    return out;
}

DgmResult dgm_check(const Sequence& s, int n) {
    const FiniteGroup& g = s.group();
    if (!g.is_abelian()) throw std::invalid_argument("dgm_check: group must be abelian");
    if (n < 1 || n > s.length()) throw std::invalid_argument("dgm_check: n out of range");

    DgmResult out{n_sums(s, n), ElementSet(g.order()), 0, false};
    Subgroup h = g.left_stabilizer(out.sums);
    out.stabilizer = h.members;

    auto q = quotient_group(g, h);
    std::vector<int> coset_mult(q.group.order(), 0);
    for (int e = 0; e < g.order(); ++e)
        coset_mult[q.projection[e]] += s.multiplicity(e);
    int acc = 0;
    for (int v : coset_mult) acc += std::min(n, v);
    out.bound = (acc - n + 1) * h.order();
    out.ok = out.sums.size() >= out.bound;
    return out;
}

bool key_equivalence_check(const Sequence& s, int n) {
    const FiniteGroup& g = s.group();
    if (!g.is_abelian())
        throw std::invalid_argument("key_equivalence_check: group must be abelian");
    if (n < 1 || n > s.length())
        throw std::invalid_argument("key_equivalence_check: n out of range");
    int sigma_s = s.sum();
    auto supp = s.support();
    std::vector<int> avail;
    for (int e : supp) avail.push_back(s.multiplicity(e));

    // left side: sigma(T) - sigma(S T^{-1}) over all |T| = n
    ElementSet lhs(g.order());
    std::vector<int> counts(supp.size(), 0);
    walk_subsequences(avail, n, 0, counts, [&](const std::vector<int>& c) {
        int st = g.identity();
        for (size_t i = 0; i < supp.size(); ++i)
            for (int k = 0; k < c[i]; ++k) st = g.mul(st, supp[i]);
        // sigma(T) - (sigma(S) - sigma(T)) = 2 sigma(T) - sigma(S)
        lhs.insert(g.mul(g.mul(st, st), g.inverse(sigma_s)));
        return false;
    });

    // right side: Sigma_n(2S) - sigma(S)
    Sequence doubled(g);
    for (int e : supp) doubled.add(g.mul(e, e), s.multiplicity(e));
    ElementSet rhs(g.order());
    for (int y : n_sums(doubled, n).elements())
        rhs.insert(g.mul(y, g.inverse(sigma_s)));

    return lhs == rhs;
}

namespace {

/// V1 | W with |V1| = k and sigma(V1) = target (index in the cyclic group),
/// by memoized DFS over the support.
std::optional<Sequence> find_fixed_length_sum(const Sequence& w, int k, int target) {
    const FiniteGroup& g = w.group();
    auto supp = w.support();
    std::map<std::tuple<size_t, int, int>, bool> seen_fail;
    std::vector<int> chosen(supp.size(), 0);

    std::function<bool(size_t, int, int)> dfs = [&](size_t i, int rem, int tgt) -> bool {
        if (i == supp.size()) return rem == 0 && tgt == g.identity();
        auto key = std::make_tuple(i, rem, tgt);
        if (auto it = seen_fail.find(key); it != seen_fail.end()) return false;
        int v = w.multiplicity(supp[i]);
        int inv = g.inverse(supp[i]);
        int t = tgt;
        for (int c = 0; c <= std::min(v, rem); ++c) {
            chosen[i] = c;
            if (dfs(i + 1, rem - c, t)) return true;
            t = g.mul(t, inv);  // peel one more copy off the target
        }
        chosen[i] = 0;
        seen_fail.emplace(key, true);
        return false;
    };
    if (!dfs(0, k, target)) return std::nullopt;
    Sequence out(g);
    for (size_t i = 0; i < supp.size(); ++i)
        if (chosen[i] > 0) out.add(supp[i], chosen[i]);
    return out;
}

void verify_quad(int p, const FiniteGroup& g, const Sequence& s,
                 const FactorizationQuad& q) {
    int x = p;  // the order-2 element of Z_{2p}
    Sequence all(g);
    for (const Sequence* part : {&q.u1, &q.u2, &q.v1, &q.v2})
        for (int e : part->support()) all.add(e, part->multiplicity(e));
    if (!(all == s)) throw std::logic_error("quad does not repartition S");
    if (q.u1.trivial() || q.u2.trivial() || q.v1.trivial() || q.v2.trivial())
        throw std::logic_error("quad has a trivial part");
    if (q.u1.length() != q.u2.length() || q.v1.length() != q.v2.length())
        throw std::logic_error("quad part lengths mismatch");
    auto diff_ok = [&](const Sequence& a, const Sequence& b) {
        int want = g.power(x, a.length());
        return g.mul(a.sum(), g.inverse(b.sum())) == want;
    };
    if (!diff_ok(q.u1, q.u2) || !diff_ok(q.v1, q.v2))
        throw std::logic_error("quad sigma conditions fail");
}

}  // namespace

FactorizationQuad lemma43_factorize(int p, const Sequence& t1, const Sequence& t2) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    const FiniteGroup& g = t1.group();
    if (&t2.group() != &g) throw std::invalid_argument("T1, T2 over different groups");
    if (g.order() != 2 * p || !g.is_cyclic() || !g.is_abelian())
        throw std::invalid_argument("sequences must live over Z_{2p}");
    int x = p;  // unique order-2 element
    int half = t1.length();
    if (t2.length() != half || half * 2 < 2 * p + 4)
        throw std::invalid_argument("need |T1| = |T2| and |S| >= 2p+4");
    if (g.mul(t1.sum(), g.inverse(t2.sum())) != g.power(x, half))
        throw std::invalid_argument("sigma(T1) - sigma(T2) != |T1| x");

    Sequence s(g);
    for (int e = 0; e < g.order(); ++e)
        s.add(e, t1.multiplicity(e) + t2.multiplicity(e));

    auto with_v_from_t = [&](Sequence u1, Sequence u2) {
        FactorizationQuad q{u1, u2, t1.minus(u1), t2.minus(u2)};
        verify_quad(p, g, s, q);
        return q;
    };

    // case 1: g in T1 and g + x in T2
    for (int e : t1.support())
        if (t2.multiplicity(g.mul(e, x)) > 0)
            return with_v_from_t(Sequence(g, {{e, 1}}),
                                 Sequence(g, {{g.mul(e, x), 1}}));
    // case 2: some g twice in each of T1 and T2
    for (int e : t1.support())
        if (t1.multiplicity(e) >= 2 && t2.multiplicity(e) >= 2)
            return with_v_from_t(Sequence(g, {{e, 2}}), Sequence(g, {{e, 2}}));

    // general case: any disjoint U1, U2 of size <= 2 from S with
    // sigma(U1) - sigma(U2) = |U1| x, then split the remainder evenly
    auto try_remainder = [&](const Sequence& u1, const Sequence& u2)
        -> std::optional<FactorizationQuad> {
        Sequence w = s.minus(u1).minus(u2);
        int k = w.length() / 2;
        // need sigma(V1) with 2 sigma(V1) = sigma(W) + k x
        int want = g.mul(w.sum(), g.power(x, k));
        for (int y = 0; y < g.order(); ++y) {
            if (g.mul(y, y) != want) continue;
            if (auto v1 = find_fixed_length_sum(w, k, y)) {
                FactorizationQuad q{u1, u2, *v1, w.minus(*v1)};
                verify_quad(p, g, s, q);
                return q;
            }
        }
        return std::nullopt;
    };

    for (int a = 0; a < g.order(); ++a) {
        if (s.multiplicity(a) == 0) continue;
        int b = g.mul(a, g.inverse(x));  // a - b = x
        Sequence u1(g, {{a, 1}});
        if (s.minus(u1).multiplicity(b) > 0)
            if (auto q = try_remainder(u1, Sequence(g, {{b, 1}}))) return *q;
    }
    for (int a = 0; a < g.order(); ++a)
        for (int b = a; b < g.order(); ++b) {
            Sequence u1(g);
            u1.add(a);
            u1.add(b);
            if (!u1.divides(s)) continue;
            Sequence rest = s.minus(u1);
            int ab = g.mul(a, b);
            for (int c = 0; c < g.order(); ++c) {
                int d = g.mul(ab, g.inverse(c));
                if (d < c) continue;
                Sequence u2(g);
                u2.add(c);
                u2.add(d);
                if (!u2.divides(rest)) continue;
                if (auto q = try_remainder(u1, u2)) return *q;
            }
        }

    throw std::logic_error("lemma43_factorize: no quad found (falsifying event)");
}

std::pair<Sequence, Sequence> random_factorization_instance(const FiniteGroup& z2p,
                                                            int p, int total_len,
                                                            std::mt19937_64& rng) {
    if (z2p.order() != 2 * p || !z2p.is_cyclic())
        throw std::invalid_argument("group must be Z_{2p}");
    if (total_len % 2 != 0 || total_len < 2 * p + 4)
        throw std::invalid_argument("total length must be even and >= 2p+4");
    int half = total_len / 2;
    std::uniform_int_distribution<int> pick(0, 2 * p - 1);
    Sequence t2(z2p);
    for (int i = 0; i < half; ++i) t2.add(pick(rng));
    Sequence t1(z2p);
    for (int i = 0; i < half - 1; ++i) t1.add(pick(rng));
    // last element forces sigma(T1) = sigma(T2) + half * p
    int want = z2p.mul(t2.sum(), z2p.power(p, half));
    t1.add(z2p.mul(want, z2p.inverse(t1.sum())));
    return {t1, t2};
}

bool dicyclic_product_one_check(const FiniteGroup& g, int p, const Sequence& r) {
    if (!is_prime(p) || p == 2) throw std::invalid_argument("p must be an odd prime");
    int n = 2 * p;
    if (g.order() != 4 * p)
        throw std::invalid_argument("group must be dicyclic of order 4p");
    for (int e : r.support())
        if (e < n) throw std::invalid_argument("all terms must lie in the coset t<a>");
    if (r.length() % 2 != 0) return false;
    int w = r.length() / 2;

    FiniteGroup z2p = cyclic_group(n);
    Sequence exps(z2p);
    int total = 0;
    for (int e : r.support()) {
        exps.add(e - n, r.multiplicity(e));
        total = (total + (e - n) * r.multiplicity(e)) % n;
    }
    // need y in Sigma_w(exps) with 2y = total + w p (mod 2p)
    int want = (total + w * p) % n;
    for (int y : n_sums(exps, w).elements())
        if ((2 * y) % n == want) return true;
    return false;
}

}  // namespace davlab
