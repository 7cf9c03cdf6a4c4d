#include "davlab/witness.hpp"

#include <functional>
#include <stdexcept>

namespace davlab {

WitnessRecord lower_bound_witness(const Index2Params& p, const FiniteGroup& g) {
    if (p.r == 1)
        throw std::invalid_argument("lower_bound_witness: group must be non-abelian");
    if (g.order() != p.order())
        throw std::invalid_argument("lower_bound_witness: group does not match params");
    int n = p.n;
    int alpha = 1, tau = n;
    int e1 = g.mul(g.inverse(tau), alpha);
    int e2 = g.mul(tau, g.power(alpha, 1 - p.n_plus));

    Sequence u(g);
    u.add(e1);
    u.add(alpha, p.n_plus - 1);
    u.add(e2);
    u.add(alpha, n - 1);

    WitnessRecord rec{p, u, n + p.n_plus, false, false, false};
    rec.length_ok = u.length() == rec.claimed_length;
    rec.product_one = is_product_one(u);
    rec.atom = is_atom(u);
    return rec;
}

std::optional<std::pair<Sequence, Sequence>> nonatom_certificate(
    const Index2Params& p, const FiniteGroup& g, const Sequence& s) {
    if (g.order() != p.order())
        throw std::invalid_argument("nonatom_certificate: group does not match params");
    int q = p.n_plus;
    bool prime = q >= 2;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) prime = false;
    if (!prime) throw std::invalid_argument("nonatom_certificate: n+ must be prime");
    if (s.length() < p.n + q + 1)
        throw std::invalid_argument("nonatom_certificate: |S| < n + p + 1");
    int noncentral = 0;
    for (int e : s.support())
        if (e < p.n && e % q != 0) noncentral += s.multiplicity(e);
    if (noncentral < q - 1)
        throw std::invalid_argument(
            "nonatom_certificate: fewer than p - 1 non-central <a> terms");
    if (!is_product_one(s))
        throw std::invalid_argument("nonatom_certificate: S is not product-one");

    // split search over subsequences up to length d(G) + 1 = n + 1
    int cap = p.n + 1;
    auto supp = s.support();
    Sequence t(g);
    std::optional<std::pair<Sequence, Sequence>> out;
    std::function<bool(size_t)> rec = [&](size_t i) -> bool {
        if (i == supp.size()) {
            if (t.trivial() || t.length() == s.length()) return false;
            if (!is_product_one(t)) return false;
            Sequence rest = s.minus(t);
            if (!is_product_one(rest)) return false;
            out.emplace(t, rest);
            return true;
        }
        int v = s.multiplicity(supp[i]);
        for (int c = 0; c <= v; ++c) {
            if (c > 0) {
                if (t.length() >= cap) break;
                t.add(supp[i]);
            }
            if (rec(i + 1)) return true;
        }
        while (t.multiplicity(supp[i]) > 0) t.remove(supp[i]);
        return false;
    };
    rec(0);
    return out;
}

}  // namespace davlab
