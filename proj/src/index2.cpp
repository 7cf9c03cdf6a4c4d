#include "davlab/index2.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace davlab {

namespace {

int pow2(int s) { return 1 << s; }

bool is_prime(int q) {
    if (q < 2) return false;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

// r in [1, n] with r = rho (mod 2^s) and r = w (mod m); unique since n = 2^s m.
int crt(int s, int m, int rho, int w) {
    int n = pow2(s) * m;
    for (int x = 0; x < n; ++x)
        if (x % pow2(s) == rho % pow2(s) && x % m == w % m)
            return x == 0 ? n : x;
    throw std::logic_error("crt: no solution");
}

}  // namespace

std::string to_string(PresentationType t) {
    switch (t) {
        case PresentationType::A: return "A";
        case PresentationType::B: return "B";
        case PresentationType::C: return "C";
    }
    throw std::logic_error("bad PresentationType");
}

std::string to_string(TwoGroupKind k) {
    switch (k) {
        case TwoGroupKind::Cyclic: return "cyclic";
        case TwoGroupKind::AbelianNoncyclic: return "abelian-noncyclic";
        case TwoGroupKind::Dihedral: return "dihedral";
        case TwoGroupKind::GeneralizedQuaternion: return "generalized-quaternion";
        case TwoGroupKind::SemiDihedral: return "semidihedral";
        case TwoGroupKind::OrdinaryMetacyclic: return "ordinary-metacyclic";
    }
    throw std::logic_error("bad TwoGroupKind");
}

PresentationType presentation_type_from_string(const std::string& s) {
    if (s == "A" || s == "a") return PresentationType::A;
    if (s == "B" || s == "b") return PresentationType::B;
    if (s == "C" || s == "c") return PresentationType::C;
    throw std::invalid_argument("presentation type must be A, B or C");
}

Index2Params Index2Params::make(int s, int m, int r, PresentationType ptype) {
    if (s < 0) throw std::invalid_argument("s must be nonnegative");
    if (m < 1 || m % 2 == 0) throw std::invalid_argument("m must be a positive odd integer");
    long long nll = static_cast<long long>(pow2(s)) * m;
    if (2 * nll > 64) throw std::invalid_argument("group order 2n exceeds the supported cap of 64");
    int n = static_cast<int>(nll);
    if (r < 1 || r > n) throw std::invalid_argument("r must lie in [1, n]");
    if ((static_cast<long long>(r) * r - 1) % n != 0)
        throw std::invalid_argument("r^2 must be 1 modulo n");
    if (ptype == PresentationType::B && s < 1)
        throw std::invalid_argument("type B requires s >= 1");
    if (ptype == PresentationType::C && (r - 1) % pow2(s) != 0)
        throw std::invalid_argument("type C requires r = 1 (mod 2^s)");

    Index2Params p;
    p.s = s;
    p.m = m;
    p.r = r;
    p.ptype = ptype;
    p.n = n;
    p.n_minus = std::gcd(r - 1, n);
    if (p.n_minus == 0) p.n_minus = n;  // r = 1, n = 1
    p.n_plus = n / p.n_minus;
    p.m_minus = std::gcd(r - 1, m);
    if (p.m_minus == 0) p.m_minus = m;
    p.m_plus = std::gcd(r + 1, m);

    // residue of r modulo the 2-part; the four admissible values
    if (s <= 1) {
        p.rho = 1;
    } else {
        int t = r % pow2(s);
        bool ok = t == 1 || t == pow2(s) - 1 ||
                  (s >= 3 && (t == pow2(s - 1) - 1 || t == pow2(s - 1) + 1));
        if (!ok)
            throw std::invalid_argument("r mod 2^s is not an admissible residue");
        p.rho = t;
    }

    // arithmetic identities tying the derived invariants together
    if (p.n_plus * p.n_minus != n || p.m_plus * p.m_minus != m ||
        std::gcd(p.m_plus, p.m_minus) != 1)
        throw std::logic_error("derived invariant factorization failed");
    if ((r + 1) % p.n_plus != 0)
        throw std::logic_error("n+ must divide r+1");
    if (s >= 1 && p.n_minus % 2 != 0)
        throw std::logic_error("n- must be even when s >= 1");
    // the (rho -> n-, n+) table
    int exp_nm, exp_np;
    if (p.rho == 1) {
        exp_nm = pow2(s) * p.m_minus;
        exp_np = p.m_plus;
    } else if (p.rho == pow2(s) - 1 || (s >= 3 && p.rho == pow2(s - 1) - 1)) {
        exp_nm = 2 * p.m_minus;
        exp_np = pow2(s - 1) * p.m_plus;
    } else {  // rho = 1 + 2^{s-1}, s >= 3
        exp_nm = pow2(s - 1) * p.m_minus;
        exp_np = 2 * p.m_plus;
    }
    if (exp_nm != p.n_minus || exp_np != p.n_plus)
        throw std::logic_error("(n-, n+) disagree with the residue-class table");

    return p;
}

TwoGroupKind Index2Params::sylow_kind() const {
    if (s == 0 || ptype == PresentationType::C) return TwoGroupKind::Cyclic;
    if (ptype == PresentationType::B) {
        if (s == 1) return TwoGroupKind::Cyclic;
        if (rho == pow2(s) - 1) return TwoGroupKind::GeneralizedQuaternion;
        return TwoGroupKind::AbelianNoncyclic;
    }
    if (rho == 1) return TwoGroupKind::AbelianNoncyclic;
    if (rho == pow2(s) - 1) return TwoGroupKind::Dihedral;
    if (s >= 3 && rho == pow2(s - 1) - 1) return TwoGroupKind::SemiDihedral;
    return TwoGroupKind::OrdinaryMetacyclic;
}

std::string Index2Params::name() const {
    int order2n = 2 * n;
    if (r == 1 || n == 1) {
        bool cyclic = ptype != PresentationType::A || s == 0;
        if (cyclic) return "C" + std::to_string(order2n);
        return "C2xC" + std::to_string(n);
    }
    if (r == n - 1) {
        if (ptype == PresentationType::A) return "D" + std::to_string(order2n);
        if (ptype == PresentationType::B) return "Q" + std::to_string(order2n);
    }
    if (ptype == PresentationType::A && m == 1) {
        if (r == pow2(s - 1) - 1) return "SD" + std::to_string(order2n);
        if (r == pow2(s - 1) + 1) return "M" + std::to_string(order2n);
    }
    return "G(s=" + std::to_string(s) + ",m=" + std::to_string(m) + ",r=" +
           std::to_string(r) + "," + to_string(ptype) + ")";
}

FiniteGroup build_group(const Index2Params& p) {
    int n = p.n, order = 2 * n;
    int c = 0;  // t^2 = a^c
    if (p.ptype == PresentationType::B) c = n / 2;
    if (p.ptype == PresentationType::C) c = p.m;

    // element a*n + x encodes t^a a^x;
    // (t^a a^x)(t^b a^y) = t^{a+b} a^{x r^b + y}, then t^2 -> a^c
    std::vector<int> table(order * order);
    for (int a = 0; a < 2; ++a)
        for (int x = 0; x < n; ++x)
            for (int b = 0; b < 2; ++b)
                for (int y = 0; y < n; ++y) {
                    long long e = static_cast<long long>(x) * (b ? p.r : 1) + y;
                    if (a && b) e += c;
                    int head = (a + b) % 2;
                    table[(a * n + x) * order + (b * n + y)] =
                        head * n + static_cast<int>(e % n);
                }

    std::vector<std::string> labels;
    labels.reserve(order);
    for (int a = 0; a < 2; ++a)
        for (int x = 0; x < n; ++x) {
            std::string lab;
            if (a == 0) {
                lab = x == 0 ? "1" : (x == 1 ? "a" : "a^" + std::to_string(x));
            } else {
                lab = x == 0 ? "t" : (x == 1 ? "t*a" : "t*a^" + std::to_string(x));
            }
            labels.push_back(std::move(lab));
        }
    return FiniteGroup(order, std::move(table), std::move(labels));
}

std::vector<Index2Params> enumerate_groups(int max_order) {
    if (max_order < 2) throw std::invalid_argument("max_order must be at least 2");
    max_order = std::min(max_order, 64);

    std::vector<Index2Params> out;
    for (int s = 0; 2 * pow2(s) <= max_order; ++s) {
        for (int m = 1; 2 * pow2(s) * m <= max_order; m += 2) {
            int n = pow2(s) * m;
            // square roots of 1 modulo m pick out the odd part of r
            std::vector<int> roots;
            for (int w = 0; w < m; ++w)
                if ((w * w) % m == 1 % m) roots.push_back(w);

            struct KindRow { int rho; PresentationType t; bool ok; };
            PresentationType cyc_t = s == 0   ? PresentationType::A
                                     : s == 1 ? PresentationType::B
                                              : PresentationType::C;
            const KindRow rows[] = {
                {1, cyc_t, true},                                      // cyclic Sylow
                {1, PresentationType::A, s >= 1},                      // abelian noncyclic
                {pow2(s) - 1, PresentationType::A, s >= 2},            // dihedral
                {pow2(s) - 1, PresentationType::B, s >= 2},            // generalized quaternion
                {pow2(std::max(s, 1) - 1) - 1, PresentationType::A, s >= 3},  // semidihedral
                {pow2(std::max(s, 1) - 1) + 1, PresentationType::A, s >= 3},  // metacyclic
            };
            for (const auto& row : rows) {
                if (!row.ok) continue;
                for (int w : roots) {
                    int r = n == 1 ? 1 : crt(s, m, row.rho, w);
                    out.push_back(Index2Params::make(s, m, r, row.t));
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const Index2Params& a, const Index2Params& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        if (a.s != b.s) return a.s < b.s;
        if (a.r != b.r) return a.r < b.r;
        return static_cast<int>(a.ptype) < static_cast<int>(b.ptype);
    });
    return out;
}

StructuralInvariants structural_invariants(const Index2Params& p, const FiniteGroup& g) {
    if (g.order() != p.order())
        throw std::invalid_argument("group order does not match parameters");
    StructuralInvariants out{g.commutator_subgroup(), g.center(),
                             0, 0};
    out.commutator_order = out.commutator.order();
    out.center_order = out.center.order();

    if (p.r == 1) {
        if (out.commutator_order != 1 || out.center_order != g.order())
            throw std::logic_error("abelian group with nontrivial commutator or small center");
        return out;
    }
    // closed forms <a^{n-}> and <a^{n+}>
    auto formula_comm = g.generated_subgroup(ElementSet::single(g.order(), p.n_minus % p.n));
    auto formula_cent = g.generated_subgroup(ElementSet::single(g.order(), p.n_plus % p.n));
    if (formula_comm.members != out.commutator.members)
        throw std::logic_error("commutator subgroup disagrees with <a^{n-}>");
    if (formula_cent.members != out.center.members)
        throw std::logic_error("center disagrees with <a^{n+}>");
    if (out.commutator_order != p.n_plus || out.center_order != p.n_minus)
        throw std::logic_error("|G'| or |Z(G)| disagrees with n+/n-");
    return out;
}

Subgroup centralizer_of_tau(const Index2Params& p, const FiniteGroup& g) {
    TwoGroupKind k = p.sylow_kind();
    if (k == TwoGroupKind::Cyclic || k == TwoGroupKind::GeneralizedQuaternion)
        throw std::invalid_argument(
            "centralizer_of_tau requires a Sylow 2-subgroup that is neither cyclic "
            "nor generalized quaternion");
    int tau = p.n;  // element t
    ElementSet gens(g.order());
    gens.insert(p.n_plus % p.n);
    gens.insert(tau);
    Subgroup h = g.generated_subgroup(gens);

    Subgroup direct = g.centralizer(ElementSet::single(g.order(), tau));
    if (h.members != direct.members)
        throw std::logic_error("<a^{n+}, t> disagrees with the computed centralizer of t");
    if (h.order() != 2 * p.n_minus)
        throw std::logic_error("centralizer of t has unexpected order");
    auto emb = subgroup_as_group(g, h);
    if (!emb.group.is_abelian() || emb.group.is_cyclic())
        throw std::logic_error("centralizer of t is not of the form C2 x C_{n-}");
    return h;
}

Subgroup reduction_subgroup(const Index2Params& p, const FiniteGroup& g, int q) {
    if (p.r == 1) throw std::invalid_argument("reduction_subgroup requires r != 1");
    if (!is_prime(q) || p.n_plus % q != 0)
        throw std::invalid_argument("q must be a prime divisor of n+");
    ElementSet gens(g.order());
    gens.insert((p.n_plus / q) % p.n);
    gens.insert(p.n);  // element t
    Subgroup h = g.generated_subgroup(gens);
    if (h.order() != 2 * p.n_minus * q)
        throw std::logic_error("reduction subgroup has unexpected order");
    auto emb = subgroup_as_group(g, h);
    if (emb.group.commutator_subgroup().order() != q)
        throw std::logic_error("reduction subgroup has |H'| != q");
    return h;
}

}  // namespace davlab
