#pragma once

#include <random>
#include <vector>

#include "davlab/group.hpp"
#include "davlab/sequence.hpp"

namespace davlab {

struct CauchyDavenportResult {
    int sumset_size;
    int bound;
    bool ok;
};

/// Iterated sumset of nonempty subsets of Z_p, p prime, against the bound
/// min{p, sum |A_i| - n + 1}.
CauchyDavenportResult cauchy_davenport_check(const std::vector<ElementSet>& sets, int p);

struct DgmResult {
    ElementSet sums;        // Sigma_n(S)
    ElementSet stabilizer;  // H(Sigma_n(S))
    int bound;
    bool ok;
};

/// Lower bound on |Sigma_n(S)| over an abelian group: with H the stabilizer
/// of Sigma_n(S), |Sigma_n(S)| >= (sum over G/H of min{n, v_g(phi_H(S))}
/// - n + 1) |H|.
DgmResult dgm_check(const Sequence& s, int n);

/// Both sides of the identity
///   { sigma(T) - sigma(S T^{-1}) : T | S, |T| = n } = Sigma_n(2S) - sigma(S)
/// computed independently (left by subsequence enumeration, right via the
/// doubled sequence) and compared.
bool key_equivalence_check(const Sequence& s, int n);

struct FactorizationQuad {
    Sequence u1, u2, v1, v2;
};

/// For S = T1 T2 over Z_{2p} (p prime) with |T1| = |T2| = |S|/2, |S| >= 2p+4
/// and sigma(T1) - sigma(T2) = |T1| x, where x = p is the order-2 element:
/// produce U1 U2 V1 V2 = S with |U1| = |U2| <= 2, |V1| = |V2|, and
/// sigma(U1) - sigma(U2) = |U1| x, sigma(V1) - sigma(V2) = |V1| x.
/// Throws std::logic_error if no quad exists (a falsifying event).
FactorizationQuad lemma43_factorize(int p, const Sequence& t1, const Sequence& t2);

/// Random valid (T1, T2) instance over Z_{2p} of total length >= 2p+4.
std::pair<Sequence, Sequence> random_factorization_instance(const FiniteGroup& z2p,
                                                            int p, int total_len,
                                                            std::mt19937_64& rng);

/// Product-one test for a sequence over the dicyclic group of order 4p whose
/// terms all lie in the coset t<a>: R is product-one iff |R| is even and the
/// exponent multiset splits into halves whose sums differ by |R|/2 * p
/// modulo 2p. Computed from that characterization, not from pi(R).
bool dicyclic_product_one_check(const FiniteGroup& g, int p, const Sequence& r);

}  // namespace davlab
