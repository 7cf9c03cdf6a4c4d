#pragma once

#include <string>
#include <vector>

#include "davlab/group.hpp"

namespace davlab {

enum class PresentationType { A, B, C };

/// Isomorphism type of the Sylow 2-subgroup of an index-2 group.
enum class TwoGroupKind {
    Cyclic,
    AbelianNoncyclic,
    Dihedral,
    GeneralizedQuaternion,
    SemiDihedral,
    OrdinaryMetacyclic,
};

std::string to_string(PresentationType t);
std::string to_string(TwoGroupKind k);
PresentationType presentation_type_from_string(const std::string& s);

/// Parameters (s, m, r, type) of a group with a cyclic index-2 subgroup:
///   G = < a, t | a^n = 1, a t = t a^r, t^2 = c >,  n = 2^s m, |G| = 2n,
/// with c = 1 (A), a^{n/2} (B) or a^m (C), plus the derived invariants
/// n^- = gcd(r-1, n), n^+ = n / n^-, m^- = gcd(r-1, m), m^+ = gcd(r+1, m)
/// and rho, the residue of r modulo 2^s determined by the Sylow 2-subgroup.
struct Index2Params {
    int s = 0;
    int m = 1;
    int r = 1;
    PresentationType ptype = PresentationType::A;

    // derived
    int n = 1;
    int n_minus = 1, n_plus = 1;
    int m_minus = 1, m_plus = 1;
    int rho = 1;

    /// Validates (s, m, r, ptype), computes the derived invariants and the
    /// Sylow kind. Throws std::invalid_argument naming the failed constraint.
    static Index2Params make(int s, int m, int r, PresentationType ptype);

    int order() const { return 2 * n; }
    bool is_abelian() const { return r == 1; }
    TwoGroupKind sylow_kind() const;

    /// Short display name, e.g. "S3", "Q12", or "G(s=..,m=..,r=..,A)".
    std::string name() const;
};

/// Cayley table for the parameters. Element index a*n + x encodes t^a a^x;
/// labels are "1", "a", "a^2", ..., "t", "t*a", ...
FiniteGroup build_group(const Index2Params& p);

/// One entry per isomorphism class of groups with a cyclic index-2 subgroup
/// of order <= max_order. Type overlaps are deduplicated: the cyclic-Sylow
/// family is emitted as type A when s = 0 and type B when s = 1.
std::vector<Index2Params> enumerate_groups(int max_order);

struct StructuralInvariants {
    Subgroup commutator;  // computed directly
    Subgroup center;      // computed directly
    int commutator_order;
    int center_order;
};

/// G' and Z(G), with the closed-form values <a^{n-}> and <a^{n+}> checked
/// against the direct computations. Throws std::logic_error on mismatch.
StructuralInvariants structural_invariants(const Index2Params& p, const FiniteGroup& g);

/// C_G(t) = <a^{n+}, t>, defined when the Sylow 2-subgroup is neither
/// cyclic nor generalized quaternion. Verified abelian and non-cyclic.
Subgroup centralizer_of_tau(const Index2Params& p, const FiniteGroup& g);

/// H = <a^{n+/q}, t> for a prime q dividing n+, a group of order 2 n^- q
/// with |H'| = q (verified by direct closure).
Subgroup reduction_subgroup(const Index2Params& p, const FiniteGroup& g, int q);

}  // namespace davlab
