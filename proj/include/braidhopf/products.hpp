#ifndef BRAIDHOPF_PRODUCTS_HPP
#define BRAIDHOPF_PRODUCTS_HPP

#include "braidhopf/weak_projection.hpp"

namespace braidhopf {

/// Two bialgebras with a left action tr : B (x) R -> R of B on R and a right
/// action tl : B (x) R -> B of R on B.
struct MatchedPair {
    BraidedBialgebra r;
    BraidedBialgebra b;
    Morphism tr;
    Morphism tl;
};

/// delta_{X (x) Y} = (X (x) c_{X,Y} (x) Y)(delta_X (x) delta_Y).
Morphism tensor_coproduct(const BraidedBialgebra& x, const BraidedBialgebra& y);

/// The seven matched-pair conditions, one check each.
Report check_matched_pair(const MatchedPair& mp);

/// Double cross product bialgebra on R (x) B.
BraidedBialgebra build_double_cross(const MatchedPair& mp);

/// Actions tr = eps_B (x) R and tl = B (x) eps_R.
MatchedPair trivial_matched_pair(BraidedBialgebra r, BraidedBialgebra b);

/// Matched pair of group algebras from an exact factorization G = R B:
/// b r = (b |> r)(b <| r). Throws Error(precondition_failed) when the
/// factorization is not exact.
MatchedPair group_matched_pair(const FiniteGroup& g, const std::vector<std::size_t>& r_elements,
                               const std::vector<std::size_t>& b_elements);

/// phi : X -> A is an invertible algebra and coalgebra morphism.
Report verify_bialgebra_isomorphism(const Morphism& phi, const BraidedBialgebra& x, const BraidedBialgebra& a);

/// f : X -> Y preserves multiplication, unit, comultiplication and counit.
Report verify_bialgebra_morphism(const Morphism& f, const BraidedBialgebra& x, const BraidedBialgebra& y);

struct CrossProductData {
    BraidedBialgebra literal;      // structure from the explicit composites
    BraidedBialgebra transported;  // A's structure conjugated by the isomorphism
    Morphism iso_fwd;              // m_A (i (x) sigma) : R (x) B -> A
    Morphism iso_bwd;              // (p (x) pi) delta_A : A -> R (x) B
    Report report;
};

/// Cross product bialgebra R x| B of a weak projection context. Builds the
/// structure both from the explicit composites and by transport along
/// iso_fwd / iso_bwd, and compares them entry by entry. With strict set, a
/// disagreement throws Error(transcription_mismatch).
CrossProductData build_cross_product(const WeakProjectionContext& ctx, bool strict = true);

/// sigma : B -> A and i : R -> A with phi_factor = m_A (i (x) sigma)
/// invertible; theta = m_A (sigma (x) i) and psi = phi_factor^-1 theta.
struct FactorizationContext {
    BraidedBialgebra a;
    BraidedBialgebra b;
    BraidedBialgebra r;
    Morphism sigma;
    Morphism i;
    Morphism phi_factor;
    Morphism theta;
    Morphism psi;
};

/// Throws Error(not_invertible) when phi_factor is singular.
FactorizationContext make_factorization(BraidedBialgebra a, BraidedBialgebra b, BraidedBialgebra r, Morphism sigma,
                                        Morphism i);

struct DerivedPair {
    MatchedPair pair;
    Report report;
};

/// tr = (R (x) eps_B) psi and tl = (eps_R (x) B) psi, together with every
/// relation psi satisfies, the matched-pair conditions, and the check that
/// phi_factor is a bialgebra isomorphism from the double cross product to A.
DerivedPair derive_actions_general(const FactorizationContext& fc);

/// Actions from a weak projection on a cocommutative A with trivial xi:
/// tr = p m_A (sigma (x) i), tl = pi m_A (sigma (x) i). Throws
/// Error(precondition_failed) naming the failed hypothesis.
DerivedPair derive_actions_cocomm(const WeakProjectionContext& ctx);

/// Smash product R # B built from a left action tr : B (x) R -> R.
BraidedBialgebra build_smash(const BraidedBialgebra& r, const BraidedBialgebra& b, const Morphism& tr);

/// Adjoint action m_A (m_A (x) A)(sigma (x) i (x) sigma S_B)(B (x) c_{B,R})(delta_B (x) R).
Morphism adjoint_action(const WeakProjectionContext& ctx);

/// On a cocommutative context with trivial xi: tl trivial exactly when pi is
/// left B-linear; when tl is trivial also i tr = ad, A is isomorphic to R # B
/// and the double cross product multiplication equals the smash product one.
/// Always reports pi i = u_B eps_R.
Report bosonization_checks(const WeakProjectionContext& ctx);

}  // namespace braidhopf

#endif
