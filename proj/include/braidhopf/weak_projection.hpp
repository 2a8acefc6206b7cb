#ifndef BRAIDHOPF_WEAK_PROJECTION_HPP
#define BRAIDHOPF_WEAK_PROJECTION_HPP

#include "braidhopf/structures.hpp"

#include <optional>
#include <string>

namespace braidhopf {

/// The nine maps attached to a weak projection.
struct DiagramMaps {
    Morphism m_r;      // p m_A (i (x) i)          : R (x) R -> R
    Morphism u_r;      // p u_A                    : 1 -> R
    Morphism delta_r;  // (p (x) p) delta_A i      : R -> R (x) R
    Morphism eps_r;    // eps_A i                  : R -> 1
    Morphism xi;       // pi m_A (i (x) i)         : R (x) R -> B
    Morphism b_mu_r;   // p m_A (sigma (x) i)      : B (x) R -> R, left action of B on R
    Morphism mu_r_b;   // p m_A (i (x) sigma)      : R (x) B -> R, right action of B on R
    Morphism b_rho_r;  // (pi (x) p) delta_A i     : R -> B (x) R, left coaction
    Morphism mu_b_r;   // pi m_A (sigma (x) i)     : B (x) R -> B
};

/// A bialgebra A, a Hopf subalgebra B with inclusion sigma and a candidate
/// weak projection pi, plus everything derived from them.
struct WeakProjectionContext {
    BraidedBialgebra a;
    BraidedBialgebra b;
    Morphism sigma;  // B -> A
    Morphism pi;     // A -> B

    Morphism phi_proj;  // sigma S_B pi
    Morphism pi1;       // sigma pi
    Morphism pi2;       // m_A (A (x) phi_proj) delta_A

    CatObject r;
    Morphism i;  // R -> A
    Morphism p;  // A -> R

    DiagramMaps maps;

    /// R with its derived coalgebra and multiplication data, no antipode.
    BraidedBialgebra r_bialgebra() const;
};

/// Conditions making pi a weak projection: sigma a bialgebra morphism, pi a
/// coalgebra morphism, right B-linearity pi m_A (A (x) sigma) = m_B (pi (x) B)
/// and pi sigma = Id_B.
Report verify_weak_projection(const BraidedBialgebra& a, const BraidedBialgebra& b, const Morphism& sigma,
                              const Morphism& pi);

/// Context with the inputs filled in and nothing derived yet.
WeakProjectionContext make_context(BraidedBialgebra a, BraidedBialgebra b, Morphism sigma, Morphism pi);

/// Fills phi_proj, pi1 and pi2.
void build_operators(WeakProjectionContext& ctx);

/// The projector identities, one check each. The product-splitting identity
/// is checked with both orderings of the right hand side; the ordering
/// Pi_1 (x) Pi_2 is recorded as a note rather than a check.
Report run_bd_suite(const WeakProjectionContext& ctx);

/// R as the equalizer of (A (x) pi) delta_A and A (x) u_B, with p solving
/// i p = Pi_2. In graded backends R carries the induced grading (and action).
/// Throws Error(split_failure) when i p = Pi_2 has no solution or p i != Id.
void compute_diagram(WeakProjectionContext& ctx);

/// Fills the nine maps of the diagram.
void derive_structure_maps(WeakProjectionContext& ctx);

/// Checks on the diagram: i p = Pi_2, p i = Id, span(i) = image(Pi_2),
/// dim R * dim B = dim A, the coalgebra axioms of R, p a coalgebra morphism,
/// eps_B pi = eps_A and pi i = u_B eps_R.
Report verify_diagram(const WeakProjectionContext& ctx);

/// make_context, build_operators, compute_diagram and derive_structure_maps.
WeakProjectionContext build_context(BraidedBialgebra a, BraidedBialgebra b, Morphism sigma, Morphism pi);

/// xi == u_B (eps_R (x) eps_R).
bool xi_is_trivial(const WeakProjectionContext& ctx);

struct WeakProjectionSearch {
    std::optional<Morphism> pi;
    /// Dimension of the affine family cut out by the linear conditions, or
    /// nullopt when they are inconsistent.
    std::optional<std::size_t> family_dim;
    std::size_t candidates_tested = 0;
    std::size_t unknowns = 0;
    std::size_t constraint_rank = 0;
    Report report;
};

/// Solves the linear conditions on pi (pi sigma = Id, right B-linearity,
/// eps_B pi = eps_A, backend constraints) and tests the comultiplicativity of
/// the particular solution and of particular + each homogeneous basis vector.
/// A heuristic: it can miss solutions away from those candidates.
WeakProjectionSearch search_weak_projection(const BraidedBialgebra& a, const BraidedBialgebra& b,
                                            const Morphism& sigma);

}  // namespace braidhopf

#endif
