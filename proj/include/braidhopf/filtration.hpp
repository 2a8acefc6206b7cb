#ifndef BRAIDHOPF_FILTRATION_HPP
#define BRAIDHOPF_FILTRATION_HPP

#include "braidhopf/structures.hpp"

#include <optional>
#include <vector>

namespace braidhopf {

/// Subspace of a coalgebra's carrier, given by an embedding of full column
/// rank.
struct Subobject {
    CatObject ambient;
    Matrix embedding;

    std::size_t dim() const noexcept { return embedding.cols(); }
    /// Every column of other lies in this subspace.
    bool contains(const Subobject& other) const;
};

/// Throws Error(shape_mismatch) if the embedding does not fit the ambient
/// object or is not of full column rank.
Subobject make_subobject(const CatObject& ambient, Matrix embedding);
Subobject whole(const BraidedBialgebra& a);

/// Projection onto the quotient by x, in the coordinates of the standard basis
/// vectors chosen greedily (ascending index) to complete a basis of x.
Matrix quotient_projection(const Subobject& x);

/// x ^ y = Ker[(p_x (x) p_y) delta].
Subobject wedge(const Subobject& x, const Subobject& y, const BraidedBialgebra& a);

/// delta maps x into x (x) x.
bool is_subcoalgebra(const Subobject& x, const BraidedBialgebra& a);

struct FiltrationReport {
    /// dims[k] is the dimension of the (k+1)-fold wedge power of B.
    std::vector<std::size_t> dims;
    /// First step whose dimension equals the final one, if the chain stopped
    /// growing before max_n ran out.
    std::optional<std::size_t> stabilized_at;
    bool exhaustive = false;
    std::vector<Subobject> steps;
};

/// Iterates x <- x ^ B starting from B, stopping when the dimension reaches
/// dim A, stops growing, or max_n steps have been taken. Throws
/// Error(precondition_failed) if B is not a subcoalgebra.
FiltrationReport b_adic_filtration(const BraidedBialgebra& a, const Subobject& b, std::size_t max_n = 16);

/// Coradical of an ordinary coalgebra: the annihilator of the Jacobson radical
/// of the dual algebra, found as the radical of its trace form. Throws
/// Error(backend_unsupported) outside Vec.
Subobject coradical(const BraidedBialgebra& a);

/// Diagnostic report on the hypotheses of the existence theorem for weak
/// projections: B has an antipode, B has a total integral, the B-adic
/// filtration is exhaustive, and (in Vec) Corad(A) lies in B.
Report check_magnum_preconditions(const BraidedBialgebra& a, const BraidedBialgebra& b, const Morphism& sigma,
                                  std::size_t max_n = 16);

}  // namespace braidhopf

#endif
