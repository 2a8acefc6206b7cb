#ifndef BRAIDHOPF_GROUP_ALGEBRA_HPP
#define BRAIDHOPF_GROUP_ALGEBRA_HPP

#include "braidhopf/structures.hpp"

#include <string>
#include <vector>

namespace braidhopf {

/// Group Hopf algebra kG in Vec: basis named after the elements, group-like
/// comultiplication, S(g) = g^-1.
BraidedBialgebra group_algebra(const FiniteGroup& g, const std::string& name = "");

/// Group Hopf algebra of the subgroup formed by the listed elements, with
/// basis names taken from the ambient group. Throws Error(group_law) if the
/// elements are not closed under the product.
BraidedBialgebra subgroup_algebra(const FiniteGroup& g, const std::vector<std::size_t>& elements,
                                  const std::string& name = "");

/// Indices of the named elements.
std::vector<std::size_t> element_indices(const FiniteGroup& g, const std::vector<std::string>& names);

/// Matrix sending each basis vector of `from` to the basis vector of `to`
/// with the same name. Throws Error(parse) on a missing name.
Matrix inclusion_by_name(const BraidedBialgebra& from, const BraidedBialgebra& to);

/// Projection kG -> kH sending g = k h (k in the transversal, h in H) to h.
/// Throws Error(precondition_failed) unless every element factors uniquely.
Matrix factorization_projection(const FiniteGroup& g, const std::vector<std::size_t>& transversal,
                                const BraidedBialgebra& h_algebra);

/// Lexicographically least element name in every left coset gH.
std::vector<std::size_t> least_coset_representatives(const FiniteGroup& g, const std::vector<std::size_t>& h);

/// The regular Yetter-Drinfeld module over G: basis G, deg(x) = x, action by
/// conjugation.
CatObject conjugation_object(const Backend& yd);

}  // namespace braidhopf

#endif
