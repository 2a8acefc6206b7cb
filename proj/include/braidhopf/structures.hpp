#ifndef BRAIDHOPF_STRUCTURES_HPP
#define BRAIDHOPF_STRUCTURES_HPP

#include "braidhopf/category.hpp"

#include <optional>
#include <string>
#include <vector>

namespace braidhopf {

enum class StructureKind { coalgebra, bialgebra, hopf };

const char* structure_kind_name(StructureKind kind);

/// Structure-constant (co)algebra in a backend. For a pure coalgebra the
/// multiplication and unit are left empty; for a bialgebra the antipode is
/// absent. Nothing about the axioms is assumed: they are checked on demand.
struct BraidedBialgebra {
    std::string name;
    Backend backend;
    CatObject carrier;
    std::vector<std::string> basis;
    StructureKind kind = StructureKind::bialgebra;
    Morphism m;      // A (x) A -> A
    Morphism u;      // 1 -> A
    Morphism delta;  // A -> A (x) A
    Morphism eps;    // A -> 1
    std::optional<Morphism> antipode;

    std::size_t dim() const noexcept { return carrier.dim(); }
    bool has_algebra() const noexcept { return kind != StructureKind::coalgebra; }
    CatObject unit_object() const { return backend.unit(); }
    CatObject square() const { return tensor_obj(carrier, carrier); }
    Morphism id() const { return identity(carrier); }
    /// Throws Error(precondition_failed) when no antipode is present.
    const Morphism& s() const;
};

/// Assembles a bialgebra from bare matrices using the given carrier.
BraidedBialgebra make_bialgebra(std::string name, Backend backend, CatObject carrier, std::vector<std::string> basis,
                                const Matrix& m, const Matrix& u, const Matrix& delta, const Matrix& eps,
                                std::optional<Matrix> antipode = std::nullopt);

/// Backend validity of the structure maps, associativity and both unit laws.
Report verify_algebra(const BraidedBialgebra& a);
/// Backend validity of the structure maps, coassociativity and both counit laws.
Report verify_coalgebra(const BraidedBialgebra& a);
/// Algebra and coalgebra axioms plus the braided compatibility
/// delta m = (m (x) m)(A (x) c_{A,A} (x) A)(delta (x) delta), eps multiplicative,
/// delta u = u (x) u and eps u = 1.
Report verify_bialgebra(const BraidedBialgebra& a);
/// Both antipode laws, anti-comultiplicativity delta S = (S (x) S) c delta and
/// anti-multiplicativity S m = m (S (x) S) c.
Report verify_antipode(const BraidedBialgebra& h);
/// verify_bialgebra followed by verify_antipode.
Report verify_hopf(const BraidedBialgebra& h);

/// c_{A,A} delta == delta.
bool is_cocommutative(const BraidedBialgebra& a);

/// Solves m(S (x) A)delta = u eps for S with the other structure fixed.
/// Returns the particular solution or nullopt if none exists.
std::optional<Matrix> solve_antipode(const BraidedBialgebra& h);

struct Integral {
    Morphism lambda;  // B -> 1
};

/// Solves (B (x) lambda)delta = u lambda and lambda u = 1 exactly, with the
/// backend constraints on lambda (grade preservation, invariance). Returns the
/// particular solution or nullopt when the system is inconsistent.
std::optional<Integral> solve_total_integral(const BraidedBialgebra& h);

/// Checks both integral equations for a given functional.
Report verify_total_integral(const BraidedBialgebra& h, const Morphism& lambda);

/// theta = (lambda m (x) B)(B (x) S (x) B)(B (x) delta) : B (x) B -> B.
Morphism build_cosep_section(const BraidedBialgebra& h, const Integral& integral);

/// The symmetric form of theta (ec_lambda), left and right colinearity,
/// theta delta = Id and right B-linearity of theta.
Report verify_cosep_section(const BraidedBialgebra& h, const Integral& integral, const Morphism& theta);

/// lambda = eps theta (B (x) u), the integral induced by a section.
Morphism integral_from_section(const BraidedBialgebra& h, const Morphism& theta);

/// Right B-module action on a tensor product of right modules:
/// mu_{M (x) N} = (mu_M (x) mu_N)(M (x) c_{N,B} (x) B)(M (x) N (x) delta).
Morphism tensor_module_action(const BraidedBialgebra& b, const Morphism& mu_m, const Morphism& mu_n);

/// Single-entry change of a structure map, used for mutation experiments.
enum class StructureMap { m, u, delta, eps, antipode };
BraidedBialgebra with_entry(const BraidedBialgebra& a, StructureMap which, std::size_t row, std::size_t col,
                            const Scalar& value);

}  // namespace braidhopf

#endif
