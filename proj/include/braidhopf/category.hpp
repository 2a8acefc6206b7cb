#ifndef BRAIDHOPF_CATEGORY_HPP
#define BRAIDHOPF_CATEGORY_HPP

#include "braidhopf/group.hpp"
#include "braidhopf/matrix.hpp"
#include "braidhopf/report.hpp"

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace braidhopf {

/// Finite-dimensional object of a strict braided category backend.
/// The grading assigns a group element (by index) to each basis vector; the
/// action holds one dim x dim matrix per group element, in group order.
class CatObject {
public:
    using GroupPtr = std::shared_ptr<const FiniteGroup>;

    CatObject() = default;
    explicit CatObject(std::size_t dim) : dim_(dim) {}
    /// An empty action vector means "no action".
    CatObject(std::size_t dim, GroupPtr group, std::vector<std::size_t> grading, std::vector<Matrix> action = {});

    std::size_t dim() const noexcept { return dim_; }
    bool graded() const noexcept { return grading_.has_value(); }
    const std::vector<std::size_t>& grading() const;
    std::size_t degree(std::size_t basis_index) const { return grading().at(basis_index); }
    bool has_action() const noexcept { return action_ != nullptr; }
    const std::vector<Matrix>& actions() const;
    const Matrix& action(std::size_t group_element) const { return actions().at(group_element); }
    const GroupPtr& group_ptr() const noexcept { return group_; }

    /// Same dimension and grading. Actions are not compared.
    bool compatible_with(const CatObject& other) const;

private:
    std::size_t dim_ = 1;
    GroupPtr group_;
    std::optional<std::vector<std::size_t>> grading_;
    std::shared_ptr<const std::vector<Matrix>> action_;
};

/// Tensor product with x-major basis order. Gradings multiply pointwise in
/// the group, actions act diagonally. A one-dimensional ungraded object acts
/// as the unit. Throws Error(backend_mismatch) when the two objects carry
/// incompatible data.
CatObject tensor_obj(const CatObject& x, const CatObject& y);

/// Morphism between objects; mat is cod.dim() x dom.dim().
class Morphism {
public:
    Morphism() = default;
    Morphism(CatObject dom, CatObject cod, Matrix mat);

    const CatObject& dom() const noexcept { return dom_; }
    const CatObject& cod() const noexcept { return cod_; }
    const Matrix& mat() const noexcept { return mat_; }

private:
    CatObject dom_;
    CatObject cod_;
    Matrix mat_;
};

Morphism identity(const CatObject& x);
Morphism zero_morphism(const CatObject& dom, const CatObject& cod);

/// Composition f after g. Throws Error(shape_mismatch) unless g.cod() is
/// compatible with f.dom().
Morphism operator*(const Morphism& f, const Morphism& g);
Morphism operator+(const Morphism& f, const Morphism& g);
Morphism operator-(const Morphism& f, const Morphism& g);
Morphism operator*(const Scalar& s, const Morphism& f);

enum class BackendKind { vec, super, sign_graded, yetter_drinfeld };

/// One of the four strict braided categories: plain vector spaces, super
/// vector spaces, G-graded spaces with a +-1 bicharacter, and Yetter-Drinfeld
/// modules over a finite group. Associators and unit constraints are
/// identities.
class Backend {
public:
    static Backend vec();
    static Backend super();
    /// bichar is row-major |G| x |G| with entries +-1; G must be abelian and
    /// bichar a bicharacter (checked).
    static Backend sign_graded(FiniteGroup group, std::vector<int> bichar);
    static Backend yetter_drinfeld(FiniteGroup group);

    BackendKind kind() const noexcept { return kind_; }
    bool has_group() const noexcept { return group_ != nullptr; }
    const FiniteGroup& group() const;
    std::string description() const;
    bool requires_grading() const noexcept { return kind_ != BackendKind::vec; }
    bool requires_action() const noexcept { return kind_ == BackendKind::yetter_drinfeld; }
    int chi(std::size_t g, std::size_t h) const;

    CatObject unit() const;
    /// Throws MissingGrading, MissingAction or BackendMismatch.
    void validate_object(const CatObject& x) const;
    CatObject tensor(const CatObject& x, const CatObject& y) const;

    Morphism braiding(const CatObject& x, const CatObject& y) const;
    Morphism braiding_inv(const CatObject& x, const CatObject& y) const;

    /// Grade preservation and, for Yetter-Drinfeld, equivariance.
    Report verify_morphism(const Morphism& f, const std::string& name = "morphism") const;

    friend bool operator==(const Backend& a, const Backend& b);

private:
    BackendKind kind_ = BackendKind::vec;
    std::shared_ptr<const FiniteGroup> group_;
    std::vector<int> bichar_;
};

Morphism tensor(const Morphism& f, const Morphism& g);

template <class... Rest>
Morphism tensor(const Morphism& f, const Morphism& g, const Morphism& h, const Rest&... rest) {
    return tensor(tensor(f, g), h, rest...);
}

/// Homogeneous linear constraints describing which cod.dim() x dom.dim()
/// matrices are morphisms of the backend. Unknowns are the matrix entries in
/// column-major order (index col * cod.dim() + row). Vec yields zero rows.
Matrix morphism_constraints(const Backend& backend, const CatObject& dom, const CatObject& cod);

/// Sum of the standard basis of the space of morphisms dom -> cod, a generic
/// element used to sample naturality.
Morphism generic_morphism(const Backend& backend, const CatObject& dom, const CatObject& cod);

/// Records a matrix identity between two morphisms in a report.
void expect_equal(Report& report, const std::string& name, const Morphism& lhs, const Morphism& rhs);

using MorphismPair = std::pair<Morphism, Morphism>;

/// One check that holds when every listed identity holds. A failure names
/// the first failing identity (1-based) and its first differing entry.
void expect_all(Report& report, const std::string& name, const std::vector<MorphismPair>& identities);

/// Both hexagon identities on (x, y, z), invertibility of every braiding
/// involved, and naturality (g (x) f) c = c (f (x) g) for each sample pair.
Report verify_braiding_axioms(const Backend& backend, const CatObject& x, const CatObject& y, const CatObject& z,
                              const std::vector<MorphismPair>& samples = {});

}  // namespace braidhopf

#endif
