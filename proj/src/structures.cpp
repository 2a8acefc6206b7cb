#include "braidhopf/structures.hpp"

#include "braidhopf/error.hpp"
#include "braidhopf/linalg.hpp"

#include <map>

namespace braidhopf {

namespace {

void check_maps(Report& r, const BraidedBialgebra& a, const Morphism& f, const std::string& name) {
    Report v = a.backend.verify_morphism(f, name);
    r.merge(v);
}

// Appends the homogeneous rows of constraints to an equation system whose
// unknowns are numbered the same way.
void append_rows(std::vector<std::vector<Matrix::Entry>>& rows, const Matrix& constraints) {
    const Matrix t = constraints.transpose();
    for (std::size_t k = 0; k < t.cols(); ++k) {
        auto col = t.column(k);
        rows.emplace_back(col.begin(), col.end());
    }
}

Matrix rows_to_matrix(std::vector<std::vector<Matrix::Entry>> rows, std::size_t unknowns) {
    Matrix t(unknowns, rows.size());
    for (std::size_t k = 0; k < rows.size(); ++k) t.assign_column(k, std::move(rows[k]));
    return t.transpose();
}

std::vector<Matrix::Entry> sorted_entries(std::map<std::size_t, Scalar>& acc) {
    std::vector<Matrix::Entry> out;
    for (auto& [k, v] : acc)
        if (!is_zero(v)) out.push_back({k, v});
    return out;
}

}  // namespace

const char* structure_kind_name(StructureKind kind) {
    switch (kind) {
        case StructureKind::coalgebra: return "coalgebra";
        case StructureKind::bialgebra: return "bialgebra";
        case StructureKind::hopf: return "hopf";
    }
    return "?";
}

const Morphism& BraidedBialgebra::s() const {
    if (!antipode) throw Error(ErrorKind::precondition_failed, name + " has no antipode");
    return *antipode;
}

BraidedBialgebra make_bialgebra(std::string name, Backend backend, CatObject carrier, std::vector<std::string> basis,
                                const Matrix& m, const Matrix& u, const Matrix& delta, const Matrix& eps,
                                std::optional<Matrix> antipode) {
    BraidedBialgebra a;
    a.name = std::move(name);
    a.backend = std::move(backend);
    a.carrier = std::move(carrier);
    a.basis = std::move(basis);
    const CatObject one = a.backend.unit();
    const CatObject aa = a.square();
    a.m = Morphism(aa, a.carrier, m);
    a.u = Morphism(one, a.carrier, u);
    a.delta = Morphism(a.carrier, aa, delta);
    a.eps = Morphism(a.carrier, one, eps);
    if (antipode) {
        a.antipode = Morphism(a.carrier, a.carrier, *antipode);
        a.kind = StructureKind::hopf;
    }
    return a;
}

Report verify_algebra(const BraidedBialgebra& a) {
    Report r;
    check_maps(r, a, a.m, "m");
    check_maps(r, a, a.u, "u");
    const Morphism id = a.id();
    expect_equal(r, "associativity", a.m * tensor(a.m, id), a.m * tensor(id, a.m));
    expect_equal(r, "left_unit", a.m * tensor(a.u, id), id);
    expect_equal(r, "right_unit", a.m * tensor(id, a.u), id);
    return r;
}

Report verify_coalgebra(const BraidedBialgebra& a) {
    Report r;
    check_maps(r, a, a.delta, "delta");
    check_maps(r, a, a.eps, "eps");
    const Morphism id = a.id();
    expect_equal(r, "coassociativity", tensor(a.delta, id) * a.delta, tensor(id, a.delta) * a.delta);
    expect_equal(r, "left_counit", tensor(a.eps, id) * a.delta, id);
    expect_equal(r, "right_counit", tensor(id, a.eps) * a.delta, id);
    return r;
}

Report verify_bialgebra(const BraidedBialgebra& a) {
    Report r;
    r.merge(verify_algebra(a));
    r.merge(verify_coalgebra(a));
    const Morphism id = a.id();
    const Morphism c = a.backend.braiding(a.carrier, a.carrier);
    expect_equal(r, "compatibility", a.delta * a.m,
                 tensor(a.m, a.m) * tensor(id, c, id) * tensor(a.delta, a.delta));
    expect_equal(r, "counit_multiplicative", a.eps * a.m, tensor(a.eps, a.eps));
    expect_equal(r, "comul_unit", a.delta * a.u, tensor(a.u, a.u));
    expect_equal(r, "counit_unit", a.eps * a.u, identity(a.unit_object()));
    return r;
}

Report verify_antipode(const BraidedBialgebra& h) {
    Report r;
    if (!h.antipode) {
        r.expect("antipode_present", false, "no antipode given");
        return r;
    }
    const Morphism& s = *h.antipode;
    check_maps(r, h, s, "antipode");
    const Morphism id = h.id();
    const Morphism ue = h.u * h.eps;
    const Morphism c = h.backend.braiding(h.carrier, h.carrier);
    expect_equal(r, "antipode_left", h.m * tensor(s, id) * h.delta, ue);
    expect_equal(r, "antipode_right", h.m * tensor(id, s) * h.delta, ue);
    expect_equal(r, "anticomultiplicative", h.delta * s, tensor(s, s) * c * h.delta);
    expect_equal(r, "antimultiplicative", s * h.m, h.m * tensor(s, s) * c);
    return r;
}

Report verify_hopf(const BraidedBialgebra& h) {
    Report r = verify_bialgebra(h);
    r.merge(verify_antipode(h));
    return r;
}

bool is_cocommutative(const BraidedBialgebra& a) {
    return (a.backend.braiding(a.carrier, a.carrier) * a.delta).mat() == a.delta.mat();
}

std::optional<Matrix> solve_antipode(const BraidedBialgebra& h) {
    const std::size_t n = h.dim();
    const Matrix& m = h.m.mat();
    const Matrix& d = h.delta.mat();
    const Matrix ue = (h.u * h.eps).mat();
    // Unknown S[j,k] has index k*n + j. Equations (r, c) for the left law
    // come first, then the right law.
    std::vector<std::map<std::size_t, Scalar>> eqs(2 * n * n);
    for (std::size_t c = 0; c < n; ++c)
        for (const auto& de : d.column(c)) {
            const std::size_t k = de.row / n, l = de.row % n;
            for (std::size_t j = 0; j < n; ++j) {
                for (const auto& me : m.column(j * n + l)) eqs[me.row * n + c][k * n + j] += de.value * me.value;
                for (const auto& me : m.column(k * n + j))
                    eqs[n * n + me.row * n + c][l * n + j] += de.value * me.value;
            }
        }
    std::vector<std::vector<Matrix::Entry>> rows;
    Vector rhs;
    for (std::size_t e = 0; e < eqs.size(); ++e) {
        rows.push_back(sorted_entries(eqs[e]));
        const std::size_t idx = e % (n * n);
        rhs.push_back(ue.at(idx / n, idx % n));
    }
    const Matrix extra = morphism_constraints(h.backend, h.carrier, h.carrier);
    append_rows(rows, extra);
    rhs.resize(rows.size());
    auto sol = solve_affine(rows_to_matrix(std::move(rows), n * n), rhs);
    if (!sol) return std::nullopt;
    Matrix s(n, n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) s.set(j, k, sol->particular[k * n + j]);
    return s;
}

std::optional<Integral> solve_total_integral(const BraidedBialgebra& h) {
    const std::size_t n = h.dim();
    const Matrix& d = h.delta.mat();
    const Matrix& u = h.u.mat();
    // (B (x) lambda) delta = u lambda, equation (r, c):
    //   sum_k lambda_k delta[r*n + k, c] - u_r lambda_c = 0
    std::vector<std::map<std::size_t, Scalar>> eqs(n * n);
    for (std::size_t c = 0; c < n; ++c) {
        for (const auto& de : d.column(c)) eqs[(de.row / n) * n + c][de.row % n] += de.value;
        for (const auto& ue : u.column(0)) eqs[ue.row * n + c][c] -= ue.value;
    }
    std::vector<std::vector<Matrix::Entry>> rows;
    for (auto& e : eqs) rows.push_back(sorted_entries(e));
    Vector rhs(rows.size());
    // lambda u = 1
    std::vector<Matrix::Entry> unit_row(u.column(0).begin(), u.column(0).end());
    rows.push_back(std::move(unit_row));
    rhs.push_back(Scalar(1));
    append_rows(rows, morphism_constraints(h.backend, h.carrier, h.unit_object()));
    rhs.resize(rows.size());
    auto sol = solve_affine(rows_to_matrix(std::move(rows), n), rhs);
    if (!sol) return std::nullopt;
    Matrix lambda(1, n);
    for (std::size_t k = 0; k < n; ++k) lambda.set(0, k, sol->particular[k]);
    return Integral{Morphism(h.carrier, h.unit_object(), std::move(lambda))};
}

Report verify_total_integral(const BraidedBialgebra& h, const Morphism& lambda) {
    Report r;
    check_maps(r, h, lambda, "lambda");
    expect_equal(r, "int1", tensor(h.id(), lambda) * h.delta, h.u * lambda);
    expect_equal(r, "int2", lambda * h.u, identity(h.unit_object()));
    return r;
}

Morphism build_cosep_section(const BraidedBialgebra& h, const Integral& integral) {
    const Morphism id = h.id();
    return tensor(integral.lambda * h.m, id) * tensor(id, h.s(), id) * tensor(id, h.delta);
}

Morphism tensor_module_action(const BraidedBialgebra& b, const Morphism& mu_m, const Morphism& mu_n) {
    // mu_m : M (x) B -> M, mu_n : N (x) B -> N
    const CatObject& mobj = mu_m.cod();
    const CatObject& nobj = mu_n.cod();
    const Morphism idm = identity(mobj), idn = identity(nobj), idb = b.id();
    return tensor(mu_m, mu_n) * tensor(idm, b.backend.braiding(nobj, b.carrier), idb) * tensor(idm, idn, b.delta);
}

Report verify_cosep_section(const BraidedBialgebra& h, const Integral& integral, const Morphism& theta) {
    Report r;
    const Morphism id = h.id();
    const Morphism lm = integral.lambda * h.m;
    const Morphism s = h.s();
    expect_equal(r, "ec_lambda", tensor(lm, id) * tensor(id, s, id) * tensor(id, h.delta),
                 tensor(id, lm) * tensor(id, id, s) * tensor(h.delta, id));
    expect_equal(r, "left_colinear", h.delta * theta, tensor(id, theta) * tensor(h.delta, id));
    expect_equal(r, "right_colinear", h.delta * theta, tensor(theta, id) * tensor(id, h.delta));
    expect_equal(r, "section", theta * h.delta, id);
    expect_equal(r, "right_linear", theta * tensor_module_action(h, h.m, h.m), h.m * tensor(theta, id));
    return r;
}

Morphism integral_from_section(const BraidedBialgebra& h, const Morphism& theta) {
    return h.eps * theta * tensor(h.id(), h.u);
}

BraidedBialgebra with_entry(const BraidedBialgebra& a, StructureMap which, std::size_t row, std::size_t col,
                            const Scalar& value) {
    BraidedBialgebra out = a;
    auto patch = [&](Morphism& f) {
        Matrix mat = f.mat();
        mat.set(row, col, value);
        f = Morphism(f.dom(), f.cod(), std::move(mat));
    };
    switch (which) {
        case StructureMap::m: patch(out.m); break;
        case StructureMap::u: patch(out.u); break;
        case StructureMap::delta: patch(out.delta); break;
        case StructureMap::eps: patch(out.eps); break;
        case StructureMap::antipode:
            if (!out.antipode) throw Error(ErrorKind::precondition_failed, a.name + " has no antipode");
            patch(*out.antipode);
            break;
    }
    return out;
}

}  // namespace braidhopf
