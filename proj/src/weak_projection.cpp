#include "braidhopf/weak_projection.hpp"

#include "braidhopf/error.hpp"
#include "braidhopf/linalg.hpp"

#include <map>

namespace braidhopf {

namespace {

std::string entry_witness(const std::optional<EntryDifference>& d) {
    if (!d) return "-";
    return "(" + std::to_string(d->row) + "," + std::to_string(d->col) + "):lhs=" + d->lhs.get_str() +
           ",rhs=" + d->rhs.get_str();
}

}  // namespace

BraidedBialgebra WeakProjectionContext::r_bialgebra() const {
    BraidedBialgebra out;
    out.name = a.name + "_diagram";
    out.backend = a.backend;
    out.carrier = r;
    for (std::size_t k = 0; k < r.dim(); ++k) out.basis.push_back("r" + std::to_string(k));
    out.kind = StructureKind::bialgebra;
    out.m = maps.m_r;
    out.u = maps.u_r;
    out.delta = maps.delta_r;
    out.eps = maps.eps_r;
    return out;
}

Report verify_weak_projection(const BraidedBialgebra& a, const BraidedBialgebra& b, const Morphism& sigma,
                              const Morphism& pi) {
    Report r;
    r.merge(a.backend.verify_morphism(sigma, "sigma"));
    r.merge(a.backend.verify_morphism(pi, "pi"));
    expect_equal(r, "sigma.multiplicative", sigma * b.m, a.m * tensor(sigma, sigma));
    expect_equal(r, "sigma.unital", sigma * b.u, a.u);
    expect_equal(r, "sigma.comultiplicative", tensor(sigma, sigma) * b.delta, a.delta * sigma);
    expect_equal(r, "sigma.counital", a.eps * sigma, b.eps);
    expect_equal(r, "pi.comultiplicative", b.delta * pi, tensor(pi, pi) * a.delta);
    expect_equal(r, "pi.counital", b.eps * pi, a.eps);
    expect_equal(r, "pi.right_linear", pi * a.m * tensor(a.id(), sigma), b.m * tensor(pi, b.id()));
    expect_equal(r, "pi_sigma_identity", pi * sigma, b.id());
    return r;
}

WeakProjectionContext make_context(BraidedBialgebra a, BraidedBialgebra b, Morphism sigma, Morphism pi) {
    if (!(a.backend == b.backend)) throw Error(ErrorKind::backend_mismatch, a.name + " and " + b.name);
    WeakProjectionContext ctx;
    ctx.a = std::move(a);
    ctx.b = std::move(b);
    ctx.sigma = std::move(sigma);
    ctx.pi = std::move(pi);
    return ctx;
}

void build_operators(WeakProjectionContext& ctx) {
    ctx.phi_proj = ctx.sigma * ctx.b.s() * ctx.pi;
    ctx.pi1 = ctx.sigma * ctx.pi;
    ctx.pi2 = ctx.a.m * tensor(ctx.a.id(), ctx.phi_proj) * ctx.a.delta;
}

Report run_bd_suite(const WeakProjectionContext& ctx) {
    Report r;
    const BraidedBialgebra& a = ctx.a;
    const BraidedBialgebra& b = ctx.b;
    const Morphism id = a.id();
    const Morphism& pi1 = ctx.pi1;
    const Morphism& pi2 = ctx.pi2;
    const Morphism& phi = ctx.phi_proj;
    const Morphism caa = a.backend.braiding(a.carrier, a.carrier);

    expect_equal(r, "pi1_idempotent", pi1 * pi1, pi1);
    expect_equal(r, "pi1_multiplicative", a.m * tensor(pi1, pi1), pi1 * a.m * tensor(pi1, pi1));
    expect_equal(r, "bd1", a.delta * pi2, tensor(a.m, id) * tensor(id, phi, pi2) * tensor(id, caa * a.delta) * a.delta);
    expect_equal(r, "bd2", ctx.pi * pi2, b.u * a.eps);
    expect_equal(r, "bd3", pi2 * pi2, pi2);
    expect_all(r, "bd4",
               {{pi2 * a.m * tensor(id, ctx.sigma), pi2 * tensor(id, b.eps)},
                {pi2 * tensor(id, b.eps), tensor(pi2, b.eps)}});
    expect_equal(r, "bd5", tensor(id, ctx.pi) * a.delta * pi2, tensor(pi2, b.u));
    expect_equal(r, "bd6", tensor(pi2, pi2) * a.delta, tensor(pi2, pi2) * a.delta * pi2);
    expect_equal(r, "unit_lemma", pi1 * a.u, a.u);
    expect_equal(r, "counit_lemma", a.eps * pi2, a.eps);
    expect_equal(r, "bd12", a.m * tensor(pi2, pi1) * tensor(pi2, pi1) * a.delta, id);

    const Morphism lhs13 = tensor(pi2, pi1) * a.delta * a.m * tensor(pi2, pi1);
    expect_equal(r, "bd13", lhs13, tensor(pi2, pi1));
    const auto printed = first_difference(lhs13.mat(), tensor(pi1, pi2).mat());
    r.note("bd13_printed_ordering", printed ? "fail " + entry_witness(printed) : "pass");
    return r;
}

void compute_diagram(WeakProjectionContext& ctx) {
    const BraidedBialgebra& a = ctx.a;
    const Matrix f = (tensor(a.id(), ctx.pi) * a.delta).mat();
    const Matrix g = kron(Matrix::identity(a.dim()), ctx.b.u.mat());
    Matrix i = equalizer(f, g);
    auto p = solve_matrix(i, ctx.pi2.mat());
    if (!p) throw Error(ErrorKind::split_failure, "i p = Pi_2 has no solution");
    if (!(*p * i == Matrix::identity(i.cols()))) throw Error(ErrorKind::split_failure, "p i is not the identity");

    CatObject r(i.cols());
    if (a.carrier.graded()) {
        std::vector<std::size_t> grading;
        for (std::size_t c = 0; c < i.cols(); ++c) {
            auto col = i.column(c);
            const std::size_t deg = a.carrier.degree(col.front().row);
            for (const auto& e : col)
                if (a.carrier.degree(e.row) != deg)
                    throw Error(ErrorKind::split_failure, "equalizer basis vector " + std::to_string(c) +
                                                              " is not homogeneous");
            grading.push_back(deg);
        }
        std::vector<Matrix> action;
        if (a.carrier.has_action())
            for (const auto& act : a.carrier.actions()) action.push_back(*p * act * i);
        r = CatObject(i.cols(), a.carrier.group_ptr(), std::move(grading), std::move(action));
    }
    ctx.r = r;
    ctx.i = Morphism(r, a.carrier, std::move(i));
    ctx.p = Morphism(a.carrier, r, std::move(*p));
}

void derive_structure_maps(WeakProjectionContext& ctx) {
    const BraidedBialgebra& a = ctx.a;
    const Morphism& i = ctx.i;
    const Morphism& p = ctx.p;
    DiagramMaps& d = ctx.maps;
    d.m_r = p * a.m * tensor(i, i);
    d.u_r = p * a.u;
    d.delta_r = tensor(p, p) * a.delta * i;
    d.eps_r = a.eps * i;
    d.xi = ctx.pi * a.m * tensor(i, i);
    d.b_mu_r = p * a.m * tensor(ctx.sigma, i);
    d.mu_r_b = p * a.m * tensor(i, ctx.sigma);
    d.b_rho_r = tensor(ctx.pi, p) * a.delta * i;
    d.mu_b_r = ctx.pi * a.m * tensor(ctx.sigma, i);
}

Report verify_diagram(const WeakProjectionContext& ctx) {
    Report r;
    const BraidedBialgebra& a = ctx.a;
    expect_equal(r, "ip_equals_pi2", ctx.i * ctx.p, ctx.pi2);
    expect_equal(r, "pi_equals_identity", ctx.p * ctx.i, identity(ctx.r));
    const Matrix image = column_space(ctx.pi2.mat());
    const bool same_span = image.cols() == ctx.i.mat().cols() && columns_in_span(image, ctx.i.mat()) &&
                           columns_in_span(ctx.i.mat(), image);
    r.expect("image_equals_pi2_image", same_span,
             "rank(Pi_2)=" + std::to_string(image.cols()) + ",dim_R=" + std::to_string(ctx.r.dim()));
    r.expect("dimension_product", ctx.r.dim() * ctx.b.dim() == a.dim(),
             std::to_string(ctx.r.dim()) + "*" + std::to_string(ctx.b.dim()) + "!=" + std::to_string(a.dim()));
    r.merge(a.backend.verify_morphism(ctx.i, "i"));
    r.merge(a.backend.verify_morphism(ctx.p, "p"));
    Report co = verify_coalgebra(ctx.r_bialgebra());
    r.merge(co, "r.");
    expect_equal(r, "p.comultiplicative", tensor(ctx.p, ctx.p) * a.delta, ctx.maps.delta_r * ctx.p);
    expect_equal(r, "p.counital", ctx.maps.eps_r * ctx.p, a.eps);
    expect_equal(r, "eps_pi", ctx.b.eps * ctx.pi, a.eps);
    expect_equal(r, "pi_i", ctx.pi * ctx.i, ctx.b.u * ctx.maps.eps_r);
    expect_equal(r, "counit_of_unit", ctx.maps.eps_r * ctx.maps.u_r, identity(a.unit_object()));
    r.note("dim_R", std::to_string(ctx.r.dim()));
    r.note("rank_Pi2", std::to_string(image.cols()));
    return r;
}

WeakProjectionContext build_context(BraidedBialgebra a, BraidedBialgebra b, Morphism sigma, Morphism pi) {
    WeakProjectionContext ctx = make_context(std::move(a), std::move(b), std::move(sigma), std::move(pi));
    build_operators(ctx);
    compute_diagram(ctx);
    derive_structure_maps(ctx);
    return ctx;
}

bool xi_is_trivial(const WeakProjectionContext& ctx) {
    return ctx.maps.xi.mat() == (ctx.b.u * tensor(ctx.maps.eps_r, ctx.maps.eps_r)).mat();
}

WeakProjectionSearch search_weak_projection(const BraidedBialgebra& a, const BraidedBialgebra& b,
                                            const Morphism& sigma) {
    WeakProjectionSearch out;
    const std::size_t na = a.dim(), nb = b.dim();
    const std::size_t unknowns = na * nb;  // pi[r, c] has index c*nb + r
    out.unknowns = unknowns;
    std::vector<std::map<std::size_t, Scalar>> eqs;
    Vector rhs;

    // pi sigma = Id_B
    for (std::size_t c = 0; c < nb; ++c)
        for (std::size_t r = 0; r < nb; ++r) {
            std::map<std::size_t, Scalar> eq;
            for (const auto& e : sigma.mat().column(c)) eq[e.row * nb + r] += e.value;
            eqs.push_back(std::move(eq));
            rhs.push_back(Scalar(r == c ? 1 : 0));
        }
    // pi m_A (A (x) sigma) = m_B (pi (x) B)
    const Matrix ms = (a.m * tensor(a.id(), sigma)).mat();
    const Matrix& mb = b.m.mat();
    for (std::size_t x = 0; x < na; ++x)
        for (std::size_t y = 0; y < nb; ++y) {
            const std::size_t col = x * nb + y;
            std::vector<std::map<std::size_t, Scalar>> block(nb);
            for (const auto& e : ms.column(col))
                for (std::size_t r = 0; r < nb; ++r) block[r][e.row * nb + r] += e.value;
            for (std::size_t j = 0; j < nb; ++j)
                for (const auto& e : mb.column(j * nb + y)) block[e.row][x * nb + j] -= e.value;
            for (auto& eq : block) {
                eqs.push_back(std::move(eq));
                rhs.push_back(Scalar(0));
            }
        }
    // eps_B pi = eps_A
    for (std::size_t c = 0; c < na; ++c) {
        std::map<std::size_t, Scalar> eq;
        for (std::size_t r = 0; r < nb; ++r) {
            const Scalar v = b.eps.mat().at(0, r);
            if (!is_zero(v)) eq[c * nb + r] += v;
        }
        eqs.push_back(std::move(eq));
        rhs.push_back(a.eps.mat().at(0, c));
    }
    const Matrix extra = morphism_constraints(a.backend, a.carrier, b.carrier).transpose();
    Matrix t(unknowns, eqs.size() + extra.cols());
    for (std::size_t k = 0; k < eqs.size(); ++k) {
        std::vector<Matrix::Entry> col;
        for (auto& [idx, v] : eqs[k])
            if (!is_zero(v)) col.push_back({idx, v});
        t.assign_column(k, std::move(col));
    }
    for (std::size_t k = 0; k < extra.cols(); ++k) {
        auto c = extra.column(k);
        t.assign_column(eqs.size() + k, std::vector<Matrix::Entry>(c.begin(), c.end()));
    }
    rhs.resize(t.cols());
    const Matrix sys = t.transpose();
    out.constraint_rank = rank(sys);
    out.report.note("unknowns", std::to_string(unknowns));
    out.report.note("constraint_rank", std::to_string(out.constraint_rank));

    auto sol = solve_affine(sys, rhs);
    if (!sol) {
        out.report.expect("linear_conditions", false,
                          "inconsistent:rank=" + std::to_string(out.constraint_rank) +
                              ",unknowns=" + std::to_string(unknowns));
        return out;
    }
    out.report.expect("linear_conditions", true, "");
    out.family_dim = sol->homogeneous_basis.size();
    out.report.note("family_dim", std::to_string(*out.family_dim));

    auto to_morphism = [&](const Vector& v) {
        Matrix m(nb, na);
        for (std::size_t c = 0; c < na; ++c)
            for (std::size_t r = 0; r < nb; ++r) m.set(r, c, v[c * nb + r]);
        return Morphism(a.carrier, b.carrier, std::move(m));
    };
    std::vector<Vector> candidates{sol->particular};
    for (const auto& h : sol->homogeneous_basis) {
        Vector v = sol->particular;
        for (std::size_t k = 0; k < v.size(); ++k) v[k] += h[k];
        candidates.push_back(std::move(v));
    }
    for (std::size_t k = 0; k < candidates.size(); ++k) {
        ++out.candidates_tested;
        Morphism pi = to_morphism(candidates[k]);
        if (verify_weak_projection(a, b, sigma, pi).passed()) {
            out.pi = std::move(pi);
            out.report.note("candidate", k == 0 ? "particular" : "particular+basis_" + std::to_string(k - 1));
            break;
        }
    }
    out.report.expect("verified_candidate", out.pi.has_value(),
                      "none_of_" + std::to_string(out.candidates_tested) + "_candidates_is_comultiplicative");
    return out;
}

}  // namespace braidhopf
