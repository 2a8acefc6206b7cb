// Acceptance run over the bundled corpus. Prints one line per criterion and
// exits nonzero if any criterion fails.

#include "oracle.hpp"

#include "braidhopf/error.hpp"
#include "braidhopf/filtration.hpp"
#include "braidhopf/group_algebra.hpp"
#include "braidhopf/io.hpp"
#include "braidhopf/products.hpp"
#include "braidhopf/weak_projection.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace braidhopf;
using oracle::Dense;

namespace {

const std::filesystem::path examples{BRAIDHOPF_EXAMPLES_DIR};
const std::filesystem::path golden{BRAIDHOPF_GOLDEN_DIR};

class Probe {
public:
    void require(bool ok, const std::string& what) {
        if (!ok) failures_.push_back(what);
    }
    void require_passed(const Report& r, const std::string& what) {
        for (const auto& c : r.checks())
            if (c.status == Status::fail) failures_.push_back(what + ": " + c.name + " " + c.witness_text());
        if (r.checks().empty()) failures_.push_back(what + ": empty report");
    }
    void require_check(const Report& r, const std::string& name, const std::string& what) {
        const Check* c = r.find(name);
        require(c != nullptr && c->passed(), what + ": " + name + (c ? " " + c->witness_text() : " missing"));
    }
    const std::vector<std::string>& failures() const { return failures_; }

private:
    std::vector<std::string> failures_;
};

// dense helpers

Dense dense(const Matrix& m) {
    Dense d = oracle::zeros(m.rows(), m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (const auto& e : m.column(c)) d[e.row][c] = e.value;
    return d;
}

Dense dense(const Morphism& f) { return dense(f.mat()); }

Dense ident(std::size_t n) {
    Dense d = oracle::zeros(n, n);
    for (std::size_t k = 0; k < n; ++k) d[k][k] = 1;
    return d;
}

Dense mul(const Dense& a, const Dense& b) { return oracle::mul(a, b); }
Dense kron(const Dense& a, const Dense& b) { return oracle::kron(a, b); }

// Sign of the symmetry on basis vectors i, j: -1 for two odd vectors in super, else 1.
using Sign = std::function<int(std::size_t, std::size_t)>;

Sign symmetry_sign(const BraidedBialgebra& a) {
    if (a.backend.kind() == BackendKind::super) {
        std::vector<std::size_t> deg = a.carrier.grading();
        return [deg](std::size_t i, std::size_t j) { return deg[i] == 1 && deg[j] == 1 ? -1 : 1; };
    }
    return [](std::size_t, std::size_t) { return 1; };
}

// c on A (x) A as a dense matrix.
Dense flip(std::size_t n, const Sign& sign) {
    Dense d = oracle::zeros(n * n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) d[j * n + i][i * n + j] = sign(i, j);
    return d;
}

// A (x) c (x) A applied on the left of a matrix with n^4 rows.
Dense middle_flip(const Dense& m, std::size_t n, const Sign& sign) {
    Dense out = oracle::zeros(m.size(), m[0].size());
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t d = 0; d < n; ++d) {
                    std::size_t from = ((a * n + b) * n + c) * n + d;
                    std::size_t to = ((a * n + c) * n + b) * n + d;
                    for (std::size_t k = 0; k < m[0].size(); ++k) out[to][k] += sign(b, c) * m[from][k];
                }
    return out;
}

struct Identity {
    Dense lhs;
    Dense rhs;
};

// The axiom identities of a Vec or super bialgebra, evaluated densely.
std::map<std::string, Identity> axiom_identities(const BraidedBialgebra& a) {
    const std::size_t n = a.dim();
    const Sign sign = symmetry_sign(a);
    const Dense m = dense(a.m), u = dense(a.u), d = dense(a.delta), e = dense(a.eps), i = ident(n);
    std::map<std::string, Identity> out;
    out["associativity"] = {mul(m, kron(m, i)), mul(m, kron(i, m))};
    out["left_unit"] = {mul(m, kron(u, i)), i};
    out["right_unit"] = {mul(m, kron(i, u)), i};
    out["coassociativity"] = {mul(kron(d, i), d), mul(kron(i, d), d)};
    out["left_counit"] = {mul(kron(e, i), d), i};
    out["right_counit"] = {mul(kron(i, e), d), i};
    out["compatibility"] = {mul(d, m), mul(kron(m, m), middle_flip(kron(d, d), n, sign))};
    out["counit_multiplicative"] = {mul(e, m), kron(e, e)};
    out["comul_unit"] = {mul(d, u), kron(u, u)};
    out["counit_unit"] = {mul(e, u), ident(1)};
    if (a.antipode) {
        const Dense s = dense(*a.antipode), ue = mul(u, e), c = flip(n, sign);
        out["antipode_left"] = {mul(m, mul(kron(s, i), d)), ue};
        out["antipode_right"] = {mul(m, mul(kron(i, s), d)), ue};
        out["anticomultiplicative"] = {mul(d, s), mul(kron(s, s), mul(c, d))};
        out["antimultiplicative"] = {mul(s, m), mul(m, mul(kron(s, s), c))};
    }
    return out;
}

// First differing entry in row-major order.
std::optional<std::pair<std::size_t, std::size_t>> first_diff(const Dense& x, const Dense& y) {
    for (std::size_t r = 0; r < x.size(); ++r)
        for (std::size_t c = 0; c < x[r].size(); ++c)
            if (x[r][c] != y[r][c]) return std::make_pair(r, c);
    return std::nullopt;
}

// The check failed and its witness is the first entry where the dense identity breaks.
bool witness_matches(const Check* c, const Identity& id, std::string& why) {
    if (c == nullptr) {
        why = "check missing";
        return false;
    }
    if (c->status != Status::fail) {
        why = c->name + " did not fail";
        return false;
    }
    if (!c->entry) {
        why = c->name + " has no entry witness";
        return false;
    }
    auto at = first_diff(id.lhs, id.rhs);
    if (!at) {
        why = c->name + " holds in the dense evaluation";
        return false;
    }
    const auto& w = *c->entry;
    if (w.row != at->first || w.col != at->second || w.lhs != id.lhs[w.row][w.col] || w.rhs != id.rhs[w.row][w.col]) {
        why = c->name + " witness " + c->witness_text() + " but dense first difference at (" +
              std::to_string(at->first) + "," + std::to_string(at->second) +
              "):lhs=" + id.lhs[at->first][at->second].get_str() + ",rhs=" + id.rhs[at->first][at->second].get_str();
        return false;
    }
    return true;
}

// Every identity the report and the dense evaluation share agrees on pass/fail
// and failing witnesses, and at least one fails.
void require_axiom_witnesses(Probe& p, const Report& rep, const BraidedBialgebra& a, const std::string& what,
                             const std::string& prefix = "") {
    bool any = false;
    for (const auto& [name, id] : axiom_identities(a)) {
        const Check* c = rep.find(prefix + name);
        if (c == nullptr) continue;
        const bool holds = !first_diff(id.lhs, id.rhs);
        p.require(holds == c->passed(), what + ": " + name + " status disagrees with dense evaluation");
        if (!holds) {
            any = true;
            std::string why;
            p.require(witness_matches(c, id, why), what + ": " + why);
        }
    }
    p.require(any, what + ": no axiom failed");
}

BraidedBialgebra alg(const std::string& name) { return load_algebra(examples / name); }

Morphism map(const std::string& name, const BraidedBialgebra& dom, const BraidedBialgebra& cod) {
    return load_morphism(examples / name, dom, cod);
}

WeakProjectionContext h4_context() {
    BraidedBialgebra a = alg("H4.alg"), b = alg("H4_C2.alg");
    return build_context(a, b, map("H4_sigma.map", b, a), map("H4_pi.map", a, b));
}

WeakProjectionContext s3_context(const std::string& sub) {
    BraidedBialgebra a = alg("kS3.alg"), b = alg(sub + ".alg");
    return build_context(a, b, map(sub + "_sigma.map", b, a), map(sub + "_pi.map", a, b));
}

std::size_t index_of(const BraidedBialgebra& a, const std::string& name) {
    for (std::size_t k = 0; k < a.basis.size(); ++k)
        if (a.basis[k] == name) return k;
    throw std::runtime_error("no basis element " + name + " in " + a.name);
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string note(const Report& r, const std::string& name) {
    for (const auto& n : r.notes())
        if (n.name == name) return n.value;
    return "<missing>";
}

// criteria

void axiom_suites(Probe& p) {
    for (const char* f : {"kC2.alg", "kC3.alg", "kS3.alg", "H4.alg", "lambda_super.alg"}) {
        BraidedBialgebra a = alg(f);
        p.require_passed(verify_algebra(a), f);
        p.require_passed(verify_coalgebra(a), f);
        p.require_passed(verify_bialgebra(a), f);
        p.require_passed(verify_antipode(a), f);
        for (const auto& [name, id] : axiom_identities(a))
            p.require(!first_diff(id.lhs, id.rhs), std::string(f) + ": dense " + name + " fails");
    }
    BraidedBialgebra v = alg("lambda_vec.alg");
    p.require_passed(verify_algebra(v), "lambda_vec algebra");
    p.require_passed(verify_coalgebra(v), "lambda_vec coalgebra");
    Report bi = verify_bialgebra(v);
    p.require(!bi.passed("compatibility"), "lambda_vec compatibility should fail");
    std::string why;
    p.require(witness_matches(bi.find("compatibility"), axiom_identities(v)["compatibility"], why), why);

    struct Golden {
        const char* file;
        const char* kind;
    };
    for (const Golden& g : {Golden{"kC2.alg", "hopf"}, Golden{"kC3.alg", "hopf"}, Golden{"kS3.alg", "hopf"},
                            Golden{"H4.alg", "hopf"}, Golden{"lambda_super.alg", "hopf"},
                            Golden{"lambda_vec.alg", "bialgebra"}}) {
        BraidedBialgebra a = alg(g.file);
        Report r = std::string(g.kind) == "hopf" ? verify_hopf(a) : verify_bialgebra(a);
        r.set_command(std::string("check ") + g.kind + " " + g.file);
        const auto path = golden / (a.name + "." + g.kind + ".txt");
        p.require(r.format(ReportFormat::machine) == slurp(path), "golden report differs: " + path.string());
    }
}

// YD braiding c(v (x) w) = (deg v . w) (x) v from grades and actions alone.
Dense yd_braiding(const std::vector<std::size_t>& deg_x, const std::vector<Dense>& act_y) {
    const std::size_t dx = deg_x.size(), dy = act_y[0].size();
    Dense out = oracle::zeros(dy * dx, dx * dy);
    for (std::size_t i = 0; i < dx; ++i)
        for (std::size_t k = 0; k < dy; ++k)
            for (std::size_t j = 0; j < dy; ++j) out[j * dx + i][i * dy + k] = act_y[deg_x[i]][j][k];
    return out;
}

std::vector<Dense> dense_actions(const CatObject& x) {
    std::vector<Dense> out;
    for (const auto& m : x.actions()) out.push_back(dense(m));
    return out;
}

std::vector<std::size_t> tensor_degrees(const FiniteGroup& g, const CatObject& x, const CatObject& y) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < x.dim(); ++i)
        for (std::size_t k = 0; k < y.dim(); ++k) out.push_back(g.mul(x.degree(i), y.degree(k)));
    return out;
}

Identity yd_hexagon_left(const FiniteGroup& g, const CatObject& x, const CatObject& y, const CatObject& z) {
    const std::vector<Dense> act_z = dense_actions(z);
    Dense lhs = yd_braiding(tensor_degrees(g, x, y), act_z);
    Dense rhs = mul(kron(yd_braiding(x.grading(), act_z), ident(y.dim())),
                    kron(ident(x.dim()), yd_braiding(y.grading(), act_z)));
    return {lhs, rhs};
}

std::string object_key(const Backend& b, const CatObject& x) {
    std::ostringstream os;
    os << b.description() << "|" << x.dim();
    if (x.graded())
        for (auto d : x.grading()) os << "," << d;
    if (x.has_action())
        for (const auto& m : x.actions())
            for (const auto& row : dense(m))
                for (const auto& v : row) os << " " << v.get_str();
    return os.str();
}

void braiding(Probe& p) {
    std::map<std::string, std::vector<std::pair<Backend, CatObject>>> by_backend;
    std::map<std::string, bool> seen;
    for (const auto& entry : std::filesystem::directory_iterator(examples)) {
        const auto ext = entry.path().extension();
        if (ext != ".alg" && ext != ".obj") continue;
        Definition d = load_definition(entry.path());
        const std::string key = object_key(d.algebra.backend, d.algebra.carrier);
        if (seen[key]) continue;
        seen[key] = true;
        by_backend[d.algebra.backend.description()].push_back({d.algebra.backend, d.algebra.carrier});
    }
    std::size_t triples = 0;
    bool s3_regular = false;
    for (auto& [desc, objs] : by_backend) {
        if (desc == "yd S3") s3_regular = true;
        for (const auto& [bx, x] : objs)
            for (const auto& [by, y] : objs)
                for (const auto& [bz, z] : objs) {
                    const Backend& k = bx;
                    std::vector<MorphismPair> samples{{generic_morphism(k, x, x), generic_morphism(k, y, y)},
                                                      {generic_morphism(k, x, z), generic_morphism(k, y, x)}};
                    Report r = verify_braiding_axioms(k, x, y, z, samples);
                    p.require_passed(r, desc + " triple of dims " + std::to_string(x.dim()) + "," +
                                            std::to_string(y.dim()) + "," + std::to_string(z.dim()));
                    ++triples;
                }
    }
    p.require(s3_regular, "no YD(S3) object in the corpus");
    p.require(by_backend.size() >= 4, "fewer than four backends in the corpus");
    p.require(triples > 0, "no triples");

    // the library braiding on the S3 regular object against the defining formula
    Definition reg = load_definition(examples / "S3_regular.obj");
    const CatObject& x = reg.algebra.carrier;
    const Backend& yd = reg.algebra.backend;
    p.require(dense(yd.braiding(x, x)) == yd_braiding(x.grading(), dense_actions(x)),
              "YD(S3) braiding differs from (deg v . w) (x) v");
    std::cout << "  braiding: " << triples << " triples over " << by_backend.size() << " backends\n";
}

void integrals(Probe& p) {
    for (const char* f : {"kC2.alg", "kC3.alg", "kS3.alg"}) {
        BraidedBialgebra h = alg(f);
        auto lambda = solve_total_integral(h);
        p.require(lambda.has_value(), std::string(f) + ": no total integral");
        if (!lambda) continue;
        Dense expected = oracle::zeros(1, h.dim());
        expected[0][index_of(h, "e")] = 1;
        p.require(dense(lambda->lambda) == expected, std::string(f) + ": integral is not the coefficient of e");
        p.require_passed(verify_total_integral(h, lambda->lambda), f);
        Morphism theta = build_cosep_section(h, *lambda);
        Report cs = verify_cosep_section(h, *lambda, theta);
        p.require_passed(cs, std::string(f) + " section");
        for (const char* name : {"ec_lambda", "left_colinear", "right_colinear", "section", "right_linear"})
            p.require_check(cs, name, f);
        p.require(integral_from_section(h, theta).mat() == lambda->lambda.mat(), std::string(f) + ": lambda not recovered");
    }
    p.require(!solve_total_integral(alg("H4.alg")).has_value(), "H4 has a total integral");
}

void bd_suite(Probe& p) {
    const char* names[] = {"pi1_idempotent", "pi1_multiplicative", "bd1",         "bd2",           "bd3", "bd4",
                           "bd5",            "bd6",                "unit_lemma", "counit_lemma", "bd12", "bd13"};
    for (const auto& [label, ctx] : {std::pair{"H4/kC2", h4_context()}, std::pair{"kS3/kC2", s3_context("kS3_C2")}}) {
        Report r = run_bd_suite(ctx);
        p.require(r.checks().size() == 12, std::string(label) + ": expected 12 checks");
        for (const char* n : names) p.require_check(r, n, label);

        // the Pi_2 (x) Pi_1 ordering against the printed one, densely
        const Dense lhs = mul(mul(kron(dense(ctx.pi2), dense(ctx.pi1)), dense(ctx.a.delta)),
                              mul(dense(ctx.a.m), kron(dense(ctx.pi2), dense(ctx.pi1))));
        p.require(lhs == kron(dense(ctx.pi2), dense(ctx.pi1)), std::string(label) + ": dense bd13 fails");
        const bool printed_holds = lhs == kron(dense(ctx.pi1), dense(ctx.pi2));
        const std::string value = note(r, "bd13_printed_ordering");
        p.require(value.rfind(printed_holds ? "pass" : "fail", 0) == 0,
                  std::string(label) + ": printed ordering note " + value);
        std::cout << "  bd13 " << label << ": Pi_2 (x) Pi_1 passes, printed ordering " << value << "\n";
    }
    p.require(note(run_bd_suite(h4_context()), "bd13_printed_ordering").rfind("fail", 0) == 0,
              "H4: printed bd13 ordering should fail");
}

void diagram(Probe& p) {
    for (const auto& [label, ctx, dim_r] :
         {std::tuple{"H4/kC2", h4_context(), std::size_t{2}}, std::tuple{"kS3/kC2", s3_context("kS3_C2"), std::size_t{3}}}) {
        Report r = verify_diagram(ctx);
        p.require_passed(r, label);
        p.require(ctx.r.dim() == dim_r, std::string(label) + ": dim R = " + std::to_string(ctx.r.dim()));
        p.require_check(r, "ip_equals_pi2", label);
        p.require_check(r, "pi_equals_identity", label);
        p.require(ctx.r.dim() * ctx.b.dim() == ctx.a.dim(), std::string(label) + ": dim R dim B != dim A");
        p.require(mul(dense(ctx.i), dense(ctx.p)) == dense(ctx.pi2), std::string(label) + ": dense i p != Pi_2");
        p.require(oracle::rank(dense(ctx.pi2)) == dim_r, std::string(label) + ": rank Pi_2");
    }
}

void cross_product(Probe& p) {
    for (const auto& [label, ctx] : {std::pair{"H4/kC2", h4_context()}, std::pair{"kS3/kC2", s3_context("kS3_C2")}}) {
        CrossProductData cp = build_cross_product(ctx, false);
        p.require_passed(cp.report, label);
        p.require(cp.literal.m.mat() == cp.transported.m.mat(), std::string(label) + ": m");
        p.require(cp.literal.u.mat() == cp.transported.u.mat(), std::string(label) + ": u");
        p.require(cp.literal.delta.mat() == cp.transported.delta.mat(), std::string(label) + ": delta");
        p.require(cp.literal.eps.mat() == cp.transported.eps.mat(), std::string(label) + ": eps");
        p.require_passed(verify_bialgebra(cp.literal), std::string(label) + " literal");
        const std::size_t n = ctx.a.dim();
        p.require(mul(dense(cp.iso_fwd), dense(cp.iso_bwd)) == ident(n), std::string(label) + ": fwd bwd");
        p.require(mul(dense(cp.iso_bwd), dense(cp.iso_fwd)) == ident(n), std::string(label) + ": bwd fwd");
    }
}

FactorizationContext factorization(const std::string& b_file, const std::string& r_file) {
    BraidedBialgebra a = alg("kS3.alg"), b = alg(b_file), r = alg(r_file);
    Morphism sigma(b.carrier, a.carrier, inclusion_by_name(b, a));
    Morphism i(r.carrier, a.carrier, inclusion_by_name(r, a));
    return make_factorization(a, b, r, sigma, i);
}

void matched_pairs(Probe& p) {
    const char* relations[] = {"maj0", "maj0_prime", "cp1", "cp2", "cp3", "cp4", "match_7_9"};
    for (const auto& [bf, rf] : {std::pair{"kS3_C2.alg", "kS3_C3.alg"}, std::pair{"kS3_C3.alg", "kS3_C2.alg"}}) {
        const std::string label = std::string("kS3 with B=") + bf + " R=" + rf;
        DerivedPair d = derive_actions_general(factorization(bf, rf));
        p.require_passed(d.report, label);
        for (const char* n : relations) p.require_check(d.report, n, label);
        std::size_t mp = 0, iso = 0;
        for (const auto& c : d.report.checks()) {
            if (c.name.rfind("mp.", 0) == 0) ++mp;
            if (c.name.rfind("phi_factor.", 0) == 0) ++iso;
        }
        p.require(mp == 7, label + ": expected 7 matched pair checks");
        p.require(iso > 0, label + ": no phi_factor checks");
        p.require_passed(check_matched_pair(d.pair), label + " pair");
    }
    FiniteGroup s4 = load_group(examples / "S4.grp");
    BraidedBialgebra d4 = alg("kS4_D4.alg"), c3 = alg("kS4_C3.alg");
    MatchedPair mp = group_matched_pair(s4, element_indices(s4, d4.basis), element_indices(s4, c3.basis));
    p.require_passed(check_matched_pair(mp), "S4 = D4 C3");
    BraidedBialgebra dc = build_double_cross(mp);
    p.require(dc.dim() == 24, "S4 double cross dimension");
    p.require_passed(verify_bialgebra(dc), "S4 double cross");
}

void cocommutative(Probe& p) {
    WeakProjectionContext ctx = s3_context("kS3_C2");
    DerivedPair d = derive_actions_cocomm(ctx);
    p.require_passed(d.report, "kS3/kC2");
    p.require_check(d.report, "eq_rho", "kS3/kC2");
    p.require_check(d.report, "agrees_left_action", "kS3/kC2");
    p.require_check(d.report, "agrees_right_action", "kS3/kC2");
    DerivedPair g = derive_actions_general(make_factorization(ctx.a, ctx.b, ctx.r_bialgebra(), ctx.sigma, ctx.i));
    p.require(g.pair.tr.mat() == d.pair.tr.mat() && g.pair.tl.mat() == d.pair.tl.mat(), "actions disagree");
    try {
        derive_actions_cocomm(h4_context());
        p.require(false, "H4/kC2 accepted");
    } catch (const Error& e) {
        p.require(std::string(e.what()).find("not cocommutative") != std::string::npos,
                  std::string("H4/kC2 rejected for: ") + e.what());
    }
}

bool dense_left_linear(const WeakProjectionContext& ctx) {
    const Dense lhs = mul(dense(ctx.pi), mul(dense(ctx.a.m), kron(dense(ctx.sigma), ident(ctx.a.dim()))));
    const Dense rhs = mul(dense(ctx.b.m), kron(ident(ctx.b.dim()), dense(ctx.pi)));
    return lhs == rhs;
}

void bosonization(Probe& p) {
    WeakProjectionContext c2 = s3_context("kS3_C2");
    Report r = bosonization_checks(c2);
    p.require_passed(r, "kS3/kC2");
    p.require(note(r, "tl_trivial") == "yes", "kS3/kC2: right action should be trivial");
    p.require(note(r, "pi_left_linear") == "yes" && dense_left_linear(c2), "kS3/kC2: pi should be left linear");
    for (const char* n : {"tl_trivial_iff_pi_left_linear", "tr_equals_adjoint", "double_cross_equals_smash",
                          "smash_iso.multiplicative", "smash_iso.comultiplicative", "smash_iso.invertible"})
        p.require_check(r, n, "kS3/kC2");

    WeakProjectionContext c3 = s3_context("kS3_C3");
    Report s = bosonization_checks(c3);
    p.require(note(s, "tl_trivial") == "no", "kS3/kC3: right action should be nontrivial");
    p.require(note(s, "pi_left_linear") == "no" && !dense_left_linear(c3), "kS3/kC3: pi should not be left linear");
    p.require_check(s, "tl_trivial_iff_pi_left_linear", "kS3/kC3");
}

void filtration(Probe& p) {
    {
        WeakProjectionContext h = h4_context();
        FiltrationReport f = b_adic_filtration(h.a, make_subobject(h.a.carrier, h.sigma.mat()));
        p.require(f.dims == std::vector<std::size_t>{2, 4} && f.exhaustive, "H4 filtration");
    }
    {
        WeakProjectionContext s = s3_context("kS3_C2");
        FiltrationReport f = b_adic_filtration(s.a, make_subobject(s.a.carrier, s.sigma.mat()));
        p.require(f.dims == std::vector<std::size_t>{2, 2} && !f.exhaustive, "kS3 filtration");
    }
    BraidedBialgebra h4 = alg("H4.alg");
    Subobject c = coradical(h4);
    Subobject grouplike = make_subobject(h4.carrier, Matrix::from_rows({{1, 0}, {0, 1}, {0, 0}, {0, 0}}));
    p.require(c.dim() == 2 && c.contains(grouplike) && grouplike.contains(c), "coradical of H4");
    for (const char* f : {"kC2.alg", "kC3.alg", "kS3.alg", "kS4.alg"}) {
        BraidedBialgebra g = alg(f);
        p.require(coradical(g).dim() == g.dim(), std::string("coradical of ") + f);
    }
    BraidedBialgebra b = alg("H4_C2.alg");
    Morphism sigma = map("H4_sigma.map", b, h4);
    p.require_passed(check_magnum_preconditions(h4, b, sigma), "magnum H4/kC2");
    WeakProjectionSearch found = search_weak_projection(h4, b, sigma);
    p.require(found.pi.has_value(), "search found no weak projection");
    if (found.pi) p.require_passed(verify_weak_projection(h4, b, sigma, *found.pi), "found pi");
}

// mutations

struct Mutation {
    std::string suite;
    std::string what;
    std::function<void(Probe&)> run;
};

BraidedBialgebra set_entry(const BraidedBialgebra& a, StructureMap w, std::size_t row, std::size_t col, long v) {
    return with_entry(a, w, row, col, Scalar(v));
}

Morphism with_matrix_entry(const Morphism& f, std::size_t row, std::size_t col, long v) {
    Matrix m = f.mat();
    m.set(row, col, Scalar(v));
    return Morphism(f.dom(), f.cod(), m);
}

// dims of B, B^B, ... with X^B = {a : delta a in X (x) A + A (x) B} solved densely
std::vector<std::size_t> oracle_filtration(const BraidedBialgebra& a, const Matrix& b) {
    const std::size_t n = a.dim();
    const Dense delta = dense(a.delta);
    const Dense bb = dense(b);
    Dense current = bb;
    std::vector<std::size_t> dims{b.cols()};
    while (dims.back() < n) {
        Dense w = oracle::stack_columns(kron(current, ident(n)), kron(ident(n), bb));
        Dense ker = oracle::kernel(oracle::stack_columns(delta, w), n + w[0].size());
        Dense head(ker.begin(), ker.begin() + static_cast<std::ptrdiff_t>(n));
        Dense next = oracle::column_basis(head);
        const std::size_t previous = dims.back();
        dims.push_back(next[0].size());
        if (dims.back() == previous) break;
        current = next;
    }
    return dims;
}

std::vector<Mutation> mutations() {
    std::vector<Mutation> out;

    auto axiom = [&](std::string what, std::string file, StructureMap w, std::string row, std::string col1,
                     std::string col2, long v) {
        out.push_back({"axioms", what, [=](Probe& p) {
                           BraidedBialgebra a = alg(file);
                           const std::size_t n = a.dim();
                           std::size_t r = 0, c = 0;
                           auto k = [&](const std::string& s) { return index_of(a, s); };
                           switch (w) {
                               case StructureMap::m: r = k(row), c = k(col1) * n + k(col2); break;
                               case StructureMap::delta: r = k(col1) * n + k(col2), c = k(row); break;
                               case StructureMap::antipode: r = k(row), c = k(col1); break;
                               case StructureMap::eps: r = 0, c = k(col1); break;
                               case StructureMap::u: r = k(row), c = 0; break;
                           }
                           BraidedBialgebra bad = set_entry(a, w, r, c, v);
                           Report rep = verify_hopf(bad);
                           require_axiom_witnesses(p, rep, bad, what);
                       }});
    };
    axiom("H4: x x = 1", "H4.alg", StructureMap::m, "1", "x", "x", 1);
    axiom("kS3: coefficient of e e in delta(c) = 1", "kS3.alg", StructureMap::delta, "c", "e", "e", 1);
    axiom("H4: S(x) = gx", "H4.alg", StructureMap::antipode, "gx", "x", "", 1);
    axiom("lambda_super: delta(x) loses 1 x", "lambda_super.alg", StructureMap::delta, "x", "1", "x", 0);
    axiom("kC3: eps(c) = 2", "kC3.alg", StructureMap::eps, "", "c", "", 2);

    out.push_back({"braiding", "super_mixed: sample map sends p to p + q", [](Probe& p) {
                       Definition d = load_definition(examples / "super_mixed.obj");
                       const CatObject& x = d.algebra.carrier;
                       const Backend& k = d.algebra.backend;
                       Morphism f = generic_morphism(k, x, x);
                       f = with_matrix_entry(f, index_of(d.algebra, "q"), index_of(d.algebra, "p"), 1);
                       Morphism g = generic_morphism(k, x, x);
                       Report rep = verify_braiding_axioms(k, x, x, x, {{f, g}});
                       // c(v (x) w) = (-1)^{|v||w|} w (x) v
                       const std::size_t n = x.dim();
                       Dense c = oracle::zeros(n * n, n * n);
                       for (std::size_t i = 0; i < n; ++i)
                           for (std::size_t j = 0; j < n; ++j)
                               c[j * n + i][i * n + j] = x.degree(i) == 1 && x.degree(j) == 1 ? -1 : 1;
                       Identity id{mul(kron(dense(g), dense(f)), c), mul(c, kron(dense(f), dense(g)))};
                       std::string why;
                       p.require(witness_matches(rep.find("naturality_0"), id, why), why);
                   }});

    out.push_back({"braiding", "S3 regular: c acts on e by e + c", [](Probe& p) {
                       Definition reg = load_definition(examples / "S3_regular.obj");
                       const CatObject& x = reg.algebra.carrier;
                       const Backend& yd = reg.algebra.backend;
                       const FiniteGroup& g = yd.group();
                       std::vector<Matrix> act = x.actions();
                       const std::size_t c = *g.find("c");
                       act[c].set(index_of(reg.algebra, "c"), index_of(reg.algebra, "e"), Scalar(1));
                       CatObject bad(x.dim(), x.group_ptr(), x.grading(), act);
                       const Dense ac = dense(act[c]);
                       p.require(mul(ac, ac) != dense(act[g.mul(c, c)]), "dense action is still a homomorphism at (c,c)");
                       try {
                           verify_braiding_axioms(yd, bad, bad, bad, {});
                           p.require(false, "corrupted object accepted");
                       } catch (const Error& e) {
                           p.require(std::string(e.what()).find("(c,c)") != std::string::npos,
                                     std::string("rejected with ") + e.what());
                       }
                   }});

    out.push_back({"integrals", "kC3: delta(e) gains c e", [](Probe& p) {
                       BraidedBialgebra h = alg("kC3.alg");
                       const std::size_t n = h.dim(), e = index_of(h, "e"), c = index_of(h, "c");
                       Morphism lambda = solve_total_integral(h)->lambda;
                       BraidedBialgebra bad = set_entry(h, StructureMap::delta, c * n + e, e, 1);
                       Report rep = verify_total_integral(bad, lambda);
                       Identity id{mul(kron(ident(n), dense(lambda)), dense(bad.delta)), mul(dense(bad.u), dense(lambda))};
                       std::string why;
                       p.require(witness_matches(rep.find("int1"), id, why), why);
                   }});

    auto pi2_dense = [](const WeakProjectionContext& ctx) {
        const Dense phi = mul(dense(ctx.sigma), mul(dense(ctx.b.s()), dense(ctx.pi)));
        return mul(dense(ctx.a.m), mul(kron(ident(ctx.a.dim()), phi), dense(ctx.a.delta)));
    };

    out.push_back({"bd", "H4: sigma(g) = g + 1", [pi2_dense](Probe& p) {
                       BraidedBialgebra a = alg("H4.alg"), b = alg("H4_C2.alg");
                       Morphism sigma = with_matrix_entry(map("H4_sigma.map", b, a), 0, 1, 1);
                       WeakProjectionContext ctx = make_context(a, b, sigma, map("H4_pi.map", a, b));
                       build_operators(ctx);
                       Report rep = run_bd_suite(ctx);
                       Identity id{mul(dense(ctx.pi), pi2_dense(ctx)), mul(dense(b.u), dense(a.eps))};
                       std::string why;
                       p.require(witness_matches(rep.find("bd2"), id, why), why);
                   }});

    out.push_back({"diagram", "kS3/kC2: pi(e) = e + t", [](Probe& p) {
                       BraidedBialgebra a = alg("kS3.alg"), b = alg("kS3_C2.alg");
                       Morphism sigma = map("kS3_C2_sigma.map", b, a);
                       Morphism pi = with_matrix_entry(map("kS3_C2_pi.map", a, b), index_of(b, "t"), index_of(a, "e"), 1);
                       Report rep = verify_weak_projection(a, b, sigma, pi);
                       Identity id{mul(dense(pi), dense(sigma)), ident(b.dim())};
                       std::string why;
                       p.require(witness_matches(rep.find("pi_sigma_identity"), id, why), why);
                   }});

    auto s3_mutated = [](const std::string& x, const std::string& y, const std::string& z, long v) {
        BraidedBialgebra a = alg("kS3.alg");
        const std::size_t n = a.dim();
        BraidedBialgebra bad =
            set_entry(a, StructureMap::m, index_of(a, z), index_of(a, x) * n + index_of(a, y), v);
        BraidedBialgebra b = alg("kS3_C2.alg");
        return build_context(bad, b, map("kS3_C2_sigma.map", b, a), map("kS3_C2_pi.map", a, b));
    };

    out.push_back({"cross", "kS3: t c = 0", [s3_mutated](Probe& p) {
                       WeakProjectionContext ctx = s3_mutated("t", "c", "cct", 0);
                       CrossProductData cp = build_cross_product(ctx, false);
                       require_axiom_witnesses(p, verify_bialgebra(cp.literal), cp.literal, "literal cross product");
                       p.require(!cp.report.passed("literal_m_equals_transported"), "literal m still matches");
                   }});

    out.push_back({"matched pair", "S3 = C2 C3: c <| t = c", [](Probe& p) {
                       FiniteGroup g = load_group(examples / "S3.grp");
                       MatchedPair mp = group_matched_pair(g, element_indices(g, {"e", "t"}),
                                                           element_indices(g, {"e", "c", "cc"}));
                       const std::size_t col = index_of(mp.b, "c") * mp.r.dim() + index_of(mp.r, "t");
                       Matrix tl = mp.tl.mat();
                       tl.set(index_of(mp.b, "cc"), col, Scalar(0));
                       tl.set(index_of(mp.b, "c"), col, Scalar(1));
                       mp.tl = Morphism(mp.tl.dom(), mp.tl.cod(), tl);
                       Report rep = check_matched_pair(mp);
                       p.require(!rep.passed(), "matched pair still passes");
                       for (const auto& c : rep.checks())
                           if (c.status == Status::fail)
                               p.require(c.entry ? c.entry->lhs != c.entry->rhs : !c.witness.empty(),
                                         c.name + ": empty witness");
                       BraidedBialgebra dc = build_double_cross(mp);
                       require_axiom_witnesses(p, verify_bialgebra(dc), dc, "double cross");
                   }});

    out.push_back({"cocommutative", "kS3: t t = 2e", [s3_mutated](Probe& p) {
                       WeakProjectionContext ctx = s3_mutated("t", "t", "e", 2);
                       DerivedPair d = derive_actions_cocomm(ctx);
                       const MatchedPair& mp = d.pair;
                       Identity id{mul(dense(mp.tr), kron(ident(mp.b.dim()), dense(mp.r.u))),
                                   mul(dense(mp.r.u), dense(mp.b.eps))};
                       std::string why;
                       p.require(witness_matches(d.report.find("mp.mp4_unit_left_action"), id, why), why);
                   }});

    out.push_back({"bosonization", "kS3: t t = 2e", [s3_mutated](Probe& p) {
                       WeakProjectionContext ctx = s3_mutated("t", "t", "e", 2);
                       Report rep = bosonization_checks(ctx);
                       const Check* c = rep.find("tl_trivial_iff_pi_left_linear");
                       const BraidedBialgebra r = ctx.r_bialgebra();
                       const bool tl_trivial = dense(ctx.maps.mu_b_r) == kron(ident(ctx.b.dim()), dense(r.eps));
                       const bool linear = dense_left_linear(ctx);
                       const std::string expected = std::string("tl_trivial=") + (tl_trivial ? "yes" : "no") +
                                                    ",pi_left_linear=" + (linear ? "yes" : "no");
                       p.require(tl_trivial != linear, "dense evaluation does not break the equivalence");
                       p.require(c && c->status == Status::fail && c->witness == expected,
                                 "witness " + (c ? c->witness_text() : std::string("missing")) + " expected " +
                                     expected);
                   }});

    out.push_back({"filtration", "H4: delta(x) gains x x", [](Probe& p) {
                       BraidedBialgebra a = alg("H4.alg"), b = alg("H4_C2.alg");
                       const std::size_t n = a.dim(), x = index_of(a, "x");
                       BraidedBialgebra bad = set_entry(a, StructureMap::delta, x * n + x, x, 1);
                       Matrix sigma = map("H4_sigma.map", b, a).mat();
                       FiltrationReport f = b_adic_filtration(bad, make_subobject(bad.carrier, sigma));
                       const std::vector<std::size_t> dims = oracle_filtration(bad, sigma);
                       p.require(!f.exhaustive, "filtration still exhaustive");
                       p.require(f.dims == dims, "dims differ from the dense computation");
                       Report rep = check_magnum_preconditions(bad, b, Morphism(b.carrier, a.carrier, sigma));
                       const Check* c = rep.find("filtration_exhaustive");
                       std::string text = "[";
                       for (std::size_t k = 0; k < dims.size(); ++k) text += (k ? "," : "") + std::to_string(dims[k]);
                       text += "]";
                       p.require(c && c->status == Status::fail && c->witness.find(text) != std::string::npos,
                                 "magnum witness " + (c ? c->witness_text() : std::string("missing")) +
                                     " expected dims " + text);
                   }});
    return out;
}

void mutation_sensitivity(Probe& p) {
    std::map<std::string, std::size_t> per_suite;
    std::size_t total = 0;
    for (const Mutation& m : mutations()) {
        Probe inner;
        try {
            m.run(inner);
        } catch (const std::exception& e) {
            inner.require(false, std::string("threw: ") + e.what());
        }
        const bool ok = inner.failures().empty();
        std::cout << "  mutation [" << m.suite << "] " << m.what << ": " << (ok ? "detected" : "NOT detected") << "\n";
        for (const auto& f : inner.failures()) p.require(false, m.suite + " / " + m.what + ": " + f);
        ++per_suite[m.suite];
        ++total;
    }
    p.require(total >= 10, "fewer than 10 mutation tests");
    for (const char* s : {"axioms", "braiding", "integrals", "bd", "diagram", "cross", "matched pair", "cocommutative",
                          "bosonization", "filtration"})
        p.require(per_suite[s] > 0, std::string("no mutation for ") + s);
}

}  // namespace

int main() {
    struct Criterion {
        const char* title;
        void (*run)(Probe&);
    };
    const Criterion criteria[] = {
        {"axiom suites", axiom_suites},
        {"braiding", braiding},
        {"integrals", integrals},
        {"BD suite", bd_suite},
        {"diagram", diagram},
        {"cross product", cross_product},
        {"matched pairs", matched_pairs},
        {"cocommutative theorem", cocommutative},
        {"bosonization", bosonization},
        {"filtration and coradical", filtration},
        {"mutation sensitivity", mutation_sensitivity},
    };
    int failed = 0;
    int number = 0;
    for (const Criterion& c : criteria) {
        ++number;
        Probe p;
        try {
            c.run(p);
        } catch (const std::exception& e) {
            p.require(false, std::string("exception: ") + e.what());
        }
        const bool ok = p.failures().empty();
        std::cout << "criterion " << number << ": " << (ok ? "pass" : "fail") << " (" << c.title << ")\n";
        for (const auto& f : p.failures()) std::cout << "  - " << f << "\n";
        if (!ok) ++failed;
    }
    std::cout << (failed ? "FAILED " + std::to_string(failed) + " criteria" : std::string("all criteria passed"))
              << "\n";
    return failed ? 1 : 0;
}
