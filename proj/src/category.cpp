#include "braidhopf/category.hpp"

#include "braidhopf/error.hpp"
#include "braidhopf/linalg.hpp"

#include <map>
#include <sstream>

namespace braidhopf {

namespace {

bool same_group(const CatObject::GroupPtr& a, const CatObject::GroupPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

bool is_plain_unit(const CatObject& x) { return x.dim() == 1 && !x.graded() && !x.has_action(); }

std::string shape(const CatObject& x) {
    std::string s = std::to_string(x.dim());
    if (x.graded()) s += "(graded)";
    return s;
}

}  // namespace

CatObject::CatObject(std::size_t dim, GroupPtr group, std::vector<std::size_t> grading, std::vector<Matrix> action)
    : dim_(dim), group_(std::move(group)), grading_(std::move(grading)) {
    if (!group_) throw Error(ErrorKind::missing_grading, "graded object needs a group");
    if (grading_->size() != dim_) throw Error(ErrorKind::shape_mismatch, "grading length differs from dimension");
    for (auto g : *grading_)
        if (g >= group_->order()) throw Error(ErrorKind::shape_mismatch, "grading index out of range");
    if (!action.empty()) {
        if (action.size() != group_->order())
            throw Error(ErrorKind::shape_mismatch, "action needs one matrix per group element");
        for (const auto& a : action)
            if (a.rows() != dim_ || a.cols() != dim_)
                throw Error(ErrorKind::shape_mismatch, "action matrix has wrong shape");
        action_ = std::make_shared<const std::vector<Matrix>>(std::move(action));
    }
}

const std::vector<std::size_t>& CatObject::grading() const {
    if (!grading_) throw Error(ErrorKind::missing_grading, "object has no grading");
    return *grading_;
}

const std::vector<Matrix>& CatObject::actions() const {
    if (!action_) throw Error(ErrorKind::missing_action, "object has no group action");
    return *action_;
}

bool CatObject::compatible_with(const CatObject& other) const {
    if (dim_ != other.dim_) return false;
    if (graded() != other.graded()) return false;
    if (graded() && *grading_ != *other.grading_) return false;
    return true;
}

CatObject tensor_obj(const CatObject& x, const CatObject& y) {
    if (is_plain_unit(x)) return y;
    if (is_plain_unit(y)) return x;
    if (x.graded() != y.graded() || x.has_action() != y.has_action())
        throw Error(ErrorKind::backend_mismatch, "tensor of objects carrying different structure");
    if (!x.graded()) return CatObject(x.dim() * y.dim());
    if (!same_group(x.group_ptr(), y.group_ptr()))
        throw Error(ErrorKind::backend_mismatch, "tensor of objects graded by different groups");
    const FiniteGroup& g = *x.group_ptr();
    std::vector<std::size_t> grading;
    grading.reserve(x.dim() * y.dim());
    for (auto a : x.grading())
        for (auto b : y.grading()) grading.push_back(g.mul(a, b));
    std::vector<Matrix> action;
    if (x.has_action()) {
        action.reserve(g.order());
        for (std::size_t h = 0; h < g.order(); ++h) action.push_back(kron(x.action(h), y.action(h)));
    }
    return CatObject(x.dim() * y.dim(), x.group_ptr(), std::move(grading), std::move(action));
}

Morphism::Morphism(CatObject dom, CatObject cod, Matrix mat)
    : dom_(std::move(dom)), cod_(std::move(cod)), mat_(std::move(mat)) {
    if (mat_.rows() != cod_.dim() || mat_.cols() != dom_.dim())
        throw Error(ErrorKind::shape_mismatch, "matrix " + std::to_string(mat_.rows()) + "x" +
                                                   std::to_string(mat_.cols()) + " does not fit " +
                                                   std::to_string(dom_.dim()) + " -> " + std::to_string(cod_.dim()));
}

Morphism identity(const CatObject& x) { return Morphism(x, x, Matrix::identity(x.dim())); }

Morphism zero_morphism(const CatObject& dom, const CatObject& cod) {
    return Morphism(dom, cod, Matrix::zero(cod.dim(), dom.dim()));
}

Morphism operator*(const Morphism& f, const Morphism& g) {
    if (!g.cod().compatible_with(f.dom()))
        throw Error(ErrorKind::shape_mismatch,
                    "composition of " + shape(f.dom()) + "->" + shape(f.cod()) + " after " + shape(g.dom()) + "->" +
                        shape(g.cod()));
    return Morphism(g.dom(), f.cod(), f.mat() * g.mat());
}

Morphism operator+(const Morphism& f, const Morphism& g) {
    if (!f.dom().compatible_with(g.dom()) || !f.cod().compatible_with(g.cod()))
        throw Error(ErrorKind::shape_mismatch, "sum of morphisms with different (co)domains");
    return Morphism(f.dom(), f.cod(), f.mat() + g.mat());
}

Morphism operator-(const Morphism& f, const Morphism& g) {
    if (!f.dom().compatible_with(g.dom()) || !f.cod().compatible_with(g.cod()))
        throw Error(ErrorKind::shape_mismatch, "difference of morphisms with different (co)domains");
    return Morphism(f.dom(), f.cod(), f.mat() - g.mat());
}

Morphism operator*(const Scalar& s, const Morphism& f) { return Morphism(f.dom(), f.cod(), s * f.mat()); }

Morphism tensor(const Morphism& f, const Morphism& g) {
    return Morphism(tensor_obj(f.dom(), g.dom()), tensor_obj(f.cod(), g.cod()), kron(f.mat(), g.mat()));
}

void expect_equal(Report& report, const std::string& name, const Morphism& lhs, const Morphism& rhs) {
    report.expect_equal(name, lhs.mat(), rhs.mat());
}

void expect_all(Report& report, const std::string& name, const std::vector<MorphismPair>& identities) {
    for (std::size_t k = 0; k < identities.size(); ++k) {
        Report probe;
        const Check& c = probe.expect_equal(name, identities[k].first.mat(), identities[k].second.mat());
        if (!c.passed() || k + 1 == identities.size()) {
            Check copy = c;
            if (!c.passed() && identities.size() > 1) {
                copy.witness = "identity" + std::to_string(k + 1) + ":" + c.witness_text();
                copy.entry.reset();
            }
            report.add(std::move(copy));
            return;
        }
    }
}


Backend Backend::vec() { return Backend{}; }

Backend Backend::super() {
    Backend b;
    b.kind_ = BackendKind::super;
    b.group_ = std::make_shared<const FiniteGroup>("Z2", std::vector<std::string>{"0", "1"},
                                                   std::vector<std::vector<std::size_t>>{{0, 1}, {1, 0}});
    b.bichar_ = {1, 1, 1, -1};
    return b;
}

Backend Backend::sign_graded(FiniteGroup group, std::vector<int> bichar) {
    const std::size_t n = group.order();
    if (!group.is_abelian()) throw Error(ErrorKind::group_law, "sign-graded backend needs an abelian group");
    if (bichar.size() != n * n) throw Error(ErrorKind::shape_mismatch, "bicharacter needs |G|^2 entries");
    for (int v : bichar)
        if (v != 1 && v != -1) throw Error(ErrorKind::group_law, "bicharacter values must be +1 or -1");
    auto chi = [&](std::size_t a, std::size_t b) { return bichar[a * n + b]; };
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                if (chi(group.mul(a, b), c) != chi(a, c) * chi(b, c))
                    throw Error(ErrorKind::group_law, "bicharacter not multiplicative in the first slot");
                if (chi(a, group.mul(b, c)) != chi(a, b) * chi(a, c))
                    throw Error(ErrorKind::group_law, "bicharacter not multiplicative in the second slot");
            }
    Backend b;
    b.kind_ = BackendKind::sign_graded;
    b.group_ = std::make_shared<const FiniteGroup>(std::move(group));
    b.bichar_ = std::move(bichar);
    return b;
}

Backend Backend::yetter_drinfeld(FiniteGroup group) {
    Backend b;
    b.kind_ = BackendKind::yetter_drinfeld;
    b.group_ = std::make_shared<const FiniteGroup>(std::move(group));
    return b;
}

const FiniteGroup& Backend::group() const {
    if (!group_) throw Error(ErrorKind::backend_unsupported, "backend has no group");
    return *group_;
}

std::string Backend::description() const {
    switch (kind_) {
        case BackendKind::vec: return "vec";
        case BackendKind::super: return "super";
        case BackendKind::sign_graded: return "graded " + group_->name();
        case BackendKind::yetter_drinfeld: return "yd " + group_->name();
    }
    return "?";
}

int Backend::chi(std::size_t g, std::size_t h) const {
    if (bichar_.empty()) return 1;
    return bichar_[g * group_->order() + h];
}

CatObject Backend::unit() const {
    if (kind_ == BackendKind::vec) return CatObject(1);
    std::vector<Matrix> action;
    if (requires_action()) action.assign(group_->order(), Matrix::identity(1));
    return CatObject(1, group_, {group_->identity()}, std::move(action));
}

void Backend::validate_object(const CatObject& x) const {
    if (kind_ == BackendKind::vec) return;
    if (!x.graded()) throw Error(ErrorKind::missing_grading, description() + " backend needs a grading");
    if (!same_group(x.group_ptr(), group_))
        throw Error(ErrorKind::backend_mismatch, "object graded by a different group than the backend");
    if (!requires_action()) return;
    if (!x.has_action()) throw Error(ErrorKind::missing_action, description() + " backend needs a group action");
    const FiniteGroup& g = *group_;
    if (!(x.action(g.identity()) == Matrix::identity(x.dim())))
        throw Error(ErrorKind::backend_mismatch, "identity element does not act trivially");
    for (std::size_t a = 0; a < g.order(); ++a)
        for (std::size_t b = 0; b < g.order(); ++b)
            if (!(x.action(a) * x.action(b) == x.action(g.mul(a, b))))
                throw Error(ErrorKind::backend_mismatch,
                            "action is not a homomorphism at (" + g.element_name(a) + "," + g.element_name(b) + ")");
    for (std::size_t h = 0; h < g.order(); ++h)
        for (std::size_t c = 0; c < x.dim(); ++c)
            for (const auto& e : x.action(h).column(c))
                if (x.degree(e.row) != g.conjugate(h, x.degree(c)))
                    throw Error(ErrorKind::backend_mismatch,
                                "Yetter-Drinfeld condition fails: " + g.element_name(h) + " maps basis vector " +
                                    std::to_string(c) + " out of the conjugate degree");
}

CatObject Backend::tensor(const CatObject& x, const CatObject& y) const {
    validate_object(x);
    validate_object(y);
    return tensor_obj(x, y);
}

Morphism Backend::braiding(const CatObject& x, const CatObject& y) const {
    validate_object(x);
    validate_object(y);
    const std::size_t dx = x.dim(), dy = y.dim();
    Matrix c(dx * dy, dx * dy);
    for (std::size_t i = 0; i < dx; ++i)
        for (std::size_t j = 0; j < dy; ++j) {
            const std::size_t col = i * dy + j;
            switch (kind_) {
                case BackendKind::vec: c.set(j * dx + i, col, Scalar(1)); break;
                case BackendKind::super:
                case BackendKind::sign_graded:
                    c.set(j * dx + i, col, Scalar(chi(x.degree(i), y.degree(j))));
                    break;
                case BackendKind::yetter_drinfeld:
                    // v_i (x) w_j  ->  (deg(v_i) . w_j) (x) v_i
                    for (const auto& e : y.action(x.degree(i)).column(j)) c.set(e.row * dx + i, col, e.value);
                    break;
            }
        }
    return Morphism(tensor_obj(x, y), tensor_obj(y, x), std::move(c));
}

Morphism Backend::braiding_inv(const CatObject& x, const CatObject& y) const {
    validate_object(x);
    validate_object(y);
    const std::size_t dx = x.dim(), dy = y.dim();
    Matrix c(dx * dy, dx * dy);
    for (std::size_t i = 0; i < dx; ++i)
        for (std::size_t j = 0; j < dy; ++j) {
            const std::size_t col = j * dx + i;  // w_j (x) v_i
            switch (kind_) {
                case BackendKind::vec: c.set(i * dy + j, col, Scalar(1)); break;
                case BackendKind::super:
                case BackendKind::sign_graded:
                    c.set(i * dy + j, col, Scalar(chi(x.degree(i), y.degree(j))));
                    break;
                case BackendKind::yetter_drinfeld:
                    // w_j (x) v_i  ->  v_i (x) (deg(v_i)^-1 . w_j)
                    for (const auto& e : y.action(group_->inverse(x.degree(i))).column(j))
                        c.set(i * dy + e.row, col, e.value);
                    break;
            }
        }
    return Morphism(tensor_obj(y, x), tensor_obj(x, y), std::move(c));
}

Report Backend::verify_morphism(const Morphism& f, const std::string& name) const {
    Report r;
    if (kind_ == BackendKind::vec) {
        r.expect(name + ".shape", f.mat().rows() == f.cod().dim() && f.mat().cols() == f.dom().dim(), "shape");
        return r;
    }
    try {
        validate_object(f.dom());
        validate_object(f.cod());
    } catch (const Error& e) {
        r.expect(name + ".objects", false, e.what());
        return r;
    }
    std::ostringstream bad;
    std::size_t violations = 0;
    for (std::size_t c = 0; c < f.mat().cols(); ++c)
        for (const auto& e : f.mat().column(c))
            if (f.cod().degree(e.row) != f.dom().degree(c)) {
                if (violations < 8) bad << (violations ? ";" : "") << "(" << e.row << "," << c << ")";
                ++violations;
            }
    if (violations > 8) bad << ";+" << violations - 8 << "_more";
    r.expect(name + ".grade_preserving", violations == 0, "entries=" + bad.str());
    if (requires_action()) {
        bool ok = true;
        std::string witness;
        for (std::size_t h = 0; h < group_->order() && ok; ++h) {
            auto d = first_difference(f.mat() * f.dom().action(h), f.cod().action(h) * f.mat());
            if (d) {
                ok = false;
                witness = "g=" + group_->element_name(h) + ",(" + std::to_string(d->row) + "," +
                          std::to_string(d->col) + "):lhs=" + d->lhs.get_str() + ",rhs=" + d->rhs.get_str();
            }
        }
        r.expect(name + ".equivariant", ok, witness);
    }
    return r;
}

bool operator==(const Backend& a, const Backend& b) {
    if (a.kind_ != b.kind_) return false;
    if (a.kind_ == BackendKind::vec || a.kind_ == BackendKind::super) return true;
    return same_group(a.group_, b.group_) && a.bichar_ == b.bichar_;
}

Morphism generic_morphism(const Backend& backend, const CatObject& dom, const CatObject& cod) {
    const std::size_t rows = cod.dim();
    const Matrix basis = kernel_matrix(morphism_constraints(backend, dom, cod));
    Matrix f(rows, dom.dim());
    for (std::size_t k = 0; k < basis.cols(); ++k)
        for (const auto& e : basis.column(k)) f.add(e.row % rows, e.row / rows, e.value);
    return Morphism(dom, cod, std::move(f));
}

Matrix morphism_constraints(const Backend& backend, const CatObject& dom, const CatObject& cod) {
    const std::size_t rows = cod.dim(), cols = dom.dim();
    if (backend.kind() == BackendKind::vec) return Matrix(0, rows * cols);
    backend.validate_object(dom);
    backend.validate_object(cod);
    std::vector<std::vector<Matrix::Entry>> eqs;
    for (std::size_t c = 0; c < cols; ++c)
        for (std::size_t r = 0; r < rows; ++r)
            if (cod.degree(r) != dom.degree(c)) eqs.push_back({{c * rows + r, Scalar(1)}});
    if (backend.requires_action()) {
        // (X act_dom(h) - act_cod(h) X)[r, c] = 0
        for (std::size_t h = 0; h < backend.group().order(); ++h) {
            const Matrix& ad = dom.action(h);
            const Matrix& ac = cod.action(h);
            const Matrix act = ac.transpose();
            for (std::size_t c = 0; c < cols; ++c)
                for (std::size_t r = 0; r < rows; ++r) {
                    std::map<std::size_t, Scalar> row;
                    for (const auto& e : ad.column(c)) row[e.row * rows + r] += e.value;
                    for (const auto& e : act.column(r)) row[c * rows + e.row] -= e.value;
                    std::vector<Matrix::Entry> entries;
                    for (auto& [k, v] : row)
                        if (!is_zero(v)) entries.push_back({k, v});
                    if (entries.empty()) continue;
                    eqs.push_back(std::move(entries));
                }
        }
    }
    Matrix out(rows * cols, eqs.size());
    for (std::size_t k = 0; k < eqs.size(); ++k) out.assign_column(k, std::move(eqs[k]));
    return out.transpose();
}

Report verify_braiding_axioms(const Backend& backend, const CatObject& x, const CatObject& y, const CatObject& z,
                              const std::vector<MorphismPair>& samples) {
    Report r;
    const auto id_x = identity(x), id_y = identity(y), id_z = identity(z);
    const auto xy = tensor_obj(x, y), yz = tensor_obj(y, z);

    // c_{X(x)Y,Z} = (c_{X,Z} (x) Y)(X (x) c_{Y,Z})
    expect_equal(r, "hexagon_left", backend.braiding(xy, z),
                 tensor(backend.braiding(x, z), id_y) * tensor(id_x, backend.braiding(y, z)));
    // c_{X,Y(x)Z} = (Y (x) c_{X,Z})(c_{X,Y} (x) Z)
    expect_equal(r, "hexagon_right", backend.braiding(x, yz),
                 tensor(id_y, backend.braiding(x, z)) * tensor(backend.braiding(x, y), id_z));

    const std::pair<const CatObject*, const CatObject*> pairs[] = {{&x, &y}, {&y, &z}, {&x, &z}};
    const char* labels[] = {"xy", "yz", "xz"};
    for (std::size_t k = 0; k < 3; ++k) {
        const auto& a = *pairs[k].first;
        const auto& b = *pairs[k].second;
        const auto c = backend.braiding(a, b);
        const auto ci = backend.braiding_inv(a, b);
        expect_equal(r, std::string("invertible_") + labels[k], ci * c, identity(tensor_obj(a, b)));
        expect_equal(r, std::string("invertible_inv_") + labels[k], c * ci, identity(tensor_obj(b, a)));
    }

    for (std::size_t k = 0; k < samples.size(); ++k) {
        const auto& [f, g] = samples[k];
        // f: X -> X', g: Y -> Y';  (g (x) f) c_{X,Y} = c_{X',Y'} (f (x) g)
        expect_equal(r, "naturality_" + std::to_string(k), tensor(g, f) * backend.braiding(f.dom(), g.dom()),
                     backend.braiding(f.cod(), g.cod()) * tensor(f, g));
    }
    return r;
}

}  // namespace braidhopf
