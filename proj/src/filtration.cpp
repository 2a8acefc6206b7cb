#include "braidhopf/filtration.hpp"

#include "braidhopf/error.hpp"
#include "braidhopf/linalg.hpp"

namespace braidhopf {

namespace {

std::string dims_text(const std::vector<std::size_t>& dims) {
    std::string s = "[";
    for (std::size_t k = 0; k < dims.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(dims[k]);
    }
    return s + "]";
}

std::string first_failure(const Report& r) {
    for (const auto& c : r.checks())
        if (c.status == Status::fail) return c.name + ":" + c.witness_text();
    return "-";
}

}  // namespace

bool Subobject::contains(const Subobject& other) const {
    if (other.embedding.rows() != embedding.rows()) return false;
    return columns_in_span(embedding, other.embedding);
}

Subobject make_subobject(const CatObject& ambient, Matrix embedding) {
    if (embedding.rows() != ambient.dim())
        throw Error(ErrorKind::shape_mismatch, "embedding has " + std::to_string(embedding.rows()) +
                                                   " rows, ambient has dim " + std::to_string(ambient.dim()));
    if (rank(embedding) != embedding.cols())
        throw Error(ErrorKind::shape_mismatch, "embedding is not injective");
    return Subobject{ambient, std::move(embedding)};
}

Subobject whole(const BraidedBialgebra& a) { return Subobject{a.carrier, Matrix::identity(a.dim())}; }

Matrix quotient_projection(const Subobject& x) {
    const std::size_t n = x.embedding.rows();
    Matrix basis = x.embedding;
    std::vector<std::size_t> chosen;
    std::size_t current_rank = rank(basis);
    for (std::size_t k = 0; k < n && current_rank < n; ++k) {
        Matrix e(n, 1);
        e.set(k, 0, Scalar(1));
        Matrix trial = hstack(basis, e);
        std::size_t r = rank(trial);
        if (r > current_rank) {
            basis = std::move(trial);
            current_rank = r;
            chosen.push_back(k);
        }
    }
    auto inv = inverse(basis);
    if (!inv) throw Error(ErrorKind::not_invertible, "subobject embedding is not injective");
    const std::size_t d = x.embedding.cols();
    Matrix p(chosen.size(), n);
    for (std::size_t c = 0; c < n; ++c)
        for (const auto& e : inv->column(c))
            if (e.row >= d) p.set(e.row - d, c, e.value);
    return p;
}

Subobject wedge(const Subobject& x, const Subobject& y, const BraidedBialgebra& a) {
    if (x.embedding.rows() != a.dim() || y.embedding.rows() != a.dim())
        throw Error(ErrorKind::shape_mismatch, "subobjects do not live in " + a.name);
    Matrix map = kron(quotient_projection(x), quotient_projection(y)) * a.delta.mat();
    return Subobject{a.carrier, kernel_matrix(map)};
}

bool is_subcoalgebra(const Subobject& x, const BraidedBialgebra& a) {
    return columns_in_span(kron(x.embedding, x.embedding), a.delta.mat() * x.embedding);
}

FiltrationReport b_adic_filtration(const BraidedBialgebra& a, const Subobject& b, std::size_t max_n) {
    if (b.embedding.rows() != a.dim())
        throw Error(ErrorKind::shape_mismatch, "subobject does not live in " + a.name);
    if (!is_subcoalgebra(b, a))
        throw Error(ErrorKind::precondition_failed, "B is not a subcoalgebra of " + a.name);
    FiltrationReport out;
    out.steps.push_back(b);
    out.dims.push_back(b.dim());
    bool stopped = b.dim() == a.dim();
    while (!stopped && out.dims.size() < max_n) {
        Subobject next = wedge(out.steps.back(), b, a);
        std::size_t d = next.dim();
        std::size_t prev = out.dims.back();
        out.steps.push_back(std::move(next));
        out.dims.push_back(d);
        if (d == a.dim() || d == prev) stopped = true;
    }
    const std::size_t last = out.dims.back();
    out.exhaustive = last == a.dim();
    if (stopped) {
        for (std::size_t k = 0; k < out.dims.size(); ++k)
            if (out.dims[k] == last) {
                out.stabilized_at = k;
                break;
            }
    }
    return out;
}

Subobject coradical(const BraidedBialgebra& a) {
    if (a.backend.kind() != BackendKind::vec)
        throw Error(ErrorKind::backend_unsupported, "coradical is only computed for ordinary coalgebras");
    const std::size_t n = a.dim();
    const Matrix& d = a.delta.mat();
    // left multiplication by e*_k in the dual algebra: L_k[c, l] = delta[k n + l, c]
    std::vector<Matrix> left(n, Matrix(n, n));
    for (std::size_t c = 0; c < n; ++c)
        for (const auto& e : d.column(c)) left[e.row / n].add(c, e.row % n, e.value);
    std::vector<Scalar> tr(n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t c = 0; c < n; ++c) tr[k] += left[k].at(c, c);
    Matrix form(n, n);
    for (std::size_t c = 0; c < n; ++c)
        for (const auto& e : d.column(c)) {
            if (is_zero(tr[c])) continue;
            std::size_t i = e.row / n;
            std::size_t j = e.row % n;
            form.add(i, j, e.value * tr[c]);
        }
    Matrix radical = kernel_matrix(form);
    return Subobject{a.carrier, kernel_matrix(radical.transpose())};
}

Report check_magnum_preconditions(const BraidedBialgebra& a, const BraidedBialgebra& b, const Morphism& sigma,
                                  std::size_t max_n) {
    Report r;
    if (sigma.mat().rows() != a.dim() || sigma.mat().cols() != b.dim())
        throw Error(ErrorKind::shape_mismatch, "sigma must map " + b.name + " into " + a.name);

    Report hopf = verify_hopf(b);
    r.expect("b_antipode", hopf.passed(), first_failure(hopf));

    auto integral = solve_total_integral(b);
    r.expect("b_coseparable", integral.has_value(), "no total integral on " + b.name);

    Subobject sub = make_subobject(a.carrier, sigma.mat());
    if (!is_subcoalgebra(sub, a)) {
        r.expect("filtration_exhaustive", false, "image of sigma is not a subcoalgebra");
    } else {
        FiltrationReport f = b_adic_filtration(a, sub, max_n);
        r.note("filtration_dims", dims_text(f.dims));
        r.expect("filtration_exhaustive", f.exhaustive, "dims=" + dims_text(f.dims));
    }

    if (a.backend.kind() == BackendKind::vec) {
        Subobject corad = coradical(a);
        r.note("coradical_dim", std::to_string(corad.dim()));
        r.expect("coradical_in_b", sub.contains(corad),
                 "dim Corad=" + std::to_string(corad.dim()) + " not inside image of sigma");
    } else {
        r.skip("coradical_in_b", "coradical is only computed in vec");
    }
    return r;
}

}  // namespace braidhopf
