#include "braidhopf/group_algebra.hpp"

#include "braidhopf/error.hpp"

#include <algorithm>

namespace braidhopf {

namespace {

BraidedBialgebra build(const FiniteGroup& g, const std::vector<std::size_t>& elements, const std::string& name) {
    const std::size_t n = elements.size();
    std::vector<std::size_t> pos(g.order(), n);
    for (std::size_t k = 0; k < n; ++k) pos[elements[k]] = k;
    Matrix m(n, n * n), u(n, 1), d(n * n, n), e(1, n), s(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            const std::size_t p = pos[g.mul(elements[a], elements[b])];
            if (p == n)
                throw Error(ErrorKind::group_law,
                            "elements not closed: " + g.element_name(elements[a]) + "*" + g.element_name(elements[b]));
            m.set(p, a * n + b, Scalar(1));
        }
        d.set(a * n + a, a, Scalar(1));
        e.set(0, a, Scalar(1));
        const std::size_t inv = pos[g.inverse(elements[a])];
        if (inv == n) throw Error(ErrorKind::group_law, "inverse missing for " + g.element_name(elements[a]));
        s.set(inv, a, Scalar(1));
    }
    const std::size_t unit = pos[g.identity()];
    if (unit == n) throw Error(ErrorKind::group_law, "identity not among the elements");
    u.set(unit, 0, Scalar(1));
    std::vector<std::string> basis;
    for (auto x : elements) basis.push_back(g.element_name(x));
    return make_bialgebra(name, Backend::vec(), CatObject(n), std::move(basis), m, u, d, e, s);
}

}  // namespace

BraidedBialgebra group_algebra(const FiniteGroup& g, const std::string& name) {
    std::vector<std::size_t> all(g.order());
    for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
    return build(g, all, name.empty() ? "k" + g.name() : name);
}

BraidedBialgebra subgroup_algebra(const FiniteGroup& g, const std::vector<std::size_t>& elements,
                                  const std::string& name) {
    return build(g, elements, name.empty() ? "k" + g.name() + "_sub" : name);
}

std::vector<std::size_t> element_indices(const FiniteGroup& g, const std::vector<std::string>& names) {
    std::vector<std::size_t> out;
    for (const auto& n : names) out.push_back(g.index_of(n));
    return out;
}

Matrix inclusion_by_name(const BraidedBialgebra& from, const BraidedBialgebra& to) {
    Matrix out(to.dim(), from.dim());
    for (std::size_t k = 0; k < from.dim(); ++k) {
        auto it = std::find(to.basis.begin(), to.basis.end(), from.basis[k]);
        if (it == to.basis.end())
            throw Error(ErrorKind::parse, "basis element " + from.basis[k] + " of " + from.name + " missing in " + to.name);
        out.set(static_cast<std::size_t>(it - to.basis.begin()), k, Scalar(1));
    }
    return out;
}

Matrix factorization_projection(const FiniteGroup& g, const std::vector<std::size_t>& transversal,
                                const BraidedBialgebra& h_algebra) {
    std::vector<std::size_t> h = element_indices(g, h_algebra.basis);
    std::vector<int> hits(g.order(), 0);
    Matrix out(h_algebra.dim(), g.order());
    for (auto k : transversal)
        for (std::size_t j = 0; j < h.size(); ++j) {
            const std::size_t x = g.mul(k, h[j]);
            if (hits[x]++) throw Error(ErrorKind::precondition_failed, "factorization is not unique");
            out.set(j, x, Scalar(1));
        }
    for (std::size_t x = 0; x < g.order(); ++x)
        if (!hits[x]) throw Error(ErrorKind::precondition_failed, g.element_name(x) + " does not factor");
    return out;
}

std::vector<std::size_t> least_coset_representatives(const FiniteGroup& g, const std::vector<std::size_t>& h) {
    std::vector<bool> seen(g.order(), false);
    std::vector<std::size_t> order(g.order());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return g.element_name(a) < g.element_name(b); });
    std::vector<std::size_t> reps;
    for (auto x : order) {
        if (seen[x]) continue;
        reps.push_back(x);
        for (auto y : h) seen[g.mul(x, y)] = true;
    }
    return reps;
}

CatObject conjugation_object(const Backend& yd) {
    const FiniteGroup& g = yd.group();
    const std::size_t n = g.order();
    std::vector<std::size_t> grading(n);
    std::vector<Matrix> action;
    for (std::size_t x = 0; x < n; ++x) grading[x] = x;
    for (std::size_t h = 0; h < n; ++h) {
        Matrix a(n, n);
        for (std::size_t x = 0; x < n; ++x) a.set(g.conjugate(h, x), x, Scalar(1));
        action.push_back(std::move(a));
    }
    return CatObject(n, std::make_shared<const FiniteGroup>(g), std::move(grading), std::move(action));
}

}  // namespace braidhopf
