#ifndef BRAIDHOPF_TESTS_FIXTURES_HPP
#define BRAIDHOPF_TESTS_FIXTURES_HPP

#include "braidhopf/group_algebra.hpp"
#include "braidhopf/products.hpp"
#include "braidhopf/weak_projection.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace fixtures {

using namespace braidhopf;

using Perm = std::vector<std::size_t>;

inline Perm compose(const Perm& a, const Perm& b) {
    Perm out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[b[k]];
    return out;
}

inline FiniteGroup perm_group(const std::string& name, const std::vector<std::pair<std::string, Perm>>& elems) {
    std::vector<std::string> names;
    for (const auto& [n, p] : elems) names.push_back(n);
    std::vector<std::vector<std::size_t>> table(elems.size(), std::vector<std::size_t>(elems.size()));
    for (std::size_t a = 0; a < elems.size(); ++a)
        for (std::size_t b = 0; b < elems.size(); ++b) {
            Perm ab = compose(elems[a].second, elems[b].second);
            auto it = std::find_if(elems.begin(), elems.end(), [&](const auto& e) { return e.second == ab; });
            table[a][b] = static_cast<std::size_t>(it - elems.begin());
        }
    return FiniteGroup(name, names, table);
}

/// S3 with c = (123), t = (12).
inline FiniteGroup s3() {
    Perm e{0, 1, 2}, c{1, 2, 0}, t{1, 0, 2};
    Perm cc = compose(c, c);
    return perm_group("S3", {{"e", e}, {"c", c}, {"cc", cc}, {"t", t}, {"ct", compose(c, t)},
                             {"cct", compose(cc, t)}});
}

inline std::string one_line(const Perm& p) {
    std::string s;
    for (auto v : p) s += static_cast<char>('1' + v);
    return "p" + s;
}

/// S4 with elements named by one-line notation, in lexicographic order.
inline FiniteGroup s4() {
    Perm p{0, 1, 2, 3};
    std::vector<std::pair<std::string, Perm>> elems;
    do elems.emplace_back(one_line(p), p);
    while (std::next_permutation(p.begin(), p.end()));
    return perm_group("S4", elems);
}

/// Dihedral subgroup of S4 generated by (1234) and (13), and C3 generated by (123).
inline std::vector<std::string> d4_names() {
    return {"p1234", "p2341", "p3412", "p4123", "p3214", "p1432", "p2143", "p4321"};
}
inline std::vector<std::string> c3_in_s4_names() { return {"p1234", "p2314", "p3124"}; }

inline BraidedBialgebra from_functions(const std::string& name, const Backend& backend, const CatObject& carrier,
                                       std::vector<std::string> basis,
                                       const std::function<void(std::size_t, std::size_t, Matrix&)>& mul,
                                       std::size_t unit_index,
                                       const std::function<void(std::size_t, Matrix&)>& comul,
                                       const std::vector<int>& counit, const std::vector<std::vector<int>>& anti) {
    const std::size_t n = basis.size();
    Matrix m(n, n * n), u(n, 1), d(n * n, n), e(1, n), s(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) mul(i, j, m);
    u.set(unit_index, 0, Scalar(1));
    for (std::size_t i = 0; i < n; ++i) comul(i, d);
    for (std::size_t i = 0; i < n; ++i) e.set(0, i, Scalar(counit[i]));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s.set(j, i, Scalar(anti[i][j]));
    return make_bialgebra(name, backend, carrier, std::move(basis), m, u, d, e, s);
}

/// Sweedler's algebra: g^2 = 1, x^2 = 0, xg = -gx, delta x = x (x) 1 + g (x) x.
/// Basis g^a x^b at index a + 2b.
inline BraidedBialgebra h4() {
    auto mul = [](std::size_t i, std::size_t j, Matrix& m) {
        std::size_t a = i % 2, b = i / 2, c = j % 2, d = j / 2;
        if (b + d >= 2) return;
        int sign = (b * c) % 2 ? -1 : 1;
        m.set((a + c) % 2 + 2 * (b + d), i * 4 + j, Scalar(sign));
    };
    auto comul = [](std::size_t i, Matrix& d) {
        std::size_t a = i % 2, b = i / 2;
        if (b == 0) {
            d.set(a * 4 + a, i, Scalar(1));
        } else {
            d.set((a + 2) * 4 + a, i, Scalar(1));
            d.set(((a + 1) % 2) * 4 + (a + 2), i, Scalar(1));
        }
    };
    std::vector<std::vector<int>> anti{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}};
    return from_functions("H4", Backend::vec(), CatObject(4), {"1", "g", "x", "gx"}, mul, 0, comul, {1, 1, 0, 0},
                          anti);
}

inline Morphism h4_sigma(const BraidedBialgebra& a, const BraidedBialgebra& b) {
    Matrix s(4, 2);
    s.set(0, 0, Scalar(1));
    s.set(1, 1, Scalar(1));
    return Morphism(b.carrier, a.carrier, s);
}

inline Morphism h4_pi(const BraidedBialgebra& a, const BraidedBialgebra& b) {
    Matrix p(2, 4);
    p.set(0, 0, Scalar(1));
    p.set(1, 1, Scalar(1));
    return Morphism(a.carrier, b.carrier, p);
}

inline BraidedBialgebra c2_algebra() { return group_algebra(FiniteGroup::cyclic(2, "C2")); }

/// Exterior algebra on one primitive x with S(x) = -x, on the carrier given.
inline BraidedBialgebra lambda_on(const std::string& name, const Backend& backend, const CatObject& carrier) {
    auto mul = [](std::size_t i, std::size_t j, Matrix& m) {
        if (i + j <= 1) m.set(i + j, i * 2 + j, Scalar(1));
    };
    auto comul = [](std::size_t i, Matrix& d) {
        if (i == 0) {
            d.set(0, 0, Scalar(1));
        } else {
            d.set(2, 1, Scalar(1));
            d.set(1, 1, Scalar(1));
        }
    };
    return from_functions(name, backend, carrier, {"1", "x"}, mul, 0, comul, {1, 0}, {{1, 0}, {0, -1}});
}

inline BraidedBialgebra lambda_super() {
    Backend b = Backend::super();
    return lambda_on("lambda_super", b, CatObject(2, std::make_shared<FiniteGroup>(b.group()), {0, 1}));
}

inline BraidedBialgebra lambda_vec() { return lambda_on("lambda_vec", Backend::vec(), CatObject(2)); }

inline BraidedBialgebra lambda_yd() {
    Backend b = Backend::yetter_drinfeld(FiniteGroup::cyclic(2, "C2"));
    std::vector<Matrix> act{Matrix::identity(2), Matrix::from_rows({{1, 0}, {0, -1}})};
    return lambda_on("lambda_yd", b, CatObject(2, std::make_shared<FiniteGroup>(b.group()), {0, 1}, act));
}

struct GroupContext {
    FiniteGroup g;
    BraidedBialgebra a;
    BraidedBialgebra b;
    Morphism sigma;
    Morphism pi;
};

inline GroupContext group_context(const FiniteGroup& g, const std::vector<std::string>& sub,
                                  const std::vector<std::string>& transversal) {
    BraidedBialgebra a = group_algebra(g);
    BraidedBialgebra b = subgroup_algebra(g, element_indices(g, sub), "k" + g.name() + "_sub");
    Morphism sigma(b.carrier, a.carrier, inclusion_by_name(b, a));
    Morphism pi(a.carrier, b.carrier, factorization_projection(g, element_indices(g, transversal), b));
    return GroupContext{g, a, b, sigma, pi};
}

/// kS3 over kC2 = {e, t}, with pi taking the t-part of g = k h, k in C3.
inline GroupContext s3_over_c2() { return group_context(s3(), {"e", "t"}, {"e", "c", "cc"}); }
/// kS3 over kC3, transversal {e, t}.
inline GroupContext s3_over_c3() { return group_context(s3(), {"e", "c", "cc"}, {"e", "t"}); }

}  // namespace fixtures

#endif
