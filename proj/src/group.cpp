#include "braidhopf/group.hpp"

#include "braidhopf/error.hpp"

#include <set>

namespace braidhopf {

FiniteGroup::FiniteGroup(std::string name, std::vector<std::string> element_names,
                         std::vector<std::vector<std::size_t>> cayley_table)
    : name_(std::move(name)), names_(std::move(element_names)), table_(std::move(cayley_table)) {
    const std::size_t n = names_.size();
    if (n == 0) throw Error(ErrorKind::group_law, "group has no elements");
    if (std::set<std::string>(names_.begin(), names_.end()).size() != n)
        throw Error(ErrorKind::group_law, "duplicate element names");
    if (table_.size() != n) throw Error(ErrorKind::group_law, "table must have one row per element");
    for (const auto& row : table_) {
        if (row.size() != n) throw Error(ErrorKind::group_law, "table row has wrong length");
        for (auto v : row)
            if (v >= n) throw Error(ErrorKind::group_law, "table entry out of range");
    }
    std::optional<std::size_t> id;
    for (std::size_t e = 0; e < n && !id; ++e) {
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a) ok = table_[e][a] == a && table_[a][e] == a;
        if (ok) id = e;
    }
    if (!id) throw Error(ErrorKind::group_law, "no identity element");
    identity_ = *id;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                    throw Error(ErrorKind::group_law, "associativity fails at (" + names_[a] + "," + names_[b] +
                                                          "," + names_[c] + ")");
    inverses_.assign(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b)
            if (table_[a][b] == identity_ && table_[b][a] == identity_) inverses_[a] = b;
        if (inverses_[a] == n) throw Error(ErrorKind::group_law, "element " + names_[a] + " has no inverse");
    }
}

FiniteGroup FiniteGroup::trivial() { return FiniteGroup("1", {"e"}, {{0}}); }

FiniteGroup FiniteGroup::cyclic(std::size_t n, const std::string& name) {
    std::vector<std::string> names;
    for (std::size_t k = 0; k < n; ++k) names.push_back(std::to_string(k));
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) table[a][b] = (a + b) % n;
    return FiniteGroup(name.empty() ? "Z" + std::to_string(n) : name, std::move(names), std::move(table));
}

std::optional<std::size_t> FiniteGroup::find(const std::string& element) const {
    for (std::size_t k = 0; k < names_.size(); ++k)
        if (names_[k] == element) return k;
    return std::nullopt;
}

std::size_t FiniteGroup::index_of(const std::string& element) const {
    auto k = find(element);
    if (!k) throw Error(ErrorKind::parse, "unknown element '" + element + "' of group " + name_);
    return *k;
}

bool FiniteGroup::is_abelian() const {
    for (std::size_t a = 0; a < order(); ++a)
        for (std::size_t b = 0; b < a; ++b)
            if (table_[a][b] != table_[b][a]) return false;
    return true;
}

}  // namespace braidhopf
