#ifndef BRAIDHOPF_GROUP_HPP
#define BRAIDHOPF_GROUP_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace braidhopf {

/// Finite group given by a Cayley table over named elements. The group law
/// (closure, associativity, identity, inverses) is verified on construction.
class FiniteGroup {
public:
    FiniteGroup() = default;
    /// table[a][b] is the index of the product of element a and element b.
    /// Throws Error(group_law) if the table is not a group law.
    FiniteGroup(std::string name, std::vector<std::string> element_names,
                std::vector<std::vector<std::size_t>> cayley_table);

    static FiniteGroup trivial();
    static FiniteGroup cyclic(std::size_t n, const std::string& name = "");

    const std::string& name() const noexcept { return name_; }
    std::size_t order() const noexcept { return names_.size(); }
    const std::vector<std::string>& element_names() const noexcept { return names_; }
    const std::string& element_name(std::size_t g) const { return names_.at(g); }
    std::optional<std::size_t> find(const std::string& element) const;
    std::size_t index_of(const std::string& element) const;

    std::size_t identity() const noexcept { return identity_; }
    std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
    std::size_t inverse(std::size_t a) const { return inverses_[a]; }
    std::size_t conjugate(std::size_t h, std::size_t g) const { return mul(mul(h, g), inverse(h)); }
    bool is_abelian() const;
    const std::vector<std::vector<std::size_t>>& table() const noexcept { return table_; }

    friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
        return a.names_ == b.names_ && a.table_ == b.table_;
    }

private:
    std::string name_;
    std::vector<std::string> names_;
    std::vector<std::vector<std::size_t>> table_;
    std::size_t identity_ = 0;
    std::vector<std::size_t> inverses_;
};

}  // namespace braidhopf

#endif
