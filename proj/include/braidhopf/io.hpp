#ifndef BRAIDHOPF_IO_HPP
#define BRAIDHOPF_IO_HPP

#include "braidhopf/structures.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace braidhopf {

/// Kind named in the header line of a definition file.
enum class DefinitionKind { hopf, bialgebra, coalgebra, object };

const char* definition_kind_name(DefinitionKind kind);

struct Definition {
    DefinitionKind kind = DefinitionKind::bialgebra;
    /// For an object file only backend, carrier and basis are filled in.
    BraidedBialgebra algebra;
};

/// Parses a line-oriented definition. Groups named on a backend line are
/// taken from a `group` block in the same text or else from `<name>.grp`
/// inside search_dir. Errors are Error(parse) with "source:line: message".
Definition parse_definition(std::string_view text, const std::filesystem::path& search_dir = ".",
                            const std::string& source = "<input>");
Definition load_definition(const std::filesystem::path& file);

/// load_definition, rejecting object files.
BraidedBialgebra load_algebra(const std::filesystem::path& file);

FiniteGroup parse_group(std::string_view text, const std::string& source = "<input>");
FiniteGroup load_group(const std::filesystem::path& file);

/// Entries `map <dom basis name> -> <cod basis name> <coeff>`; unspecified
/// columns are zero.
Morphism parse_morphism(std::string_view text, const CatObject& dom, const std::vector<std::string>& dom_basis,
                        const CatObject& cod, const std::vector<std::string>& cod_basis,
                        const std::string& source = "<input>");
Morphism load_morphism(const std::filesystem::path& file, const BraidedBialgebra& dom, const BraidedBialgebra& cod);

/// Serializations accepted by the parsers above. The algebra writer emits the
/// group block inline when the backend has a group.
std::string write_definition(const BraidedBialgebra& a);
std::string write_group(const FiniteGroup& g);
std::string write_morphism(const Morphism& f, const std::vector<std::string>& dom_basis,
                           const std::vector<std::string>& cod_basis);

}  // namespace braidhopf

#endif
