#include "braidhopf/cli.hpp"
#include "braidhopf/error.hpp"
#include "braidhopf/filtration.hpp"
#include "braidhopf/group_algebra.hpp"
#include "braidhopf/io.hpp"
#include "braidhopf/products.hpp"
#include "braidhopf/weak_projection.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

namespace py = pybind11;
using namespace braidhopf;

namespace {

std::vector<std::vector<std::string>> rows_of(const Matrix& m) {
    std::vector<std::vector<std::string>> out(m.rows(), std::vector<std::string>(m.cols(), "0"));
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (const auto& e : m.column(c)) out[e.row][c] = e.value.get_str();
    return out;
}

Morphism morphism_from_rows(const CatObject& dom, const CatObject& cod, const std::vector<std::vector<std::string>>& rows) {
    if (rows.size() != cod.dim()) throw Error(ErrorKind::shape_mismatch, "row count differs from the codomain dimension");
    Matrix m(cod.dim(), dom.dim());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != dom.dim())
            throw Error(ErrorKind::shape_mismatch, "row length differs from the domain dimension");
        for (std::size_t c = 0; c < rows[r].size(); ++c) m.set(r, c, parse_scalar(rows[r][c]));
    }
    return Morphism(dom, cod, std::move(m));
}

py::tuple run(const std::vector<std::string>& args) {
    std::vector<std::string> full{"braidhopf"};
    full.insert(full.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : full) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact verification of Hopf algebra structures in braided categories";

    py::register_exception<Error>(m, "Error");

    py::enum_<Status>(m, "Status")
        .value("passed", Status::pass)
        .value("failed", Status::fail)
        .value("skipped", Status::skipped);

    py::class_<Check>(m, "Check")
        .def_readonly("name", &Check::name)
        .def_readonly("status", &Check::status)
        .def_property_readonly("passed", &Check::passed)
        .def_property_readonly("witness", &Check::witness_text)
        .def("__repr__", [](const Check& c) {
            return "<Check " + c.name + " " + status_name(c.status) + (c.passed() ? "" : " " + c.witness_text()) + ">";
        });

    py::class_<Report>(m, "Report")
        .def_property_readonly("passed", py::overload_cast<>(&Report::passed, py::const_))
        .def_property_readonly("checks", &Report::checks)
        .def_property_readonly("notes",
                               [](const Report& r) {
                                   py::dict d;
                                   for (const auto& n : r.notes()) d[py::str(n.name)] = n.value;
                                   return d;
                               })
        .def("check", [](const Report& r, const std::string& name) -> py::object {
            const Check* c = r.find(name);
            return c ? py::cast(*c) : py::none();
        })
        .def("format", [](const Report& r, bool machine) {
            return r.format(machine ? ReportFormat::machine : ReportFormat::plain);
        }, py::arg("machine") = false);

    py::class_<Morphism>(m, "Morphism")
        .def_property_readonly("shape", [](const Morphism& f) { return py::make_tuple(f.mat().rows(), f.mat().cols()); })
        .def("rows", [](const Morphism& f) { return rows_of(f.mat()); })
        .def("__eq__", [](const Morphism& a, const Morphism& b) { return a.mat() == b.mat(); });

    py::class_<FiniteGroup>(m, "Group")
        .def_property_readonly("name", &FiniteGroup::name)
        .def_property_readonly("order", &FiniteGroup::order)
        .def_property_readonly("elements", &FiniteGroup::element_names);

    py::class_<BraidedBialgebra>(m, "Algebra")
        .def_readonly("name", &BraidedBialgebra::name)
        .def_readonly("basis", &BraidedBialgebra::basis)
        .def_property_readonly("dim", &BraidedBialgebra::dim)
        .def_property_readonly("kind", [](const BraidedBialgebra& a) { return structure_kind_name(a.kind); })
        .def_property_readonly("backend", [](const BraidedBialgebra& a) { return a.backend.description(); })
        .def_property_readonly("cocommutative", [](const BraidedBialgebra& a) { return is_cocommutative(a); })
        .def("check_algebra", &verify_algebra)
        .def("check_coalgebra", &verify_coalgebra)
        .def("check_bialgebra", &verify_bialgebra)
        .def("check_antipode", &verify_antipode)
        .def("check_hopf", &verify_hopf)
        .def("total_integral", [](const BraidedBialgebra& h) -> std::optional<Morphism> {
            auto i = solve_total_integral(h);
            if (!i) return std::nullopt;
            return i->lambda;
        })
        .def("coradical_dim", [](const BraidedBialgebra& a) { return coradical(a).dim(); })
        .def("morphism", [](const BraidedBialgebra& dom, const BraidedBialgebra& cod,
                            const std::vector<std::vector<std::string>>& rows) {
            return morphism_from_rows(dom.carrier, cod.carrier, rows);
        }, py::arg("cod"), py::arg("rows"))
        .def("inclusion_into", [](const BraidedBialgebra& b, const BraidedBialgebra& a) {
            return Morphism(b.carrier, a.carrier, inclusion_by_name(b, a));
        })
        .def("to_text", &write_definition);

    py::class_<WeakProjectionContext>(m, "Context")
        .def_property_readonly("dim_r", [](const WeakProjectionContext& c) { return c.r.dim(); })
        .def_readonly("pi2", &WeakProjectionContext::pi2)
        .def_readonly("i", &WeakProjectionContext::i)
        .def_readonly("p", &WeakProjectionContext::p)
        .def("bd_suite", &run_bd_suite)
        .def("diagram", &verify_diagram)
        .def("cross_product", [](const WeakProjectionContext& c) { return build_cross_product(c, false).report; })
        .def("bosonization", &bosonization_checks)
        .def("cocommutative_actions", [](const WeakProjectionContext& c) { return derive_actions_cocomm(c).report; });

    py::class_<FiltrationReport>(m, "Filtration")
        .def_readonly("dims", &FiltrationReport::dims)
        .def_readonly("stabilized_at", &FiltrationReport::stabilized_at)
        .def_readonly("exhaustive", &FiltrationReport::exhaustive);

    m.def("load_algebra", &load_algebra, py::arg("path"));
    m.def("load_group", &load_group, py::arg("path"));
    m.def("parse_algebra", [](const std::string& text, const std::filesystem::path& search_dir) {
        return parse_definition(text, search_dir).algebra;
    }, py::arg("text"), py::arg("search_dir") = ".");
    m.def("load_morphism", &load_morphism, py::arg("path"), py::arg("dom"), py::arg("cod"));
    m.def("group_algebra", [](const FiniteGroup& g, const std::string& name) { return group_algebra(g, name); },
          py::arg("group"), py::arg("name") = "");
    m.def("verify_weak_projection", &verify_weak_projection, py::arg("a"), py::arg("b"), py::arg("sigma"),
          py::arg("pi"));
    m.def("build_context", &build_context, py::arg("a"), py::arg("b"), py::arg("sigma"), py::arg("pi"));
    m.def("search_weak_projection", [](const BraidedBialgebra& a, const BraidedBialgebra& b, const Morphism& sigma) {
        return search_weak_projection(a, b, sigma).pi;
    }, py::arg("a"), py::arg("b"), py::arg("sigma"));
    m.def("b_adic_filtration", [](const BraidedBialgebra& a, const Morphism& sigma, std::size_t max_n) {
        return b_adic_filtration(a, make_subobject(a.carrier, sigma.mat()), max_n);
    }, py::arg("a"), py::arg("sigma"), py::arg("max_n") = 16);
    m.def("magnum", &check_magnum_preconditions, py::arg("a"), py::arg("b"), py::arg("sigma"), py::arg("max_n") = 16);
    m.def("run", &run, py::arg("args"), "Run one command line; returns (exit code, stdout, stderr).");
}
