// pybind11 bindings. Structured results cross the boundary as the same JSON
// text the CLI writes; the Python package decodes it.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/complex.h>
#include <pybind11/stl.h>

#include "hopfdepth/constructors.hpp"
#include "hopfdepth/corpus.hpp"
#include "hopfdepth/errors.hpp"
#include "hopfdepth/serialize.hpp"

namespace py = pybind11;
using namespace hopfdepth;

namespace {

HopfAlgebraPtr algebra_for(const FiniteGroup& g, const std::string& kind) {
    if (kind == "group-algebra") return group_algebra(g);
    if (kind == "dual") return dual_group_algebra(g);
    throw py::value_error("kind must be 'group-algebra' or 'dual'");
}

std::string character_table(const std::string& ref, bool dual) {
    const FiniteGroup g = load_group(ref);
    const auto h = dual ? dual_group_algebra(g) : group_algebra(g);
    return dump_character_table(dual ? irr_dual_group_algebra(g, h) : irr_group_algebra(g, h));
}

std::string check(const std::string& ref, const std::string& selector, bool dual) {
    const auto ctx = make_group_context(load_group(ref), dual);
    const std::size_t i = find_subgroup(*ctx, selector);
    if (dual && !is_normal(ctx->group, ctx->subgroups[i]))
        throw NotNormal(subgroup_label(ctx->group, ctx->subgroups[i]) + " is not normal");
    return verdict_to_json(theorem_check(dual ? dual_pair(*ctx, i) : group_pair(*ctx, i)));
}

py::list subgroups(const std::string& ref) {
    const FiniteGroup g = load_group(ref);
    py::list out;
    const auto subs = enumerate_subgroups(g);
    for (std::size_t i = 0; i < subs.size(); ++i) {
        py::dict d;
        d["index"] = i;
        d["label"] = subgroup_label(g, subs[i]);
        d["order"] = subs[i].order();
        d["normal"] = is_normal(g, subs[i]);
        out.append(d);
    }
    return out;
}

std::string survey(const std::optional<std::vector<std::string>>& groups, bool include_duals, std::size_t jobs,
                   const std::optional<std::string>& corpus) {
    CorpusSpec spec = corpus ? load_corpus_spec(*corpus) : default_corpus();
    if (groups) spec.groups = *groups;
    if (!corpus) spec.include_duals = include_duals;
    return survey_to_json(run_survey(spec, jobs));
}

std::vector<std::pair<std::string, bool>> verify_dump(const std::string& text) {
    std::vector<std::pair<std::string, bool>> out;
    for (const auto& a : verify_hopf_axioms(*load_algebra(text)).axioms) out.emplace_back(a.name, a.passed);
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact character theory and depth-two checks for semisimple Hopf algebras";

    auto base = py::register_exception<Error>(m, "HopfdepthError", PyExc_RuntimeError);
    py::register_exception<GroupError>(m, "GroupError", base.ptr());
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<NotNormal>(m, "NotNormal", base.ptr());
    py::register_exception<CapExceeded>(m, "CapExceeded", base.ptr());
    py::register_exception<DivisionByZero>(m, "DivisionByZero", PyExc_ZeroDivisionError);

    py::class_<Cyclotomic>(m, "Cyclotomic")
        .def(py::init<>())
        .def(py::init<long>())
        .def(py::init([](const std::string& q) { return Cyclotomic(parse_rational(q)); }), py::arg("fraction"))
        .def_static("root_of_unity", &Cyclotomic::root_of_unity, py::arg("n"), py::arg("k") = 1)
        .def_static("from_json", [](const std::string& s) { return scalar_from_json(s); })
        .def("to_json", [](const Cyclotomic& c) { return scalar_to_json(c); })
        .def_property_readonly("order", &Cyclotomic::order)
        .def_property_readonly("coefficients",
                               [](const Cyclotomic& c) {
                                   std::vector<std::string> out;
                                   for (const auto& q : c.coefficients()) out.push_back(to_fraction_string(q));
                                   return out;
                               })
        .def("is_rational", &Cyclotomic::is_rational)
        .def("is_zero", &Cyclotomic::is_zero)
        .def("inverse", &Cyclotomic::inverse)
        .def("__complex__", &Cyclotomic::to_complex)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def(long() + py::self)
        .def(long() - py::self)
        .def(long() * py::self)
        .def(long() / py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def("__hash__", [](const Cyclotomic& c) { return py::hash(py::str(c.to_string())); })
        .def("__str__", &Cyclotomic::to_string)
        .def("__repr__", [](const Cyclotomic& c) { return "Cyclotomic(" + c.to_string() + ")"; });
    py::implicitly_convertible<long, Cyclotomic>();

    m.def("groups", &builtin_group_names, "Names of the built-in groups.");
    m.def("subgroups", &subgroups, py::arg("group"));
    m.def("character_table_json", &character_table, py::arg("group"), py::arg("dual") = false,
          py::call_guard<py::gil_scoped_release>());
    m.def("check_json", &check, py::arg("group"), py::arg("subgroup"), py::arg("dual") = false,
          py::call_guard<py::gil_scoped_release>());
    m.def("survey_json", &survey, py::arg("groups") = py::none(), py::arg("include_duals") = true,
          py::arg("jobs") = 1, py::arg("corpus") = py::none(), py::call_guard<py::gil_scoped_release>());
    m.def(
        "dump_algebra", [](const std::string& ref, const std::string& kind) {
            return dump_algebra(*algebra_for(load_group(ref), kind));
        },
        py::arg("group"), py::arg("kind") = "group-algebra");
    m.def("verify_dump", &verify_dump, py::arg("text"));
}
