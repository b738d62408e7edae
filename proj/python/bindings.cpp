#include <sstream>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "polygem/cli.hpp"
#include "polygem/construction.hpp"
#include "polygem/grammar.hpp"
#include "polygem/milgram.hpp"
#include "polygem/polygem2.hpp"

namespace py = pybind11;
using namespace polygem;

namespace {

std::vector<std::int64_t> coefficients(const PoincareSeries& s)
{
    std::vector<std::int64_t> out;
    for (int d = 0; d <= s.max_degree(); ++d)
        out.push_back(s[d]);
    return out;
}

}  // namespace

PYBIND11_MODULE(_polygem, m)
{
    m.doc() = "Bindings for the polygem core library";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

    m.def(
        "reduce",
        [](const std::string& text) {
            const auto e = parse_element(text);
            if (const auto* a = std::get_if<SteenrodElement>(&e))
                return a->to_string();
            return std::get<ModuleElement>(e).to_string();
        },
        py::arg("text"), "Canonical form of a Steenrod or module element.");

    m.def(
        "basis",
        [](const std::string& module, int degree) {
            const auto id = parse_module_id(module);
            std::vector<std::string> out;
            for (const auto& l : basis(id, degree))
                out.push_back(ModuleElement(id, degree, {l}).to_string());
            return out;
        },
        py::arg("module"), py::arg("degree"));

    m.def(
        "series",
        [](const std::string& space, int max_degree) {
            return coefficients(series_of_space(parse_space_factor(space), max_degree));
        },
        py::arg("space"), py::arg("max_degree") = 24);

    m.def(
        "milgram_generators",
        [](int n) {
            std::vector<py::tuple> out;
            for (const auto& e : milgram_generators(n).entries)
                out.push_back(py::make_tuple(e.degree, e.name, e.primitive));
            return out;
        },
        py::arg("n"), "(degree, name, primitive) per catalogue entry.");

    m.def(
        "construct",
        [](int l, int steps, int max_degree) {
            const auto r = run(l, steps, max_degree);
            py::dict d;
            d["verified"] = r.verified;
            d["complete"] = r.complete;
            d["nontrivial"] = r.nontrivial;
            d["nontrivial_steps"] = r.final_state.nontrivial_steps;
            std::vector<std::int64_t> dims;
            for (const auto& x : r.degrees)
                dims.push_back(x.dimension);
            d["dimensions"] = dims;
            d["report"] = r.to_tsv();
            return d;
        },
        py::arg("l") = 2, py::arg("steps") = 9, py::arg("max_degree") = 24);

    m.def(
        "classify",
        [](const std::string& text, int max_degree, int r_max) {
            const auto v = classify(parse_two_polygem(text), max_degree, r_max);
            py::dict d;
            d["case"] = to_string(v.tag);
            d["witness"] = v.witness;
            d["witness_kind"] = v.witness_kind;
            d["certified"] = v.certified;
            d["certificate"] = v.certificate;
            return d;
        },
        py::arg("text"), py::arg("max_degree") = 24, py::arg("r_max") = 20);

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = run_cli(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Returns (exit code, report, diagnostics).");
}
