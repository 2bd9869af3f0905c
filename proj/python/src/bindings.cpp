#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "maymust/check.hpp"
#include "maymust/error.hpp"
#include "maymust/generate.hpp"
#include "maymust/io.hpp"
#include "maymust/semantics.hpp"

namespace py = pybind11;
using namespace maymust;

namespace {

// Labellings cross the boundary as {argument id: "in" | "out" | "undec"}.
std::vector<py::dict> to_python(const Framework& f, const SemanticsResult& r) {
    std::vector<py::dict> out;
    for (const Labelling& l : r.labellings) {
        py::dict d;
        for (ArgIndex a = 0; a < f.size(); ++a) d[py::str(f.name(a))] = std::string(to_string(l.at(a)));
        out.push_back(std::move(d));
    }
    return out;
}

Semantics semantics_named(const std::string& name) {
    const auto s = parse_semantics(name);
    if (!s) throw Error(ErrorKind::UnknownSemantics, "'" + name + "'");
    return *s;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "May-must argumentation solver";

    // Messages start with the error kind, e.g. "NoMaximallyProper: ...".
    py::register_exception<Error>(m, "MayMustError", PyExc_ValueError);

    py::class_<Framework>(m, "Framework")
        .def_static("parse", [](const std::string& text) { return parse_mmaf(text); })
        .def_static("load", &load_mmaf)
        .def_static("random",
                    [](std::size_t n, const std::string& prob, const std::string& tuples, std::uint64_t seed) {
                        GeneratorParams p;
                        p.n = n;
                        p.edge_prob = Rational::parse_decimal(prob);
                        const auto mode = parse_tuple_mode(tuples);
                        if (!mode) throw Error(ErrorKind::SyntaxError, "unknown tuple mode '" + tuples + "'");
                        p.tuples = *mode;
                        p.seed = seed;
                        return generate_random(p);
                    },
                    py::arg("n"), py::arg("prob") = "0.3", py::arg("tuples") = "uniform", py::arg("seed") = 0)
        .def("__len__", &Framework::size)
        .def_property_readonly("names", &Framework::names)
        .def_property_readonly("attacks",
                               [](const Framework& f) {
                                   std::vector<std::pair<std::string, std::string>> out;
                                   for (auto [a, b] : f.attacks()) out.emplace_back(f.name(a), f.name(b));
                                   return out;
                               })
        .def("tuple",
             [](const Framework& f, const std::string& id) {
                 const NuanceTuple& t = f.tuple(f.index_of(id));
                 return py::make_tuple(py::make_tuple(t.acc_may, t.acc_must), py::make_tuple(t.rej_may, t.rej_must));
             })
        .def("to_mmaf", &serialize_mmaf)
        .def(
            "solve",
            [](const Framework& f, const std::string& semantics, const std::string& engine) {
                const auto e = parse_engine(engine);
                if (!e) throw Error(ErrorKind::UnknownSemantics, "unknown engine '" + engine + "'");
                const Semantics s = semantics_named(semantics);
                SemanticsResult r;
                {
                    py::gil_scoped_release release;
                    r = solve(f, s, {*e, 1});
                }
                return to_python(f, r);
            },
            py::arg("semantics"), py::arg("engine") = "brute")
        .def(
            "render",
            [](const Framework& f, const std::string& semantics, const std::string& format) {
                const SemanticsResult r = solve(f, semantics_named(semantics));
                const OutputFormat fmt = format == "text"  ? OutputFormat::Text
                                         : format == "dot" ? OutputFormat::Dot
                                                           : OutputFormat::Json;
                return render(f, r, fmt);
            },
            py::arg("semantics"), py::arg("format") = "json")
        .def("check", [](const Framework& f) {
            const DiffReport r = check_instance(f);
            py::dict out;
            for (const Verdict& v : r.verdicts) out[py::str(v.check)] = v.passed;
            return out;
        });
}
