#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vbraid/pure.hpp"
#include "vbraid/realize.hpp"
#include "vbraid/search.hpp"
#include "vbraid/surface.hpp"

namespace py = pybind11;
using namespace vbraid;

namespace {

std::string status_name(RStatus s) {
  switch (s) {
    case RStatus::Equivalent: return "equivalent";
    case RStatus::Inequivalent: return "inequivalent";
    default: return "unknown";
  }
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "virtual braid words, gauss diagrams, moves and surfaces";

  py::register_exception<Error>(m, "VbraidError");

  py::class_<Permutation>(m, "Permutation")
      .def(py::init<std::vector<int>>())
      .def_readonly("images", &Permutation::images)
      .def("of", &Permutation::of)
      .def("is_identity", &Permutation::is_identity)
      .def("__len__", &Permutation::size)
      .def("__eq__", [](const Permutation &a, const Permutation &b) { return a == b; });

  py::class_<BraidWord>(m, "BraidWord")
      .def_readonly("n", &BraidWord::n)
      .def("__len__", [](const BraidWord &w) { return w.letters.size(); })
      .def("__str__", [](const BraidWord &w) { return word_to_text(w); })
      .def("__eq__", [](const BraidWord &a, const BraidWord &b) { return a == b; });

  py::class_<Arrow>(m, "Arrow")
      .def(py::init([](int from, int to, int sign) { return Arrow{from, to, sign}; }),
           py::arg("from_"), py::arg("to"), py::arg("sign"))
      .def_readonly("from_", &Arrow::from)
      .def_readonly("to", &Arrow::to)
      .def_readonly("sign", &Arrow::sign)
      .def("__eq__", [](const Arrow &a, const Arrow &b) { return a == b; });

  py::class_<BraidGaussDiagram>(m, "BraidGaussDiagram")
      .def(py::init([](int n, std::vector<Arrow> arrows, Permutation perm) {
             return BraidGaussDiagram{n, std::move(arrows), std::move(perm)};
           }),
           py::arg("n"), py::arg("arrows"), py::arg("perm"))
      .def_readonly("n", &BraidGaussDiagram::n)
      .def_readonly("arrows", &BraidGaussDiagram::arrows)
      .def_readonly("perm", &BraidGaussDiagram::perm)
      .def("__str__", [](const BraidGaussDiagram &g) { return gauss_to_text(g); })
      .def("__eq__",
           [](const BraidGaussDiagram &a, const BraidGaussDiagram &b) { return a == b; });

  py::class_<CanonicalGauss>(m, "CanonicalGauss")
      .def_readonly("n", &CanonicalGauss::n)
      .def_readonly("arrows", &CanonicalGauss::arrows)
      .def_readonly("perm", &CanonicalGauss::perm)
      .def("diagram", &CanonicalGauss::diagram)
      .def("__str__", [](const CanonicalGauss &g) { return gauss_to_text(g.diagram()); })
      .def("__eq__",
           [](const CanonicalGauss &a, const CanonicalGauss &b) { return a == b; });

  m.def("parse_word", &parse_word, py::arg("text"), py::arg("n"));
  m.def("word_to_text", &word_to_text);
  m.def("word_to_gauss", &word_to_gauss);
  m.def("gauss_to_text", &gauss_to_text);
  m.def("gauss_from_text", &gauss_from_text);
  m.def("gauss_to_json", &gauss_to_json);
  m.def("gauss_from_json", &gauss_from_json);
  m.def("canonical_form",
        [](const BraidGaussDiagram &g) { return canonical_form(g); });
  m.def("vm_equivalent", [](const BraidWord &a, const BraidWord &b) {
    return vm_equivalent(a, b);
  });
  m.def("compose", [](const BraidGaussDiagram &a, const BraidGaussDiagram &b) {
    return compose(a, b);
  });
  m.def("inverse", [](const BraidGaussDiagram &g) { return inverse(g); });
  m.def("realize", [](const BraidGaussDiagram &g) { return realize(g); });
  m.def("canonical_genus", [](const BraidWord &w) { return canonical_genus(w); });
  m.def("word_genus", &word_genus);
  m.def(
      "surface",
      [](const BraidWord &w) {
        SurfaceSummary s = surface_summary(w);
        py::dict d;
        d["vertices"] = s.vertices;
        d["edges"] = s.edges;
        d["faces"] = s.faces;
        d["genus"] = s.genus;
        return d;
      },
      "euler data of the word's thickened-surface diagram");
  m.def(
      "r_equivalent",
      [](const BraidWord &a, const BraidWord &b, int max_nodes, int insert_slack,
         int time_limit_ms) {
        RResult r = r_equivalent_bounded(a, b, Budget{max_nodes, insert_slack, time_limit_ms});
        return py::make_tuple(status_name(r.status), trace_to_json(r.trace),
                              r.certificate.invariant, r.nodes_expanded);
      },
      py::arg("a"), py::arg("b"), py::arg("max_nodes") = 2000,
      py::arg("insert_slack") = 2, py::arg("time_limit_ms") = 0,
      "bounded search; returns (status, trace_json, certificate_invariant, nodes)");
  m.def(
      "min_genus",
      [](const BraidWord &w, int max_nodes, int insert_slack) {
        GenusResult r = min_genus_bounded(w, Budget{max_nodes, insert_slack, 0});
        return py::make_tuple(r.genus, word_to_text(r.witness));
      },
      py::arg("word"), py::arg("max_nodes") = 2000, py::arg("insert_slack") = 2,
      "bounded minimization; returns (genus, witness_word)");
  m.def(
      "verify_pv",
      [](int n, int depth) { return verify_pv_presentation(n, depth).ok; },
      py::arg("n"), py::arg("depth") = 64);
  m.def(
      "pv_report_json",
      [](int n, int depth) { return pv_report_to_json(verify_pv_presentation(n, depth)); },
      py::arg("n"), py::arg("depth") = 64);
  m.def(
      "replay",
      [](const BraidWord &w, const std::string &trace_json) {
        MoveTrace t = trace_from_json(trace_json);
        return replay(word_to_gauss(w), t);
      },
      py::arg("word"), py::arg("trace_json"),
      "apply a move trace to the word's canonical diagram");
}
