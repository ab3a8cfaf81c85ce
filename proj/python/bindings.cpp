// Python bindings: documents in, JSON reports out, plus direct access to
// Hilbert coefficients, verdicts and the corpus generator.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "homkoszul/report.hpp"
#include "homkoszul/triples.hpp"

namespace py = pybind11;
using namespace homkoszul;

namespace {

RunBounds bounds_from(std::uint32_t hom_bound, std::uint32_t max_deg, std::uint32_t terms) {
  RunBounds b;
  b.hom_bound = hom_bound;
  b.max_deg = max_deg;
  b.terms = terms;
  return b;
}

std::string report_for(const std::string& doc_json, const std::string& command,
                       std::uint32_t hom_bound, std::uint32_t max_deg, std::uint32_t terms,
                       bool with_timing) {
  auto doc = PresentationDocument::parse(doc_json);
  RunOptions options;
  options.with_timing = with_timing;
  return run_report(doc, command, bounds_from(hom_bound, max_deg, terms), options);
}

template <class F>
std::vector<std::int64_t> dims_impl(const F& field, const PresentationDocument& doc,
                                    std::uint32_t up_to) {
  auto pres = build_presentation(field, doc);
  AlgebraView<F> view(field, pres);
  std::vector<std::int64_t> out;
  for (std::uint32_t n = 0; n <= up_to; ++n) out.push_back(view.dim(n));
  return out;
}

std::vector<std::int64_t> component_dims(const std::string& doc_json, std::uint32_t up_to) {
  auto doc = PresentationDocument::parse(doc_json);
  if (doc.field.kind == FieldDesc::QQ) {
    RationalField field;
    return dims_impl(field, doc, up_to);
  }
  PrimeField field(doc.field.p);
  return dims_impl(field, doc, up_to);
}

std::vector<std::string> corpus_json(std::uint64_t seed, std::uint32_t count, std::uint32_t s_min,
                                     std::uint32_t s_max, std::uint32_t arrows_min,
                                     std::uint32_t arrows_max, std::uint32_t relations_min,
                                     std::uint32_t relations_max, const std::string& field,
                                     std::uint32_t monomial_bias, std::uint32_t vertices) {
  CorpusParams params;
  params.s_min = s_min;
  params.s_max = s_max;
  params.arrows_min = arrows_min;
  params.arrows_max = arrows_max;
  params.relations_min = relations_min;
  params.relations_max = relations_max;
  params.field = FieldDesc::parse(field);
  params.monomial_bias_percent = monomial_bias;
  params.vertices = vertices;
  std::vector<std::string> out;
  for (const auto& doc : random_corpus(seed, count, params)) out.push_back(doc.to_json());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact workbench for s-homogeneous algebras and generalized Koszul complexes";

  py::register_exception<Error>(m, "HomkoszulError");

  m.def("check_report", &report_for, py::arg("document"), py::arg("command") = "check",
        py::arg("hom_bound") = 6, py::arg("max_deg") = 0, py::arg("terms") = 8,
        py::arg("with_timing") = true,
        "Run a command (check/dual/triple/hilbert) and return the JSON report string.");

  m.def("component_dims", &component_dims, py::arg("document"), py::arg("up_to"),
        "Graded dimensions of the presented algebra from degree 0 to up_to.");

  m.def("corpus", &corpus_json, py::arg("seed"), py::arg("count"), py::arg("s_min") = 2,
        py::arg("s_max") = 3, py::arg("arrows_min") = 2, py::arg("arrows_max") = 3,
        py::arg("relations_min") = 1, py::arg("relations_max") = 3,
        py::arg("field") = "GF:32003", py::arg("monomial_bias") = 40, py::arg("vertices") = 1,
        "Deterministic random presentation documents as JSON strings.");

  m.def("canonical_json", [](const std::string& doc) {
    return PresentationDocument::parse(doc).to_json();
  },
        py::arg("document"), "Parse and reserialize a document canonically.");

  m.attr("__version__") = "0.1.0";
}
