#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "knotlab/branched.hpp"
#include "knotlab/cli.hpp"
#include "knotlab/constructions.hpp"
#include "knotlab/invariants.hpp"
#include "knotlab/knotdb.hpp"
#include "knotlab/reidemeister.hpp"
#include "knotlab/seifert.hpp"

namespace py = pybind11;
using namespace knotlab;

namespace {

std::vector<std::array<int, 4>> pd_tuples(const PlanarDiagram& pd) {
  std::vector<std::array<int, 4>> out;
  for (const auto& c : pd.crossings()) out.push_back(c.slots);
  return out;
}

PlanarDiagram from_tuples(const std::vector<std::array<int, 4>>& rows) {
  std::vector<Crossing> cs;
  for (const auto& r : rows) cs.push_back(Crossing{r});
  return PlanarDiagram(std::move(cs));
}

std::vector<std::int64_t> coefficients(const LaurentPoly& p) {
  std::vector<std::int64_t> out;
  if (p.is_zero()) return out;
  for (int k = p.low_degree(); k <= p.high_degree(); ++k) out.push_back(p.coefficient(k));
  return out;
}

py::dict tuple_dict(const InvariantTuple& t) {
  py::dict d;
  d["alexander"] = coefficients(t.alexander);
  d["determinant"] = t.determinant;
  d["signature"] = t.signature;
  d["genus_lower_bound"] = t.genus_lower_bound;
  return d;
}

py::dict report_dict(const CertificateReport& r) {
  py::dict d;
  d["branch_curve_embedded"] = r.branch_curve_embedded;
  d["carries_no_closed_surface"] = r.carries_no_closed_surface;
  d["transversely_orientable"] = r.transversely_orientable;
  d["disks_on_distinct_components"] = r.disks_on_distinct_components;
  d["incompressibility_certified"] = r.incompressibility_certified;
  d["euler_bookkeeping"] = r.euler_bookkeeping;
  d["verdict"] = to_string(r.verdict);
  d["notes"] = r.notes;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Knot diagrams, invariants, constructions and branched-surface certificates.";

  auto base = py::register_exception<Error>(m, "KnotlabError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<InconsistencyError>(m, "InconsistencyError", base.ptr());

  py::class_<PlanarDiagram>(m, "PlanarDiagram")
      .def(py::init(&from_tuples), py::arg("crossings"))
      .def_static("parse", &parse_pd, py::arg("text"))
      .def_property_readonly("crossings", &pd_tuples)
      .def_property_readonly("crossing_count", &PlanarDiagram::crossing_count)
      .def("__len__", &PlanarDiagram::crossing_count)
      .def("__str__", &serialize_pd)
      .def("__repr__", [](const PlanarDiagram& pd) {
        return "<PlanarDiagram with " + std::to_string(pd.crossing_count()) + " crossings>";
      })
      .def(py::self == py::self);

  m.def("parse_pd", &parse_pd, py::arg("text"));
  m.def("serialize_pd", &serialize_pd, py::arg("pd"));
  m.def("gauss_code", &gauss_code, py::arg("pd"));
  m.def(
      "validate",
      [](const PlanarDiagram& pd) {
        const ValidationReport r = validate(pd);
        std::vector<std::pair<std::string, std::string>> fails;
        for (const auto& f : r.failures) fails.emplace_back(f.rule, f.message);
        py::dict d;
        d["ok"] = r.ok;
        d["faces"] = r.faces;
        d["failures"] = fails;
        return d;
      },
      py::arg("pd"));
  m.def("writhe", &writhe, py::arg("pd"));
  m.def("mirror", &mirror, py::arg("pd"));
  m.def("is_alternating", &is_alternating, py::arg("pd"));
  m.def("unknot_kink", &unknot_kink);

  m.def("alexander", [](const PlanarDiagram& pd) { return coefficients(alexander(pd)); }, py::arg("pd"),
        "Canonical Alexander coefficients, lowest degree first.");
  m.def("determinant", &determinant, py::arg("pd"));
  m.def("signature", py::overload_cast<const PlanarDiagram&>(&signature), py::arg("pd"));
  m.def("invariants", [](const PlanarDiagram& pd) { return tuple_dict(invariant_tuple(pd)); }, py::arg("pd"));

  m.def(
      "seifert",
      [](const PlanarDiagram& pd) {
        const SeifertDecomposition s = seifert_circles(pd);
        const IncompressibilityCertificate c = incompressibility_certificate(pd);
        py::dict d;
        d["circles"] = s.circle_count;
        d["genus"] = s.genus;
        d["graph"] = s.seifert_graph;
        d["span_half"] = c.span_half;
        d["alternating"] = c.alternating;
        d["method"] = to_string(c.method);
        d["certified"] = c.certified();
        return d;
      },
      py::arg("pd"));

  m.def("rational_knot", &rational_knot, py::arg("cf"));
  m.def("torus_2n", &torus_2n, py::arg("n"));
  m.def("twist_knot", &twist_knot, py::arg("crossings"));
  m.def("cable2", &cable2, py::arg("companion"), py::arg("f"));
  m.def(
      "whitehead_double",
      [](const PlanarDiagram& k, int twists, int clasp) { return whitehead_double({k, twists, clasp}); },
      py::arg("companion"), py::arg("twists") = 0, py::arg("clasp") = 1);
  m.def(
      "paper_family",
      [](int n) {
        const FamilyMember f = paper_family(n);
        return py::make_tuple(f.pd, f.expected_name, f.twists);
      },
      py::arg("n"), "(diagram, expected name, twists) for the twist knot with 2n+6 crossings.");
  m.def("reidemeister_perturb",
        py::overload_cast<const PlanarDiagram&, std::uint64_t, int>(&reidemeister_perturb), py::arg("pd"),
        py::arg("seed"), py::arg("steps") = 10);

  m.def(
      "bf_certificate",
      [](int genus, bool certified) { return report_dict(persistence_certificate(build_bf(genus), certified)); },
      py::arg("genus"), py::arg("certified") = true);
  m.def(
      "model_certificate",
      [](const std::string& text, bool certified) {
        return report_dict(persistence_certificate(parse_model(text), certified));
      },
      py::arg("text"), py::arg("certified") = false);

  m.def(
      "identify",
      [](const PlanarDiagram& pd, const std::string& table_text) {
        const KnotTable table = table_text.empty() ? bundled_table() : parse_table(table_text);
        const IdentificationResult r = identify(pd, table);
        std::vector<std::pair<std::string, std::string>> matches;
        for (const auto& mt : r.matches) matches.emplace_back(mt.name, to_string(mt.chirality));
        return matches;
      },
      py::arg("pd"), py::arg("table_text") = "", "List of (name, 'same'|'mirror'); the bundled table by default.");
  m.def("paper_list", &paper_list);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args, const std::string& stdin_text) {
        std::istringstream in(stdin_text);
        std::ostringstream out, err;
        const int code = cli::run(args, in, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), py::arg("stdin") = "", "(exit code, stdout, stderr)");
}
