#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hyperspec/cli.hpp"
#include "hyperspec/constructions.hpp"
#include "hyperspec/io.hpp"
#include "hyperspec/selftest.hpp"
#include "hyperspec/spectral.hpp"

namespace py = pybind11;
using namespace hyperspec;

namespace {

// Reports cross the boundary as plain dicts/lists via their JSON form.
py::object to_py(const Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

Variant variant_of(const std::string& name) {
  if (name == "full") return Variant::full;
  if (name == "proper") return Variant::proper;
  throw PreconditionError("variant must be 'full' or 'proper'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "verification engine for finite Krasner hyperrings";

  py::register_exception<Error>(m, "EngineError");

  py::class_<HyperringSpec>(m, "Instance")
      .def_property_readonly("name", [](const HyperringSpec& s) { return s.name; })
      .def_property_readonly("size", [](const HyperringSpec& s) { return s.n; })
      .def_property_readonly("labels", [](const HyperringSpec& s) { return s.labels; })
      .def("__repr__", [](const HyperringSpec& s) {
        return "<Instance " + s.name + " of size " + std::to_string(s.n) + ">";
      });

  m.def("builtin_names", &builtin_names);
  m.def("builtin", &builtin, py::arg("name"));
  m.def(
      "parse",
      [](const std::string& text, int max_size) { return parse_hyperring(text, max_size); },
      py::arg("text"), py::arg("max_size") = kDefaultMaxSize);
  m.def("emit", &emit_hyperring, py::arg("instance"));
  m.def(
      "quotient",
      [](int modulus, const std::vector<Elem>& subgroup, const std::string& name) {
        return quotient_hyperring(ring_mod(modulus), subgroup, name);
      },
      py::arg("modulus"), py::arg("subgroup"), py::arg("name") = std::string());

  m.def(
      "check",
      [](const HyperringSpec& s) {
        check_format(s);
        return to_py(axiom_report_json(s, check_axioms(s)));
      },
      py::arg("instance"));
  m.def(
      "ideals",
      [](const HyperringSpec& s) {
        Hyperring r = validate(s);
        IdealLattice lat = all_hyperideals(r);
        return to_py(lattice_json(r, lat, lattice_report(r, lat)));
      },
      py::arg("instance"));
  m.def(
      "spectral",
      [](const HyperringSpec& s, const std::string& variant) {
        Hyperring r = validate(s);
        IdealLattice lat = all_hyperideals(r);
        LowerTopologySpace sp = build_lower_topology(r, lat, variant_of(variant));
        return to_py(spectral_json(r.spec.name, variant, sp.base, spectral_verdict(sp.base)));
      },
      py::arg("instance"), py::arg("variant") = "proper");
  m.def(
      "theorem",
      [](const HyperringSpec& s) {
        Hyperring r = validate(s);
        return to_py(theorem_json(r, verify_theorem(r)));
      },
      py::arg("instance"));

  m.def(
      "acceptance",
      [](std::uint64_t seed) {
        AcceptanceOptions opt;
        opt.seed = seed;
        py::list out;
        for (const CriterionResult& c : run_acceptance(opt)) {
          py::dict d;
          d["number"] = c.number;
          d["title"] = c.title;
          d["pass"] = c.pass;
          d["detail"] = c.detail;
          out.append(d);
        }
        return out;
      },
      py::arg("seed") = 1);

  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = run_command(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "run a CLI command, returns (exit_code, stdout, stderr)");
}
