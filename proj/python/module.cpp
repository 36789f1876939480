#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ptl/commands.hpp"

namespace py = pybind11;

namespace {

py::object json_to_py(const nlohmann::json& j) {
  switch (j.type()) {
    case nlohmann::json::value_t::null: return py::none();
    case nlohmann::json::value_t::boolean: return py::bool_(j.get<bool>());
    case nlohmann::json::value_t::number_integer: return py::int_(j.get<long long>());
    case nlohmann::json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
    case nlohmann::json::value_t::number_float: return py::float_(j.get<double>());
    case nlohmann::json::value_t::string: return py::str(j.get<std::string>());
    case nlohmann::json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(json_to_py(item));
      return out;
    }
    case nlohmann::json::value_t::object: {
      py::dict out;
      for (const auto& [key, value] : j.items()) out[py::str(key)] = json_to_py(value);
      return out;
    }
    default: return py::none();
  }
}

py::dict run(const std::string& command, const ptl::CommandOptions& opts) {
  ptl::CommandResult res = ptl::run_command(command, opts);
  py::dict out;
  out["exit_code"] = res.exit_code;
  out["report"] = json_to_py(res.report);
  return out;
}

ptl::CommandOptions make_opts(const std::string& doc, const std::string& map_name,
                              const std::string& candidate, const std::string& on, int max_degree,
                              long budget, const std::string& subalgebra, const std::string& kind,
                              const std::string& field, const std::string& out_path) {
  ptl::CommandOptions o;
  o.doc_path = doc;
  o.map_name = map_name;
  o.candidate_name = candidate;
  o.on = on;
  o.max_degree = max_degree;
  o.budget = budget;
  o.subalgebra = subalgebra;
  o.kind = kind;
  o.field_spec = field;
  o.out_path = out_path;
  return o;
}

}  // namespace

PYBIND11_MODULE(ptleib, m) {
  m.doc() =
      "Exact-arithmetic engine for Leibniz algebras, proto-twilled structures, "
      "deformation maps and their cohomology.";

  py::register_exception<ptl::Error>(m, "EngineError");

  m.def(
      "run_command",
      [](const std::string& command, const std::string& document, const std::string& map,
         const std::string& candidate, const std::string& on, int max_degree, long budget,
         const std::string& subalgebra, const std::string& kind, const std::string& field,
         const std::string& out) {
        return run(command, make_opts(document, map, candidate, on, max_degree, budget,
                                      subalgebra, kind, field, out));
      },
      py::arg("command"), py::arg("document") = "", py::arg("map") = "",
      py::arg("candidate") = "", py::arg("on") = "total", py::arg("max_degree") = 2,
      py::arg("budget") = 1000000L, py::arg("subalgebra") = "full", py::arg("kind") = "",
      py::arg("field") = "rational", py::arg("out") = "",
      "Run one engine command against a document on disk; returns "
      "{'exit_code': int, 'report': dict}.");

  m.def(
      "check_proto",
      [](const std::string& document) {
        ptl::CommandOptions o;
        o.doc_path = document;
        return run("check-proto", o);
      },
      py::arg("document"));

  m.def(
      "check_leibniz",
      [](const std::string& document, const std::string& on) {
        ptl::CommandOptions o;
        o.doc_path = document;
        o.on = on;
        return run("check-leibniz", o);
      },
      py::arg("document"), py::arg("on") = "total");

  m.def(
      "is_deformation_map",
      [](const std::string& document, const std::string& map) {
        ptl::CommandOptions o;
        o.doc_path = document;
        o.map_name = map;
        return run("is-deformation-map", o);
      },
      py::arg("document"), py::arg("map"));

  m.def(
      "induced",
      [](const std::string& document, const std::string& map) {
        ptl::CommandOptions o;
        o.doc_path = document;
        o.map_name = map;
        return run("induced", o);
      },
      py::arg("document"), py::arg("map"));

  m.def(
      "twist",
      [](const std::string& document, const std::string& map, const std::string& out) {
        ptl::CommandOptions o;
        o.doc_path = document;
        o.map_name = map;
        o.out_path = out;
        return run("twist", o);
      },
      py::arg("document"), py::arg("map"), py::arg("out") = "");

  m.def(
      "cohomology",
      [](const std::string& document, const std::string& map, int max_degree) {
        ptl::CommandOptions o;
        o.doc_path = document;
        o.map_name = map;
        o.max_degree = max_degree;
        return run("cohomology", o);
      },
      py::arg("document"), py::arg("map"), py::arg("max_degree") = 2);

  m.def(
      "mc_check",
      [](const std::string& document, const std::string& map) {
        ptl::CommandOptions o;
        o.doc_path = document;
        o.map_name = map;
        return run("mc-check", o);
      },
      py::arg("document"), py::arg("map"));

  m.def(
      "governing_check",
      [](const std::string& document, const std::string& map, const std::string& candidate) {
        ptl::CommandOptions o;
        o.doc_path = document;
        o.map_name = map;
        o.candidate_name = candidate;
        return run("governing-check", o);
      },
      py::arg("document"), py::arg("map"), py::arg("candidate"));

  m.def(
      "pair_mc_check",
      [](const std::string& document, const std::string& map, const std::string& subalgebra) {
        ptl::CommandOptions o;
        o.doc_path = document;
        o.map_name = map;
        o.subalgebra = subalgebra;
        return run("pair-mc-check", o);
      },
      py::arg("document"), py::arg("map"), py::arg("subalgebra") = "full");

  m.def(
      "enumerate_deformation_maps",
      [](const std::string& document, long budget) {
        ptl::CommandOptions o;
        o.doc_path = document;
        o.budget = budget;
        return run("enumerate", o);
      },
      py::arg("document"), py::arg("budget") = 1000000L);

  m.def(
      "zoo_build",
      [](const std::string& kind, const std::string& field, const std::string& out) {
        ptl::CommandOptions o;
        o.kind = kind;
        o.field_spec = field;
        o.out_path = out;
        return run("zoo-build", o);
      },
      py::arg("kind"), py::arg("field") = "rational", py::arg("out") = "");

  m.def(
      "zoo_verify",
      [](const std::string& document, const std::string& kind, long budget) {
        ptl::CommandOptions o;
        o.doc_path = document;
        o.kind = kind;
        o.budget = budget;
        return run("zoo-verify", o);
      },
      py::arg("document"), py::arg("kind"), py::arg("budget") = 1000000L);
}
