// Copyright 2026 The hdec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Python bindings. Reports cross the boundary as JSON text and are decoded
// on the Python side, so they match the CLI's --json output field for field.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hdec/decision.hpp"
#include "hdec/error.hpp"
#include "hdec/oracle.hpp"
#include "hdec/parser.hpp"
#include "hdec/report.hpp"
#include "hdec/separability.hpp"
#include "hdec/solver.hpp"

namespace py = pybind11;
using namespace hdec;

namespace {

DecisionOptions options(unsigned parallel, std::uint64_t budget) {
  DecisionOptions o;
  o.parallel = parallel;
  o.solver.node_budget = budget;
  return o;
}

py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

std::optional<LanguageMode> mode_of(const std::optional<std::string>& m) {
  if (!m) return std::nullopt;
  if (*m == "utvpi") return LanguageMode::kUtvpi;
  if (*m == "butvpi") return LanguageMode::kButvpi;
  throw Error(Errc::kInvalidArgument, "mode must be 'utvpi' or 'butvpi'");
}

py::object losslessness(const Problem& p, unsigned parallel, std::uint64_t budget, bool extend) {
  DecisionOptions opts = options(parallel, budget);
  SeparabilityOutcome s;
  {
    py::gil_scoped_release release;
    s = separability_pipeline(p, opts);
  }
  if (!s.supported) return to_py(losslessness_report(p, s, nullptr));
  LosslessnessVerdict v;
  {
    py::gil_scoped_release release;
    v = check_losslessness(p.schema, p.views, s.cdcs, opts);
  }
  Json report = losslessness_report(p, s, &v);
  if (extend && !v.lossless && (!s.xuinds.empty() || !s.yuinds.empty())) {
    std::vector<Uind> uinds = s.xuinds;
    uinds.insert(uinds.end(), s.yuinds.begin(), s.yuinds.end());
    Instance start(p.schema.relation_name);
    start.insert(*v.witness);
    Instance full = extend_to_uind_model(p.schema, start, s.cdcs, uinds, opts.solver);
    report["extended_instance"] = to_json(full);
    report["extended_instance_valid"] = satisfies_all(full, p);
  }
  return to_py(report);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Consistency and losslessness checks for conditional domain constraints.";

  static py::exception<Error> error(m, "HdecError", PyExc_ValueError);
  static py::exception<ParseError> parse_error(m, "ParseError", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      py::object exc = parse_error;
      py::object inst = exc(e.what());
      inst.attr("code") = std::string(errc_name(e.code()));
      inst.attr("line") = e.line();
      inst.attr("column") = e.column();
      PyErr_SetObject(parse_error.ptr(), inst.ptr());
    } catch (const Error& e) {
      py::object exc = error;
      py::object inst = exc(e.what());
      inst.attr("code") = std::string(errc_name(e.code()));
      PyErr_SetObject(error.ptr(), inst.ptr());
    }
  });

  py::class_<Problem>(m, "Problem")
      .def_property_readonly("relation", [](const Problem& p) { return p.schema.relation_name; })
      .def_property_readonly("k", [](const Problem& p) { return p.schema.k; })
      .def_property_readonly("m", [](const Problem& p) { return p.schema.m; })
      .def_property_readonly("mode", [](const Problem& p) { return to_string(p.mode); })
      .def_property_readonly("cdcs",
                             [](const Problem& p) {
                               std::vector<std::string> out;
                               for (const auto& c : p.cdcs) out.push_back(c.to_string());
                               return out;
                             })
      .def_property_readonly("views",
                             [](const Problem& p) {
                               std::vector<std::string> out;
                               for (const auto& v : p.views) out.push_back(v.to_string());
                               return out;
                             })
      .def("__str__", &print_problem)
      .def("__eq__", [](const Problem& a, const Problem& b) { return a == b; })
      .def("__repr__", [](const Problem& p) {
        return "<hdec.Problem " + p.schema.relation_name + "(x:" + std::to_string(p.schema.k) +
               ", y:" + std::to_string(p.schema.m) + ") " + std::to_string(p.cdcs.size()) +
               " cdcs, " + std::to_string(p.views.size()) + " views>";
      });

  m.def("parse_problem", [](const std::string& text, std::optional<std::string> mode) {
          return parse_problem(text, mode_of(mode));
        },
        py::arg("text"), py::arg("mode") = py::none(), "Parse a problem written in the DSL.");

  const std::uint64_t budget = SolverOptions{}.node_budget;

  m.def("check_consistency",
        [](const Problem& p, unsigned parallel, std::uint64_t budget) {
          ConsistencyVerdict v;
          {
            py::gil_scoped_release release;
            v = check_consistency(p.schema, p.cdcs, options(parallel, budget));
          }
          return to_py(consistency_report(v));
        },
        py::arg("problem"), py::arg("parallel") = 1, py::arg("budget") = budget);

  m.def("check_global_consistency",
        [](const Problem& p, unsigned parallel, std::uint64_t budget) {
          GlobalConsistencyVerdict v;
          {
            py::gil_scoped_release release;
            v = check_global_consistency(p.cdcs, options(parallel, budget));
          }
          return to_py(global_consistency_report(v));
        },
        py::arg("problem"), py::arg("parallel") = 1, py::arg("budget") = budget);

  m.def("check_losslessness", &losslessness, py::arg("problem"), py::arg("parallel") = 1,
        py::arg("budget") = budget, py::arg("extend_witness") = false,
        "Run the separability pipeline, then decide losslessness on the reduced CDCs.");

  m.def("classify",
        [](const Problem& p) { return to_py(separability_report(p, separability_pipeline(p))); },
        py::arg("problem"));

  m.def("dp_closure",
        [](const Problem& p) {
          std::vector<Uind> yuinds;
          for (const auto& u : p.uinds) {
            if (!u.is_trivial() && classify_uind(u, p.schema) == UindKind::kY) yuinds.push_back(u);
          }
          std::vector<std::string> out;
          for (const auto& c : dp_closure(p.schema, p.cdcs, yuinds)) out.push_back(c.to_string());
          return out;
        },
        py::arg("problem"));

  m.def("utvpi_sat",
        [](const std::vector<std::tuple<int, int, int, int, std::int64_t>>& atoms) {
          std::vector<Utvpi> us;
          for (const auto& [a, i, b, j, d] : atoms) us.push_back(Utvpi::make(a, i, b, j, d));
          SatResult r = utvpi_sat(us);
          py::dict out;
          out["sat"] = r.sat;
          out["model"] = r.model;
          out["core"] = r.core;
          return out;
        },
        py::arg("atoms"), "Atoms are (a, i, b, j, d) tuples meaning a*y_i + b*y_j <= d.");

  m.def("sat_to_consistency",
        [](int num_vars, const std::vector<std::vector<int>>& clauses) {
          return sat_to_consistency(Cnf{num_vars, clauses});
        },
        py::arg("num_vars"), py::arg("clauses"));
  m.def("unsat_to_losslessness",
        [](int num_vars, const std::vector<std::vector<int>>& clauses) {
          return unsat_to_losslessness(Cnf{num_vars, clauses});
        },
        py::arg("num_vars"), py::arg("clauses"));
}
