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

#include "hdec/report.hpp"

#include "hdec/error.hpp"

namespace hdec {

Json to_json(const Tuple& t) {
  Json x = Json::array();
  for (const auto& c : t.x) x.push_back(c.name());
  Json y = Json::array();
  for (auto v : t.y) y.push_back(v);
  return Json{{"x", x}, {"y", y}};
}

Json to_json(const Valuation& alpha) {
  Json out = Json::object();
  for (const auto& [p, v] : alpha) out[p.to_string()] = v;
  return out;
}

Json to_json(const std::vector<CFormula>& formulas) {
  Json out = Json::array();
  for (const auto& f : formulas) out.push_back(f.to_pretty_string());
  return out;
}

Json to_json(const Instance& inst) {
  Json out = Json::array();
  for (const auto& t : inst.tuples()) out.push_back(to_json(t));
  return out;
}

Json consistency_report(const ConsistencyVerdict& v) {
  Json out;
  out["verdict"] = v.consistent ? "CONSISTENT" : "INCONSISTENT";
  out["theorem_tag"] = nullptr;
  out["witness"] = v.witness ? to_json(*v.witness) : Json(nullptr);
  out["valuation"] = v.consistent ? to_json(v.valuation) : Json(nullptr);
  out["filtered_formulas"] = to_json(v.filtered);
  out["candidate_valuations"] = v.candidates;
  return out;
}

Json global_consistency_report(const GlobalConsistencyVerdict& v) {
  Json out;
  out["verdict"] = v.globally_consistent ? "GLOBALLY_CONSISTENT" : "NOT_GLOBALLY_CONSISTENT";
  out["theorem_tag"] = nullptr;
  out["witness"] = nullptr;
  out["valuation"] = v.failing ? to_json(*v.failing) : Json(nullptr);
  out["filtered_formulas"] = to_json(v.filtered);
  Json core = Json::array();
  for (auto c : v.core) core.push_back(v.filtered[c].to_pretty_string());
  out["unsat_core"] = core;
  out["candidate_valuations"] = v.candidates;
  return out;
}

namespace {

void add_separability(Json& out, const Problem& p, const SeparabilityOutcome& s) {
  out["theorem_tag"] = s.supported ? Json(to_string(s.tag)) : Json(nullptr);
  if (!s.supported) out["reason"] = s.reason;
  Json uinds = Json::array();
  for (const auto& u : s.xuinds) uinds.push_back({{"uind", u.to_string(p.schema)}, {"kind", "X-UIND"}});
  for (const auto& u : s.yuinds) uinds.push_back({{"uind", u.to_string(p.schema)}, {"kind", "Y-UIND"}});
  out["uinds"] = uinds;
  Json fds = Json::array();
  for (const auto& f : p.fds) {
    std::string cls;
    try {
      cls = to_string(classify_fd(f, p.schema));
    } catch (const Error&) {
      cls = "mixed";
    }
    fds.push_back({{"fd", f.to_string()}, {"class", cls}});
  }
  out["fds"] = fds;
  out["globally_consistent"] = s.globally_consistent ? Json(*s.globally_consistent) : Json(nullptr);
  out["disjoint"] = s.disjoint ? Json(*s.disjoint) : Json(nullptr);
  if (s.gc && s.gc->failing) {
    out["gc_failing_valuation"] = to_json(*s.gc->failing);
    out["gc_failing_filtering"] = to_json(s.gc->filtered);
  }
  out["notes"] = s.notes;
}

}  // namespace

Json separability_report(const Problem& p, const SeparabilityOutcome& s) {
  Json out;
  out["verdict"] = s.supported ? "SUPPORTED" : "UNSUPPORTED";
  add_separability(out, p, s);
  Json cdcs = Json::array();
  for (const auto& c : s.cdcs) cdcs.push_back(c.to_string());
  out["reduced_cdcs"] = cdcs;
  return out;
}

Json losslessness_report(const Problem& p, const SeparabilityOutcome& s,
                         const LosslessnessVerdict* v) {
  Json out;
  if (!v) {
    out["verdict"] = "UNSUPPORTED";
    add_separability(out, p, s);
    return out;
  }
  out["verdict"] = v->lossless ? "LOSSLESS" : "LOSSY";
  add_separability(out, p, s);
  out["witness"] = v->witness ? to_json(*v->witness) : Json(nullptr);
  out["valuation"] = v->lossless ? Json(nullptr) : to_json(v->valuation);
  out["filtered_formulas"] = to_json(v->filtered);
  out["candidate_valuations"] = v->candidates;
  if (v->lossless) {
    out["admissible_valuations"] = v->admissible;
    Json trace = Json::array();
    for (const auto& t : v->trace) {
      trace.push_back({{"valuation", to_json(t.alpha)},
                       {"filtered_formulas", to_json(t.filtered)},
                       {"satisfiable", t.satisfiable}});
    }
    out["trace"] = trace;
  }
  return out;
}

}  // namespace hdec
