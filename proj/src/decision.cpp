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

#include "hdec/decision.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "hdec/error.hpp"
#include "sweep.hpp"

namespace hdec {
namespace {

struct Hit {
  Valuation alpha;
  IntAssignment beta;
  std::vector<CFormula> filtered;
  std::vector<std::size_t> core;
};

void append_unique(std::vector<CFormula>& out, const std::vector<CFormula>& more) {
  for (const auto& f : more) {
    if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
  }
}

}  // namespace

Tuple build_witness_tuple(const Valuation& alpha, const IntAssignment& beta,
                          const Schema& schema) {
  Tuple t;
  t.x.reserve(schema.k);
  for (int i = 1; i <= schema.k; ++i) t.x.push_back(fresh_constant(i));
  std::vector<bool> chosen(schema.k + 1, false);
  for (const auto& [p, v] : alpha) {
    if (!v) continue;
    if (!schema.is_x_position(p.position)) {
      throw Error(Errc::kUnknownVariable, p.to_string() + " is outside the schema");
    }
    if (chosen[p.position]) {
      throw Error(Errc::kAlphaViolatesUniqueValue,
                  "valuation makes two constants true at x" + std::to_string(p.position));
    }
    chosen[p.position] = true;
    t.x[p.position - 1] = p.constant;
  }
  for (int j = 1; j <= schema.m; ++j) t.y.push_back(value_of(beta, j));
  return t;
}

ConsistencyVerdict check_consistency(const Schema& schema, const std::vector<Cdc>& cdcs,
                                     const DecisionOptions& opts) {
  Encoding enc = encode_cdcs(cdcs);
  ValuationSpace space(enc.theory.var_p, aux_theory(enc.theory));
  auto hit = detail::first_hit<Hit>(space.size(), opts.parallel, [&](std::uint64_t i)
                                                                      -> std::optional<Hit> {
    auto alpha = space.admissible(i);
    if (!alpha) return std::nullopt;
    auto filtered = alpha_filter_cdc(enc.theory, enc.idf, *alpha);
    SatResult r = solve(filtered, opts.solver);
    if (!r.sat) return std::nullopt;
    return Hit{std::move(*alpha), std::move(r.model), std::move(filtered), {}};
  });

  ConsistencyVerdict v;
  v.candidates = space.size();
  if (!hit) return v;
  v.consistent = true;
  v.valuation = std::move(hit->second.alpha);
  v.beta = std::move(hit->second.beta);
  v.filtered = std::move(hit->second.filtered);
  v.witness = build_witness_tuple(v.valuation, v.beta, schema);
  if (!satisfies_cdcs(cdcs, *v.witness)) {
    throw std::logic_error("consistency witness " + v.witness->to_string() +
                           " violates a CDC");
  }
  return v;
}

LosslessnessVerdict check_losslessness(const Schema& schema, const std::vector<ViewDef>& views,
                                       const std::vector<Cdc>& cdcs,
                                       const DecisionOptions& opts) {
  Encoding delta = encode_cdcs(cdcs);
  Encoding sigma = encode_views(views);
  PropTheory pi = merge(delta.theory, sigma.theory);
  ValuationSpace space(pi.var_p, aux_theory(pi));

  std::mutex mu;
  std::uint64_t admissible = 0;
  std::map<std::uint64_t, ValuationTrace> trace;
  auto hit = detail::first_hit<Hit>(space.size(), opts.parallel, [&](std::uint64_t i)
                                                                      -> std::optional<Hit> {
    auto alpha = space.admissible(i);
    if (!alpha) return std::nullopt;
    auto filtered = alpha_filter_cdc(delta.theory, delta.idf, *alpha);
    append_unique(filtered, alpha_filter_views(sigma.theory, sigma.idf, *alpha));
    SatResult r = solve(filtered, opts.solver);
    {
      std::lock_guard lock(mu);
      ++admissible;
      if (opts.trace_limit > 0) {
        trace.emplace(i, ValuationTrace{*alpha, filtered, r.sat});
        if (trace.size() > opts.trace_limit) trace.erase(std::prev(trace.end()));
      }
    }
    if (!r.sat) return std::nullopt;
    return Hit{std::move(*alpha), std::move(r.model), std::move(filtered), {}};
  });

  LosslessnessVerdict v;
  v.candidates = space.size();
  if (!hit) {
    v.lossless = true;
    v.admissible = admissible;
    for (auto& [i, t] : trace) v.trace.push_back(std::move(t));
    return v;
  }
  v.valuation = std::move(hit->second.alpha);
  v.beta = std::move(hit->second.beta);
  v.filtered = std::move(hit->second.filtered);
  v.witness = build_witness_tuple(v.valuation, v.beta, schema);
  if (!satisfies_cdcs(cdcs, *v.witness)) {
    throw std::logic_error("lossy witness " + v.witness->to_string() + " violates a CDC");
  }
  for (const auto& view : views) {
    if (view.selects(*v.witness)) {
      throw std::logic_error("lossy witness " + v.witness->to_string() + " is selected by " +
                             view.name);
    }
  }
  return v;
}

GlobalConsistencyVerdict check_global_consistency(const std::vector<Cdc>& cdcs,
                                                  const DecisionOptions& opts) {
  Encoding enc = encode_cdcs(cdcs);
  ValuationSpace space(enc.theory.var_p, aux_theory(enc.theory));
  auto hit = detail::first_hit<Hit>(space.size(), opts.parallel, [&](std::uint64_t i)
                                                                      -> std::optional<Hit> {
    auto alpha = space.admissible(i);
    if (!alpha) return std::nullopt;
    auto filtered = alpha_filter_cdc(enc.theory, enc.idf, *alpha);
    SatResult r = solve(filtered, opts.solver);
    if (r.sat) return std::nullopt;
    return Hit{std::move(*alpha), {}, std::move(filtered), std::move(r.core)};
  });

  GlobalConsistencyVerdict v;
  v.candidates = space.size();
  if (!hit) {
    v.globally_consistent = true;
    return v;
  }
  v.failing = std::move(hit->second.alpha);
  v.filtered = std::move(hit->second.filtered);
  v.core = std::move(hit->second.core);
  return v;
}

}  // namespace hdec
