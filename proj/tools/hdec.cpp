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

// hdec: command-line front end.
//
// Exit codes: 0 the property holds, 1 it fails (a witness is printed),
// 2 unsupported constraint combination, 3 parse or validation error,
// 4 resource limit, 5 the brute-force oracle disagreed (--oracle).

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"

#include "hdec/decision.hpp"
#include "hdec/error.hpp"
#include "hdec/oracle.hpp"
#include "hdec/parser.hpp"
#include "hdec/report.hpp"
#include "hdec/separability.hpp"

namespace {

using namespace hdec;

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kUnsupported = 2;
constexpr int kInputError = 3;
constexpr int kResource = 4;
constexpr int kOracleMismatch = 5;

struct Flags {
  bool json = false;
  std::string mode;
  std::uint64_t budget = SolverOptions{}.node_budget;
  unsigned parallel = 1;
  bool oracle = false;
  bool timing = false;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::kInvalidArgument, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Problem load(const std::string& path, const Flags& f) {
  std::optional<LanguageMode> mode;
  if (f.mode == "utvpi") mode = LanguageMode::kUtvpi;
  if (f.mode == "butvpi") mode = LanguageMode::kButvpi;
  return parse_problem(read_file(path), mode);
}

DecisionOptions options(const Flags& f) {
  DecisionOptions o;
  o.solver.node_budget = f.budget;
  o.parallel = f.parallel;
  return o;
}

std::string set_text(const std::vector<CFormula>& fs) {
  std::string out = "{";
  for (std::size_t k = 0; k < fs.size(); ++k) out += (k ? ", " : "") + fs[k].to_pretty_string();
  return out + "}";
}

class Runner {
 public:
  explicit Runner(Flags f) : flags_(std::move(f)), start_(std::chrono::steady_clock::now()) {}

  // Prints the report and returns the exit code.
  int emit(Json report, const std::string& text, int code) {
    if (flags_.oracle) report["oracle"] = oracle_note_.empty() ? "agree" : "disagree";
    if (flags_.timing) {
      report["timing_ms"] = std::chrono::duration<double, std::milli>(
                                std::chrono::steady_clock::now() - start_).count();
    }
    if (flags_.json) {
      std::cout << report.dump(2) << "\n";
    } else {
      std::cout << text;
    }
    if (!oracle_note_.empty()) {
      std::cerr << "oracle mismatch: " << oracle_note_ << "\n";
      return kOracleMismatch;
    }
    return code;
  }

  void oracle_disagrees(std::string note) { oracle_note_ = std::move(note); }

  const Flags& flags() const { return flags_; }

 private:
  Flags flags_;
  std::chrono::steady_clock::time_point start_;
  std::string oracle_note_;
};

int run_consistency(Runner& r, const std::string& path) {
  Problem p = load(path, r.flags());
  ConsistencyVerdict v = check_consistency(p.schema, p.cdcs, options(r.flags()));
  if (r.flags().oracle) {
    auto pool = default_const_pool(p.schema, p.cdcs, {});
    auto bf = brute_force_consistency(p.schema, p.cdcs, pool, small_model_bound(p.cdcs, {}));
    if (bf.consistent != v.consistent) {
      r.oracle_disagrees("brute force says " +
                         std::string(bf.consistent ? "consistent" : "inconsistent"));
    }
  }
  std::ostringstream text;
  if (v.consistent) {
    text << "CONSISTENT\n"
         << "witness: " << v.witness->to_string() << "\n"
         << "valuation: " << to_string(v.valuation) << "\n"
         << "filtered: " << set_text(v.filtered) << "\n";
  } else {
    text << "INCONSISTENT\n";
  }
  return r.emit(consistency_report(v), text.str(), v.consistent ? kHolds : kFails);
}

int run_global(Runner& r, const std::string& path) {
  Problem p = load(path, r.flags());
  GlobalConsistencyVerdict v = check_global_consistency(p.cdcs, options(r.flags()));
  if (r.flags().oracle) {
    auto pool = default_const_pool(p.schema, p.cdcs, {});
    auto bf = brute_force_global_consistency(p.schema, p.cdcs, pool, small_model_bound(p.cdcs, {}));
    if (bf.globally_consistent != v.globally_consistent) {
      r.oracle_disagrees("brute force says " + std::string(bf.globally_consistent
                                                               ? "globally consistent"
                                                               : "not globally consistent"));
    }
  }
  std::ostringstream text;
  if (v.globally_consistent) {
    text << "GLOBALLY CONSISTENT\n";
  } else {
    text << "NOT GLOBALLY CONSISTENT\n"
         << "failing valuation: " << to_string(*v.failing) << "\n"
         << "unsatisfiable filtering: " << set_text(v.filtered) << "\n";
  }
  return r.emit(global_consistency_report(v), text.str(),
                v.globally_consistent ? kHolds : kFails);
}

std::string theorem_text(const Problem& p, const SeparabilityOutcome& s) {
  std::string tag = to_string(s.tag);
  if (s.tag == TheoremTag::kFdOnly) {
    tag += p.fds.empty() ? "(none)" : "(" + std::to_string(p.fds.size()) + " FDs dropped)";
  }
  return tag;
}

std::string unsupported_text(const SeparabilityOutcome& s) {
  std::ostringstream text;
  text << "UNSUPPORTED: " << s.reason << "\n";
  if (s.gc && s.gc->failing) {
    text << "global consistency fails at " << to_string(*s.gc->failing) << ": "
         << set_text(s.gc->filtered) << "\n";
  }
  for (const auto& n : s.notes) text << "note: " << n << "\n";
  return text.str();
}

int run_losslessness(Runner& r, const std::string& path, bool complete_witness) {
  Problem p = load(path, r.flags());
  DecisionOptions opts = options(r.flags());
  SeparabilityOutcome s = separability_pipeline(p, opts);
  if (!s.supported) {
    return r.emit(losslessness_report(p, s, nullptr), unsupported_text(s), kUnsupported);
  }
  LosslessnessVerdict v = check_losslessness(p.schema, p.views, s.cdcs, opts);
  if (r.flags().oracle) {
    auto pool = default_const_pool(p.schema, s.cdcs, p.views);
    auto bf = brute_force_losslessness(p.schema, p.views, s.cdcs, pool,
                                       small_model_bound(s.cdcs, p.views));
    if (bf.lossless != v.lossless) {
      r.oracle_disagrees("brute force says " + std::string(bf.lossless ? "lossless" : "lossy"));
    }
  }
  Json report = losslessness_report(p, s, &v);
  std::ostringstream text;
  text << (v.lossless ? "LOSSLESS" : "LOSSY") << ", theorem: " << theorem_text(p, s) << "\n";
  for (const auto& n : s.notes) text << "note: " << n << "\n";
  if (v.lossless) {
    text << "admissible valuations: " << v.admissible << "\n";
    for (const auto& t : v.trace) {
      text << "  " << to_string(t.alpha) << " -> " << (t.satisfiable ? "sat " : "unsat ")
           << set_text(t.filtered) << "\n";
    }
    if (v.trace.size() < v.admissible) text << "  ...\n";
    return r.emit(report, text.str(), kHolds);
  }
  text << "witness: " << v.witness->to_string() << "\n"
       << "valuation: " << to_string(v.valuation) << "\n"
       << "filtered: " << set_text(v.filtered) << "\n";
  bool has_uinds = !s.xuinds.empty() || !s.yuinds.empty();
  if (complete_witness && has_uinds) {
    std::vector<Uind> uinds = s.xuinds;
    uinds.insert(uinds.end(), s.yuinds.begin(), s.yuinds.end());
    Instance start(p.schema.relation_name);
    start.insert(*v.witness);
    Instance full = extend_to_uind_model(p.schema, start, s.cdcs, uinds, opts.solver);
    bool ok = satisfies_all(full, p);
    report["extended_instance"] = to_json(full);
    report["extended_instance_valid"] = ok;
    text << "completion (" << full.size() << " tuples, "
         << (ok ? "satisfies every constraint" : "FAILS a constraint") << "):\n";
    for (const auto& t : full.tuples()) text << "  " << t.to_string() << "\n";
  }
  return r.emit(report, text.str(), kFails);
}

int run_closure(Runner& r, const std::string& path) {
  Problem p = load(path, r.flags());
  std::vector<Uind> yuinds;
  for (const auto& u : p.uinds) {
    if (!u.is_trivial() && classify_uind(u, p.schema) == UindKind::kY) yuinds.push_back(u);
  }
  DpCheck dp = check_dp_controllable(p.schema, p.cdcs, yuinds);
  if (!dp.controllable) {
    Json report{{"verdict", "UNSUPPORTED"}, {"reason", "not dp-controllable: " + dp.explanation}};
    return r.emit(report, "UNSUPPORTED: not dp-controllable: " + dp.explanation + "\n",
                  kUnsupported);
  }
  auto closed = dp_closure(p.schema, p.cdcs, yuinds);
  Json cdcs = Json::array();
  Json added = Json::array();
  std::ostringstream text;
  for (std::size_t n = 0; n < closed.size(); ++n) {
    cdcs.push_back(closed[n].to_string());
    if (n >= p.cdcs.size()) added.push_back(closed[n].to_string());
    text << "cdc: " << closed[n].to_string() << (n >= p.cdcs.size() ? "   # derived" : "")
         << "\n";
  }
  Json report{{"verdict", "CLOSED"}, {"cdcs", cdcs}, {"derived", added}};
  return r.emit(report, text.str(), kHolds);
}

int run_classify(Runner& r, const std::string& path) {
  Problem p = load(path, r.flags());
  SeparabilityOutcome s = separability_pipeline(p, options(r.flags()));
  std::ostringstream text;
  for (const auto& u : s.xuinds) text << "X-UIND " << u.to_string(p.schema) << "\n";
  for (const auto& u : s.yuinds) text << "Y-UIND " << u.to_string(p.schema) << "\n";
  for (const auto& f : p.fds) {
    std::string cls;
    try {
      cls = to_string(classify_fd(f, p.schema));
    } catch (const Error&) {
      cls = "mixed FD";
    }
    text << cls << " " << f.to_string() << "\n";
  }
  if (!s.supported) {
    text << unsupported_text(s);
    return r.emit(separability_report(p, s), text.str(), kUnsupported);
  }
  text << "SUPPORTED, theorem: " << theorem_text(p, s) << "\n";
  for (const auto& n : s.notes) text << "note: " << n << "\n";
  for (const auto& c : s.cdcs) text << "cdc: " << c.to_string() << "\n";
  return r.emit(separability_report(p, s), text.str(), kHolds);
}

int run_reduce(const std::string& kind, const std::string& path) {
  Cnf cnf = parse_dimacs(read_file(path));
  Problem p = kind == "sat" ? sat_to_consistency(cnf) : unsat_to_losslessness(cnf);
  std::cout << print_problem(p);
  return kHolds;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide consistency of conditional domain constraints and losslessness of "
               "horizontal decompositions."};
  app.require_subcommand(1);
  Flags flags;
  app.add_flag("--json", flags.json, "Print one JSON object instead of text");
  app.add_option("--mode", flags.mode, "Override the problem's language mode")
      ->check(CLI::IsMember({"utvpi", "butvpi"}));
  app.add_option("--budget", flags.budget, "Boolean search nodes per BUTVPI check");
  app.add_option("--parallel", flags.parallel, "Worker threads (0 = all cores)");
  app.add_flag("--oracle", flags.oracle, "Cross-check the verdict by brute force");
  app.add_flag("--timing", flags.timing, "Add timing_ms to the report");

  std::string file;
  std::string kind;
  auto sub = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    s->fallthrough();
    s->add_option("file", file, "Problem file ('-' for stdin)")->required();
    return s;
  };
  auto* consistency = sub("consistency", "Is there an instance satisfying the CDCs?");
  auto* lossless = sub("losslessness", "Is the decomposition lossless under the constraints?");
  auto* global = sub("global-consistency", "Does every x-pattern admit interpreted values?");
  auto* closure = sub("closure", "Print the CDCs closed under domain propagation");
  auto* classify = sub("classify", "Classify UINDs/FDs and report the applicable theorem");
  auto* witness = sub("witness", "Losslessness, completing a counterexample to all UINDs");
  auto* reduce = app.add_subcommand("reduce", "Generate a problem from a DIMACS CNF");
  reduce->fallthrough();
  reduce->add_option("kind", kind, "sat or unsat")->required()->check(CLI::IsMember({"sat", "unsat"}));
  reduce->add_option("file", file, "DIMACS file ('-' for stdin)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  Runner runner(flags);
  try {
    if (*consistency) return run_consistency(runner, file);
    if (*lossless) return run_losslessness(runner, file, false);
    if (*witness) return run_losslessness(runner, file, true);
    if (*global) return run_global(runner, file);
    if (*closure) return run_closure(runner, file);
    if (*classify) return run_classify(runner, file);
    if (*reduce) return run_reduce(kind, file);
  } catch (const ParseError& e) {
    std::cerr << file << ":" << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    std::cerr << errc_name(e.code()) << ": " << e.what() << "\n";
    return e.code() == Errc::kResourceLimit ? kResource : kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 125;
  }
  return kInputError;
}
