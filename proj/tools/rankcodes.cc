// Copyright 2026 The rankcodes Authors.
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


// rankcodes: rank-metric length analysis of cyclic and skew cyclic codes.
//
//   rankcodes analyze --spec job.json [--analysis lengths,degeneracy,...]
//   rankcodes shorten --spec job.json
//   rankcodes verify-sweep [--grid 2:2:3-7,2:2:1:4]
//
// Exit codes: 0 success, 1 invariant failure, 2 input error, 3 cap
// exceeded, 4 shortening theorem not applicable (H_0 not central).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rankcodes/code.h"
#include "rankcodes/error.h"
#include "rankcodes/io.h"
#include "rankcodes/lengths.h"
#include "rankcodes/sweep.h"

namespace rankcodes {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvariant = 1;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;
constexpr int kExitNotCentral = 4;

struct Flags {
  std::string spec;
  std::vector<std::string> analyses;
  std::string format = "json";
  uint64_t seed = 0;
  uint64_t cap_ambient = 0;
  uint64_t cap_enum = 0;
  std::string grid;
  uint32_t samples = 50;
  bool exhaustive_skew = false;
};

int exit_code(ErrorKind kind) {
  if (kind == ErrorKind::kH0NotCentral) return kExitNotCentral;
  if (IsInvariantFailure(kind)) return kExitInvariant;
  if (IsCapExceeded(kind)) return kExitCap;
  return kExitInput;
}

JobSpec load_job(const Flags& flags) {
  std::string text;
  if (flags.spec == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(flags.spec);
    if (!in) throw Error(ErrorKind::kParseError, "cannot read " + flags.spec);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::kParseError, e.what());
  }
  JobSpec job = parse_job(j);
  if (flags.cap_ambient) job.ambient_cap = flags.cap_ambient;
  if (flags.cap_enum) job.enum_cap = flags.cap_enum;
  if (flags.exhaustive_skew) job.exhaustive_skew = true;
  if (!flags.analyses.empty()) job.analyses = flags.analyses;
  if (job.analyses.empty()) job.analyses = {"lengths"};
  return job;
}

void emit(const Flags& flags, const Json& j, const std::string& text) {
  if (flags.format == "text") {
    std::cout << text;
  } else {
    std::cout << j.dump(2) << "\n";
  }
}

ShortenedCode shorten(const FieldTower& t, const LinearCode& c, uint64_t cap) {
  if (is_cyclic(t, c)) return shorten_pseudo_cyclic(t, c, cap);
  const std::vector<uint32_t> orders = skew_orders(t, c);
  if (orders.empty()) throw Error(ErrorKind::kNotCyclic, "code is neither cyclic nor skew cyclic");
  uint32_t r = orders.front();
  for (uint32_t s : orders) {
    if (t.r() != 0 && s == t.r() % t.m()) r = t.r();
  }
  return shorten_pseudo_skew(t, c, r, cap);
}

int cmd_analyze(const Flags& flags) {
  const JobSpec job = load_job(flags);
  const FieldTower t = build_tower(job.field, job.ambient_cap);
  const LinearCode c = build_code(t, job.code);
  const LengthReport report = analyze(t, c, {.exhaustive = job.exhaustive_skew});
  Json out = to_json(t, report);
  std::string text = render_text(t, report);
  for (const std::string& a : job.analyses) {
    if (a == "degeneracy") {
      const DegeneracyReport d = degeneracy_report(t, c);
      out["degeneracy"] = to_json(d);
      text += "degeneracy criteria:";
      for (const Criterion& cr : d.criteria) text += " " + cr.id + "=" + (cr.value ? "1" : "0");
      text += "\n";
    } else if (a == "singleton") {
      const SingletonAudit s = singleton_audit(t, c, report, job.enum_cap);
      out["singleton"] = to_json(s);
      text += std::string("Singleton audit: ") + (s.holds ? "holds" : "VIOLATED") + "\n";
    } else if (a == "shorten") {
      const ShortenedCode s = shorten(t, c, job.enum_cap);
      out["shortened"] = to_json(t, s);
      text += render_text(t, s);
    } else if (a == "equivalence") {
      Json eqs = Json::array();
      for (const ShiftLength& s : report.shift_lengths) {
        if (!s.value) continue;
        const std::optional<RankEquivalence> eq = shift_equivalence(t, c, s.a, s.r);
        if (!eq) continue;
        Json e = to_json(t, *eq);
        e["length"] = *s.value;
        eqs.push_back(e);
        text += "shift equivalence a = " + t.format(s.a) + ", r = " + std::to_string(s.r) +
                ": length " + std::to_string(*s.value) + ", verified\n";
      }
      out["equivalences"] = eqs;
    }
  }
  emit(flags, out, text);
  return kExitOk;
}

int cmd_shorten(const Flags& flags) {
  const JobSpec job = load_job(flags);
  const FieldTower t = build_tower(job.field, job.ambient_cap);
  const LinearCode c = build_code(t, job.code);
  const ShortenedCode s = shorten(t, c, job.enum_cap);
  Json out;
  out["input"] = {{"n", c.n()}, {"k", c.k()}};
  out["shortened"] = to_json(t, s);
  emit(flags, out, render_text(t, s));
  return kExitOk;
}

int cmd_verify_sweep(const Flags& flags, bool grid_given) {
  SweepOptions o = DefaultSweep();
  if (grid_given) ParseSweepGrid(flags.grid, &o);
  o.seed = flags.seed;
  o.skew_samples = flags.samples;
  if (flags.cap_ambient) o.ambient_cap = flags.cap_ambient;
  if (flags.cap_enum) o.enum_cap = flags.cap_enum;
  for (const std::string& name : flags.analyses) {
    bool found = false;
    for (Invariant inv : AllInvariants()) {
      if (InvariantName(inv) == name) {
        o.only.insert(inv);
        found = true;
      }
    }
    if (!found) throw Error(ErrorKind::kParseError, "unknown invariant '" + name + "'");
  }
  const SweepSummary s = RunSweep(o);
  emit(flags, to_json(s), render_text(s));
  return s.ok() ? kExitOk : kExitInvariant;
}

void add_common(CLI::App* sub, Flags& flags) {
  sub->add_option("--format", flags.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));
  sub->add_option("--seed", flags.seed, "Seed for sampled codes");
  sub->add_option("--cap-ambient", flags.cap_ambient, "Largest ambient field size p^N");
  sub->add_option("--cap-enum", flags.cap_enum, "Largest codeword enumeration");
}

}  // namespace
}  // namespace rankcodes

int main(int argc, char** argv) {
  using namespace rankcodes;
  Flags flags;
  CLI::App app{"Rank-metric lengths of cyclic and skew cyclic codes"};
  app.require_subcommand(1);

  CLI::App* analyze_cmd = app.add_subcommand("analyze", "Length report of one code");
  analyze_cmd->add_option("--spec", flags.spec, "Job JSON file, or - for stdin")->required();
  analyze_cmd->add_option("--analysis", flags.analyses,
                          "Comma list of lengths, degeneracy, singleton, shorten, equivalence")
      ->delimiter(',');
  analyze_cmd->add_flag("--exhaustive-skew", flags.exhaustive_skew,
                        "Search shorter skew cyclic codes exhaustively (tiny parameters)");
  add_common(analyze_cmd, flags);

  CLI::App* shorten_cmd = app.add_subcommand("shorten", "Pseudo-cyclic or pseudo-skew shortening");
  shorten_cmd->add_option("--spec", flags.spec, "Job JSON file, or - for stdin")->required();
  add_common(shorten_cmd, flags);

  CLI::App* sweep_cmd = app.add_subcommand("verify-sweep", "Check every invariant over a grid");
  CLI::Option* grid_opt = sweep_cmd->add_option(
      "--grid", flags.grid, "Comma list of q:m:n or q:m:n1-n2 (cyclic) and q:m:r:n (skew)");
  sweep_cmd->add_option("--analysis", flags.analyses, "Comma list of invariants to check")
      ->delimiter(',');
  sweep_cmd->add_option("--samples", flags.samples, "Sampled skew codes per configuration");
  add_common(sweep_cmd, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }
  try {
    if (analyze_cmd->parsed()) return cmd_analyze(flags);
    if (shorten_cmd->parsed()) return cmd_shorten(flags);
    return cmd_verify_sweep(flags, grid_opt->count() > 0);
  } catch (const Error& e) {
    std::cerr << "rankcodes: " << e.what() << "\n";
    if (e.kind() == ErrorKind::kH0NotCentral) {
      std::cerr << "rankcodes: the shortening theorem requires a central check polynomial; "
                   "no pseudo-skew cyclic shortening is produced\n";
    }
    return exit_code(e.kind());
  } catch (const Json::exception& e) {
    std::cerr << "rankcodes: " << e.what() << "\n";
    return kExitInput;
  }
}
