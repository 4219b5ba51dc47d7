// Copyright 2026 The entswap Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "entswap/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "entswap/error.hpp"
#include "entswap/monte_carlo.hpp"
#include "entswap/oracle_check.hpp"
#include "entswap/report.hpp"
#include "entswap/stats.hpp"

namespace entswap::cli {

namespace {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr const char* kDescription =
    "Entanglement-swapping key distribution simulator.\n"
    "Exit codes: 0 ok/accept, 1 I/O, 2 usage, 3 abort verdict, 4 oracle-check failure.";

struct Flags {
  std::size_t groups = 16;
  double check_fraction = 0.5;
  std::string adversary = "none";
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  std::string pair_states = "all-phi-plus";
  std::string out;
  std::string format = "json";
};

// Builds the parser; `flags` must outlive it.
std::unique_ptr<CLI::App> make_app(Flags& flags) {
  auto app = std::make_unique<CLI::App>(kDescription, "entswap");
  app->set_config("--config", "", "Flat 'key = value' file using the long flag names");
  app->allow_config_extras(CLI::config_extras_mode::error);
  app->option_defaults()->always_capture_default();

  app->add_option("--groups", flags.groups, "Number of groups n (2n shared pairs)")
      ->check(CLI::PositiveNumber);
  app->add_option("--check-fraction", flags.check_fraction,
                  "Fraction of groups Bob publishes, in (0, 1]");
  app->add_option("--adversary", flags.adversary, "none | type1 | type2 | type3 (sweep: all)");
  app->add_option("--trials", flags.trials, "Monte Carlo trials per point");
  app->add_option("--seed", flags.seed, "Master seed")->envname("ENTSWAP_SEED");
  app->add_option("--pair-states", flags.pair_states,
                  "all-phi-plus | random | random:<seed> | comma list of 2n Bell states");
  app->add_option("--out", flags.out, "Output path (default: stdout)");
  app->add_option("--format", flags.format, "json | csv | both");

  app->require_subcommand(1);
  for (const auto& [name, help] :
       {std::pair{"run", "Run one session and write its report"},
        std::pair{"sweep", "Monte Carlo over every checked-group count k = 1..n"},
        std::pair{"oracle-check", "Exhaustively check the swap algebra against the statevector"},
        std::pair{"attack", "Monte Carlo of one adversary at the configured check fraction"}}) {
    app->add_subcommand(name, help)->fallthrough();
  }
  return app;
}

Format parse_format(const std::string& text) {
  if (text == "json") return Format::kJson;
  if (text == "csv") return Format::kCsv;
  if (text == "both") return Format::kBoth;
  throw std::invalid_argument("unknown format '" + text + "' (expected json, csv or both)");
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << content;
  f.flush();
  if (!f) throw IoError("failed writing '" + path + "'");
}

std::string with_extension(const std::string& path, const char* ext) {
  std::filesystem::path p(path);
  p.replace_extension(ext);
  return p.string();
}

// JSON and/or CSV to --out (or stdout). With "both" and a path, the two
// documents go to <stem>.json and <stem>.csv.
void emit(const CliConfig& c, const std::string& json, const std::string& csv,
          std::ostream& out) {
  const bool want_json = c.format != Format::kCsv;
  const bool want_csv = c.format != Format::kJson;
  if (c.output_path.empty()) {
    if (want_json) out << json;
    if (want_csv) out << csv;
    return;
  }
  if (want_json && want_csv) {
    write_file(with_extension(c.output_path, ".json"), json);
    write_file(with_extension(c.output_path, ".csv"), csv);
  } else {
    write_file(c.output_path, want_json ? json : csv);
  }
}

AdversaryStrategy strategy_of(AdversaryKind kind) { return AdversaryStrategy::make(kind); }

nlohmann::json attack_json(const MCReport& mc, const SessionConfig& session) {
  const auto guess = analytic_guess(mc.strategy, mc.n_groups);
  return {{"monte_carlo", to_json(mc)},
          {"analytic",
           {{"detection", mc.analytic_detection},
            {"guess_full_key", guess ? nlohmann::json(*guess) : nlohmann::json(nullptr)}}},
          {"efficiency", to_json(efficiency_report(session))}};
}

}  // namespace

PairStatePolicy parse_pair_states(const std::string& text) {
  if (text == "all-phi-plus") return PairStatePolicy::all_phi_plus();
  if (text == "random") return PairStatePolicy::random_known();
  if (text.rfind("random:", 0) == 0) {
    const std::string digits = text.substr(7);
    std::size_t used = 0;
    std::uint64_t seed = 0;
    try {
      seed = std::stoull(digits, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (digits.empty() || used != digits.size()) {
      throw std::invalid_argument("bad seed in pair-state policy '" + text + "'");
    }
    return PairStatePolicy::random_known(seed);
  }
  std::vector<BellIndex> states;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) states.push_back(parse_bell(item));
  if (states.empty()) throw std::invalid_argument("empty pair-state list");
  return PairStatePolicy::fixed_list(std::move(states));
}

CliConfig parse_config(const std::vector<std::string>& args) {
  Flags flags;
  auto app = make_app(flags);
  const std::string usage = app->help();
  if (args.empty()) throw UsageError("no subcommand given", usage);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app->parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what(), usage);
  }

  CliConfig c;
  const auto chosen = app->get_subcommands().front()->get_name();
  if (chosen == "run") c.subcommand = Subcommand::kRun;
  else if (chosen == "sweep") c.subcommand = Subcommand::kSweep;
  else if (chosen == "oracle-check") c.subcommand = Subcommand::kOracleCheck;
  else c.subcommand = Subcommand::kAttack;

  try {
    c.session.n_groups = flags.groups;
    c.session.check_fraction = flags.check_fraction;
    c.session.seed = flags.seed;
    c.session.pair_states = parse_pair_states(flags.pair_states);
    c.trials = flags.trials;
    c.output_path = flags.out;
    c.format = parse_format(flags.format);
    if (flags.adversary == "all") {
      if (c.subcommand != Subcommand::kSweep) {
        throw std::invalid_argument("--adversary all is only valid for sweep");
      }
      c.all_adversaries = true;
    } else {
      c.adversary = parse_adversary(flags.adversary);
    }
    validate(c.session);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what(), usage);
  }

  if ((c.subcommand == Subcommand::kSweep || c.subcommand == Subcommand::kAttack) &&
      c.trials < 1) {
    throw UsageError("--trials must be at least 1", usage);
  }
  if ((c.subcommand == Subcommand::kRun || c.subcommand == Subcommand::kOracleCheck) &&
      c.format != Format::kJson) {
    throw UsageError("--format " + flags.format + " is not available for " + chosen +
                         " (JSON only)",
                     usage);
  }
  return c;
}

int cmd_run(const CliConfig& c, std::ostream& out) {
  const SessionReport report = run_session(c.session, strategy_of(c.adversary));
  const std::string json = dump(to_json(report));
  if (c.output_path.empty()) {
    out << json;
  } else {
    write_file(c.output_path, json);
  }
  out << "verdict=" << (report.accepted ? "accept" : "abort")
      << " key_bits=" << report.alice_key.size()
      << " keys_equal=" << (report.keys_equal ? "true" : "false") << "\n";
  return report.accepted ? kOk : kAborted;
}

int cmd_attack(const CliConfig& c, std::ostream& out) {
  const MCReport mc = monte_carlo(c.session, strategy_of(c.adversary), c.trials, c.session.seed);
  const std::array<MCReport, 1> rows{mc};
  emit(c, dump(attack_json(mc, c.session)), sweep_csv(rows), out);
  return kOk;
}

int cmd_sweep(const CliConfig& c, std::ostream& out) {
  std::vector<AdversaryKind> kinds;
  if (c.all_adversaries) {
    kinds = {AdversaryKind::kNone, AdversaryKind::kTypeI, AdversaryKind::kTypeII,
             AdversaryKind::kTypeIII};
  } else {
    kinds = {c.adversary};
  }
  const std::size_t n = c.session.n_groups;
  std::vector<MCReport> rows;
  nlohmann::json points = nlohmann::json::array();
  for (AdversaryKind kind : kinds) {
    for (std::size_t k = 1; k <= n; ++k) {
      SessionConfig point = c.session;
      point.check_fraction = static_cast<double>(k) / static_cast<double>(n);
      // Each grid point gets its own stream so points stay independent.
      const std::uint64_t seed =
          derive_seed(c.session.seed, (static_cast<std::uint64_t>(kind) << 32) | k);
      rows.push_back(monte_carlo(point, strategy_of(kind), c.trials, seed));
      points.push_back(attack_json(rows.back(), point));
    }
  }
  emit(c, dump(points), sweep_csv(rows), out);
  return kOk;
}

int cmd_oracle_check(const CliConfig& c, std::ostream& out) {
  const OracleCheckSummary s = run_oracle_check();

  std::size_t pass13 = 0;
  std::size_t pass23 = 0;
  std::size_t uniform = 0;
  for (const auto& x : s.swap_13) pass13 += x.pass;
  for (const auto& x : s.swap_23) pass23 += x.pass;
  for (const auto& x : s.uniformity) uniform += x.pass;

  auto line = [&out](bool ok, const std::string& text) {
    out << (ok ? "PASS  " : "FAIL  ") << text << "\n";
  };
  line(pass13 == s.swap_13.size(), "swap rule, measure (1,3) -> (2,4): " +
                                        std::to_string(pass13) + "/" +
                                        std::to_string(s.swap_13.size()));
  line(pass23 == s.swap_23.size(), "swap rule, measure (2,3) -> (1,4): " +
                                        std::to_string(pass23) + "/" +
                                        std::to_string(s.swap_23.size()));
  line(uniform == s.uniformity.size(), "outcome distribution 1/4 each: " +
                                           std::to_string(uniform) + "/" +
                                           std::to_string(s.uniformity.size()) + " pairings");
  for (const auto* checks : {&s.swap_13, &s.swap_23}) {
    for (const auto& x : *checks) {
      if (x.pass) continue;
      out << "  mismatch: init_a=" << bell_name(x.init_a) << " init_b=" << bell_name(x.init_b)
          << " measured=" << bell_name(x.measured) << " predicted=" << bell_name(x.predicted)
          << " observed=" << (x.observed ? bell_name(*x.observed) : "none") << "\n";
    }
  }

  // Spot line for the worked example: (phi+, psi+), Alice sees psi+.
  for (const auto& x : s.swap_13) {
    if (x.init_a == kPhiPlus && x.init_b == kPsiPlus && x.measured == kPsiPlus) {
      line(x.pass, "example (phi+, psi+) measured psi+ -> partner " +
                       std::string(x.observed ? bell_name(*x.observed) : "none"));
    }
  }
  for (const auto& g : s.ghz) {
    std::ostringstream text;
    text << "ghz channel, alice " << bell_name(g.alice) << ": bob {";
    bool first = true;
    bool ok = g.eve_deterministic;
    for (BellIndex b : kAllBell) {
      const double p = g.bob[b.ordinal()];
      ok = ok && std::abs(p - (b.parity() == g.alice.parity() ? 0.5 : 0.0)) < kStateTolerance;
      if (p < kMinForcedProbability) continue;
      text << (first ? "" : ", ") << bell_name(b) << ": " << p;
      first = false;
    }
    text << "}, eve determined: " << (g.eve_deterministic ? "yes" : "no");
    line(ok, text.str());
  }
  out << (s.all_pass ? "oracle-check: all passed" : "oracle-check: FAILED") << "\n";

  if (!c.output_path.empty()) {
    nlohmann::json j = to_json(s);
    j["example_state"] = to_json(tensor(make_bell(kPhiPlus, "1", "2"), make_bell(kPsiMinus, "3", "4")));
    write_file(c.output_path, dump(j));
  }
  return s.all_pass ? kOk : kOracleFailure;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig c;
  try {
    c = parse_config(args);
  } catch (const CLI::CallForHelp&) {
    Flags flags;
    out << make_app(flags)->help();
    return kOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << e.usage();
    return kUsage;
  }

  try {
    switch (c.subcommand) {
      case Subcommand::kRun: return cmd_run(c, out);
      case Subcommand::kSweep: return cmd_sweep(c, out);
      case Subcommand::kOracleCheck: return cmd_oracle_check(c, out);
      case Subcommand::kAttack: return cmd_attack(c, out);
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const UnsupportedConfiguration& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kOk;
}

}  // namespace entswap::cli
