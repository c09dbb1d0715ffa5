#include "uppart/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <limits>
#include <optional>
#include <sstream>

#include "uppart/bfile.hpp"
#include "uppart/classification.hpp"
#include "uppart/congruence.hpp"
#include "uppart/kernels.hpp"
#include "uppart/path_engine.hpp"

namespace uppart::cli {

namespace {

using nlohmann::json;

constexpr const char* kSchema = "uppart/1";

/// Signals an argument problem found after CLI11 parsing; maps to exit 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GlobalFlags {
  std::string out_path;
  bool csv = false;
  bool json = false;
};

json trace_json(const PathTrace& trace) {
  json shapes = json::array();
  for (const auto& s : trace.shapes) shapes.push_back(s.to_string());
  return {{"shapes", shapes}, {"legs", trace.legs}, {"sign", trace.sign()}};
}

std::optional<int> sequence_param(Sequence seq, std::optional<int> t, std::optional<int> r) {
  if (!needs_param(seq)) return std::nullopt;
  if (seq == Sequence::w_r) {
    if (!r) throw UsageError("sequence w_r requires --r");
    return r;
  }
  if (!t) throw UsageError("sequence " + std::string(sequence_name(seq)) + " requires --t");
  return t;
}

Sequence require_sequence(const std::string& name) {
  auto seq = parse_sequence(name);
  if (!seq) throw UsageError("unknown sequence '" + name + "' (expected s, s_t, s*, s*_t, u, w, w_r or v)");
  return *seq;
}

Partition require_partition(const std::string& text) {
  try {
    return parse_partition(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("cannot parse partition '") + text + "': " + e.what());
  }
}

// ---------------------------------------------------------------- count

struct CountArgs {
  std::string sequence;
  std::size_t limit = 20;
  std::optional<int> t;
  std::optional<int> r;
  std::optional<std::uint64_t> modulus;
};

void cmd_count(const CountArgs& args, const GlobalFlags& flags, std::ostream& out) {
  const auto seq = require_sequence(args.sequence);
  const auto param = sequence_param(seq, args.t, args.r);
  if (args.modulus && *args.modulus == 0) throw UsageError("--modulus must be positive");

  std::vector<std::string> values;
  json json_values = json::array();
  try {
    if (args.modulus) {
      auto table = make_table(seq, args.limit, param, *args.modulus);
      for (std::size_t n = 1; n <= args.limit; ++n) {
        values.push_back(std::to_string(table[n]));
        json_values.push_back(table[n]);
      }
    } else {
      auto table = make_table(seq, args.limit, param);
      for (std::size_t n = 1; n <= args.limit; ++n) {
        values.push_back(table[n].str());
        json_values.push_back(json_integer(table[n]));
      }
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  if (flags.csv) {
    out << "n,value\n";
    for (std::size_t i = 0; i < values.size(); ++i) out << i + 1 << ',' << values[i] << '\n';
    return;
  }
  json doc{{"schema", kSchema}, {"sequence", sequence_name(seq)}, {"limit", args.limit}, {"values", json_values}};
  doc["modulus"] = args.modulus ? json(*args.modulus) : json(nullptr);
  if (param) doc[seq == Sequence::w_r ? "r" : "t"] = *param;
  out << doc.dump(2) << '\n';
}

// ---------------------------------------------------------------- classify

struct ClassifyArgs {
  std::string mu;
  std::uint64_t budget = BruteForceOptions{}.max_shapes;
};

void cmd_classify(const ClassifyArgs& args, std::ostream& out) {
  const auto mu = require_partition(args.mu);
  static const Partition one_one = partition_from_sorted({1, 1});
  const auto sd = is_sd(mu);

  json doc{{"schema", kSchema},
           {"mu", mu.to_string()},
           {"n", mu.n()},
           {"sd", sd.is_sd},
           {"sd_core", sd.sd_core.to_string()},
           {"sd_ext_of_1_1", is_sd_extension_of(mu, one_one)},
           {"up_theorem", is_up_theorem(mu)}};
  try {
    auto verdict = is_up_bruteforce(mu, {.max_shapes = args.budget});
    doc["up_bruteforce"] = verdict.is_up;
    if (verdict.witness) {
      doc["witness"] = {{"lambda", verdict.witness->lambda.to_string()},
                        {"traces", {trace_json(verdict.witness->first), trace_json(verdict.witness->second)}}};
    } else {
      doc["witness"] = nullptr;
    }
  } catch (const BudgetExceeded& e) {
    doc["up_bruteforce"] = nullptr;
    doc["witness"] = nullptr;
    doc["budget_exceeded"] = e.what();
  }
  out << doc.dump(2) << '\n';
}

// ---------------------------------------------------------------- paths

struct PathsArgs {
  std::string lambda;
  std::string mu;
  bool is_signed = false;
  std::optional<std::size_t> limit;
};

void cmd_paths(const PathsArgs& args, std::ostream& out) {
  const auto lambda = require_partition(args.lambda);
  const auto mu = require_partition(args.mu);
  if (lambda.n() != mu.n()) {
    throw UsageError("size mismatch: |lambda| = " + std::to_string(lambda.n()) + ", |mu| = " + std::to_string(mu.n()));
  }
  if (args.limit && *args.limit == 0) throw UsageError("--limit must be >= 1");

  auto& engine = PathEngine::shared();
  json doc{{"schema", kSchema},
           {"lambda", lambda.to_string()},
           {"mu", mu.to_string()},
           {"count", json_integer(engine.count_paths(lambda, mu).count)}};
  if (args.is_signed) doc["chi"] = json_integer(engine.character_value(lambda, mu).value);
  if (args.limit) {
    auto listing = engine.enumerate_paths(lambda, mu, *args.limit);
    json traces = json::array();
    for (const auto& t : listing.traces) traces.push_back(trace_json(t));
    doc["traces"] = std::move(traces);
    doc["truncated"] = listing.truncated;
  }
  out << doc.dump(2) << '\n';
}

// ---------------------------------------------------------------- oeis-check

struct OeisArgs {
  std::string sequence;
  std::string bfile;
  std::int64_t offset = 1;
  std::optional<int> t;
  std::optional<int> r;
};

int cmd_oeis_check(const OeisArgs& args, std::ostream& out) {
  const auto seq = require_sequence(args.sequence);
  const auto param = sequence_param(seq, args.t, args.r);
  BFile file;
  try {
    file = read_bfile(args.bfile);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  // b-file index `offset` lines up with n = 1
  std::int64_t max_n = 0;
  for (const auto& e : file.entries) max_n = std::max(max_n, e.index - args.offset + 1);
  CountTable table;
  try {
    table = make_table(seq, static_cast<std::size_t>(std::max<std::int64_t>(max_n, 1)), param);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  json doc{{"schema", kSchema},
           {"sequence", sequence_name(seq)},
           {"bfile", args.bfile},
           {"offset", args.offset}};
  std::size_t compared = 0;
  for (const auto& e : file.entries) {
    const std::int64_t n = e.index - args.offset + 1;
    if (n < 1) continue;
    const auto& ours = table[static_cast<std::size_t>(n)];
    ++compared;
    if (ours != e.value) {
      doc["compared"] = compared;
      doc["status"] = "diverge";
      doc["first_divergence"] = {{"index", e.index}, {"n", n}, {"bfile", json_integer(e.value)},
                                 {"computed", json_integer(ours)}};
      out << doc.dump(2) << '\n';
      return kExitFailed;
    }
  }
  doc["compared"] = compared;
  doc["status"] = compared > 0 ? "agree" : "no-overlap";
  out << doc.dump(2) << '\n';
  return compared > 0 ? kExitOk : kExitFailed;
}

// ---------------------------------------------------------------- enumerate

struct EnumerateArgs {
  std::string kind;
  int n = 0;
  std::optional<int> t;
  std::size_t cap = 1'000'000;
};

void cmd_enumerate(const EnumerateArgs& args, const GlobalFlags& flags, std::ostream& out) {
  if (args.n < 0) throw UsageError("n must be nonnegative");
  std::vector<std::string> items;
  if (args.kind == "up" || args.kind == "sd") {
    if (args.kind == "up" && args.n < 1) throw UsageError("enumerate up needs n >= 1");
    auto list = args.kind == "up" ? enumerate_up(args.n) : enumerate_sd(args.n, args.cap);
    if (list.size() > args.cap) throw BudgetExceeded("more than " + std::to_string(args.cap) + " objects");
    for (const auto& p : list) items.push_back(p.to_string());
  } else if (args.kind == "rb" || args.kind == "rb_t") {
    std::vector<RbPartition> list;
    if (args.kind == "rb") {
      list = enumerate_rb(args.n, args.cap);
    } else {
      if (!args.t) throw UsageError("enumerate rb_t requires --t");
      if (*args.t < 1) throw UsageError("--t must be >= 1");
      list = enumerate_rbt(*args.t, args.n, args.cap);
    }
    for (const auto& rb : list) items.push_back(rb.to_string());
  } else {
    throw UsageError("unknown kind '" + args.kind + "' (expected up, sd, rb or rb_t)");
  }

  if (flags.json) {
    json doc{{"schema", kSchema}, {"kind", args.kind}, {"n", args.n}, {"items", items}, {"count", items.size()}};
    if (args.t && args.kind == "rb_t") doc["t"] = *args.t;
    out << doc.dump(2) << '\n';
    return;
  }
  for (const auto& item : items) out << item << '\n';
  out << "# count " << items.size() << '\n';
}

// ---------------------------------------------------------------- explore-mod8

struct ExploreArgs {
  std::int64_t limit = 4096;
  int r = 1;
  std::uint64_t modulus = 8;
};

void cmd_explore(const ExploreArgs& args, std::ostream& out) {
  if (args.r < 1) throw UsageError("--r must be >= 1");
  if (args.modulus < 2) throw UsageError("--modulus must be >= 2");
  try {
    auto report = args.r == 1 && args.modulus == 8 ? explore_w_mod8(args.limit)
                                                    : explore_w_r(args.r, args.limit, args.modulus);
    out << to_json(report).dump(2) << '\n';
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

json json_integer(const BigInt& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() && value <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(value);
  }
  return value.str();
}

VerifyOutcome run_verify(const VerifyOptions& options, const ResidueTable* w_override) {
  VerifyOutcome outcome;
  std::vector<std::string> congruence_ids;
  bool classification = options.theorems.empty();
  for (const auto& id : options.theorems) {
    if (id == "classification") {
      classification = true;
    } else {
      congruence_ids.push_back(id);
    }
  }
  const bool run_sweep = options.theorems.empty() || !congruence_ids.empty();

  json reports = json::array();
  if (run_sweep) {
    SweepOptions sweep{.parallel = options.parallel};
    auto results = w_override ? theorem_sweep(*w_override, congruence_ids, sweep)
                              : theorem_sweep(options.limit, congruence_ids, sweep);
    for (const auto& r : results) {
      reports.push_back(to_json(r));
      if (!r.verified()) {
        const auto& m = r.mismatches.front();
        outcome.failures.push_back(r.theorem + ": " + std::string(status_name(r.status)) + " at n = " +
                                   std::to_string(m.n) + " (predicted " + std::to_string(m.predicted) +
                                   ", computed " + std::to_string(m.computed) + ")");
      }
    }
  }
  outcome.summary = {{"schema", kSchema}, {"limit", options.limit}, {"reports", reports}};

  if (classification) {
    PathEngine engine;
    json mismatches = json::array();
    for (int n = 1; n <= options.class_limit; ++n) {
      auto bad = options.parallel ? parallel::classification_mismatches(n, engine)
                                  : serial::classification_mismatches(n, engine);
      for (const auto& mu : bad) {
        mismatches.push_back(mu.to_string());
        outcome.failures.push_back("classification: theorem and brute force disagree on " + mu.to_string());
      }
    }
    outcome.summary["classification"] = {{"max_n", options.class_limit},
                                         {"mismatches", mismatches},
                                         {"status", mismatches.empty() ? "verified" : "mismatch"}};
  }

  outcome.exit_code = outcome.failures.empty() ? kExitOk : kExitFailed;
  outcome.summary["status"] = outcome.failures.empty() ? "verified" : "failed";
  return outcome;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Unique path partitions: enumeration, counting, classification and congruence checks", "uppart"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags flags;
  app.add_option("--out", flags.out_path, "Write output to this file instead of stdout");
  auto* csv = app.add_flag("--csv", flags.csv, "CSV output (count)");
  auto* json_flag = app.add_flag("--json", flags.json, "JSON output (default except for enumerate)");
  csv->excludes(json_flag);

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "Print a counting sequence on 1..limit");
  count->add_option("sequence", count_args.sequence, "s, s_t, s*, s*_t, u, w, w_r or v")->required();
  count->add_option("--limit", count_args.limit, "Largest n (largest k for v)")->check(CLI::PositiveNumber);
  count->add_option("--t", count_args.t, "Parameter t for s_t and s*_t");
  count->add_option("--r", count_args.r, "Parameter r for w_r");
  count->add_option("--modulus", count_args.modulus, "Reduce every step modulo this");

  ClassifyArgs classify_args;
  auto* classify = app.add_subcommand("classify", "Decide whether mu is an up-partition");
  classify->add_option("mu", classify_args.mu, "Partition literal, e.g. 3,2,1")->required();
  classify->add_option("--budget", classify_args.budget, "Largest p(n) brute force will attempt");

  PathsArgs paths_args;
  auto* paths = app.add_subcommand("paths", "Count mu-paths in lambda");
  paths->add_option("lambda", paths_args.lambda)->required();
  paths->add_option("mu", paths_args.mu)->required();
  paths->add_flag("--signed", paths_args.is_signed, "Also print the character value");
  paths->add_option("--limit", paths_args.limit, "List up to this many paths");

  VerifyOptions verify_opts;
  std::string theorem_list;
  bool serial_only = false;
  auto* verify = app.add_subcommand("verify", "Run the congruence sweep and the classification check");
  verify->add_option("--limit", verify_opts.limit, "Sweep w(n) mod 8 on 1..limit")->check(CLI::Range(16, 1 << 26));
  verify->add_option("--theorems", theorem_list,
                     "Comma list of: parity, window-mod4, v-rec-mod4, v-mod8, w-mod4, classification");
  verify->add_option("--class-limit", verify_opts.class_limit, "Largest n for the classification check")
      ->check(CLI::Range(1, 30));
  verify->add_flag("--serial", serial_only, "Use the serial reference kernels");

  OeisArgs oeis_args;
  auto* oeis = app.add_subcommand("oeis-check", "Compare a sequence with an OEIS b-file");
  oeis->add_option("sequence", oeis_args.sequence, "Sequence name, as for count")->required();
  oeis->add_option("bfile", oeis_args.bfile, "Path to the b-file")->required();
  oeis->add_option("--offset", oeis_args.offset, "b-file index that corresponds to n = 1");
  oeis->add_option("--t", oeis_args.t, "Parameter t for s_t and s*_t");
  oeis->add_option("--r", oeis_args.r, "Parameter r for w_r");

  EnumerateArgs enum_args;
  auto* enumerate = app.add_subcommand("enumerate", "List up-, sd-, rb- or rb_t-partitions of n");
  enumerate->add_option("kind", enum_args.kind, "up, sd, rb or rb_t")->required();
  enumerate->add_option("n", enum_args.n)->required();
  enumerate->add_option("--t", enum_args.t, "Top multiplicity for rb_t");
  enumerate->add_option("--cap", enum_args.cap, "Refuse to list more than this many objects");

  ExploreArgs explore_args;
  auto* explore = app.add_subcommand("explore-mod8", "Tabulate w(n) mod 8 by binary features (conjectural)");
  explore->add_option("--limit", explore_args.limit)->check(CLI::Range(16, 1 << 24));
  explore->add_option("--r", explore_args.r, "Scan w_r instead of w");
  explore->add_option("--modulus", explore_args.modulus);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  std::ofstream file;
  if (!flags.out_path.empty()) {
    file.open(flags.out_path);
    if (!file) {
      err << "error: cannot open " << flags.out_path << " for writing\n";
      return kExitUsage;
    }
  }
  std::ostream& sink = flags.out_path.empty() ? out : file;

  try {
    if (*count) {
      cmd_count(count_args, flags, sink);
    } else if (*classify) {
      cmd_classify(classify_args, sink);
    } else if (*paths) {
      cmd_paths(paths_args, sink);
    } else if (*verify) {
      verify_opts.theorems = split_list(theorem_list);
      verify_opts.parallel = !serial_only;
      auto outcome = run_verify(verify_opts);
      sink << outcome.summary.dump(2) << '\n';
      for (const auto& f : outcome.failures) err << "FAILED " << f << '\n';
      return outcome.exit_code;
    } else if (*oeis) {
      return cmd_oeis_check(oeis_args, sink);
    } else if (*enumerate) {
      cmd_enumerate(enum_args, flags, sink);
    } else if (*explore) {
      cmd_explore(explore_args, sink);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    err << "error: budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.push_back("uppart");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace uppart::cli
