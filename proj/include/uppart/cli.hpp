#pragma once

// The `uppart` command line. Subcommands:
//
//   count <seq>        table of s, s_t, s*, s*_t, u, w, w_r or v
//   classify <mu>      structural and brute-force up verdicts
//   paths <lambda> <mu>  mu-path count, character value, traces
//   verify             congruence sweep + classification equivalence
//   oeis-check <seq> <bfile>
//   enumerate <kind> <n>   up | sd | rb | rb_t
//   explore-mod8       residue patterns of w (or w_r), labelled conjectural
//
// Exit codes: 0 success, 1 failed verification or divergence, 2 bad
// arguments or unparsable input, 3 enumeration budget exceeded.

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "uppart/bigint.hpp"
#include "uppart/counting.hpp"

namespace uppart::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct VerifyOptions {
  std::int64_t limit = 65536;
  /// Congruence theorem ids plus "classification"; empty = everything.
  std::vector<std::string> theorems;
  int class_limit = 14;
  bool parallel = true;
};

struct VerifyOutcome {
  int exit_code = kExitOk;
  nlohmann::json summary;
  /// One line per failing check, naming the first bad n.
  std::vector<std::string> failures;
};

/// `verify` without the argument parsing. A non-null `w_override` replaces
/// the w table (reduced mod a multiple of 8) the sweep runs on.
VerifyOutcome run_verify(const VerifyOptions& options, const ResidueTable* w_override = nullptr);

/// Integer as a JSON number when it fits in 64 bits, else a decimal string.
nlohmann::json json_integer(const BigInt& value);

}  // namespace uppart::cli
