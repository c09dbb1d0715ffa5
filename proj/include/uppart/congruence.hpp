#pragma once

// Residue predictors for w(n) = u(2n)/2 and sweeps that check them against
// tables computed modulo 8.
//
// Proven facts checked here:
//   parity        for a(c), a(2c) odd, a(m) even on (c, 2c) and the halving
//                 recurrence, a(n) (n >= c) is odd exactly at n = 2^d c
//   window-mod4   w(m) = w(2^b + 1) mod 4 for odd m in [2^b + 1, 2^(b+1) - 1]
//   v-rec-mod4    v(k) = 2 v(k-1) + v(k-2) mod 4, v(k) = w(2^k)
//   v-mod8        v(k) = 2 floor(k/2) + 1 mod 8
//   w-mod4        w(n) mod 4 from the lowest and highest set bits of n

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "uppart/counting.hpp"
#include "uppart/errors.hpp"

namespace uppart {

/// n = sum 2^exponents[i], exponents strictly increasing.
struct BinaryExpansion {
  std::vector<int> exponents;

  static BinaryExpansion of(std::uint64_t n);
  std::uint64_t value() const;
  int lowest() const { return exponents.front(); }
  int highest() const { return exponents.back(); }
  bool is_power_of_two() const { return exponents.size() == 1; }
};

struct Mismatch {
  std::int64_t n;
  std::int64_t predicted;
  std::int64_t computed;
  friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

enum class ReportStatus { verified, mismatch, hypothesis_violated };

struct CongruenceReport {
  std::string theorem;
  std::int64_t first = 0;
  std::int64_t last = 0;
  std::vector<Mismatch> mismatches;
  ReportStatus status = ReportStatus::verified;
  /// Set for hypothesis violations.
  std::string detail;

  bool verified() const { return status == ReportStatus::verified; }
};

std::string_view status_name(ReportStatus status);

/// Theorem ids accepted by theorem_sweep.
inline constexpr std::string_view kTheoremParity = "parity";
inline constexpr std::string_view kTheoremWindow = "window-mod4";
inline constexpr std::string_view kTheoremVRecurrence = "v-rec-mod4";
inline constexpr std::string_view kTheoremVMod8 = "v-mod8";
inline constexpr std::string_view kTheoremWMod4 = "w-mod4";
std::vector<std::string> all_theorems();

struct SweepOptions {
  bool parallel = true;
};

/// Checks the parity pattern of `table` on [c, limit]. The preconditions
/// are checked first (the recurrence from 2c + 1 on, modulo the table's
/// modulus); a failure throws HypothesisViolation naming it.
CongruenceReport parity_rule(std::int64_t c, std::int64_t limit, const ResidueTable& table,
                             const SweepOptions& options = {});

CongruenceReport window_constancy_mod4(std::int64_t limit, const ResidueTable& w, const SweepOptions& options = {});
CongruenceReport window_constancy_mod4(std::int64_t limit);

/// (2 floor(k/2) + 1) mod 8.
unsigned predict_v_mod8(std::int64_t k);

/// Needs w up to 2^k_max.
CongruenceReport v_recurrence_check(int k_max, const ResidueTable& w);
CongruenceReport v_recurrence_check(int k_max);
CongruenceReport v_mod8_check(int k_max, const ResidueTable& w);

/// w(n) mod 4 (0 or 2) for n not a power of two; nullopt for powers of two,
/// where w(n) is odd.
std::optional<unsigned> predict_w_mod4(std::uint64_t n);

CongruenceReport w_mod4_check(std::int64_t limit, const ResidueTable& w, const SweepOptions& options = {});

/// Runs the selected theorems (all when empty) against w modulo 8 on [1, limit].
/// A hypothesis violation becomes a report with status hypothesis_violated
/// and the offending n as its mismatch.
std::vector<CongruenceReport> theorem_sweep(std::int64_t limit, const std::vector<std::string>& theorems = {},
                                            const SweepOptions& options = {});
/// Same, against a caller-supplied w table (modulus divisible by 8).
std::vector<CongruenceReport> theorem_sweep(const ResidueTable& w, const std::vector<std::string>& theorems = {},
                                            const SweepOptions& options = {});

/// Observed residues grouped by binary-expansion features. Nothing here is
/// a theorem; the report is labelled conjectural.
struct ResidueGroup {
  int lowest_bit_mod8 = 0;  // n_0 mod 8
  int gap = 0;              // n_1 - n_0
  int highest_bit_parity = 0;
  std::vector<std::int64_t> residue_counts;  // indexed by residue
  std::int64_t size() const;
  bool constant() const;
};

struct ExplorationReport {
  std::string sequence;
  std::optional<int> param;
  std::uint64_t modulus = 8;
  std::int64_t limit = 0;
  std::vector<std::uint64_t> residues;  // residues[n - 1]
  std::vector<std::uint64_t> power_residues;  // value at 2^k, k = 0, 1, ...
  std::vector<ResidueGroup> groups;
};

ExplorationReport explore_w_mod8(std::int64_t limit);
/// w_r residues modulo `modulus`; w_1 is w.
ExplorationReport explore_w_r(int r, std::int64_t limit, std::uint64_t modulus);

nlohmann::json to_json(const CongruenceReport& report);
nlohmann::json to_json(const ExplorationReport& report);

}  // namespace uppart
