#pragma once

// Bijections between strongly decreasing (sd) partitions and restricted
// binary (rb) partitions, and the parity maps on rb-partitions.
//
// An sd-partition (a_1, ..., a_k) is fixed by d_i = a_i - (a_{i+1} + ... +
// a_k), d_k = a_k, and n = d_1 + 2 d_2 + ... + 2^(k-1) d_k. Reading d_{j+1}
// as the multiplicity of 2^j gives an rb-partition whose largest part
// occurs a_k times.

#include <cstdint>
#include <string>
#include <vector>

#include "uppart/partition.hpp"

namespace uppart {

/// mults[j] = multiplicity of the part 2^j. Canonical form: no trailing
/// zero, and (restrictedness) every entry below a nonzero one is nonzero,
/// so all stored entries are positive. Empty = the partition of 0.
class RbPartition {
 public:
  RbPartition() = default;

  /// Drops trailing zeros, then throws std::invalid_argument if the vector
  /// is not restricted or has a negative entry.
  static RbPartition from_mults(std::vector<int> mults);

  const std::vector<int>& mults() const { return mults_; }
  std::int64_t n() const;
  bool empty() const { return mults_.empty(); }
  /// Multiplicity of the largest part (0 for the empty partition).
  int top_multiplicity() const { return mults_.empty() ? 0 : mults_.back(); }
  /// Parts as a weakly decreasing list, e.g. {2,2,1}.
  std::vector<std::int64_t> parts() const;
  /// "(2,2,1)"; empty prints as "(0)".
  std::string to_string() const;

  friend bool operator==(const RbPartition&, const RbPartition&) = default;
  friend auto operator<=>(const RbPartition& a, const RbPartition& b) { return a.mults_ <=> b.mults_; }

 private:
  explicit RbPartition(std::vector<int> mults) : mults_(std::move(mults)) {}
  std::vector<int> mults_;
};

/// Requires an sd-partition; throws std::invalid_argument otherwise.
/// (0) maps to the empty rb-partition.
RbPartition sd_to_rb(const Partition& mu);
Partition rb_to_sd(const RbPartition& rb);

/// Replaces the rho-suffix of mu by the single part |rho|. Throws unless mu
/// is an sd-extension of a nonempty rho.
Partition collapse_to_sdt(const Partition& mu, const Partition& rho);
/// Inverse: mu must be sd with smallest part |rho|.
Partition expand_from_sdt(const Partition& mu, const Partition& rho);

/// (a_1, ..., a_k) with a_k = t >= 3 to (a_1, ..., a_k - 1, 1).
Partition sdt_to_sd1(const Partition& mu);
/// Inverse on sd_1-partitions with at least two parts.
Partition sd1_to_sdt(const Partition& mu);

/// Even n >= 2: drop one part 1. Result is an rb-partition of n - 1.
RbPartition rb_parity_down(const RbPartition& rb);
/// Odd n: add one part 1.
RbPartition rb_parity_up(const RbPartition& rb);

enum class OddBranch { even, half };

struct OddSplit {
  OddBranch branch;
  RbPartition rb;
  friend bool operator==(const OddSplit&, const OddSplit&) = default;
};

/// Odd n = 2r + 1: drop a 1. If a 1 is left the result is an rb-partition
/// of 2r (even branch); otherwise every part is even and halving gives an
/// rb-partition of r (half branch).
OddSplit rb_odd_split(const RbPartition& rb);
/// Inverse of rb_odd_split.
RbPartition rb_odd_merge(const OddSplit& split);

}  // namespace uppart
