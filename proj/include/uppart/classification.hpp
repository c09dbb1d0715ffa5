#pragma once

// Unique path (up) partitions.
//
// mu is an up-partition when every lambda of the same size has at most one
// mu-path. Two deciders live here: the structural one (mu is strongly
// decreasing, or a strongly decreasing extension of (1,1)) and brute force
// over all lambda.
//
// The sd-extension test is greedy from the largest part: whether a prefix
// part a_i exceeds the sum of everything after it does not depend on how
// that tail is split between further extensions and the core rho, so the
// longest prefix of "dominating" parts is the only one to try.

#include <cstdint>
#include <optional>
#include <vector>

#include "uppart/errors.hpp"
#include "uppart/partition.hpp"
#include "uppart/path_engine.hpp"

namespace uppart {

struct SdStatus {
  Partition mu;
  bool is_sd = false;
  /// Suffix starting at the first part that does not exceed the sum of the
  /// parts after it; (0) when mu is sd.
  Partition sd_core;
};

SdStatus is_sd(const Partition& mu);

/// True iff mu = (a_1, ..., a_j) followed by rho with every a_i larger than
/// the sum of all parts after it.
bool is_sd_extension_of(const Partition& mu, const Partition& rho);

bool is_up_theorem(const Partition& mu);

struct UpWitness {
  Partition lambda;
  PathTrace first;
  PathTrace second;
};

struct UpVerdict {
  Partition mu;
  bool is_up = false;
  std::optional<UpWitness> witness;
};

struct BruteForceOptions {
  /// Refuse when p(n) exceeds this.
  std::uint64_t max_shapes = 200'000;
  bool parallel = true;
};

/// Checks count_paths(lambda, mu) <= 1 for every lambda of |mu|. The witness
/// is the first failing lambda in reverse lexicographic order.
/// Throws BudgetExceeded when p(n) > options.max_shapes.
UpVerdict is_up_bruteforce(const Partition& mu, PathEngine& engine, const BruteForceOptions& options = {});
UpVerdict is_up_bruteforce(const Partition& mu, const BruteForceOptions& options = {});

/// True iff every chi^lambda(mu) lies in {-1, 0, 1}.
bool is_sign_partition_bruteforce(const Partition& mu, PathEngine& engine,
                                  const BruteForceOptions& options = {});
bool is_sign_partition_bruteforce(const Partition& mu, const BruteForceOptions& options = {});

/// Up-partitions of n in reverse lexicographic order, generated from the
/// sd-partitions and the sd_2-partitions (expanded back to (1,1) tails).
std::vector<Partition> enumerate_up(int n);

}  // namespace uppart
