#pragma once

// mu-path counting and Murnaghan-Nakayama character values.
//
// A mu-path in lambda, mu = (a_1, ..., a_k), is a chain lambda = l_0, l_1,
// ..., l_k = (0) where l_i arises from l_{i-1} by removing an a_i-hook. The
// parts of mu are consumed largest first. The character value is the same
// sum with each path weighted by (-1)^(sum of leg lengths).

#include <cstddef>
#include <memory>
#include <shared_mutex>
#include <span>
#include <unordered_map>
#include <vector>

#include "uppart/bigint.hpp"
#include "uppart/partition.hpp"

namespace uppart {

struct PathCount {
  BigInt count;
  Partition lambda;
  Partition mu;
};

struct CharacterValue {
  BigInt value;
  Partition lambda;
  Partition mu;
};

/// One mu-path: shapes[0] = lambda, ..., shapes.back() = (0); legs[i] is the
/// leg length of the hook removed between shapes[i] and shapes[i+1].
struct PathTrace {
  std::vector<Partition> shapes;
  std::vector<int> legs;

  int sign() const;
  friend bool operator==(const PathTrace&, const PathTrace&) = default;
};

struct PathListing {
  std::vector<PathTrace> traces;
  bool truncated = false;
};

/// Memoized path counter. The cache is keyed on (lambda, remaining parts of
/// mu), so tails shared between different mu reuse entries. One engine may
/// be used from several threads at once: lookups take a shared lock and
/// inserts are insert-if-absent under an exclusive lock.
class PathEngine {
 public:
  explicit PathEngine(bool memoize = true) : memoize_(memoize) {}
  PathEngine(const PathEngine&) = delete;
  PathEngine& operator=(const PathEngine&) = delete;

  PathCount count_paths(const Partition& lambda, const Partition& mu);
  CharacterValue character_value(const Partition& lambda, const Partition& mu);
  bool is_unique_path_for(const Partition& lambda, const Partition& mu);

  /// Depth-first in remove_hooks order; at most `limit` traces.
  PathListing enumerate_paths(const Partition& lambda, const Partition& mu, std::size_t limit) const;

  bool memoizing() const { return memoize_; }
  std::size_t cache_size() const;
  void clear_cache();

  /// Process-wide engine behind the free functions below.
  static PathEngine& shared();

 private:
  struct Tally {
    BigInt paths;
    BigInt signed_sum;
  };
  struct Key {
    std::vector<int> lambda;
    std::vector<int> mu_tail;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept;
  };

  Tally tally(const Partition& lambda, std::span<const int> mu_tail);

  bool memoize_;
  mutable std::shared_mutex mutex_;
  std::unordered_map<Key, Tally, KeyHash> cache_;
};

PathCount count_paths(const Partition& lambda, const Partition& mu);
CharacterValue character_value(const Partition& lambda, const Partition& mu);
bool is_unique_path_for(const Partition& lambda, const Partition& mu);
PathListing enumerate_paths(const Partition& lambda, const Partition& mu, std::size_t limit);

}  // namespace uppart
