#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace uppart {

/// A weakly decreasing list of positive integers. The empty list is the
/// partition (0) of n = 0.
class Partition {
 public:
  Partition() = default;

  /// Sorts the parts into weakly decreasing order.
  /// Throws std::invalid_argument on a zero or negative part.
  explicit Partition(std::vector<int> parts);

  std::span<const int> parts() const { return parts_; }
  int n() const { return n_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }
  int smallest() const { return parts_.empty() ? 0 : parts_.back(); }

  /// Parts from position `from` onward (0-indexed).
  Partition suffix(std::size_t from) const;
  /// Parts before position `to`.
  Partition prefix(std::size_t to) const;

  /// "(3,2,1)"; the empty partition prints as "(0)".
  std::string to_string() const;
  /// "3,2,1"; the empty partition prints as "0".
  std::string to_csv() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Lexicographic on the part lists.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  struct Unchecked {};
  Partition(Unchecked, std::vector<int> parts, int n) : parts_(std::move(parts)), n_(n) {}
  friend Partition partition_from_sorted(std::vector<int> parts);

  std::vector<int> parts_;
  int n_ = 0;
};

/// Validating factory; same contract as the constructor.
Partition make_partition(std::vector<int> parts);

/// Builds from parts already known to be weakly decreasing and positive.
/// Only checked in debug builds.
Partition partition_from_sorted(std::vector<int> parts);

/// Parses "a1,a2,..." (optionally wrapped in parentheses). Order-insensitive;
/// "0" and "" denote the empty partition.
Partition parse_partition(std::string_view text);

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
  std::size_t operator()(std::span<const int> parts) const noexcept;
};

/// First-column hook lengths, strictly decreasing. May carry padding
/// (a run ..., 2, 1, 0 at the bottom after shifting every bead up).
struct BetaSet {
  std::vector<int> beads;

  friend bool operator==(const BetaSet&, const BetaSet&) = default;

  /// Shift every bead up by `count` and append beads count-1, ..., 0.
  BetaSet padded(int count) const;
};

/// Canonical (unpadded) beta set: bead i = parts[i] + (k - 1 - i).
BetaSet to_beta_set(const Partition& p);

/// Inverse of to_beta_set; accepts padded sets and beads in any order.
/// Throws std::invalid_argument on duplicate or negative beads.
Partition from_beta_set(const BetaSet& b);

/// One rim-hook removal. Bead positions are in the frame of the beta set
/// the removal was computed on.
struct HookRemoval {
  Partition result;
  int leg_length = 0;
  int bead_from = 0;
  int bead_to = 0;

  friend bool operator==(const HookRemoval&, const HookRemoval&) = default;
};

/// All removals of an h-hook, ordered by bead_from descending. Empty when
/// there is none (including h > n). Throws std::invalid_argument if h < 1.
std::vector<HookRemoval> remove_hooks(const Partition& p, int h);

/// Same, computed on an arbitrary (possibly padded) beta set.
std::vector<HookRemoval> remove_hooks(const BetaSet& b, int h);

/// Generates every partition of n once, in reverse lexicographic order:
/// (n), (n-1,1), (n-2,2), (n-2,1,1), ...
class PartitionGenerator {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Partition;
    using difference_type = std::ptrdiff_t;
    using pointer = const Partition*;
    using reference = const Partition&;

    iterator() = default;
    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.done_ == b.done_; }

   private:
    friend class PartitionGenerator;
    explicit iterator(int n);
    Partition current_;
    bool done_ = true;
  };

  explicit PartitionGenerator(int n);
  iterator begin() const { return iterator(n_); }
  iterator end() const { return iterator(); }

 private:
  int n_;
};

PartitionGenerator partitions_of(int n);

/// Materialized reverse-lexicographic list of partitions of n.
std::vector<Partition> partition_list(int n);

/// p(n) by the parts-at-most-k table, saturating at UINT64_MAX.
std::uint64_t partition_count(int n);

}  // namespace uppart
