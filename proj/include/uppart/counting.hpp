#pragma once

// Counting sequences for sd/rb/up-partitions.
//
//   s(n)      sd-partitions of n (equivalently rb-partitions)
//   s_t(n)    sd_t-partitions: smallest part t (rb: top multiplicity t)
//   s*(r)     s(2r) = s(2r-1)
//   s*_t(r)   s_t(2r) for odd r, s_t(2r-1) for even r
//   u(n)      up-partitions, s(n) + s_2(n)
//   w(n)      u(2n)/2
//   w_r(n)    s*_{2r-1}(n) + s*_{2r}(n), so w_1 = w
//   v(k)      w(2^k)
//
// Every table comes in an exact flavour (BigInt) and a residue flavour
// where each step is done modulo m. The recurrences are additive, so the
// residue table is exactly the exact table reduced mod m.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "uppart/bigint.hpp"
#include "uppart/bijections.hpp"
#include "uppart/partition.hpp"
#include "uppart/series.hpp"

namespace uppart {

enum class Sequence { s, s_t, s_star, s_star_t, u, w, w_r, v };

/// "s", "s_t", "s*", "s*_t", "u", "w", "w_r", "v"
std::string_view sequence_name(Sequence seq);
std::optional<Sequence> parse_sequence(std::string_view name);
/// True for s_t, s*_t (parameter t) and w_r (parameter r).
bool needs_param(Sequence seq);

template <class V>
struct Table {
  std::string name;
  std::optional<int> param;
  std::optional<std::uint64_t> modulus;
  /// values[n] for 0 <= n <= limit. Only v defines values[0]; elsewhere it is 0.
  std::vector<V> values;

  std::size_t limit() const { return values.empty() ? 0 : values.size() - 1; }
  const V& operator[](std::size_t n) const { return values[n]; }
  V& operator[](std::size_t n) { return values[n]; }
};

using CountTable = Table<BigInt>;
using ResidueTable = Table<std::uint64_t>;

CountTable s_table(std::size_t limit);
ResidueTable s_table(std::size_t limit, std::uint64_t modulus);

CountTable s_star_table(std::size_t limit);
ResidueTable s_star_table(std::size_t limit, std::uint64_t modulus);

CountTable st_table(int t, std::size_t limit);
ResidueTable st_table(int t, std::size_t limit, std::uint64_t modulus);

/// The single point r = floor((t+1)/2) is not covered by a formula and is
/// read off enumerate_rbt.
CountTable s_star_t_table(int t, std::size_t limit);
ResidueTable s_star_t_table(int t, std::size_t limit, std::uint64_t modulus);

CountTable w_table(std::size_t limit);
ResidueTable w_table(std::size_t limit, std::uint64_t modulus);

CountTable w_r_table(int r, std::size_t limit);
ResidueTable w_r_table(int r, std::size_t limit, std::uint64_t modulus);

CountTable u_table(std::size_t limit);
ResidueTable u_table(std::size_t limit, std::uint64_t modulus);

/// v(0..k_max); needs w up to 2^k_max. k_max is capped at 20 (exact) and 26 (residues).
CountTable v_table(std::size_t k_max);
ResidueTable v_table(std::size_t k_max, std::uint64_t modulus);

/// Dispatch by name. Throws std::invalid_argument on a missing/bad parameter.
CountTable make_table(Sequence seq, std::size_t limit, std::optional<int> param = {});
ResidueTable make_table(Sequence seq, std::size_t limit, std::optional<int> param, std::uint64_t modulus);

ResidueTable reduce(const CountTable& table, std::uint64_t modulus);

// Direct enumeration. These never touch the recurrences above; they are the
// oracles the recurrences are checked against. Each throws BudgetExceeded
// once more than `cap` objects would be produced.

inline constexpr std::size_t kDefaultEnumerationCap = 2'000'000;

/// Strongly decreasing partitions of n, reverse lexicographic.
std::vector<Partition> enumerate_sd(int n, std::size_t cap = kDefaultEnumerationCap);
/// Those with smallest part t.
std::vector<Partition> enumerate_sdt(int t, int n, std::size_t cap = kDefaultEnumerationCap);
/// Restricted binary partitions of n, ordered by multiplicity vector.
std::vector<RbPartition> enumerate_rb(int n, std::size_t cap = kDefaultEnumerationCap);
/// Those whose largest part occurs exactly t times.
std::vector<RbPartition> enumerate_rbt(int t, int n, std::size_t cap = kDefaultEnumerationCap);

// Generating functions from their closed product-sum forms, truncated at q^degree.

Series series_S(std::size_t degree);
Series series_St(int t, std::size_t degree);
/// S + S_2, from u = s + s_2. Agrees with 2 (S_1 + S_2) except at q^1,
/// where u(1) = 1.
Series series_U(std::size_t degree);
/// Even part of S_1 + S_2.
Series series_W(std::size_t degree);

}  // namespace uppart
