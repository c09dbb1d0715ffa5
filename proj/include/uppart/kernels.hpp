#pragma once

// Data-parallel sweeps. Every kernel exists twice: a plain loop in
// uppart::serial, kept as the reference, and an OpenMP version in
// uppart::parallel. Both return identical results; where a "first"
// element is reported, it is the lowest index, never the first thread to
// finish.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "uppart/bigint.hpp"
#include "uppart/partition.hpp"
#include "uppart/path_engine.hpp"

namespace uppart {

namespace serial {

/// Index of the first shape carrying two or more mu-paths, or shapes.size().
std::size_t first_multi_path_shape(std::span<const Partition> shapes, const Partition& mu,
                                   PathEngine& engine);

/// max over shapes of |chi^lambda(mu)|.
BigInt max_abs_character(std::span<const Partition> shapes, const Partition& mu, PathEngine& engine);

/// Partitions mu of n whose theorem verdict differs from the brute-force one.
std::vector<Partition> classification_mismatches(int n, PathEngine& engine);

/// Runs check(i) for i in [lo, hi] and keeps the engaged results, in order of i.
template <class Check>
auto scan(std::int64_t lo, std::int64_t hi, Check check) {
  using Result = typename std::invoke_result_t<Check, std::int64_t>::value_type;
  std::vector<Result> out;
  for (std::int64_t i = lo; i <= hi; ++i) {
    if (auto r = check(i)) out.push_back(std::move(*r));
  }
  return out;
}

}  // namespace serial

namespace parallel {

std::size_t first_multi_path_shape(std::span<const Partition> shapes, const Partition& mu,
                                   PathEngine& engine);

BigInt max_abs_character(std::span<const Partition> shapes, const Partition& mu, PathEngine& engine);

std::vector<Partition> classification_mismatches(int n, PathEngine& engine);

/// Same contract as serial::scan; shards i across threads and merges by i.
template <class Check>
auto scan(std::int64_t lo, std::int64_t hi, Check check) {
  using Result = typename std::invoke_result_t<Check, std::int64_t>::value_type;
  std::vector<std::pair<std::int64_t, Result>> hits;
#pragma omp parallel
  {
    std::vector<std::pair<std::int64_t, Result>> local;
#pragma omp for schedule(static) nowait
    for (std::int64_t i = lo; i <= hi; ++i) {
      if (auto r = check(i)) local.emplace_back(i, std::move(*r));
    }
#pragma omp critical(uppart_scan_merge)
    hits.insert(hits.end(), std::make_move_iterator(local.begin()), std::make_move_iterator(local.end()));
  }
  std::sort(hits.begin(), hits.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Result> out;
  out.reserve(hits.size());
  for (auto& h : hits) out.push_back(std::move(h.second));
  return out;
}

}  // namespace parallel

/// Worker count OpenMP will use (1 without OpenMP).
int worker_count();

}  // namespace uppart
