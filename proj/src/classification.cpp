#include "uppart/classification.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "uppart/bijections.hpp"
#include "uppart/counting.hpp"
#include "uppart/kernels.hpp"

namespace uppart {

namespace {

/// Number of leading parts that each exceed the sum of everything after them.
std::size_t dominating_prefix(const Partition& mu) {
  int tail = mu.n();
  for (std::size_t i = 0; i < mu.length(); ++i) {
    tail -= mu[i];
    if (mu[i] <= tail) return i;
  }
  return mu.length();
}

std::vector<Partition> shapes_within_budget(const Partition& mu, const BruteForceOptions& options) {
  const auto count = partition_count(mu.n());
  if (count > options.max_shapes) {
    throw BudgetExceeded("p(" + std::to_string(mu.n()) + ") = " + std::to_string(count) + " exceeds the cap of " +
                         std::to_string(options.max_shapes) + " shapes");
  }
  return partition_list(mu.n());
}

}  // namespace

SdStatus is_sd(const Partition& mu) {
  const auto j = dominating_prefix(mu);
  return {mu, j == mu.length(), mu.suffix(j)};
}

bool is_sd_extension_of(const Partition& mu, const Partition& rho) {
  if (rho.length() > mu.length()) return false;
  const auto j = mu.length() - rho.length();
  if (!std::equal(rho.parts().begin(), rho.parts().end(), mu.parts().begin() + static_cast<std::ptrdiff_t>(j))) {
    return false;
  }
  return dominating_prefix(mu) >= j;
}

bool is_up_theorem(const Partition& mu) {
  static const Partition one_one = partition_from_sorted({1, 1});
  return is_sd(mu).is_sd || is_sd_extension_of(mu, one_one);
}

UpVerdict is_up_bruteforce(const Partition& mu, PathEngine& engine, const BruteForceOptions& options) {
  const auto shapes = shapes_within_budget(mu, options);
  const auto first = options.parallel ? parallel::first_multi_path_shape(shapes, mu, engine)
                                      : serial::first_multi_path_shape(shapes, mu, engine);
  UpVerdict verdict{mu, first == shapes.size(), std::nullopt};
  if (!verdict.is_up) {
    auto listing = engine.enumerate_paths(shapes[first], mu, 2);
    verdict.witness = UpWitness{shapes[first], listing.traces.at(0), listing.traces.at(1)};
  }
  return verdict;
}

UpVerdict is_up_bruteforce(const Partition& mu, const BruteForceOptions& options) {
  return is_up_bruteforce(mu, PathEngine::shared(), options);
}

bool is_sign_partition_bruteforce(const Partition& mu, PathEngine& engine, const BruteForceOptions& options) {
  const auto shapes = shapes_within_budget(mu, options);
  const auto worst = options.parallel ? parallel::max_abs_character(shapes, mu, engine)
                                      : serial::max_abs_character(shapes, mu, engine);
  return worst <= 1;
}

bool is_sign_partition_bruteforce(const Partition& mu, const BruteForceOptions& options) {
  return is_sign_partition_bruteforce(mu, PathEngine::shared(), options);
}

std::vector<Partition> enumerate_up(int n) {
  static const Partition one_one = partition_from_sorted({1, 1});
  auto out = enumerate_sd(n);
  for (const auto& mu : enumerate_sdt(2, n)) out.push_back(expand_from_sdt(mu, one_one));
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace uppart
