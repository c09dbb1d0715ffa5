#include <doctest.h>

#include <optional>

#include "uppart/classification.hpp"
#include "uppart/kernels.hpp"

using namespace uppart;

TEST_CASE("worker count") { CHECK(worker_count() >= 1); }

TEST_CASE("scan keeps hits in index order") {
  auto check = [](std::int64_t i) -> std::optional<std::int64_t> {
    if (i % 7 == 3) return i * i;
    return std::nullopt;
  };
  const auto a = serial::scan(0, 10000, check);
  const auto b = parallel::scan(0, 10000, check);
  CHECK(a == b);
  REQUIRE(a.size() == 1429);
  CHECK(a.front() == 9);
  CHECK(std::is_sorted(a.begin(), a.end()));
  CHECK(serial::scan(5, 4, check).empty());
  CHECK(parallel::scan(5, 4, check).empty());
}

TEST_CASE("first_multi_path_shape: serial and parallel agree") {
  PathEngine engine;
  for (int n = 1; n <= 12; ++n) {
    const auto shapes = partition_list(n);
    for (const auto& mu : shapes) {
      const auto s = serial::first_multi_path_shape(shapes, mu, engine);
      const auto p = parallel::first_multi_path_shape(shapes, mu, engine);
      REQUIRE(s == p);
      CHECK((s == shapes.size()) == is_up_theorem(mu));
    }
  }
}

TEST_CASE("max_abs_character: serial and parallel agree") {
  PathEngine engine;
  for (int n = 1; n <= 11; ++n) {
    const auto shapes = partition_list(n);
    for (const auto& mu : shapes) {
      const auto s = serial::max_abs_character(shapes, mu, engine);
      CHECK(s == parallel::max_abs_character(shapes, mu, engine));
      CHECK(s >= 1);
      CHECK((s <= 1) == is_sign_partition_bruteforce(mu, engine));
    }
  }
  // the (1^n) column peaks at the largest standard tableau count; n = 4: 3
  const auto four = partition_list(4);
  CHECK(serial::max_abs_character(four, make_partition({1, 1, 1, 1}), engine) == 3);
}

TEST_CASE("classification_mismatches is empty and identical, n <= 13") {
  PathEngine a, b;
  for (int n = 1; n <= 13; ++n) {
    const auto s = serial::classification_mismatches(n, a);
    const auto p = parallel::classification_mismatches(n, b);
    CHECK(s == p);
    CHECK(s.empty());
  }
}
