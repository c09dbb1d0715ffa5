#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "oracles.hpp"
#include "uppart/bijections.hpp"
#include "uppart/classification.hpp"
#include "uppart/counting.hpp"

using namespace uppart;
using testing::P;
using testing::shape;

namespace {
RbPartition rb(std::vector<int> m) { return RbPartition::from_mults(std::move(m)); }
}  // namespace

TEST_CASE("RbPartition canonical form") {
  CHECK(rb({1, 2, 0, 0}).mults() == std::vector<int>{1, 2});
  CHECK(rb({1, 2}).n() == 5);
  CHECK(rb({1, 2}).parts() == std::vector<std::int64_t>{2, 2, 1});
  CHECK(rb({1, 2}).to_string() == "(2,2,1)");
  CHECK(rb({}).empty());
  CHECK(rb({}).to_string() == "(0)");
  CHECK(rb({0}).empty());
  CHECK(rb({3}).top_multiplicity() == 3);
  CHECK_THROWS_AS(rb({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(rb({1, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(rb({-1}), std::invalid_argument);
}

TEST_CASE("sd_to_rb examples") {
  CHECK(sd_to_rb(P({4, 2, 1})).mults() == std::vector<int>{1, 1, 1});
  CHECK(sd_to_rb(P({4, 2, 1})).n() == 7);
  CHECK(sd_to_rb(P({1})).mults() == std::vector<int>{1});
  CHECK(sd_to_rb(P({3, 2})).mults() == std::vector<int>{1, 2});
  CHECK(sd_to_rb(P({3, 2})).n() == 5);
  for (int t = 1; t <= 10; ++t) CHECK(sd_to_rb(P({t})).mults() == std::vector<int>{t});
  CHECK(sd_to_rb(P({})).empty());
  CHECK_THROWS_AS(sd_to_rb(P({3, 2, 1})), std::invalid_argument);
}

TEST_CASE("rb_to_sd examples") {
  CHECK(rb_to_sd(rb({1, 1, 1})) == P({4, 2, 1}));
  CHECK(rb_to_sd(rb({1, 2})) == P({3, 2}));
  for (int t = 1; t <= 10; ++t) CHECK(rb_to_sd(rb({t})) == P({t}));
  CHECK(rb_to_sd(rb({})).empty());
}

TEST_CASE("sd and rb round trips, n <= 64") {
  for (int n = 1; n <= 64; ++n) {
    const auto sds = enumerate_sd(n);
    const auto rbs = enumerate_rb(n);
    REQUIRE(sds.size() == rbs.size());
    std::set<RbPartition> image;
    for (const auto& mu : sds) {
      const auto r = sd_to_rb(mu);
      CHECK(r.n() == n);
      CHECK(r.top_multiplicity() == mu.smallest());
      CHECK(rb_to_sd(r) == mu);
      image.insert(r);
    }
    CHECK(image == std::set<RbPartition>(rbs.begin(), rbs.end()));
    for (const auto& r : rbs) CHECK(sd_to_rb(rb_to_sd(r)) == r);
  }
}

TEST_CASE("enumerations agree with independent filters") {
  for (int n = 1; n <= 24; ++n) {
    std::set<Partition> filtered;
    for (const auto& s : oracle::all_shapes(n)) {
      if (oracle::strongly_decreasing(s)) filtered.insert(testing::from_shape(s));
    }
    const auto sds = enumerate_sd(n);
    CHECK(std::set<Partition>(sds.begin(), sds.end()) == filtered);
    CHECK(sds.size() == filtered.size());
    CHECK(static_cast<long>(enumerate_rb(n).size()) == oracle::rb_count(n, 0));
  }
}

TEST_CASE("|sd_t(n)| = |rb_t(n)|, t <= 10, n <= 40") {
  for (int t = 1; t <= 10; ++t) {
    for (int n = 1; n <= 40; ++n) {
      const auto sdt = enumerate_sdt(t, n);
      const auto rbt = enumerate_rbt(t, n);
      REQUIRE_MESSAGE(sdt.size() == rbt.size(), "t=", t, " n=", n);
      CHECK(static_cast<long>(rbt.size()) == oracle::rb_count(n, t));
      for (const auto& mu : sdt) CHECK(mu.smallest() == t);
      for (const auto& r : rbt) CHECK(r.top_multiplicity() == t);
    }
  }
}

TEST_CASE("collapse_to_sdt and expand_from_sdt examples") {
  CHECK(collapse_to_sdt(P({3, 1, 1}), P({1, 1})) == P({3, 2}));
  CHECK(collapse_to_sdt(P({1, 1}), P({1, 1})) == P({2}));
  CHECK(collapse_to_sdt(P({8, 3, 1, 1}), P({1, 1})) == P({8, 3, 2}));
  CHECK(expand_from_sdt(P({3, 2}), P({1, 1})) == P({3, 1, 1}));
  CHECK(expand_from_sdt(P({2}), P({1, 1})) == P({1, 1}));
  CHECK(expand_from_sdt(P({8, 3, 2}), P({1, 1})) == P({8, 3, 1, 1}));
  CHECK_THROWS_AS(collapse_to_sdt(P({2, 1, 1}), P({1, 1})), std::invalid_argument);
  CHECK_THROWS_AS(collapse_to_sdt(P({3, 1}), P({})), std::invalid_argument);
  CHECK_THROWS_AS(expand_from_sdt(P({3, 1}), P({1, 1})), std::invalid_argument);
  CHECK_THROWS_AS(expand_from_sdt(P({3, 2, 1}), P({1, 2})), std::invalid_argument);
}

TEST_CASE("collapse and expand are inverse bijections") {
  const std::vector<Partition> cores{P({1, 1}), P({2, 1}), P({2, 2}), P({3, 2, 1})};
  for (const auto& rho : cores) {
    const int t = rho.n();
    for (int n = t; n <= 40; ++n) {
      std::set<Partition> extensions;
      for (const auto& mu : enumerate_sdt(t, n)) {
        const auto e = expand_from_sdt(mu, rho);
        CHECK(e.n() == n);
        CHECK(is_sd_extension_of(e, rho));
        CHECK(collapse_to_sdt(e, rho) == mu);
        extensions.insert(e);
      }
      if (n > 22) continue;
      std::set<Partition> direct;
      for (const auto& mu : partitions_of(n)) {
        if (is_sd_extension_of(mu, rho)) direct.insert(mu);
      }
      CHECK(extensions == direct);
    }
  }
}

TEST_CASE("sdt_to_sd1 examples") {
  CHECK(sdt_to_sd1(P({3})) == P({2, 1}));
  CHECK(sdt_to_sd1(P({7, 4})) == P({7, 3, 1}));
  CHECK(sdt_to_sd1(P({4})) == P({3, 1}));
  CHECK_THROWS_AS(sdt_to_sd1(P({2})), std::invalid_argument);
  CHECK_THROWS_AS(sdt_to_sd1(P({5, 1})), std::invalid_argument);
  CHECK(sd1_to_sdt(P({7, 3, 1})) == P({7, 4}));
}

TEST_CASE("s_1(n) = sum over t >= 3 of s_t(n) through sdt_to_sd1, n <= 40") {
  for (int n = 2; n <= 40; ++n) {
    std::set<Partition> image;
    std::size_t sources = 0;
    for (int t = 3; t <= n; ++t) {
      for (const auto& mu : enumerate_sdt(t, n)) {
        const auto m = sdt_to_sd1(mu);
        CHECK(is_sd(m).is_sd);
        CHECK(m.smallest() == 1);
        CHECK(sd1_to_sdt(m) == mu);
        image.insert(m);
        ++sources;
      }
    }
    const auto sd1 = enumerate_sdt(1, n);
    CHECK(image.size() == sources);
    CHECK(image == std::set<Partition>(sd1.begin(), sd1.end()));
  }
}

TEST_CASE("rb_parity_down examples") {
  CHECK(rb_parity_down(rb({2})).mults() == std::vector<int>{1});
  CHECK(rb_parity_down(rb({2, 1})).mults() == std::vector<int>{1, 1});
  CHECK(rb_parity_down(rb({4})).mults() == std::vector<int>{3});
  CHECK_THROWS_AS(rb_parity_down(rb({1})), std::invalid_argument);
  CHECK_THROWS_AS(rb_parity_down(rb({})), std::invalid_argument);
  CHECK_THROWS_AS(rb_parity_up(rb({2})), std::invalid_argument);
}

TEST_CASE("rb_parity_down is a bijection rb(2r) -> rb(2r-1), r <= 32") {
  for (int r = 1; r <= 32; ++r) {
    const auto even = enumerate_rb(2 * r);
    const auto odd = enumerate_rb(2 * r - 1);
    std::set<RbPartition> image;
    for (const auto& x : even) {
      const auto y = rb_parity_down(x);
      CHECK(y.n() == 2 * r - 1);
      CHECK(rb_parity_up(y) == x);
      image.insert(y);
    }
    CHECK(image.size() == even.size());
    CHECK(image == std::set<RbPartition>(odd.begin(), odd.end()));
  }
}

TEST_CASE("rb_odd_split examples") {
  CHECK(rb_odd_split(rb({3})) == OddSplit{OddBranch::even, rb({2})});
  CHECK(rb_odd_split(rb({1, 1})) == OddSplit{OddBranch::half, rb({1})});
  CHECK(rb_odd_split(rb({1})) == OddSplit{OddBranch::half, rb({})});
  CHECK_THROWS_AS(rb_odd_split(rb({2})), std::invalid_argument);
}

TEST_CASE("rb_odd_split: rb(2r+1) splits onto rb(2r) and rb(r), r <= 31") {
  for (int r = 0; r <= 31; ++r) {
    std::set<RbPartition> even_side, half_side;
    for (const auto& x : enumerate_rb(2 * r + 1)) {
      const auto split = rb_odd_split(x);
      CHECK(rb_odd_merge(split) == x);
      if (split.branch == OddBranch::even) {
        CHECK(split.rb.n() == 2 * r);
        CHECK(even_side.insert(split.rb).second);
      } else {
        CHECK(split.rb.n() == r);
        CHECK(half_side.insert(split.rb).second);
      }
    }
    const auto e = r == 0 ? std::vector<RbPartition>{} : enumerate_rb(2 * r);
    const auto h = r == 0 ? std::vector<RbPartition>{rb({})} : enumerate_rb(r);
    CHECK(even_side == std::set<RbPartition>(e.begin(), e.end()));
    CHECK(half_side == std::set<RbPartition>(h.begin(), h.end()));
  }
}
