#include "uppart/partition.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <functional>
#include <limits>
#include <numeric>

#include <boost/container_hash/hash.hpp>

namespace uppart {

Partition::Partition(std::vector<int> parts) {
  for (int a : parts) {
    if (a < 1) {
      throw std::invalid_argument("partition parts must be positive, got " + std::to_string(a));
    }
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  n_ = std::accumulate(parts.begin(), parts.end(), 0);
  parts_ = std::move(parts);
}

Partition make_partition(std::vector<int> parts) { return Partition(std::move(parts)); }

Partition partition_from_sorted(std::vector<int> parts) {
  assert(std::is_sorted(parts.begin(), parts.end(), std::greater<>()));
  assert(parts.empty() || parts.back() >= 1);
  int n = std::accumulate(parts.begin(), parts.end(), 0);
  return Partition(Partition::Unchecked{}, std::move(parts), n);
}

Partition Partition::suffix(std::size_t from) const {
  from = std::min(from, parts_.size());
  return partition_from_sorted({parts_.begin() + static_cast<std::ptrdiff_t>(from), parts_.end()});
}

Partition Partition::prefix(std::size_t to) const {
  to = std::min(to, parts_.size());
  return partition_from_sorted({parts_.begin(), parts_.begin() + static_cast<std::ptrdiff_t>(to)});
}

std::string Partition::to_csv() const {
  if (parts_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::string Partition::to_string() const { return "(" + to_csv() + ")"; }

Partition parse_partition(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (!text.empty() && text.front() == '(') {
    if (text.back() != ')') throw std::invalid_argument("unbalanced parenthesis in partition literal");
    text = trim(text.substr(1, text.size() - 2));
  }
  if (text.empty() || text == "0") return Partition{};

  std::vector<int> parts;
  while (true) {
    auto comma = text.find(',');
    auto token = trim(text.substr(0, comma));
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw std::invalid_argument("bad partition part '" + std::string(token) + "'");
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Partition(std::move(parts));
}

std::size_t PartitionHash::operator()(std::span<const int> parts) const noexcept {
  return boost::hash_range(parts.begin(), parts.end());
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept { return (*this)(p.parts()); }

BetaSet BetaSet::padded(int count) const {
  BetaSet out;
  out.beads.reserve(beads.size() + static_cast<std::size_t>(count));
  for (int b : beads) out.beads.push_back(b + count);
  for (int j = count - 1; j >= 0; --j) out.beads.push_back(j);
  return out;
}

BetaSet to_beta_set(const Partition& p) {
  const int k = static_cast<int>(p.length());
  BetaSet b;
  b.beads.reserve(p.length());
  for (int i = 0; i < k; ++i) b.beads.push_back(p[static_cast<std::size_t>(i)] + (k - 1 - i));
  return b;
}

Partition from_beta_set(const BetaSet& b) {
  std::vector<int> beads = b.beads;
  std::sort(beads.begin(), beads.end(), std::greater<>());
  if (std::adjacent_find(beads.begin(), beads.end()) != beads.end()) {
    throw std::invalid_argument("beta set has duplicate beads");
  }
  if (!beads.empty() && beads.back() < 0) throw std::invalid_argument("beta set has a negative bead");

  const int k = static_cast<int>(beads.size());
  std::vector<int> parts;
  parts.reserve(beads.size());
  for (int i = 0; i < k; ++i) {
    int part = beads[static_cast<std::size_t>(i)] - (k - 1 - i);
    if (part == 0) break;  // the rest is padding
    parts.push_back(part);
  }
  return partition_from_sorted(std::move(parts));
}

std::vector<HookRemoval> remove_hooks(const BetaSet& b, int h) {
  if (h < 1) throw std::invalid_argument("hook length must be positive");

  std::vector<int> beads = b.beads;
  std::sort(beads.begin(), beads.end(), std::greater<>());
  auto occupied = [&](int pos) {
    return std::binary_search(beads.begin(), beads.end(), pos, std::greater<>());
  };

  std::vector<HookRemoval> out;
  for (std::size_t i = 0; i < beads.size(); ++i) {
    const int from = beads[i];
    const int to = from - h;
    if (to < 0 || occupied(to)) continue;

    // beads strictly between `to` and `from` sit at indices i+1 .. j-1
    auto first_below = std::lower_bound(beads.begin(), beads.end(), to, std::greater<>());
    int leg = static_cast<int>(first_below - beads.begin()) - static_cast<int>(i) - 1;

    std::vector<int> moved = beads;
    moved[i] = to;
    out.push_back({from_beta_set(BetaSet{std::move(moved)}), leg, from, to});
  }
  return out;
}

std::vector<HookRemoval> remove_hooks(const Partition& p, int h) {
  if (h < 1) throw std::invalid_argument("hook length must be positive");
  if (h > p.n()) return {};
  return remove_hooks(to_beta_set(p), h);
}

PartitionGenerator::PartitionGenerator(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("cannot enumerate partitions of a negative number");
}

PartitionGenerator::iterator::iterator(int n) : done_(false) {
  current_ = n == 0 ? Partition{} : partition_from_sorted({n});
}

PartitionGenerator::iterator& PartitionGenerator::iterator::operator++() {
  std::vector<int> parts(current_.parts().begin(), current_.parts().end());
  auto it = std::find_if(parts.rbegin(), parts.rend(), [](int a) { return a > 1; });
  if (it == parts.rend()) {
    done_ = true;
    current_ = Partition{};
    return *this;
  }
  const auto i = static_cast<std::size_t>(parts.rend() - it) - 1;
  const int v = parts[i] - 1;
  int rest = static_cast<int>(parts.size() - i - 1) + 1;
  parts.resize(i);
  parts.push_back(v);
  while (rest > 0) {
    int next = std::min(v, rest);
    parts.push_back(next);
    rest -= next;
  }
  current_ = partition_from_sorted(std::move(parts));
  return *this;
}

PartitionGenerator partitions_of(int n) { return PartitionGenerator(n); }

std::vector<Partition> partition_list(int n) {
  std::vector<Partition> out;
  for (const auto& p : partitions_of(n)) out.push_back(p);
  return out;
}

std::uint64_t partition_count(int n) {
  if (n < 0) return 0;
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> ways(static_cast<std::size_t>(n) + 1, 0);
  ways[0] = 1;
  for (int part = 1; part <= n; ++part) {
    for (int m = part; m <= n; ++m) {
      auto& w = ways[static_cast<std::size_t>(m)];
      auto add = ways[static_cast<std::size_t>(m - part)];
      w = (w > kMax - add) ? kMax : w + add;
    }
  }
  return ways[static_cast<std::size_t>(n)];
}

}  // namespace uppart
