#include "uppart/counting.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <stdexcept>

#include "uppart/errors.hpp"

namespace uppart {

namespace {

struct ExactRing {
  using value_type = BigInt;
  BigInt from(std::int64_t v) const { return v; }
  BigInt add(const BigInt& a, const BigInt& b) const { return a + b; }
  std::optional<std::uint64_t> modulus() const { return std::nullopt; }
};

struct ModRing {
  std::uint64_t m;
  using value_type = std::uint64_t;
  std::uint64_t from(std::int64_t v) const {
    auto r = v % static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(m) : r);
  }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return a >= m - b ? a - (m - b) : a + b; }
  std::optional<std::uint64_t> modulus() const { return m; }
};

ModRing mod_ring(std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("modulus must be positive");
  return ModRing{m};
}

template <class Ring>
Table<typename Ring::value_type> blank(const Ring& ring, std::string name, std::size_t limit,
                                       std::optional<int> param = {}) {
  Table<typename Ring::value_type> t;
  t.name = std::move(name);
  t.param = param;
  t.modulus = ring.modulus();
  t.values.assign(limit + 1, ring.from(0));
  return t;
}

void require_param(int value, const char* what) {
  if (value < 1) throw std::invalid_argument(std::string(what) + " must be >= 1");
}

template <class Ring>
auto build_s(const Ring& ring, std::size_t limit) {
  auto t = blank(ring, "s", limit);
  for (std::size_t n = 1; n <= limit; ++n) {
    if (n == 1) {
      t[n] = ring.from(1);
    } else if (n % 2 == 0) {
      t[n] = t[n - 1];
    } else {
      t[n] = ring.add(t[n - 1], t[n / 2]);
    }
  }
  return t;
}

/// a(1..seeds.size()) = seeds, then a(n) = a(n-1) + a(floor(n/2)).
template <class Ring>
auto build_halving(const Ring& ring, std::string name, std::size_t limit, const std::vector<std::int64_t>& seeds,
                   std::optional<int> param = {}) {
  auto t = blank(ring, std::move(name), limit, param);
  for (std::size_t n = 1; n <= limit; ++n) {
    t[n] = n <= seeds.size() ? ring.from(seeds[n - 1]) : ring.add(t[n - 1], t[n / 2]);
  }
  return t;
}

std::int64_t exceptional_s_star_t(int t) {
  const int r0 = (t + 1) / 2;
  const int n = r0 % 2 == 1 ? 2 * r0 : 2 * r0 - 1;
  return static_cast<std::int64_t>(enumerate_rbt(t, n).size());
}

template <class Ring>
auto build_s_star_t(const Ring& ring, int t, std::size_t limit) {
  require_param(t, "t");
  auto table = blank(ring, "s*_t", limit, t);
  const std::size_t ut = static_cast<std::size_t>(t);
  const std::size_t r0 = (ut + 1) / 2;

  // s_t(m) for m >= 1, read back through the table wherever ceil(m/2) != r0
  auto st = [&](std::size_t m) {
    const std::size_t half = (m + 1) / 2;
    if (half == r0) return ring.from(m == ut ? 1 : 0);
    return table[half];
  };

  for (std::size_t r = 1; r <= limit; ++r) {
    if (r == r0) {
      table[r] = ring.from(exceptional_s_star_t(t));
    } else if (r <= ut) {
      table[r] = ring.from(0);
    } else if (r == ut + 1) {
      table[r] = ring.from(1);
    } else {
      // s*_t(r) = s*_t(r-1) + s_t(r-1); s_t(r-1) is s*_t(floor(r/2)) except
      // where floor(r/2) hits r0.
      table[r] = ring.add(table[r - 1], st(r - 1));
    }
  }
  return table;
}

template <class Ring>
auto build_st(const Ring& ring, int t, std::size_t limit) {
  require_param(t, "t");
  const std::size_t ut = static_cast<std::size_t>(t);
  const std::size_t r0 = (ut + 1) / 2;
  auto star = build_s_star_t(ring, t, (limit + 1) / 2);
  auto table = blank(ring, "s_t", limit, t);
  for (std::size_t n = 1; n <= limit; ++n) {
    if (n <= 2 * ut + 1) {
      table[n] = ring.from(n == ut || n == 2 * ut + 1 ? 1 : 0);
    } else {
      const std::size_t half = (n + 1) / 2;
      table[n] = half == r0 ? ring.from(n == ut ? 1 : 0) : star[half];
    }
  }
  return table;
}

template <class Ring>
auto build_w_r(const Ring& ring, int r, std::size_t limit) {
  require_param(r, "r");
  std::vector<std::int64_t> seeds(static_cast<std::size_t>(2 * r), 0);
  seeds[static_cast<std::size_t>(r - 1)] = 1;
  seeds[static_cast<std::size_t>(2 * r - 1)] = 1;
  return build_halving(ring, "w_r", limit, seeds, r);
}

template <class Ring>
auto build_u(const Ring& ring, std::size_t limit) {
  auto s = build_s(ring, limit);
  auto s2 = build_st(ring, 2, limit);
  auto table = blank(ring, "u", limit);
  for (std::size_t n = 1; n <= limit; ++n) table[n] = ring.add(s[n], s2[n]);
  return table;
}

template <class Ring>
auto build_v(const Ring& ring, std::size_t k_max, std::size_t cap) {
  if (k_max > cap) throw std::invalid_argument("v table limited to k <= " + std::to_string(cap));
  auto w = build_halving(ring, "w", std::size_t{1} << k_max, {1, 1});
  auto table = blank(ring, "v", k_max);
  for (std::size_t k = 0; k <= k_max; ++k) table[k] = w[std::size_t{1} << k];
  return table;
}

template <class Ring>
auto build(const Ring& ring, Sequence seq, std::size_t limit, std::optional<int> param) {
  if (needs_param(seq) && !param) {
    throw std::invalid_argument(std::string("sequence ") + std::string(sequence_name(seq)) + " needs parameter " +
                                (seq == Sequence::w_r ? "r" : "t"));
  }
  switch (seq) {
    case Sequence::s: return build_s(ring, limit);
    case Sequence::s_star: return build_halving(ring, "s*", limit, {1});
    case Sequence::s_t: return build_st(ring, *param, limit);
    case Sequence::s_star_t: return build_s_star_t(ring, *param, limit);
    case Sequence::u: return build_u(ring, limit);
    case Sequence::w: return build_halving(ring, "w", limit, {1, 1});
    case Sequence::w_r: return build_w_r(ring, *param, limit);
    case Sequence::v: return build_v(ring, limit, ring.modulus() ? 26 : 20);
  }
  throw std::logic_error("unhandled sequence");
}

}  // namespace

std::string_view sequence_name(Sequence seq) {
  switch (seq) {
    case Sequence::s: return "s";
    case Sequence::s_t: return "s_t";
    case Sequence::s_star: return "s*";
    case Sequence::s_star_t: return "s*_t";
    case Sequence::u: return "u";
    case Sequence::w: return "w";
    case Sequence::w_r: return "w_r";
    case Sequence::v: return "v";
  }
  return "?";
}

std::optional<Sequence> parse_sequence(std::string_view name) {
  static constexpr std::array all{Sequence::s, Sequence::s_t, Sequence::s_star, Sequence::s_star_t,
                                  Sequence::u, Sequence::w,   Sequence::w_r,    Sequence::v};
  for (auto seq : all) {
    if (sequence_name(seq) == name) return seq;
  }
  return std::nullopt;
}

bool needs_param(Sequence seq) {
  return seq == Sequence::s_t || seq == Sequence::s_star_t || seq == Sequence::w_r;
}

CountTable s_table(std::size_t limit) { return build_s(ExactRing{}, limit); }
ResidueTable s_table(std::size_t limit, std::uint64_t m) { return build_s(mod_ring(m), limit); }

CountTable s_star_table(std::size_t limit) { return build_halving(ExactRing{}, "s*", limit, {1}); }
ResidueTable s_star_table(std::size_t limit, std::uint64_t m) {
  return build_halving(mod_ring(m), "s*", limit, {1});
}

CountTable st_table(int t, std::size_t limit) { return build_st(ExactRing{}, t, limit); }
ResidueTable st_table(int t, std::size_t limit, std::uint64_t m) { return build_st(mod_ring(m), t, limit); }

CountTable s_star_t_table(int t, std::size_t limit) { return build_s_star_t(ExactRing{}, t, limit); }
ResidueTable s_star_t_table(int t, std::size_t limit, std::uint64_t m) {
  return build_s_star_t(mod_ring(m), t, limit);
}

CountTable w_table(std::size_t limit) { return build_halving(ExactRing{}, "w", limit, {1, 1}); }
ResidueTable w_table(std::size_t limit, std::uint64_t m) { return build_halving(mod_ring(m), "w", limit, {1, 1}); }

CountTable w_r_table(int r, std::size_t limit) { return build_w_r(ExactRing{}, r, limit); }
ResidueTable w_r_table(int r, std::size_t limit, std::uint64_t m) { return build_w_r(mod_ring(m), r, limit); }

CountTable u_table(std::size_t limit) { return build_u(ExactRing{}, limit); }
ResidueTable u_table(std::size_t limit, std::uint64_t m) { return build_u(mod_ring(m), limit); }

CountTable v_table(std::size_t k_max) { return build_v(ExactRing{}, k_max, 20); }
ResidueTable v_table(std::size_t k_max, std::uint64_t m) { return build_v(mod_ring(m), k_max, 26); }

CountTable make_table(Sequence seq, std::size_t limit, std::optional<int> param) {
  return build(ExactRing{}, seq, limit, param);
}

ResidueTable make_table(Sequence seq, std::size_t limit, std::optional<int> param, std::uint64_t m) {
  return build(mod_ring(m), seq, limit, param);
}

ResidueTable reduce(const CountTable& table, std::uint64_t m) {
  mod_ring(m);
  ResidueTable out;
  out.name = table.name;
  out.param = table.param;
  out.modulus = m;
  out.values.reserve(table.values.size());
  for (const auto& v : table.values) {
    BigInt r = v % m;
    if (r < 0) r += m;
    out.values.push_back(static_cast<std::uint64_t>(r));
  }
  return out;
}

namespace {

void charge(std::size_t produced, std::size_t cap, const char* what) {
  if (produced > cap) {
    throw BudgetExceeded(std::string(what) + ": more than " + std::to_string(cap) + " objects");
  }
}

/// sd-partitions of n with every part <= bound, appended to prefix.
void sd_rec(int n, std::vector<int>& prefix, std::vector<Partition>& out, std::size_t cap) {
  if (n == 0) {
    out.push_back(partition_from_sorted(prefix));
    charge(out.size(), cap, "enumerate_sd");
    return;
  }
  // the leading part must exceed the rest: a > n - a
  for (int a = n; 2 * a > n; --a) {
    prefix.push_back(a);
    sd_rec(n - a, prefix, out, cap);
    prefix.pop_back();
  }
}

/// Adds extra copies of 2^j for j = top, top-1, ..., 0 so the weight grows by rem.
template <class Emit>
void spread_binary(int top, std::int64_t rem, std::vector<int>& mults, Emit&& emit) {
  if (top < 0) {
    if (rem == 0) emit();
    return;
  }
  const std::int64_t part = std::int64_t{1} << top;
  if (top == 0) {
    mults[0] += static_cast<int>(rem);
    emit();
    mults[0] -= static_cast<int>(rem);
    return;
  }
  for (std::int64_t extra = 0; extra * part <= rem; ++extra) {
    mults[static_cast<std::size_t>(top)] += static_cast<int>(extra);
    spread_binary(top - 1, rem - extra * part, mults, emit);
    mults[static_cast<std::size_t>(top)] -= static_cast<int>(extra);
  }
}

}  // namespace

std::vector<Partition> enumerate_sd(int n, std::size_t cap) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> prefix;
  sd_rec(n, prefix, out, cap);
  return out;
}

std::vector<Partition> enumerate_sdt(int t, int n, std::size_t cap) {
  require_param(t, "t");
  std::vector<Partition> out;
  for (auto& p : enumerate_sd(n, cap)) {
    if (!p.empty() && p.smallest() == t) out.push_back(std::move(p));
  }
  return out;
}

std::vector<RbPartition> enumerate_rb(int n, std::size_t cap) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  std::vector<RbPartition> out;
  if (n == 0) return {RbPartition{}};
  // distinct part sizes 1, 2, ..., 2^(len-1), each at least once
  for (int len = 1; (std::int64_t{1} << len) - 1 <= n; ++len) {
    std::vector<int> mults(static_cast<std::size_t>(len), 1);
    std::int64_t rem = n - ((std::int64_t{1} << len) - 1);
    spread_binary(len - 1, rem, mults, [&] {
      out.push_back(RbPartition::from_mults(mults));
      charge(out.size(), cap, "enumerate_rb");
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RbPartition> enumerate_rbt(int t, int n, std::size_t cap) {
  require_param(t, "t");
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  std::vector<RbPartition> out;
  for (int len = 1;; ++len) {
    const std::int64_t top = std::int64_t{1} << (len - 1);
    // t copies of the top part plus one copy of each smaller power
    const std::int64_t base = t * top + (top - 1);
    if (base > n) break;
    std::vector<int> mults(static_cast<std::size_t>(len), 1);
    mults.back() = t;
    spread_binary(len - 2, n - base, mults, [&] {
      out.push_back(RbPartition::from_mults(mults));
      charge(out.size(), cap, "enumerate_rbt");
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

/// 1 / prod_{j=0}^{last} (1 - q^(2^j)); empty product when last < 0.
Series inverse_binary_product(int last, std::size_t degree) {
  Series out = Series::monomial(degree, 0);
  for (int j = 0; j <= last && (std::size_t{1} << j) <= degree; ++j) {
    out = out / Series::one_minus_q_pow(degree, std::size_t{1} << j);
  }
  return out;
}

}  // namespace

Series series_S(std::size_t degree) {
  Series total(degree);
  for (int i = 1; (std::size_t{1} << i) - 1 <= degree; ++i) {
    total += Series::monomial(degree, (std::size_t{1} << i) - 1) * inverse_binary_product(i - 1, degree);
  }
  return total;
}

Series series_St(int t, std::size_t degree) {
  require_param(t, "t");
  Series total(degree);
  for (int i = 1;; ++i) {
    const std::size_t exponent =
        (std::size_t{1} << i) - 1 + static_cast<std::size_t>(t - 1) * (std::size_t{1} << (i - 1));
    if (exponent > degree) break;
    total += Series::monomial(degree, exponent) * inverse_binary_product(i - 2, degree);
  }
  return total;
}

Series series_U(std::size_t degree) { return series_S(degree) + series_St(2, degree); }

Series series_W(std::size_t degree) {
  return (series_St(1, 2 * degree) + series_St(2, 2 * degree)).even_part();
}

}  // namespace uppart
