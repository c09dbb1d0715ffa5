#include "uppart/congruence.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>
#include <tuple>

#include "uppart/kernels.hpp"

namespace uppart {

namespace {

void require_modulus_multiple(const ResidueTable& table, std::uint64_t factor, std::string_view check) {
  if (!table.modulus || *table.modulus % factor != 0) {
    throw std::invalid_argument(std::string(check) + " needs a table reduced modulo a multiple of " +
                                std::to_string(factor));
  }
}

void require_limit(const ResidueTable& table, std::int64_t limit) {
  if (limit < 1 || static_cast<std::size_t>(limit) > table.limit()) {
    throw std::invalid_argument("limit " + std::to_string(limit) + " outside the table (" +
                                std::to_string(table.limit()) + ")");
  }
}

bool is_power_of_two(std::uint64_t n) { return n != 0 && std::has_single_bit(n); }

/// n = 2^d c for some d >= 0
bool is_power_multiple(std::int64_t n, std::int64_t c) {
  return n >= c && n % c == 0 && is_power_of_two(static_cast<std::uint64_t>(n / c));
}

CongruenceReport finish(std::string theorem, std::int64_t first, std::int64_t last, std::vector<Mismatch> mismatches) {
  CongruenceReport r{std::move(theorem), first, last, std::move(mismatches), ReportStatus::verified, {}};
  if (!r.mismatches.empty()) r.status = ReportStatus::mismatch;
  return r;
}

template <class Check>
std::vector<Mismatch> run_scan(std::int64_t lo, std::int64_t hi, const SweepOptions& options, Check check) {
  return options.parallel ? parallel::scan(lo, hi, check) : serial::scan(lo, hi, check);
}

ResidueTable w_mod8(std::int64_t limit) { return w_table(static_cast<std::size_t>(std::max<std::int64_t>(limit, 2)), 8); }

int floor_log2(std::int64_t n) { return static_cast<int>(std::bit_width(static_cast<std::uint64_t>(n))) - 1; }

}  // namespace

BinaryExpansion BinaryExpansion::of(std::uint64_t n) {
  BinaryExpansion e;
  for (int bit = 0; n != 0; ++bit, n >>= 1) {
    if (n & 1U) e.exponents.push_back(bit);
  }
  return e;
}

std::uint64_t BinaryExpansion::value() const {
  std::uint64_t v = 0;
  for (int e : exponents) v += std::uint64_t{1} << e;
  return v;
}

std::string_view status_name(ReportStatus status) {
  switch (status) {
    case ReportStatus::verified: return "verified";
    case ReportStatus::mismatch: return "mismatch";
    case ReportStatus::hypothesis_violated: return "hypothesis-violated";
  }
  return "?";
}

std::vector<std::string> all_theorems() {
  return {std::string(kTheoremParity), std::string(kTheoremWindow), std::string(kTheoremVRecurrence),
          std::string(kTheoremVMod8), std::string(kTheoremWMod4)};
}

CongruenceReport parity_rule(std::int64_t c, std::int64_t limit, const ResidueTable& table,
                             const SweepOptions& options) {
  if (c < 1) throw std::invalid_argument("parity_rule needs c >= 1");
  require_modulus_multiple(table, 2, "parity_rule");
  require_limit(table, std::max(limit, 2 * c));
  const auto m = *table.modulus;
  auto a = [&](std::int64_t n) { return table[static_cast<std::size_t>(n)]; };

  if (a(c) % 2 == 0) throw HypothesisViolation("a(c) is even for c = " + std::to_string(c), c);
  if (a(2 * c) % 2 == 0) throw HypothesisViolation("a(2c) is even for c = " + std::to_string(c), 2 * c);
  for (std::int64_t n = c + 1; n < 2 * c; ++n) {
    if (a(n) % 2 != 0) throw HypothesisViolation("a(m) is odd for c < m < 2c at m = " + std::to_string(n), n);
  }
  for (std::int64_t n = 2 * c + 1; n <= limit; ++n) {
    if (a(n) != (a(n - 1) + a(n / 2)) % m) {
      throw HypothesisViolation("a(n) != a(n-1) + a(n/2) at n = " + std::to_string(n), n);
    }
  }

  auto mismatches = run_scan(c, limit, options, [&](std::int64_t n) -> std::optional<Mismatch> {
    const std::int64_t predicted = is_power_multiple(n, c) ? 1 : 0;
    const auto computed = static_cast<std::int64_t>(a(n) % 2);
    if (predicted != computed) return Mismatch{n, predicted, computed};
    return std::nullopt;
  });
  return finish(std::string(kTheoremParity), c, limit, std::move(mismatches));
}

CongruenceReport window_constancy_mod4(std::int64_t limit, const ResidueTable& w, const SweepOptions& options) {
  if (limit < 3) throw std::invalid_argument("window_constancy_mod4 needs limit >= 3");
  require_modulus_multiple(w, 4, "window_constancy_mod4");
  require_limit(w, limit);
  auto mismatches = run_scan(3, limit, options, [&](std::int64_t m) -> std::optional<Mismatch> {
    if (m % 2 == 0) return std::nullopt;
    const auto anchor = (std::int64_t{1} << floor_log2(m - 1)) + 1;  // 2^b + 1 <= m < 2^(b+1)
    const auto predicted = static_cast<std::int64_t>(w[static_cast<std::size_t>(anchor)] % 4);
    const auto computed = static_cast<std::int64_t>(w[static_cast<std::size_t>(m)] % 4);
    if (predicted != computed) return Mismatch{m, predicted, computed};
    return std::nullopt;
  });
  return finish(std::string(kTheoremWindow), 3, limit, std::move(mismatches));
}

CongruenceReport window_constancy_mod4(std::int64_t limit) { return window_constancy_mod4(limit, w_mod8(limit)); }

unsigned predict_v_mod8(std::int64_t k) {
  if (k < 1) throw std::invalid_argument("predict_v_mod8 needs k >= 1");
  return static_cast<unsigned>((2 * (k / 2) + 1) % 8);
}

CongruenceReport v_recurrence_check(int k_max, const ResidueTable& w) {
  if (k_max < 2) throw std::invalid_argument("v_recurrence_check needs K >= 2");
  require_modulus_multiple(w, 4, "v_recurrence_check");
  require_limit(w, std::int64_t{1} << k_max);
  auto v = [&](int k) { return static_cast<std::int64_t>(w[std::size_t{1} << k] % 4); };
  std::vector<Mismatch> mismatches;
  for (int k = 2; k <= k_max; ++k) {
    const auto predicted = (2 * v(k - 1) + v(k - 2)) % 4;
    if (predicted != v(k)) mismatches.push_back({k, predicted, v(k)});
  }
  return finish(std::string(kTheoremVRecurrence), 2, k_max, std::move(mismatches));
}

CongruenceReport v_recurrence_check(int k_max) {
  return v_recurrence_check(k_max, w_mod8(std::int64_t{1} << k_max));
}

CongruenceReport v_mod8_check(int k_max, const ResidueTable& w) {
  if (k_max < 1) throw std::invalid_argument("v_mod8_check needs K >= 1");
  require_modulus_multiple(w, 8, "v_mod8_check");
  require_limit(w, std::int64_t{1} << k_max);
  std::vector<Mismatch> mismatches;
  for (int k = 1; k <= k_max; ++k) {
    const auto predicted = static_cast<std::int64_t>(predict_v_mod8(k));
    const auto computed = static_cast<std::int64_t>(w[std::size_t{1} << k] % 8);
    if (predicted != computed) mismatches.push_back({k, predicted, computed});
  }
  return finish(std::string(kTheoremVMod8), 1, k_max, std::move(mismatches));
}

std::optional<unsigned> predict_w_mod4(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("predict_w_mod4 needs n >= 1");
  const auto e = BinaryExpansion::of(n);
  if (e.is_power_of_two()) return std::nullopt;
  const bool top_even = e.highest() % 2 == 0;
  switch (e.lowest() % 4) {
    case 3: return 0u;
    case 1: return 2u;
    case 0: return top_even ? 0u : 2u;  // includes odd n (lowest bit 0)
    default: return top_even ? 2u : 0u;  // lowest bit = 2 mod 4
  }
}

CongruenceReport w_mod4_check(std::int64_t limit, const ResidueTable& w, const SweepOptions& options) {
  require_modulus_multiple(w, 4, "w_mod4_check");
  require_limit(w, limit);
  auto mismatches = run_scan(1, limit, options, [&](std::int64_t n) -> std::optional<Mismatch> {
    auto predicted = predict_w_mod4(static_cast<std::uint64_t>(n));
    if (!predicted) return std::nullopt;
    const auto computed = static_cast<std::int64_t>(w[static_cast<std::size_t>(n)] % 4);
    if (static_cast<std::int64_t>(*predicted) != computed) {
      return Mismatch{n, static_cast<std::int64_t>(*predicted), computed};
    }
    return std::nullopt;
  });
  return finish(std::string(kTheoremWMod4), 1, limit, std::move(mismatches));
}

std::vector<CongruenceReport> theorem_sweep(const ResidueTable& w, const std::vector<std::string>& theorems,
                                            const SweepOptions& options) {
  require_modulus_multiple(w, 8, "theorem_sweep");
  const auto limit = static_cast<std::int64_t>(w.limit());
  if (limit < 4) throw std::invalid_argument("theorem_sweep needs a table reaching n = 4");
  const int k_max = floor_log2(limit);

  auto wanted = theorems.empty() ? all_theorems() : theorems;
  for (const auto& id : wanted) {
    auto known = all_theorems();
    if (std::find(known.begin(), known.end(), id) == known.end()) {
      throw std::invalid_argument("unknown theorem id '" + id + "'");
    }
  }

  std::vector<CongruenceReport> reports;
  for (const auto& id : wanted) {
    try {
      if (id == kTheoremParity) {
        reports.push_back(parity_rule(1, limit, w, options));
      } else if (id == kTheoremWindow) {
        reports.push_back(window_constancy_mod4(limit, w, options));
      } else if (id == kTheoremVRecurrence) {
        reports.push_back(v_recurrence_check(k_max, w));
      } else if (id == kTheoremVMod8) {
        reports.push_back(v_mod8_check(k_max, w));
      } else if (id == kTheoremWMod4) {
        reports.push_back(w_mod4_check(limit, w, options));
      }
    } catch (const HypothesisViolation& e) {
      const auto n = static_cast<std::size_t>(e.index());
      CongruenceReport r{id, 1, limit, {}, ReportStatus::hypothesis_violated, e.what()};
      r.mismatches.push_back({e.index(), -1, static_cast<std::int64_t>(w[n])});
      reports.push_back(std::move(r));
    }
  }
  return reports;
}

std::vector<CongruenceReport> theorem_sweep(std::int64_t limit, const std::vector<std::string>& theorems,
                                            const SweepOptions& options) {
  if (limit < 16) throw std::invalid_argument("theorem_sweep needs limit >= 16");
  return theorem_sweep(w_mod8(limit), theorems, options);
}

std::int64_t ResidueGroup::size() const {
  std::int64_t total = 0;
  for (auto c : residue_counts) total += c;
  return total;
}

bool ResidueGroup::constant() const {
  return std::count_if(residue_counts.begin(), residue_counts.end(), [](auto c) { return c > 0; }) == 1;
}

namespace {

ExplorationReport explore(const ResidueTable& table, std::string sequence, std::optional<int> param) {
  const auto m = *table.modulus;
  ExplorationReport report;
  report.sequence = std::move(sequence);
  report.param = param;
  report.modulus = m;
  report.limit = static_cast<std::int64_t>(table.limit());

  std::map<std::tuple<int, int, int>, ResidueGroup> groups;
  for (std::int64_t n = 1; n <= report.limit; ++n) {
    const auto residue = table[static_cast<std::size_t>(n)];
    report.residues.push_back(residue);
    const auto e = BinaryExpansion::of(static_cast<std::uint64_t>(n));
    if (e.is_power_of_two()) {
      report.power_residues.push_back(residue);
      continue;
    }
    const auto key = std::make_tuple(e.lowest() % 8, e.exponents[1] - e.exponents[0], e.highest() % 2);
    auto& g = groups[key];
    if (g.residue_counts.empty()) {
      g.lowest_bit_mod8 = std::get<0>(key);
      g.gap = std::get<1>(key);
      g.highest_bit_parity = std::get<2>(key);
      g.residue_counts.assign(m, 0);
    }
    g.residue_counts[residue] += 1;
  }
  for (auto& [key, g] : groups) report.groups.push_back(std::move(g));
  return report;
}

}  // namespace

ExplorationReport explore_w_mod8(std::int64_t limit) {
  if (limit < 16) throw std::invalid_argument("explore_w_mod8 needs limit >= 16");
  return explore(w_table(static_cast<std::size_t>(limit), 8), "w", std::nullopt);
}

ExplorationReport explore_w_r(int r, std::int64_t limit, std::uint64_t modulus) {
  if (limit < 1) throw std::invalid_argument("explore_w_r needs limit >= 1");
  if (r == 1) return explore(w_table(static_cast<std::size_t>(limit), modulus), "w", std::nullopt);
  return explore(w_r_table(r, static_cast<std::size_t>(limit), modulus), "w_r", r);
}

nlohmann::json to_json(const CongruenceReport& report) {
  nlohmann::json mismatches = nlohmann::json::array();
  for (const auto& m : report.mismatches) {
    mismatches.push_back({{"n", m.n}, {"predicted", m.predicted}, {"computed", m.computed}});
  }
  nlohmann::json j{{"schema", "uppart/1"},
                   {"theorem", report.theorem},
                   {"range", {report.first, report.last}},
                   {"mismatches", std::move(mismatches)},
                   {"status", status_name(report.status)}};
  if (!report.detail.empty()) j["detail"] = report.detail;
  return j;
}

nlohmann::json to_json(const ExplorationReport& report) {
  nlohmann::json groups = nlohmann::json::array();
  std::size_t constant_groups = 0;
  for (const auto& g : report.groups) {
    nlohmann::json counts = nlohmann::json::object();
    for (std::size_t r = 0; r < g.residue_counts.size(); ++r) {
      if (g.residue_counts[r] > 0) counts[std::to_string(r)] = g.residue_counts[r];
    }
    if (g.constant()) ++constant_groups;
    groups.push_back({{"lowest_bit_mod8", g.lowest_bit_mod8},
                      {"gap", g.gap},
                      {"highest_bit_parity", g.highest_bit_parity},
                      {"size", g.size()},
                      {"residue_counts", std::move(counts)},
                      {"constant", g.constant()}});
  }
  nlohmann::json powers = nlohmann::json::array();
  for (std::size_t k = 0; k < report.power_residues.size(); ++k) {
    nlohmann::json row{{"k", k}, {"residue", report.power_residues[k]}};
    if (report.sequence == "w" && report.modulus == 8 && k >= 1) {
      row["predicted_v_mod8"] = predict_v_mod8(static_cast<std::int64_t>(k));
    }
    powers.push_back(std::move(row));
  }
  nlohmann::json j{{"schema", "uppart/1"},
                   {"label", "CONJECTURAL"},
                   {"note", "observed residue patterns on the scanned range only; nothing here is asserted beyond it"},
                   {"sequence", report.sequence},
                   {"modulus", report.modulus},
                   {"limit", report.limit},
                   {"residues", report.residues},
                   {"powers_of_two", std::move(powers)},
                   {"groups", std::move(groups)},
                   {"constant_groups", constant_groups}};
  if (report.param) j["r"] = *report.param;
  return j;
}

}  // namespace uppart
