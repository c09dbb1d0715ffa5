#include "uppart/bijections.hpp"

#include <stdexcept>

#include "uppart/classification.hpp"

namespace uppart {

RbPartition RbPartition::from_mults(std::vector<int> mults) {
  while (!mults.empty() && mults.back() == 0) mults.pop_back();
  for (std::size_t j = 0; j < mults.size(); ++j) {
    if (mults[j] < 0) throw std::invalid_argument("rb multiplicities must be nonnegative");
    if (mults[j] == 0) {
      throw std::invalid_argument("not restricted: part 2^" + std::to_string(j + 1) +
                                  " present without 2^" + std::to_string(j));
    }
  }
  return RbPartition(std::move(mults));
}

std::int64_t RbPartition::n() const {
  std::int64_t total = 0;
  for (std::size_t j = 0; j < mults_.size(); ++j) total += std::int64_t{mults_[j]} << j;
  return total;
}

std::vector<std::int64_t> RbPartition::parts() const {
  std::vector<std::int64_t> out;
  for (std::size_t j = mults_.size(); j-- > 0;) {
    out.insert(out.end(), static_cast<std::size_t>(mults_[j]), std::int64_t{1} << j);
  }
  return out;
}

std::string RbPartition::to_string() const {
  if (mults_.empty()) return "(0)";
  std::string out = "(";
  bool first = true;
  for (auto part : parts()) {
    if (!first) out += ',';
    out += std::to_string(part);
    first = false;
  }
  return out + ")";
}

RbPartition sd_to_rb(const Partition& mu) {
  if (!is_sd(mu).is_sd) throw std::invalid_argument(mu.to_string() + " is not strongly decreasing");
  std::vector<int> mults(mu.length());
  int tail = 0;
  for (std::size_t i = mu.length(); i-- > 0;) {
    mults[i] = mu[i] - tail;
    tail += mu[i];
  }
  return RbPartition::from_mults(std::move(mults));
}

Partition rb_to_sd(const RbPartition& rb) {
  const auto& d = rb.mults();
  std::vector<int> parts(d.size());
  int tail = 0;
  for (std::size_t i = d.size(); i-- > 0;) {
    parts[i] = d[i] + tail;
    tail += parts[i];
  }
  return partition_from_sorted(std::move(parts));
}

Partition collapse_to_sdt(const Partition& mu, const Partition& rho) {
  if (rho.empty()) throw std::invalid_argument("collapse_to_sdt needs a nonempty core");
  if (!is_sd_extension_of(mu, rho)) {
    throw std::invalid_argument(mu.to_string() + " is not an sd-extension of " + rho.to_string());
  }
  std::vector<int> parts(mu.parts().begin(), mu.parts().end() - static_cast<std::ptrdiff_t>(rho.length()));
  parts.push_back(rho.n());
  return partition_from_sorted(std::move(parts));
}

Partition expand_from_sdt(const Partition& mu, const Partition& rho) {
  if (rho.empty()) throw std::invalid_argument("expand_from_sdt needs a nonempty core");
  if (!is_sd(mu).is_sd || mu.empty()) throw std::invalid_argument(mu.to_string() + " is not an sd-partition");
  if (mu.smallest() != rho.n()) {
    throw std::invalid_argument("smallest part of " + mu.to_string() + " is not |" + rho.to_string() + "|");
  }
  std::vector<int> parts(mu.parts().begin(), mu.parts().end() - 1);
  parts.insert(parts.end(), rho.parts().begin(), rho.parts().end());
  return partition_from_sorted(std::move(parts));
}

Partition sdt_to_sd1(const Partition& mu) {
  if (!is_sd(mu).is_sd || mu.smallest() < 3) {
    throw std::invalid_argument(mu.to_string() + " is not an sd_t-partition with t >= 3");
  }
  std::vector<int> parts(mu.parts().begin(), mu.parts().end());
  parts.back() -= 1;
  parts.push_back(1);
  return partition_from_sorted(std::move(parts));
}

Partition sd1_to_sdt(const Partition& mu) {
  if (!is_sd(mu).is_sd || mu.smallest() != 1 || mu.length() < 2) {
    throw std::invalid_argument(mu.to_string() + " is not an sd_1-partition with two or more parts");
  }
  std::vector<int> parts(mu.parts().begin(), mu.parts().end() - 1);
  parts.back() += 1;
  return partition_from_sorted(std::move(parts));
}

RbPartition rb_parity_down(const RbPartition& rb) {
  if (rb.n() % 2 != 0 || rb.empty()) throw std::invalid_argument("rb_parity_down needs even n >= 2");
  auto mults = rb.mults();
  mults[0] -= 1;
  return RbPartition::from_mults(std::move(mults));
}

RbPartition rb_parity_up(const RbPartition& rb) {
  if (rb.n() % 2 != 1) throw std::invalid_argument("rb_parity_up needs odd n");
  auto mults = rb.mults();
  mults[0] += 1;
  return RbPartition::from_mults(std::move(mults));
}

OddSplit rb_odd_split(const RbPartition& rb) {
  if (rb.n() % 2 != 1) throw std::invalid_argument("rb_odd_split needs odd n");
  auto mults = rb.mults();
  mults[0] -= 1;
  if (mults[0] > 0) return {OddBranch::even, RbPartition::from_mults(std::move(mults))};
  mults.erase(mults.begin());
  return {OddBranch::half, RbPartition::from_mults(std::move(mults))};
}

RbPartition rb_odd_merge(const OddSplit& split) {
  auto mults = split.rb.mults();
  if (split.branch == OddBranch::even) {
    if (split.rb.n() % 2 != 0 || split.rb.empty()) {
      throw std::invalid_argument("even branch must hold an rb-partition of a positive even number");
    }
    mults[0] += 1;
  } else {
    mults.insert(mults.begin(), 1);
  }
  return RbPartition::from_mults(std::move(mults));
}

}  // namespace uppart
