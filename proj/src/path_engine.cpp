#include "uppart/path_engine.hpp"

#include <mutex>
#include <numeric>
#include <stdexcept>

#include <boost/container_hash/hash.hpp>

namespace uppart {

int PathTrace::sign() const {
  int total = std::accumulate(legs.begin(), legs.end(), 0);
  return total % 2 == 0 ? 1 : -1;
}

std::size_t PathEngine::KeyHash::operator()(const Key& k) const noexcept {
  std::size_t seed = boost::hash_range(k.lambda.begin(), k.lambda.end());
  boost::hash_combine(seed, k.mu_tail.size());
  boost::hash_range(seed, k.mu_tail.begin(), k.mu_tail.end());
  return seed;
}

PathEngine::Tally PathEngine::tally(const Partition& lambda, std::span<const int> mu_tail) {
  if (mu_tail.empty()) {
    return lambda.empty() ? Tally{1, 1} : Tally{0, 0};
  }

  Key key;
  if (memoize_) {
    key = Key{{lambda.parts().begin(), lambda.parts().end()}, {mu_tail.begin(), mu_tail.end()}};
    std::shared_lock lock(mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }

  Tally result{0, 0};
  for (const auto& removal : remove_hooks(lambda, mu_tail.front())) {
    Tally sub = tally(removal.result, mu_tail.subspan(1));
    result.paths += sub.paths;
    if (removal.leg_length % 2 == 0) {
      result.signed_sum += sub.signed_sum;
    } else {
      result.signed_sum -= sub.signed_sum;
    }
  }

  if (memoize_) {
    std::unique_lock lock(mutex_);
    cache_.try_emplace(std::move(key), result);
  }
  return result;
}

PathCount PathEngine::count_paths(const Partition& lambda, const Partition& mu) {
  if (lambda.n() != mu.n()) return {0, lambda, mu};
  return {tally(lambda, mu.parts()).paths, lambda, mu};
}

CharacterValue PathEngine::character_value(const Partition& lambda, const Partition& mu) {
  if (lambda.n() != mu.n()) return {0, lambda, mu};
  return {tally(lambda, mu.parts()).signed_sum, lambda, mu};
}

bool PathEngine::is_unique_path_for(const Partition& lambda, const Partition& mu) {
  return count_paths(lambda, mu).count <= 1;
}

PathListing PathEngine::enumerate_paths(const Partition& lambda, const Partition& mu,
                                        std::size_t limit) const {
  if (limit < 1) throw std::invalid_argument("enumerate_paths needs limit >= 1");
  PathListing listing;
  if (lambda.n() != mu.n()) return listing;

  PathTrace current;
  current.shapes.push_back(lambda);
  auto walk = [&](auto&& self, std::size_t depth) -> void {
    if (listing.truncated) return;
    if (depth == mu.length()) {
      if (!current.shapes.back().empty()) return;
      if (listing.traces.size() == limit) {
        listing.truncated = true;
        return;
      }
      listing.traces.push_back(current);
      return;
    }
    for (auto& removal : remove_hooks(current.shapes.back(), mu[depth])) {
      current.shapes.push_back(std::move(removal.result));
      current.legs.push_back(removal.leg_length);
      self(self, depth + 1);
      current.shapes.pop_back();
      current.legs.pop_back();
    }
  };
  walk(walk, 0);
  return listing;
}

std::size_t PathEngine::cache_size() const {
  std::shared_lock lock(mutex_);
  return cache_.size();
}

void PathEngine::clear_cache() {
  std::unique_lock lock(mutex_);
  cache_.clear();
}

PathEngine& PathEngine::shared() {
  static PathEngine engine;
  return engine;
}

PathCount count_paths(const Partition& lambda, const Partition& mu) {
  return PathEngine::shared().count_paths(lambda, mu);
}

CharacterValue character_value(const Partition& lambda, const Partition& mu) {
  return PathEngine::shared().character_value(lambda, mu);
}

bool is_unique_path_for(const Partition& lambda, const Partition& mu) {
  return PathEngine::shared().is_unique_path_for(lambda, mu);
}

PathListing enumerate_paths(const Partition& lambda, const Partition& mu, std::size_t limit) {
  return PathEngine::shared().enumerate_paths(lambda, mu, limit);
}

}  // namespace uppart
