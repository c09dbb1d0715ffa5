#include "uppart/kernels.hpp"

#include <boost/multiprecision/number.hpp>

#include "uppart/classification.hpp"

namespace uppart {

namespace serial {

std::size_t first_multi_path_shape(std::span<const Partition> shapes, const Partition& mu, PathEngine& engine) {
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    if (engine.count_paths(shapes[i], mu).count > 1) return i;
  }
  return shapes.size();
}

BigInt max_abs_character(std::span<const Partition> shapes, const Partition& mu, PathEngine& engine) {
  BigInt worst = 0;
  for (const auto& lambda : shapes) {
    BigInt v = abs(engine.character_value(lambda, mu).value);
    if (v > worst) worst = v;
  }
  return worst;
}

std::vector<Partition> classification_mismatches(int n, PathEngine& engine) {
  const auto shapes = partition_list(n);
  std::vector<Partition> out;
  for (const auto& mu : shapes) {
    bool brute = first_multi_path_shape(shapes, mu, engine) == shapes.size();
    if (brute != is_up_theorem(mu)) out.push_back(mu);
  }
  return out;
}

}  // namespace serial

namespace parallel {

std::size_t first_multi_path_shape(std::span<const Partition> shapes, const Partition& mu, PathEngine& engine) {
  const auto count = static_cast<std::int64_t>(shapes.size());
  std::int64_t first = count;
#pragma omp parallel for schedule(dynamic, 8) reduction(min : first)
  for (std::int64_t i = 0; i < count; ++i) {
    if (i < first && engine.count_paths(shapes[static_cast<std::size_t>(i)], mu).count > 1) first = i;
  }
  return static_cast<std::size_t>(first);
}

BigInt max_abs_character(std::span<const Partition> shapes, const Partition& mu, PathEngine& engine) {
  BigInt worst = 0;
#pragma omp parallel
  {
    BigInt local = 0;
#pragma omp for schedule(dynamic, 8) nowait
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(shapes.size()); ++i) {
      BigInt v = abs(engine.character_value(shapes[static_cast<std::size_t>(i)], mu).value);
      if (v > local) local = v;
    }
#pragma omp critical(uppart_max_abs_merge)
    if (local > worst) worst = local;
  }
  return worst;
}

std::vector<Partition> classification_mismatches(int n, PathEngine& engine) {
  const auto shapes = partition_list(n);
  return parallel::scan(0, static_cast<std::int64_t>(shapes.size()) - 1,
                        [&](std::int64_t i) -> std::optional<Partition> {
                          const auto& mu = shapes[static_cast<std::size_t>(i)];
                          bool brute = serial::first_multi_path_shape(shapes, mu, engine) == shapes.size();
                          if (brute != is_up_theorem(mu)) return mu;
                          return std::nullopt;
                        });
}

}  // namespace parallel

int worker_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace uppart
