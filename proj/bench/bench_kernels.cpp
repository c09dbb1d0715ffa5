// Wall-clock comparison of the serial reference kernels against the OpenMP
// ones. Each run gets a fresh PathEngine so memo state does not carry over.
//
//   bench_kernels [class_n] [sweep_log2]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "uppart/classification.hpp"
#include "uppart/congruence.hpp"
#include "uppart/counting.hpp"
#include "uppart/kernels.hpp"

using namespace uppart;

namespace {

template <class F>
double seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void row(const std::string& name, double s, double p, bool same) {
  std::printf("%-34s %10.4f %10.4f %8.2fx  %s\n", name.c_str(), s, p, p > 0 ? s / p : 0.0,
              same ? "same" : "DIFFERENT");
}

}  // namespace

int main(int argc, char** argv) {
  const int class_n = argc > 1 ? std::atoi(argv[1]) : 24;
  const int sweep_log2 = argc > 2 ? std::atoi(argv[2]) : 22;
  if (class_n < 1 || sweep_log2 < 4 || sweep_log2 > 26) {
    std::fprintf(stderr, "usage: bench_kernels [class_n >= 1] [sweep_log2 in 4..26]\n");
    return 2;
  }
  std::printf("workers: %d\n", worker_count());
  std::printf("%-34s %10s %10s %9s\n", "kernel", "serial s", "omp s", "speedup");
  bool all_same = true;

  {
    std::vector<Partition> s, p;
    const double ts = seconds([&] {
      PathEngine engine;
      s = serial::classification_mismatches(class_n, engine);
    });
    const double tp = seconds([&] {
      PathEngine engine;
      p = parallel::classification_mismatches(class_n, engine);
    });
    all_same &= s == p;
    row("classification_mismatches n=" + std::to_string(class_n), ts, tp, s == p);
  }

  {
    // the (1^n) column has no early exit and visits every shape
    const int n = class_n;
    const auto shapes = partition_list(n);
    const auto mu = make_partition(std::vector<int>(static_cast<std::size_t>(n), 1));
    BigInt s, p;
    const double ts = seconds([&] {
      PathEngine engine;
      s = serial::max_abs_character(shapes, mu, engine);
    });
    const double tp = seconds([&] {
      PathEngine engine;
      p = parallel::max_abs_character(shapes, mu, engine);
    });
    all_same &= s == p;
    row("max_abs_character (1^" + std::to_string(n) + ")", ts, tp, s == p);

    std::size_t si = 0, pi = 0;
    const auto up = make_partition({n});
    const double fs = seconds([&] {
      PathEngine engine;
      si = serial::first_multi_path_shape(shapes, up, engine);
    });
    const double fp = seconds([&] {
      PathEngine engine;
      pi = parallel::first_multi_path_shape(shapes, up, engine);
    });
    all_same &= si == pi;
    row("first_multi_path_shape (" + std::to_string(n) + ")", fs, fp, si == pi);
  }

  {
    const std::int64_t limit = std::int64_t{1} << sweep_log2;
    const auto w = w_table(limit, 8);
    std::vector<CongruenceReport> s, p;
    const double ts = seconds([&] { s = theorem_sweep(w, {}, {.parallel = false}); });
    const double tp = seconds([&] { p = theorem_sweep(w, {}, {.parallel = true}); });
    bool same = s.size() == p.size();
    for (std::size_t i = 0; same && i < s.size(); ++i) {
      same = s[i].status == p[i].status && s[i].mismatches == p[i].mismatches;
    }
    all_same &= same;
    row("theorem_sweep 2^" + std::to_string(sweep_log2), ts, tp, same);
  }

  return all_same ? 0 : 1;
}
