// Benchmark: serial reference vs OpenMP scan kernels on the window workloads
// the omega ladders and attracting checks run.  Usage: bench_scan [symbols].

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <span>

#include "shiftlab/omega.hpp"
#include "shiftlab/point.hpp"
#include "shiftlab/scan.hpp"
#include "shiftlab/transitivity.hpp"

using namespace shiftlab;

namespace {

template <typename F>
double time_best_of(F&& fn, int reps = 3) {
  double best = 1e100;
  for (int r = 0; r < reps; ++r) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    const auto stop = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double>(stop - start).count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  const std::uint64_t n = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : (1ull << 22);

  std::printf("window-scan benchmark over %llu symbols of the remark1 scheme\n",
              static_cast<unsigned long long>(n));
  const Point x = Point::remark1();
  const std::vector<Symbol> buf = scan::materialize(x, n, 2 * n);
  const std::span<const Symbol> view(buf);

  {
    std::set<Word> a, b;
    const double ts = time_best_of([&] { a = scan::factor_set_serial(view, 4); });
    const double tp = time_best_of([&] { b = scan::factor_set_parallel(view, 4); });
    std::printf("factor-set depth 4       serial %8.1f ms   parallel %8.1f ms   x%.2f   (%zu words, %s)\n",
                ts * 1e3, tp * 1e3, ts / tp, a.size(), a == b ? "equal" : "MISMATCH");
  }
  {
    // Violation-free membership set: both kernels scan the whole window.
    const std::set<Word> ok = scan::factor_set_parallel(view, 7);
    std::optional<std::uint64_t> a, b;
    const double ts =
        time_best_of([&] { a = scan::first_window_not_in_serial(view, 7, ok); });
    const double tp =
        time_best_of([&] { b = scan::first_window_not_in_parallel(view, 7, ok); });
    std::printf("attracting-style scan    serial %8.1f ms   parallel %8.1f ms   x%.2f   (%s)\n",
                ts * 1e3, tp * 1e3, ts / tp, a == b ? "equal" : "MISMATCH");
  }
  return 0;
}
