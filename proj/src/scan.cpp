#include "shiftlab/scan.hpp"

#include <algorithm>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace shiftlab::scan {

namespace {
// Below this many windows the parallel versions just forward to the serial
// reference; spawning threads costs more than the scan.
constexpr std::size_t kParallelCutoff = 1 << 15;
}  // namespace

std::vector<Symbol> materialize(const Point& x, std::uint64_t from, std::uint64_t to) {
  std::vector<Symbol> buf;
  if (to <= from) return buf;
  buf.reserve(static_cast<std::size_t>(to - from));
  for (std::uint64_t i = from; i < to; ++i) buf.push_back(x.at(i));
  return buf;
}

std::set<Word> factor_set_serial(std::span<const Symbol> buf, std::uint32_t n) {
  std::set<Word> out;
  if (n == 0 || buf.size() < n) return out;
  Word w(n, 0);
  for (std::size_t i = 0; i + n <= buf.size(); ++i) {
    std::copy(buf.begin() + static_cast<std::ptrdiff_t>(i),
              buf.begin() + static_cast<std::ptrdiff_t>(i + n), w.begin());
    out.insert(w);
  }
  return out;
}

std::set<Word> factor_set_parallel(std::span<const Symbol> buf, std::uint32_t n) {
#ifdef _OPENMP
  if (n == 0 || buf.size() < n) return {};
  const std::size_t total = buf.size() - n + 1;
  std::vector<std::set<Word>> partial;
#pragma omp parallel
  {
#pragma omp single
    partial.resize(static_cast<std::size_t>(omp_get_num_threads()));
    std::set<Word>& mine = partial[static_cast<std::size_t>(omp_get_thread_num())];
    Word w(n, 0);
#pragma omp for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(total); ++i) {
      std::copy(buf.begin() + i, buf.begin() + i + n, w.begin());
      mine.insert(w);
    }
  }
  std::set<Word> out;
  for (auto& p : partial) out.merge(p);
  return out;
#else
  return factor_set_serial(buf, n);
#endif
}

std::set<Word> factor_set(std::span<const Symbol> buf, std::uint32_t n) {
  if (buf.size() >= kParallelCutoff) return factor_set_parallel(buf, n);
  return factor_set_serial(buf, n);
}

std::optional<std::uint64_t> first_window_not_in_serial(std::span<const Symbol> buf,
                                                        std::uint32_t n,
                                                        const std::set<Word>& ok) {
  if (n == 0 || buf.size() < n) return std::nullopt;
  Word w(n, 0);
  for (std::size_t i = 0; i + n <= buf.size(); ++i) {
    std::copy(buf.begin() + static_cast<std::ptrdiff_t>(i),
              buf.begin() + static_cast<std::ptrdiff_t>(i + n), w.begin());
    if (!ok.count(w)) return i;
  }
  return std::nullopt;
}

std::optional<std::uint64_t> first_window_not_in_parallel(std::span<const Symbol> buf,
                                                          std::uint32_t n,
                                                          const std::set<Word>& ok) {
#ifdef _OPENMP
  if (n == 0 || buf.size() < n) return std::nullopt;
  const std::ptrdiff_t total = static_cast<std::ptrdiff_t>(buf.size() - n + 1);
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
#pragma omp parallel
  {
    Word w(n, 0);
    std::uint64_t local = std::numeric_limits<std::uint64_t>::max();
#pragma omp for schedule(static)
    for (std::ptrdiff_t i = 0; i < total; ++i) {
      if (static_cast<std::uint64_t>(i) >= local) continue;
      std::copy(buf.begin() + i, buf.begin() + i + n, w.begin());
      if (!ok.count(w)) local = static_cast<std::uint64_t>(i);
    }
#pragma omp critical
    best = std::min(best, local);
  }
  if (best == std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  return best;
#else
  return first_window_not_in_serial(buf, n, ok);
#endif
}

std::optional<std::uint64_t> first_window_not_in(std::span<const Symbol> buf,
                                                 std::uint32_t n,
                                                 const std::set<Word>& ok) {
  if (buf.size() >= kParallelCutoff) return first_window_not_in_parallel(buf, n, ok);
  return first_window_not_in_serial(buf, n, ok);
}

}  // namespace shiftlab::scan
