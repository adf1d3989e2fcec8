#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "shiftlab/point.hpp"

namespace shiftlab::scan {

// Symbol-window kernels behind the omega ladders and attracting scans.
// Each kernel has a serial reference and an OpenMP version; the unsuffixed
// entry point dispatches on input size.  tools/bench_scan compares them.

std::vector<Symbol> materialize(const Point& x, std::uint64_t from,
                                std::uint64_t to);

std::set<Word> factor_set_serial(std::span<const Symbol> buf, std::uint32_t n);
std::set<Word> factor_set_parallel(std::span<const Symbol> buf, std::uint32_t n);
std::set<Word> factor_set(std::span<const Symbol> buf, std::uint32_t n);

// Smallest window start i with buf[i, i+n) not in `ok`, or absent.
std::optional<std::uint64_t> first_window_not_in_serial(
    std::span<const Symbol> buf, std::uint32_t n, const std::set<Word>& ok);
std::optional<std::uint64_t> first_window_not_in_parallel(
    std::span<const Symbol> buf, std::uint32_t n, const std::set<Word>& ok);
std::optional<std::uint64_t> first_window_not_in(std::span<const Symbol> buf,
                                                 std::uint32_t n,
                                                 const std::set<Word>& ok);

}  // namespace shiftlab::scan
