#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "shiftlab/dyadic.hpp"
#include "shiftlab/word.hpp"

namespace shiftlab {

class Point;
class PointStream;

// ============================================================================
// Points of the shift space.
//
// Two representations:
//
//   * Eventually periodic, pre . per^inf, stored in normal form (minimal
//     period, then minimal preperiod).  Normal forms make equality syntactic
//     and keep every metric query exact.
//
//   * Generator schemes: closed descriptors with a total symbol_at.  These
//     cover the two counterexample points, block-interleaving realization
//     outputs, finite heads spliced onto another point, and the diagonal of a
//     point stream.  Descriptors are data, not callbacks, so reports can
//     serialize and replay them.
// ============================================================================

enum class SchemeKind {
  remark1,     // 0^1 2 1^2 3 0^3 4 1^4 5 ...
  remark2,     // 0 1 2 0^2 1^2 3 0^3 1^3 4 ...
  interleave,  // b_0 s_0 b_1 s_1 ... : growing prefixes of a finite point set
  concat,      // finite head, then a scheme-backed tail
  diagonal,    // i -> stream(offset+i)[0]
  shifted,     // i -> base(by+i)
};

class SchemeBase {
 public:
  virtual ~SchemeBase() = default;
  virtual Symbol at(std::uint64_t i) const = 0;
  virtual SchemeKind kind() const = 0;
};

class Point {
 public:
  // pre . per^inf, normalized.  Throws SpecError on empty period.
  static Point eventually_periodic(Word pre, Word per);

  static Point remark1();
  static Point remark2();

  // head followed by tail.  Folds to an eventually periodic point whenever
  // tail is one.
  static Point concat(Word head, Point tail);

  // Growing-prefix interleaving with strictly increasing separators:
  // blocks cycle over `points` with prefix length 1,1,...,2,2,...,3,...;
  // the i-th separator is separator_start + i.
  static Point interleave(std::vector<Point> points, Symbol separator_start);

  static Point from_scheme(std::shared_ptr<const SchemeBase> scheme);

  bool is_eventually_periodic() const { return std::holds_alternative<Ep>(rep_); }

  // Normal-form accessors; valid only for eventually periodic points.
  const Word& preperiod() const;
  const Word& period() const;

  // i-th symbol; total for every representation.
  Symbol at(std::uint64_t i) const;

  // The point i -> at(i+n).
  Point shifted(std::uint64_t n) const;

  const SchemeBase& scheme() const;
  std::shared_ptr<const SchemeBase> scheme_ptr() const;

  // Every symbol occurring in an eventually periodic point.
  std::set<Symbol> ep_symbols() const;

  // Smallest horizon past which factor scans of an eventually periodic point
  // see nothing new: |pre| + 2|per| + window.
  std::uint64_t ep_scan_bound(std::uint64_t window) const;

 private:
  struct Ep {
    Word pre;
    Word per;
  };
  Point(Ep ep) : rep_(std::move(ep)) {}
  Point(std::shared_ptr<const SchemeBase> s) : rep_(std::move(s)) {}
  std::variant<Ep, std::shared_ptr<const SchemeBase>> rep_;
};

// Exact equality of eventually periodic points via normal forms.  Throws
// PreconditionError when either argument is scheme-backed.
bool ep_equal(const Point& x, const Point& y);

// Strict ordering on eventually periodic normal forms (for canonical sets).
bool ep_less(const Point& x, const Point& y);

// --- metric --------------------------------------------------------------

struct LcpResult {
  enum class Kind { finite, infinite, at_least_horizon };
  Kind kind = Kind::finite;
  std::uint64_t value = 0;  // finite: exact lcp; at_least_horizon: the horizon

  bool at_least(std::uint64_t m) const {
    return kind != Kind::finite || value >= m;
  }
};

// Longest common prefix length.  Exact for pairs of eventually periodic
// points (infinite iff equal); otherwise exact when below the horizon and the
// ">= horizon" sentinel when not.
LcpResult lcp(const Point& x, const Point& y, std::uint64_t horizon);

struct DistanceResult {
  Dyadic value;
  // When false, the reported value 2^(-horizon) is only an upper bound
  // certificate: the true distance is <= value (lcp hit the horizon).
  bool exact = true;
};

// d(x,y) = 2^(-lcp(x,y)), with 2^(-infinity) = 0.
DistanceResult distance(const Point& x, const Point& y, std::uint64_t horizon);

// True iff x and y agree on their first len symbols (d <= 2^(-len)).
bool agree_on_prefix(const Point& x, const Point& y, std::uint64_t len);

// x[from..to) as a word.
Word point_slice(const Point& x, std::uint64_t from, std::uint64_t to);

// --- literals ------------------------------------------------------------

// "PRE|PER" with the word codec on both sides ("|0" = 0^inf), or a scheme
// literal "remark1" / "remark2".  Scheme-backed points created by
// constructions have no short literal; format_point falls back to a JSON
// object rendered by the json_io module.
std::string format_point(const Point& x);
std::optional<Point> parse_point(std::string_view text);

// Separator-interleaving scheme internals (exposed for serialization).
class InterleaveScheme final : public SchemeBase {
 public:
  InterleaveScheme(std::vector<Point> points, Symbol separator_start);
  Symbol at(std::uint64_t i) const override;
  SchemeKind kind() const override { return SchemeKind::interleave; }
  const std::vector<Point>& points() const { return points_; }
  Symbol separator_start() const { return sep_start_; }

 private:
  std::vector<Point> points_;
  Symbol sep_start_;
};

class ConcatScheme final : public SchemeBase {
 public:
  ConcatScheme(Word head, Point tail);
  Symbol at(std::uint64_t i) const override;
  SchemeKind kind() const override { return SchemeKind::concat; }
  const Word& head() const { return head_; }
  const Point& tail() const { return tail_; }

 private:
  Word head_;
  Point tail_;  // scheme-backed by construction
};

class ShiftedScheme final : public SchemeBase {
 public:
  ShiftedScheme(Point base, std::uint64_t by);
  Symbol at(std::uint64_t i) const override;
  SchemeKind kind() const override { return SchemeKind::shifted; }
  const Point& base() const { return base_; }
  std::uint64_t by() const { return by_; }

 private:
  Point base_;
  std::uint64_t by_;
};

class DiagonalScheme final : public SchemeBase {
 public:
  DiagonalScheme(std::shared_ptr<const PointStream> stream, std::uint64_t offset);
  Symbol at(std::uint64_t i) const override;
  SchemeKind kind() const override { return SchemeKind::diagonal; }
  const std::shared_ptr<const PointStream>& stream() const { return stream_; }
  std::uint64_t offset() const { return offset_; }

 private:
  std::shared_ptr<const PointStream> stream_;
  std::uint64_t offset_;
};

}  // namespace shiftlab
