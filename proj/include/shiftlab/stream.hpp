#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "shiftlab/point.hpp"

namespace shiftlab {

// ============================================================================
// Index-addressable streams of points.
//
// Streams back sequence omega-limit queries and asymptotic pseudo-orbits.
// Every stream is replayable: at(i) is a pure function of i (implementations
// may memoize internally, guarded for concurrent use), never a consume-once
// source.
// ============================================================================

enum class StreamKind { orbit, constant, spliced, ict_chains, subsample };

class PointStream {
 public:
  virtual ~PointStream() = default;
  virtual Point at(std::uint64_t i) const = 0;
  virtual StreamKind kind() const = 0;
};

// A stream whose step defects vanish: there is a monotone rate N(m) with
// lcp(shift(x_i), x_{i+1}) >= m for all i >= N(m).
class AsymptoticPseudoOrbit : public PointStream {
 public:
  virtual std::uint64_t rate(std::uint32_t m) const = 0;
};

// The orbit x, shift(x), shift^2(x), ...  An exact pseudo-orbit, rate 0.
class OrbitStream final : public AsymptoticPseudoOrbit {
 public:
  explicit OrbitStream(Point base) : base_(std::move(base)) {}
  Point at(std::uint64_t i) const override { return base_.shifted(i); }
  std::uint64_t rate(std::uint32_t) const override { return 0; }
  StreamKind kind() const override { return StreamKind::orbit; }
  const Point& base() const { return base_; }

 private:
  Point base_;
};

// x, x, x, ...  Only a pseudo-orbit when x is a fixed point of the shift;
// the constructor enforces that for eventually periodic x.
class ConstantStream final : public AsymptoticPseudoOrbit {
 public:
  explicit ConstantStream(Point x);
  Point at(std::uint64_t) const override { return x_; }
  std::uint64_t rate(std::uint32_t) const override { return 0; }
  StreamKind kind() const override { return StreamKind::constant; }
  const Point& base() const { return x_; }

 private:
  Point x_;
};

// Finite head of eventually periodic points, then the exact orbit of `tail`.
// The rate is computed from the exact defects along the head.
class SplicedOrbitStream final : public AsymptoticPseudoOrbit {
 public:
  SplicedOrbitStream(std::vector<Point> head, Point tail);
  Point at(std::uint64_t i) const override;
  std::uint64_t rate(std::uint32_t m) const override;
  StreamKind kind() const override { return StreamKind::spliced; }
  const std::vector<Point>& head() const { return head_; }
  const Point& tail() const { return tail_; }

 private:
  std::vector<Point> head_;
  Point tail_;
  // lcp of each consecutive link in the head region; kAgree for defect 0.
  static constexpr std::uint64_t kAgree = ~std::uint64_t{0};
  std::vector<std::uint64_t> link_lcp_;
};

// i -> base(stride*i + offset); a strictly increasing reindexing, used by the
// subsequence-monotonicity checks.  Not an asymptotic pseudo-orbit in general.
class SubsampleStream final : public PointStream {
 public:
  SubsampleStream(std::shared_ptr<const PointStream> base, std::uint64_t stride,
                  std::uint64_t offset);
  Point at(std::uint64_t i) const override;
  StreamKind kind() const override { return StreamKind::subsample; }
  const std::shared_ptr<const PointStream>& base() const { return base_; }
  std::uint64_t stride() const { return stride_; }
  std::uint64_t offset() const { return offset_; }

 private:
  std::shared_ptr<const PointStream> base_;
  std::uint64_t stride_;
  std::uint64_t offset_;
};

// The point i -> stream(offset+i)[0].
Point diagonal_point(std::shared_ptr<const PointStream> stream,
                     std::uint64_t offset);

}  // namespace shiftlab
