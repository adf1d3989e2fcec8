#include "shiftlab/stream.hpp"

#include "shiftlab/errors.hpp"

namespace shiftlab {

ConstantStream::ConstantStream(Point x) : x_(std::move(x)) {
  if (x_.is_eventually_periodic()) {
    if (!ep_equal(x_.shifted(1), x_))
      throw PreconditionError("constant stream of a non-fixed point is not a pseudo-orbit");
  }
}

SplicedOrbitStream::SplicedOrbitStream(std::vector<Point> head, Point tail)
    : head_(std::move(head)), tail_(std::move(tail)) {
  for (const Point& p : head_)
    if (!p.is_eventually_periodic())
      throw PreconditionError("spliced stream head must be eventually periodic");
  if (!tail_.is_eventually_periodic())
    throw PreconditionError("spliced stream tail must be eventually periodic");
  link_lcp_.reserve(head_.size());
  for (std::size_t i = 0; i < head_.size(); ++i) {
    const Point& next = (i + 1 < head_.size()) ? head_[i + 1] : tail_;
    const LcpResult l = lcp(head_[i].shifted(1), next, 1);
    link_lcp_.push_back(l.kind == LcpResult::Kind::infinite ? kAgree : l.value);
  }
}

Point SplicedOrbitStream::at(std::uint64_t i) const {
  if (i < head_.size()) return head_[static_cast<std::size_t>(i)];
  return tail_.shifted(i - head_.size());
}

std::uint64_t SplicedOrbitStream::rate(std::uint32_t m) const {
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < link_lcp_.size(); ++i)
    if (link_lcp_[i] != kAgree && link_lcp_[i] < m) r = i + 1;
  return r;
}

SubsampleStream::SubsampleStream(std::shared_ptr<const PointStream> base,
                                 std::uint64_t stride, std::uint64_t offset)
    : base_(std::move(base)), stride_(stride), offset_(offset) {
  if (!base_) throw SpecError("subsample stream needs a base stream");
  if (stride_ == 0) throw SpecError("subsample stride must be positive");
}

Point SubsampleStream::at(std::uint64_t i) const {
  return base_->at(offset_ + stride_ * i);
}

Point diagonal_point(std::shared_ptr<const PointStream> stream,
                     std::uint64_t offset) {
  return Point::from_scheme(std::make_shared<const DiagonalScheme>(std::move(stream), offset));
}

}  // namespace shiftlab
