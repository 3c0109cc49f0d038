#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "thickmix/numeric.hpp"

namespace thickmix::zsets {

/// Closed integer interval [lo, hi]; empty when lo > hi.
struct Interval {
  Integer lo;
  Integer hi;

  static Interval none() { return {1, 0}; }
  static Interval symmetric(const Integer& r) { return {-r, r}; }

  bool empty() const { return lo > hi; }
  bool contains(const Integer& x) const { return lo <= x && x <= hi; }
  bool contains(const Interval& other) const {
    return other.empty() || (!empty() && lo <= other.lo && other.hi <= hi);
  }
  Interval intersect(const Interval& other) const;
  Interval shifted(const Integer& by) const { return {lo + by, hi + by}; }
  Integer count() const { return empty() ? Integer(0) : Integer(hi - lo + 1); }

  friend bool operator==(const Interval& a, const Interval& b) {
    return (a.empty() && b.empty()) || (a.lo == b.lo && a.hi == b.hi);
  }
};

/// A finite set of integers, complete within `range`. `certified` is the part
/// of the range where the set is known to equal the untruncated object it
/// approximates (H-sums, return sets); it defaults to the whole range.
class ZSet {
 public:
  explicit ZSet(Interval range, std::vector<Integer> elements = {});
  ZSet(Interval range, std::vector<Integer> elements, Interval certified);

  const Interval& range() const noexcept { return range_; }
  const Interval& certified() const noexcept { return certified_; }
  const std::vector<Integer>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  bool contains(const Integer& x) const;

  /// Restricts range, certified range and elements to `to`.
  ZSet clipped(const Interval& to) const;
  ZSet shifted(const Integer& by) const;
  ZSet with_certified(const Interval& certified) const;

  friend bool operator==(const ZSet&, const ZSet&) = default;

 private:
  Interval range_;
  Interval certified_;
  std::vector<Integer> elements_;
};

/// Intersection; range and certified range are intersected too.
ZSet intersect(const ZSet& a, const ZSet& b);

struct SetDifference {
  std::vector<Integer> only_left;
  std::vector<Integer> only_right;
  bool equal() const { return only_left.empty() && only_right.empty(); }
};

/// Symmetric difference restricted to `on`. Throws uncertified_compare unless
/// `on` lies inside both certified ranges.
SetDifference compare_on(const ZSet& a, const ZSet& b, const Interval& on);

/// H_m: translations carrying a copy of B_m inside B_{m+1} onto another copy.
ZSet h_set(unsigned m);

struct Sumset {
  ZSet set;
  /// The input ranges do not reach the ends of the requested range, so sums
  /// landing there may be missing.
  bool possibly_incomplete;
};

/// {x + y} clipped to `range`, by direct double loop.
Sumset minkowski_sum(const ZSet& a, const ZSet& b, const Interval& range);

/// Radius R such that H_k + ... + H_{K-1} agrees with the infinite sum
/// H_k + H_{k+1} + ... on [-R, R].
Integer h_sum_certified_radius(unsigned k, unsigned K);

/// H_k + ... + H_{K-1} clipped to `range`; empty sum is {0}. The certified
/// range is `range` intersected with [-R, R] for the radius above.
ZSet truncated_h_sum(unsigned k, unsigned K, const Interval& range);

struct Run {
  Integer start;
  std::uint64_t length;
  friend bool operator==(const Run&, const Run&) = default;
};

struct IntervalStats {
  std::uint64_t max_run_length = 0;
  std::vector<Run> runs;  // all maximal runs, ascending
};

IntervalStats interval_stats(const ZSet& s);

struct ThickCheck {
  /// Some x in n with x - f in n for every shift f; smallest |x|, positive first.
  std::optional<Integer> witness;
  /// A shifted copy f + n.range leaves n.range, so absence may be a truncation effect.
  bool range_limited = false;
};

ThickCheck thick_witness(const ZSet& n, std::span<const Integer> shifts);

/// (3^{m+1} - 3) / 2, never a return time of [B_1] to itself.
Integer gap_element(unsigned m);

/// {l_k, l_k+1} + ... + {l_{k+m-2}, l_{k+m-2}+1}, which must be m consecutive
/// integers. Throws interval_run_broken otherwise.
ZSet interval_run(unsigned k, unsigned m);

}  // namespace thickmix::zsets
