#include "thickmix/zsets.hpp"

#include "thickmix/error.hpp"

#include <algorithm>

namespace thickmix::zsets {

Interval Interval::intersect(const Interval& other) const {
  if (empty() || other.empty()) return none();
  Interval r{std::max(lo, other.lo), std::min(hi, other.hi)};
  return r.empty() ? none() : r;
}

namespace {

void normalize(std::vector<Integer>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::string show(const Interval& r) {
  if (r.empty()) return "[]";
  return "[" + r.lo.str() + ", " + r.hi.str() + "]";
}

}  // namespace

ZSet::ZSet(Interval range, std::vector<Integer> elements)
    : ZSet(range, std::move(elements), range) {}

ZSet::ZSet(Interval range, std::vector<Integer> elements, Interval certified)
    : range_(range.empty() ? Interval::none() : range),
      certified_(certified.intersect(range)),
      elements_(std::move(elements)) {
  normalize(elements_);
  if (!elements_.empty() && (range_.empty() || elements_.front() < range_.lo ||
                             elements_.back() > range_.hi))
    throw Error(Errc::invalid_argument, "ZSet element outside its range " + show(range_));
}

bool ZSet::contains(const Integer& x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

ZSet ZSet::clipped(const Interval& to) const {
  const Interval r = range_.intersect(to);
  std::vector<Integer> kept;
  if (!r.empty()) {
    auto first = std::lower_bound(elements_.begin(), elements_.end(), r.lo);
    auto last = std::upper_bound(first, elements_.end(), r.hi);
    kept.assign(first, last);
  }
  return ZSet(r, std::move(kept), certified_.intersect(r));
}

ZSet ZSet::shifted(const Integer& by) const {
  std::vector<Integer> moved;
  moved.reserve(elements_.size());
  for (const auto& x : elements_) moved.push_back(x + by);
  return ZSet(range_.empty() ? range_ : range_.shifted(by), std::move(moved),
              certified_.empty() ? certified_ : certified_.shifted(by));
}

ZSet ZSet::with_certified(const Interval& certified) const {
  return ZSet(range_, elements_, certified);
}

ZSet intersect(const ZSet& a, const ZSet& b) {
  std::vector<Integer> both;
  std::set_intersection(a.elements().begin(), a.elements().end(), b.elements().begin(),
                        b.elements().end(), std::back_inserter(both));
  const Interval r = a.range().intersect(b.range());
  std::vector<Integer> kept;
  for (auto& x : both)
    if (r.contains(x)) kept.push_back(std::move(x));
  return ZSet(r, std::move(kept), a.certified().intersect(b.certified()));
}

SetDifference compare_on(const ZSet& a, const ZSet& b, const Interval& on) {
  if (!a.certified().contains(on) || !b.certified().contains(on))
    throw Error(Errc::uncertified_compare,
                "comparison on " + show(on) + " leaves certified ranges " + show(a.certified()) +
                    " / " + show(b.certified()));
  const ZSet left = a.clipped(on);
  const ZSet right = b.clipped(on);
  SetDifference d;
  std::set_difference(left.elements().begin(), left.elements().end(), right.elements().begin(),
                      right.elements().end(), std::back_inserter(d.only_left));
  std::set_difference(right.elements().begin(), right.elements().end(), left.elements().begin(),
                      left.elements().end(), std::back_inserter(d.only_right));
  return d;
}

namespace {

std::vector<Integer> h_values(unsigned m) {
  const Integer p = pow3(m + 1);
  return {-p, -(p + 1) / 2, -(p - 1) / 2, 0, (p - 1) / 2, (p + 1) / 2, p};
}

}  // namespace

ZSet h_set(unsigned m) {
  if (m < 1) throw Error(Errc::invalid_argument, "h_set level must be >= 1");
  const Integer p = pow3(m + 1);
  return ZSet(Interval{-p, p}, h_values(m));
}

Sumset minkowski_sum(const ZSet& a, const ZSet& b, const Interval& range) {
  std::vector<Integer> out;
  for (const auto& x : a.elements())
    for (const auto& y : b.elements()) {
      Integer s = x + y;
      if (range.contains(s)) out.push_back(std::move(s));
    }
  bool incomplete = range.empty() ? false
                    : a.range().empty() || b.range().empty()
                        ? true
                        : (a.range().hi + b.range().hi < range.hi ||
                           a.range().lo + b.range().lo > range.lo);
  return {ZSet(range, std::move(out), incomplete ? Interval::none() : range), incomplete};
}

Integer h_sum_certified_radius(unsigned k, unsigned K) {
  if (k < 1) throw Error(Errc::invalid_argument, "level must be >= 1");
  if (k > K) throw Error(Errc::level_order, "k > K");
  // Nonzero elements of H_k + H_{k+1} + ... have absolute value >= l_k.
  const Integer near = chacon_length(k) - 1;
  if (K <= k + 1) return near;
  // Two copies of B_k at distance <= l_{K-1} - l_k sit in adjacent copies
  // of B_{K-1}, and both adjacencies (with and without the spacer) occur
  // inside a single B_K.
  return std::max(near, chacon_length(K - 1) - chacon_length(k));
}

namespace {

template <typename T>
std::vector<T> sum_levels(unsigned k, unsigned K, const T& lo, const T& hi) {
  // Partial sums are kept only while the remaining levels can still bring
  // them back into [lo, hi].
  std::vector<T> reach(K - k + 1, T(0));
  for (unsigned i = K; i-- > k;) reach[i - k] = reach[i - k + 1] + T(pow3(i + 1));

  std::vector<T> cur{T(0)};
  for (unsigned i = k; i < K; ++i) {
    std::vector<T> hv;
    for (const auto& h : h_values(i)) hv.push_back(T(h));
    const T rest = reach[i - k + 1];
    const T wlo = lo - rest;
    const T whi = hi + rest;
    std::vector<T> next;
    next.reserve(cur.size() * hv.size());
    for (const auto& x : cur)
      for (const auto& h : hv) {
        T s = x + h;
        if (s >= wlo && s <= whi) next.push_back(s);
      }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

ZSet truncated_h_sum(unsigned k, unsigned K, const Interval& range) {
  const Integer radius = h_sum_certified_radius(k, K);
  const Interval certified = range.intersect(Interval::symmetric(radius));
  if (range.empty()) return ZSet(range, {}, certified);

  Integer total = 0;
  for (unsigned i = k; i < K; ++i) total += pow3(i + 1);
  const Integer lo = std::max(range.lo, Integer(-total));
  const Integer hi = std::min(range.hi, total);

  std::vector<Integer> elements;
  if (lo <= hi) {
    if (fits_i64(total + abs(lo) + abs(hi))) {
      for (auto x : sum_levels<std::int64_t>(k, K, to_i64(lo), to_i64(hi)))
        if (x >= lo && x <= hi) elements.emplace_back(x);
    } else {
      for (auto& x : sum_levels<Integer>(k, K, lo, hi))
        if (x >= lo && x <= hi) elements.push_back(std::move(x));
    }
  }
  return ZSet(range, std::move(elements), certified);
}

IntervalStats interval_stats(const ZSet& s) {
  IntervalStats st;
  const auto& e = s.elements();
  for (std::size_t i = 0; i < e.size();) {
    std::size_t j = i + 1;
    while (j < e.size() && e[j] == e[j - 1] + 1) ++j;
    const std::uint64_t len = j - i;
    st.runs.push_back({e[i], len});
    st.max_run_length = std::max(st.max_run_length, len);
    i = j;
  }
  return st;
}

ThickCheck thick_witness(const ZSet& n, std::span<const Integer> shifts) {
  ThickCheck out;
  if (!n.range().empty())
    for (const auto& f : shifts)
      if (!n.range().contains(n.range().shifted(f))) out.range_limited = true;

  const auto good = [&](const Integer& x) {
    return std::all_of(shifts.begin(), shifts.end(),
                       [&](const Integer& f) { return n.contains(x - f); });
  };
  // Candidates ordered by |x|, positive before negative.
  const auto& e = n.elements();
  auto pos = std::lower_bound(e.begin(), e.end(), Integer(0));
  auto neg = std::make_reverse_iterator(pos);
  while (pos != e.end() || neg != e.rend()) {
    const bool take_pos = neg == e.rend() || (pos != e.end() && *pos <= -*neg);
    const Integer& x = take_pos ? *pos++ : *neg++;
    if (good(x)) {
      out.witness = x;
      return out;
    }
  }
  return out;
}

Integer gap_element(unsigned m) {
  if (m < 1) throw Error(Errc::invalid_argument, "gap_element index must be >= 1");
  return (pow3(m + 1) - 3) / 2;
}

ZSet interval_run(unsigned k, unsigned m) {
  if (k < 1) throw Error(Errc::invalid_argument, "interval_run level must be >= 1");
  if (m < 2) throw Error(Errc::invalid_argument, "interval_run length must be >= 2");
  std::vector<Integer> cur{0};
  for (unsigned i = k; i <= k + m - 2; ++i) {
    const Integer li = chacon_length(i);
    std::vector<Integer> next;
    next.reserve(2 * cur.size());
    for (const auto& x : cur) {
      next.push_back(x + li);
      next.push_back(x + li + 1);
    }
    normalize(next);
    cur = std::move(next);
  }
  const Interval r{cur.front(), cur.back()};
  ZSet s(r, std::move(cur));
  const auto st = interval_stats(s);
  if (st.runs.size() != 1 || st.max_run_length != m)
    throw Error(Errc::interval_run_broken, "interval_run(" + std::to_string(k) + ", " +
                                               std::to_string(m) + ") has " +
                                               std::to_string(st.runs.size()) + " runs");
  return s;
}

}  // namespace thickmix::zsets
