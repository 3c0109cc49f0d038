#include "thickmix/returnsets.hpp"

#include "thickmix/error.hpp"

#include <algorithm>

namespace thickmix::returnsets {

using zsets::Interval;
using zsets::ZSet;

CylinderSet shifted(const CylinderSet& c, std::int64_t n) { return {c.word, c.offset - n}; }

std::int64_t window_reach(unsigned depth) {
  if (depth < 1) throw Error(Errc::invalid_argument, "depth must be >= 1");
  return chacon_length_i64(depth - 1) + 1;
}

unsigned required_depth(std::int64_t span, unsigned cap) {
  for (unsigned K = 1; K <= cap; ++K)
    if (window_reach(K) >= span) return K;
  throw Error(Errc::depth_exceeds_cap,
              "span " + std::to_string(span) + " needs a window deeper than cap " +
                  std::to_string(cap));
}

bool occurs(const CylinderSet& c, const words::Window& w) {
  return w.letters().find(c.word.letters()) != std::string::npos;
}

namespace {

std::int64_t len(const words::Block& b) { return static_cast<std::int64_t>(b.size()); }

/// Length of the merged pattern: a at a.offset - n, b at b.offset.
std::int64_t merged_span(const CylinderSet& a, const CylinderSet& b, std::int64_t n) {
  const std::int64_t as = a.offset - n;
  return std::max(as + len(a.word), b.offset + len(b.word)) - std::min(as, b.offset);
}

void require_nonempty(const CylinderSet& c, const words::Window& w) {
  if (!occurs(c, w))
    throw Error(Errc::empty_cylinder,
                "'" + c.word.letters() + "' does not occur at depth " + std::to_string(w.depth()));
}

}  // namespace

ReturnSetReport return_set_bruteforce(const CylinderSet& a, const CylinderSet& b, unsigned K,
                                      const Interval& range) {
  const words::Window w = words::window(K);
  require_nonempty(a, w);
  require_nonempty(b, w);
  ReturnSetReport rep{ZSet(range), Method::brute_force, {a, b}, 0, 0, K};
  if (range.empty()) return rep;

  const std::int64_t reach = window_reach(K);
  if (!fits_i64(range.lo) || !fits_i64(range.hi) ||
      merged_span(a, b, to_i64(range.lo)) > reach || merged_span(a, b, to_i64(range.hi)) > reach)
    throw Error(Errc::unreachable_range,
                "patterns over [" + range.lo.str() + ", " + range.hi.str() +
                    "] are longer than the reach " + std::to_string(reach) + " of depth " +
                    std::to_string(K));

  const auto oa = words::occurrences(a.word, w);
  std::vector<char> at_b(w.letters().size(), 0);
  for (auto q : words::occurrences(b.word, w)) at_b[static_cast<std::size_t>(q - w.start())] = 1;

  // n is a return time iff some occurrence p of a has b at p + (b.offset - a.offset + n).
  std::vector<Integer> hits;
  const std::int64_t lo = to_i64(range.lo), hi = to_i64(range.hi);
  for (std::int64_t n = lo; n <= hi; ++n) {
    const std::int64_t d = b.offset - a.offset + n;
    for (auto p : oa) {
      const std::int64_t q = p + d;
      if (w.contains(q) && at_b[static_cast<std::size_t>(q - w.start())]) {
        hits.emplace_back(n);
        break;
      }
    }
  }
  rep.set = ZSet(range, std::move(hits));
  return rep;
}

ReturnSetReport return_set_structured(unsigned k, std::int64_t m, unsigned K,
                                      const Interval& range) {
  if (k > K) throw Error(Errc::level_order, "k > K");
  ZSet base = zsets::truncated_h_sum(k, K, range.empty() ? range : range.shifted(-m));
  return {base.shifted(m).clipped(range), Method::structured, {}, k, m, K};
}

ReturnSetReport script_m(unsigned k, unsigned K, const Interval& range) {
  if (k < 1) throw Error(Errc::invalid_argument, "level must be >= 1");
  if (k > K) throw Error(Errc::level_order, "k > K");
  const std::int64_t l = chacon_length_i64(k);
  if (range.empty()) return {ZSet(range, {}, range), Method::structured, {}, k, 0, K};

  // Every j + T with |j| <= l is a translate of the same truncated sum T.
  const ZSet t = zsets::truncated_h_sum(k, K, Interval{range.lo - l, range.hi + l});
  ZSet acc = t.shifted(-l).clipped(range);
  for (std::int64_t j = -l + 1; j <= l && !acc.empty(); ++j)
    acc = zsets::intersect(acc, t.shifted(j).clipped(range));
  // Certified range survives every translate even when the set empties early.
  Interval cert = range;
  for (std::int64_t j : {-l, l}) cert = cert.intersect(t.certified().shifted(j));
  return {acc.with_certified(cert), Method::structured, {}, k, 0, K};
}

Integer weak_mixing_witness(unsigned k, std::int64_t m, std::int64_t n) {
  if (k < 1) throw Error(Errc::invalid_argument, "level must be >= 1");
  if (m == n) throw Error(Errc::equal_shifts, "m == n");
  if (m < n) std::swap(m, n);
  const std::int64_t gap = m - n;
  if (gap > 200) throw Error(Errc::invalid_argument, "m - n above 200");
  const unsigned levels = static_cast<unsigned>(gap);
  Integer a = 0;
  for (unsigned i = k; i < k + levels; ++i) a += chacon_length(i);
  const Integer b = a + gap;
  // a takes the lower end of each {l_i, l_i + 1}, b the upper end. The
  // H-sum grows like 7^levels, so only short sums are recomputed.
  if (levels > 6) return m + a;
  const ZSet ends = zsets::truncated_h_sum(k, k + levels, Interval{a, b});
  if (!ends.contains(a) || !ends.contains(b))
    throw Error(Errc::postcondition_failed, "interval endpoints missing from the H-sum");
  return m + a;
}

BlockCover cylinder_to_block_cover(const CylinderSet& a, unsigned K) {
  const words::Window w = words::window(K);
  require_nonempty(a, w);
  const auto occ = words::occurrences(a.word, w);
  const std::string_view text(w.letters());

  for (unsigned k = 1; k <= K; ++k) {
    const words::Block bk = words::chacon_block(k);
    if (bk.size() < a.word.size()) continue;
    const std::string_view block(bk.letters());
    std::vector<char> at_block(text.size(), 0);
    for (auto q : words::occurrences(bk, w)) at_block[static_cast<std::size_t>(q - w.start())] = 1;

    // a sits at index i inside B_k, so B_k starts at p - i.
    for (std::size_t i = block.find(a.word.letters()); i != std::string_view::npos;
         i = block.find(a.word.letters(), i + 1)) {
      const std::int64_t r = -static_cast<std::int64_t>(i);
      BlockCover cover{k, -r - a.offset, 0, 0};
      bool ok = true;
      for (auto p : occ) {
        const std::int64_t q = p + r;
        if (q < w.start() || q + len(bk) > w.end()) {
          ++cover.occurrences_at_edge;
          continue;
        }
        if (!at_block[static_cast<std::size_t>(q - w.start())]) {
          ok = false;
          break;
        }
        ++cover.occurrences_checked;
      }
      if (ok && cover.occurrences_checked > 0) return cover;
    }
  }
  throw Error(Errc::no_cover_found, "no block cover for '" + a.word.letters() + "' at depth " +
                                        std::to_string(K));
}

bool shift_identity_check(const CylinderSet& a, const CylinderSet& b, std::int64_t g, unsigned K,
                          const Interval& range) {
  const ZSet lhs = return_set_bruteforce(a, b, K, range.shifted(-g)).set.shifted(g);
  const ZSet rhs = return_set_bruteforce(a, shifted(b, g), K, range).set;
  return zsets::compare_on(lhs, rhs, range).equal();
}

}  // namespace thickmix::returnsets
