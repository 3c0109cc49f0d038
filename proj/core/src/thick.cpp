#include "thickmix/error.hpp"
#include "thickmix/returnsets.hpp"

#include <algorithm>
#include <map>

namespace thickmix::returnsets {

using zsets::Interval;
using zsets::Run;
using zsets::ZSet;

namespace {

ZSet run_set(const Integer& start, std::uint64_t length) {
  std::vector<Integer> v;
  for (std::uint64_t i = 0; i < length; ++i) v.push_back(start + i);
  return ZSet(Interval{start, start + length - 1}, std::move(v));
}

/// Start of a length-`length` subrun of some run in `s`, closest to 0.
std::optional<Integer> nearest_subrun(const ZSet& s, std::uint64_t length) {
  std::optional<Integer> best;
  for (const auto& r : zsets::interval_stats(s).runs) {
    if (r.length < length) continue;
    const Integer last = r.start + (r.length - length);
    const Integer t = std::clamp(Integer(0), r.start, last);
    if (!best || abs(t) < abs(*best) || (abs(t) == abs(*best) && t > *best)) best = t;
  }
  return best;
}

void finish(ThickSetConstruction& c) {
  std::vector<Integer> all;
  for (std::size_t i = 0; i < c.pieces.size(); ++i) {
    const auto& e = c.pieces[i].elements.elements();
    all.insert(all.end(), e.begin(), e.end());
    for (std::size_t j = 0; j < i; ++j)
      if (!zsets::intersect(c.pieces[j].elements, c.pieces[i].elements).empty())
        c.overlaps.emplace_back(j, i);
  }
  if (all.empty()) return;
  const auto [lo, hi] = std::minmax_element(all.begin(), all.end());
  Interval r{*lo, *hi};
  c.union_set = ZSet(r, std::move(all));
}

bool covers(const Run& run, const Integer& from, const Integer& to) {
  return run.start <= from && to <= run.start + run.length - 1;
}

}  // namespace

ThickSetConstruction build_thick_n_chacon(unsigned m_max, unsigned K) {
  if (m_max < 1) throw Error(Errc::invalid_argument, "m_max must be >= 1");
  if (m_max + 2 > K) throw Error(Errc::invalid_argument, "m_max must be <= K - 2");
  ThickSetConstruction c;
  c.method = ThickMethod::chacon_intervals;
  c.depth = K;

  for (unsigned i = 1; i <= m_max; ++i) {
    ThickPiece piece;
    piece.level = i;
    const Integer l = chacon_length(i);
    const Integer r = zsets::h_sum_certified_radius(i, K) - l;
    std::optional<Integer> start;
    if (r >= 0) start = nearest_subrun(script_m(i, K, Interval::symmetric(r)).set, i);

    if (start) {
      piece.source = PieceSource::certified_search;
      piece.run = {*start, i};
    } else {
      // interval_run(i, M) lies in N([B_i],[B_i]); its middle i elements x
      // keep [x - l_i, x + l_i] inside the run, hence lie in M_i.
      const std::uint64_t m = 2 * static_cast<std::uint64_t>(chacon_length_i64(i)) + i;
      const ZSet run = zsets::interval_run(i, static_cast<unsigned>(m));
      piece.source = PieceSource::closed_form_run;
      piece.container = Run{run.elements().front(), m};
      piece.run = {run.elements().front() + l, i};
      if (!covers(*piece.container, piece.run.start - l, piece.run.start + (i - 1) + l))
        throw Error(Errc::postcondition_failed, "closed-form piece leaves its container run");
    }
    piece.elements = run_set(piece.run.start, i);
    c.pieces.push_back(std::move(piece));
  }
  finish(c);
  return c;
}

Integer gamma_at(std::size_t i) {
  if (i == 0) return 0;
  const Integer half = Integer((i + 1) / 2);
  return i % 2 == 1 ? half : Integer(-half);
}

std::vector<words::Block> cylinder_basis(unsigned max_length, unsigned K) {
  if (max_length < 1) throw Error(Errc::invalid_argument, "basis depth must be >= 1");
  if (static_cast<std::int64_t>(max_length) > window_reach(K))
    throw Error(Errc::unreachable_range, "depth " + std::to_string(K) +
                                             " cannot certify absence of words of length " +
                                             std::to_string(max_length));
  const words::Window w = words::window(K);
  std::vector<words::Block> out;
  for (unsigned n = 1; n <= max_length; ++n)
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      std::string s(n, '0');
      for (unsigned j = 0; j < n; ++j)
        if ((bits >> (n - 1 - j)) & 1U) s[j] = '1';
      words::Block b(std::move(s));
      if (occurs({b, 0}, w)) out.push_back(std::move(b));
    }
  return out;
}

ThickSetConstruction build_thick_n_generic(unsigned basis_depth, unsigned m_max, unsigned K) {
  if (m_max < 1) throw Error(Errc::invalid_argument, "m_max must be >= 1");
  ThickSetConstruction c;
  c.method = ThickMethod::generic_basis;
  c.depth = K;
  c.basis = cylinder_basis(basis_depth, K);
  if (m_max > c.basis.size())
    throw Error(Errc::invalid_argument, "m_max exceeds the " + std::to_string(c.basis.size()) +
                                            " basis cylinders of length <= " +
                                            std::to_string(basis_depth));
  const std::int64_t r = window_reach(K) - static_cast<std::int64_t>(basis_depth);
  const Interval range = Interval::symmetric(r);

  std::map<std::pair<std::size_t, std::size_t>, ZSet> cache;
  const auto pair_set = [&](std::size_t i, std::size_t j) -> const ZSet& {
    auto it = cache.find({i, j});
    if (it == cache.end())
      it = cache
               .emplace(std::pair{i, j},
                        return_set_bruteforce({c.basis[i], 0}, {c.basis[j], 0}, K, range).set)
               .first;
    return it->second;
  };

  for (unsigned m = 1; m <= m_max; ++m) {
    ZSet mm = pair_set(0, 0);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) mm = zsets::intersect(mm, pair_set(i, j));

    std::vector<Integer> shifts;
    for (std::size_t i = 1; i <= m; ++i) shifts.push_back(gamma_at(i));
    const auto tw = zsets::thick_witness(mm, shifts);
    if (!tw.witness)
      throw Error(Errc::empty_intersection,
                  "no delta_" + std::to_string(m) + " within [-" + std::to_string(r) + ", " +
                      std::to_string(r) + "] at depth " + std::to_string(K));

    ThickPiece piece;
    piece.level = m;
    piece.source = PieceSource::basis_delta;
    piece.delta = *tw.witness;
    piece.run = {*tw.witness, 1};
    std::vector<Integer> elems;
    for (std::size_t i = 0; i <= m; ++i) {
      piece.gammas.push_back(gamma_at(i));
      elems.push_back(*tw.witness - gamma_at(i));
    }
    const auto [lo, hi] = std::minmax_element(elems.begin(), elems.end());
    piece.elements = ZSet(Interval{*lo, *hi}, elems);
    c.pieces.push_back(std::move(piece));
  }
  finish(c);
  return c;
}

Membership script_m_membership(const Integer& x, unsigned level, unsigned K,
                               const ThickSetConstruction& known) {
  const Integer l = chacon_length(level);
  if (level <= K) {
    const Integer r = zsets::h_sum_certified_radius(level, K) - l;
    if (abs(x) <= r)
      return {Evidence::computed, script_m(level, K, Interval{x, x}).set.contains(x)};
  }
  // N_i is contained in N_level for i >= level, so a run inside N_i covering
  // [x - l, x + l] puts x in M_level.
  for (const auto& p : known.pieces)
    if (p.level >= level && p.container && covers(*p.container, x - l, x + l))
      return {Evidence::run_containment, true};
  return {};
}

MixingDefect mixing_defect(const ThickSetConstruction& c, unsigned k) {
  MixingDefect out;
  const words::Block bk = words::chacon_block(k);
  const CylinderSet cyl{bk, 0};
  const Integer cap_reach = window_reach(words::kDefaultDepthCap);
  for (const auto& x : c.union_set.elements()) {
    const Integer span = abs(x) + bk.size();
    if (span <= cap_reach) {
      const unsigned depth = required_depth(to_i64(span));
      ++out.brute_checked;
      if (!return_set_bruteforce(cyl, cyl, depth, Interval{x, x}).set.contains(x))
        out.outside.push_back(x);
      continue;
    }
    // x in a container run inside N_i, i >= k, lies in N_k.
    const bool cert = std::any_of(c.pieces.begin(), c.pieces.end(), [&](const ThickPiece& p) {
      return p.level >= k && p.container && covers(*p.container, x, x);
    });
    if (cert)
      ++out.certified;
    else
      ++out.undecided;
  }
  return out;
}

}  // namespace thickmix::returnsets
