// One line per acceptance criterion; exit status 1 when any line fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "thickmix/error.hpp"
#include "thickmix/moebius.hpp"
#include "thickmix/random.hpp"
#include "thickmix/returnsets.hpp"
#include "thickmix/torus.hpp"
#include "thickmix/words.hpp"
#include "thickmix/zsets.hpp"

using namespace thickmix;
namespace rs = thickmix::returnsets;
using zsets::Interval;
using zsets::ZSet;

namespace {

// Wall-clock limits per criterion, seconds.
constexpr double kLimitBlocks = 1.0;
constexpr double kLimitEquivalence = 30.0;
constexpr double kLimitThick = 60.0;
constexpr double kLimitTorus = 10.0;
constexpr double kLimitMoebiusExact = 5.0;
constexpr double kLimitObstruction = 60.0;

// Moebius obstruction configuration.
const Rational kEps{1, 100};
constexpr std::uint64_t kBoundSamples = 10000;
constexpr std::uint64_t kSearchBudget = 100000;
constexpr std::uint64_t kSeed = 42;

struct Outcome {
  bool ok;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double limit, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o{false, ""};
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit > 0 && secs >= limit) {
    o.ok = false;
    o.detail += " [over time limit]";
  }
  if (!o.ok) ++failures;
  std::printf("%s %2d %-44s %7.2fs  %s\n", o.ok ? "PASS" : "FAIL", id, title, secs,
              o.detail.c_str());
  std::fflush(stdout);
}

std::string show(const std::vector<Integer>& v) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << "}";
  return os.str();
}

rs::CylinderSet blk(unsigned k) { return {words::chacon_block(k), 0}; }

ZSet brute_self(unsigned k, const Integer& x) {
  const unsigned depth = rs::required_depth(to_i64(abs(x)) + words::block_length(k));
  return rs::return_set_bruteforce(blk(k), blk(k), depth, Interval{x, x}).set;
}

torus::Rect random_rect(Rng& rng, std::int64_t q) {
  const std::int64_t a = rng.between(0, q - 2), b = rng.between(a + 1, q - 1);
  const std::int64_t c = rng.between(0, q - 2), d = rng.between(c + 1, q - 1);
  return {Rational(a, q), Rational(b, q), Rational(c, q), Rational(d, q)};
}

moebius::GQ random_gq(Rng& rng) {
  return {Rational(rng.between(-25, 25), rng.between(1, 8)),
          Rational(rng.between(-25, 25), rng.between(1, 8))};
}

moebius::Triple random_triple(Rng& rng, bool infinity) {
  using moebius::CP1Point;
  for (;;) {
    moebius::Triple t{CP1Point::finite(random_gq(rng)), CP1Point::finite(random_gq(rng)),
                      CP1Point::finite(random_gq(rng))};
    if (infinity && rng.below(3) == 0) t[rng.below(3)] = CP1Point::infinity();
    if (!(t[0] == t[1]) && !(t[1] == t[2]) && !(t[0] == t[2])) return t;
  }
}

}  // namespace

int main() {
  criterion(1, "substitution agrees with concatenation", kLimitBlocks, [] {
    for (unsigned n = 1; n <= 8; ++n) {
      const words::Block next = words::chacon_block(n + 1);
      if (!(words::substitute(words::chacon_block(n)) == next))
        return Outcome{false, "n=" + std::to_string(n)};
      if (Integer(next.size()) != (pow3(n + 2) - 1) / 2)
        return Outcome{false, "length n=" + std::to_string(n)};
    }
    return Outcome{true, "n <= 8"};
  });

  criterion(2, "brute-force return sets equal H_1, H_2", 0, [] {
    std::string detail;
    bool ok = true;
    struct Case {
      unsigned k, depth;
      std::int64_t reach;
      std::vector<Integer> expect;
    };
    const Case cases[] = {{1, 4, 9, {-9, -5, -4, 0, 4, 5, 9}},
                          {2, 5, 27, {-27, -14, -13, 0, 13, 14, 27}}};
    for (const auto& c : cases) {
      const Interval r{-c.reach, c.reach};
      const ZSet h(r, c.expect);
      const ZSet n = rs::return_set_bruteforce(blk(c.k), blk(c.k), c.depth, r).set;
      const auto d = zsets::compare_on(n, h, r);
      ok = ok && d.equal();
      detail += "H_" + std::to_string(c.k) + ": brute " + show(n.elements()) + " extra " +
                show(d.only_left) + " missing " + show(d.only_right) + "; ";
    }
    return Outcome{ok, detail};
  });

  {
    // Not counted: the weaker reading, H_k inside N and N equal to the structured sum.
    bool ok = true;
    for (unsigned k = 1; k <= 2; ++k) {
      const ZSet h = zsets::h_set(k);
      const ZSet n = rs::return_set_bruteforce(blk(k), blk(k), k + 3, h.range()).set;
      const ZSet st = rs::return_set_structured(k, 0, k + 4, h.range()).set;
      for (const auto& x : h.elements()) ok = ok && n.contains(x);
      ok = ok && zsets::compare_on(n, st, h.range()).equal();
    }
    std::printf("NOTE  2 H_k subset of N, N equals structured sum: %s\n", ok ? "holds" : "violated");
  }

  criterion(3, "structured equals brute force (certified)", kLimitEquivalence, [] {
    std::size_t cases = 0;
    std::string bad;
    for (unsigned k = 1; k <= 2; ++k)
      for (unsigned K = k; K <= 6; ++K)
        for (std::int64_t m = -4; m <= 4; ++m) {
          const Integer r = zsets::h_sum_certified_radius(k, K);
          const ZSet st = rs::return_set_structured(k, m, K, Interval::symmetric(r).shifted(m)).set;
          const unsigned depth =
              rs::required_depth(to_i64(r) + std::abs(m) + 2 * words::block_length(k));
          const ZSet bf =
              rs::return_set_bruteforce(blk(k), rs::shifted(blk(k), m), depth, st.certified()).set;
          const auto d = zsets::compare_on(st, bf, st.certified());
          ++cases;
          if (!d.equal())
            bad += " k=" + std::to_string(k) + ",K=" + std::to_string(K) + ",m=" +
                   std::to_string(m) + " only_structured " + show(d.only_left) +
                   " only_brute " + show(d.only_right);
        }
    return Outcome{bad.empty(), std::to_string(cases) + " cases" + bad};
  });

  criterion(4, "gap elements outside N([B_1],[B_1])", 0, [] {
    std::string detail;
    for (unsigned m = 1; m <= 4; ++m) {
      const Integer g = zsets::gap_element(m);
      if (brute_self(1, g).contains(g)) return Outcome{false, "member " + g.str()};
      detail += g.str() + " ";
    }
    return Outcome{true, "absent: " + detail};
  });

  criterion(5, "interval runs are single runs", 0, [] {
    for (unsigned k = 1; k <= 5; ++k)
      for (unsigned m = 2; m <= 7; ++m) {
        const auto st = zsets::interval_stats(zsets::interval_run(k, m));
        if (st.runs.size() != 1 || st.max_run_length != m)
          return Outcome{false, "k=" + std::to_string(k) + " m=" + std::to_string(m)};
      }
    return Outcome{true, "k <= 5, 2 <= m <= 7"};
  });

  criterion(6, "weak-mixing witness in both shifted sets", 0, [] {
    std::size_t n_cases = 0;
    for (unsigned k = 1; k <= 2; ++k)
      for (std::int64_t m = 1; m <= 3; ++m)
        for (std::int64_t n = 0; n <= 2; ++n) {
          if (m <= n) continue;
          const Integer v = rs::weak_mixing_witness(k, m, n);
          if (!brute_self(k, v - m).contains(v - m) || !brute_self(k, v - n).contains(v - n))
            return Outcome{false, "k=" + std::to_string(k) + " m=" + std::to_string(m) +
                                      " n=" + std::to_string(n)};
          ++n_cases;
        }
    return Outcome{true, std::to_string(n_cases) + " cases"};
  });

  criterion(7, "thick-N constructions", kLimitThick, [] {
    const auto c = rs::build_thick_n_chacon(3, 6);
    for (const auto& p : c.pieces) {
      if (zsets::interval_stats(p.elements).max_run_length != p.level)
        return Outcome{false, "piece length"};
      for (unsigned lv = 1; lv <= p.level; ++lv)
        for (const auto& x : p.elements.elements())
          if (!rs::script_m_membership(x, lv, 6, c).member)
            return Outcome{false, "piece " + std::to_string(p.level) + " not in M_" +
                                      std::to_string(lv)};
    }
    const auto d = rs::mixing_defect(c, 1);
    if (d.outside.size() > 3 || d.undecided > 0)
      return Outcome{false, "defect " + show(d.outside)};
    const auto g = rs::build_thick_n_generic(3, 3, 7);
    for (const auto& p : g.pieces) {
      std::vector<Integer> shifts(p.gammas.begin() + 1, p.gammas.end());
      if (zsets::thick_witness(p.elements, shifts).witness != p.delta)
        return Outcome{false, "delta_" + std::to_string(p.level)};
    }
    return Outcome{true, "runs 1,2,3; defect " + std::to_string(d.outside.size()) +
                             "; delta " + g.pieces[0].delta->str() + "," +
                             g.pieces[1].delta->str() + "," + g.pieces[2].delta->str()};
  });

  criterion(8, "shift identity on 50 seeded triples", 0, [] {
    Rng rng(kSeed);
    const words::Window w = words::window(6);
    int checked = 0;
    while (checked < 50) {
      std::string a(static_cast<std::size_t>(rng.between(1, 4)), '0');
      std::string b(static_cast<std::size_t>(rng.between(1, 4)), '0');
      for (auto& ch : a) ch = rng.coin() ? '1' : '0';
      for (auto& ch : b) ch = rng.coin() ? '1' : '0';
      const rs::CylinderSet ca{words::Block(a), rng.between(-3, 3)};
      const rs::CylinderSet cb{words::Block(b), rng.between(-3, 3)};
      const std::int64_t g = rng.between(-20, 20);
      if (!rs::occurs(ca, w) || !rs::occurs(cb, w)) continue;
      ++checked;
      if (!rs::shift_identity_check(ca, cb, g, 6, Interval{-30, 30}))
        return Outcome{false, a + " " + b + " g=" + std::to_string(g)};
    }
    return Outcome{true, "50 triples"};
  });

  criterion(9, "torus k-transitivity witnesses", kLimitTorus, [] {
    Rng rng(kSeed);
    for (std::size_t k = 1; k <= 4; ++k)
      for (int family = 0; family < 3; ++family) {
        std::vector<std::pair<torus::Rect, torus::Rect>> pairs;
        for (std::size_t i = 0; i < k; ++i) pairs.emplace_back(random_rect(rng, 20), random_rect(rng, 20));
        const auto s = torus::transitivity_witness(pairs, kSearchBudget);
        const auto& m = s.matrix;
        if (Integer(m.a()) * m.d() - Integer(m.b()) * m.c() != 1) return Outcome{false, "det"};
        if (!(s.c > s.c_threshold)) return Outcome{false, "threshold"};
        for (std::size_t i = 0; i < k; ++i)
          if (!pairs[i].first.contains(s.witnesses[i]) ||
              !pairs[i].second.contains(torus::act(m, s.witnesses[i])))
            return Outcome{false, "witness"};
      }
    return Outcome{true, "k = 1..4, 3 families each"};
  });

  criterion(10, "torus non-mixing certificate", 0, [] {
    const Rational f(1, 5);
    const torus::Rect u(3 * f, 4 * f, 3 * f, 4 * f), v(f, 2 * f, f, 2 * f);
    torus::non_mixing_certificate(u, v);
    for (std::int64_t a = -1000; a <= 1000; ++a)
      if (torus::intersection_witness(torus::Mat2Int::horizontal_shear(a), u, v))
        return Outcome{false, "a=" + std::to_string(a)};
    return Outcome{true, "|a| <= 1000 absent"};
  });

  criterion(11, "Moebius exactness", kLimitMoebiusExact, [] {
    using moebius::CP1Point;
    Rng rng(kSeed);
    int infinite = 0;
    for (int i = 0; i < 100; ++i) {
      const auto zs = random_triple(rng, true), ws = random_triple(rng, true);
      for (const auto& p : zs) infinite += p.is_infinity();
      moebius::canonical_matrix(zs[0], zs[1], zs[2]);
      const auto m = moebius::solve_three_transitive(zs, ws);
      for (int j = 0; j < 3; ++j)
        if (!(moebius::moebius_apply(m, zs[j]) == ws[j])) return Outcome{false, "solver"};
    }
    for (int i = 0; i < 100; ++i) {
      const auto zs = random_triple(rng, false), ws = random_triple(rng, false);
      const auto e = moebius::product_entries(zs, ws);
      if (!moebius::Mat2GQ(e.a, e.b, e.c, e.d)
               .projectively_equal(moebius::solve_three_transitive(zs, ws)))
        return Outcome{false, "entries"};
    }
    return Outcome{true, "100 + 100 triples, " + std::to_string(infinite) + " at infinity"};
  });

  criterion(12, "Moebius obstruction", kLimitObstruction, [] {
    const auto b = moebius::bound_check(kEps, kEps, kBoundSamples, kSeed);
    if (!b.violations.empty())
      return Outcome{false, std::to_string(b.violations.size()) + " bound violations"};
    const std::array<moebius::TargetPair, 4> t{
        moebius::TargetPair{{1, kEps}, {1, kEps}}, moebius::TargetPair{{2, kEps}, {2, kEps}},
        moebius::TargetPair{{3, kEps}, {3, kEps}},
        moebius::TargetPair{{0, kEps}, {4, Rational(1, 2)}}};
    const auto s = moebius::four_transitivity_search(t, kSearchBudget, kSeed);
    if (s.witness) return Outcome{false, "witness found"};
    if (!s.closest_distance_sq || *s.closest_distance_sq <= Rational(1, 4))
      return Outcome{false, "closest approach inside V_4"};
    if (!s.max_modulus_sq || *s.max_modulus_sq >= Rational(49, 4))
      return Outcome{false, "image modulus reached 4 - 1/2"};
    return Outcome{true, "max ratio^2 " + std::to_string(b.max_ratio_sq.convert_to<double>()) +
                             ", max |image|^2 " +
                             std::to_string(s.max_modulus_sq->convert_to<double>()) +
                             ", closest dist^2 " +
                             std::to_string(s.closest_distance_sq->convert_to<double>())};
  });

  std::printf("%d of 12 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
