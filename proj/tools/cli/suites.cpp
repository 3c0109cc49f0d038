#include "codec.hpp"
#include "report.hpp"

#include "thickmix/error.hpp"
#include "thickmix/moebius.hpp"
#include "thickmix/random.hpp"
#include "thickmix/returnsets.hpp"
#include "thickmix/torus.hpp"
#include "thickmix/words.hpp"
#include "thickmix/zsets.hpp"

#include <algorithm>
#include <functional>

namespace thickmix::cli {

namespace {

namespace rs = returnsets;
using zsets::Interval;
using zsets::ZSet;

Record make(std::string module, std::string name, std::string anchor, bool ok, json data,
            Status otherwise = Status::fail) {
  return {std::move(module), std::move(name), std::move(anchor), ok ? Status::pass : otherwise,
          std::move(data)};
}

json error_json(const Error& e) { return {{"code", to_string(e.code())}, {"message", e.what()}}; }

/// Runs a check; a thrown library error becomes a failing record.
Record guarded(std::string module, std::string name, std::string anchor,
               const std::function<Record()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    return {std::move(module), std::move(name), std::move(anchor), Status::fail,
            {{"error", error_json(e)}}};
  }
}

json diff_json(const zsets::SetDifference& d) {
  return {{"only_left", encode_all(d.only_left)}, {"only_right", encode_all(d.only_right)}};
}

rs::CylinderSet block_cylinder(unsigned k) { return {words::chacon_block(k), 0}; }

/// N([B_k]_0, [B_k]_0) on `range` at the shallowest depth that reaches it.
ZSet brute_self(unsigned k, const Interval& range) {
  const Integer far = std::max(abs(range.lo), abs(range.hi));
  const unsigned depth = rs::required_depth(to_i64(far) + words::block_length(k));
  return rs::return_set_bruteforce(block_cylinder(k), block_cylinder(k), depth, range).set;
}

// ---------------------------------------------------------------- chacon

std::vector<Record> chacon_suite(const RunConfig& c) {
  std::vector<Record> out;
  const std::string mod = "words";
  out.push_back(guarded(mod, "block_recursion", "chacon.block_recursion", [&] {
    bool ok = true;
    for (unsigned n = 1; n < c.depth; ++n)
      ok = ok && words::substitute(words::chacon_block(n)) == words::chacon_block(n + 1);
    const words::Block b = words::chacon_block(c.depth);
    ok = ok && Integer(b.size()) == chacon_length(c.depth);
    json data{{"depth", c.depth}, {"length", b.size()}, {"levels_compared", c.depth - 1}};
    if (b.size() <= 1000) data["block"] = b.letters();
    return make(mod, "block_recursion", "chacon.block_recursion", ok, data);
  }));
  out.push_back(guarded(mod, "window_layout", "chacon.block_recursion", [&] {
    const words::Window w = words::window(c.depth);
    const std::int64_t l = words::block_length(c.depth);
    const std::string b = words::chacon_block(c.depth).letters();
    const bool ok = w.start() == -l && w.end() == l && w.letters() == b + b;
    return make(mod, "window_layout", "chacon.block_recursion", ok,
                {{"start", w.start()}, {"end", w.end()}});
  }));
  out.push_back(guarded(mod, "isolated_spacers", "chacon.block_recursion", [&] {
    const words::Window w = words::window(c.depth);
    const auto hits = words::occurrences(words::Block("11"), w);
    return make(mod, "isolated_spacers", "chacon.block_recursion", hits.empty(),
                {{"depth", c.depth}, {"occurrences_of_11", hits.size()}});
  }));
  return out;
}

// ---------------------------------------------------------------- zsets

std::vector<Record> zset_suite(const RunConfig& c) {
  std::vector<Record> out;
  const std::string mod = "zsets";
  out.push_back(guarded(mod, "h_sets", "chacon.h_sets", [&] {
    const auto h1 = zsets::h_set(1), h2 = zsets::h_set(2);
    const std::vector<Integer> e1{-9, -5, -4, 0, 4, 5, 9}, e2{-27, -14, -13, 0, 13, 14, 27};
    return make(mod, "h_sets", "chacon.h_sets", h1.elements() == e1 && h2.elements() == e2,
                {{"h1", encode_all(h1.elements())}, {"h2", encode_all(h2.elements())}});
  }));
  out.push_back(guarded(mod, "interval_runs", "chacon.long_intervals", [&] {
    json cases = json::array();
    bool ok = true;
    for (unsigned k = 1; k <= 5; ++k)
      for (unsigned m = 2; m <= 7; ++m) {
        const ZSet s = zsets::interval_run(k, m);
        const auto st = zsets::interval_stats(s);
        ok = ok && st.runs.size() == 1 && st.max_run_length == m;
        cases.push_back({{"k", k}, {"m", m}, {"start", encode(s.elements().front())}});
      }
    return make(mod, "interval_runs", "chacon.long_intervals", ok, {{"cases", cases}});
  }));
  out.push_back(guarded(mod, "gap_exclusion", "chacon.not_strongly_mixing", [&] {
    json cases = json::array();
    bool ok = true;
    for (unsigned m = 1; m <= 4; ++m) {
      const Integer g = zsets::gap_element(m);
      const ZSet n = rs::return_set_bruteforce(block_cylinder(1), block_cylinder(1), m + 3,
                                               Interval{g, g})
                         .set;
      ok = ok && !n.contains(g);
      cases.push_back({{"m", m}, {"gap", encode(g)}, {"depth", m + 3}, {"member", n.contains(g)}});
    }
    return make(mod, "gap_exclusion", "chacon.not_strongly_mixing", ok, {{"cases", cases}});
  }));
  out.push_back(guarded(mod, "truncation_stability", "chacon.return_set_decomposition", [&] {
    // Adding a level must not change the sum on the certified range.
    json cases = json::array();
    bool ok = true;
    for (unsigned k = 1; k <= 2; ++k)
      for (unsigned K = k; K < c.trunc; ++K) {
        const Interval r = Interval::symmetric(zsets::h_sum_certified_radius(k, K));
        const auto d = zsets::compare_on(zsets::truncated_h_sum(k, K, r),
                                         zsets::truncated_h_sum(k, K + 1, r), r);
        ok = ok && d.equal();
        cases.push_back({{"k", k}, {"K", K}, {"radius", encode(r.hi)}, {"diff", diff_json(d)}});
      }
    return make(mod, "truncation_stability", "chacon.return_set_decomposition", ok,
                {{"cases", cases}});
  }));
  out.push_back(guarded(mod, "truncated_sum_runs", "chacon.long_intervals", [&] {
    Integer total = 0;
    for (unsigned i = 1; i < c.trunc; ++i) total += pow3(i + 1);
    const ZSet s = zsets::truncated_h_sum(1, c.trunc, Interval::symmetric(total));
    const auto st = zsets::interval_stats(s);
    // interval_run(1, trunc) lies inside H_1 + ... + H_{trunc-1}.
    return make(mod, "truncated_sum_runs", "chacon.long_intervals", st.max_run_length >= c.trunc,
                {{"trunc", c.trunc}, {"size", s.size()}, {"max_run_length", st.max_run_length}});
  }));
  return out;
}

// ---------------------------------------------------------------- returnsets

Record h_oracle(unsigned k, unsigned depth) {
  const std::string name = "h" + std::to_string(k) + "_oracle";
  return guarded("returnsets", name, "chacon.h_sets", [&] {
    const ZSet h = zsets::h_set(k);
    const ZSet n =
        rs::return_set_bruteforce(block_cylinder(k), block_cylinder(k), depth, h.range()).set;
    const auto d = zsets::compare_on(n, h, h.range());
    return make("returnsets", name, "chacon.h_sets", d.equal(),
                {{"depth", depth},
                 {"range", encode(h.range())},
                 {"bruteforce", encode_all(n.elements())},
                 {"h_set", encode_all(h.elements())},
                 {"diff", diff_json(d)}},
                Status::finding);
  });
}

std::vector<Record> returnset_suite(const RunConfig& c) {
  std::vector<Record> out;
  const std::string mod = "returnsets";
  out.push_back(h_oracle(1, 4));
  out.push_back(h_oracle(2, 5));

  out.push_back(guarded(mod, "structured_vs_bruteforce", "chacon.return_set_decomposition", [&] {
    json findings = json::array();
    std::size_t cases = 0, compared = 0;
    for (unsigned k = 1; k <= 2; ++k)
      for (unsigned K = k; K <= std::min(c.trunc, 6U); ++K)
        for (std::int64_t m = -4; m <= 4; ++m) {
          const Integer r = zsets::h_sum_certified_radius(k, K);
          const Interval range = Interval::symmetric(r).shifted(m);
          const ZSet st = rs::return_set_structured(k, m, K, range).set;
          const std::int64_t span = to_i64(r) + std::abs(m) + 2 * words::block_length(k);
          const unsigned depth = rs::required_depth(span);
          const ZSet bf = rs::return_set_bruteforce(block_cylinder(k),
                                                    rs::shifted(block_cylinder(k), m), depth,
                                                    st.certified())
                              .set;
          const auto d = zsets::compare_on(st, bf, st.certified());
          ++cases;
          compared += static_cast<std::size_t>(st.certified().count());
          if (!d.equal())
            findings.push_back({{"k", k}, {"K", K}, {"m", m}, {"diff", diff_json(d)}});
        }
    return make(mod, "structured_vs_bruteforce", "chacon.return_set_decomposition",
                findings.empty(),
                {{"cases", cases}, {"integers_compared", compared}, {"discrepancies", findings}},
                Status::finding);
  }));

  out.push_back(guarded(mod, "symmetry", "chacon.h_sets", [&] {
    bool ok = true;
    json sizes = json::array();
    for (unsigned k = 1; k <= 2; ++k) {
      const std::int64_t r = rs::window_reach(c.depth) - words::block_length(k);
      if (r < 0) continue;
      const ZSet n = rs::return_set_bruteforce(block_cylinder(k), block_cylinder(k), c.depth,
                                               Interval::symmetric(r))
                         .set;
      for (const auto& x : n.elements()) ok = ok && n.contains(-x);
      sizes.push_back({{"k", k}, {"radius", r}, {"size", n.size()}});
    }
    return make(mod, "symmetry", "chacon.h_sets", ok, {{"depth", c.depth}, {"sets", sizes}});
  }));

  out.push_back(guarded(mod, "range_query", "chacon.return_set_decomposition", [&] {
    const std::int64_t reach = rs::window_reach(c.depth) - words::block_length(1);
    const Interval range =
        c.range ? *c.range : Interval::symmetric(std::max<std::int64_t>(0, std::min<std::int64_t>(reach, 200)));
    const ZSet n = rs::return_set_bruteforce(block_cylinder(1), block_cylinder(1), c.depth, range).set;
    return make(mod, "range_query", "chacon.return_set_decomposition", true,
                {{"depth", c.depth}, {"set", encode(n)}});
  }));

  out.push_back(guarded(mod, "weak_mixing_witness", "chacon.weak_mixing", [&] {
    json cases = json::array();
    bool ok = true;
    for (unsigned k = 1; k <= 2; ++k)
      for (std::int64_t m = 1; m <= 3; ++m)
        for (std::int64_t n = 0; n <= 2; ++n) {
          if (m <= n) continue;
          const Integer v = rs::weak_mixing_witness(k, m, n);
          // v in s + N  iff  v - s in N
          const bool in_m = brute_self(k, Interval{v - m, v - m}).contains(v - m);
          const bool in_n = brute_self(k, Interval{v - n, v - n}).contains(v - n);
          ok = ok && in_m && in_n;
          cases.push_back({{"k", k}, {"m", m}, {"n", n}, {"value", encode(v)},
                           {"in_m_shift", in_m}, {"in_n_shift", in_n}});
        }
    return make(mod, "weak_mixing_witness", "chacon.weak_mixing", ok, {{"cases", cases}});
  }));

  out.push_back(guarded(mod, "shift_identity", "transitivity.shift_identity", [&] {
    Rng rng(c.seed);
    const unsigned depth = 6;
    const words::Window w = words::window(depth);
    json failures = json::array();
    std::size_t checked = 0;
    while (checked < 50) {
      const auto word = [&] {
        std::string s(static_cast<std::size_t>(rng.between(1, 4)), '0');
        for (auto& ch : s) ch = rng.coin() ? '1' : '0';
        return words::Block(s);
      };
      const rs::CylinderSet a{word(), rng.between(-3, 3)}, b{word(), rng.between(-3, 3)};
      const std::int64_t g = rng.between(-20, 20);
      if (!rs::occurs(a, w) || !rs::occurs(b, w)) continue;
      ++checked;
      if (!rs::shift_identity_check(a, b, g, depth, Interval{-30, 30}))
        failures.push_back({{"a", a.word.letters()}, {"a_offset", a.offset},
                            {"b", b.word.letters()}, {"b_offset", b.offset}, {"g", g}});
    }
    return make(mod, "shift_identity", "transitivity.shift_identity", failures.empty(),
                {{"triples", checked}, {"seed", c.seed}, {"failures", failures}});
  }));

  out.push_back(guarded(mod, "block_cover", "chacon.block_cover", [&] {
    struct Case {
      std::string word;
      unsigned depth;
    };
    json cases = json::array();
    bool self_cover = false;
    bool all_covered = true;
    for (const auto& [word, depth] : std::vector<Case>{{"0010", 3}, {"1", 3}, {"0010010", 4}}) {
      json entry{{"word", word}, {"depth", depth}};
      try {
        const auto cv = rs::cylinder_to_block_cover({words::Block(word), 0}, depth);
        entry["level"] = cv.level;
        entry["shift"] = cv.shift;
        entry["occurrences_checked"] = cv.occurrences_checked;
        entry["occurrences_at_edge"] = cv.occurrences_at_edge;
        if (word == "0010") self_cover = cv.level == 1 && cv.shift == 0;
      } catch (const Error& e) {
        if (e.code() != Errc::no_cover_found && e.code() != Errc::empty_cylinder) throw;
        entry["error"] = error_json(e);
        all_covered = false;
      }
      cases.push_back(entry);
    }
    Record r = make(mod, "block_cover", "chacon.block_cover", self_cover && all_covered,
                    {{"cases", cases}});
    if (self_cover && !all_covered) r.status = Status::finding;
    return r;
  }));

  out.push_back(guarded(mod, "script_m_nesting", "chacon.script_m_nested", [&] {
    json levels = json::array();
    bool ok = true;
    std::optional<ZSet> prev;
    for (unsigned k = 1; k <= std::min(4U, c.trunc); ++k) {
      const Integer r = zsets::h_sum_certified_radius(k, c.trunc) - chacon_length(k);
      const ZSet mk = rs::script_m(k, c.trunc, Interval::symmetric(r < 0 ? Integer(0) : r)).set;
      if (prev) {
        const Interval common = mk.certified().intersect(prev->certified());
        for (const auto& x : mk.clipped(common).elements()) ok = ok && prev->contains(x);
      }
      levels.push_back({{"k", k},
                        {"certified", encode(mk.certified())},
                        {"size", mk.size()},
                        {"contains_zero", mk.contains(0)}});
      prev = mk;
    }
    return make(mod, "script_m_nesting", "chacon.script_m_nested", ok,
                {{"trunc", c.trunc}, {"levels", levels}});
  }));
  return out;
}

// ---------------------------------------------------------------- thick

std::string_view source_name(rs::PieceSource s) {
  switch (s) {
    case rs::PieceSource::certified_search: return "certified_search";
    case rs::PieceSource::closed_form_run: return "closed_form_run";
    case rs::PieceSource::basis_delta: return "basis_delta";
  }
  return "?";
}

json pieces_json(const rs::ThickSetConstruction& t) {
  json out = json::array();
  for (const auto& p : t.pieces) {
    json j{{"level", p.level},
           {"source", source_name(p.source)},
           {"run_start", encode(p.run.start)},
           {"run_length", p.run.length},
           {"elements", encode_all(p.elements.elements())}};
    if (p.container)
      j["container"] = {{"start", encode(p.container->start)}, {"length", p.container->length}};
    if (p.delta) j["delta"] = encode(*p.delta);
    if (!p.gammas.empty()) j["gammas"] = encode_all(p.gammas);
    out.push_back(j);
  }
  return out;
}

std::vector<Record> thick_suite(const RunConfig& c) {
  std::vector<Record> out;
  const std::string mod = "returnsets";
  const unsigned m_max = std::min(3U, c.trunc - 2);

  std::optional<rs::ThickSetConstruction> chacon;
  out.push_back(guarded(mod, "thick_chacon", "chacon.thick_n_intervals", [&] {
    chacon = rs::build_thick_n_chacon(m_max, c.trunc);
    bool ok = zsets::interval_stats(chacon->union_set).max_run_length >= m_max;
    json evidence = json::array();
    for (const auto& p : chacon->pieces)
      for (unsigned lv = 1; lv <= p.level; ++lv) {
        std::size_t computed = 0, by_run = 0, missing = 0;
        for (const auto& x : p.elements.elements()) {
          const auto mem = rs::script_m_membership(x, lv, c.trunc, *chacon);
          if (!mem.member) ++missing;
          else if (mem.how == rs::Evidence::computed) ++computed;
          else ++by_run;
        }
        ok = ok && missing == 0;
        evidence.push_back({{"piece", p.level}, {"script_m_level", lv}, {"computed", computed},
                            {"run_containment", by_run}, {"missing", missing}});
      }
    return make(mod, "thick_chacon", "chacon.thick_n_intervals", ok,
                {{"m_max", m_max},
                 {"trunc", c.trunc},
                 {"pieces", pieces_json(*chacon)},
                 {"overlaps", chacon->overlaps.size()},
                 {"membership", evidence}});
  }));

  out.push_back(guarded(mod, "mixing_defect", "chacon.thick_strong_mixing", [&] {
    if (!chacon) throw Error(Errc::precondition_violated, "no construction to check");
    const auto d = rs::mixing_defect(*chacon, 1);
    const std::size_t bound = m_max * (m_max - 1) / 2;
    Record r = make(mod, "mixing_defect", "chacon.thick_strong_mixing",
                    d.outside.size() <= bound && d.undecided == 0,
                    {{"outside", encode_all(d.outside)},
                     {"bound", bound},
                     {"brute_checked", d.brute_checked},
                     {"run_certified", d.certified},
                     {"undecided", d.undecided}},
                    Status::finding);
    return r;
  }));

  out.push_back(guarded(mod, "thick_generic", "countable.thick_n_basis", [&] {
    const unsigned basis_depth = 3, gm = 3, K = c.trunc;
    const auto g = rs::build_thick_n_generic(basis_depth, gm, K);
    const Interval range = Interval::symmetric(rs::window_reach(K) - basis_depth);
    bool ok = true;
    // Pieces from level p on lie in N(U_i, U_j) for all i, j <= p.
    for (std::size_t i = 0; i < gm; ++i)
      for (std::size_t j = 0; j < gm; ++j) {
        const ZSet n =
            rs::return_set_bruteforce({g.basis[i], 0}, {g.basis[j], 0}, K, range).set;
        for (const auto& p : g.pieces)
          if (p.level > std::max(i, j))
            for (const auto& x : p.elements.elements()) ok = ok && n.contains(x);
      }
    for (const auto& p : g.pieces) {
      std::vector<Integer> shifts(p.gammas.begin() + 1, p.gammas.end());
      ok = ok && zsets::thick_witness(p.elements, shifts).witness == p.delta;
    }
    json basis = json::array();
    for (const auto& b : g.basis) basis.push_back(b.letters());
    return make(mod, "thick_generic", "countable.thick_n_basis", ok,
                {{"basis_depth", basis_depth}, {"depth", K}, {"basis", basis},
                 {"pieces", pieces_json(g)}});
  }));
  return out;
}

// ---------------------------------------------------------------- torus

torus::Rect random_rect(Rng& rng, std::int64_t q) {
  const auto side = [&](Rational& lo, Rational& hi) {
    std::int64_t a = rng.between(0, q - 1), b = rng.between(0, q - 1);
    while (a == b) b = rng.between(0, q - 1);
    lo = Rational(std::min(a, b), q);
    hi = Rational(std::max(a, b), q);
  };
  Rational xl, xh, yl, yh;
  side(xl, xh);
  side(yl, yh);
  return {xl, xh, yl, yh};
}

json shear_json(const torus::ShearWitness& s) {
  return {{"matrix", encode(s.matrix)},     {"c", s.c},
          {"d", s.d},                       {"c_start", s.c_start},
          {"d_start", s.d_start},           {"c_threshold", encode(s.c_threshold)},
          {"witnesses", encode_all(s.witnesses)}, {"candidates_tried", s.candidates_tried}};
}

bool shear_verified(const torus::ShearWitness& s,
                    const std::vector<std::pair<torus::Rect, torus::Rect>>& pairs) {
  const auto& m = s.matrix;
  bool ok = Integer(m.a()) * m.d() - Integer(m.b()) * m.c() == 1 && s.c > s.c_threshold;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    ok = ok && pairs[i].first.contains(s.witnesses[i]) &&
         pairs[i].second.contains(torus::act(m, s.witnesses[i]));
  return ok;
}

std::vector<Record> torus_suite(const RunConfig& c) {
  using torus::Mat2Int;
  using torus::Rect;
  using torus::TorusPoint;
  std::vector<Record> out;
  const std::string mod = "torus";
  const Rational fifth(1, 5);

  out.push_back(guarded(mod, "act_examples", "torus.action", [&] {
    const bool ok =
        torus::act(Mat2Int::identity(), {Rational(1, 3), Rational(1, 4)}) ==
            TorusPoint(Rational(1, 3), Rational(1, 4)) &&
        torus::act(Mat2Int::horizontal_shear(1), {Rational(1, 2), Rational(3, 4)}) ==
            TorusPoint(Rational(1, 4), Rational(3, 4)) &&
        torus::act(Mat2Int::vertical_shear(6), {fifth, 0}) == TorusPoint(fifth, fifth);
    return make(mod, "act_examples", "torus.action", ok, json::object());
  }));

  for (std::size_t k = 1; k <= 4; ++k) {
    const std::string name = "transitivity_k" + std::to_string(k);
    out.push_back(guarded(mod, name, "torus.k_transitive", [&] {
      Rng rng(c.seed + k);
      std::vector<std::pair<Rect, Rect>> pairs;
      json rects = json::array();
      for (std::size_t i = 0; i < k; ++i) {
        pairs.emplace_back(random_rect(rng, 20), random_rect(rng, 20));
        rects.push_back({{"source", encode(pairs.back().first)},
                         {"target", encode(pairs.back().second)}});
      }
      try {
        const auto s = torus::transitivity_witness(pairs, c.budget);
        json data = shear_json(s);
        data["pairs"] = rects;
        return make(mod, name, "torus.k_transitive", shear_verified(s, pairs), data);
      } catch (const Error& e) {
        if (e.code() != Errc::budget_exhausted) throw;
        return Record{mod, name, "torus.k_transitive", Status::finding,
                      {{"pairs", rects}, {"error", error_json(e)}}};
      }
    }));
  }

  out.push_back(guarded(mod, "transitivity_threshold", "torus.k_transitive", [&] {
    const std::vector<std::pair<Rect, Rect>> pairs{
        {Rect(fifth, 2 * fifth, fifth, 2 * fifth), Rect(3 * fifth, 4 * fifth, 0, fifth)},
        {Rect(0, fifth, 3 * fifth, 4 * fifth), Rect(2 * fifth, 3 * fifth, 2 * fifth, 3 * fifth)}};
    const auto s = torus::transitivity_witness(pairs, c.budget);
    return make(mod, "transitivity_threshold", "torus.k_transitive",
                shear_verified(s, pairs) && s.c >= 6, shear_json(s));
  }));

  out.push_back(guarded(mod, "non_mixing", "torus.not_mixing", [&] {
    const Rect u(3 * fifth, 4 * fifth, 3 * fifth, 4 * fifth);
    const Rect v(fifth, 2 * fifth, fifth, 2 * fifth);
    const auto cert = torus::non_mixing_certificate(u, v);
    std::size_t hits = 0;
    for (std::int64_t a = -1000; a <= 1000; ++a)
      if (torus::intersection_witness(Mat2Int::horizontal_shear(a), u, v)) ++hits;
    bool rejects_overlap = false;
    try {
      torus::non_mixing_certificate(u, u);
    } catch (const Error& e) {
      rejects_overlap = e.code() == Errc::precondition_violated;
    }
    return make(mod, "non_mixing", "torus.not_mixing", hits == 0 && rejects_overlap,
                {{"u", encode(u)},
                 {"v", encode(v)},
                 {"family", cert.family},
                 {"argument", cert.argument},
                 {"image_band", json::array({encode(cert.image_band.first),
                                             encode(cert.image_band.second)})},
                 {"target_band", json::array({encode(cert.target_band.first),
                                              encode(cert.target_band.second)})},
                 {"spot_check_range", json::array({-1000, 1000})},
                 {"spot_check_hits", hits}});
  }));

  out.push_back(guarded(mod, "elasticity", "elastic.definition", [&] {
    Rng rng(c.seed ^ 0x5eedULL);
    const Rect u = random_rect(rng, 20);
    std::vector<Rect> targets;
    std::vector<std::pair<Rect, Rect>> pairs;
    for (int i = 0; i < 3; ++i) {
      targets.push_back(random_rect(rng, 20));
      pairs.emplace_back(u, targets.back());
    }
    const auto s = torus::elasticity_witness(u, targets, c.budget);
    json data = shear_json(s);
    data["source"] = encode(u);
    data["targets"] = encode_all(targets);
    return make(mod, "elasticity", "elastic.definition", shear_verified(s, pairs), data);
  }));
  return out;
}

// ---------------------------------------------------------------- moebius

moebius::GQ random_gq(Rng& rng) {
  return {Rational(rng.between(-20, 20), rng.between(1, 9)),
          Rational(rng.between(-20, 20), rng.between(1, 9))};
}

/// Three distinct points; with `allow_infinity`, one in four triples has infinity.
moebius::Triple random_triple(Rng& rng, bool allow_infinity) {
  using moebius::CP1Point;
  for (;;) {
    moebius::Triple t{CP1Point::finite(random_gq(rng)), CP1Point::finite(random_gq(rng)),
                      CP1Point::finite(random_gq(rng))};
    if (allow_infinity && rng.below(4) == 0) t[rng.below(3)] = CP1Point::infinity();
    if (!(t[0] == t[1]) && !(t[1] == t[2]) && !(t[0] == t[2])) return t;
  }
}

std::vector<Record> moebius_suite(const RunConfig& c) {
  using moebius::CP1Point;
  using moebius::GQ;
  using moebius::Mat2GQ;
  std::vector<Record> out;
  const std::string mod = "moebius";

  out.push_back(guarded(mod, "apply_examples", "moebius.action", [&] {
    const CP1Point p = CP1Point::finite(GQ(Rational(2, 3), Rational(-1, 5)));
    const bool ok = moebius::moebius_apply(Mat2GQ::identity(), p) == p &&
                    moebius::moebius_apply({1, 1, 0, 1}, CP1Point::finite(0)) ==
                        CP1Point::finite(1) &&
                    moebius::moebius_apply({0, 1, 1, 0}, CP1Point::infinity()) ==
                        CP1Point::finite(0);
    return make(mod, "apply_examples", "moebius.action", ok, json::object());
  }));

  out.push_back(guarded(mod, "canonical_matrix", "moebius.canonical_matrix", [&] {
    Rng rng(c.seed);
    std::size_t with_infinity = 0;
    for (int i = 0; i < 100; ++i) {
      const auto t = random_triple(rng, true);
      if (t[0].is_infinity() || t[1].is_infinity() || t[2].is_infinity()) ++with_infinity;
      moebius::canonical_matrix(t[0], t[1], t[2]);  // verifies 0, 1, infinity
    }
    const bool id = moebius::canonical_matrix(CP1Point::finite(0), CP1Point::finite(1),
                                              CP1Point::infinity())
                        .projectively_equal(Mat2GQ::identity());
    const Mat2GQ m = moebius::canonical_matrix(CP1Point::finite(GQ::i()), CP1Point::finite(0),
                                               CP1Point::finite(-GQ::i()));
    return make(mod, "canonical_matrix", "moebius.canonical_matrix", id,
                {{"triples", 100}, {"with_infinity", with_infinity}, {"i_0_minus_i", encode(m)}});
  }));

  out.push_back(guarded(mod, "three_transitive", "moebius.three_transitive", [&] {
    Rng rng(c.seed + 1);
    for (int i = 0; i < 100; ++i) {
      const auto zs = random_triple(rng, true), ws = random_triple(rng, true);
      moebius::solve_three_transitive(zs, ws);  // verifies z_i -> w_i
    }
    const moebius::Triple one_two_three{CP1Point::finite(1), CP1Point::finite(2),
                                        CP1Point::finite(3)};
    const bool id = moebius::solve_three_transitive(one_two_three, one_two_three)
                        .projectively_equal(Mat2GQ::identity());
    return make(mod, "three_transitive", "moebius.three_transitive", id, {{"pairs", 100}});
  }));

  out.push_back(guarded(mod, "product_entries", "moebius.product_entries", [&] {
    Rng rng(c.seed + 2);
    for (int i = 0; i < 100; ++i) {
      const auto zs = random_triple(rng, false), ws = random_triple(rng, false);
      moebius::product_entries(zs, ws);  // checks proportionality to the solver
    }
    const moebius::Triple t{CP1Point::finite(1), CP1Point::finite(2), CP1Point::finite(3)};
    const auto e = moebius::product_entries(t, t);
    const bool ok = e.a == GQ(2) && e.b == GQ(0) && e.c == GQ(0) && e.d == GQ(2);
    return make(mod, "product_entries", "moebius.product_entries", ok,
                {{"pairs", 100},
                 {"at_1_2_3", {encode(e.a), encode(e.b), encode(e.c), encode(e.d)}}});
  }));

  out.push_back(guarded(mod, "bound_check", "moebius.not_four_transitive", [&] {
    const Rational eps(1, 100);
    const auto rep = moebius::bound_check(eps, eps, c.samples, c.seed);
    json violations = json::array();
    for (const auto& v : rep.violations)
      violations.push_back({{"zs", encode_all(std::vector<GQ>(v.zs.begin(), v.zs.end()))},
                            {"ws", encode_all(std::vector<GQ>(v.ws.begin(), v.ws.end()))},
                            {"z", encode(v.z)},
                            {"ratio_sq", v.ratio_sq ? encode(*v.ratio_sq) : json(nullptr)}});
    bool rejects_large = false;
    try {
      moebius::bound_check(Rational(1, 4), eps, 1, c.seed);
    } catch (const Error& e) {
      rejects_large = e.code() == Errc::precondition_violated;
    }
    Record r = make(mod, "bound_check", "moebius.not_four_transitive", rep.violations.empty(),
                    {{"eps", encode(rep.eps)},
                     {"eps_prime", encode(rep.eps_prime)},
                     {"samples", rep.samples},
                     {"seed", rep.seed},
                     {"passed", rep.passed},
                     {"max_ratio_sq", encode(rep.max_ratio_sq)},
                     {"violations", violations},
                     {"evidence", "sampled"}},
                    Status::finding);
    if (!rejects_large) r.status = Status::fail;
    return r;
  }));

  const auto search = [&](const std::string& name, const moebius::Ball& u4,
                          const moebius::Ball& v4, bool expect_witness) {
    return guarded(mod, name, "moebius.not_four_transitive", [&] {
      const Rational eps(1, 100);
      const std::array<moebius::TargetPair, 4> targets{
          moebius::TargetPair{{1, eps}, {1, eps}}, moebius::TargetPair{{2, eps}, {2, eps}},
          moebius::TargetPair{{3, eps}, {3, eps}}, moebius::TargetPair{u4, v4}};
      const auto rep = moebius::four_transitivity_search(targets, c.budget, c.seed);
      json data{{"budget", rep.budget},
                {"seed", rep.seed},
                {"samples", rep.samples},
                {"u4", {{"center", encode(u4.center())}, {"radius", encode(u4.radius())}}},
                {"v4", {{"center", encode(v4.center())}, {"radius", encode(v4.radius())}}},
                {"found", rep.witness.has_value()}};
      data["closest_distance_sq"] =
          rep.closest_distance_sq ? encode(*rep.closest_distance_sq) : json(nullptr);
      data["closest_image"] = rep.closest_image ? encode(*rep.closest_image) : json(nullptr);
      data["max_modulus_sq"] = rep.max_modulus_sq ? encode(*rep.max_modulus_sq) : json(nullptr);
      if (rep.witness) {
        data["witness"] = {{"z", encode(rep.witness->z)}, {"image", encode(rep.witness->image)}};
      }
      return make(mod, name, "moebius.not_four_transitive",
                  rep.witness.has_value() == expect_witness, data,
                  expect_witness ? Status::fail : Status::finding);
    });
  };
  out.push_back(search("four_transitivity_search", {0, Rational(1, 100)}, {4, Rational(1, 2)},
                       false));
  out.push_back(
      search("four_transitivity_control", {0, Rational(1, 100)}, {0, Rational(3)}, true));
  return out;
}

}  // namespace

Report dispatch(const RunConfig& c) {
  validate(c);
  Report r{c, {}};
  const auto add = [&](std::vector<Record> v) {
    for (auto& x : v) r.records.push_back(std::move(x));
  };
  const bool all = c.suite == Suite::all;
  if (all || c.suite == Suite::chacon) add(chacon_suite(c));
  if (all || c.suite == Suite::zset) add(zset_suite(c));
  if (all || c.suite == Suite::returnset) add(returnset_suite(c));
  if (all || c.suite == Suite::thick) add(thick_suite(c));
  if (all || c.suite == Suite::torus) add(torus_suite(c));
  if (all || c.suite == Suite::moebius) add(moebius_suite(c));
  std::stable_sort(r.records.begin(), r.records.end(), [](const Record& a, const Record& b) {
    return std::tie(a.module, a.name) < std::tie(b.module, b.name);
  });
  return r;
}

}  // namespace thickmix::cli
