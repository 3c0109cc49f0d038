#include "thickmix/torus.hpp"

#include "thickmix/error.hpp"

#include <algorithm>

namespace thickmix::torus {

namespace {

std::int64_t checked_dot(std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t s) {
  std::int64_t x, y, z;
  if (__builtin_mul_overflow(p, q, &x) || __builtin_mul_overflow(r, s, &y) ||
      __builtin_add_overflow(x, y, &z))
    throw Error(Errc::invalid_argument, "matrix entry overflows 64 bits");
  return z;
}

}  // namespace

Mat2Int::Mat2Int(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d)
    : a_(a), b_(b), c_(c), d_(d) {
  if (Integer(a) * d - Integer(b) * c != 1)
    throw Error(Errc::invalid_argument, "determinant must be 1");
}

Mat2Int Mat2Int::operator*(const Mat2Int& o) const {
  return {checked_dot(a_, o.a_, b_, o.c_), checked_dot(a_, o.b_, b_, o.d_),
          checked_dot(c_, o.a_, d_, o.c_), checked_dot(c_, o.b_, d_, o.d_)};
}

Rect::Rect(Rational x_lo, Rational x_hi, Rational y_lo, Rational y_hi)
    : x_lo_(std::move(x_lo)), x_hi_(std::move(x_hi)), y_lo_(std::move(y_lo)), y_hi_(std::move(y_hi)) {
  for (const Rational* r : {&x_lo_, &x_hi_, &y_lo_, &y_hi_})
    if (*r < 0 || *r >= 1) throw Error(Errc::invalid_argument, "rectangle corner outside [0, 1)");
  if (x_lo_ >= x_hi_ || y_lo_ >= y_hi_)
    throw Error(Errc::invalid_argument, "rectangle must have positive width and height");
}

TorusPoint act(const Mat2Int& m, const TorusPoint& p) {
  return {m.a() * p.x() + m.b() * p.y(), m.c() * p.x() + m.d() * p.y()};
}

namespace {

struct Vec {
  Rational x, y;
};
using Polygon = std::vector<Vec>;

/// Keeps the part of a convex polygon where sign * (a x + b y - c) >= 0.
Polygon clip(const Polygon& poly, std::int64_t a, std::int64_t b, const Rational& c, int sign) {
  Polygon out;
  const auto f = [&](const Vec& p) { return sign * (a * p.x + b * p.y - c); };
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Vec& p = poly[i];
    const Vec& q = poly[(i + 1) % poly.size()];
    const Rational fp = f(p), fq = f(q);
    if (fp >= 0) out.push_back(p);
    if ((fp > 0 && fq < 0) || (fp < 0 && fq > 0)) {
      const Rational t = fp / (fp - fq);
      out.push_back({p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
    }
  }
  return out;
}

Rational twice_area(const Polygon& poly) {
  Rational s = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Vec& p = poly[i];
    const Vec& q = poly[(i + 1) % poly.size()];
    s += p.x * q.y - q.x * p.y;
  }
  return abs(s);
}

/// Integers j with (a x + b y) - j meeting the open band (lo, hi) somewhere on poly.
std::pair<Integer, Integer> wraps(const Polygon& poly, std::int64_t a, std::int64_t b,
                                  const Rational& lo, const Rational& hi) {
  Rational mn = a * poly[0].x + b * poly[0].y, mx = mn;
  for (const auto& p : poly) {
    const Rational v = a * p.x + b * p.y;
    mn = std::min(mn, v);
    mx = std::max(mx, v);
  }
  return {floor(mn - hi), floor(mx - lo) + 1};
}

/// Cuts poly to lo + j < a x + b y < hi + j for each wraparound j.
std::vector<Polygon> strips(const Polygon& poly, std::int64_t a, std::int64_t b,
                            const Rational& lo, const Rational& hi) {
  std::vector<Polygon> out;
  const auto [first, last] = wraps(poly, a, b, lo, hi);
  for (Integer j = first; j <= last; ++j) {
    const Rational shift(j);
    Polygon p = clip(poly, a, b, lo + shift, 1);
    if (p.size() >= 3) p = clip(p, a, b, hi + shift, -1);
    if (p.size() >= 3 && twice_area(p) > 0) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

std::optional<TorusPoint> intersection_witness(const Mat2Int& m, const Rect& v, const Rect& w) {
  const Polygon box{{v.x_lo(), v.y_lo()}, {v.x_hi(), v.y_lo()}, {v.x_hi(), v.y_hi()},
                    {v.x_lo(), v.y_hi()}};
  for (const auto& row : strips(box, m.c(), m.d(), w.y_lo(), w.y_hi()))
    for (const auto& cell : strips(row, m.a(), m.b(), w.x_lo(), w.x_hi())) {
      Vec mid{0, 0};
      for (const auto& p : cell) {
        mid.x += p.x;
        mid.y += p.y;
      }
      mid.x /= static_cast<long>(cell.size());
      mid.y /= static_cast<long>(cell.size());
      const TorusPoint p(mid.x, mid.y);
      if (!v.contains(p) || !w.contains(act(m, p)))
        throw Error(Errc::postcondition_failed, "polygon witness fails strict membership");
      return p;
    }
  return std::nullopt;
}

ShearWitness transitivity_witness(std::span<const std::pair<Rect, Rect>> pairs,
                                  std::uint64_t budget) {
  if (pairs.empty()) throw Error(Errc::invalid_argument, "no rectangle pairs");
  Rational min_width = pairs[0].first.width(), min_height = pairs[0].second.height();
  for (const auto& [v, w] : pairs) {
    min_width = std::min(min_width, v.width());
    min_height = std::min(min_height, w.height());
  }
  ShearWitness out;
  out.c_threshold = 1 / min_width;
  out.c_start = to_i64(floor(out.c_threshold)) + 1;
  out.d_start = to_i64(floor(1 / min_height)) + 1;

  for (std::uint64_t s = 0; out.candidates_tried < budget; ++s)
    for (std::uint64_t t = 0; t <= s && out.candidates_tried < budget; ++t) {
      ++out.candidates_tried;
      const std::int64_t c = out.c_start + static_cast<std::int64_t>(t);
      const std::int64_t d = out.d_start + static_cast<std::int64_t>(s - t);
      const Mat2Int m = Mat2Int::horizontal_shear(d) * Mat2Int::vertical_shear(c);
      std::vector<TorusPoint> found;
      for (const auto& [v, w] : pairs) {
        auto p = intersection_witness(m, v, w);
        if (!p) break;
        found.push_back(std::move(*p));
      }
      if (found.size() == pairs.size()) {
        out.matrix = m;
        out.c = c;
        out.d = d;
        out.witnesses = std::move(found);
        return out;
      }
    }
  throw Error(Errc::budget_exhausted,
              "no shear pair among " + std::to_string(budget) + " candidates");
}

ShearWitness elasticity_witness(const Rect& u, std::span<const Rect> targets,
                                std::uint64_t budget) {
  std::vector<std::pair<Rect, Rect>> pairs;
  for (const auto& v : targets) pairs.emplace_back(u, v);
  return transitivity_witness(pairs, budget);
}

NonMixingCertificate non_mixing_certificate(const Rect& u, const Rect& v) {
  if (!(u.y_hi() <= v.y_lo() || v.y_hi() <= u.y_lo()))
    throw Error(Errc::precondition_violated, "y-intervals overlap");
  return {u,
          v,
          {u.y_lo(), u.y_hi()},
          {v.y_lo(), v.y_hi()},
          "g_a = [[1, a], [0, 1]], a in Z",
          "g_a(x, y) = (x + a y, y) keeps the y-interval of u, which is disjoint from that of v, "
          "so g_a u misses v for every a; N(u, v) omits the infinite set {g_a} and is not cofinite"};
}

}  // namespace thickmix::torus
