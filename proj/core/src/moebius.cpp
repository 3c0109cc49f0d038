#include "thickmix/moebius.hpp"

#include "thickmix/error.hpp"

namespace thickmix::moebius {

GQ operator/(const GQ& a, const GQ& b) {
  const Rational n = b.norm2();
  if (n == 0) throw Error(Errc::not_finite, "division by zero");
  const GQ p = a * b.conj();
  return {p.re() / n, p.im() / n};
}

CP1Point::CP1Point(GQ z, GQ w) : z_(std::move(z)), w_(std::move(w)) {
  if (z_.is_zero() && w_.is_zero()) throw Error(Errc::invalid_argument, "(0 : 0) is not a point");
}

GQ CP1Point::value() const {
  if (is_infinity()) throw Error(Errc::not_finite, "point at infinity");
  return z_ / w_;
}

Mat2GQ::Mat2GQ(GQ a, GQ b, GQ c, GQ d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (det().is_zero()) throw Error(Errc::singular_matrix, "determinant is zero");
}

Mat2GQ Mat2GQ::operator*(const Mat2GQ& o) const {
  return {a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_, c_ * o.a_ + d_ * o.c_,
          c_ * o.b_ + d_ * o.d_};
}

bool Mat2GQ::projectively_equal(const Mat2GQ& o) const {
  // Rank one of the 2x4 matrix of entries: all 2x2 minors vanish.
  const std::array<const GQ*, 4> p{&a_, &b_, &c_, &d_}, q{&o.a_, &o.b_, &o.c_, &o.d_};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (!(*p[i] * *q[j] - *p[j] * *q[i]).is_zero()) return false;
  return true;
}

Ball::Ball(GQ center, Rational radius) : center_(std::move(center)), radius_(std::move(radius)) {
  if (radius_ <= 0) throw Error(Errc::invalid_argument, "ball radius must be positive");
}

CP1Point moebius_apply(const Mat2GQ& m, const CP1Point& p) {
  return {m.a() * p.z() + m.b() * p.w(), m.c() * p.z() + m.d() * p.w()};
}

namespace {

/// x_p y_q - y_p x_q; zero iff p and q coincide projectively.
GQ cross(const CP1Point& p, const CP1Point& q) { return p.z() * q.w() - p.w() * q.z(); }

Mat2GQ canonical_unchecked(const CP1Point& z1, const CP1Point& z2, const CP1Point& z3) {
  const GQ d23 = cross(z2, z3), d21 = cross(z2, z1);
  if (d23.is_zero() || d21.is_zero() || cross(z1, z3).is_zero())
    throw Error(Errc::points_not_distinct, "canonical matrix needs three distinct points");
  // Row 1 vanishes at z1, row 2 at z3; the scales make z2 go to 1. For
  // finite points this is [[z2 - z3, -z1 (z2 - z3)], [z2 - z1, -z3 (z2 - z1)]].
  return {d23 * z1.w(), -(d23 * z1.z()), d21 * z3.w(), -(d21 * z3.z())};
}

}  // namespace

Mat2GQ canonical_matrix(const CP1Point& z1, const CP1Point& z2, const CP1Point& z3) {
  Mat2GQ m = canonical_unchecked(z1, z2, z3);
  if (!(moebius_apply(m, z1) == CP1Point::finite(0)) ||
      !(moebius_apply(m, z2) == CP1Point::finite(1)) ||
      !(moebius_apply(m, z3) == CP1Point::infinity()))
    throw Error(Errc::postcondition_failed, "canonical matrix misses 0, 1, infinity");
  return m;
}

Mat2GQ solve_three_transitive(const Triple& zs, const Triple& ws) {
  const Mat2GQ m = canonical_matrix(ws[0], ws[1], ws[2]).adjugate() *
                   canonical_matrix(zs[0], zs[1], zs[2]);
  for (std::size_t i = 0; i < 3; ++i)
    if (!(moebius_apply(m, zs[i]) == ws[i]))
      throw Error(Errc::postcondition_failed, "solver misses a prescribed image");
  return m;
}

Entries product_entries(const Triple& zs, const Triple& ws) {
  std::array<GQ, 3> z, w;
  for (std::size_t i = 0; i < 3; ++i) {
    z[i] = zs[i].value();
    w[i] = ws[i].value();
  }
  const GQ pw = w[1] - w[0], qw = w[2] - w[1];
  const GQ pz = z[2] - z[1], qz = z[1] - z[0];
  Entries e{w[2] * pw * pz - w[0] * qw * qz, -(w[2] * z[0] * pw * pz) + w[0] * z[2] * qw * qz,
            pw * pz - qw * qz, -(z[0] * pw * pz) + z[2] * qw * qz};
  if (!Mat2GQ(e.a, e.b, e.c, e.d).projectively_equal(solve_three_transitive(zs, ws)))
    throw Error(Errc::postcondition_failed, "entry formulas disagree with the solver");
  return e;
}

GQ sample_in_ball(const Ball& b, Rng& rng, std::int64_t q) {
  if (q < 1) throw Error(Errc::invalid_argument, "grid must be positive");
  for (;;) {
    const std::int64_t u = rng.between(-(q - 1), q - 1);
    const std::int64_t v = rng.between(-(q - 1), q - 1);
    if (u * u + v * v >= q * q) continue;
    return b.center() + GQ(b.radius() * Rational(u, q), b.radius() * Rational(v, q));
  }
}

namespace {

std::array<GQ, 3> draw_three(const std::array<Ball, 3>& balls, Rng& rng) {
  std::array<GQ, 3> out;
  for (std::size_t i = 0; i < 3; ++i) out[i] = sample_in_ball(balls[i], rng);
  return out;
}

Triple as_points(const std::array<GQ, 3>& v) {
  return {CP1Point::finite(v[0]), CP1Point::finite(v[1]), CP1Point::finite(v[2])};
}

}  // namespace

BoundReport bound_check(const Rational& eps, const Rational& eps_prime, std::uint64_t n_samples,
                        std::uint64_t seed) {
  if (eps <= 0 || eps_prime <= 0 || eps > kBoundThreshold || eps_prime > kBoundThreshold)
    throw Error(Errc::precondition_violated,
                "eps and eps' must lie in (0, " + to_fraction_string(kBoundThreshold) + "]");
  BoundReport rep{eps, eps_prime, n_samples, seed, 0, 0, {}};
  const std::array<Ball, 3> near{Ball(1, eps), Ball(2, eps), Ball(3, eps)};
  const Ball origin(0, eps_prime);
  Rng rng(seed);
  for (std::uint64_t s = 0; s < n_samples; ++s) {
    const auto zs = draw_three(near, rng);
    const auto ws = draw_three(near, rng);
    const GQ z = sample_in_ball(origin, rng);
    const Entries e = product_entries(as_points(zs), as_points(ws));
    const Rational num = (e.a * z + e.b).norm2();
    const Rational den = (e.c * z + e.d).norm2();
    if (den == 0) {
      rep.violations.push_back({zs, ws, z, std::nullopt});
      continue;
    }
    const Rational ratio = num / den;
    if (ratio > rep.max_ratio_sq) rep.max_ratio_sq = ratio;
    if (num <= 9 * den)
      ++rep.passed;
    else
      rep.violations.push_back({zs, ws, z, ratio});
  }
  return rep;
}

SearchReport four_transitivity_search(const std::array<TargetPair, 4>& targets,
                                      std::uint64_t budget, std::uint64_t seed) {
  SearchReport rep;
  rep.budget = budget;
  rep.seed = seed;
  const std::array<Ball, 3> us{targets[0].u, targets[1].u, targets[2].u};
  const std::array<Ball, 3> vs{targets[0].v, targets[1].v, targets[2].v};
  const Ball& u4 = targets[3].u;
  const Ball& v4 = targets[3].v;
  Rng rng(seed);
  for (; rep.samples < budget;) {
    ++rep.samples;
    const auto zs = draw_three(us, rng);
    const auto ws = draw_three(vs, rng);
    const GQ z = sample_in_ball(u4, rng);
    Triple zp = as_points(zs), wp = as_points(ws);
    // Sampled points of overlapping balls may coincide.
    // Only a reported witness needs the verified solver.
    Mat2GQ m = Mat2GQ::identity();
    try {
      m = canonical_unchecked(wp[0], wp[1], wp[2]).adjugate() *
          canonical_unchecked(zp[0], zp[1], zp[2]);
    } catch (const Error& e) {
      if (e.code() != Errc::points_not_distinct) throw;
      continue;
    }
    const CP1Point img = moebius_apply(m, CP1Point::finite(z));
    if (img.is_infinity()) continue;
    const GQ y = img.value();
    const Rational mod = y.norm2();
    const Rational dist = (y - v4.center()).norm2();
    if (!rep.max_modulus_sq || mod > *rep.max_modulus_sq) rep.max_modulus_sq = mod;
    if (!rep.closest_distance_sq || dist < *rep.closest_distance_sq) {
      rep.closest_distance_sq = dist;
      rep.closest_image = y;
    }
    if (v4.contains(y)) {
      // Re-verify every membership before reporting.
      m = solve_three_transitive(zp, wp);
      bool ok = u4.contains(z) && moebius_apply(m, CP1Point::finite(z)) == CP1Point::finite(y);
      for (std::size_t i = 0; i < 3; ++i)
        ok = ok && us[i].contains(zs[i]) && vs[i].contains(ws[i]) &&
             moebius_apply(m, zp[i]) == wp[i];
      if (!ok) throw Error(Errc::postcondition_failed, "search witness fails verification");
      rep.witness = FourWitness{zs, ws, z, y};
      return rep;
    }
  }
  return rep;
}

}  // namespace thickmix::moebius
