#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "thickmix/numeric.hpp"
#include "thickmix/random.hpp"

namespace thickmix::moebius {

/// Gaussian rational re + im i.
class GQ {
 public:
  GQ() = default;
  GQ(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im)) {}
  GQ(long re) : re_(re), im_(0) {}

  static GQ i() { return {0, 1}; }

  const Rational& re() const noexcept { return re_; }
  const Rational& im() const noexcept { return im_; }
  bool is_zero() const { return re_ == 0 && im_ == 0; }
  GQ conj() const { return {re_, -im_}; }
  /// |z|^2
  Rational norm2() const { return re_ * re_ + im_ * im_; }

  friend GQ operator+(const GQ& a, const GQ& b) { return {a.re_ + b.re_, a.im_ + b.im_}; }
  friend GQ operator-(const GQ& a, const GQ& b) { return {a.re_ - b.re_, a.im_ - b.im_}; }
  friend GQ operator-(const GQ& a) { return {-a.re_, -a.im_}; }
  friend GQ operator*(const GQ& a, const GQ& b) {
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
  }
  /// Throws not_finite on division by zero.
  friend GQ operator/(const GQ& a, const GQ& b);
  friend bool operator==(const GQ&, const GQ&) = default;

 private:
  Rational re_, im_;
};

/// Point (z : w) of CP^1; infinity is (1 : 0).
class CP1Point {
 public:
  CP1Point(GQ z, GQ w);
  static CP1Point finite(GQ z) { return {std::move(z), GQ(1)}; }
  static CP1Point infinity() { return {GQ(1), GQ(0)}; }

  const GQ& z() const noexcept { return z_; }
  const GQ& w() const noexcept { return w_; }
  bool is_infinity() const { return w_.is_zero(); }
  /// z / w; throws not_finite at infinity.
  GQ value() const;

  /// Projective equality, z w' = z' w.
  friend bool operator==(const CP1Point& p, const CP1Point& q) {
    return p.z_ * q.w_ == q.z_ * p.w_;
  }

 private:
  GQ z_, w_;
};

/// [[a, b], [c, d]] with ad - bc != 0.
class Mat2GQ {
 public:
  Mat2GQ(GQ a, GQ b, GQ c, GQ d);
  static Mat2GQ identity() { return {1, 0, 0, 1}; }

  const GQ& a() const noexcept { return a_; }
  const GQ& b() const noexcept { return b_; }
  const GQ& c() const noexcept { return c_; }
  const GQ& d() const noexcept { return d_; }
  GQ det() const { return a_ * d_ - b_ * c_; }
  /// [[d, -b], [-c, a]], the inverse up to the scalar det.
  Mat2GQ adjugate() const { return {d_, -b_, -c_, a_}; }
  Mat2GQ operator*(const Mat2GQ& o) const;

  /// Equal up to a nonzero scalar.
  bool projectively_equal(const Mat2GQ& o) const;
  friend bool operator==(const Mat2GQ&, const Mat2GQ&) = default;

 private:
  GQ a_, b_, c_, d_;
};

/// Open disk |z - center| < radius.
class Ball {
 public:
  Ball(GQ center, Rational radius);
  const GQ& center() const noexcept { return center_; }
  const Rational& radius() const noexcept { return radius_; }
  bool contains(const GQ& z) const { return (z - center_).norm2() < radius_ * radius_; }
  friend bool operator==(const Ball&, const Ball&) = default;

 private:
  GQ center_;
  Rational radius_;
};

using Triple = std::array<CP1Point, 3>;

CP1Point moebius_apply(const Mat2GQ& m, const CP1Point& p);

/// Sends z1, z2, z3 to 0, 1, infinity. Throws points_not_distinct.
Mat2GQ canonical_matrix(const CP1Point& z1, const CP1Point& z2, const CP1Point& z3);

/// adj(canonical(ws)) * canonical(zs), sending zs[i] to ws[i].
Mat2GQ solve_three_transitive(const Triple& zs, const Triple& ws);

struct Entries {
  GQ a, b, c, d;
};

/// Closed-form entries of adj(canonical(ws)) * canonical(zs) for finite
/// points, checked against the solver up to scale. Throws not_finite.
Entries product_entries(const Triple& zs, const Triple& ws);

/// Grid points per unit radius used when sampling balls.
inline constexpr std::int64_t kBallGrid = 1000;

/// center + radius (u + v i) / q with u^2 + v^2 < q^2, uniform over that grid.
GQ sample_in_ball(const Ball& b, Rng& rng, std::int64_t q = kBallGrid);

/// Largest eps, eps' accepted by bound_check.
inline const Rational kBoundThreshold{1, 100};

struct BoundViolation {
  std::array<GQ, 3> zs, ws;
  GQ z;
  std::optional<Rational> ratio_sq;  // absent when cz + d = 0
};

struct BoundReport {
  Rational eps, eps_prime;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::uint64_t passed = 0;
  Rational max_ratio_sq;
  std::vector<BoundViolation> violations;
};

/// Samples z_i, w_i in B(i, eps), z in B(0, eps') and tests
/// |az + b|^2 <= 9 |cz + d|^2 for the product entries.
BoundReport bound_check(const Rational& eps, const Rational& eps_prime, std::uint64_t n_samples,
                        std::uint64_t seed);

struct TargetPair {
  Ball u, v;
};

struct FourWitness {
  std::array<GQ, 3> zs, ws;
  GQ z;
  GQ image;
};

struct SearchReport {
  std::optional<FourWitness> witness;
  std::uint64_t budget = 0;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  /// Smallest |gamma(z) - center of the fourth target|^2 seen.
  std::optional<Rational> closest_distance_sq;
  std::optional<GQ> closest_image;
  std::optional<Rational> max_modulus_sq;
};

/// Draws z_i in targets[i].u, w_i in targets[i].v (i < 3) and z in
/// targets[3].u, and tests whether gamma(z) lands in targets[3].v.
SearchReport four_transitivity_search(const std::array<TargetPair, 4>& targets,
                                      std::uint64_t budget, std::uint64_t seed);

}  // namespace thickmix::moebius
