#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "thickmix/numeric.hpp"

namespace thickmix::torus {

/// Integer 2x2 matrix of determinant 1. Products are overflow-checked.
class Mat2Int {
 public:
  Mat2Int(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

  static Mat2Int identity() { return {1, 0, 0, 1}; }
  /// [[1, d], [0, 1]]
  static Mat2Int horizontal_shear(std::int64_t d) { return {1, d, 0, 1}; }
  /// [[1, 0], [c, 1]]
  static Mat2Int vertical_shear(std::int64_t c) { return {1, 0, c, 1}; }
  /// [[0, 1], [-1, 0]]
  static Mat2Int rotation() { return {0, 1, -1, 0}; }

  std::int64_t a() const noexcept { return a_; }
  std::int64_t b() const noexcept { return b_; }
  std::int64_t c() const noexcept { return c_; }
  std::int64_t d() const noexcept { return d_; }

  Mat2Int operator*(const Mat2Int& o) const;
  friend bool operator==(const Mat2Int&, const Mat2Int&) = default;

 private:
  std::int64_t a_, b_, c_, d_;
};

/// Point of R^2 / Z^2, coordinates reduced into [0, 1).
class TorusPoint {
 public:
  TorusPoint(const Rational& x, const Rational& y) : x_(frac(x)), y_(frac(y)) {}
  const Rational& x() const noexcept { return x_; }
  const Rational& y() const noexcept { return y_; }
  friend bool operator==(const TorusPoint&, const TorusPoint&) = default;

 private:
  Rational x_, y_;
};

/// Open rectangle (x_lo, x_hi) x (y_lo, y_hi) with corners in [0, 1).
class Rect {
 public:
  Rect(Rational x_lo, Rational x_hi, Rational y_lo, Rational y_hi);

  const Rational& x_lo() const noexcept { return x_lo_; }
  const Rational& x_hi() const noexcept { return x_hi_; }
  const Rational& y_lo() const noexcept { return y_lo_; }
  const Rational& y_hi() const noexcept { return y_hi_; }
  Rational width() const { return x_hi_ - x_lo_; }
  Rational height() const { return y_hi_ - y_lo_; }

  bool contains(const TorusPoint& p) const {
    return x_lo_ < p.x() && p.x() < x_hi_ && y_lo_ < p.y() && p.y() < y_hi_;
  }
  friend bool operator==(const Rect&, const Rect&) = default;

 private:
  Rational x_lo_, x_hi_, y_lo_, y_hi_;
};

TorusPoint act(const Mat2Int& m, const TorusPoint& p);

/// Some p in v with act(m, p) in w, or nothing when m(v) misses w.
/// Each pair of integer wraparounds cuts v to a convex polygon; the first
/// polygon with positive area yields the average of its vertices.
std::optional<TorusPoint> intersection_witness(const Mat2Int& m, const Rect& v, const Rect& w);

struct ShearWitness {
  Mat2Int matrix = Mat2Int::identity();
  std::int64_t c = 0;
  std::int64_t d = 0;
  std::int64_t c_start = 0;  // floor(1 / min source width) + 1
  std::int64_t d_start = 0;  // floor(1 / min target height) + 1
  Rational c_threshold;      // 1 / min source width
  std::vector<TorusPoint> witnesses;
  std::uint64_t candidates_tried = 0;
};

/// Searches M = horizontal_shear(d) * vertical_shear(c) over (c, d) >= (c_start, d_start)
/// in diagonal order, trying at most `budget` candidates. Throws budget_exhausted.
ShearWitness transitivity_witness(std::span<const std::pair<Rect, Rect>> pairs,
                                  std::uint64_t budget);

/// One source rectangle meeting every target under a single matrix.
ShearWitness elasticity_witness(const Rect& u, std::span<const Rect> targets, std::uint64_t budget);

struct NonMixingCertificate {
  Rect u;
  Rect v;
  /// y-projection of g_a u for every a; equals u's y-interval.
  std::pair<Rational, Rational> image_band;
  std::pair<Rational, Rational> target_band;
  std::string family;
  std::string argument;
};

/// g_a = [[1, a], [0, 1]] fixes y, so g_a u never meets v when the y-intervals
/// have disjoint closures. Throws precondition_violated otherwise.
NonMixingCertificate non_mixing_certificate(const Rect& u, const Rect& v);

}  // namespace thickmix::torus
