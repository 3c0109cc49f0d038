#include "thickmix/error.hpp"
#include "thickmix/numeric.hpp"
#include "thickmix/random.hpp"

#include <limits>

namespace thickmix {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::depth_exceeds_cap: return "depth-exceeds-cap";
    case Errc::invalid_argument: return "invalid-argument";
    case Errc::level_order: return "level-order";
    case Errc::unreachable_range: return "unreachable-range";
    case Errc::uncertified_compare: return "uncertified-compare";
    case Errc::empty_cylinder: return "empty-cylinder";
    case Errc::no_cover_found: return "no-cover-found";
    case Errc::equal_shifts: return "equal-shifts";
    case Errc::run_not_found: return "run-not-found";
    case Errc::empty_intersection: return "empty-intersection";
    case Errc::interval_run_broken: return "interval-run-broken";
    case Errc::points_not_distinct: return "points-not-distinct";
    case Errc::singular_matrix: return "singular-matrix";
    case Errc::not_finite: return "not-finite";
    case Errc::budget_exhausted: return "budget-exhausted";
    case Errc::precondition_violated: return "precondition-violated";
    case Errc::postcondition_failed: return "postcondition-failed";
  }
  return "unknown";
}

Integer pow3(unsigned e) {
  Integer r = 1;
  for (unsigned i = 0; i < e; ++i) r *= 3;
  return r;
}

Integer chacon_length(unsigned n) { return (pow3(n + 1) - 1) / 2; }

bool fits_i64(const Integer& x) {
  return x >= std::numeric_limits<std::int64_t>::min() &&
         x <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t to_i64(const Integer& x) {
  if (!fits_i64(x))
    throw Error(Errc::invalid_argument, "integer " + x.str() + " exceeds 64 bits");
  return x.convert_to<std::int64_t>();
}

std::int64_t chacon_length_i64(unsigned n) { return to_i64(chacon_length(n)); }

std::string to_fraction_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rational(const std::string& s) {
  try {
    return Rational(s);
  } catch (const std::exception&) {
    throw Error(Errc::invalid_argument, "not a rational: '" + s + "'");
  }
}

Integer floor(const Rational& r) {
  using boost::multiprecision::mpz_int;
  mpz_int num = numerator(r);
  mpz_int den = denominator(r);
  mpz_int q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) q -= 1;
  return Integer(q.str());
}

Rational frac(const Rational& r) {
  using boost::multiprecision::mpz_int;
  mpz_int num = numerator(r);
  mpz_int den = denominator(r);
  mpz_int q = num / den;
  if (num < 0 && q * den != num) q -= 1;
  return r - Rational(q);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw Error(Errc::invalid_argument, "Rng::below(0)");
  // Reject the top partial bucket so every residue is equally likely.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw Error(Errc::invalid_argument, "Rng::between with hi < lo");
  const auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(engine_());
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + below(span));
}

}  // namespace thickmix
