#include "codec.hpp"

namespace thickmix::cli {

json encode(const Integer& x) {
  if (fits_i64(x)) return to_i64(x);
  return x.str();
}

json encode(const Rational& r) { return to_fraction_string(r); }

json encode(const moebius::GQ& z) { return {{"re", encode(z.re())}, {"im", encode(z.im())}}; }

json encode(const moebius::CP1Point& p) {
  if (p.is_infinity()) return "inf";
  return encode(p.value());
}

json encode(const moebius::Mat2GQ& m) {
  return json::array({json::array({encode(m.a()), encode(m.b())}),
                      json::array({encode(m.c()), encode(m.d())})});
}

json encode(const zsets::Interval& r) {
  if (r.empty()) return nullptr;
  return json::array({encode(r.lo), encode(r.hi)});
}

json encode(const zsets::ZSet& s) {
  return {{"range", encode(s.range())},
          {"certified", encode(s.certified())},
          {"elements", encode_all(s.elements())}};
}

json encode(const torus::Rect& r) {
  return {{"x", json::array({encode(r.x_lo()), encode(r.x_hi())})},
          {"y", json::array({encode(r.y_lo()), encode(r.y_hi())})}};
}

json encode(const torus::TorusPoint& p) { return json::array({encode(p.x()), encode(p.y())}); }

json encode(const torus::Mat2Int& m) {
  return json::array({json::array({m.a(), m.b()}), json::array({m.c(), m.d()})});
}

}  // namespace thickmix::cli
