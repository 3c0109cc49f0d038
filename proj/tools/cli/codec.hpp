#pragma once

#include <json.hpp>

#include "thickmix/moebius.hpp"
#include "thickmix/numeric.hpp"
#include "thickmix/torus.hpp"
#include "thickmix/zsets.hpp"

namespace thickmix::cli {

using nlohmann::json;

/// Number when it fits in 64 bits, decimal string otherwise.
json encode(const Integer& x);
/// "p/q"
json encode(const Rational& r);
/// {"re": "p/q", "im": "r/s"}
json encode(const moebius::GQ& z);
json encode(const moebius::CP1Point& p);
json encode(const moebius::Mat2GQ& m);
json encode(const zsets::Interval& r);
json encode(const zsets::ZSet& s);
json encode(const torus::Rect& r);
json encode(const torus::TorusPoint& p);
json encode(const torus::Mat2Int& m);

template <typename T>
json encode_all(const std::vector<T>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(encode(x));
  return out;
}

}  // namespace thickmix::cli
