#include "config.hpp"

#include "thickmix/error.hpp"
#include "thickmix/returnsets.hpp"
#include "thickmix/words.hpp"

#include <array>
#include <regex>

namespace thickmix::cli {

namespace {

constexpr std::array<std::pair<Suite, std::string_view>, 7> kSuites{{
    {Suite::chacon, "chacon"},
    {Suite::zset, "zset"},
    {Suite::returnset, "returnset"},
    {Suite::thick, "thick"},
    {Suite::torus, "torus"},
    {Suite::moebius, "moebius"},
    {Suite::all, "all"},
}};

// Brute-force scans of a range cost |range| times the occurrence count.
constexpr std::int64_t kMaxRangeWidth = 20001;

}  // namespace

std::string_view to_string(Suite s) {
  for (const auto& [k, name] : kSuites)
    if (k == s) return name;
  return "?";
}

std::optional<Suite> parse_suite(std::string_view s) {
  for (const auto& [k, name] : kSuites)
    if (name == s) return k;
  return std::nullopt;
}

std::string_view to_string(Format f) { return f == Format::json ? "json" : "text"; }

zsets::Interval parse_range(const std::string& s) {
  static const std::regex re(R"((-?\d+)\.\.(-?\d+))");
  std::smatch m;
  if (!std::regex_match(s, m, re))
    throw Error(Errc::invalid_argument, "--range expects LO..HI, got '" + s + "'");
  zsets::Interval r{Integer(m[1].str()), Integer(m[2].str())};
  if (r.empty()) throw Error(Errc::invalid_argument, "--range " + s + " is empty");
  return r;
}

void validate(const RunConfig& c) {
  const auto cap = words::kDefaultDepthCap;
  if (c.depth < 1 || c.depth > cap)
    throw Error(Errc::depth_exceeds_cap,
                "--depth " + std::to_string(c.depth) + " outside 1.." + std::to_string(cap));
  if (c.trunc < 3 || c.trunc > cap)
    throw Error(Errc::depth_exceeds_cap,
                "--trunc " + std::to_string(c.trunc) + " outside 3.." + std::to_string(cap));
  if (c.range) {
    if (c.range->count() > kMaxRangeWidth)
      throw Error(Errc::invalid_argument, "--range wider than " + std::to_string(kMaxRangeWidth));
    const Integer reach = returnsets::window_reach(c.depth) - 4;
    if (abs(c.range->lo) > reach || abs(c.range->hi) > reach)
      throw Error(Errc::unreachable_range, "--range leaves [-" + reach.str() + ", " +
                                               reach.str() + "] reachable at --depth " +
                                               std::to_string(c.depth));
  }
}

}  // namespace thickmix::cli
