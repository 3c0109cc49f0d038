#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "thickmix/zsets.hpp"

namespace thickmix::cli {

enum class Suite { chacon, zset, returnset, thick, torus, moebius, all };
enum class Format { json, text };

struct RunConfig {
  Suite suite = Suite::all;
  unsigned depth = 5;  // block depth (chacon) or window depth (returnset)
  unsigned trunc = 6;  // truncation level of H-sums and thick constructions
  std::optional<zsets::Interval> range;
  std::uint64_t seed = 42;
  std::uint64_t samples = 10000;
  std::uint64_t budget = 100000;
  std::string out;  // empty: stdout
  Format format = Format::json;
};

std::string_view to_string(Suite s);
std::optional<Suite> parse_suite(std::string_view s);
std::string_view to_string(Format f);

/// "LO..HI"; throws invalid_argument.
zsets::Interval parse_range(const std::string& s);

/// Throws thickmix::Error naming the offending flag.
void validate(const RunConfig& c);

}  // namespace thickmix::cli
