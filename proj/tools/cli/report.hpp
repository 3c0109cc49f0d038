#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "config.hpp"

namespace thickmix::cli {

inline constexpr std::string_view kSchemaVersion = "1.0.0";

/// fail: the artifact is wrong. finding: a computed value disagrees with a
/// stated claim; reported, never fatal.
enum class Status { pass, fail, finding };

std::string_view to_string(Status s);

struct Record {
  std::string module;
  std::string name;
  std::string paper_anchor;
  Status status = Status::pass;
  nlohmann::json data = nlohmann::json::object();
};

struct Report {
  RunConfig config;
  std::vector<Record> records;  // sorted by (module, name)
};

struct Counts {
  std::size_t pass = 0, fail = 0, finding = 0;
};

Counts count(const Report& r);

/// Runs the selected suite. Throws thickmix::Error for invalid configs.
Report dispatch(const RunConfig& c);

nlohmann::json to_json(const Report& r);
std::string render(const Report& r, Format f);

/// Writes to `path`, or to stdout when it is empty.
void write_report(const Report& r, const std::string& path, Format f);

/// 0 when no record failed, 1 otherwise.
int exit_code(const Report& r);

}  // namespace thickmix::cli
