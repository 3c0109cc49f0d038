#include "report.hpp"

#include "codec.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace thickmix::cli {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::finding: return "finding";
  }
  return "?";
}

Counts count(const Report& r) {
  Counts c;
  for (const auto& rec : r.records) {
    if (rec.status == Status::pass) ++c.pass;
    if (rec.status == Status::fail) ++c.fail;
    if (rec.status == Status::finding) ++c.finding;
  }
  return c;
}

json to_json(const Report& r) {
  const auto& c = r.config;
  json config{{"suite", to_string(c.suite)}, {"depth", c.depth},     {"trunc", c.trunc},
              {"seed", c.seed},              {"samples", c.samples}, {"budget", c.budget},
              {"format", to_string(c.format)}};
  config["range"] = c.range ? encode(*c.range) : json(nullptr);

  json records = json::array();
  for (const auto& rec : r.records)
    records.push_back({{"module", rec.module},
                       {"name", rec.name},
                       {"paper_anchor", rec.paper_anchor},
                       {"status", to_string(rec.status)},
                       {"data", rec.data}});
  const Counts n = count(r);
  return {{"schema_version", kSchemaVersion},
          {"tool", {{"name", "thickmix"}, {"version", THICKMIX_VERSION}}},
          {"config", config},
          {"summary",
           {{"pass", n.pass}, {"fail", n.fail}, {"finding", n.finding}, {"total", r.records.size()}}},
          {"records", records}};
}

std::string render(const Report& r, Format f) {
  if (f == Format::json) return to_json(r).dump(2) + "\n";
  std::size_t wm = 6, wn = 4;
  for (const auto& rec : r.records) {
    wm = std::max(wm, rec.module.size());
    wn = std::max(wn, rec.name.size());
  }
  std::ostringstream os;
  const auto row = [&](std::string_view a, std::string_view b, std::string_view c,
                       std::string_view d) {
    os << a << std::string(wm - a.size() + 2, ' ') << b << std::string(wn - b.size() + 2, ' ')
       << c << std::string(9 - c.size(), ' ') << d << "\n";
  };
  row("module", "name", "status", "anchor");
  for (const auto& rec : r.records) row(rec.module, rec.name, to_string(rec.status), rec.paper_anchor);
  const Counts n = count(r);
  os << "\npass " << n.pass << "  fail " << n.fail << "  finding " << n.finding << "  total "
     << r.records.size() << "\n";
  return os.str();
}

void write_report(const Report& r, const std::string& path, Format f) {
  const std::string text = render(r, f);
  if (path.empty()) {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + ": " + std::strerror(errno));
  out << text;
  if (!out.flush()) throw std::runtime_error("cannot write " + path + ": " + std::strerror(errno));
}

int exit_code(const Report& r) { return count(r).fail == 0 ? 0 : 1; }

}  // namespace thickmix::cli
