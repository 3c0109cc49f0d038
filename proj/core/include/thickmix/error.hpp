#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace thickmix {

enum class Errc {
  depth_exceeds_cap,
  invalid_argument,
  level_order,          // k > K
  unreachable_range,    // window too shallow to certify the request
  uncertified_compare,  // comparison outside certified territory
  empty_cylinder,
  no_cover_found,
  equal_shifts,         // weak-mixing witness with m == n
  run_not_found,
  empty_intersection,
  interval_run_broken,  // a closed-form run failed to be a run
  points_not_distinct,
  singular_matrix,
  not_finite,
  budget_exhausted,
  precondition_violated,
  postcondition_failed,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace thickmix
