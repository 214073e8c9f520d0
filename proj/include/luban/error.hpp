#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace luban {

// One code per distinct contract violation across the toolchain; the CLI
// maps any thrown Error to a nonzero exit with the code name on stderr.
enum class Errc {
  // dsl frontend
  syntax_error,
  duplicate_name,
  unknown_reference,
  bad_orientation,
  non_positive_dimension,
  duplicate_check_id,
  unknown_check_kind,
  malformed_loc_spec,
  malformed_action,
  // solid kernel
  misaligned_feature,
  out_of_panel,
  unknown_base,
  refill_without_hole,
  placement_misaligned,
  panel_placed_twice,
  // rendering
  scene_too_large,
  io_error,
  // world
  fixture_too_large,
  out_of_bounds,
  // building
  out_of_world,
  // gateway
  backend_unavailable,
  transcript_miss,
  extraction_failed,
  budget_exceeded,
  all_candidates_invalid,
  // metrics
  empty_group,
  length_mismatch,
  too_few_samples,
  bad_protocol,
  // cli
  unknown_task,
  bad_config,
};

std::string_view errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message, int line = 0, int col = 0)
      : std::runtime_error(std::move(message)), code(code), line(line), col(col) {}

  Errc code;
  int line;  // 1-based; 0 when not tied to a source location
  int col;

  // "duplicate_name at 3:7: panel 'roof' already declared"
  std::string describe() const;
};

[[noreturn]] inline void fail(Errc code, std::string message, int line = 0, int col = 0) {
  throw Error(code, std::move(message), line, col);
}

}  // namespace luban
