#include "luban/error.hpp"

namespace luban {

std::string_view errc_name(Errc c) {
  switch (c) {
    case Errc::syntax_error: return "syntax_error";
    case Errc::duplicate_name: return "duplicate_name";
    case Errc::unknown_reference: return "unknown_reference";
    case Errc::bad_orientation: return "bad_orientation";
    case Errc::non_positive_dimension: return "non_positive_dimension";
    case Errc::duplicate_check_id: return "duplicate_check_id";
    case Errc::unknown_check_kind: return "unknown_check_kind";
    case Errc::malformed_loc_spec: return "malformed_loc_spec";
    case Errc::malformed_action: return "malformed_action";
    case Errc::misaligned_feature: return "misaligned_feature";
    case Errc::out_of_panel: return "out_of_panel";
    case Errc::unknown_base: return "unknown_base";
    case Errc::refill_without_hole: return "refill_without_hole";
    case Errc::placement_misaligned: return "placement_misaligned";
    case Errc::panel_placed_twice: return "panel_placed_twice";
    case Errc::scene_too_large: return "scene_too_large";
    case Errc::io_error: return "io_error";
    case Errc::fixture_too_large: return "fixture_too_large";
    case Errc::out_of_bounds: return "out_of_bounds";
    case Errc::out_of_world: return "out_of_world";
    case Errc::backend_unavailable: return "backend_unavailable";
    case Errc::transcript_miss: return "transcript_miss";
    case Errc::extraction_failed: return "extraction_failed";
    case Errc::budget_exceeded: return "budget_exceeded";
    case Errc::all_candidates_invalid: return "all_candidates_invalid";
    case Errc::empty_group: return "empty_group";
    case Errc::length_mismatch: return "length_mismatch";
    case Errc::too_few_samples: return "too_few_samples";
    case Errc::bad_protocol: return "bad_protocol";
    case Errc::unknown_task: return "unknown_task";
    case Errc::bad_config: return "bad_config";
  }
  return "unknown";
}

std::string Error::describe() const {
  std::string out{errc_name(code)};
  if (line > 0) {
    out += " at " + std::to_string(line) + ":" + std::to_string(col);
  }
  out += ": ";
  out += what();
  return out;
}

}  // namespace luban
