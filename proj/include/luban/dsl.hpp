#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "luban/geometry.hpp"

namespace luban::dsl {

// ---------------------------------------------------------------------------
// Modeling program AST
// ---------------------------------------------------------------------------

enum class VannoType { planner, env };

struct VerificationAnnotation {
  VannoType type = VannoType::planner;
  std::string text;
  friend bool operator==(const VerificationAnnotation&, const VerificationAnnotation&) = default;
};

enum class FeatureKind { sub_rect, fill_rect, grow_rect };

struct FeatureOp {
  FeatureKind kind = FeatureKind::sub_rect;
  std::string name;
  Half2 pos;            // center offset from the panel's xy center (sub/grow)
  int shape_x = 1;      // footprint (sub/grow)
  int shape_y = 1;
  int thickness = 1;    // grow only
  std::string base;     // grow only: panel name or prior feature name
  std::string hole;     // fill only: prior hole name
  std::string anno;     // fill/grow only
  std::optional<VerificationAnnotation> vanno;

  friend bool operator==(const FeatureOp&, const FeatureOp&) = default;
};

struct PanelDef {
  std::string name;
  int x_dim = 1, y_dim = 1, thickness = 1;
  std::string anno;
  std::optional<VerificationAnnotation> vanno;
  std::vector<FeatureOp> ops;

  friend bool operator==(const PanelDef&, const PanelDef&) = default;
};

struct Placement {
  std::string panel;
  Half3 pos;  // where the panel's base-center reference point lands
  Orientation facing = Orientation::up;

  friend bool operator==(const Placement&, const Placement&) = default;
};

struct ModelProgram {
  std::vector<PanelDef> panels;
  std::vector<Placement> placements;  // empty for a subcomponent-only program

  const PanelDef* find_panel(std::string_view name) const;
  friend bool operator==(const ModelProgram&, const ModelProgram&) = default;
};

// Parses and validates the textual modeling DSL. Diagnostics carry the
// 1-based line/column of the offending token.
ModelProgram parse_model(std::string_view text);

// Canonical text; parse_model(print_model(p)) reproduces p exactly.
std::string print_model(const ModelProgram& p);

// ---------------------------------------------------------------------------
// Check programs (JSON)
// ---------------------------------------------------------------------------

enum class FeaturePoint {
  top_center,
  base_center,
  adjacent_north,
  adjacent_south,
  adjacent_east,
  adjacent_west,
};

std::string_view feature_point_name(FeaturePoint p);

struct FeatureRef {
  std::string feature;  // ledger key: "panel" or "panel.feature"
  FeaturePoint point = FeaturePoint::top_center;
  // Coordinates to use when the feature is missing from the target ledger;
  // lets fixture check templates migrate onto buildings with foreign
  // feature names.
  std::optional<Vec3i> fallback;

  friend bool operator==(const FeatureRef&, const FeatureRef&) = default;
};

struct LocSpec {
  std::variant<Vec3i, std::string, FeatureRef> where;  // abs | anchor | feature

  friend bool operator==(const LocSpec&, const LocSpec&) = default;
};

enum class CheckKind { reachable, standable, height_at_least, material_at };

struct Check {
  std::string id;
  CheckKind kind = CheckKind::standable;
  LocSpec from;  // reachable
  LocSpec to;    // reachable
  LocSpec at;    // standable / height_at_least / material_at
  int min_z = 0;            // height_at_least
  std::string material;     // material_at: label or render-class name

  friend bool operator==(const Check&, const Check&) = default;
};

struct CheckProgram {
  std::vector<Check> checks;
  friend bool operator==(const CheckProgram&, const CheckProgram&) = default;
};

CheckProgram parse_checks(std::string_view json_text);
std::string print_checks(const CheckProgram& p);

// ---------------------------------------------------------------------------
// Action scripts (JSON)
// ---------------------------------------------------------------------------

enum class ActionOp { move, place_block, dig_block };

struct Action {
  ActionOp op = ActionOp::place_block;
  Vec3i pos;       // place/dig target
  Vec3i from, to;  // move endpoints
  std::string material;  // place only

  friend bool operator==(const Action&, const Action&) = default;
};

struct ActionScript {
  std::vector<Action> actions;
  friend bool operator==(const ActionScript&, const ActionScript&) = default;
};

ActionScript parse_actions(std::string_view json_text);
std::string print_actions(const ActionScript& s);

}  // namespace luban::dsl
