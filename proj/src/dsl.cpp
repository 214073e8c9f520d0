#include "luban/dsl.hpp"

#include <cctype>
#include <set>
#include <sstream>

#include "json.hpp"
#include "luban/materials.hpp"

namespace luban::dsl {
namespace {

using ordered_json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

enum class Tok { ident, number, string, punct, end };

struct Token {
  Tok kind = Tok::end;
  std::string text;   // ident/string payload, punct char
  Half value;         // number payload
  int line = 0, col = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_ws();
    Token t;
    t.line = line_;
    t.col = col_;
    if (eof()) {
      t.kind = Tok::end;
      return t;
    }
    char c = peek();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      t.kind = Tok::ident;
      while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
        t.text.push_back(take());
      }
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '-' && pos_ + 1 < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))) {
      t.kind = Tok::number;
      t.value = lex_number(t);
      return t;
    }
    if (c == '"') {
      t.kind = Tok::string;
      t.text = lex_string(t);
      return t;
    }
    if (std::string_view("(),.=:").find(c) != std::string_view::npos) {
      t.kind = Tok::punct;
      t.text.push_back(take());
      return t;
    }
    fail(Errc::syntax_error, std::string("unexpected character '") + c + "'", t.line, t.col);
  }

 private:
  bool eof() const { return pos_ >= src_.size(); }
  char peek() const { return src_[pos_]; }
  char take() {
    char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_ws() {
    while (!eof()) {
      char c = peek();
      if (c == '#') {
        while (!eof() && peek() != '\n') take();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        take();
      } else {
        break;
      }
    }
  }

  Half lex_number(const Token& at) {
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      take();
    }
    long whole = 0;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
      whole = whole * 10 + (take() - '0');
      if (whole > 1'000'000) fail(Errc::syntax_error, "number too large", at.line, at.col);
    }
    int twice = static_cast<int>(whole) * 2;
    if (!eof() && peek() == '.') {
      take();
      if (eof() || take() != '5') {
        fail(Errc::syntax_error, "only .5 fractions are allowed", at.line, at.col);
      }
      twice += 1;
    }
    return Half::of_twice(neg ? -twice : twice);
  }

  std::string lex_string(const Token& at) {
    take();  // opening quote
    std::string out;
    while (true) {
      if (eof() || peek() == '\n') {
        fail(Errc::syntax_error, "unterminated string", at.line, at.col);
      }
      char c = take();
      if (c == '"') break;
      if (c == '\\') {
        if (eof()) fail(Errc::syntax_error, "unterminated string", at.line, at.col);
        char e = take();
        switch (e) {
          case '"': out.push_back('"'); break;
          case '\\': out.push_back('\\'); break;
          case 'n': out.push_back('\n'); break;
          default:
            fail(Errc::syntax_error, std::string("unknown escape '\\") + e + "'", at.line, at.col);
        }
      } else {
        out.push_back(c);
      }
    }
    return out;
  }

  std::string_view src_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

class Parser {
 public:
  explicit Parser(std::string_view src) : lex_(src) { advance(); }

  ModelProgram parse() {
    ModelProgram prog;
    while (cur_.kind != Tok::end) {
      Token head = expect_ident("statement");
      if (head.text == "panel") {
        parse_panel(prog, head);
      } else if (head.text == "sub_rect") {
        parse_sub_rect(prog, head);
      } else if (head.text == "fill_rect") {
        parse_fill_rect(prog, head);
      } else if (head.text == "grow_rect") {
        parse_grow_rect(prog, head);
      } else if (head.text == "place") {
        parse_place(prog, head);
      } else {
        fail(Errc::syntax_error, "unknown statement '" + head.text + "'", head.line, head.col);
      }
    }
    return prog;
  }

 private:
  void advance() { cur_ = lex_.next(); }

  Token expect_ident(const char* what) {
    if (cur_.kind != Tok::ident) {
      fail(Errc::syntax_error, std::string("expected ") + what, cur_.line, cur_.col);
    }
    Token t = cur_;
    advance();
    return t;
  }

  void expect_word(const char* word) {
    if (cur_.kind != Tok::ident || cur_.text != word) {
      fail(Errc::syntax_error, std::string("expected '") + word + "'", cur_.line, cur_.col);
    }
    advance();
  }

  void expect_punct(char p) {
    if (cur_.kind != Tok::punct || cur_.text[0] != p) {
      fail(Errc::syntax_error, std::string("expected '") + p + "'", cur_.line, cur_.col);
    }
    advance();
  }

  bool at_word(const char* word) const { return cur_.kind == Tok::ident && cur_.text == word; }

  Half expect_num() {
    if (cur_.kind != Tok::number) {
      fail(Errc::syntax_error, "expected number", cur_.line, cur_.col);
    }
    Half v = cur_.value;
    advance();
    return v;
  }

  int expect_int() {
    Token at = cur_;
    Half v = expect_num();
    if (!v.integral()) fail(Errc::syntax_error, "expected integer", at.line, at.col);
    return v.as_int();
  }

  int expect_positive_int(const char* what) {
    Token at = cur_;
    int v = expect_int();
    if (v < 1) {
      fail(Errc::non_positive_dimension, std::string(what) + " must be at least 1", at.line, at.col);
    }
    return v;
  }

  std::string expect_string() {
    if (cur_.kind != Tok::string) {
      fail(Errc::syntax_error, "expected string", cur_.line, cur_.col);
    }
    std::string s = cur_.text;
    advance();
    return s;
  }

  Half2 parse_vec2() {
    expect_punct('(');
    Half x = expect_num();
    expect_punct(',');
    Half y = expect_num();
    expect_punct(')');
    return {x, y};
  }

  std::pair<int, int> parse_ivec2(const char* what) {
    expect_punct('(');
    int x = expect_positive_int(what);
    expect_punct(',');
    int y = expect_positive_int(what);
    expect_punct(')');
    return {x, y};
  }

  Half3 parse_vec3() {
    expect_punct('(');
    Half x = expect_num();
    expect_punct(',');
    Half y = expect_num();
    expect_punct(',');
    Half z = expect_num();
    expect_punct(')');
    return {x, y, z};
  }

  void expect_key(const char* key) {
    Token t = expect_ident(key);
    if (t.text != key) {
      fail(Errc::syntax_error, std::string("expected '") + key + "='", t.line, t.col);
    }
    expect_punct('=');
  }

  std::string parse_anno(const Token& stmt) {
    expect_key("anno");
    std::string text = expect_string();
    if (text.empty()) {
      fail(Errc::syntax_error, "annotation must be non-empty", stmt.line, stmt.col);
    }
    return text;
  }

  std::optional<VerificationAnnotation> parse_opt_vanno() {
    if (!at_word("vanno")) return std::nullopt;
    advance();
    expect_punct('=');
    Token ty = expect_ident("vanno type");
    VerificationAnnotation v;
    if (ty.text == "planner") {
      v.type = VannoType::planner;
    } else if (ty.text == "env") {
      v.type = VannoType::env;
    } else {
      fail(Errc::syntax_error, "vanno type must be 'planner' or 'env'", ty.line, ty.col);
    }
    expect_punct(':');
    v.text = expect_string();
    return v;
  }

  // Consumes "<panel> . <feature>"; returns (panel index, feature token).
  std::pair<size_t, Token> parse_qualified(ModelProgram& prog) {
    Token pname = expect_ident("panel name");
    expect_punct('.');
    Token fname = expect_ident("feature name");
    for (size_t i = 0; i < prog.panels.size(); ++i) {
      if (prog.panels[i].name == pname.text) return {i, fname};
    }
    fail(Errc::unknown_reference, "panel '" + pname.text + "' is not declared", pname.line, pname.col);
  }

  void check_fresh_feature(const PanelDef& panel, const Token& fname) {
    if (fname.text == panel.name) {
      fail(Errc::duplicate_name, "feature name collides with panel '" + panel.name + "'",
           fname.line, fname.col);
    }
    for (const FeatureOp& op : panel.ops) {
      if (op.name == fname.text) {
        fail(Errc::duplicate_name,
             "feature '" + fname.text + "' already declared in panel '" + panel.name + "'",
             fname.line, fname.col);
      }
    }
  }

  const FeatureOp* find_feature(const PanelDef& panel, std::string_view name) {
    for (const FeatureOp& op : panel.ops) {
      if (op.name == name) return &op;
    }
    return nullptr;
  }

  void parse_panel(ModelProgram& prog, const Token& stmt) {
    Token name = expect_ident("panel name");
    for (const PanelDef& p : prog.panels) {
      if (p.name == name.text) {
        fail(Errc::duplicate_name, "panel '" + name.text + "' already declared", name.line, name.col);
      }
    }
    PanelDef def;
    def.name = name.text;
    def.x_dim = expect_positive_int("x_dim");
    def.y_dim = expect_positive_int("y_dim");
    def.thickness = expect_positive_int("thickness");
    def.anno = parse_anno(stmt);
    def.vanno = parse_opt_vanno();
    prog.panels.push_back(std::move(def));
  }

  void parse_sub_rect(ModelProgram& prog, const Token&) {
    auto [pi, fname] = parse_qualified(prog);
    PanelDef& panel = prog.panels[pi];
    check_fresh_feature(panel, fname);
    FeatureOp op;
    op.kind = FeatureKind::sub_rect;
    op.name = fname.text;
    expect_key("pos");
    op.pos = parse_vec2();
    expect_key("shape");
    std::tie(op.shape_x, op.shape_y) = parse_ivec2("shape");
    op.vanno = parse_opt_vanno();
    panel.ops.push_back(std::move(op));
  }

  void parse_fill_rect(ModelProgram& prog, const Token& stmt) {
    auto [pi, hname] = parse_qualified(prog);
    PanelDef& panel = prog.panels[pi];
    if (!find_feature(panel, hname.text)) {
      fail(Errc::unknown_reference,
           "feature '" + hname.text + "' is not declared in panel '" + panel.name + "'",
           hname.line, hname.col);
    }
    expect_word("as");
    Token fname = expect_ident("fill name");
    check_fresh_feature(panel, fname);
    FeatureOp op;
    op.kind = FeatureKind::fill_rect;
    op.name = fname.text;
    op.hole = hname.text;
    op.anno = parse_anno(stmt);
    op.vanno = parse_opt_vanno();
    panel.ops.push_back(std::move(op));
  }

  void parse_grow_rect(ModelProgram& prog, const Token& stmt) {
    auto [pi, fname] = parse_qualified(prog);
    PanelDef& panel = prog.panels[pi];
    check_fresh_feature(panel, fname);
    FeatureOp op;
    op.kind = FeatureKind::grow_rect;
    op.name = fname.text;
    expect_key("pos");
    op.pos = parse_vec2();
    expect_key("shape");
    std::tie(op.shape_x, op.shape_y) = parse_ivec2("shape");
    expect_key("thickness");
    Token tk = cur_;
    op.thickness = expect_positive_int("thickness");
    (void)tk;
    expect_word("on");
    Token base = expect_ident("base name");
    if (base.text != panel.name && !find_feature(panel, base.text)) {
      fail(Errc::unknown_reference,
           "base '" + base.text + "' is not declared in panel '" + panel.name + "'",
           base.line, base.col);
    }
    op.base = base.text;
    op.anno = parse_anno(stmt);
    op.vanno = parse_opt_vanno();
    panel.ops.push_back(std::move(op));
  }

  void parse_place(ModelProgram& prog, const Token&) {
    Token pname = expect_ident("panel name");
    if (!prog.find_panel(pname.text)) {
      fail(Errc::unknown_reference, "panel '" + pname.text + "' is not declared", pname.line, pname.col);
    }
    for (const Placement& pl : prog.placements) {
      if (pl.panel == pname.text) {
        fail(Errc::panel_placed_twice, "panel '" + pname.text + "' is already placed",
             pname.line, pname.col);
      }
    }
    Placement pl;
    pl.panel = pname.text;
    expect_word("at");
    pl.pos = parse_vec3();
    expect_word("facing");
    Token o = expect_ident("orientation");
    try {
      pl.facing = parse_orientation(o.text);
    } catch (const Error& e) {
      fail(Errc::bad_orientation, e.what(), o.line, o.col);
    }
    prog.placements.push_back(std::move(pl));
  }

  Lexer lex_;
  Token cur_;
};

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      default: out.push_back(c);
    }
  }
  out += "\"";
  return out;
}

void print_vanno(std::ostringstream& out, const std::optional<VerificationAnnotation>& v) {
  if (!v) return;
  out << " vanno=" << (v->type == VannoType::planner ? "planner" : "env") << ":" << quote(v->text);
}

// ---------------------------------------------------------------------------
// JSON helpers
// ---------------------------------------------------------------------------

ordered_json parse_json_or_fail(std::string_view text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::syntax_error, e.what());
  }
}

Vec3i json_to_vec3(const ordered_json& j, Errc code) {
  if (!j.is_array() || j.size() != 3) fail(code, "expected a coordinate triple, got " + j.dump());
  for (const auto& c : j) {
    if (!c.is_number_integer()) fail(code, "coordinates must be integers: " + j.dump());
  }
  return {j[0].get<int>(), j[1].get<int>(), j[2].get<int>()};
}

ordered_json vec3_to_json(const Vec3i& v) { return ordered_json::array({v.x, v.y, v.z}); }

const std::array<std::pair<FeaturePoint, std::string_view>, 6> kFeaturePoints = {{
    {FeaturePoint::top_center, "top_center"},
    {FeaturePoint::base_center, "base_center"},
    {FeaturePoint::adjacent_north, "adjacent_north"},
    {FeaturePoint::adjacent_south, "adjacent_south"},
    {FeaturePoint::adjacent_east, "adjacent_east"},
    {FeaturePoint::adjacent_west, "adjacent_west"},
}};

LocSpec json_to_locspec(const ordered_json& j) {
  if (!j.is_object()) fail(Errc::malformed_loc_spec, "location must be an object: " + j.dump());
  const bool has_abs = j.contains("abs");
  const bool has_anchor = j.contains("anchor");
  const bool has_feature = j.contains("feature");
  if (has_abs + has_anchor + has_feature != 1) {
    fail(Errc::malformed_loc_spec, "location needs exactly one of abs/anchor/feature: " + j.dump());
  }
  LocSpec spec;
  if (has_abs) {
    spec.where = json_to_vec3(j["abs"], Errc::malformed_loc_spec);
  } else if (has_anchor) {
    if (!j["anchor"].is_string() || j["anchor"].get<std::string>().empty()) {
      fail(Errc::malformed_loc_spec, "anchor must be a non-empty string: " + j.dump());
    }
    spec.where = j["anchor"].get<std::string>();
  } else {
    FeatureRef ref;
    if (!j["feature"].is_string()) fail(Errc::malformed_loc_spec, "feature must be a string: " + j.dump());
    ref.feature = j["feature"].get<std::string>();
    if (!j.contains("point") || !j["point"].is_string()) {
      fail(Errc::malformed_loc_spec, "feature location needs a point: " + j.dump());
    }
    std::string pt = j["point"].get<std::string>();
    bool found = false;
    for (auto [p, name] : kFeaturePoints) {
      if (pt == name) {
        ref.point = p;
        found = true;
      }
    }
    if (!found) fail(Errc::malformed_loc_spec, "unknown feature point '" + pt + "'");
    if (j.contains("fallback")) {
      ref.fallback = json_to_vec3(j["fallback"], Errc::malformed_loc_spec);
    }
    spec.where = std::move(ref);
  }
  return spec;
}

ordered_json locspec_to_json(const LocSpec& spec) {
  ordered_json j = ordered_json::object();
  if (const Vec3i* abs = std::get_if<Vec3i>(&spec.where)) {
    j["abs"] = vec3_to_json(*abs);
  } else if (const std::string* anchor = std::get_if<std::string>(&spec.where)) {
    j["anchor"] = *anchor;
  } else {
    const FeatureRef& ref = std::get<FeatureRef>(spec.where);
    j["feature"] = ref.feature;
    j["point"] = std::string(feature_point_name(ref.point));
    if (ref.fallback) j["fallback"] = vec3_to_json(*ref.fallback);
  }
  return j;
}

}  // namespace

const PanelDef* ModelProgram::find_panel(std::string_view name) const {
  for (const PanelDef& p : panels) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

ModelProgram parse_model(std::string_view text) { return Parser(text).parse(); }

std::string print_model(const ModelProgram& p) {
  std::ostringstream out;
  for (const PanelDef& panel : p.panels) {
    out << "panel " << panel.name << " " << panel.x_dim << " " << panel.y_dim << " "
        << panel.thickness << " anno=" << quote(panel.anno);
    print_vanno(out, panel.vanno);
    out << "\n";
    for (const FeatureOp& op : panel.ops) {
      switch (op.kind) {
        case FeatureKind::sub_rect:
          out << "sub_rect " << panel.name << "." << op.name << " pos=(" << op.pos.x.str() << ","
              << op.pos.y.str() << ") shape=(" << op.shape_x << "," << op.shape_y << ")";
          print_vanno(out, op.vanno);
          break;
        case FeatureKind::fill_rect:
          out << "fill_rect " << panel.name << "." << op.hole << " as " << op.name
              << " anno=" << quote(op.anno);
          print_vanno(out, op.vanno);
          break;
        case FeatureKind::grow_rect:
          out << "grow_rect " << panel.name << "." << op.name << " pos=(" << op.pos.x.str() << ","
              << op.pos.y.str() << ") shape=(" << op.shape_x << "," << op.shape_y
              << ") thickness=" << op.thickness << " on " << op.base << " anno=" << quote(op.anno);
          print_vanno(out, op.vanno);
          break;
      }
      out << "\n";
    }
  }
  for (const Placement& pl : p.placements) {
    out << "place " << pl.panel << " at (" << pl.pos.x.str() << "," << pl.pos.y.str() << ","
        << pl.pos.z.str() << ") facing " << orientation_name(pl.facing) << "\n";
  }
  return out.str();
}

std::string_view feature_point_name(FeaturePoint p) {
  for (auto [fp, name] : kFeaturePoints) {
    if (fp == p) return name;
  }
  return "top_center";
}

CheckProgram parse_checks(std::string_view json_text) {
  ordered_json root = parse_json_or_fail(json_text);
  if (!root.is_object() || !root.contains("checks") || !root["checks"].is_array()) {
    fail(Errc::syntax_error, "check program must be {\"checks\":[...]}");
  }
  CheckProgram prog;
  std::set<std::string> seen;
  for (const auto& jc : root["checks"]) {
    if (!jc.is_object()) fail(Errc::syntax_error, "check must be an object: " + jc.dump());
    Check c;
    if (!jc.contains("id") || !jc["id"].is_string() || jc["id"].get<std::string>().empty()) {
      fail(Errc::syntax_error, "check needs a non-empty string id: " + jc.dump());
    }
    c.id = jc["id"].get<std::string>();
    if (!seen.insert(c.id).second) {
      fail(Errc::duplicate_check_id, "check id '" + c.id + "' appears twice");
    }
    if (!jc.contains("kind") || !jc["kind"].is_string()) {
      fail(Errc::unknown_check_kind, "check '" + c.id + "' needs a kind");
    }
    const std::string kind = jc["kind"].get<std::string>();
    auto loc = [&](const char* field) -> LocSpec {
      if (!jc.contains(field)) {
        fail(Errc::malformed_loc_spec, "check '" + c.id + "' needs '" + field + "'");
      }
      return json_to_locspec(jc[field]);
    };
    if (kind == "reachable") {
      c.kind = CheckKind::reachable;
      c.from = loc("from");
      c.to = loc("to");
    } else if (kind == "standable") {
      c.kind = CheckKind::standable;
      c.at = loc("at");
    } else if (kind == "height_at_least") {
      c.kind = CheckKind::height_at_least;
      c.at = loc("at");
      if (!jc.contains("min_z") || !jc["min_z"].is_number_integer()) {
        fail(Errc::syntax_error, "check '" + c.id + "' needs integer min_z");
      }
      c.min_z = jc["min_z"].get<int>();
    } else if (kind == "material_at") {
      c.kind = CheckKind::material_at;
      c.at = loc("at");
      if (!jc.contains("material") || !jc["material"].is_string()) {
        fail(Errc::syntax_error, "check '" + c.id + "' needs a material");
      }
      c.material = jc["material"].get<std::string>();
    } else {
      fail(Errc::unknown_check_kind, "unknown check kind '" + kind + "'");
    }
    prog.checks.push_back(std::move(c));
  }
  return prog;
}

std::string print_checks(const CheckProgram& p) {
  ordered_json root;
  root["checks"] = ordered_json::array();
  for (const Check& c : p.checks) {
    ordered_json jc;
    jc["id"] = c.id;
    switch (c.kind) {
      case CheckKind::reachable:
        jc["kind"] = "reachable";
        jc["from"] = locspec_to_json(c.from);
        jc["to"] = locspec_to_json(c.to);
        break;
      case CheckKind::standable:
        jc["kind"] = "standable";
        jc["at"] = locspec_to_json(c.at);
        break;
      case CheckKind::height_at_least:
        jc["kind"] = "height_at_least";
        jc["at"] = locspec_to_json(c.at);
        jc["min_z"] = c.min_z;
        break;
      case CheckKind::material_at:
        jc["kind"] = "material_at";
        jc["at"] = locspec_to_json(c.at);
        jc["material"] = c.material;
        break;
    }
    root["checks"].push_back(std::move(jc));
  }
  return root.dump(2) + "\n";
}

ActionScript parse_actions(std::string_view json_text) {
  ordered_json root = parse_json_or_fail(json_text);
  if (!root.is_array()) fail(Errc::syntax_error, "action script must be a JSON array");
  ActionScript script;
  const MaterialTable& mats = MaterialTable::defaults();
  for (const auto& ja : root) {
    if (!ja.is_object() || !ja.contains("op") || !ja["op"].is_string()) {
      fail(Errc::malformed_action, "action needs an op: " + ja.dump());
    }
    Action a;
    const std::string op = ja["op"].get<std::string>();
    if (op == "move") {
      a.op = ActionOp::move;
      if (!ja.contains("from") || !ja.contains("to")) {
        fail(Errc::malformed_action, "move needs from/to: " + ja.dump());
      }
      a.from = json_to_vec3(ja["from"], Errc::malformed_action);
      a.to = json_to_vec3(ja["to"], Errc::malformed_action);
    } else if (op == "place_block" || op == "dig_block") {
      a.op = op == "place_block" ? ActionOp::place_block : ActionOp::dig_block;
      if (!ja.contains("pos")) fail(Errc::malformed_action, "action needs pos: " + ja.dump());
      a.pos = json_to_vec3(ja["pos"], Errc::malformed_action);
      if (a.op == ActionOp::place_block) {
        if (!ja.contains("material") || !ja["material"].is_string()) {
          fail(Errc::malformed_action, "place_block needs a material: " + ja.dump());
        }
        a.material = ja["material"].get<std::string>();
        if (!mats.known(a.material) || a.material == "air") {
          fail(Errc::malformed_action, "unknown material '" + a.material + "'");
        }
      }
    } else {
      fail(Errc::malformed_action, "unknown op '" + op + "'");
    }
    script.actions.push_back(std::move(a));
  }
  return script;
}

std::string print_actions(const ActionScript& s) {
  ordered_json root = ordered_json::array();
  for (const Action& a : s.actions) {
    ordered_json ja;
    switch (a.op) {
      case ActionOp::move:
        ja["op"] = "move";
        ja["from"] = vec3_to_json(a.from);
        ja["to"] = vec3_to_json(a.to);
        break;
      case ActionOp::place_block:
        ja["op"] = "place_block";
        ja["pos"] = vec3_to_json(a.pos);
        ja["material"] = a.material;
        break;
      case ActionOp::dig_block:
        ja["op"] = "dig_block";
        ja["pos"] = vec3_to_json(a.pos);
        break;
    }
    root.push_back(std::move(ja));
  }
  return root.dump(2) + "\n";
}

}  // namespace luban::dsl
