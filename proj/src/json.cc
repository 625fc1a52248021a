#include "roborun/json.h"

#include <algorithm>
#include <cstdint>
#include <limits>

namespace roborun {

using json_detail::ClampedInt;
using json_detail::RejectUnknownKeys;

Result<Json> ParseJsonText(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    return MakeDiag(DiagCode::kJson, std::string("malformed JSON: ") + e.what());
  }
}

std::string DumpJson(const Json& doc) {
  return doc.dump(-1, ' ', false, Json::error_handler_t::replace) + "\n";
}

Json DiagnosticToJson(const Diagnostic& diag) {
  Json out;
  out["code"] = std::string(CodeName(diag.code));
  out["message"] = diag.message;
  if (diag.statement_id) out["statement_id"] = *diag.statement_id;
  if (diag.span) {
    out["span"] = Json{{"begin", diag.span->begin}, {"end", diag.span->end}};
  }
  return out;
}

Json DiagnosticsToJson(const Diagnostics& diags) {
  Json list = Json::array();
  for (const auto& d : diags) list.push_back(DiagnosticToJson(d));
  Json out;
  out["diagnostics"] = std::move(list);
  return out;
}

Json CellToJson(Cell c) { return Json{{"x", c.x}, {"y", c.y}}; }

Json PoseToJson(const RobotPose& pose) {
  return Json{{"x", pose.cell.x},
              {"y", pose.cell.y},
              {"facing", std::string(1, DirectionLetter(pose.facing))}};
}

Json LevelToJson(const Level& level) {
  Json out;
  out["id"] = level.id;
  out["name"] = level.name;
  out["width"] = level.width;
  out["height"] = level.height;
  out["start"] = PoseToJson(level.start);
  out["goal"] = CellToJson(level.goal);
  Json walls = Json::array();
  for (Cell w : level.walls) walls.push_back(CellToJson(w));
  out["walls"] = std::move(walls);
  return out;
}

namespace json_detail {

std::optional<Diagnostic> RejectUnknownKeys(
    const Json& obj, std::initializer_list<std::string_view> allowed,
    std::string_view what) {
  for (const auto& [key, value] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      return MakeDiag(DiagCode::kJson, "unknown field '" + key + "' in " +
                                           std::string(what));
    }
  }
  return std::nullopt;
}

std::optional<int> ClampedInt(const Json& value) {
  constexpr int64_t kLo = std::numeric_limits<int>::min();
  constexpr int64_t kHi = std::numeric_limits<int>::max();
  if (value.is_number_unsigned()) {
    const auto v = value.get<uint64_t>();
    return static_cast<int>(std::min<uint64_t>(v, kHi));
  }
  if (value.is_number_integer()) {
    return static_cast<int>(std::clamp<int64_t>(value.get<int64_t>(), kLo, kHi));
  }
  return std::nullopt;
}

}  // namespace json_detail

namespace {

Diagnostic JsonError(std::string message) {
  return MakeDiag(DiagCode::kJson, std::move(message));
}

Result<Cell> CellFromJson(const Json& doc, std::string_view what,
                          bool with_facing, Direction* facing) {
  if (!doc.is_object()) return JsonError(std::string(what) + " must be an object");
  if (auto bad = RejectUnknownKeys(
          doc, with_facing ? std::initializer_list<std::string_view>{"x", "y", "facing"}
                           : std::initializer_list<std::string_view>{"x", "y"},
          what)) {
    return *bad;
  }
  Cell c;
  for (auto [key, dest] : {std::pair<const char*, int*>{"x", &c.x}, {"y", &c.y}}) {
    if (!doc.contains(key)) {
      return JsonError(std::string(what) + " is missing '" + key + "'");
    }
    auto v = ClampedInt(doc.at(key));
    if (!v) return JsonError(std::string(what) + "." + key + " must be an integer");
    *dest = *v;
  }
  if (with_facing) {
    if (!doc.contains("facing") || !doc.at("facing").is_string()) {
      return JsonError(std::string(what) + ".facing must be one of N, E, S, W");
    }
    auto d = DirectionFromLetter(doc.at("facing").get<std::string>());
    if (!d) return JsonError(std::string(what) + ".facing must be one of N, E, S, W");
    *facing = *d;
  }
  return c;
}

}  // namespace

Result<Level> LevelFromJson(const Json& doc) {
  if (!doc.is_object()) return JsonError("level document must be an object");
  if (auto bad = RejectUnknownKeys(
          doc, {"id", "name", "width", "height", "start", "goal", "walls"},
          "level")) {
    return *bad;
  }
  Level level;
  for (auto [key, dest] : {std::pair<const char*, std::string*>{"id", &level.id},
                           {"name", &level.name}}) {
    if (!doc.contains(key)) continue;
    if (!doc.at(key).is_string()) {
      return JsonError(std::string("level.") + key + " must be a string");
    }
    *dest = doc.at(key).get<std::string>();
  }
  for (auto [key, dest] : {std::pair<const char*, int*>{"width", &level.width},
                           {"height", &level.height}}) {
    if (!doc.contains(key)) return JsonError(std::string("level is missing '") + key + "'");
    auto v = ClampedInt(doc.at(key));
    if (!v) return JsonError(std::string("level.") + key + " must be an integer");
    *dest = *v;
  }
  if (!doc.contains("start")) return JsonError("level is missing 'start'");
  auto start = CellFromJson(doc.at("start"), "start", true, &level.start.facing);
  if (!start) return start.diagnostics();
  level.start.cell = *start;

  if (!doc.contains("goal")) return JsonError("level is missing 'goal'");
  auto goal = CellFromJson(doc.at("goal"), "goal", false, nullptr);
  if (!goal) return goal.diagnostics();
  level.goal = *goal;

  if (doc.contains("walls")) {
    const Json& walls = doc.at("walls");
    if (!walls.is_array()) return JsonError("level.walls must be an array");
    for (const Json& w : walls) {
      auto cell = CellFromJson(w, "wall", false, nullptr);
      if (!cell) return cell.diagnostics();
      if (!level.walls.insert(*cell).second) {
        return JsonError("duplicate wall at (" + std::to_string(cell->x) + "," +
                         std::to_string(cell->y) + ")");
      }
    }
  }
  return level;
}

}  // namespace roborun
