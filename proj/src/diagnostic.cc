#include "roborun/diagnostic.h"

#include <array>

namespace roborun {
namespace {

struct CodeEntry {
  DiagCode code;
  std::string_view name;
};

constexpr std::array<CodeEntry, 22> kCodes = {{
    {DiagCode::kParse, "E_PARSE"},
    {DiagCode::kJson, "E_JSON"},
    {DiagCode::kMoveRange, "E_MOVE_RANGE"},
    {DiagCode::kLoopRange, "E_LOOP_RANGE"},
    {DiagCode::kDepth, "E_DEPTH"},
    {DiagCode::kSize, "E_SIZE"},
    {DiagCode::kNotDepth, "E_NOT_DEPTH"},
    {DiagCode::kMoveOob, "E_MOVE_OOB"},
    {DiagCode::kLimits, "E_LIMITS"},
    {DiagCode::kTraceMismatch, "E_TRACE_MISMATCH"},
    {DiagCode::kTime, "E_TIME"},
    {DiagCode::kDim, "E_DIM"},
    {DiagCode::kStartOob, "E_START_OOB"},
    {DiagCode::kGoalOob, "E_GOAL_OOB"},
    {DiagCode::kWallOob, "E_WALL_OOB"},
    {DiagCode::kStartOnWall, "E_START_ON_WALL"},
    {DiagCode::kGoalOnWall, "E_GOAL_ON_WALL"},
    {DiagCode::kStartEqGoal, "E_START_EQ_GOAL"},
    {DiagCode::kUnsolvable, "E_UNSOLVABLE"},
    {DiagCode::kNotFound, "E_NOT_FOUND"},
    {DiagCode::kIo, "E_IO"},
    {DiagCode::kTarget, "E_TARGET"},
}};

}  // namespace

std::string_view CodeName(DiagCode code) {
  for (const auto& entry : kCodes) {
    if (entry.code == code) return entry.name;
  }
  return "E_UNKNOWN";
}

std::optional<DiagCode> CodeFromName(std::string_view name) {
  for (const auto& entry : kCodes) {
    if (entry.name == name) return entry.code;
  }
  return std::nullopt;
}

std::string FormatDiagnostic(const Diagnostic& diag) {
  std::string out(CodeName(diag.code));
  out += ": ";
  out += diag.message;
  if (diag.statement_id) {
    out += " (statement " + std::to_string(*diag.statement_id) + ")";
  }
  if (diag.span) {
    out += " [bytes " + std::to_string(diag.span->begin) + ".." +
           std::to_string(diag.span->end) + "]";
  }
  return out;
}

}  // namespace roborun
