#pragma once

// Step-by-step execution of a program inside a level.
//
// Execution is a pure function of (program, level, limits). It produces the
// complete trace synchronously; pacing the playback is left to the viewer.
//
// Cost model: every single-cell move, every turn and every condition
// evaluation is one primitive step. A crash consumes no step.

#include <string_view>
#include <variant>
#include <vector>

#include "roborun/ast.h"
#include "roborun/core.h"
#include "roborun/diagnostic.h"
#include "roborun/json.h"

namespace roborun {

namespace event {

struct StmtEnter {
  int statement_id;
  friend bool operator==(const StmtEnter&, const StmtEnter&) = default;
};
struct Moved {
  Cell from;
  Cell to;
  Direction facing;
  friend bool operator==(const Moved&, const Moved&) = default;
};
struct Turned {
  int statement_id;
  Direction from;
  Direction to;
  friend bool operator==(const Turned&, const Turned&) = default;
};
struct ConditionEval {
  int statement_id;
  bool value;
  friend bool operator==(const ConditionEval&, const ConditionEval&) = default;
};
struct Crashed {
  Cell at;
  Cell attempted;
  friend bool operator==(const Crashed&, const Crashed&) = default;
};
struct GoalReached {
  Cell at;
  friend bool operator==(const GoalReached&, const GoalReached&) = default;
};
struct StepLimitHit {
  friend bool operator==(const StepLimitHit&, const StepLimitHit&) = default;
};

}  // namespace event

using TraceEvent =
    std::variant<event::StmtEnter, event::Moved, event::Turned,
                 event::ConditionEval, event::Crashed, event::GoalReached,
                 event::StepLimitHit>;

enum class Outcome { kGoalReached, kCrashed, kStepLimitHit, kEnded };

std::string_view OutcomeName(Outcome outcome);  // "goal", "crash", ...

struct Trace {
  std::vector<TraceEvent> events;
  Outcome outcome = Outcome::kEnded;
  RobotPose final_pose;
  int primitive_steps = 0;

  friend bool operator==(const Trace&, const Trace&) = default;
};

inline constexpr int kDefaultMaxSteps = 10'000;
inline constexpr int kMaxStepsCeiling = 1'000'000;

struct ExecLimits {
  int max_primitive_steps = kDefaultMaxSteps;
};

// E_LIMITS unless 1 <= max_primitive_steps <= 1,000,000.
Diagnostics CheckLimits(const ExecLimits& limits);

// Maximum number of events a trace may hold: 4 * step limit + statement
// count. Execution stops with StepLimitHit before exceeding it, which also
// bounds loops whose bodies cost no primitive steps.
std::size_t EventBudget(const Program& program, const ExecLimits& limits);

bool EvalCondition(const Condition& cond, const RobotPose& pose,
                   const Level& level);

// Callers run ValidateProgram first; the level must satisfy ValidateLevel.
Trace Execute(const Program& program, const Level& level,
              const ExecLimits& limits = {});

// Static check of a program against a level: the language limits plus
// E_MOVE_OOB for any move longer than the level's larger side. Never
// simulates.
Diagnostics ValidateProgram(const Program& program, const Level& level);

// {"outcome":..,"final":{..},"steps":N,"events":[..]}
Json TraceToJson(const Trace& trace);

}  // namespace roborun
