#pragma once

#include <string>
#include <vector>

#include "roborun/ast.h"
#include "roborun/diagnostic.h"
#include "roborun/interpreter.h"
#include "roborun/json.h"

namespace roborun {

enum class ConstructKind { kRepeat, kWhile, kIf };

// Point values. All bonuses are paid only when the goal was reached:
//   completion = completion_points
//   constructs = construct_points * |executed construct kinds|
//   brevity    = max(0, brevity_base - brevity_per_statement * statements)
//   speed      = max(0, speed_base - floor(elapsed_seconds))
struct ScoreConfig {
  int completion_points = 500;
  int construct_points = 100;
  int brevity_base = 300;
  int brevity_per_statement = 20;
  int speed_base = 200;
};

struct ScoreBreakdown {
  int completion = 0;
  int constructs = 0;
  int brevity = 0;
  int speed = 0;
  int total = 0;
  int statement_count = 0;
  std::vector<ConstructKind> construct_kinds_used;  // repeat, while, if order

  friend bool operator==(const ScoreBreakdown&, const ScoreBreakdown&) = default;
};

// E_TRACE_MISMATCH if the trace names a statement id the program lacks,
// E_TIME if elapsed_seconds is negative or not finite.
Result<ScoreBreakdown> ComputeScore(const Program& program, const Trace& trace,
                                    double elapsed_seconds,
                                    const ScoreConfig& config = {});

Json BreakdownToJson(const ScoreBreakdown& breakdown);

// {"completion":..,"constructs":..,"brevity":..,"speed":..} style overrides;
// keys are the ScoreConfig field names. Missing keys keep their defaults.
Result<ScoreConfig> ScoreConfigFromJson(const Json& doc);

}  // namespace roborun
