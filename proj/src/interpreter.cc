#include "roborun/interpreter.h"

#include <algorithm>
#include <string>
#include <utility>

#include "overloaded.h"
#include "roborun/dsl.h"

namespace roborun {

std::string_view OutcomeName(Outcome outcome) {
  switch (outcome) {
    case Outcome::kGoalReached:
      return "goal";
    case Outcome::kCrashed:
      return "crash";
    case Outcome::kStepLimitHit:
      return "step_limit";
    case Outcome::kEnded:
      return "ended";
  }
  return "?";
}

Diagnostics CheckLimits(const ExecLimits& limits) {
  if (limits.max_primitive_steps >= 1 &&
      limits.max_primitive_steps <= kMaxStepsCeiling) {
    return {};
  }
  return {MakeDiag(DiagCode::kLimits,
                   "max steps must be between 1 and " +
                       std::to_string(kMaxStepsCeiling) + ", not " +
                       std::to_string(limits.max_primitive_steps))};
}

std::size_t EventBudget(const Program& program, const ExecLimits& limits) {
  return 4 * static_cast<std::size_t>(std::max(limits.max_primitive_steps, 0)) +
         static_cast<std::size_t>(CountStatements(program.body));
}

bool EvalCondition(const Condition& cond, const RobotPose& pose,
                   const Level& level) {
  bool value = false;
  switch (cond.sensor) {
    case Sensor::kAheadClear:
      value = CellFree(level, ForwardCell(pose));
      break;
    case Sensor::kLeftClear:
      value = CellFree(level, Step(pose.cell, Rotate(pose.facing, Turn::kLeft)));
      break;
    case Sensor::kRightClear:
      value = CellFree(level, Step(pose.cell, Rotate(pose.facing, Turn::kRight)));
      break;
    case Sensor::kAtGoal:
      value = pose.cell == level.goal;
      break;
  }
  return cond.negations % 2 == 0 ? value : !value;
}

namespace {

class Machine {
 public:
  Machine(const Level& level, const ExecLimits& limits, std::size_t budget)
      : level_(level), limits_(limits), budget_(budget) {
    pose_ = level.start;
  }

  Trace Run(const Block& body) {
    if (RunBlock(body)) trace_.outcome = Outcome::kEnded;
    trace_.final_pose = pose_;
    trace_.primitive_steps = steps_;
    return std::move(trace_);
  }

 private:
  // Each Run* returns false once execution has halted.
  bool RunBlock(const Block& body) {
    for (const Statement& s : body) {
      if (!RunStatement(s)) return false;
    }
    return true;
  }

  bool RunStatement(const Statement& s) {
    if (!Emit(event::StmtEnter{s.id})) return false;
    return std::visit(
        Overloaded{
            [&](const Move& m) { return RunMove(m.squares); },
            [&](const TurnLeft&) { return RunTurn(s.id, Turn::kLeft); },
            [&](const TurnRight&) { return RunTurn(s.id, Turn::kRight); },
            [&](const Repeat& r) {
              for (int i = 0; i < r.times; ++i) {
                if (!RunBlock(r.body)) return false;
              }
              return true;
            },
            [&](const While& w) {
              while (true) {
                auto value = Test(s.id, w.cond);
                if (!value) return false;
                if (!*value) return true;
                if (!RunBlock(w.body)) return false;
              }
            },
            [&](const IfElse& i) {
              auto value = Test(s.id, i.cond);
              if (!value) return false;
              return RunBlock(*value ? i.then_body : i.else_body);
            },
        },
        s.node);
  }

  bool RunMove(int squares) {
    for (int i = 0; i < squares; ++i) {
      const Cell target = ForwardCell(pose_);
      if (!CellFree(level_, target)) {
        Finish(event::Crashed{pose_.cell, target}, Outcome::kCrashed);
        return false;
      }
      if (!Primitive()) return false;
      trace_.events.push_back(event::Moved{pose_.cell, target, pose_.facing});
      pose_.cell = target;
      if (pose_.cell == level_.goal) {
        Finish(event::GoalReached{pose_.cell}, Outcome::kGoalReached);
        return false;
      }
    }
    return true;
  }

  bool RunTurn(int id, Turn turn) {
    if (!Primitive()) return false;
    const Direction to = Rotate(pose_.facing, turn);
    trace_.events.push_back(event::Turned{id, pose_.facing, to});
    pose_.facing = to;
    return true;
  }

  // nullopt when halted, otherwise the condition's value.
  std::optional<bool> Test(int id, const Condition& cond) {
    if (!Primitive()) return std::nullopt;
    const bool value = EvalCondition(cond, pose_, level_);
    trace_.events.push_back(event::ConditionEval{id, value});
    return value;
  }

  // Room for one more non-terminal event, keeping a slot for the terminal.
  bool HasRoom() const { return trace_.events.size() + 2 <= budget_; }

  bool Emit(TraceEvent ev) {
    if (!HasRoom()) {
      HitLimit();
      return false;
    }
    trace_.events.push_back(std::move(ev));
    return true;
  }

  // Charges one primitive step and reserves room for its event.
  bool Primitive() {
    if (steps_ + 1 > limits_.max_primitive_steps || !HasRoom()) {
      HitLimit();
      return false;
    }
    ++steps_;
    return true;
  }

  void HitLimit() { Finish(event::StepLimitHit{}, Outcome::kStepLimitHit); }

  void Finish(TraceEvent ev, Outcome outcome) {
    trace_.events.push_back(std::move(ev));
    trace_.outcome = outcome;
  }

  const Level& level_;
  const ExecLimits& limits_;
  const std::size_t budget_;
  RobotPose pose_;
  int steps_ = 0;
  Trace trace_;
};

void CheckMoves(const Block& body, int longest, Diagnostics& out) {
  for (const Statement& s : body) {
    std::visit(Overloaded{
                   [&](const Move& m) {
                     if (m.squares <= longest) return;
                     Diagnostic d = MakeDiag(
                         DiagCode::kMoveOob,
                         "move " + std::to_string(m.squares) +
                             " is longer than the maze (at most " +
                             std::to_string(longest) + " squares)");
                     d.statement_id = s.id;
                     out.push_back(std::move(d));
                   },
                   [&](const Repeat& r) { CheckMoves(r.body, longest, out); },
                   [&](const While& w) { CheckMoves(w.body, longest, out); },
                   [&](const IfElse& i) {
                     CheckMoves(i.then_body, longest, out);
                     CheckMoves(i.else_body, longest, out);
                   },
                   [](const auto&) {},
               },
               s.node);
  }
}

}  // namespace

Trace Execute(const Program& program, const Level& level,
              const ExecLimits& limits) {
  return Machine(level, limits, EventBudget(program, limits)).Run(program.body);
}

Diagnostics ValidateProgram(const Program& program, const Level& level) {
  Diagnostics out = CheckStaticLimits(program);
  if (!IdsArePreorder(program.body)) {
    out.push_back(MakeDiag(DiagCode::kJson,
                           "statement ids are not in pre-order"));
  }
  CheckMoves(program.body, std::max(level.width, level.height), out);
  return out;
}

Json TraceToJson(const Trace& trace) {
  Json events = Json::array();
  for (const TraceEvent& ev : trace.events) {
    Json e;
    std::visit(Overloaded{
                   [&](const event::StmtEnter& x) {
                     e["e"] = "enter";
                     e["id"] = x.statement_id;
                   },
                   [&](const event::Moved& x) {
                     e["e"] = "moved";
                     e["from"] = CellToJson(x.from);
                     e["to"] = CellToJson(x.to);
                     e["facing"] = std::string(1, DirectionLetter(x.facing));
                   },
                   [&](const event::Turned& x) {
                     e["e"] = "turned";
                     e["id"] = x.statement_id;
                     e["from"] = std::string(1, DirectionLetter(x.from));
                     e["to"] = std::string(1, DirectionLetter(x.to));
                   },
                   [&](const event::ConditionEval& x) {
                     e["e"] = "cond";
                     e["id"] = x.statement_id;
                     e["value"] = x.value;
                   },
                   [&](const event::Crashed& x) {
                     e["e"] = "crashed";
                     e["at"] = CellToJson(x.at);
                     e["attempted"] = CellToJson(x.attempted);
                   },
                   [&](const event::GoalReached& x) {
                     e["e"] = "goal";
                     e["at"] = CellToJson(x.at);
                   },
                   [&](const event::StepLimitHit&) { e["e"] = "limit"; },
               },
               ev);
    events.push_back(std::move(e));
  }
  Json out;
  out["outcome"] = std::string(OutcomeName(trace.outcome));
  out["final"] = PoseToJson(trace.final_pose);
  out["steps"] = trace.primitive_steps;
  out["events"] = std::move(events);
  return out;
}

}  // namespace roborun
