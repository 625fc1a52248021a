#include "roborun/codegen.h"

#include "overloaded.h"

namespace roborun {

std::optional<RenderTarget> TargetFromName(std::string_view name) {
  if (name == "pseudocode") return RenderTarget::kPseudocode;
  if (name == "touchdevelop") return RenderTarget::kTouchDevelop;
  return std::nullopt;
}

std::string_view TargetName(RenderTarget target) {
  return target == RenderTarget::kPseudocode ? "pseudocode" : "touchdevelop";
}

namespace {

// Collects output one line at a time at a fixed indentation unit.
class LineWriter {
 public:
  explicit LineWriter(int unit) : unit_(unit) {}

  void Line(int depth, std::string_view text) {
    out_.append(static_cast<std::size_t>(depth * unit_), ' ');
    out_ += text;
    out_ += '\n';
  }

  std::string Take() { return std::move(out_); }

 private:
  int unit_;
  std::string out_;
};

std::string Phrase(const Condition& cond) {
  std::string out;
  for (int i = 0; i < cond.negations; ++i) out += "it is not true that ";
  switch (cond.sensor) {
    case Sensor::kAheadClear:
      return out + "the path ahead is clear";
    case Sensor::kLeftClear:
      return out + "the path to the left is clear";
    case Sensor::kRightClear:
      return out + "the path to the right is clear";
    case Sensor::kAtGoal:
      return out + "the robot is at the goal";
  }
  return out;
}

void EnglishBlock(const Block& body, int depth, LineWriter& w) {
  for (const Statement& s : body) {
    std::visit(
        Overloaded{
            [&](const Move& m) {
              w.Line(depth, "go straight for " + std::to_string(m.squares) +
                                (m.squares == 1 ? " square" : " squares"));
            },
            [&](const TurnLeft&) { w.Line(depth, "turn left"); },
            [&](const TurnRight&) { w.Line(depth, "turn right"); },
            [&](const Repeat& r) {
              w.Line(depth, "repeat " + std::to_string(r.times) + " times");
              EnglishBlock(r.body, depth + 1, w);
            },
            [&](const While& wh) {
              w.Line(depth, "while " + Phrase(wh.cond));
              EnglishBlock(wh.body, depth + 1, w);
            },
            [&](const IfElse& i) {
              w.Line(depth, "if " + Phrase(i.cond));
              EnglishBlock(i.then_body, depth + 1, w);
              if (!i.else_body.empty()) {
                w.Line(depth, "otherwise");
                EnglishBlock(i.else_body, depth + 1, w);
              }
            },
        },
        s.node);
  }
}

std::string ScriptCondition(const Condition& cond) {
  std::string out;
  for (int i = 0; i < cond.negations; ++i) out += "not ";
  switch (cond.sensor) {
    case Sensor::kAheadClear:
      return out + "robot->ahead_clear()";
    case Sensor::kLeftClear:
      return out + "robot->left_clear()";
    case Sensor::kRightClear:
      return out + "robot->right_clear()";
    case Sensor::kAtGoal:
      return out + "robot->at_goal()";
  }
  return out;
}

std::string LoopVariable(int enclosing_repeats) {
  return enclosing_repeats == 0 ? "i" : "i" + std::to_string(enclosing_repeats + 1);
}

void ScriptBlock(const Block& body, int depth, int repeats, LineWriter& w) {
  for (const Statement& s : body) {
    std::visit(
        Overloaded{
            [&](const Move& m) {
              w.Line(depth, "robot->go_straight(" + std::to_string(m.squares) + ")");
            },
            [&](const TurnLeft&) { w.Line(depth, "robot->turn_left()"); },
            [&](const TurnRight&) { w.Line(depth, "robot->turn_right()"); },
            [&](const Repeat& r) {
              w.Line(depth, "for 0 <= " + LoopVariable(repeats) + " < " +
                                std::to_string(r.times) + " do {");
              ScriptBlock(r.body, depth + 1, repeats + 1, w);
              w.Line(depth, "}");
            },
            [&](const While& wh) {
              w.Line(depth, "while " + ScriptCondition(wh.cond) + " do {");
              ScriptBlock(wh.body, depth + 1, repeats, w);
              w.Line(depth, "}");
            },
            [&](const IfElse& i) {
              w.Line(depth, "if " + ScriptCondition(i.cond) + " then {");
              ScriptBlock(i.then_body, depth + 1, repeats, w);
              w.Line(depth, "} else {");
              ScriptBlock(i.else_body, depth + 1, repeats, w);
              w.Line(depth, "}");
            },
        },
        s.node);
  }
}

}  // namespace

std::string EmitPseudocode(const Program& program) {
  LineWriter w(4);
  EnglishBlock(program.body, 0, w);
  return w.Take();
}

std::string EmitTouchDevelop(const Program& program) {
  LineWriter w(2);
  w.Line(0, "action run_maze() {");
  ScriptBlock(program.body, 1, 0, w);
  w.Line(0, "}");
  return w.Take();
}

std::string Emit(const Program& program, RenderTarget target) {
  return target == RenderTarget::kPseudocode ? EmitPseudocode(program)
                                             : EmitTouchDevelop(program);
}

}  // namespace roborun
