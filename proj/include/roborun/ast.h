#pragma once

// Abstract syntax of the robot language.
//
// Every statement carries a pre-order id: the whole program is numbered
// depth-first in syntactic order starting at 0 (Repeat/While bodies, then
// IfElse then-branch followed by else-branch). Ids link trace events back to
// source statements for playback highlighting.

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace roborun {

inline constexpr int kMinCount = 1;
inline constexpr int kMaxCount = 99;
inline constexpr int kMaxNesting = 8;
inline constexpr int kMaxStatements = 200;
inline constexpr int kMaxNegations = 4;

enum class Sensor { kAheadClear, kLeftClear, kRightClear, kAtGoal };

// A sensor wrapped in `negations` layers of Not. Not is the only unary
// condition, so a chain of Nots collapses to a count without losing
// structure.
struct Condition {
  Sensor sensor = Sensor::kAheadClear;
  int negations = 0;

  friend bool operator==(const Condition&, const Condition&) = default;
};

inline Condition Not(Condition c) {
  ++c.negations;
  return c;
}

struct Statement;
using Block = std::vector<Statement>;

struct Move {
  int squares = 1;
  friend bool operator==(const Move&, const Move&) = default;
};
struct TurnLeft {
  friend bool operator==(const TurnLeft&, const TurnLeft&) = default;
};
struct TurnRight {
  friend bool operator==(const TurnRight&, const TurnRight&) = default;
};
struct Repeat {
  int times = 1;
  Block body;
  friend bool operator==(const Repeat&, const Repeat&);
};
struct While {
  Condition cond;
  Block body;
  friend bool operator==(const While&, const While&);
};
struct IfElse {
  Condition cond;
  Block then_body;
  Block else_body;  // empty when the source had no else
  friend bool operator==(const IfElse&, const IfElse&);
};

struct Statement {
  int id = 0;
  std::variant<Move, TurnLeft, TurnRight, Repeat, While, IfElse> node;

  friend bool operator==(const Statement&, const Statement&) = default;
};

inline bool operator==(const Repeat& a, const Repeat& b) {
  return a.times == b.times && a.body == b.body;
}
inline bool operator==(const While& a, const While& b) {
  return a.cond == b.cond && a.body == b.body;
}
inline bool operator==(const IfElse& a, const IfElse& b) {
  return a.cond == b.cond && a.then_body == b.then_body &&
         a.else_body == b.else_body;
}

struct Program {
  Block body;
  std::optional<std::string> source_text;

  // Structural equality; source_text is ignored.
  friend bool operator==(const Program& a, const Program& b) {
    return a.body == b.body;
  }
};

// Statement builders. Ids are left at 0; call AssignIds afterwards.
Statement MakeMove(int squares);
Statement MakeLeft();
Statement MakeRight();
Statement MakeRepeat(int times, Block body);
Statement MakeWhile(Condition cond, Block body);
Statement MakeIf(Condition cond, Block then_body, Block else_body = {});

// Renumbers every statement in pre-order. Returns the statement count.
int AssignIds(Block& body);
Program MakeProgram(Block body);

int CountStatements(const Block& body);

// Depth of the deepest statement; top-level statements have depth 1.
int MaxNesting(const Block& body);

// True when the stored ids equal a fresh pre-order numbering.
bool IdsArePreorder(const Block& body);

}  // namespace roborun
