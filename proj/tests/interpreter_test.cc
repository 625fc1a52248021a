#include <random>
#include <string>

#include "gtest/gtest.h"
#include "roborun/dsl.h"
#include "roborun/interpreter.h"
#include "testing/test_support.h"

namespace roborun {
namespace {

using testing::MakeLevel;

Program P(std::string_view text) {
  auto r = ParseProgram(text);
  EXPECT_TRUE(r.ok()) << text;
  return r.ok() ? r.value() : Program{};
}

const Level kOpen5x5 = MakeLevel(5, 5, {{0, 0}, Direction::kEast}, {4, 0});
const Level kCorridor = MakeLevel(5, 1, {{0, 0}, Direction::kEast}, {4, 0});
const Level kWall3x3 = MakeLevel(3, 3, {{0, 0}, Direction::kEast}, {2, 2}, {{1, 0}});

constexpr Direction E = Direction::kEast;

TEST(EvalConditionTest, Sensors) {
  const RobotPose start{{0, 0}, E};
  EXPECT_TRUE(EvalCondition({Sensor::kAheadClear, 0}, start, kCorridor));
  EXPECT_FALSE(EvalCondition({Sensor::kLeftClear, 0}, start, kCorridor));   // north is off-grid
  EXPECT_FALSE(EvalCondition({Sensor::kRightClear, 0}, start, kCorridor));  // south is off-grid
  EXPECT_TRUE(EvalCondition({Sensor::kRightClear, 0}, start, kOpen5x5));
  EXPECT_FALSE(EvalCondition({Sensor::kAheadClear, 0}, start, kWall3x3));
  EXPECT_FALSE(EvalCondition({Sensor::kAtGoal, 0}, start, kOpen5x5));
  EXPECT_TRUE(EvalCondition({Sensor::kAtGoal, 0}, {{4, 0}, E}, kOpen5x5));
  EXPECT_TRUE(EvalCondition({Sensor::kAtGoal, 1}, start, kOpen5x5));
}

TEST(EvalConditionTest, DoubleNegationIsIdentity) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const Level level = testing::RandomLevel(rng, 1, 6, 0.3);
    const RobotPose pose{level.start.cell, testing::RandomDirection(rng)};
    for (int s = 0; s < 4; ++s) {
      const Condition c{static_cast<Sensor>(s), 0};
      EXPECT_EQ(EvalCondition(Not(Not(c)), pose, level), EvalCondition(c, pose, level));
      EXPECT_NE(EvalCondition(Not(c), pose, level), EvalCondition(c, pose, level));
    }
  }
}

// Hand-traced expectations.

TEST(ExecuteTest, MoveToGoal) {
  const Trace t = Execute(P("move 4"), kOpen5x5);
  const std::vector<TraceEvent> expected = {
      event::StmtEnter{0},
      event::Moved{{0, 0}, {1, 0}, E},
      event::Moved{{1, 0}, {2, 0}, E},
      event::Moved{{2, 0}, {3, 0}, E},
      event::Moved{{3, 0}, {4, 0}, E},
      event::GoalReached{{4, 0}},
  };
  EXPECT_EQ(t.events, expected);
  EXPECT_EQ(t.outcome, Outcome::kGoalReached);
  EXPECT_EQ(t.primitive_steps, 4);
  EXPECT_EQ(t.final_pose, (RobotPose{{4, 0}, E}));
}

TEST(ExecuteTest, CrashIntoWall) {
  const Trace t = Execute(P("move 2"), kWall3x3);
  const std::vector<TraceEvent> expected = {event::StmtEnter{0},
                                            event::Crashed{{0, 0}, {1, 0}}};
  EXPECT_EQ(t.events, expected);
  EXPECT_EQ(t.outcome, Outcome::kCrashed);
  EXPECT_EQ(t.final_pose, (RobotPose{{0, 0}, E}));
  EXPECT_EQ(t.primitive_steps, 0);
}

TEST(ExecuteTest, CrashOffTheGrid) {
  const Trace t = Execute(P("right move 3"), kWall3x3);
  ASSERT_EQ(t.outcome, Outcome::kCrashed);
  EXPECT_EQ(t.events.back(), TraceEvent(event::Crashed{{0, 2}, {0, 3}}));
  EXPECT_EQ(t.final_pose, (RobotPose{{0, 2}, Direction::kSouth}));
  EXPECT_EQ(t.primitive_steps, 3);
}

TEST(ExecuteTest, WhileToGoalInCorridor) {
  const Trace t = Execute(P("while ahead_clear { move 1 }"), kCorridor);
  std::vector<TraceEvent> expected = {event::StmtEnter{0}};
  for (int x = 0; x < 4; ++x) {
    expected.push_back(event::ConditionEval{0, true});
    expected.push_back(event::StmtEnter{1});
    expected.push_back(event::Moved{{x, 0}, {x + 1, 0}, E});
  }
  expected.push_back(event::GoalReached{{4, 0}});
  EXPECT_EQ(t.events, expected);
  EXPECT_EQ(t.outcome, Outcome::kGoalReached);
  EXPECT_EQ(t.primitive_steps, 8);
}

TEST(ExecuteTest, SpinningHitsStepLimitExactly) {
  const Trace t = Execute(P("while not at_goal { left }"), kOpen5x5);
  EXPECT_EQ(t.outcome, Outcome::kStepLimitHit);
  EXPECT_EQ(t.primitive_steps, kDefaultMaxSteps);
  EXPECT_EQ(t.events.back(), TraceEvent(event::StepLimitHit{}));

  const Trace small = Execute(P("while not at_goal { left }"), kOpen5x5, {5});
  const std::vector<TraceEvent> expected = {
      event::StmtEnter{0},
      event::ConditionEval{0, true}, event::StmtEnter{1}, event::Turned{1, E, Direction::kNorth},
      event::ConditionEval{0, true}, event::StmtEnter{1},
      event::Turned{1, Direction::kNorth, Direction::kWest},
      event::ConditionEval{0, true}, event::StmtEnter{1},
      event::StepLimitHit{},
  };
  EXPECT_EQ(small.events, expected);
  EXPECT_EQ(small.primitive_steps, 5);
  EXPECT_EQ(small.final_pose, (RobotPose{{0, 0}, Direction::kWest}));
}

TEST(ExecuteTest, EmptyProgramEnds) {
  const Trace t = Execute(Program{}, kOpen5x5);
  EXPECT_EQ(t.outcome, Outcome::kEnded);
  EXPECT_EQ(t.final_pose, kOpen5x5.start);
  EXPECT_TRUE(t.events.empty());
  EXPECT_EQ(t.primitive_steps, 0);
}

TEST(ExecuteTest, GoalStopsRemainingStatements) {
  const Trace t = Execute(P("move 4 left left"), kOpen5x5);
  EXPECT_EQ(t.outcome, Outcome::kGoalReached);
  EXPECT_EQ(t.final_pose.facing, E);
  EXPECT_EQ(t.events.size(), 6u);
}

TEST(ExecuteTest, ProgramEndsShortOfGoal) {
  const Trace t = Execute(P("move 2 left"), kOpen5x5);
  EXPECT_EQ(t.outcome, Outcome::kEnded);
  EXPECT_EQ(t.final_pose, (RobotPose{{2, 0}, Direction::kNorth}));
  EXPECT_EQ(t.primitive_steps, 3);
}

TEST(ExecuteTest, IfElseEvaluatesOnce) {
  const Trace t = Execute(P("if ahead_clear { left } else { right }"), kWall3x3);
  const std::vector<TraceEvent> expected = {
      event::StmtEnter{0}, event::ConditionEval{0, false}, event::StmtEnter{2},
      event::Turned{2, E, Direction::kSouth}};
  EXPECT_EQ(t.events, expected);
  EXPECT_EQ(t.outcome, Outcome::kEnded);
}

TEST(ExecuteTest, RepeatEmitsNoIterationEvents) {
  const Trace t = Execute(P("repeat 3 { left }"), kOpen5x5);
  EXPECT_EQ(t.events.size(), 1u + 3u * 2u);
  EXPECT_EQ(t.final_pose.facing, Direction::kSouth);
}

TEST(ExecuteTest, StepCostlessLoopsStayBounded) {
  // Eight nested repeat-99 loops around nothing: 99^8 iterations that cost
  // no primitive steps.
  Block inner = {};
  for (int i = 0; i < 8; ++i) inner = {MakeRepeat(99, std::move(inner))};
  const Program program = MakeProgram(std::move(inner));
  const ExecLimits limits{100};
  const Trace t = Execute(program, kOpen5x5, limits);
  EXPECT_EQ(t.outcome, Outcome::kStepLimitHit);
  EXPECT_LE(t.events.size(), EventBudget(program, limits));
  EXPECT_EQ(testing::CheckTraceInvariants(program, kOpen5x5, limits, t), std::nullopt);
}

TEST(ExecuteTest, DeterministicAndInvariantPreserving) {
  std::mt19937_64 rng(99);
  testing::ProgramGenerator gen(rng, {});
  for (int i = 0; i < 500; ++i) {
    const Level level = testing::RandomLevel(rng, 1, 8, 0.25);
    const Program program = gen.Next();
    const ExecLimits limits{500};
    const Trace a = Execute(program, level, limits);
    const Trace b = Execute(program, level, limits);
    EXPECT_EQ(a, b);
    EXPECT_EQ(TraceToJson(a).dump(), TraceToJson(b).dump());
    auto problem = testing::CheckTraceInvariants(program, level, limits, a);
    EXPECT_EQ(problem, std::nullopt) << PrintProgram(program);
  }
}

TEST(ExecuteTest, TurnIdentity) {
  const Trace t = Execute(P("left left left left"), kOpen5x5);
  int turns = 0;
  for (const auto& ev : t.events) turns += std::holds_alternative<event::Turned>(ev);
  EXPECT_EQ(turns, 4);
  EXPECT_EQ(t.final_pose, kOpen5x5.start);
}

TEST(ValidateProgramTest, MoveLongerThanMaze) {
  Diagnostics d = ValidateProgram(P("move 6"), kOpen5x5);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].code, DiagCode::kMoveOob);
  EXPECT_EQ(d[0].statement_id, 0);
  EXPECT_TRUE(ValidateProgram(P("move 5"), kOpen5x5).empty());
  // Wide but short levels use the larger side.
  EXPECT_TRUE(ValidateProgram(P("move 5"), kCorridor).empty());
}

TEST(ValidateProgramTest, NestedMovesAreChecked) {
  Diagnostics d = ValidateProgram(P("repeat 2 { if at_goal { } else { move 9 } }"), kOpen5x5);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].statement_id, 2);
}

TEST(ValidateProgramTest, LanguageLimits) {
  Block inner = {MakeLeft()};
  for (int i = 0; i < 8; ++i) inner = {MakeRepeat(2, std::move(inner))};
  Diagnostics d = ValidateProgram(MakeProgram(inner), kOpen5x5);
  ASSERT_FALSE(d.empty());
  EXPECT_EQ(d[0].code, DiagCode::kDepth);

  Diagnostics range = ValidateProgram(MakeProgram({MakeMove(0), MakeRepeat(120, {})}), kOpen5x5);
  ASSERT_EQ(range.size(), 2u);
  EXPECT_EQ(range[0].code, DiagCode::kMoveRange);
  EXPECT_EQ(range[1].code, DiagCode::kLoopRange);
}

TEST(LimitsTest, Range) {
  EXPECT_TRUE(CheckLimits({1}).empty());
  EXPECT_TRUE(CheckLimits({1'000'000}).empty());
  EXPECT_EQ(CheckLimits({0}).at(0).code, DiagCode::kLimits);
  EXPECT_EQ(CheckLimits({1'000'001}).at(0).code, DiagCode::kLimits);
}

TEST(TraceJsonTest, WireFormat) {
  EXPECT_EQ(TraceToJson(Execute(P("move 2"), kWall3x3)).dump(),
            R"({"outcome":"crash","final":{"x":0,"y":0,"facing":"E"},"steps":0,"events":[)"
            R"({"e":"enter","id":0},{"e":"crashed","at":{"x":0,"y":0},"attempted":{"x":1,"y":0}}]})");
  EXPECT_EQ(TraceToJson(Execute(P("if ahead_clear { left } move 1"), kCorridor)).dump(),
            R"({"outcome":"crash","final":{"x":0,"y":0,"facing":"N"},"steps":2,"events":[)"
            R"({"e":"enter","id":0},{"e":"cond","id":0,"value":true},{"e":"enter","id":1},)"
            R"({"e":"turned","id":1,"from":"E","to":"N"},{"e":"enter","id":2},)"
            R"({"e":"crashed","at":{"x":0,"y":0},"attempted":{"x":0,"y":-1}}]})");
  EXPECT_EQ(TraceToJson(Execute(P("move 4"), kCorridor)).dump(),
            R"({"outcome":"goal","final":{"x":4,"y":0,"facing":"E"},"steps":4,"events":[)"
            R"({"e":"enter","id":0},)"
            R"({"e":"moved","from":{"x":0,"y":0},"to":{"x":1,"y":0},"facing":"E"},)"
            R"({"e":"moved","from":{"x":1,"y":0},"to":{"x":2,"y":0},"facing":"E"},)"
            R"({"e":"moved","from":{"x":2,"y":0},"to":{"x":3,"y":0},"facing":"E"},)"
            R"({"e":"moved","from":{"x":3,"y":0},"to":{"x":4,"y":0},"facing":"E"},)"
            R"({"e":"goal","at":{"x":4,"y":0}}]})");
  EXPECT_EQ(TraceToJson(Execute(P("left"), kCorridor, {1})).dump(),
            R"({"outcome":"ended","final":{"x":0,"y":0,"facing":"N"},"steps":1,"events":[)"
            R"({"e":"enter","id":0},{"e":"turned","id":0,"from":"E","to":"N"}]})");
  EXPECT_EQ(TraceToJson(Execute(P("left left"), kCorridor, {1})).dump(),
            R"({"outcome":"step_limit","final":{"x":0,"y":0,"facing":"N"},"steps":1,"events":[)"
            R"({"e":"enter","id":0},{"e":"turned","id":0,"from":"E","to":"N"},)"
            R"({"e":"enter","id":1},{"e":"limit"}]})");
}

}  // namespace
}  // namespace roborun
