#include <random>
#include <string>

#include "gtest/gtest.h"
#include "roborun/codegen.h"
#include "roborun/dsl.h"
#include "testing/test_support.h"

namespace roborun {
namespace {

std::string Golden(const std::string& name) {
  return testing::ReadFileOrDie(std::string(ROBORUN_TEST_DATA_DIR) + "/golden/" + name);
}

Program P(std::string_view text) {
  auto r = ParseProgram(text);
  EXPECT_TRUE(r.ok()) << text;
  return r.ok() ? r.value() : Program{};
}

TEST(PseudocodeTest, Templates) {
  EXPECT_EQ(EmitPseudocode(P("move 3")), "go straight for 3 squares\n");
  EXPECT_EQ(EmitPseudocode(P("move 1")), "go straight for 1 square\n");
  EXPECT_EQ(EmitPseudocode(P("while ahead_clear { move 1 }")),
            "while the path ahead is clear\n    go straight for 1 square\n");
  EXPECT_EQ(EmitPseudocode(P("if not right_clear { left } else { right }")),
            "if it is not true that the path to the right is clear\n"
            "    turn left\n"
            "otherwise\n"
            "    turn right\n");
  EXPECT_EQ(EmitPseudocode(P("if at_goal { left }")),
            "if the robot is at the goal\n    turn left\n");
  EXPECT_EQ(EmitPseudocode(P("")), "");
}

TEST(TouchDevelopTest, Templates) {
  EXPECT_EQ(EmitTouchDevelop(P("repeat 4 { move 2 }")),
            "action run_maze() {\n"
            "  for 0 <= i < 4 do {\n"
            "    robot->go_straight(2)\n"
            "  }\n"
            "}\n");
  EXPECT_EQ(EmitTouchDevelop(P("")), "action run_maze() {\n}\n");
  EXPECT_EQ(EmitTouchDevelop(P("if at_goal { }")),
            "action run_maze() {\n"
            "  if robot->at_goal() then {\n"
            "  } else {\n"
            "  }\n"
            "}\n");
}

TEST(TouchDevelopTest, LoopVariablesFollowEnclosingRepeats) {
  const std::string text = EmitTouchDevelop(
      P("repeat 2 { repeat 3 { while ahead_clear { repeat 4 { left } } } } repeat 5 { right }"));
  EXPECT_NE(text.find("for 0 <= i < 2 do {"), std::string::npos);
  EXPECT_NE(text.find("for 0 <= i2 < 3 do {"), std::string::npos);
  EXPECT_NE(text.find("for 0 <= i3 < 4 do {"), std::string::npos);
  EXPECT_NE(text.find("for 0 <= i < 5 do {"), std::string::npos);
}

TEST(CodegenTest, GoldenFiles) {
  const Program program = P(Golden("all_kinds.rr"));
  EXPECT_EQ(EmitPseudocode(program), Golden("all_kinds.pseudo.txt"));
  EXPECT_EQ(EmitTouchDevelop(program), Golden("all_kinds.td.txt"));
  EXPECT_EQ(Emit(program, RenderTarget::kPseudocode), Golden("all_kinds.pseudo.txt"));
  EXPECT_EQ(Emit(program, RenderTarget::kTouchDevelop), Golden("all_kinds.td.txt"));
}

TEST(CodegenTest, Targets) {
  EXPECT_EQ(TargetFromName("pseudocode"), RenderTarget::kPseudocode);
  EXPECT_EQ(TargetFromName("touchdevelop"), RenderTarget::kTouchDevelop);
  EXPECT_EQ(TargetFromName("java"), std::nullopt);
  EXPECT_EQ(TargetName(RenderTarget::kTouchDevelop), "touchdevelop");
}

int LeadingSpaces(const std::string& line) {
  return static_cast<int>(line.find_first_not_of(' '));
}

// Line depth per statement, in emission order, read off the AST.
void ExpectedDepths(const Block& block, int depth, bool td, std::vector<int>& out) {
  for (const Statement& s : block) {
    out.push_back(depth);
    if (auto* r = std::get_if<Repeat>(&s.node)) {
      ExpectedDepths(r->body, depth + 1, td, out);
      if (td) out.push_back(depth);
    } else if (auto* w = std::get_if<While>(&s.node)) {
      ExpectedDepths(w->body, depth + 1, td, out);
      if (td) out.push_back(depth);
    } else if (auto* i = std::get_if<IfElse>(&s.node)) {
      ExpectedDepths(i->then_body, depth + 1, td, out);
      if (td || !i->else_body.empty()) out.push_back(depth);
      ExpectedDepths(i->else_body, depth + 1, td, out);
      if (td) out.push_back(depth);
    }
  }
}

std::vector<int> ActualDepths(const std::string& text, int unit) {
  std::vector<int> depths;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string line = text.substr(pos, nl - pos);
    const int spaces = LeadingSpaces(line);
    EXPECT_EQ(spaces % unit, 0) << line;
    depths.push_back(spaces / unit);
    pos = nl + 1;
  }
  return depths;
}

TEST(CodegenTest, IndentationMatchesNestingAndIsDeterministic) {
  std::mt19937_64 rng(5);
  testing::ProgramGenerator gen(rng, {});
  for (int i = 0; i < 300; ++i) {
    const Program program = gen.Next();
    const std::string pseudo = EmitPseudocode(program);
    const std::string td = EmitTouchDevelop(program);
    EXPECT_EQ(pseudo, EmitPseudocode(program));
    EXPECT_EQ(td, EmitTouchDevelop(program));
    ASSERT_TRUE(pseudo.empty() || pseudo.back() == '\n');
    ASSERT_EQ(td.back(), '\n');

    std::vector<int> want;
    ExpectedDepths(program.body, 0, false, want);
    EXPECT_EQ(ActualDepths(pseudo, 4), want);

    std::vector<int> want_td{0};
    ExpectedDepths(program.body, 1, true, want_td);
    want_td.push_back(0);
    EXPECT_EQ(ActualDepths(td, 2), want_td);
  }
}

}  // namespace
}  // namespace roborun
