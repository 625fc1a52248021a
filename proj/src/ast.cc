#include "roborun/ast.h"

#include <algorithm>
#include <utility>

#include "overloaded.h"

namespace roborun {
namespace {

void Number(Block& body, int& next) {
  for (Statement& s : body) {
    s.id = next++;
    std::visit(Overloaded{
                   [&](Repeat& r) { Number(r.body, next); },
                   [&](While& w) { Number(w.body, next); },
                   [&](IfElse& i) {
                     Number(i.then_body, next);
                     Number(i.else_body, next);
                   },
                   [](auto&) {},
               },
               s.node);
  }
}

bool CheckNumbering(const Block& body, int& next) {
  for (const Statement& s : body) {
    if (s.id != next++) return false;
    const bool ok = std::visit(
        Overloaded{
            [&](const Repeat& r) { return CheckNumbering(r.body, next); },
            [&](const While& w) { return CheckNumbering(w.body, next); },
            [&](const IfElse& i) {
              return CheckNumbering(i.then_body, next) &&
                     CheckNumbering(i.else_body, next);
            },
            [](const auto&) { return true; },
        },
        s.node);
    if (!ok) return false;
  }
  return true;
}

}  // namespace

Statement MakeMove(int squares) { return {0, Move{squares}}; }
Statement MakeLeft() { return {0, TurnLeft{}}; }
Statement MakeRight() { return {0, TurnRight{}}; }
Statement MakeRepeat(int times, Block body) {
  return {0, Repeat{times, std::move(body)}};
}
Statement MakeWhile(Condition cond, Block body) {
  return {0, While{cond, std::move(body)}};
}
Statement MakeIf(Condition cond, Block then_body, Block else_body) {
  return {0, IfElse{cond, std::move(then_body), std::move(else_body)}};
}

int AssignIds(Block& body) {
  int next = 0;
  Number(body, next);
  return next;
}

Program MakeProgram(Block body) {
  Program p{std::move(body), std::nullopt};
  AssignIds(p.body);
  return p;
}

int CountStatements(const Block& body) {
  int count = 0;
  for (const Statement& s : body) {
    ++count;
    std::visit(Overloaded{
                   [&](const Repeat& r) { count += CountStatements(r.body); },
                   [&](const While& w) { count += CountStatements(w.body); },
                   [&](const IfElse& i) {
                     count += CountStatements(i.then_body) +
                              CountStatements(i.else_body);
                   },
                   [](const auto&) {},
               },
               s.node);
  }
  return count;
}

int MaxNesting(const Block& body) {
  int deepest = 0;
  for (const Statement& s : body) {
    int inner = std::visit(
        Overloaded{
            [](const Repeat& r) { return MaxNesting(r.body); },
            [](const While& w) { return MaxNesting(w.body); },
            [](const IfElse& i) {
              return std::max(MaxNesting(i.then_body),
                              MaxNesting(i.else_body));
            },
            [](const auto&) { return 0; },
        },
        s.node);
    deepest = std::max(deepest, inner + 1);
  }
  return deepest;
}

bool IdsArePreorder(const Block& body) {
  int next = 0;
  return CheckNumbering(body, next);
}

}  // namespace roborun
