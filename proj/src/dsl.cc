#include <string>
#include <utility>

#include "overloaded.h"
#include "roborun/dsl.h"

namespace roborun {

using json_detail::ClampedInt;
using json_detail::RejectUnknownKeys;

std::string_view SensorName(Sensor sensor) {
  switch (sensor) {
    case Sensor::kAheadClear:
      return "ahead_clear";
    case Sensor::kLeftClear:
      return "left_clear";
    case Sensor::kRightClear:
      return "right_clear";
    case Sensor::kAtGoal:
      return "at_goal";
  }
  return "?";
}

namespace {

std::optional<Sensor> SensorFromName(std::string_view name) {
  for (Sensor s : {Sensor::kAheadClear, Sensor::kLeftClear,
                   Sensor::kRightClear, Sensor::kAtGoal}) {
    if (SensorName(s) == name) return s;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Canonical printer

std::string ConditionText(const Condition& cond) {
  std::string out;
  for (int i = 0; i < cond.negations; ++i) out += "not ";
  out += SensorName(cond.sensor);
  return out;
}

void PrintBlock(const Block& body, int indent, std::string& out);

void PrintBraced(const Block& body, int indent, std::string& out) {
  out += " {\n";
  PrintBlock(body, indent + 1, out);
  out.append(2 * indent, ' ');
  out += "}";
}

void PrintBlock(const Block& body, int indent, std::string& out) {
  for (const Statement& s : body) {
    out.append(2 * indent, ' ');
    std::visit(Overloaded{
                   [&](const Move& m) { out += "move " + std::to_string(m.squares); },
                   [&](const TurnLeft&) { out += "left"; },
                   [&](const TurnRight&) { out += "right"; },
                   [&](const Repeat& r) {
                     out += "repeat " + std::to_string(r.times);
                     PrintBraced(r.body, indent, out);
                   },
                   [&](const While& w) {
                     out += "while " + ConditionText(w.cond);
                     PrintBraced(w.body, indent, out);
                   },
                   [&](const IfElse& i) {
                     out += "if " + ConditionText(i.cond);
                     PrintBraced(i.then_body, indent, out);
                     if (!i.else_body.empty()) {
                       out += " else";
                       PrintBraced(i.else_body, indent, out);
                     }
                   },
               },
               s.node);
    out += "\n";
  }
}

// ---------------------------------------------------------------------------
// Static limits

void CheckBlock(const Block& body, int depth, Diagnostics& out,
                bool& depth_reported) {
  for (const Statement& s : body) {
    if (depth > kMaxNesting && !depth_reported) {
      depth_reported = true;
      Diagnostic d = MakeDiag(DiagCode::kDepth, "blocks are nested more than " +
                                                    std::to_string(kMaxNesting) +
                                                    " deep");
      d.statement_id = s.id;
      out.push_back(std::move(d));
    }
    auto range = [&](int value, DiagCode code, std::string_view what) {
      if (value >= kMinCount && value <= kMaxCount) return;
      Diagnostic d = MakeDiag(code, std::string(what) +
                                        " needs a number from 1 to 99, not " +
                                        std::to_string(value));
      d.statement_id = s.id;
      out.push_back(std::move(d));
    };
    auto negations = [&](const Condition& c) {
      if (c.negations <= kMaxNegations) return;
      Diagnostic d = MakeDiag(DiagCode::kNotDepth,
                              "too many 'not's in one condition (limit " +
                                  std::to_string(kMaxNegations) + ")");
      d.statement_id = s.id;
      out.push_back(std::move(d));
    };
    std::visit(Overloaded{
                   [&](const Move& m) { range(m.squares, DiagCode::kMoveRange, "move"); },
                   [&](const Repeat& r) {
                     range(r.times, DiagCode::kLoopRange, "repeat");
                     CheckBlock(r.body, depth + 1, out, depth_reported);
                   },
                   [&](const While& w) {
                     negations(w.cond);
                     CheckBlock(w.body, depth + 1, out, depth_reported);
                   },
                   [&](const IfElse& i) {
                     negations(i.cond);
                     CheckBlock(i.then_body, depth + 1, out, depth_reported);
                     CheckBlock(i.else_body, depth + 1, out, depth_reported);
                   },
                   [](const auto&) {},
               },
               s.node);
  }
}

// ---------------------------------------------------------------------------
// JSON codec

Json BlockToJson(const Block& body);

Json StatementToJson(const Statement& s) {
  Json out;
  std::visit(Overloaded{
                 [&](const Move& m) {
                   out["t"] = "move";
                   out["n"] = m.squares;
                   out["id"] = s.id;
                 },
                 [&](const TurnLeft&) {
                   out["t"] = "left";
                   out["id"] = s.id;
                 },
                 [&](const TurnRight&) {
                   out["t"] = "right";
                   out["id"] = s.id;
                 },
                 [&](const Repeat& r) {
                   out["t"] = "repeat";
                   out["n"] = r.times;
                   out["id"] = s.id;
                   out["body"] = BlockToJson(r.body);
                 },
                 [&](const While& w) {
                   out["t"] = "while";
                   out["cond"] = ConditionToJson(w.cond);
                   out["id"] = s.id;
                   out["body"] = BlockToJson(w.body);
                 },
                 [&](const IfElse& i) {
                   out["t"] = "if";
                   out["cond"] = ConditionToJson(i.cond);
                   out["id"] = s.id;
                   out["then"] = BlockToJson(i.then_body);
                   out["else"] = BlockToJson(i.else_body);
                 },
             },
             s.node);
  return out;
}

Json BlockToJson(const Block& body) {
  Json out = Json::array();
  for (const Statement& s : body) out.push_back(StatementToJson(s));
  return out;
}

// Structural decoder. Throws Diagnostic on the first malformed node; range
// and limit checks happen afterwards on the decoded tree.
class Decoder {
 public:
  Block DecodeBlock(const Json& doc, std::string_view where, int depth) {
    if (!doc.is_array()) Fail(std::string(where) + " must be an array");
    if (depth > kMaxNesting + 1) {
      throw MakeDiag(DiagCode::kDepth, "blocks are nested more than " +
                                           std::to_string(kMaxNesting) + " deep");
    }
    Block out;
    for (const Json& item : doc) out.push_back(DecodeStatement(item, depth));
    return out;
  }

 private:
  [[noreturn]] static void Fail(std::string message) {
    throw MakeDiag(DiagCode::kJson, std::move(message));
  }

  Condition DecodeCondition(const Json& doc) {
    Condition cond;
    const Json* node = &doc;
    while (true) {
      if (!node->is_object() || !node->contains("c") || !node->at("c").is_string()) {
        Fail("condition must be an object with a string 'c'");
      }
      const std::string kind = node->at("c").get<std::string>();
      if (kind == "not") {
        if (auto bad = RejectUnknownKeys(*node, {"c", "inner"}, "condition")) throw *bad;
        if (!node->contains("inner")) Fail("'not' condition is missing 'inner'");
        ++cond.negations;
        node = &node->at("inner");
        continue;
      }
      if (auto bad = RejectUnknownKeys(*node, {"c"}, "condition")) throw *bad;
      auto sensor = SensorFromName(kind);
      if (!sensor) Fail("unknown condition '" + kind + "'");
      cond.sensor = *sensor;
      return cond;
    }
  }

  int DecodeCount(const Json& doc, std::string_view kind) {
    if (!doc.contains("n")) Fail("'" + std::string(kind) + "' is missing 'n'");
    auto n = ClampedInt(doc.at("n"));
    if (!n) Fail("'" + std::string(kind) + "'.n must be an integer");
    return *n;
  }

  Statement DecodeStatement(const Json& doc, int depth) {
    if (!doc.is_object() || !doc.contains("t") || !doc.at("t").is_string()) {
      Fail("statement must be an object with a string 't'");
    }
    const std::string kind = doc.at("t").get<std::string>();
    Statement s;
    s.id = next_id_++;
    if (doc.contains("id")) {
      auto id = ClampedInt(doc.at("id"));
      if (!id) Fail("statement id must be an integer");
      if (*id != s.id) {
        Fail("statement id " + std::to_string(*id) +
             " does not match its pre-order position " + std::to_string(s.id));
      }
    }
    if (kind == "move") {
      Check(doc, {"t", "n", "id"});
      s.node = Move{DecodeCount(doc, kind)};
    } else if (kind == "left") {
      Check(doc, {"t", "id"});
      s.node = TurnLeft{};
    } else if (kind == "right") {
      Check(doc, {"t", "id"});
      s.node = TurnRight{};
    } else if (kind == "repeat") {
      Check(doc, {"t", "n", "id", "body"});
      const int times = DecodeCount(doc, kind);
      s.node = Repeat{times, DecodeBlock(Field(doc, "body"), "repeat.body", depth + 1)};
    } else if (kind == "while") {
      Check(doc, {"t", "cond", "id", "body"});
      const Condition cond = DecodeCondition(Field(doc, "cond"));
      s.node = While{cond, DecodeBlock(Field(doc, "body"), "while.body", depth + 1)};
    } else if (kind == "if") {
      Check(doc, {"t", "cond", "id", "then", "else"});
      const Condition cond = DecodeCondition(Field(doc, "cond"));
      Block then_body = DecodeBlock(Field(doc, "then"), "if.then", depth + 1);
      Block else_body;
      if (doc.contains("else")) {
        else_body = DecodeBlock(doc.at("else"), "if.else", depth + 1);
      }
      s.node = IfElse{cond, std::move(then_body), std::move(else_body)};
    } else {
      Fail("unknown statement kind '" + kind + "'");
    }
    return s;
  }

  static void Check(const Json& doc, std::initializer_list<std::string_view> keys) {
    if (auto bad = RejectUnknownKeys(doc, keys, "statement")) throw *bad;
  }

  static const Json& Field(const Json& doc, const char* key) {
    if (!doc.contains(key)) Fail(std::string("statement is missing '") + key + "'");
    return doc.at(key);
  }

  int next_id_ = 0;
};

}  // namespace

std::string PrintProgram(const Program& program) {
  std::string out;
  PrintBlock(program.body, 0, out);
  return out;
}

Json ConditionToJson(const Condition& cond) {
  Json out{{"c", std::string(SensorName(cond.sensor))}};
  for (int i = 0; i < cond.negations; ++i) {
    Json wrapped;
    wrapped["c"] = "not";
    wrapped["inner"] = std::move(out);
    out = std::move(wrapped);
  }
  return out;
}

Json ProgramToJson(const Program& program) {
  Json out;
  out["body"] = BlockToJson(program.body);
  return out;
}

Result<Program> ProgramFromJson(const Json& doc) {
  if (!doc.is_object()) {
    return MakeDiag(DiagCode::kJson, "program document must be an object");
  }
  if (auto bad = RejectUnknownKeys(doc, {"body"}, "program")) return *bad;
  if (!doc.contains("body")) {
    return MakeDiag(DiagCode::kJson, "program is missing 'body'");
  }
  Program program;
  try {
    program.body = Decoder().DecodeBlock(doc.at("body"), "program.body", 1);
  } catch (const Diagnostic& d) {
    return d;
  }
  Diagnostics diags = CheckStaticLimits(program);
  if (!diags.empty()) return diags;
  return program;
}

Diagnostics CheckStaticLimits(const Program& program) {
  Diagnostics out;
  bool depth_reported = false;
  CheckBlock(program.body, 1, out, depth_reported);
  const int count = CountStatements(program.body);
  if (count > kMaxStatements) {
    out.push_back(MakeDiag(DiagCode::kSize,
                           "program has " + std::to_string(count) +
                               " statements; the limit is " +
                               std::to_string(kMaxStatements)));
  }
  return out;
}

}  // namespace roborun
