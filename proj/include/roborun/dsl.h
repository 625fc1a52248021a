#pragma once

// Textual and JSON surfaces of the robot language.
//
// Grammar (whitespace-insensitive, `#` starts a line comment):
//
//   program   = { statement } ;
//   statement = "move" INT | "left" | "right"
//             | "repeat" INT block
//             | "while" condition block
//             | "if" condition block [ "else" block ] ;
//   block     = "{" { statement } "}" ;
//   condition = "ahead_clear" | "left_clear" | "right_clear"
//             | "at_goal" | "not" condition ;
//   INT       = decimal 1..99 ;

#include <string>
#include <string_view>

#include "roborun/ast.h"
#include "roborun/diagnostic.h"
#include "roborun/json.h"

namespace roborun {

// Parses program text. Ids are assigned in pre-order and source_text is
// kept. On failure no partial program is returned; diagnostics carry byte
// spans into `text`.
Result<Program> ParseProgram(std::string_view text);

// Canonical text: one statement per line, two-space indentation, opening
// brace on the statement line. ParseProgram(PrintProgram(p)) == p.
std::string PrintProgram(const Program& program);

std::string_view SensorName(Sensor sensor);

// {"body":[statement...]}; statement shapes follow the wire schema, e.g.
// {"t":"move","n":3,"id":0}.
Json ProgramToJson(const Program& program);
Json ConditionToJson(const Condition& cond);

// Decodes and re-validates a program document. Embedded ids are optional,
// but when present they must equal the pre-order numbering.
Result<Program> ProgramFromJson(const Json& doc);

// Range, nesting, size and negation limits. Empty when the program is
// statically well formed.
Diagnostics CheckStaticLimits(const Program& program);

}  // namespace roborun
