#pragma once

// Wire-format helpers shared by the level, program, trace and score codecs.

#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "roborun/core.h"
#include "roborun/diagnostic.h"

namespace roborun {

// Insertion-ordered so documents keep the field order of the wire schemas.
using Json = nlohmann::ordered_json;

Result<Json> ParseJsonText(std::string_view text);

// Serialized form used by every JSON output (CLI and HTTP alike): compact,
// newline-terminated.
std::string DumpJson(const Json& doc);

Json DiagnosticToJson(const Diagnostic& diag);
Json DiagnosticsToJson(const Diagnostics& diags);  // {"diagnostics":[...]}

Json CellToJson(Cell c);
Json PoseToJson(const RobotPose& pose);

// Level document codec. Unknown fields are rejected with E_JSON. Decoding is
// structural only; see ValidateLevel for the level invariants.
Json LevelToJson(const Level& level);
Result<Level> LevelFromJson(const Json& doc);

namespace json_detail {

// Returns an E_JSON diagnostic naming the first key of `obj` outside
// `allowed`, or nullopt. `obj` must be an object.
std::optional<Diagnostic> RejectUnknownKeys(
    const Json& obj, std::initializer_list<std::string_view> allowed,
    std::string_view what);

// Reads an integer that fits in int. Larger magnitudes are clamped so range
// checks downstream still reject them.
std::optional<int> ClampedInt(const Json& value);

}  // namespace json_detail

}  // namespace roborun
