#include "roborun/service.h"

#include <cmath>
#include <utility>

#include "roborun/codegen.h"
#include "roborun/dsl.h"
#include "roborun/json.h"

namespace roborun {

int StatusFor(const Diagnostics& diags) {
  for (const Diagnostic& d : diags) {
    if (d.code == DiagCode::kIo) return 500;
  }
  for (const Diagnostic& d : diags) {
    if (d.code == DiagCode::kNotFound) return 404;
    if (d.code == DiagCode::kUnsolvable) return 409;
  }
  return 400;
}

ApiResponse ErrorResponse(const Diagnostics& diags) {
  return {StatusFor(diags), DumpJson(DiagnosticsToJson(diags))};
}

Result<Trace> ValidateAndExecute(const Program& program, const Level& level,
                                 const ExecLimits& limits) {
  Diagnostics problems = ValidateLevel(level);
  if (!problems.empty()) return problems;
  problems = CheckLimits(limits);
  Diagnostics program_problems = ValidateProgram(program, level);
  problems.insert(problems.end(), program_problems.begin(), program_problems.end());
  if (!problems.empty()) return problems;
  return Execute(program, level, limits);
}

namespace {

ApiResponse Ok(const Json& doc, int status = 200) { return {status, DumpJson(doc)}; }

Diagnostic BadRequest(std::string message) {
  return MakeDiag(DiagCode::kJson, std::move(message));
}

Result<Json> RequestObject(std::string_view body,
                           std::initializer_list<std::string_view> allowed) {
  auto doc = ParseJsonText(body);
  if (!doc) return doc.diagnostics();
  if (!doc->is_object()) return BadRequest("request body must be a JSON object");
  if (auto bad = json_detail::RejectUnknownKeys(*doc, allowed, "request")) return *bad;
  return doc;
}

// Program as canonical text (a string) or as a program document.
Result<Program> ProgramField(const Json& req) {
  if (!req.contains("program")) return BadRequest("request is missing 'program'");
  const Json& value = req.at("program");
  if (value.is_string()) return ParseProgram(value.get<std::string>());
  return ProgramFromJson(value);
}

Result<Level> LevelField(const Json& req, const LevelStore& store) {
  const bool by_id = req.contains("level_id");
  const bool inline_doc = req.contains("level");
  if (by_id == inline_doc) {
    return BadRequest("request needs exactly one of 'level_id' and 'level'");
  }
  if (by_id) {
    if (!req.at("level_id").is_string()) return BadRequest("'level_id' must be a string");
    return store.Load(req.at("level_id").get<std::string>());
  }
  return LevelFromJson(req.at("level"));
}

Result<ExecLimits> LimitsField(const Json& req) {
  ExecLimits limits;
  if (!req.contains("limits")) return limits;
  const Json& doc = req.at("limits");
  if (!doc.is_object()) return BadRequest("'limits' must be an object");
  if (auto bad = json_detail::RejectUnknownKeys(doc, {"max_steps"}, "limits")) return *bad;
  if (doc.contains("max_steps")) {
    auto v = json_detail::ClampedInt(doc.at("max_steps"));
    if (!v) return BadRequest("'limits.max_steps' must be an integer");
    limits.max_primitive_steps = *v;
  }
  return limits;
}

struct ExecutedRequest {
  Program program;
  Trace trace;
};

Result<ExecutedRequest> RunRequest(const Json& req, const LevelStore& store) {
  auto level = LevelField(req, store);
  if (!level) return level.diagnostics();
  auto program = ProgramField(req);
  if (!program) return program.diagnostics();
  auto limits = LimitsField(req);
  if (!limits) return limits.diagnostics();
  auto trace = ValidateAndExecute(*program, *level, *limits);
  if (!trace) return trace.diagnostics();
  return ExecutedRequest{std::move(program).value(), std::move(trace).value()};
}

}  // namespace

Service::Service(LevelStore store, ScoreConfig score_config)
    : store_(std::move(store)), score_config_(score_config) {}

ApiResponse Service::Parse(std::string_view body) const {
  auto req = RequestObject(body, {"text"});
  if (!req) return ErrorResponse(req.diagnostics());
  if (!req->contains("text") || !req->at("text").is_string()) {
    return ErrorResponse({BadRequest("'text' must be a string")});
  }
  auto program = ParseProgram(req->at("text").get<std::string>());
  if (!program) return ErrorResponse(program.diagnostics());
  Json out;
  out["program"] = ProgramToJson(*program);
  return Ok(out);
}

ApiResponse Service::Execute(std::string_view body) const {
  auto req = RequestObject(body, {"level_id", "level", "program", "limits"});
  if (!req) return ErrorResponse(req.diagnostics());
  auto run = RunRequest(*req, store_);
  if (!run) return ErrorResponse(run.diagnostics());
  return Ok(TraceToJson(run->trace));
}

ApiResponse Service::Score(std::string_view body) const {
  auto req = RequestObject(body, {"level_id", "level", "program", "limits",
                                  "elapsed_seconds"});
  if (!req) return ErrorResponse(req.diagnostics());
  if (!req->contains("elapsed_seconds") || !req->at("elapsed_seconds").is_number()) {
    return ErrorResponse(
        {MakeDiag(DiagCode::kTime, "'elapsed_seconds' must be a number")});
  }
  const double elapsed = req->at("elapsed_seconds").get<double>();
  if (!std::isfinite(elapsed) || elapsed < 0) {
    return ErrorResponse(
        {MakeDiag(DiagCode::kTime, "'elapsed_seconds' must not be negative")});
  }
  auto run = RunRequest(*req, store_);
  if (!run) return ErrorResponse(run.diagnostics());
  auto score = ComputeScore(run->program, run->trace, elapsed, score_config_);
  if (!score) return ErrorResponse(score.diagnostics());
  Json out;
  out["trace"] = TraceToJson(run->trace);
  out["score"] = BreakdownToJson(*score);
  return Ok(out);
}

ApiResponse Service::Export(std::string_view body) const {
  auto req = RequestObject(body, {"program", "target"});
  if (!req) return ErrorResponse(req.diagnostics());
  if (!req->contains("target") || !req->at("target").is_string()) {
    return ErrorResponse({MakeDiag(DiagCode::kTarget, "'target' must be a string")});
  }
  const std::string name = req->at("target").get<std::string>();
  auto target = TargetFromName(name);
  if (!target) {
    return ErrorResponse({MakeDiag(
        DiagCode::kTarget,
        "unknown export target '" + name + "'; use pseudocode or touchdevelop")});
  }
  auto program = ProgramField(*req);
  if (!program) return ErrorResponse(program.diagnostics());
  Json out;
  out["text"] = Emit(*program, *target);
  return Ok(out);
}

ApiResponse Service::ListLevels() const {
  auto list = store_.List();
  if (!list) return ErrorResponse(list.diagnostics());
  Json out = Json::array();
  for (const LevelSummary& s : *list) out.push_back(SummaryToJson(s));
  return Ok(out);
}

ApiResponse Service::GetLevel(const std::string& id) const {
  auto level = store_.Load(id);
  if (!level) return ErrorResponse(level.diagnostics());
  return Ok(LevelToJson(*level));
}

ApiResponse Service::CreateLevel(std::string_view body) {
  auto doc = ParseJsonText(body);
  if (!doc) return ErrorResponse(doc.diagnostics());
  auto level = LevelFromJson(*doc);
  if (!level) return ErrorResponse(level.diagnostics());
  auto id = store_.Save(std::move(level).value());
  if (!id) return ErrorResponse(id.diagnostics());
  Json out;
  out["id"] = *id;
  return Ok(out, 201);
}

}  // namespace roborun
