#include "cli.h"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "overloaded.h"
#include "roborun/codegen.h"
#include "roborun/dsl.h"
#include "roborun/interpreter.h"
#include "roborun/json.h"
#include "roborun/levels.h"
#include "roborun/scoring.h"
#include "roborun/service.h"

namespace roborun::cli {
namespace {

Result<std::string> ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return MakeDiag(DiagCode::kIo, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Prints diagnostics and maps them to an exit code.
int Report(const Diagnostics& diags, std::ostream& err) {
  bool io = false;
  for (const Diagnostic& d : diags) {
    err << FormatDiagnostic(d) << "\n";
    io = io || d.code == DiagCode::kIo;
  }
  return io ? kInternal : kInvalid;
}

Result<Level> LoadLevelFile(const std::string& path) {
  auto text = ReadTextFile(path);
  if (!text) return text.diagnostics();
  auto doc = ParseJsonText(*text);
  if (!doc) return doc.diagnostics();
  return LevelFromJson(*doc);
}

Result<Program> LoadProgramFile(const std::string& path) {
  auto text = ReadTextFile(path);
  if (!text) return text.diagnostics();
  return ParseProgram(*text);
}

Result<ScoreConfig> LoadScoreConfig(const std::string& path) {
  if (path.empty()) return ScoreConfig{};
  auto text = ReadTextFile(path);
  if (!text) return text.diagnostics();
  auto doc = ParseJsonText(*text);
  if (!doc) return doc.diagnostics();
  return ScoreConfigFromJson(*doc);
}

std::string CellText(Cell c) {
  return "(" + std::to_string(c.x) + "," + std::to_string(c.y) + ")";
}

void PrintPretty(const Trace& trace, std::ostream& out) {
  for (const TraceEvent& ev : trace.events) {
    std::visit(
        Overloaded{
            [&](const event::StmtEnter& e) { out << "statement " << e.statement_id << "\n"; },
            [&](const event::Moved& e) {
              out << "  move " << CellText(e.from) << " -> " << CellText(e.to)
                  << " facing " << DirectionLetter(e.facing) << "\n";
            },
            [&](const event::Turned& e) {
              out << "  turn " << DirectionLetter(e.from) << " -> "
                  << DirectionLetter(e.to) << "\n";
            },
            [&](const event::ConditionEval& e) {
              out << "  check statement " << e.statement_id << ": "
                  << (e.value ? "true" : "false") << "\n";
            },
            [&](const event::Crashed& e) {
              out << "CRASH at " << CellText(e.at) << " into " << CellText(e.attempted) << "\n";
            },
            [&](const event::GoalReached& e) { out << "GOAL at " << CellText(e.at) << "\n"; },
            [&](const event::StepLimitHit&) { out << "STEP LIMIT reached\n"; },
        },
        ev);
  }
  out << "outcome: " << OutcomeName(trace.outcome) << ", " << trace.primitive_steps
      << " steps, robot at " << CellText(trace.final_pose.cell) << " facing "
      << DirectionLetter(trace.final_pose.facing) << "\n";
}

int DoRun(const std::string& level_path, const std::string& program_path,
          const std::string& trace_format, int max_steps, std::ostream& out,
          std::ostream& err) {
  auto level = LoadLevelFile(level_path);
  if (!level) return Report(level.diagnostics(), err);
  auto program = LoadProgramFile(program_path);
  if (!program) return Report(program.diagnostics(), err);
  auto trace = ValidateAndExecute(*program, *level, ExecLimits{max_steps});
  if (!trace) return Report(trace.diagnostics(), err);
  if (trace_format == "json") {
    out << DumpJson(TraceToJson(*trace));
  } else {
    PrintPretty(*trace, out);
  }
  return trace->outcome == Outcome::kGoalReached ? kOk : kNotReached;
}

int DoScore(const std::string& level_path, const std::string& program_path,
            double seconds, const std::string& config_path, std::ostream& out,
            std::ostream& err) {
  auto config = LoadScoreConfig(config_path);
  if (!config) return Report(config.diagnostics(), err);
  auto level = LoadLevelFile(level_path);
  if (!level) return Report(level.diagnostics(), err);
  auto program = LoadProgramFile(program_path);
  if (!program) return Report(program.diagnostics(), err);
  auto trace = ValidateAndExecute(*program, *level, ExecLimits{});
  if (!trace) return Report(trace.diagnostics(), err);
  auto score = ComputeScore(*program, *trace, seconds, *config);
  if (!score) return Report(score.diagnostics(), err);
  out << DumpJson(BreakdownToJson(*score));
  return kOk;
}

int DoExport(const std::string& program_path, const std::string& target_name,
             std::ostream& out, std::ostream& err) {
  auto target = TargetFromName(target_name);
  if (!target) {
    return Report({MakeDiag(DiagCode::kTarget, "unknown export target '" + target_name + "'")},
                  err);
  }
  auto program = LoadProgramFile(program_path);
  if (!program) return Report(program.diagnostics(), err);
  out << Emit(*program, *target);
  return kOk;
}

int DoCheck(const std::string& level_path, std::ostream& out, std::ostream& err) {
  auto level = LoadLevelFile(level_path);
  if (!level) return Report(level.diagnostics(), err);
  Diagnostics problems = ValidateLevel(*level);
  if (!problems.empty()) return Report(problems, err);
  const SolvabilityReport report = CheckSolvable(*level);
  if (!report.reachable) {
    out << "unreachable\n";
    return kNotReached;
  }
  out << "reachable, shortest path " << *report.shortest_cells << " cells\n";
  return kOk;
}

int DoServe(int port, const std::string& levels_dir, const std::string& ui_dir,
            const std::string& config_path, std::ostream& out, std::ostream& err) {
  auto config = LoadScoreConfig(config_path);
  if (!config) return Report(config.diagnostics(), err);
  auto store = LevelStore::Open(levels_dir);
  if (!store) return Report(store.diagnostics(), err);
  Service service(std::move(store).value(), *config);
  std::optional<std::filesystem::path> ui;
  if (!ui_dir.empty()) ui = ui_dir;
  HttpServer server(service, ui);
  const int bound = server.Bind("0.0.0.0", port);
  if (bound < 0) {
    err << "E_IO: cannot listen on port " << port << "\n";
    return kInternal;
  }
  out << "serving on http://0.0.0.0:" << bound << std::endl;
  return server.Listen() ? kOk : kInternal;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Robot maze language: run, score, export, check and serve"};
  app.require_subcommand(1);

  std::string level_path, program_path, trace_format = "pretty", target;
  std::string levels_dir = "levels/custom", ui_dir, config_path;
  int max_steps = kDefaultMaxSteps;
  int port = 8080;
  double seconds = 0;

  auto* run = app.add_subcommand("run", "Execute a program in a level and print the trace");
  run->add_option("--level", level_path, "Level document")->required();
  run->add_option("--program", program_path, "Program text")->required();
  run->add_option("--trace", trace_format, "Trace format")
      ->check(CLI::IsMember({"json", "pretty"}));
  run->add_option("--max-steps", max_steps, "Primitive step limit");

  auto* score = app.add_subcommand("score", "Run a program and print its score breakdown");
  score->add_option("--level", level_path, "Level document")->required();
  score->add_option("--program", program_path, "Program text")->required();
  score->add_option("--time-seconds", seconds, "Authoring time in seconds")->required();
  score->add_option("--score-config", config_path, "Scoring constants (JSON)");

  auto* exp = app.add_subcommand("export", "Render a program as pseudo-code or script");
  exp->add_option("--program", program_path, "Program text")->required();
  exp->add_option("--target", target, "pseudocode or touchdevelop")->required();

  auto* check = app.add_subcommand("check", "Validate a level and test that it is solvable");
  check->add_option("--level", level_path, "Level document")->required();

  auto* serve = app.add_subcommand("serve", "Start the HTTP service");
  serve->add_option("--port", port, "TCP port");
  serve->add_option("--levels-dir", levels_dir, "Directory for student-built levels");
  serve->add_option("--ui-dir", ui_dir, "Static UI assets served at /");
  serve->add_option("--score-config", config_path, "Scoring constants (JSON)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n\n" << app.help();
    return kInvalid;
  }

  if (*run) return DoRun(level_path, program_path, trace_format, max_steps, out, err);
  if (*score) return DoScore(level_path, program_path, seconds, config_path, out, err);
  if (*exp) return DoExport(program_path, target, out, err);
  if (*check) return DoCheck(level_path, out, err);
  if (*serve) return DoServe(port, levels_dir, ui_dir, config_path, out, err);
  return kInvalid;
}

}  // namespace roborun::cli
