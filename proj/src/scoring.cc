#include "roborun/scoring.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <utility>

#include "overloaded.h"

namespace roborun {
namespace {

// Statement id -> construct kind (or nullopt for primitives), indexed by id.
void IndexKinds(const Block& body,
                std::vector<std::optional<ConstructKind>>& kinds) {
  for (const Statement& s : body) {
    if (static_cast<std::size_t>(s.id) >= kinds.size()) {
      kinds.resize(static_cast<std::size_t>(s.id) + 1);
    }
    std::visit(Overloaded{
                   [&](const Repeat& r) {
                     kinds[s.id] = ConstructKind::kRepeat;
                     IndexKinds(r.body, kinds);
                   },
                   [&](const While& w) {
                     kinds[s.id] = ConstructKind::kWhile;
                     IndexKinds(w.body, kinds);
                   },
                   [&](const IfElse& i) {
                     kinds[s.id] = ConstructKind::kIf;
                     IndexKinds(i.then_body, kinds);
                     IndexKinds(i.else_body, kinds);
                   },
                   [](const auto&) {},
               },
               s.node);
  }
}

std::string_view KindName(ConstructKind kind) {
  switch (kind) {
    case ConstructKind::kRepeat:
      return "repeat";
    case ConstructKind::kWhile:
      return "while";
    case ConstructKind::kIf:
      return "if";
  }
  return "?";
}

}  // namespace

Result<ScoreBreakdown> ComputeScore(const Program& program, const Trace& trace,
                                    double elapsed_seconds,
                                    const ScoreConfig& config) {
  if (!std::isfinite(elapsed_seconds) || elapsed_seconds < 0) {
    return MakeDiag(DiagCode::kTime, "elapsed time must be a non-negative number");
  }
  const int statements = CountStatements(program.body);
  std::vector<std::optional<ConstructKind>> kinds(statements);
  IndexKinds(program.body, kinds);

  std::set<ConstructKind> executed;
  for (const TraceEvent& ev : trace.events) {
    std::optional<int> id;
    if (auto* e = std::get_if<event::StmtEnter>(&ev)) id = e->statement_id;
    if (auto* e = std::get_if<event::ConditionEval>(&ev)) id = e->statement_id;
    if (auto* e = std::get_if<event::Turned>(&ev)) id = e->statement_id;
    if (!id) continue;
    if (*id < 0 || *id >= statements) {
      Diagnostic d = MakeDiag(DiagCode::kTraceMismatch,
                              "trace refers to statement " + std::to_string(*id) +
                                  " which the program does not have");
      d.statement_id = *id;
      return d;
    }
    if (kinds[*id]) executed.insert(*kinds[*id]);
  }

  ScoreBreakdown out;
  out.statement_count = statements;
  out.construct_kinds_used.assign(executed.begin(), executed.end());
  if (trace.outcome != Outcome::kGoalReached) return out;

  // Clamp before flooring so huge times cannot overflow int.
  const double capped = std::min(elapsed_seconds, 1e9);
  const int whole_seconds = static_cast<int>(std::floor(capped));
  out.completion = config.completion_points;
  out.constructs = config.construct_points * static_cast<int>(executed.size());
  out.brevity =
      std::max(0, config.brevity_base - config.brevity_per_statement * statements);
  out.speed = std::max(0, config.speed_base - whole_seconds);
  out.total = out.completion + out.constructs + out.brevity + out.speed;
  return out;
}

Json BreakdownToJson(const ScoreBreakdown& b) {
  Json kinds = Json::array();
  for (ConstructKind k : b.construct_kinds_used) kinds.push_back(std::string(KindName(k)));
  Json out;
  out["completion"] = b.completion;
  out["constructs"] = b.constructs;
  out["brevity"] = b.brevity;
  out["speed"] = b.speed;
  out["total"] = b.total;
  out["statements"] = b.statement_count;
  out["kinds"] = std::move(kinds);
  return out;
}

Result<ScoreConfig> ScoreConfigFromJson(const Json& doc) {
  if (!doc.is_object()) return MakeDiag(DiagCode::kJson, "score config must be an object");
  ScoreConfig config;
  const std::pair<const char*, int*> fields[] = {
      {"completion_points", &config.completion_points},
      {"construct_points", &config.construct_points},
      {"brevity_base", &config.brevity_base},
      {"brevity_per_statement", &config.brevity_per_statement},
      {"speed_base", &config.speed_base},
  };
  if (auto bad = json_detail::RejectUnknownKeys(
          doc,
          {"completion_points", "construct_points", "brevity_base",
           "brevity_per_statement", "speed_base"},
          "score config")) {
    return *bad;
  }
  for (auto [key, dest] : fields) {
    if (!doc.contains(key)) continue;
    auto v = json_detail::ClampedInt(doc.at(key));
    if (!v || *v < 0 || *v > 1'000'000) {
      return MakeDiag(DiagCode::kJson, std::string("score config '") + key +
                                           "' must be an integer in 0..1000000");
    }
    *dest = *v;
  }
  return config;
}

}  // namespace roborun
