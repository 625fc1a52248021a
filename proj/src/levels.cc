#include "roborun/levels.h"

#include <algorithm>
#include <cctype>
#include <deque>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace roborun {

namespace internal {
const std::vector<std::string_view>& BundledLevelDocuments();
}  // namespace internal

namespace {

std::string CellText(Cell c) {
  return "(" + std::to_string(c.x) + "," + std::to_string(c.y) + ")";
}

constexpr std::string_view kCustomPrefix = "custom-";
constexpr std::string_view kSuffix = ".level.json";

}  // namespace

Diagnostics ValidateLevel(const Level& level) {
  Diagnostics out;
  if (level.width < 1 || level.width > kMaxLevelSide || level.height < 1 ||
      level.height > kMaxLevelSide) {
    out.push_back(MakeDiag(DiagCode::kDim,
                           "maze size " + std::to_string(level.width) + "x" +
                               std::to_string(level.height) +
                               " must be between 1x1 and 64x64"));
  }
  const bool start_in = level.InBounds(level.start.cell);
  const bool goal_in = level.InBounds(level.goal);
  if (!start_in) {
    out.push_back(MakeDiag(DiagCode::kStartOob,
                           "start " + CellText(level.start.cell) + " is outside the maze"));
  }
  if (!goal_in) {
    out.push_back(MakeDiag(DiagCode::kGoalOob,
                           "goal " + CellText(level.goal) + " is outside the maze"));
  }
  for (Cell w : level.walls) {
    if (!level.InBounds(w)) {
      out.push_back(MakeDiag(DiagCode::kWallOob,
                             "wall " + CellText(w) + " is outside the maze"));
    }
  }
  if (start_in && level.walls.contains(level.start.cell)) {
    out.push_back(MakeDiag(DiagCode::kStartOnWall, "the start is on a wall"));
  }
  if (goal_in && level.walls.contains(level.goal)) {
    out.push_back(MakeDiag(DiagCode::kGoalOnWall, "the goal is on a wall"));
  }
  if (level.start.cell == level.goal) {
    out.push_back(MakeDiag(DiagCode::kStartEqGoal,
                           "the start and the goal are the same square"));
  }
  return out;
}

SolvabilityReport CheckSolvable(const Level& level) {
  const int w = level.width;
  const int h = level.height;
  std::vector<int> dist(static_cast<std::size_t>(w) * h, -1);
  auto index = [w](Cell c) { return static_cast<std::size_t>(c.y) * w + c.x; };

  std::deque<Cell> frontier{level.start.cell};
  dist[index(level.start.cell)] = 0;
  constexpr Direction kDirs[] = {Direction::kNorth, Direction::kEast,
                                 Direction::kSouth, Direction::kWest};
  while (!frontier.empty()) {
    const Cell c = frontier.front();
    frontier.pop_front();
    if (c == level.goal) return {true, dist[index(c)]};
    for (Direction d : kDirs) {
      const Cell n = Step(c, d);
      if (!CellFree(level, n) || dist[index(n)] >= 0) continue;
      dist[index(n)] = dist[index(c)] + 1;
      frontier.push_back(n);
    }
  }
  return {false, std::nullopt};
}

const std::vector<Level>& BundledLevels() {
  static const std::vector<Level> kLevels = [] {
    std::vector<std::pair<SolvabilityReport, Level>> ranked;
    for (std::string_view text : internal::BundledLevelDocuments()) {
      auto doc = ParseJsonText(text);
      if (!doc) throw std::logic_error("bundled level is not JSON");
      auto level = LevelFromJson(*doc);
      if (!level || !ValidateLevel(*level).empty()) {
        throw std::logic_error("bundled level is invalid");
      }
      SolvabilityReport report = CheckSolvable(*level);
      if (!report.reachable) throw std::logic_error("bundled level is unsolvable");
      ranked.emplace_back(report, std::move(level).value());
    }
    std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
      return std::pair(*a.first.shortest_cells, a.second.walls.size()) <
             std::pair(*b.first.shortest_cells, b.second.walls.size());
    });
    std::vector<Level> out;
    for (auto& [report, level] : ranked) out.push_back(std::move(level));
    return out;
  }();
  return kLevels;
}

Json SummaryToJson(const LevelSummary& s) {
  Json out;
  out["id"] = s.id;
  out["name"] = s.name;
  out["width"] = s.width;
  out["height"] = s.height;
  out["shortest"] = s.shortest;
  return out;
}

// ---------------------------------------------------------------------------
// LevelStore

namespace {

bool SafeId(const std::string& id) {
  if (id.empty() || id.size() > 64) return false;
  return std::all_of(id.begin(), id.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_';
  });
}

Result<std::string> ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return MakeDiag(DiagCode::kIo, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) return MakeDiag(DiagCode::kIo, "cannot read " + path.string());
  return buf.str();
}

Result<Level> ReadLevelFile(const std::filesystem::path& path) {
  auto text = ReadFile(path);
  if (!text) return text.diagnostics();
  auto doc = ParseJsonText(*text);
  if (!doc) return doc.diagnostics();
  return LevelFromJson(*doc);
}

// Numeric suffix of a stored custom id, or -1.
long CustomNumber(std::string_view stem) {
  if (!stem.starts_with(kCustomPrefix)) return -1;
  stem.remove_prefix(kCustomPrefix.size());
  if (stem.empty() || stem.size() > 9) return -1;
  long n = 0;
  for (char c : stem) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return -1;
    n = n * 10 + (c - '0');
  }
  return n;
}

// Ids of every stored document, sorted.
Result<std::vector<std::string>> StoredIds(const std::filesystem::path& root) {
  std::vector<std::string> ids;
  std::error_code ec;
  for (std::filesystem::directory_iterator it(root, ec), end; !ec && it != end;
       it.increment(ec)) {
    const std::string name = it->path().filename().string();
    if (name.size() <= kSuffix.size() || !name.ends_with(kSuffix)) continue;
    ids.push_back(name.substr(0, name.size() - kSuffix.size()));
  }
  if (ec) return MakeDiag(DiagCode::kIo, "cannot list " + root.string() + ": " + ec.message());
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace

Result<LevelStore> LevelStore::Open(std::filesystem::path root) {
  std::error_code ec;
  std::filesystem::create_directories(root, ec);
  if (ec || !std::filesystem::is_directory(root)) {
    return MakeDiag(DiagCode::kIo, "cannot use level directory " + root.string());
  }
  return LevelStore(std::move(root));
}

std::filesystem::path LevelStore::PathFor(const std::string& id) const {
  return root_ / (id + std::string(kSuffix));
}

Result<std::string> LevelStore::Save(Level level) {
  Diagnostics problems = ValidateLevel(level);
  if (!problems.empty()) return problems;
  if (!CheckSolvable(level).reachable) {
    return MakeDiag(DiagCode::kUnsolvable,
                    "the goal cannot be reached from the start");
  }

  std::unique_lock lock(mutex_);
  auto ids = StoredIds(root_);
  if (!ids) return ids.diagnostics();
  long next = 1;
  for (const std::string& id : *ids) next = std::max(next, CustomNumber(id) + 1);
  std::string number = std::to_string(next);
  if (number.size() < 4) number.insert(0, 4 - number.size(), '0');
  level.id = std::string(kCustomPrefix) + number;

  const std::filesystem::path final_path = PathFor(level.id);
  std::filesystem::path temp_path = final_path;
  temp_path += ".tmp";
  {
    std::ofstream out(temp_path, std::ios::binary | std::ios::trunc);
    out << DumpJson(LevelToJson(level));
    out.flush();
    if (!out) {
      std::error_code ignored;
      std::filesystem::remove(temp_path, ignored);
      return MakeDiag(DiagCode::kIo, "cannot write " + temp_path.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(temp_path, final_path, ec);
  if (ec) {
    std::filesystem::remove(temp_path, ec);
    return MakeDiag(DiagCode::kIo, "cannot write " + final_path.string());
  }
  return level.id;
}

Result<Level> LevelStore::Load(const std::string& id) const {
  for (const Level& level : BundledLevels()) {
    if (level.id == id) return level;
  }
  if (!SafeId(id)) return MakeDiag(DiagCode::kNotFound, "no level called '" + id + "'");
  std::shared_lock lock(mutex_);
  const std::filesystem::path path = PathFor(id);
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) {
    return MakeDiag(DiagCode::kNotFound, "no level called '" + id + "'");
  }
  auto level = ReadLevelFile(path);
  if (!level) {
    Diagnostics d = level.diagnostics();
    for (auto& diag : d) {
      if (diag.code == DiagCode::kJson) diag.code = DiagCode::kIo;
    }
    return d;
  }
  return level;
}

Result<std::vector<LevelSummary>> LevelStore::List() const {
  std::vector<LevelSummary> out;
  auto summarize = [&](const Level& level) {
    const SolvabilityReport report = CheckSolvable(level);
    out.push_back({level.id, level.name, level.width, level.height,
                   report.shortest_cells.value_or(0)});
  };
  for (const Level& level : BundledLevels()) summarize(level);

  std::shared_lock lock(mutex_);
  auto ids = StoredIds(root_);
  if (!ids) return ids.diagnostics();
  for (const std::string& id : *ids) {
    auto level = ReadLevelFile(PathFor(id));
    if (!level || !ValidateLevel(*level).empty()) continue;  // skip foreign files
    summarize(*level);
  }
  return out;
}

}  // namespace roborun
