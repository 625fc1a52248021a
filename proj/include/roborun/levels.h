#pragma once

#include <filesystem>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "roborun/core.h"
#include "roborun/diagnostic.h"
#include "roborun/json.h"

namespace roborun {

// Empty iff every level invariant holds. Codes: E_DIM, E_START_OOB,
// E_GOAL_OOB, E_WALL_OOB, E_START_ON_WALL, E_GOAL_ON_WALL, E_START_EQ_GOAL.
Diagnostics ValidateLevel(const Level& level);

struct SolvabilityReport {
  bool reachable = false;
  std::optional<int> shortest_cells;  // present iff reachable

  friend bool operator==(const SolvabilityReport&, const SolvabilityReport&) = default;
};

// Breadth-first search over free cells with 4-adjacency. Turning is free, so
// facing plays no part in reachability. Requires a valid level.
SolvabilityReport CheckSolvable(const Level& level);

// Levels shipped with the program, in difficulty order.
const std::vector<Level>& BundledLevels();

struct LevelSummary {
  std::string id;
  std::string name;
  int width = 0;
  int height = 0;
  int shortest = 0;

  friend bool operator==(const LevelSummary&, const LevelSummary&) = default;
};

Json SummaryToJson(const LevelSummary& summary);

// A directory of level documents, `<root>/<id>.level.json`, layered over the
// bundled pack. Every stored level is valid and solvable. Writes are
// serialized; reads may run concurrently. One process owns the directory.
class LevelStore {
 public:
  // Creates `root` if needed.
  static Result<LevelStore> Open(std::filesystem::path root);

  LevelStore(LevelStore&& other) noexcept : root_(std::move(other.root_)) {}

  // Assigns a fresh id (the incoming id is ignored) and writes the document
  // atomically. E_UNSOLVABLE for unreachable goals; level diagnostics for
  // invalid levels; E_IO on filesystem failure.
  Result<std::string> Save(Level level);

  // E_NOT_FOUND for unknown ids.
  Result<Level> Load(const std::string& id) const;

  // Bundled pack first, then stored levels ordered by id.
  Result<std::vector<LevelSummary>> List() const;

  const std::filesystem::path& root() const { return root_; }

 private:
  explicit LevelStore(std::filesystem::path root) : root_(std::move(root)) {}

  std::filesystem::path PathFor(const std::string& id) const;

  std::filesystem::path root_;
  mutable std::shared_mutex mutex_;
};

}  // namespace roborun
