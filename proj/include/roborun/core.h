#pragma once

// World model: grid cells, facings, robot pose and levels.
//
// Coordinates have their origin at the top-left corner; x grows east and
// y grows south, so facing N decreases y.

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <string_view>

namespace roborun {

enum class Direction { kNorth, kEast, kSouth, kWest };

enum class Turn { kLeft, kRight };

struct Cell {
  int x = 0;
  int y = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct RobotPose {
  Cell cell;
  Direction facing = Direction::kNorth;
  friend bool operator==(const RobotPose&, const RobotPose&) = default;
};

inline constexpr int kMaxLevelSide = 64;

struct Level {
  std::string id;
  std::string name;
  int width = 1;
  int height = 1;
  RobotPose start;
  Cell goal;
  std::set<Cell> walls;

  friend bool operator==(const Level&, const Level&) = default;

  bool InBounds(Cell c) const {
    return c.x >= 0 && c.y >= 0 && c.x < width && c.y < height;
  }
};

// Left is counterclockwise (N->W->S->E), right is clockwise.
Direction Rotate(Direction facing, Turn turn);

// The neighbouring cell in `facing`. Not bounds-checked.
Cell Step(Cell cell, Direction facing);
inline Cell ForwardCell(const RobotPose& pose) {
  return Step(pose.cell, pose.facing);
}

// True iff `cell` is inside the grid and not a wall. Leaving the grid and
// hitting a wall are the same crash.
bool CellFree(const Level& level, Cell cell);

char DirectionLetter(Direction d);
std::optional<Direction> DirectionFromLetter(std::string_view s);

}  // namespace roborun
