#include "roborun/core.h"

namespace roborun {

Direction Rotate(Direction facing, Turn turn) {
  const int index = static_cast<int>(facing);
  const int delta = turn == Turn::kRight ? 1 : 3;
  return static_cast<Direction>((index + delta) % 4);
}

Cell Step(Cell cell, Direction facing) {
  switch (facing) {
    case Direction::kNorth:
      return {cell.x, cell.y - 1};
    case Direction::kEast:
      return {cell.x + 1, cell.y};
    case Direction::kSouth:
      return {cell.x, cell.y + 1};
    case Direction::kWest:
      return {cell.x - 1, cell.y};
  }
  return cell;
}

bool CellFree(const Level& level, Cell cell) {
  return level.InBounds(cell) && !level.walls.contains(cell);
}

char DirectionLetter(Direction d) {
  switch (d) {
    case Direction::kNorth:
      return 'N';
    case Direction::kEast:
      return 'E';
    case Direction::kSouth:
      return 'S';
    case Direction::kWest:
      return 'W';
  }
  return '?';
}

std::optional<Direction> DirectionFromLetter(std::string_view s) {
  if (s == "N") return Direction::kNorth;
  if (s == "E") return Direction::kEast;
  if (s == "S") return Direction::kSouth;
  if (s == "W") return Direction::kWest;
  return std::nullopt;
}

}  // namespace roborun
