#pragma once

#include <string>

#include "specbound/error.hpp"

namespace specbound {

enum class Orientation { Row, Column };
enum class Direction { Down, Up };

inline const char* to_string(Orientation o) { return o == Orientation::Row ? "row" : "column"; }
inline const char* to_string(Direction d) { return d == Direction::Down ? "down" : "up"; }

inline Orientation parse_orientation(const std::string& s) {
  if (s == "row") return Orientation::Row;
  if (s == "col" || s == "column") return Orientation::Column;
  throw Error(ErrorKind::Parse, "unknown orientation '" + s + "' (expected row or col)");
}

inline Direction parse_direction(const std::string& s) {
  if (s == "down") return Direction::Down;
  if (s == "up") return Direction::Up;
  throw Error(ErrorKind::Parse, "unknown direction '" + s + "' (expected down or up)");
}

}  // namespace specbound
