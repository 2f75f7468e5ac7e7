#pragma once

#include <vector>

namespace fixtures {

using Table = std::vector<std::vector<int>>;

// Left half of the reduction drawing: two triangles over a K4, plus a hexagonal base.
// (0,0) (1.5,0) (0.75,0.5) (0.75,1.25) (-1.25,-1) (-0.5,-1) (2,-1) (2.75,-1) (0,-2) (1.5,-2)
inline const Table& reduction_before() {
  static const Table t = {{4, 5, 1, 2, 3}, {6, 7, 3, 2, 0}, {0, 1, 3}, {0, 2, 1}, {8, 5, 0},
                          {8, 0, 4},       {9, 7, 1},       {9, 1, 6}, {9, 5, 4}, {7, 6, 8}};
  return t;
}
// Right half: the drawn result of the reduction.
inline const Table& reduction_after() {
  static const Table t = {{3, 4, 1, 2}, {5, 6, 2, 0}, {0, 1}, {7, 0}, {7, 0}, {8, 1}, {8, 1}, {8, 4, 3}, {6, 5, 7}};
  return t;
}

}  // namespace fixtures
