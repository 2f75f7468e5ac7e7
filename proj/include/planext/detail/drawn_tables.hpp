#pragma once

// Rotation tables read off the published drawings. Each table lists, per vertex, its
// neighbors in counterclockwise order around the drawn point (coordinates given alongside).

#include <array>
#include <vector>

namespace planext::detail::drawn {

using Table = std::vector<std::vector<int>>;

// Icosidodecahedron as drawn: inner pentagon around (0,0.3), outer pentagon of radius ~3.
// Coordinates (x,y) for ids 0..29:
// (-0.25,0) (0.25,0) (-0.45,0.4) (0.45,0.4) (0,0.7) (-1.05,0) (1.05,0) (0,-0.5) (0.9,1.3) (-0.9,1.3)
// (-1.8,1) (1.8,1) (0,2.175) (1.2,-0.9) (-1.2,-0.9) (0.4,1.8) (1.2,1.2) (1.5,0.6) (1.1333,-0.5) (0.68,-0.7267)
// (-0.4,1.8) (-1.2,1.2) (-1.5,0.6) (-1.1333,-0.5) (-0.68,-0.7267) (1.8,3.05) (3,0) (0,-2.4) (-3,0) (-1.8,3.05)
inline const Table& icosidodecahedron() {
  static const Table t = {
      {7, 1, 2, 5},     {7, 6, 3, 0},     {5, 0, 4, 9},     {1, 6, 8, 4},     {2, 3, 8, 9},
      {23, 0, 2, 22},   {18, 17, 3, 1},   {24, 19, 1, 0},   {4, 3, 16, 15},   {21, 2, 4, 20},
      {28, 22, 21, 29}, {17, 26, 25, 16}, {20, 15, 25, 29}, {27, 26, 18, 19}, {27, 24, 23, 28},
      {8, 16, 12, 20},  {17, 11, 15, 8},  {6, 18, 11, 16},  {19, 13, 17, 6},  {13, 18, 7, 24},
      {21, 9, 15, 12},  {10, 22, 9, 20},  {23, 5, 21, 10},  {14, 24, 5, 22},  {14, 19, 7, 23},
      {12, 11, 26, 29}, {13, 27, 25, 11}, {26, 13, 14, 28}, {27, 14, 10, 29}, {28, 10, 12, 25}};
  return t;
}
// Pentagonal faces used for nesting, listed counterclockwise around their centroids.
inline constexpr std::array<int, 5> kIcosiInner = {0, 1, 3, 4, 2};
inline constexpr std::array<int, 5> kIcosiOuter = {28, 27, 26, 25, 29};

// Annulus between two pentagons: 50 vertices, 100 edges, every vertex of degree 4.
// Outer boundary ids {2,3,4,5,6} at (0,6) (2,0) (4,3) (-2,0) (-4,3); inner boundary
// ids {18,27,19,23,31} around (0,1),(1.4286,1.7143),(1,3),(-1,3),(-1.4286,1.7143).
inline const Table& annulus() {
  static const Table t = {
      {8, 44, 13, 12},  {45, 8, 16, 17},  {6, 40, 37, 4},   {4, 7, 44, 5},    {30, 3, 2, 21},
      {3, 45, 9, 6},    {5, 34, 25, 2},   {3, 10, 11, 44},  {44, 0, 1, 45},   {5, 45, 15, 14},
      {7, 30, 29, 11},  {7, 10, 46, 13},  {0, 13, 18, 16},  {0, 11, 46, 12},  {9, 15, 33, 34},
      {9, 17, 47, 14},  {1, 12, 18, 17},  {1, 16, 47, 15},  {16, 12, 27, 31}, {27, 22, 35, 23},
      {48, 21, 42, 22}, {30, 4, 42, 20},  {48, 20, 35, 19}, {31, 19, 38, 26}, {49, 26, 43, 25},
      {34, 24, 43, 6},  {49, 23, 38, 24}, {18, 46, 28, 19}, {27, 46, 29, 48}, {28, 10, 30, 48},
      {29, 10, 4, 21},  {47, 18, 23, 32}, {47, 31, 49, 33}, {14, 32, 49, 34}, {14, 33, 25, 6},
      {19, 22, 36, 41}, {41, 35, 42, 37}, {36, 42, 2, 40},  {26, 23, 41, 39}, {38, 41, 40, 43},
      {43, 39, 37, 2},  {38, 35, 36, 39}, {36, 20, 21, 37}, {25, 24, 39, 40}, {3, 7, 0, 8},
      {5, 8, 1, 9},     {13, 11, 28, 27}, {15, 17, 31, 32}, {28, 29, 20, 22}, {33, 32, 26, 24}};
  return t;
}
inline constexpr std::array<int, 5> kAnnulusOuter = {5, 3, 4, 2, 6};
inline constexpr std::array<int, 5> kAnnulusInner = {31, 18, 27, 19, 23};

// Two K4 blocks sharing vertex 1: (0,0) (3,0) (1.5,1) (1.5,2.5) (6,0) (4.5,1) (4.5,2.5).
inline const Table& two_k4() {
  static const Table t = {{1, 2, 3}, {4, 5, 6, 3, 2, 0}, {0, 1, 3}, {0, 2, 1}, {6, 5, 1}, {1, 4, 6}, {1, 5, 4}};
  return t;
}

// 15-vertex tower triangulation. Degree-4 vertices 0,2,5,7,10,12 at (-6.5, 2.5/3.5/4.5/5.5/6.5/7.5);
// the distinguished matching is {0-2, 5-7, 10-12}.
inline const Table& tower15() {
  static const Table t = {
      {1, 3, 2, 4},          {12, 13, 3, 0, 4, 14}, {4, 0, 3, 6},          {0, 1, 13, 8, 6, 2},
      {1, 0, 2, 6, 9, 14},   {6, 8, 7, 9},          {4, 2, 3, 8, 5, 9},    {9, 5, 8, 11},
      {5, 6, 3, 13, 11, 7},  {4, 6, 5, 7, 11, 14},  {11, 13, 12, 14},      {9, 7, 8, 13, 10, 14},
      {14, 10, 13, 1},       {10, 11, 8, 3, 1, 12}, {4, 9, 11, 10, 12, 1}};
  return t;
}
inline constexpr std::array<std::array<int, 2>, 3> kTower15Matching = {{{0, 2}, {5, 7}, {10, 12}}};

// Octahedron with v1..v6 at (-1,0) (0,1) (0,1/3) (0,-1/3) (0,-1) (1,0) as ids 0..5; the edge
// v2-v5 is drawn as an arc. Matching {v1v2, v3v4, v5v6}. Embedded via the planarity test
// (a 3-connected planar graph has one embedding up to reflection).
inline const std::vector<std::array<int, 2>>& octahedron_edges() {
  static const std::vector<std::array<int, 2>> e = {{5, 1}, {5, 4}, {0, 1}, {0, 4}, {1, 4}, {4, 3},
                                                    {3, 2}, {2, 1}, {0, 2}, {0, 3}, {5, 2}, {5, 3}};
  return e;
}

}  // namespace planext::detail::drawn
