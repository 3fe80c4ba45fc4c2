#ifndef COHCFG_COLOR_MATRIX_HPP
#define COHCFG_COLOR_MATRIX_HPP

#include <vector>

namespace cohcfg {

using Point = int;
using Color = int;

// A configuration is its color matrix: cell (u,v) holds the index of the
// relation containing the pair. Indices are dense in [0, colors).
struct ColorMatrix {
  int size = 0;
  int colors = 0;
  std::vector<Color> cells;  // row-major, size*size entries

  Color at(Point u, Point v) const { return cells[static_cast<std::size_t>(u) * size + v]; }
  Color& at(Point u, Point v) { return cells[static_cast<std::size_t>(u) * size + v]; }

  bool operator==(const ColorMatrix& other) const = default;

  // Builds from rows, checking squareness and entry range; colors = max+1.
  // Density of the index range is checked by validate_configuration.
  static ColorMatrix from_rows(const std::vector<std::vector<int>>& rows);
};

// Relabels colors densely in reading order of first occurrence. Two matrices
// describe the same partition of V x V iff their relabelings are equal.
ColorMatrix canonical_relabel(const ColorMatrix& matrix);

}  // namespace cohcfg

#endif
