#include "cohcfg/color_matrix.hpp"

#include "cohcfg/errors.hpp"

namespace cohcfg {

ColorMatrix ColorMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  if (n == 0) throw InvalidMatrix("configuration needs at least one point");
  ColorMatrix m;
  m.size = n;
  m.cells.reserve(static_cast<std::size_t>(n) * n);
  int max_color = -1;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) throw InvalidMatrix("matrix is not square");
    for (int c : row) {
      if (c < 0) throw InvalidMatrix("negative color index");
      if (c > max_color) max_color = c;
      m.cells.push_back(c);
    }
  }
  m.colors = max_color + 1;
  return m;
}

ColorMatrix canonical_relabel(const ColorMatrix& matrix) {
  ColorMatrix out;
  out.size = matrix.size;
  out.cells.resize(matrix.cells.size());
  std::vector<Color> relabel(static_cast<std::size_t>(matrix.colors), -1);
  Color next = 0;
  for (std::size_t i = 0; i < matrix.cells.size(); ++i) {
    Color c = matrix.cells[i];
    if (relabel[c] < 0) relabel[c] = next++;
    out.cells[i] = relabel[c];
  }
  out.colors = next;
  return out;
}

}  // namespace cohcfg
