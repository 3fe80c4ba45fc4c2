#ifndef TESTS_SUPPORT_FIXTURES_HPP
#define TESTS_SUPPORT_FIXTURES_HPP

#include <cstddef>
#include <vector>

#include "cohcfg/color_matrix.hpp"
#include "cohcfg/orbitals.hpp"

namespace fixtures {

// Difference-class coloring on Z_m: diagonal is color 0, class i becomes
// color i+1. Coherence depends on the classes and is left to validation.
inline cohcfg::ColorMatrix circulant(int m, const std::vector<std::vector<int>>& classes) {
  std::vector<int> color_of(m, -1);
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (int d : classes[i]) color_of[d] = static_cast<int>(i) + 1;
  std::vector<std::vector<int>> rows(m, std::vector<int>(m));
  for (int u = 0; u < m; ++u)
    for (int v = 0; v < m; ++v) rows[u][v] = u == v ? 0 : color_of[((v - u) % m + m) % m];
  return cohcfg::ColorMatrix::from_rows(rows);
}

inline std::vector<int> quadratic_residues(int m) {
  std::vector<bool> seen(m, false);
  for (int i = 1; i < m; ++i) seen[i * i % m] = true;
  std::vector<int> out;
  for (int i = 1; i < m; ++i)
    if (seen[i]) out.push_back(i);
  return out;
}

// Residue/non-residue classes: a graph for m = 1 mod 4, a tournament otherwise.
inline cohcfg::ColorMatrix paley(int m) {
  const std::vector<int> residues = quadratic_residues(m);
  std::vector<bool> is_residue(m, false);
  for (int d : residues) is_residue[d] = true;
  std::vector<int> rest;
  for (int d = 1; d < m; ++d)
    if (!is_residue[d]) rest.push_back(d);
  return circulant(m, {residues, rest});
}

// Classes {i, m-i}; rank (m-1)/2 + 1, every non-diagonal degree 2.
inline cohcfg::ColorMatrix pairs_circulant(int m) {
  std::vector<std::vector<int>> classes;
  for (int i = 1; i <= (m - 1) / 2; ++i) classes.push_back({i, m - i});
  return circulant(m, classes);
}

// Every pair its own relation.
inline cohcfg::ColorMatrix thin(int n) {
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) rows[u][v] = u * n + v;
  return cohcfg::ColorMatrix::from_rows(rows);
}

// Order-21 Frobenius group on 7 points: x -> x+1 and x -> 2x mod 7.
inline cohcfg::ActionSpec f21_action() {
  cohcfg::ActionSpec action;
  action.domain = 7;
  action.generators = {{1, 2, 3, 4, 5, 6, 0}, {0, 2, 4, 6, 1, 3, 5}};
  return action;
}

// The same group acting diagonally on two copies of the 7 points.
inline cohcfg::ActionSpec f21_pair_action() {
  const cohcfg::ActionSpec base = f21_action();
  cohcfg::ActionSpec action;
  action.domain = 14;
  for (const std::vector<int>& gen : base.generators) {
    std::vector<int> doubled(14);
    for (int i = 0; i < 7; ++i) {
      doubled[i] = gen[i];
      doubled[7 + i] = 7 + gen[i];
    }
    action.generators.push_back(std::move(doubled));
  }
  return action;
}

// Two diagonal blocks kept as-is, each cross block a single new color.
inline cohcfg::ColorMatrix direct_sum(const cohcfg::ColorMatrix& a, const cohcfg::ColorMatrix& b) {
  const int n = a.size + b.size;
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int u = 0; u < a.size; ++u)
    for (int v = 0; v < a.size; ++v) rows[u][v] = a.at(u, v);
  for (int u = 0; u < b.size; ++u)
    for (int v = 0; v < b.size; ++v) rows[a.size + u][a.size + v] = a.colors + b.at(u, v);
  for (int u = 0; u < a.size; ++u)
    for (int v = 0; v < b.size; ++v) {
      rows[u][a.size + v] = a.colors + b.colors;
      rows[a.size + v][u] = a.colors + b.colors + 1;
    }
  return cohcfg::ColorMatrix::from_rows(rows);
}

// Points 0..6 and lines 7..13 of the 7-point projective plane, line i being
// {i+1, i+2, i+4} mod 7. Incident cross relations have degrees 3 and 3,
// non-incident 4 and 4; no degree-1 cross relation exists.
inline cohcfg::ColorMatrix fano_two_fiber() {
  bool incident[7][7] = {};
  for (int i = 0; i < 7; ++i)
    for (int offset : {1, 2, 4}) incident[(i + offset) % 7][i] = true;
  std::vector<std::vector<int>> rows(14, std::vector<int>(14));
  for (int p = 0; p < 7; ++p)
    for (int q = 0; q < 7; ++q) rows[p][q] = p == q ? 0 : 1;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) rows[7 + i][7 + j] = i == j ? 2 : 3;
  for (int p = 0; p < 7; ++p)
    for (int i = 0; i < 7; ++i) {
      rows[p][7 + i] = incident[p][i] ? 4 : 5;
      rows[7 + i][p] = incident[p][i] ? 6 : 7;
    }
  return cohcfg::ColorMatrix::from_rows(rows);
}

// color 0 holds both (0,0) and (0,1)
inline cohcfg::ColorMatrix diagonal_not_union() {
  return cohcfg::ColorMatrix::from_rows({{0, 0}, {1, 0}});
}

// transposes of color 1 land in colors 1 and 2
inline cohcfg::ColorMatrix transpose_not_closed() {
  return cohcfg::ColorMatrix::from_rows({{0, 1, 1}, {2, 0, 1}, {1, 2, 0}});
}

// 3-point path: the two edge pairs see different path counts
inline cohcfg::ColorMatrix nonconstant_path() {
  return cohcfg::ColorMatrix::from_rows({{0, 1, 2}, {1, 0, 1}, {2, 1, 0}});
}

}  // namespace fixtures

#endif
