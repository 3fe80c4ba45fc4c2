#include "cohcfg/equitable.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "cohcfg/errors.hpp"
#include "cohcfg/operations.hpp"

namespace cohcfg {

EquitablePartition verify_equitable(const CoherentConfig& cc,
                                    const std::vector<std::vector<Point>>& cells_in) {
  if (!cc.homogeneous()) throw NotHomogeneous(cc.fiber_count());
  const int n = cc.point_count();
  const int t = cc.color_count();

  std::vector<std::vector<Point>> cells = cells_in;
  if (cells.empty()) throw NotAPartition("no cells given");
  std::vector<int> cell_of(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i].empty()) throw NotAPartition("cell " + std::to_string(i) + " is empty");
    std::sort(cells[i].begin(), cells[i].end());
    for (Point p : cells[i]) {
      if (p < 0 || p >= n) throw NotAPartition("point " + std::to_string(p) + " out of range");
      if (cell_of[p] >= 0) throw NotAPartition("point " + std::to_string(p) + " listed twice");
      cell_of[p] = static_cast<int>(i);
    }
  }
  for (Point p = 0; p < n; ++p)
    if (cell_of[p] < 0) throw NotAPartition("point " + std::to_string(p) + " not covered");

  const int q = static_cast<int>(cells.size());
  auto counts_for = [&](Point x) {
    std::vector<std::vector<std::int64_t>> counts(
        static_cast<std::size_t>(t), std::vector<std::int64_t>(static_cast<std::size_t>(q), 0));
    for (Point v = 0; v < n; ++v) ++counts[cc.matrix.at(x, v)][cell_of[v]];
    return counts;
  };

  EquitablePartition out;
  out.cells = cells;
  out.parameters.assign(static_cast<std::size_t>(t),
                        std::vector<std::vector<std::int64_t>>(
                            static_cast<std::size_t>(q),
                            std::vector<std::int64_t>(static_cast<std::size_t>(q), 0)));
  for (int i = 0; i < q; ++i) {
    auto reference = counts_for(cells[i][0]);
    for (std::size_t idx = 1; idx < cells[i].size(); ++idx) {
      auto counts = counts_for(cells[i][idx]);
      for (int r = 0; r < t; ++r)
        for (int j = 0; j < q; ++j)
          if (counts[r][j] != reference[r][j])
            throw NotEquitable(r, i, j, cells[i][0], reference[r][j], cells[i][idx],
                               counts[r][j]);
    }
    for (int r = 0; r < t; ++r)
      for (int j = 0; j < q; ++j) out.parameters[r][i][j] = reference[r][j];
  }
  return out;
}

EquitablePartition point_partition(const CoherentConfig& cc, Point y, int fiber_x) {
  if (cc.fiber_count() != 2) throw WrongFiberCount(cc.fiber_count());
  if (fiber_x < 0 || fiber_x >= cc.fiber_count())
    throw BadParameters("fiber index " + std::to_string(fiber_x) + " out of range");
  if (y < 0 || y >= cc.point_count())
    throw BadParameters("point " + std::to_string(y) + " out of range");
  const int fiber_y = cc.fiber_of_point[y];
  if (fiber_y == fiber_x) throw BadParameters("point lies in the selected fiber");

  // Cells are the neighborhoods T(y), in local labels of the restriction to X.
  const auto& xs = cc.fibers[fiber_x];
  std::vector<std::vector<Point>> cells;
  for (Color t : cc.block_colors(fiber_y, fiber_x)) {
    std::vector<Point> cell;
    for (std::size_t i = 0; i < xs.size(); ++i)
      if (cc.matrix.at(y, xs[i]) == t) cell.push_back(static_cast<Point>(i));
    cells.push_back(std::move(cell));
  }

  CoherentConfig component = restrict_to(cc, {fiber_x});
  try {
    return verify_equitable(component, cells);
  } catch (const Error& e) {
    throw InternalCheckFailure(std::string("induced point partition not equitable: ") + e.what());
  }
}

std::vector<EquitablePartition> enumerate_equitable(const CoherentConfig& cc, int max_points) {
  if (!cc.homogeneous()) throw NotHomogeneous(cc.fiber_count());
  const int n = cc.point_count();
  if (n > max_points) throw TooLarge(n, max_points);
  if (n > 31) throw TooLarge(n, 31);
  const int t = cc.color_count();

  std::vector<std::vector<std::uint32_t>> row(
      static_cast<std::size_t>(n), std::vector<std::uint32_t>(static_cast<std::size_t>(t), 0));
  for (Point u = 0; u < n; ++u)
    for (Point v = 0; v < n; ++v) row[u][cc.matrix.at(u, v)] |= 1u << v;

  // |r(x) ∩ b| constant over x in a, for every relation r.
  auto constant_over = [&](std::uint32_t a, std::uint32_t b) {
    int first = std::countr_zero(a);
    for (int r = 0; r < t; ++r) {
      int reference = std::popcount(row[first][r] & b);
      for (std::uint32_t rest = a & (a - 1); rest; rest &= rest - 1)
        if (std::popcount(row[std::countr_zero(rest)][r] & b) != reference) return false;
    }
    return true;
  };

  const std::uint32_t full = (1u << n) - 1;
  std::vector<std::uint32_t> cells;
  std::vector<EquitablePartition> found;

  std::function<void(std::uint32_t)> extend = [&](std::uint32_t assigned) {
    if (assigned == full) {
      std::vector<std::vector<Point>> as_points;
      for (std::uint32_t mask : cells) {
        std::vector<Point> cell;
        for (std::uint32_t m = mask; m; m &= m - 1) cell.push_back(std::countr_zero(m));
        as_points.push_back(std::move(cell));
      }
      found.push_back(verify_equitable(cc, as_points));
      return;
    }
    // Each new cell contains the smallest unassigned point, so every partition
    // is generated exactly once.
    const int anchor = std::countr_zero(~assigned);
    const std::uint32_t rest = full & ~assigned & ~(1u << anchor);
    std::uint32_t sub = rest;
    while (true) {
      std::uint32_t cell = sub | (1u << anchor);
      bool ok = constant_over(cell, cell);
      for (std::uint32_t prior : cells) {
        if (!ok) break;
        ok = constant_over(cell, prior) && constant_over(prior, cell);
      }
      if (ok) {
        cells.push_back(cell);
        extend(assigned | cell);
        cells.pop_back();
      }
      if (sub == 0) break;
      sub = (sub - 1) & rest;
    }
  };
  extend(0);
  return found;
}

}  // namespace cohcfg
