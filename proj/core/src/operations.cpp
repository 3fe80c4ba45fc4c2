#include "cohcfg/operations.hpp"

#include <algorithm>
#include <cstdint>

#include "cohcfg/errors.hpp"

namespace cohcfg {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw InternalCheckFailure(what);
}

void check_color(const CoherentConfig& cc, Color c) {
  if (c < 0 || c >= cc.color_count())
    throw BadParameters("relation index " + std::to_string(c) + " out of range");
}

}  // namespace

CoherentConfig restrict_to(const CoherentConfig& cc, const std::vector<int>& fiber_indices) {
  if (fiber_indices.empty()) throw EmptySelection();
  std::vector<int> selected = fiber_indices;
  std::sort(selected.begin(), selected.end());
  selected.erase(std::unique(selected.begin(), selected.end()), selected.end());
  for (int f : selected)
    if (f < 0 || f >= cc.fiber_count())
      throw BadParameters("fiber index " + std::to_string(f) + " out of range");

  std::vector<Point> points;
  for (int f : selected) points.insert(points.end(), cc.fibers[f].begin(), cc.fibers[f].end());
  std::sort(points.begin(), points.end());

  const int n = static_cast<int>(points.size());
  ColorMatrix sub;
  sub.size = n;
  sub.colors = cc.color_count();
  sub.cells.resize(static_cast<std::size_t>(n) * n);
  for (Point i = 0; i < n; ++i)
    for (Point j = 0; j < n; ++j) sub.at(i, j) = cc.matrix.at(points[i], points[j]);
  return validate_configuration(canonical_relabel(sub));
}

std::vector<Color> complex_product(const CoherentConfig& cc, const std::vector<Color>& a,
                                   const std::vector<Color>& b) {
  for (Color c : a) check_color(cc, c);
  for (Color c : b) check_color(cc, c);
  std::vector<char> seen(static_cast<std::size_t>(cc.color_count()), 0);
  for (Color x : a)
    for (Color y : b)
      for (Color t : cc.product(x, y)) seen[t] = 1;
  std::vector<Color> out;
  for (Color t = 0; t < cc.color_count(); ++t)
    if (seen[t]) out.push_back(t);
  return out;
}

std::vector<Color> u_set(const CoherentConfig& cc, Color s) {
  check_color(cc, s);
  auto [fx, fy] = cc.block[s];
  if (fx == fy) throw NotOffDiagonal(s);

  const std::vector<Color>& ss = cc.product(s, cc.transpose[s]);
  const Color diagonal = cc.diagonal_color[fx];
  std::vector<Color> out;
  for (Color r : cc.block_colors(fx, fx)) {
    bool clean = true;
    for (Color c : cc.product(cc.transpose[r], r)) {
      if (c == diagonal) continue;
      if (std::binary_search(ss.begin(), ss.end(), c)) {
        clean = false;
        break;
      }
    }
    if (clean) out.push_back(r);
  }
  return out;
}

CoherentConfig tensor_product(const CoherentConfig& a, const CoherentConfig& b) {
  const int na = a.point_count(), nb = b.point_count();
  const int ta = a.color_count(), tb = b.color_count();
  ColorMatrix big;
  big.size = na * nb;
  big.colors = ta * tb;
  big.cells.resize(static_cast<std::size_t>(big.size) * big.size);
  for (Point u1 = 0; u1 < na; ++u1)
    for (Point u2 = 0; u2 < nb; ++u2)
      for (Point v1 = 0; v1 < na; ++v1)
        for (Point v2 = 0; v2 < nb; ++v2)
          big.at(u1 * nb + u2, v1 * nb + v2) = a.matrix.at(u1, v1) * tb + b.matrix.at(u2, v2);
  return validate_configuration(canonical_relabel(big));
}

namespace {

// Pairs every x in X with its unique R-partner and reads the three quadrant
// color maps off the matrix; any failure of single-valuedness, injectivity or
// block coverage would contradict the matching equivalence on validated input.
MatchingIso build_iso(const CoherentConfig& cc, Color matching) {
  const auto& xs = cc.fibers[0];
  const auto& ys = cc.fibers[1];

  std::vector<Point> partner_of(static_cast<std::size_t>(cc.point_count()), -1);
  MatchingIso iso;
  for (Point x : xs) {
    Point match = -1;
    for (Point y : ys)
      if (cc.matrix.at(x, y) == matching) {
        require(match < 0, "matching partner unique");
        match = y;
      }
    require(match >= 0, "matching partner exists");
    require(partner_of[match] < 0, "matching partner not shared");
    partner_of[match] = x;
    iso.pairing.emplace_back(x, match);
  }

  auto record = [](std::map<Color, Color>& m, Color source, Color target) {
    auto [it, inserted] = m.emplace(source, target);
    require(it->second == target, "quadrant color map single-valued");
  };
  for (Point u : xs)
    for (Point v : ys) record(iso.to_xy, cc.matrix.at(u, partner_of[v]), cc.matrix.at(u, v));
  for (Point u : ys)
    for (Point v : xs) record(iso.to_yx, cc.matrix.at(partner_of[u], v), cc.matrix.at(u, v));
  for (Point u : ys)
    for (Point v : ys)
      record(iso.to_yy, cc.matrix.at(partner_of[u], partner_of[v]), cc.matrix.at(u, v));

  std::vector<Color> sources = cc.block_colors(0, 0);
  auto check_bijection = [&](const std::map<Color, Color>& m, int fx, int fy) {
    require(m.size() == sources.size(), "quadrant color map defined on the diagonal block");
    std::vector<Color> images;
    for (const auto& [source, target] : m) {
      require(std::binary_search(sources.begin(), sources.end(), source),
              "quadrant color map keyed by diagonal-block relations");
      images.push_back(target);
    }
    std::sort(images.begin(), images.end());
    require(std::adjacent_find(images.begin(), images.end()) == images.end(),
            "quadrant color map injective");
    require(images == cc.block_colors(fx, fy), "quadrant color map covers its block");
  };
  check_bijection(iso.to_xy, 0, 1);
  check_bijection(iso.to_yx, 1, 0);
  check_bijection(iso.to_yy, 1, 1);
  return iso;
}

}  // namespace

MatchingReport matching_structure(const CoherentConfig& cc) {
  if (cc.fiber_count() != 2) throw WrongFiberCount(cc.fiber_count());
  if (cc.fibers[0].size() != cc.fibers[1].size())
    throw UnequalFibers(static_cast<std::int64_t>(cc.fibers[0].size()),
                        static_cast<std::int64_t>(cc.fibers[1].size()));

  MatchingReport report;
  std::vector<Color> xy = cc.block_colors(0, 1);
  for (Color c : xy)
    if (cc.degree[c] == 1) {
      report.degree_one_xy = true;
      if (!report.relation) report.relation = c;
    }
  for (Color c : cc.block_colors(1, 0))
    if (cc.degree[c] == 1) report.degree_one_yx = true;

  if (report.relation) {
    report.kind = MatchingKind::Matching;
    report.iso = build_iso(cc, *report.relation);
  } else if (xy.size() == 1) {
    report.kind = MatchingKind::DirectSumLike;
  } else {
    report.kind = MatchingKind::NoMatching;
  }
  return report;
}

}  // namespace cohcfg
