#include "cohcfg/coherent_config.hpp"

#include <algorithm>
#include <cstdint>

#include "cohcfg/errors.hpp"

namespace cohcfg {

namespace {

constexpr int kMaxColors = 1 << 21;  // keeps (r,s,t) packable into 64 bits

void check_shape(const ColorMatrix& m) {
  if (m.size < 1) throw InvalidMatrix("configuration needs at least one point");
  if (m.cells.size() != static_cast<std::size_t>(m.size) * m.size)
    throw InvalidMatrix("cell count does not match size");
  if (m.colors < 1 || m.colors >= kMaxColors) throw InvalidMatrix("color count out of range");
  std::vector<std::int64_t> seen(static_cast<std::size_t>(m.colors), 0);
  for (Color c : m.cells) {
    if (c < 0 || c >= m.colors) throw InvalidMatrix("color index out of range");
    ++seen[c];
  }
  for (Color c = 0; c < m.colors; ++c)
    if (seen[c] == 0) throw InvalidMatrix("color " + std::to_string(c) + " never occurs");
}

void require(bool ok, const char* what) {
  if (!ok) throw InternalCheckFailure(what);
}

}  // namespace

std::vector<Color> CoherentConfig::block_colors(int fiber_x, int fiber_y) const {
  std::vector<Color> out;
  for (Color c = 0; c < color_count(); ++c)
    if (block[c] == std::make_pair(fiber_x, fiber_y)) out.push_back(c);
  return out;
}

const std::vector<Color>& CoherentConfig::product(Color r, Color s) const {
  static const std::vector<Color> empty;
  auto it = products.find((static_cast<std::uint64_t>(r) << 21) | static_cast<std::uint64_t>(s));
  return it == products.end() ? empty : it->second;
}

CoherentConfig validate_configuration(const ColorMatrix& matrix) {
  check_shape(matrix);
  const int n = matrix.size;
  const int t = matrix.colors;

  CoherentConfig cc;
  cc.matrix = matrix;

  // Diagonal colors and the off-diagonal pairs that would break the union.
  cc.color_on_diagonal.assign(t, false);
  std::vector<Point> first_diag_point(t, -1);
  for (Point u = 0; u < n; ++u) {
    Color c = matrix.at(u, u);
    if (!cc.color_on_diagonal[c]) {
      cc.color_on_diagonal[c] = true;
      first_diag_point[c] = u;
    }
  }
  for (Point u = 0; u < n; ++u)
    for (Point v = 0; v < n; ++v) {
      if (u == v) continue;
      Color c = matrix.at(u, v);
      if (cc.color_on_diagonal[c]) throw DiagonalNotUnion(c, first_diag_point[c], u, v);
    }

  // Fibers, indexed by first appearance of their diagonal color.
  std::vector<int> fiber_of_color(t, -1);
  cc.fiber_of_point.assign(n, -1);
  for (Point u = 0; u < n; ++u) {
    Color c = matrix.at(u, u);
    if (fiber_of_color[c] < 0) {
      fiber_of_color[c] = static_cast<int>(cc.fibers.size());
      cc.fibers.emplace_back();
      cc.diagonal_color.push_back(c);
    }
    cc.fiber_of_point[u] = fiber_of_color[c];
    cc.fibers[fiber_of_color[c]].push_back(u);
  }

  // Transpose map, single-valued over each color.
  cc.transpose.assign(t, -1);
  std::vector<std::pair<Point, Point>> first_pair(t, {-1, -1});
  for (Point u = 0; u < n; ++u)
    for (Point v = 0; v < n; ++v) {
      Color c = matrix.at(u, v);
      Color ct = matrix.at(v, u);
      if (cc.transpose[c] < 0) {
        cc.transpose[c] = ct;
        first_pair[c] = {u, v};
      } else if (cc.transpose[c] != ct) {
        throw TransposeNotClosed(c, first_pair[c].first, first_pair[c].second, cc.transpose[c], u,
                                 v, ct);
      }
    }
  for (Color c = 0; c < t; ++c) require(cc.transpose[cc.transpose[c]] == c, "transpose involution");

  // Constancy of all path counts. For each target color the sorted (r,s)->count
  // profile of its first pair is the reference; every later pair must match.
  using Profile = std::vector<std::pair<std::uint64_t, std::int64_t>>;
  std::vector<Profile> reference(t);
  std::vector<std::pair<Point, Point>> reference_pair(t, {-1, -1});
  std::vector<bool> have_reference(t, false);

  std::vector<std::uint64_t> keys(static_cast<std::size_t>(n));
  Profile profile;
  for (Point u = 0; u < n; ++u)
    for (Point v = 0; v < n; ++v) {
      for (Point w = 0; w < n; ++w)
        keys[w] = static_cast<std::uint64_t>(matrix.at(u, w)) * static_cast<std::uint64_t>(t) +
                  static_cast<std::uint64_t>(matrix.at(w, v));
      std::sort(keys.begin(), keys.end());
      profile.clear();
      for (std::size_t i = 0; i < keys.size();) {
        std::size_t j = i;
        while (j < keys.size() && keys[j] == keys[i]) ++j;
        profile.emplace_back(keys[i], static_cast<std::int64_t>(j - i));
        i = j;
      }

      Color target = matrix.at(u, v);
      if (!have_reference[target]) {
        reference[target] = profile;
        reference_pair[target] = {u, v};
        have_reference[target] = true;
        continue;
      }
      const Profile& ref = reference[target];
      if (ref != profile) {
        // Find a differing (r,s) and the two counts for the witness.
        std::size_t i = 0, j = 0;
        std::uint64_t key = 0;
        std::int64_t count_ref = 0, count_here = 0;
        while (true) {
          if (i < ref.size() && (j >= profile.size() || ref[i].first < profile[j].first)) {
            key = ref[i].first, count_ref = ref[i].second, count_here = 0;
            break;
          }
          if (j < profile.size() && (i >= ref.size() || profile[j].first < ref[i].first)) {
            key = profile[j].first, count_ref = 0, count_here = profile[j].second;
            break;
          }
          if (ref[i].second != profile[j].second) {
            key = ref[i].first, count_ref = ref[i].second, count_here = profile[j].second;
            break;
          }
          ++i, ++j;
        }
        Color r = static_cast<Color>(key / static_cast<std::uint64_t>(t));
        Color s = static_cast<Color>(key % static_cast<std::uint64_t>(t));
        throw NonConstantIntersection(r, s, target, reference_pair[target].first,
                                      reference_pair[target].second, count_ref, u, v, count_here);
      }
    }

  // Axioms hold; assemble tensor, products, blocks and degrees.
  cc.tensor = IntersectionTensor(t);
  for (Color target = 0; target < t; ++target)
    for (const auto& [key, count] : reference[target]) {
      Color r = static_cast<Color>(key / static_cast<std::uint64_t>(t));
      Color s = static_cast<Color>(key % static_cast<std::uint64_t>(t));
      cc.tensor.set(r, s, target, count);
      auto& colors = cc.products[(static_cast<std::uint64_t>(r) << 21) | s];
      colors.push_back(target);
    }
  for (auto& [key, colors] : cc.products) std::sort(colors.begin(), colors.end());

  cc.block.assign(t, {-1, -1});
  for (Color c = 0; c < t; ++c) {
    auto [u, v] = first_pair[c];
    cc.block[c] = {cc.fiber_of_point[u], cc.fiber_of_point[v]};
  }
  cc.degree.assign(t, 0);
  for (Color c = 0; c < t; ++c) {
    Point u = first_pair[c].first;
    std::int64_t d = 0;
    for (Point v = 0; v < n; ++v)
      if (matrix.at(u, v) == c) ++d;
    cc.degree[c] = d;
  }

  // Definition-level consistency: degree matches the diagonal tensor entry,
  // pair counts agree through the transpose, block rows cover the target fiber.
  for (Color c = 0; c < t; ++c) {
    int fx = cc.block[c].first;
    require(cc.tensor.at(c, cc.transpose[c], cc.diagonal_color[fx]) == cc.degree[c],
            "degree equals c(r,r^t;diagonal)");
    auto [sx, sy] = cc.block[c];
    std::int64_t pairs_fwd = cc.degree[c] * static_cast<std::int64_t>(cc.fibers[sx].size());
    std::int64_t pairs_rev =
        cc.degree[cc.transpose[c]] * static_cast<std::int64_t>(cc.fibers[sy].size());
    require(pairs_fwd == pairs_rev, "pair count symmetric under transpose");
    require(cc.block[cc.transpose[c]] == std::make_pair(sy, sx), "transpose swaps the block");
  }
  for (int fx = 0; fx < cc.fiber_count(); ++fx)
    for (int fy = 0; fy < cc.fiber_count(); ++fy) {
      std::int64_t total = 0;
      bool any = false;
      for (Color c : cc.block_colors(fx, fy)) total += cc.degree[c], any = true;
      if (any) require(total == static_cast<std::int64_t>(cc.fibers[fy].size()),
                       "block degrees sum to the target fiber size");
    }

  return cc;
}

}  // namespace cohcfg
