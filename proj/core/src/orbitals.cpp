#include "cohcfg/orbitals.hpp"

#include <numeric>

#include "cohcfg/errors.hpp"

namespace cohcfg {

namespace {

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }

  void unite(int a, int b) {
    a = find(a), b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

CoherentConfig orbital_configuration(const ActionSpec& action) {
  const int n = action.domain;
  if (n < 1) throw BadParameters("domain must be positive");
  for (std::size_t g = 0; g < action.generators.size(); ++g) {
    const auto& perm = action.generators[g];
    if (static_cast<int>(perm.size()) != n) throw NotBijection(static_cast<int>(g));
    std::vector<char> hit(static_cast<std::size_t>(n), 0);
    for (int image : perm) {
      if (image < 0 || image >= n || hit[image]) throw NotBijection(static_cast<int>(g));
      hit[image] = 1;
    }
  }

  // Pair orbits of the generated group are the components of the graph joining
  // each (u,v) to its generator images.
  UnionFind orbits(n * n);
  for (const auto& perm : action.generators)
    for (Point u = 0; u < n; ++u)
      for (Point v = 0; v < n; ++v) orbits.unite(u * n + v, perm[u] * n + perm[v]);

  ColorMatrix matrix;
  matrix.size = n;
  matrix.cells.resize(static_cast<std::size_t>(n) * n);
  std::vector<Color> color_of_root(static_cast<std::size_t>(n) * n, -1);
  Color next = 0;
  for (int pair = 0; pair < n * n; ++pair) {
    int root = orbits.find(pair);
    if (color_of_root[root] < 0) color_of_root[root] = next++;
    matrix.cells[pair] = color_of_root[root];
  }
  matrix.colors = next;
  return validate_configuration(matrix);
}

}  // namespace cohcfg
