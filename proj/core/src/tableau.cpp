#include "cohcfg/tableau.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "cohcfg/errors.hpp"
#include "cohcfg/sieve.hpp"

namespace cohcfg {

TableauInstance TableauInstance::create(std::array<std::int64_t, 3> cells, std::int64_t k) {
  for (std::int64_t c : cells)
    if (c < 1) throw BadInstance("cell sizes must be positive");
  if (k < 1) throw BadInstance("k must be positive");
  const std::int64_t m = cells[0] + cells[1] + cells[2];
  if (m != 2 * k + 1)
    throw BadInstance("cell sizes sum to " + std::to_string(m) + ", expected 2k+1 = " +
                      std::to_string(2 * k + 1));
  if (!is_prime(m)) throw BadInstance("cell sum " + std::to_string(m) + " is not prime");
  TableauInstance instance;
  instance.cells = cells;
  instance.k = k;
  return instance;
}

namespace {

using Matrix3 = std::array<std::array<std::int64_t, 3>, 3>;

std::array<std::int64_t, 9> flatten(const Matrix3& m) {
  return {m[0][0], m[0][1], m[0][2], m[1][0], m[1][1], m[1][2], m[2][0], m[2][1], m[2][2]};
}

// The scaling identity |C_i| b_ij = b_ji |C_j| forces b_ij to be a multiple of
// |C_j| / gcd(|C_i|, |C_j|); these multiples in [0, |C_j|] are the search grid.
std::vector<std::int64_t> grid(const std::array<std::int64_t, 3>& cells, int i, int j) {
  const std::int64_t step = cells[j] / std::gcd(cells[i], cells[j]);
  std::vector<std::int64_t> values;
  for (std::int64_t v = 0; v <= cells[j]; v += step) values.push_back(v);
  return values;
}

}  // namespace

TableauResult eliminate(const TableauInstance& instance) {
  const auto& c = instance.cells;
  const std::int64_t k = instance.k;

  TableauResult result;
  result.instance = instance;

  std::vector<BetaTableau> raw;
  for (std::int64_t b12 : grid(c, 0, 1))
    for (std::int64_t b13 : grid(c, 0, 2))
      for (std::int64_t b23 : grid(c, 1, 2)) {
        const std::int64_t b21 = c[0] * b12 / c[1];
        const std::int64_t b31 = c[0] * b13 / c[2];
        const std::int64_t b32 = c[1] * b23 / c[2];

        BranchRecord record;
        record.b12 = b12, record.b13 = b13, record.b23 = b23;
        record.diagonal = {k - b12 - b13, k - b21 - b23, k - b31 - b32};

        bool in_range = true;
        for (int i = 0; i < 3; ++i)
          in_range = in_range && 0 <= record.diagonal[i] && record.diagonal[i] <= c[i] - 1;
        if (!in_range) {
          record.outcome = "diagonal-range";
        } else if (record.diagonal[0] + record.diagonal[1] + record.diagonal[2] != k - 1) {
          record.outcome = "trace-mismatch";
        } else {
          record.outcome = "solution";
          BetaTableau solution;
          solution.beta = {{{record.diagonal[0], b12, b13},
                            {b21, record.diagonal[1], b23},
                            {b31, b32, record.diagonal[2]}}};
          for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
              solution.gamma[i][j] =
                  i == j ? c[i] - 1 - solution.beta[i][i] : c[j] - solution.beta[i][j];
          solution.self_paired = solution.beta == solution.gamma;
          raw.push_back(solution);
        }
        result.trace.push_back(std::move(record));
      }

  // One representative per swap class, with beta the lexicographically smaller
  // of the pair; the partner is itself in `raw`, so this only drops duplicates.
  std::vector<std::array<std::int64_t, 9>> seen;
  for (const BetaTableau& solution : raw) {
    auto beta_key = flatten(solution.beta);
    auto gamma_key = flatten(solution.gamma);
    auto key = std::min(beta_key, gamma_key);
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
    seen.push_back(key);
    if (beta_key <= gamma_key) {
      result.solutions.push_back(solution);
    } else {
      BetaTableau swapped;
      swapped.beta = solution.gamma;
      swapped.gamma = solution.beta;
      swapped.self_paired = solution.self_paired;
      result.solutions.push_back(swapped);
    }
  }

  for (std::size_t s = 0; s < result.solutions.size(); ++s)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        if (i == j) continue;
        const std::int64_t v = result.solutions[s].beta[i][j];
        if (v == 0 || v == c[j]) {
          std::ostringstream note;
          note << "solution " << s << ": beta[" << i + 1 << "][" << j + 1 << "] = " << v
               << " is extremal, so the corresponding relation product is a single relation";
          result.annotations.push_back(note.str());
        }
      }

  return result;
}

std::vector<BetaTableau> solve(const TableauInstance& instance) {
  return eliminate(instance).solutions;
}

}  // namespace cohcfg
