#ifndef COHCFG_TABLEAU_HPP
#define COHCFG_TABLEAU_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace cohcfg {

// Feasibility instance for a 3-cell equitable partition of a rank-3 symmetric
// scheme on m = c1+c2+c3 = 2k+1 points, cell sizes taken in the given order.
struct TableauInstance {
  std::array<std::int64_t, 3> cells{};
  std::int64_t k = 0;

  std::int64_t m() const { return cells[0] + cells[1] + cells[2]; }

  // Throws BadInstance unless all cells are positive, m is prime and m = 2k+1.
  static TableauInstance create(std::array<std::int64_t, 3> cells, std::int64_t k);
};

// One parameter-matrix pair. beta is searched; gamma is derived entrywise from
// beta and the cell sizes (off-diagonal: |C_j| - beta_ij, diagonal:
// |C_i| - 1 - beta_ii) and never searched.
struct BetaTableau {
  std::array<std::array<std::int64_t, 3>, 3> beta{};
  std::array<std::array<std::int64_t, 3>, 3> gamma{};
  bool self_paired = false;  // beta == gamma, the swap fixes the solution
};

// One grid point of the search: the three upper off-diagonal entries, the
// diagonal they force, and why the branch closed.
struct BranchRecord {
  std::int64_t b12 = 0, b13 = 0, b23 = 0;
  std::array<std::int64_t, 3> diagonal{};
  std::string outcome;  // "diagonal-range", "trace-mismatch", "solution"
};

struct TableauResult {
  TableauInstance instance;
  std::vector<BetaTableau> solutions;       // one representative per swap class
  std::vector<BranchRecord> trace;          // every branch, in search order
  std::vector<std::string> annotations;     // e.g. saturated off-diagonal entries
  bool feasible() const { return !solutions.empty(); }
};

// Exhaustive search over beta12, beta13, beta23. Each upper entry ranges over
// the multiples of |C_j| / gcd(|C_i|,|C_j|) in [0,|C_j|], which is exactly the
// integrality constraint of the scaling identity |C_i| beta_ij = beta_ji |C_j|;
// the lower entries and the diagonal are then forced by the row sums, and a
// branch survives iff the diagonal lands in range and the trace equals k-1.
// Solutions are deduplicated up to the beta <-> gamma swap.
std::vector<BetaTableau> solve(const TableauInstance& instance);

// solve() plus the full branch trace and annotations.
TableauResult eliminate(const TableauInstance& instance);

}  // namespace cohcfg

#endif
