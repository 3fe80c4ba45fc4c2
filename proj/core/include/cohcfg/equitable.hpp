#ifndef COHCFG_EQUITABLE_HPP
#define COHCFG_EQUITABLE_HPP

#include <cstdint>
#include <vector>

#include "cohcfg/coherent_config.hpp"

namespace cohcfg {

inline constexpr int kDefaultEnumerationLimit = 12;

// A partition of a homogeneous configuration's point set, with the per-relation
// parameter matrices p[r][i][j] = |r(x) cap C_j| for any x in C_i.
struct EquitablePartition {
  std::vector<std::vector<Point>> cells;                        // each ascending
  std::vector<std::vector<std::vector<std::int64_t>>> parameters;  // [color][i][j]
};

// Checks that cells partition the points and that every |r(x) cap C_j| is
// constant over x in C_i. Throws NotAPartition / NotEquitable with a witness.
EquitablePartition verify_equitable(const CoherentConfig& cc,
                                    const std::vector<std::vector<Point>>& cells);

// For a two-fiber configuration and a point y outside fiber X: the partition
// of X into the neighborhoods t(y), t ranging over the Y->X block. Cells are
// in the local point order of the restriction to X and come out equitable on
// it; cell sizes equal the block's degrees.
EquitablePartition point_partition(const CoherentConfig& cc, Point y, int fiber_x);

// All equitable partitions, by exhaustive canonical search: each cell is the
// full member set of the smallest unassigned point, and constancy against
// every completed cell is checked as soon as a cell closes. Deterministic
// order; throws TooLarge beyond max_points.
std::vector<EquitablePartition> enumerate_equitable(const CoherentConfig& cc,
                                                    int max_points = kDefaultEnumerationLimit);

}  // namespace cohcfg

#endif
