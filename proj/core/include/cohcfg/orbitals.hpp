#ifndef COHCFG_ORBITALS_HPP
#define COHCFG_ORBITALS_HPP

#include <vector>

#include "cohcfg/coherent_config.hpp"

namespace cohcfg {

// A finite set of permutations of {0..domain-1}, given as image tables.
struct ActionSpec {
  int domain = 0;
  std::vector<std::vector<int>> generators;
};

// Closes the pairs (u,v) under the generator maps; each pair orbit of the
// generated group becomes one relation. Relations are indexed by their
// lexicographically smallest pair, so the numbering is deterministic and
// independent of generator order. The result always validates (group orbits
// are coherent); point orbits appear as the fibers.
CoherentConfig orbital_configuration(const ActionSpec& action);

}  // namespace cohcfg

#endif
