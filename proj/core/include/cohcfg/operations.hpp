#ifndef COHCFG_OPERATIONS_HPP
#define COHCFG_OPERATIONS_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cohcfg/coherent_config.hpp"

namespace cohcfg {

// Restriction to a union of fibers; colors are re-indexed densely in reading
// order and the result is re-validated.
CoherentConfig restrict_to(const CoherentConfig& cc, const std::vector<int>& fiber_indices);

// Complex product AB = {t : c(a,b;t) > 0 for some a in A, b in B}, sorted.
std::vector<Color> complex_product(const CoherentConfig& cc, const std::vector<Color>& a,
                                   const std::vector<Color>& b);

// U_s = {r in the source-fiber diagonal block : r^t r  meets  s s^t only in the
// diagonal relation}. s must lie in an off-diagonal block.
std::vector<Color> u_set(const CoherentConfig& cc, Color s);

// Kronecker-style product: points (u1,u2), colors are pairs, re-indexed
// densely. Degrees multiply blockwise.
CoherentConfig tensor_product(const CoherentConfig& a, const CoherentConfig& b);

enum class MatchingKind { Matching, DirectSumLike, NoMatching };

// A checked isomorphism between the two-fiber configuration and the product of
// its X-block with the 2-point thin configuration. pairing maps each x in X to
// its matched y; the per-quadrant maps send each X-block color to the color of
// its image pairs.
struct MatchingIso {
  std::vector<std::pair<Point, Point>> pairing;     // (x, y), ascending in x
  std::map<Color, Color> to_xy;                     // s -> color of {(x, pair(x')) : (x,x') in s}
  std::map<Color, Color> to_yx;
  std::map<Color, Color> to_yy;
};

struct MatchingReport {
  MatchingKind kind = MatchingKind::NoMatching;
  bool degree_one_xy = false;               // some relation of the X->Y block has degree 1
  bool degree_one_yx = false;
  std::optional<Color> relation;            // the matching relation, when present
  std::optional<MatchingIso> iso;           // present and verified for Matching
};

// Requires exactly two fibers of equal size. Matching when the off-diagonal
// block holds a degree-1 relation (isomorphism constructed and checked),
// DirectSumLike when the whole block X x Y is a single relation, NoMatching
// otherwise.
MatchingReport matching_structure(const CoherentConfig& cc);

}  // namespace cohcfg

#endif
