#ifndef COHCFG_COHERENT_CONFIG_HPP
#define COHCFG_COHERENT_CONFIG_HPP

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cohcfg/color_matrix.hpp"

namespace cohcfg {

// Sparse tensor of intersection numbers c(r,s;t) = #{w : (u,w) in r, (w,v) in s}
// for any (u,v) in t. Entries exist only for composable triples with a
// positive count; at() returns 0 otherwise.
class IntersectionTensor {
 public:
  IntersectionTensor() = default;
  explicit IntersectionTensor(int colors) : colors_(colors) {}

  std::int64_t at(Color r, Color s, Color t) const {
    auto it = entries_.find(key(r, s, t));
    return it == entries_.end() ? 0 : it->second;
  }

  void set(Color r, Color s, Color t, std::int64_t value) {
    if (value != 0) entries_[key(r, s, t)] = value;
  }

  std::size_t nonzero_count() const { return entries_.size(); }
  int colors() const { return colors_; }

  template <typename Fn>  // Fn(r, s, t, count)
  void for_each(Fn&& fn) const {
    for (const auto& [k, v] : entries_) {
      fn(static_cast<Color>(k >> 42), static_cast<Color>((k >> 21) & kMask),
         static_cast<Color>(k & kMask), v);
    }
  }

 private:
  static constexpr std::uint64_t kMask = (1u << 21) - 1;

  std::uint64_t key(Color r, Color s, Color t) const {
    return (static_cast<std::uint64_t>(r) << 42) | (static_cast<std::uint64_t>(s) << 21) |
           static_cast<std::uint64_t>(t);
  }

  int colors_ = 0;
  std::unordered_map<std::uint64_t, std::int64_t> entries_;
};

// A validated coherent configuration. Construct through validate_configuration;
// all derived fields are consistent with the matrix.
struct CoherentConfig {
  ColorMatrix matrix;

  std::vector<int> fiber_of_point;            // point -> fiber index
  std::vector<std::vector<Point>> fibers;     // fiber -> points, ascending
  std::vector<Color> diagonal_color;          // fiber -> color of its diagonal
  std::vector<bool> color_on_diagonal;        // color -> lies on the diagonal
  std::vector<Color> transpose;               // color -> transposed color
  std::vector<std::int64_t> degree;           // color -> out-degree from source fiber
  std::vector<std::pair<int, int>> block;     // color -> (source fiber, target fiber)
  IntersectionTensor tensor;

  int point_count() const { return matrix.size; }
  int color_count() const { return matrix.colors; }
  int fiber_count() const { return static_cast<int>(fibers.size()); }
  bool homogeneous() const { return fibers.size() == 1; }

  // Colors whose block is (fiber_x, fiber_y), ascending.
  std::vector<Color> block_colors(int fiber_x, int fiber_y) const;

  // Colors t with c(r,s;t) > 0; empty when r,s are not composable.
  const std::vector<Color>& product(Color r, Color s) const;

  std::unordered_map<std::uint64_t, std::vector<Color>> products;  // (r<<21|s) -> colors
};

// Checks the three axioms exhaustively over every pair and triple-count:
// the diagonal is a union of colors, the color partition is transpose-closed,
// and every composable triple has a constant intersection number. Throws
// DiagonalNotUnion / TransposeNotClosed / NonConstantIntersection with a
// witness, InvalidMatrix for shape defects.
CoherentConfig validate_configuration(const ColorMatrix& matrix);

inline const std::vector<std::vector<Point>>& fibers(const CoherentConfig& cc) {
  return cc.fibers;
}

}  // namespace cohcfg

#endif
