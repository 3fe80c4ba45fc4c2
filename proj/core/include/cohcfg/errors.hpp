#ifndef COHCFG_ERRORS_HPP
#define COHCFG_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cohcfg {

// Every library error carries a stable kind tag plus named integer details so
// callers can render structured payloads without downcasting.
class Error : public std::runtime_error {
 public:
  using Details = std::vector<std::pair<std::string, std::int64_t>>;

  Error(std::string kind, const std::string& message, Details details = {})
      : std::runtime_error(message), kind_(std::move(kind)), details_(std::move(details)) {}

  const std::string& kind() const { return kind_; }
  const Details& details() const { return details_; }

 private:
  std::string kind_;
  Details details_;
};

// ---- configuration validation -------------------------------------------

struct InvalidMatrix : Error {
  explicit InvalidMatrix(const std::string& message) : Error("InvalidMatrix", message) {}
};

// A color class meets the diagonal but also holds an off-diagonal pair.
struct DiagonalNotUnion : Error {
  DiagonalNotUnion(int color, int diag_point, int off_u, int off_v)
      : Error("DiagonalNotUnion",
              "color " + std::to_string(color) + " contains (" + std::to_string(diag_point) +
                  "," + std::to_string(diag_point) + ") and (" + std::to_string(off_u) + "," +
                  std::to_string(off_v) + ")",
              {{"color", color}, {"diagonal_point", diag_point}, {"u", off_u}, {"v", off_v}}) {}
};

// Two pairs of one color whose transposed pairs land in different colors.
struct TransposeNotClosed : Error {
  TransposeNotClosed(int color, int u1, int v1, int t1, int u2, int v2, int t2)
      : Error("TransposeNotClosed",
              "color " + std::to_string(color) + ": transpose of (" + std::to_string(u1) + "," +
                  std::to_string(v1) + ") has color " + std::to_string(t1) + " but transpose of (" +
                  std::to_string(u2) + "," + std::to_string(v2) + ") has color " +
                  std::to_string(t2),
              {{"color", color},
               {"u1", u1},
               {"v1", v1},
               {"transpose1", t1},
               {"u2", u2},
               {"v2", v2},
               {"transpose2", t2}}) {}
};

// Witness: two pairs of color t seeing different (r,s)-path counts.
struct NonConstantIntersection : Error {
  NonConstantIntersection(int r, int s, int t, int u1, int v1, std::int64_t count1, int u2, int v2,
                          std::int64_t count2)
      : Error("NonConstantIntersection",
              "c(" + std::to_string(r) + "," + std::to_string(s) + ";" + std::to_string(t) +
                  ") differs: " + std::to_string(count1) + " at (" + std::to_string(u1) + "," +
                  std::to_string(v1) + ") vs " + std::to_string(count2) + " at (" +
                  std::to_string(u2) + "," + std::to_string(v2) + ")",
              {{"r", r},
               {"s", s},
               {"t", t},
               {"u1", u1},
               {"v1", v1},
               {"count1", count1},
               {"u2", u2},
               {"v2", v2},
               {"count2", count2}}) {}
};

// ---- operations ----------------------------------------------------------

struct EmptySelection : Error {
  EmptySelection() : Error("EmptySelection", "fiber selection is empty") {}
};

struct NotOffDiagonal : Error {
  explicit NotOffDiagonal(int color)
      : Error("NotOffDiagonal",
              "relation " + std::to_string(color) + " lies in a diagonal block",
              {{"color", color}}) {}
};

struct WrongFiberCount : Error {
  explicit WrongFiberCount(int count)
      : Error("WrongFiberCount",
              "expected exactly 2 fibers, found " + std::to_string(count), {{"fibers", count}}) {}
};

struct UnequalFibers : Error {
  UnequalFibers(std::int64_t x, std::int64_t y)
      : Error("UnequalFibers",
              "fiber sizes differ: " + std::to_string(x) + " vs " + std::to_string(y),
              {{"size_x", x}, {"size_y", y}}) {}
};

// ---- orbitals ------------------------------------------------------------

struct NotBijection : Error {
  explicit NotBijection(int generator)
      : Error("NotBijection", "generator " + std::to_string(generator) + " is not a permutation",
              {{"generator", generator}}) {}
};

// ---- equitable -----------------------------------------------------------

struct NotHomogeneous : Error {
  explicit NotHomogeneous(int fibers)
      : Error("NotHomogeneous",
              "operation requires a single fiber, found " + std::to_string(fibers),
              {{"fibers", fibers}}) {}
};

struct NotAPartition : Error {
  explicit NotAPartition(const std::string& why) : Error("NotAPartition", why) {}
};

struct NotEquitable : Error {
  NotEquitable(int relation, int cell_i, int cell_j, int x_ref, std::int64_t count_ref, int x_bad,
               std::int64_t count_bad)
      : Error("NotEquitable",
              "relation " + std::to_string(relation) + ", cells (" + std::to_string(cell_i) + "," +
                  std::to_string(cell_j) + "): point " + std::to_string(x_ref) + " sees " +
                  std::to_string(count_ref) + " but point " + std::to_string(x_bad) + " sees " +
                  std::to_string(count_bad),
              {{"relation", relation},
               {"cell_i", cell_i},
               {"cell_j", cell_j},
               {"x_ref", x_ref},
               {"count_ref", count_ref},
               {"x_bad", x_bad},
               {"count_bad", count_bad}}) {}
};

struct TooLarge : Error {
  TooLarge(int points, int limit)
      : Error("TooLarge",
              "enumeration limited to " + std::to_string(limit) + " points, got " +
                  std::to_string(points),
              {{"points", points}, {"limit", limit}}) {}
};

// ---- sieve / tableau -----------------------------------------------------

struct BadParameters : Error {
  explicit BadParameters(const std::string& why) : Error("BadParameters", why) {}
};

struct BadInstance : Error {
  explicit BadInstance(const std::string& why) : Error("BadInstance", why) {}
};

struct NotIntegral : Error {
  NotIntegral(std::int64_t m, std::int64_t d)
      : Error("NotIntegral",
              "(m-1) does not divide d(d-1) for m=" + std::to_string(m) +
                  ", d=" + std::to_string(d),
              {{"m", m}, {"d", d}}) {}
};

// ---- io ------------------------------------------------------------------

struct IoError : Error {
  explicit IoError(const std::string& why) : Error("IoError", why) {}
};

// Raised when a derived identity that must hold on validated input fails;
// indicates a bug, not a caller mistake.
struct InternalCheckFailure : Error {
  explicit InternalCheckFailure(const std::string& what)
      : Error("InternalCheckFailure", "internal consistency check failed: " + what) {}
};

}  // namespace cohcfg

#endif
