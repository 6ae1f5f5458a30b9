#pragma once

#include <span>
#include <vector>

#include "graphweight/bigint.hpp"
#include "graphweight/graph.hpp"

namespace graphweight {

/// Column vector over the two-element field, at most 64 entries.
class Gf2Vector {
 public:
  constexpr Gf2Vector() = default;
  Gf2Vector(int width, Mask bits);

  static Gf2Vector indicator(const VertexSubset& u) { return {u.width(), u.mask()}; }

  [[nodiscard]] constexpr int width() const noexcept { return width_; }
  [[nodiscard]] constexpr Mask bits() const noexcept { return bits_; }
  [[nodiscard]] constexpr bool operator[](int i) const noexcept { return (bits_ >> i) & 1U; }

  friend constexpr bool operator==(const Gf2Vector&, const Gf2Vector&) = default;

 private:
  int width_ = 0;
  Mask bits_ = 0;
};

/// Dense square matrix over the two-element field; row i is a bit mask
/// whose bit j holds entry (i, j).
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  /// Zero matrix of the given dimension (0..64).
  explicit Gf2Matrix(int dim);
  /// Throws GraphError if a row has bits at or beyond `rows.size()`.
  explicit Gf2Matrix(std::vector<Mask> rows);

  [[nodiscard]] int dim() const noexcept { return static_cast<int>(rows_.size()); }
  [[nodiscard]] std::span<const Mask> rows() const noexcept { return rows_; }
  [[nodiscard]] bool at(int i, int j) const {
    return (rows_.at(static_cast<std::size_t>(i)) >> j) & 1U;
  }
  void set(int i, int j, bool value);
  [[nodiscard]] bool is_symmetric_zero_diagonal() const noexcept;

  friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

 private:
  std::vector<Mask> rows_;
};

/// A(G|_U): entry (a, b) is 1 iff the a-th and b-th smallest members of U
/// are adjacent. With U = V(G) this is A(G).
Gf2Matrix adjacency_matrix(const Graph& g, const VertexSubset& u);

/// Row rank by Gaussian elimination on a private copy.
int rank(const Gf2Matrix& m);

/// dim - rank.
int corank(const Gf2Matrix& m);

/// |{y : M y = 0}| = 2^corank(M).
BigInt kernel_count(const Gf2Matrix& m);

/// (M x)_i = parity of |row_i ∩ supp(x)|.
Gf2Vector mat_vec(const Gf2Matrix& m, const Gf2Vector& x);

/// supp(x) as a vertex subset.
VertexSubset support(const Gf2Vector& x);

/// S(x) = V \ supp(M x).
VertexSubset zero_set(const Gf2Matrix& m, const Gf2Vector& x);

/// Rank of the given rows, destroying them. Column j is bit j of every row;
/// columns are scanned left to right and the first remaining row with a set
/// bit becomes the pivot.
int eliminate_rank(std::span<Mask> rows) noexcept;

}  // namespace graphweight
