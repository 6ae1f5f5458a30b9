#include "graphweight/gf2.hpp"

#include <bit>
#include <utility>

namespace graphweight {

Gf2Vector::Gf2Vector(int width, Mask bits) : width_(width), bits_(bits) {
  if (width < 0 || width > 64) throw GraphError("vector width out of range");
  if ((bits & ~low_bits(width)) != 0) throw GraphError("vector has bits beyond its width");
}

Gf2Matrix::Gf2Matrix(int dim) {
  if (dim < 0 || dim > 64) throw GraphError("matrix dimension out of range");
  rows_.assign(static_cast<std::size_t>(dim), 0);
}

Gf2Matrix::Gf2Matrix(std::vector<Mask> rows) : rows_(std::move(rows)) {
  if (rows_.size() > 64) throw GraphError("matrix dimension out of range");
  const Mask allowed = low_bits(dim());
  for (Mask r : rows_)
    if ((r & ~allowed) != 0) throw GraphError("matrix row has bits beyond its dimension");
}

void Gf2Matrix::set(int i, int j, bool value) {
  if (j < 0 || j >= dim()) throw GraphError("column out of range");
  auto& row = rows_.at(static_cast<std::size_t>(i));
  const Mask bit = Mask{1} << j;
  row = value ? (row | bit) : (row & ~bit);
}

bool Gf2Matrix::is_symmetric_zero_diagonal() const noexcept {
  for (int i = 0; i < dim(); ++i) {
    const Mask row = rows_[static_cast<std::size_t>(i)];
    if ((row >> i) & 1U) return false;
    for (int j = i + 1; j < dim(); ++j)
      if (((row >> j) & 1U) != ((rows_[static_cast<std::size_t>(j)] >> i) & 1U)) return false;
  }
  return true;
}

Gf2Matrix adjacency_matrix(const Graph& g, const VertexSubset& u) {
  // induced_subgraph already packs U's members into 0..|U|-1 in order.
  const Graph sub = induced_subgraph(g, u);
  const auto adj = sub.adjacency();
  return Gf2Matrix(std::vector<Mask>(adj.begin(), adj.end()));
}

int eliminate_rank(std::span<Mask> rows) noexcept {
  Mask columns = 0;
  for (Mask r : rows) columns |= r;

  std::size_t rank = 0;
  for (; columns != 0; columns &= columns - 1) {
    const Mask bit = columns & (~columns + 1);
    std::size_t pivot = rank;
    while (pivot < rows.size() && (rows[pivot] & bit) == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const Mask p = rows[rank];
    for (std::size_t r = rank + 1; r < rows.size(); ++r)
      if (rows[r] & bit) rows[r] ^= p;
    if (++rank == rows.size()) break;
  }
  return static_cast<int>(rank);
}

int rank(const Gf2Matrix& m) {
  std::vector<Mask> scratch(m.rows().begin(), m.rows().end());
  return eliminate_rank(scratch);
}

int corank(const Gf2Matrix& m) { return m.dim() - rank(m); }

BigInt kernel_count(const Gf2Matrix& m) { return BigInt{1} << corank(m); }

Gf2Vector mat_vec(const Gf2Matrix& m, const Gf2Vector& x) {
  if (x.width() != m.dim()) throw GraphError("vector width does not match matrix");
  Mask out = 0;
  for (int i = 0; i < m.dim(); ++i)
    if (std::popcount(m.rows()[static_cast<std::size_t>(i)] & x.bits()) & 1)
      out |= Mask{1} << i;
  return {m.dim(), out};
}

VertexSubset support(const Gf2Vector& x) { return {x.width(), x.bits()}; }

VertexSubset zero_set(const Gf2Matrix& m, const Gf2Vector& x) {
  return support(mat_vec(m, x)).complement();
}

}  // namespace graphweight
