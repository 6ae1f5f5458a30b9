#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "graphweight/bigint.hpp"
#include "graphweight/dyadic.hpp"
#include "graphweight/graph.hpp"

namespace graphweight {

/// Which of the three closed forms produced a value.
enum class Formula {
  definition,  // φ: signed sum of χ₃ over spanning subgraphs
  eulerian,    // φ: signed sum over vertex sets inducing all-even degrees
  corank,      // ψ: sum of 2^corank of induced adjacency matrices
};

std::string_view to_string(Formula f) noexcept;

/// Exhaustive sums are exponential; these caps turn a hopeless request into
/// an error instead of a hang.
struct Budgets {
  int edge_budget = 24;    // phi_definition enumerates 2^|E| edge subsets
  int vertex_budget = 30;  // phi_eulerian and psi_corank enumerate 2^n vertex subsets
};

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(Formula formula, int limit, int actual);

  [[nodiscard]] Formula formula() const noexcept { return formula_; }
  [[nodiscard]] int limit() const noexcept { return limit_; }
  [[nodiscard]] int actual() const noexcept { return actual_; }

 private:
  Formula formula_;
  int limit_;
  int actual_;
};

struct InvariantValue {
  DyadicRational value;
  Formula formula = Formula::definition;
  std::uint64_t terms_scanned = 0;       // subsets visited
  std::uint64_t terms_contributing = 0;  // subsets with a nonzero term
};

/// φ(G) = 2^(-3n) Σ_{E' ⊆ E} (-2)^|E'| χ₃(G|_{E'}).
InvariantValue phi_definition(const Graph& g, const Budgets& budgets = {});

/// φ(G) = 2^(-3n) Σ_{U : G|_U Eulerian} (-1)^|E(U, V\U)| 2^|U|.
///
/// Subsets are visited in reflected Gray-code order. Toggling vertex v
/// flips the degree parity of each neighbour and moves the cut by
/// ±(deg v - 2 deg_U v), so each step costs O(1) word operations.
InvariantValue phi_eulerian(const Graph& g, const Budgets& budgets = {});

/// ψ(G) = 2^(-2n) Σ_{U ⊆ V} (-1/2)^(n-|U|) 2^corank(A(G|_U)),
/// accumulated as 2^(-3n) Σ_U (-1)^(n-|U|) 2^(|U| + corank).
InvariantValue psi_corank(const Graph& g, const Budgets& budgets = {});

/// Dispatches on `f`.
InvariantValue compute(Formula f, const Graph& g, const Budgets& budgets = {});

/// |{x ∈ F₂^V : supp(x) ⊆ U ⊆ S(x)}| by enumerating the 2^|U| vectors
/// supported inside U. Equals kernel_count(adjacency_matrix(g, u)).
BigInt constrained_vector_count(const Graph& g, const VertexSubset& u);

struct ParityWitness {
  int odd_degree_count = 0;  // |supp(A 1_U)|
  int cut = 0;               // |E(U, V\U)|
  friend bool operator==(const ParityWitness&, const ParityWitness&) = default;
};

/// Both sides of the parity identity; they agree mod 2 for every (G, U).
ParityWitness parity_witness(const Graph& g, const VertexSubset& u);

/// S(U) = {i : deg_U(i) even}.
VertexSubset even_set(const Graph& g, const VertexSubset& u);

}  // namespace graphweight
