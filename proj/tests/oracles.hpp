#pragma once

// Brute-force reference evaluators. They share no code path with the
// library beyond the Graph container itself and are only for tests.

#include <cstdint>
#include <vector>

#include "graphweight/bigint.hpp"
#include "graphweight/dyadic.hpp"
#include "graphweight/graph.hpp"

namespace graphweight::oracle {

/// χ₃ by trying all 3^n colour assignments. n <= 12.
std::uint64_t chi3_brute_force(const Graph& g);

/// Number of y with M y = 0 by trying all 2^dim vectors. dim <= 16.
std::uint64_t kernel_brute_force(const std::vector<std::vector<int>>& m);

/// Rank over GF(2) by textbook elimination on a 0/1 int matrix.
int rank_reference(std::vector<std::vector<int>> m);

/// φ literally from the definition: Σ over edge subsets of (-2)^|E'| times
/// a brute-force χ₃ of the spanning subgraph. Tiny graphs only.
DyadicRational phi_by_definition_brute(const Graph& g);

/// ψ literally: induced 0/1 matrices, reference rank, rational weights.
DyadicRational psi_by_definition_brute(const Graph& g);

/// φ via the colouring expansion: swapping the two sums in the definition
/// gives Σ_{E'} (-2)^|E'| χ₃(G|_{E'}) = Σ_{c : V -> 3} (-1)^(#edges coloured
/// differently), since each edge independently contributes 1 (if its ends
/// share a colour it cannot be in E') or 1 - 2 = -1.
DyadicRational phi_by_colouring_sum(const Graph& g);

/// The support form of ψ: 2^(-3n) Σ_{U ⊆ S(U)} (-1)^|supp(A 1_U)| 2^|U|,
/// with A 1_U computed by counting neighbours directly.
DyadicRational psi_support_form(const Graph& g);

/// Edge list of g as 0/1 adjacency matrix.
std::vector<std::vector<int>> dense_adjacency(const Graph& g);

}  // namespace graphweight::oracle
