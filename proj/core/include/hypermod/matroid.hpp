#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hypermod/hypergraph.hpp"

namespace hypermod {

/// Two vertices chosen from each edge of a hyperforest so that the chosen
/// pairs form a forest (the Lovasz certificate).
struct ForestRepresentation {
  // edge index -> (u, v), both contained in that edge.
  std::vector<std::pair<int, std::pair<int, int>>> pairs;
};

/// |F[X]| <= |X|-1 for every nonempty X subset of V[A], multiplicities
/// counted. Exhaustive over subsets of V[A], early exit.
bool is_hyperforest(const Hypergraph& h, const std::vector<long>& multiplicity,
                    int vertex_cap = kDefaultVertexCap);

/// Rank of an edge subset in M(H) by the partition formula:
/// min over partitions P of |V| - |P| + |delta_F(P)|.
long rank(const Hypergraph& h, const std::vector<int>& f, int vertex_cap = kDefaultVertexCap);

/// Rank by greedily growing a maximal hyperforest inside f. Independent route
/// used by the strength/arboricity scans and cross-checked against rank().
long rank_greedy(const Hypergraph& h, const std::vector<int>& f,
                 int vertex_cap = kDefaultVertexCap);

bool is_independent(const Hypergraph& h, const std::vector<int>& f,
                    int vertex_cap = kDefaultVertexCap);

/// Multiset is a hypertree: size |V|-1, spans V, and is a hyperforest.
bool is_hypertree(const Hypergraph& h, const std::vector<long>& multiplicity,
                  int vertex_cap = kDefaultVertexCap);

/// Minimum-cost maximal hyperforest in M(H^cap): edges in ascending
/// (cost, index) order, each added while independent and below cap.
/// With require_spanning, throws InfeasibilityError unless the result has
/// size |V|-1.
std::vector<long> greedy_min_basis(const Hypergraph& h, const std::vector<Rational>& cost,
                                   int multiplicity_cap, bool require_spanning = true,
                                   int vertex_cap = kDefaultVertexCap);

/// rank(f + e) == rank(f).
bool closure_contains(const Hypergraph& h, const std::vector<int>& f, int e,
                      int vertex_cap = kDefaultVertexCap);

/// Certificate search by backtracking over pair choices; absent when f is
/// dependent. Throws CapacityError past the node budget.
std::optional<ForestRepresentation> forest_representation(const Hypergraph& h,
                                                          const std::vector<int>& f,
                                                          long budget = 10'000'000);

struct RatioWitness {
  Rational value;
  std::vector<int> witness;  // edge indices
};

/// s_sigma(M) = min sigma(X) / (r(E) - r(E\X)) over X with a rank drop.
/// Witness is the maximal optimizer (larger sets first, then lexicographic).
RatioWitness matroid_strength(const Hypergraph& h,
                              const std::vector<Rational>& weights,
                              int edge_cap = kDefaultEdgeCap);

/// D(M) = max |X| / r(X) over X with positive rank.
RatioWitness matroid_arboricity(const Hypergraph& h, int edge_cap = kDefaultEdgeCap);

}  // namespace hypermod
