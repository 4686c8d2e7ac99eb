#pragma once

#include <optional>
#include <vector>

#include "hypermod/hypergraph.hpp"
#include "hypermod/partitions.hpp"

namespace hypermod {

/// theta_H(F) = |F| / (|V[F]| - 1).
Rational density(const Hypergraph& h, const std::vector<int>& f);

struct StrengthReport {
  Rational value;
  Partition witness_partition;            // smallest growth string attaining the minimum
  std::vector<Partition> all_optima;      // filled only on request
};

/// S_sigma(H) = min over partitions with |P| >= 2 of sigma(delta(P)) / (|P|-1).
/// Weights default to h's own; exhaustive over all partitions.
StrengthReport strength(const Hypergraph& h,
                        const std::optional<std::vector<Rational>>& weights = std::nullopt,
                        bool collect_optima = false, int vertex_cap = kDefaultVertexCap);

struct ArboricityReport {
  Rational value;
  std::vector<int> witness_vertex_set;  // |X| >= 2, smallest set attaining the maximum
};

/// D(H) = max over X with |X| >= 2 of |E[X]| / (|X|-1). Also recomputed as
/// max theta over edge subsets and cross-checked.
ArboricityReport arboricity(const Hypergraph& h, int vertex_cap = kDefaultVertexCap,
                            int edge_cap = kDefaultEdgeCap);

/// |delta(P)| >= k (|P|-1) for every partition with |P| >= 2; early exit.
bool is_k_partition_connected(const Hypergraph& h, long k, int vertex_cap = kDefaultVertexCap);

/// floor(S(H)). When positive, a greedy hypertree certificate is built and
/// checked internally.
long max_disjoint_hypertrees(const Hypergraph& h, int vertex_cap = kDefaultVertexCap);

struct CoverReport {
  long count;                            // ceil(D(H))
  std::vector<std::vector<int>> forests; // disjoint hyperforests covering E
};

/// ceil(D(H)) with a greedy-peeling witness decomposition; throws
/// ConsistencyError if peeling misses the bound.
CoverReport min_hyperforest_cover(const Hypergraph& h, int vertex_cap = kDefaultVertexCap,
                                  int edge_cap = kDefaultEdgeCap);

}  // namespace hypermod
