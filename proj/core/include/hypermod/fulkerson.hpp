#pragma once

#include <string>
#include <vector>

#include "hypermod/hypergraph.hpp"
#include "hypermod/partitions.hpp"

namespace hypermod {

struct BlockerElement {
  PartitionUsage usage;
  Hypergraph shrunk;  // H_P
  bool biconnected;
};

/// The blocker family of Omega(H): feasible partitions with |P| >= 2 whose
/// shrunk hypergraph is vertex-biconnected, in enumeration order. With
/// include_non_biconnected, every feasible partition is returned with its
/// flag.
std::vector<BlockerElement> blocker_omega(const Hypergraph& h,
                                          bool include_non_biconnected = false,
                                          int vertex_cap = kDefaultVertexCap);

/// x >= 0 and x(delta(P)) >= |P|-1 for every partition with |P| >= 2, exact.
bool in_partition_polyhedron(const Hypergraph& h, const std::vector<Rational>& x,
                             int vertex_cap = kDefaultVertexCap);

/// w is an extreme point of { rho >= 0 : member . rho >= 1 for all members of
/// Omega(H) }: membership (ArgumentError otherwise) plus full rank of the
/// tight member rows together with the zero-coordinate rows.
bool verify_extreme(const Hypergraph& h, const std::vector<Rational>& w,
                    int vertex_cap = kDefaultVertexCap, int edge_cap = kDefaultEdgeCap);

struct BlockerReport {
  bool ok = true;
  std::vector<std::string> findings;                    // empty when ok
  std::vector<std::vector<Rational>> polyhedron_extremes;
};

/// Cross-validation: (a) every blocker vector is extreme in Adm(Omega);
/// (b) every vertex of the partition polyhedron is integral and a multi-tree;
/// (c) the blocker inequalities carve out exactly the partition polyhedron
/// (same vertex set) and every multi-tree satisfies them.
BlockerReport blocker_matches_extremes(const Hypergraph& h, int vertex_cap = kDefaultVertexCap,
                                       int edge_cap = 8);

struct SplitWitness {
  Partition p1, p2;
  Rational lambda;  // usage(P) = lambda usage(P1) + (1-lambda) usage(P2)
};

/// For a feasible partition whose shrunk hypergraph has a cut vertex, the
/// convex split through that cut vertex. ArgumentError when the shrunk
/// hypergraph is biconnected (no split exists).
SplitWitness biconnectivity_split(const Hypergraph& h, const Partition& p);

/// JSON array of { "partition": [[vertex...]...], "vector": {edge: "p/q"} }.
std::string blocker_to_json(const Hypergraph& h, const std::vector<BlockerElement>& elements);

}  // namespace hypermod
