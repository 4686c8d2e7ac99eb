#pragma once

#include <functional>
#include <vector>

#include "hypermod/hypergraph.hpp"

namespace hypermod {

/// A set partition of the vertex set with its cached cut set delta(P).
struct Partition {
  std::vector<std::vector<int>> classes;  // disjoint, covering; each sorted,
                                          // ordered by smallest element
  std::vector<int> cut;                   // edges meeting >= 2 classes, ascending

  int size() const { return static_cast<int>(classes.size()); }
};

Partition make_partition(const Hypergraph& h, std::vector<std::vector<int>> classes);

/// Partition from a restricted-growth string (assign[v] = class label).
Partition partition_from_rgs(const Hypergraph& h, const std::vector<int>& assign);

/// Streams every set partition of h's vertices with |P| >= min_classes, in
/// restricted-growth-string order. The callback returns false to stop early.
/// Throws CapacityError when |V| exceeds the cap.
void for_each_partition(const Hypergraph& h, int min_classes,
                        const std::function<bool(const Partition&)>& fn,
                        int vertex_cap = kDefaultVertexCap);

/// Raw variant handing out the growth string and class count only; assign has
/// one label per vertex index. Much cheaper for exhaustive scans.
void for_each_partition_rgs(int n, int min_classes,
                            const std::function<bool(const std::vector<int>& assign, int k)>& fn,
                            int vertex_cap = kDefaultVertexCap);

/// delta_F(P): edges of f meeting at least two classes.
std::vector<int> cut_of(const Hypergraph& h, const Partition& p, const std::vector<int>& f);

/// Every class induces a connected subhypergraph (singletons are feasible).
bool is_feasible(const Hypergraph& h, const Partition& p);

/// Usage vector (1/(|P|-1)) * indicator(delta(P)) of a partition with |P|>=2.
struct PartitionUsage {
  Partition partition;
  std::vector<Rational> usage;  // indexed like h's edges
};

PartitionUsage usage_of(const Hypergraph& h, const Partition& p);

/// Streams PartitionUsage for every feasible partition with |P| >= 2.
void for_each_feasible(const Hypergraph& h,
                       const std::function<bool(const PartitionUsage&)>& fn,
                       int vertex_cap = kDefaultVertexCap);

/// Shrunk hypergraph H_P of a feasible partition; throws ArgumentError naming
/// a disconnected class otherwise.
Hypergraph shrink_partition(const Hypergraph& h, const Partition& p);

}  // namespace hypermod
