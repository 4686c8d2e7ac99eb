#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypermod/hypergraph.hpp"
#include "hypermod/partitions.hpp"

namespace hypermod {

enum class FamilyKind { Tree, Multitree };

/// One level set of a (descending-sorted, clustered) optimal density.
struct EtaLevel {
  double value;            // cluster mean
  std::vector<int> edges;  // indices into the solved ground set
};

/// Clusters eta values whose gap is at most cluster_tol and returns the
/// levels in descending order. Throws AmbiguityError when two distinct
/// clusters sit closer than 10 * cluster_tol (tighten the solver tolerance).
std::vector<EtaLevel> extract_levels(const std::vector<double>& eta,
                                     double cluster_tol = 1e-5);

/// Exact S(H) == D(H).
bool is_homogeneous(const Hypergraph& h, int vertex_cap = kDefaultVertexCap,
                    int edge_cap = kDefaultEdgeCap);

struct SerialSplit {
  std::vector<int> e_max;             // top-level edges
  Partition partition;                // components of H[E - E_max]
  Hypergraph shrunk;                  // H/(E - E_max)
  std::vector<Hypergraph> parts;      // components carrying >= 1 edge
  std::vector<int> isolated_vertices; // single-vertex components
};

/// Removes the top eta level and splits: parts are the components of
/// H[E - E_max], shrunk is H/(E - E_max). Verifies that E_max is exactly the
/// cut of the component partition and that every part admits a hypertree;
/// a failed check throws ConvergenceError (solver accuracy).
SerialSplit serial_split(const Hypergraph& h, FamilyKind kind, const std::vector<double>& eta,
                         double cluster_tol = 1e-5, int vertex_cap = kDefaultVertexCap);

struct DecompositionNode {
  Hypergraph hypergraph;
  enum class Kind { Homogeneous, Split, Isolated } kind = Kind::Homogeneous;
  std::string provenance;                  // "root" | "shrunk" | "component" | "isolated"
  std::optional<double> eta_level;         // level whose removal created this node
  std::optional<Rational> strength_value;  // absent for isolated vertices
  std::optional<Rational> arboricity_value;
  double dual_objective = 0;               // min over conv(family) of sum eta^2
  std::vector<DecompositionNode> children;
};

/// Hypergraph decomposition process: solve the 2-modulus, stop at a
/// homogeneous leaf, otherwise serial-split and recurse on the shrunk
/// hypergraph and on every part. Verifies eta_max = 1/S(H) = 1/S(shrunk),
/// dual additivity across children, and exact S = D at every leaf.
DecompositionNode hdp(const Hypergraph& h, FamilyKind kind, double tol = 1e-9,
                      double cluster_tol = 1e-5, int vertex_cap = kDefaultVertexCap);

/// Hypergraph shrinking process: repeatedly shrink the homogeneous cores
/// (components of H[E_min]) until the result is homogeneous. Returns the
/// sequence of shrunk hypergraphs (empty when h is already homogeneous).
std::vector<Hypergraph> hsp(const Hypergraph& h, FamilyKind kind, double tol = 1e-9,
                            double cluster_tol = 1e-5, int vertex_cap = kDefaultVertexCap);

struct Main2Report {
  bool ok = true;
  std::vector<std::string> findings;
  Rational strength_value;
  Rational arboricity_value;
  double eta_max = 0;
  double eta_min = 0;
};

/// Solves the multi-tree 2-modulus and checks 1/eta_max = S(H),
/// 1/eta_min = D(H), and the optimality of E_max (strength witness) and
/// E_min (arboricity witness).
Main2Report theorem_main2_check(const Hypergraph& h, double tol = 1e-9,
                                double cluster_tol = 1e-5,
                                int vertex_cap = kDefaultVertexCap);

std::string decomposition_to_dot(const DecompositionNode& root);
std::string decomposition_to_json(const DecompositionNode& root);

}  // namespace hypermod
