#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hypermod/errors.hpp"
#include "hypermod/rational.hpp"

namespace hypermod {

inline constexpr int kDefaultVertexCap = 12;
inline constexpr int kDefaultEdgeCap = 20;

/// A hyperedge: stable string id plus a sorted set of vertex indices (>= 2).
struct Edge {
  std::string id;
  std::vector<int> vertices;  // sorted, distinct indices into the vertex table

  bool contains(int v) const;
};

/// Immutable loopless hypergraph. Parallel edges are allowed and keep
/// distinct ids. Optional strictly positive rational weights, default 1.
class Hypergraph {
 public:
  Hypergraph() = default;

  // vertices: ordered names; edges: (id, vertex names); weights by edge id.
  static Hypergraph make(std::vector<std::string> vertices,
                         const std::vector<std::pair<std::string, std::vector<std::string>>>& edges,
                         const std::map<std::string, Rational>& weights = {});

  enum class Format { Json, Lines };
  static Hypergraph parse(const std::string& text, Format format);
  std::string to_json() const;

  int vertex_count() const { return static_cast<int>(vertex_names_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::string& vertex_name(int v) const { return vertex_names_[v]; }
  const std::vector<std::string>& vertex_names() const { return vertex_names_; }
  int vertex_index(const std::string& name) const;  // -1 if absent
  const Edge& edge(int e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }
  int edge_index(const std::string& id) const;  // -1 if absent
  const Rational& weight(int e) const { return weights_[e]; }
  bool has_explicit_weights() const { return has_explicit_weights_; }
  std::vector<std::string> edge_ids() const;

  bool operator==(const Hypergraph& other) const;

 private:
  std::vector<std::string> vertex_names_;
  std::map<std::string, int> vertex_index_;
  std::vector<Edge> edges_;
  std::map<std::string, int> edge_index_;
  std::vector<Rational> weights_;
  bool has_explicit_weights_ = false;

  void index();
  void validate() const;
};

// ---- structural operations (all pure) -------------------------------------

/// (X, E[X]): edges entirely contained in the nonempty vertex subset X.
Hypergraph induced_by_vertices(const Hypergraph& h, const std::vector<int>& x);

/// H[A] for an integer multiset over the edges: vertex set = union of chosen
/// edges, each edge replicated to its multiplicity (copies get '#k' suffixes).
Hypergraph induced_by_edges(const Hypergraph& h, const std::vector<long>& multiplicity);

/// H[F] for a 0/1 edge subset given by indices.
Hypergraph induced_by_edge_subset(const Hypergraph& h, const std::vector<int>& f);

/// H/F: vertices merge along connected components of the contracted edge set,
/// surviving edges are rewritten, resulting loops are discarded. The merged
/// vertex takes the name of its smallest member. Order-independent.
Hypergraph contract(const Hypergraph& h, const std::vector<int>& f);

/// Merge every class of a vertex partition to a single vertex and keep the
/// cross edges. Classes need not contain internal edges.
Hypergraph shrink_classes(const Hypergraph& h, const std::vector<std::vector<int>>& classes);

/// H minus v: edges shrink by v, empty edges and loops are discarded.
Hypergraph delete_vertex(const Hypergraph& h, int v);

bool is_connected(const Hypergraph& h);

/// No single vertex deletion disconnects h; |V| <= 2 counts as biconnected.
bool is_vertex_biconnected(const Hypergraph& h);

/// H^t: each edge replaced by t parallel copies (ids 'id^1'..'id^t').
/// If group_of is given it receives, per new edge, the original edge index.
Hypergraph parallelize(const Hypergraph& h, int t, std::vector<int>* group_of = nullptr);

/// Connected components, isolated vertices included, ordered by smallest
/// vertex index in h.
std::vector<Hypergraph> components(const Hypergraph& h);

/// Vertex sets of the connected components, as indices into h.
std::vector<std::vector<int>> component_vertex_sets(const Hypergraph& h);

}  // namespace hypermod
