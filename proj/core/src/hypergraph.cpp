#include "hypermod/hypergraph.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace hypermod {

bool Edge::contains(int v) const {
  return std::binary_search(vertices.begin(), vertices.end(), v);
}

void Hypergraph::index() {
  vertex_index_.clear();
  for (int i = 0; i < vertex_count(); ++i) vertex_index_[vertex_names_[i]] = i;
  edge_index_.clear();
  for (int i = 0; i < edge_count(); ++i) edge_index_[edges_[i].id] = i;
}

void Hypergraph::validate() const {
  if (vertex_index_.size() != vertex_names_.size())
    throw ValidationError("duplicate vertex name");
  if (edge_index_.size() != edges_.size())
    throw ValidationError("duplicate edge id");
  for (const auto& e : edges_) {
    if (e.vertices.size() < 2)
      throw ValidationError("edge '" + e.id + "' is a loop (needs >= 2 vertices)");
    for (int v : e.vertices)
      if (v < 0 || v >= vertex_count())
        throw ValidationError("edge '" + e.id + "' names an unknown vertex");
  }
  for (int i = 0; i < edge_count(); ++i)
    if (weights_[i] <= 0)
      throw ValidationError("edge '" + edges_[i].id + "' has nonpositive weight");
}

Hypergraph Hypergraph::make(std::vector<std::string> vertices,
                            const std::vector<std::pair<std::string, std::vector<std::string>>>& edges,
                            const std::map<std::string, Rational>& weights) {
  Hypergraph h;
  h.vertex_names_ = std::move(vertices);
  for (int i = 0; i < h.vertex_count(); ++i) h.vertex_index_[h.vertex_names_[i]] = i;
  for (const auto& [id, names] : edges) {
    Edge e;
    e.id = id;
    for (const auto& name : names) {
      auto it = h.vertex_index_.find(name);
      if (it == h.vertex_index_.end())
        throw ValidationError("edge '" + id + "' names unknown vertex '" + name + "'");
      e.vertices.push_back(it->second);
    }
    std::sort(e.vertices.begin(), e.vertices.end());
    e.vertices.erase(std::unique(e.vertices.begin(), e.vertices.end()), e.vertices.end());
    h.edges_.push_back(std::move(e));
  }
  h.weights_.assign(h.edge_count(), Rational(1));
  for (const auto& [id, w] : weights) {
    h.has_explicit_weights_ = true;
    bool found = false;
    for (int i = 0; i < h.edge_count(); ++i)
      if (h.edges_[i].id == id) { h.weights_[i] = w; found = true; }
    if (!found) throw ValidationError("weight given for unknown edge '" + id + "'");
  }
  h.index();
  h.validate();
  return h;
}

int Hypergraph::vertex_index(const std::string& name) const {
  auto it = vertex_index_.find(name);
  return it == vertex_index_.end() ? -1 : it->second;
}

int Hypergraph::edge_index(const std::string& id) const {
  auto it = edge_index_.find(id);
  return it == edge_index_.end() ? -1 : it->second;
}

std::vector<std::string> Hypergraph::edge_ids() const {
  std::vector<std::string> ids;
  ids.reserve(edges_.size());
  for (const auto& e : edges_) ids.push_back(e.id);
  return ids;
}

bool Hypergraph::operator==(const Hypergraph& other) const {
  if (vertex_names_ != other.vertex_names_) return false;
  if (edge_count() != other.edge_count()) return false;
  for (int i = 0; i < edge_count(); ++i) {
    if (edges_[i].id != other.edges_[i].id) return false;
    if (edges_[i].vertices != other.edges_[i].vertices) return false;
    if (weights_[i] != other.weights_[i]) return false;
  }
  return true;
}

Hypergraph Hypergraph::parse(const std::string& text, Format format) {
  if (format == Format::Json) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
      throw ValidationError(std::string("bad json: ") + ex.what());
    }
    if (!j.contains("vertices") || !j.contains("edges"))
      throw ValidationError("json input needs 'vertices' and 'edges'");
    std::vector<std::string> vertices = j["vertices"].get<std::vector<std::string>>();
    std::vector<std::pair<std::string, std::vector<std::string>>> edges;
    std::map<std::string, Rational> weights;
    for (const auto& je : j["edges"]) {
      std::string id = je.at("id").get<std::string>();
      edges.emplace_back(id, je.at("vertices").get<std::vector<std::string>>());
      if (je.contains("weight"))
        weights[id] = parse_rational(je["weight"].get<std::string>());
    }
    return make(std::move(vertices), edges, weights);
  }

  // Line format: one edge per line, ids auto-assigned e1,e2,... in file order.
  std::vector<std::string> vertices;
  std::set<std::string> seen;
  std::vector<std::pair<std::string, std::vector<std::string>>> edges;
  std::istringstream in(text);
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<std::string> names;
    std::string tok;
    while (ls >> tok) names.push_back(tok);
    if (names.empty()) continue;
    for (const auto& name : names)
      if (seen.insert(name).second) vertices.push_back(name);
    edges.emplace_back("e" + std::to_string(++n), names);
  }
  return make(std::move(vertices), edges);
}

std::string Hypergraph::to_json() const {
  nlohmann::json j;
  j["vertices"] = vertex_names_;
  j["edges"] = nlohmann::json::array();
  for (int i = 0; i < edge_count(); ++i) {
    nlohmann::json je;
    je["id"] = edges_[i].id;
    std::vector<std::string> names;
    for (int v : edges_[i].vertices) names.push_back(vertex_names_[v]);
    je["vertices"] = names;
    if (has_explicit_weights_) je["weight"] = rational_to_string(weights_[i]);
    j["edges"].push_back(je);
  }
  return j.dump(2);
}

// ---------------------------------------------------------------------------

namespace {

// Rebuild a hypergraph from a subset of h's vertices and chosen edges
// (keeping ids and weights). Vertex order follows h.
Hypergraph subgraph(const Hypergraph& h, const std::vector<int>& verts,
                    const std::vector<int>& edge_idx) {
  std::vector<std::string> names;
  for (int v : verts) names.push_back(h.vertex_name(v));
  std::vector<std::pair<std::string, std::vector<std::string>>> edges;
  std::map<std::string, Rational> weights;
  for (int e : edge_idx) {
    std::vector<std::string> evs;
    for (int v : h.edge(e).vertices) evs.push_back(h.vertex_name(v));
    edges.emplace_back(h.edge(e).id, evs);
    if (h.has_explicit_weights()) weights[h.edge(e).id] = h.weight(e);
  }
  return Hypergraph::make(names, edges, weights);
}

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

Hypergraph induced_by_vertices(const Hypergraph& h, const std::vector<int>& x) {
  if (x.empty()) throw ArgumentError("induced_by_vertices: empty vertex subset");
  std::vector<int> verts = x;
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  for (int v : verts)
    if (v < 0 || v >= h.vertex_count())
      throw ArgumentError("induced_by_vertices: vertex index out of range");
  std::vector<int> edge_idx;
  for (int e = 0; e < h.edge_count(); ++e) {
    bool inside = true;
    for (int v : h.edge(e).vertices)
      if (!std::binary_search(verts.begin(), verts.end(), v)) { inside = false; break; }
    if (inside) edge_idx.push_back(e);
  }
  return subgraph(h, verts, edge_idx);
}

Hypergraph induced_by_edges(const Hypergraph& h, const std::vector<long>& multiplicity) {
  if (static_cast<int>(multiplicity.size()) != h.edge_count())
    throw ArgumentError("induced_by_edges: multiset size mismatch");
  long total = 0;
  for (long m : multiplicity) {
    if (m < 0) throw ArgumentError("induced_by_edges: negative multiplicity");
    total += m;
  }
  if (total == 0) throw ArgumentError("induced_by_edges: empty multiset");

  std::set<int> vs;
  for (int e = 0; e < h.edge_count(); ++e)
    if (multiplicity[e] > 0)
      for (int v : h.edge(e).vertices) vs.insert(v);
  std::vector<std::string> names;
  for (int v : vs) names.push_back(h.vertex_name(v));

  std::vector<std::pair<std::string, std::vector<std::string>>> edges;
  std::map<std::string, Rational> weights;
  for (int e = 0; e < h.edge_count(); ++e) {
    for (long k = 0; k < multiplicity[e]; ++k) {
      std::string id = h.edge(e).id;
      if (k > 0) id += "#" + std::to_string(k + 1);
      std::vector<std::string> evs;
      for (int v : h.edge(e).vertices) evs.push_back(h.vertex_name(v));
      edges.emplace_back(id, evs);
      if (h.has_explicit_weights()) weights[id] = h.weight(e);
    }
  }
  return Hypergraph::make(names, edges, weights);
}

Hypergraph induced_by_edge_subset(const Hypergraph& h, const std::vector<int>& f) {
  std::vector<long> mult(h.edge_count(), 0);
  for (int e : f) mult.at(e) = 1;
  return induced_by_edges(h, mult);
}

Hypergraph contract(const Hypergraph& h, const std::vector<int>& f) {
  if (f.empty()) return h;
  std::vector<bool> contracted(h.edge_count(), false);
  for (int e : f) {
    if (e < 0 || e >= h.edge_count()) throw ArgumentError("contract: edge index out of range");
    contracted[e] = true;
  }
  Dsu dsu(h.vertex_count());
  for (int e = 0; e < h.edge_count(); ++e)
    if (contracted[e])
      for (int v : h.edge(e).vertices) dsu.unite(h.edge(e).vertices[0], v);

  // Representative of each merge class: smallest vertex index.
  std::vector<int> rep(h.vertex_count(), -1);
  for (int v = 0; v < h.vertex_count(); ++v) {
    int r = dsu.find(v);
    if (rep[r] < 0) rep[r] = v;
  }
  std::vector<int> new_of(h.vertex_count(), -1);
  std::vector<std::string> names;
  for (int v = 0; v < h.vertex_count(); ++v) {
    int r = rep[dsu.find(v)];
    if (r == v) {
      new_of[v] = static_cast<int>(names.size());
      names.push_back(h.vertex_name(v));
    }
  }
  std::vector<std::pair<std::string, std::vector<std::string>>> edges;
  std::map<std::string, Rational> weights;
  for (int e = 0; e < h.edge_count(); ++e) {
    if (contracted[e]) continue;
    std::set<int> mapped;
    for (int v : h.edge(e).vertices) mapped.insert(rep[dsu.find(v)]);
    if (mapped.size() < 2) continue;  // became a loop
    std::vector<std::string> evs;
    for (int v : mapped) evs.push_back(h.vertex_name(v));
    edges.emplace_back(h.edge(e).id, evs);
    if (h.has_explicit_weights()) weights[h.edge(e).id] = h.weight(e);
  }
  return Hypergraph::make(names, edges, weights);
}

Hypergraph shrink_classes(const Hypergraph& h, const std::vector<std::vector<int>>& classes) {
  std::vector<int> cls(h.vertex_count(), -1);
  for (int c = 0; c < static_cast<int>(classes.size()); ++c) {
    if (classes[c].empty()) throw ArgumentError("shrink_classes: empty class");
    for (int v : classes[c]) {
      if (v < 0 || v >= h.vertex_count() || cls[v] != -1)
        throw ArgumentError("shrink_classes: classes do not partition the vertex set");
      cls[v] = c;
    }
  }
  for (int v = 0; v < h.vertex_count(); ++v)
    if (cls[v] == -1) throw ArgumentError("shrink_classes: classes do not cover the vertex set");

  std::vector<int> rep(classes.size());
  for (size_t c = 0; c < classes.size(); ++c)
    rep[c] = *std::min_element(classes[c].begin(), classes[c].end());

  // Class vertices ordered by representative index.
  std::vector<int> order(classes.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return rep[a] < rep[b]; });

  std::vector<std::string> names;
  for (int c : order) names.push_back(h.vertex_name(rep[c]));

  std::vector<std::pair<std::string, std::vector<std::string>>> edges;
  std::map<std::string, Rational> weights;
  for (int e = 0; e < h.edge_count(); ++e) {
    std::set<int> mapped;
    for (int v : h.edge(e).vertices) mapped.insert(rep[cls[v]]);
    if (mapped.size() < 2) continue;
    std::vector<std::string> evs;
    for (int v : mapped) evs.push_back(h.vertex_name(v));
    edges.emplace_back(h.edge(e).id, evs);
    if (h.has_explicit_weights()) weights[h.edge(e).id] = h.weight(e);
  }
  return Hypergraph::make(names, edges, weights);
}

Hypergraph delete_vertex(const Hypergraph& h, int v) {
  if (v < 0 || v >= h.vertex_count()) throw ArgumentError("delete_vertex: index out of range");
  if (h.vertex_count() < 2) throw ArgumentError("delete_vertex: cannot delete the only vertex");
  std::vector<std::string> names;
  for (int u = 0; u < h.vertex_count(); ++u)
    if (u != v) names.push_back(h.vertex_name(u));
  std::vector<std::pair<std::string, std::vector<std::string>>> edges;
  std::map<std::string, Rational> weights;
  for (int e = 0; e < h.edge_count(); ++e) {
    std::vector<std::string> evs;
    for (int u : h.edge(e).vertices)
      if (u != v) evs.push_back(h.vertex_name(u));
    if (evs.size() < 2) continue;
    edges.emplace_back(h.edge(e).id, evs);
    if (h.has_explicit_weights()) weights[h.edge(e).id] = h.weight(e);
  }
  return Hypergraph::make(names, edges, weights);
}

std::vector<std::vector<int>> component_vertex_sets(const Hypergraph& h) {
  Dsu dsu(h.vertex_count());
  for (const auto& e : h.edges())
    for (int v : e.vertices) dsu.unite(e.vertices[0], v);
  std::map<int, std::vector<int>> by_root;
  for (int v = 0; v < h.vertex_count(); ++v) by_root[dsu.find(v)].push_back(v);
  std::vector<std::vector<int>> out;
  for (auto& [root, verts] : by_root) out.push_back(std::move(verts));
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

bool is_connected(const Hypergraph& h) {
  if (h.vertex_count() == 0) return false;
  return component_vertex_sets(h).size() == 1;
}

bool is_vertex_biconnected(const Hypergraph& h) {
  if (!is_connected(h)) throw ArgumentError("is_vertex_biconnected: input is disconnected");
  if (h.vertex_count() <= 2) return true;
  for (int v = 0; v < h.vertex_count(); ++v)
    if (!is_connected(delete_vertex(h, v))) return false;
  return true;
}

Hypergraph parallelize(const Hypergraph& h, int t, std::vector<int>* group_of) {
  if (t < 1) throw ArgumentError("parallelize: t must be >= 1");
  std::vector<std::pair<std::string, std::vector<std::string>>> edges;
  std::map<std::string, Rational> weights;
  if (group_of) group_of->clear();
  for (int e = 0; e < h.edge_count(); ++e) {
    std::vector<std::string> evs;
    for (int v : h.edge(e).vertices) evs.push_back(h.vertex_name(v));
    for (int k = 1; k <= t; ++k) {
      std::string id = h.edge(e).id + "^" + std::to_string(k);
      edges.emplace_back(id, evs);
      if (h.has_explicit_weights()) weights[id] = h.weight(e);
      if (group_of) group_of->push_back(e);
    }
  }
  return Hypergraph::make(h.vertex_names(), edges, weights);
}

std::vector<Hypergraph> components(const Hypergraph& h) {
  std::vector<Hypergraph> out;
  for (const auto& verts : component_vertex_sets(h))
    out.push_back(induced_by_vertices(h, verts));
  return out;
}

}  // namespace hypermod
