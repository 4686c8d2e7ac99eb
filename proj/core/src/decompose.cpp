#include "hypermod/decompose.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "hypermod/matroid.hpp"
#include "hypermod/metrics.hpp"
#include "hypermod/modulus.hpp"
#include "hypermod/rational.hpp"

namespace hypermod {

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

/// Partition of h's full vertex set into the components of the spanning
/// subgraph carrying only the given edges.
Partition component_partition(const Hypergraph& h, const std::vector<int>& edges) {
  Dsu dsu(h.vertex_count());
  for (int e : edges) {
    const auto& verts = h.edge(e).vertices;
    for (size_t i = 1; i < verts.size(); ++i) dsu.unite(verts[0], verts[i]);
  }
  std::vector<std::vector<int>> classes(h.vertex_count());
  for (int v = 0; v < h.vertex_count(); ++v) classes[dsu.find(v)].push_back(v);
  classes.erase(std::remove_if(classes.begin(), classes.end(),
                               [](const auto& c) { return c.empty(); }),
                classes.end());
  return make_partition(h, std::move(classes));
}

/// The subhypergraph on one class, carrying the given edges that lie inside.
Hypergraph class_subgraph(const Hypergraph& h, const std::vector<int>& cls,
                          const std::vector<int>& edges) {
  std::vector<bool> in(h.vertex_count(), false);
  for (int v : cls) in[v] = true;
  std::vector<std::string> names;
  for (int v : cls) names.push_back(h.vertex_name(v));
  std::vector<std::pair<std::string, std::vector<std::string>>> es;
  std::map<std::string, Rational> weights;
  for (int e : edges) {
    const auto& verts = h.edge(e).vertices;
    if (!std::all_of(verts.begin(), verts.end(), [&](int v) { return in[v]; })) continue;
    std::vector<std::string> evs;
    for (int v : verts) evs.push_back(h.vertex_name(v));
    es.emplace_back(h.edge(e).id, evs);
    if (h.has_explicit_weights()) weights[h.edge(e).id] = h.weight(e);
  }
  return Hypergraph::make(names, es, weights);
}

ObjectFamily family_of(const Hypergraph& h, FamilyKind kind, int vertex_cap) {
  return kind == FamilyKind::Tree ? hypertree_family(h, vertex_cap)
                                  : multitree_family(h, vertex_cap);
}

std::vector<Rational> weights_of(const Hypergraph& h) {
  std::vector<Rational> w;
  for (int e = 0; e < h.edge_count(); ++e) w.push_back(h.weight(e));
  return w;
}

/// The part must carry a member of the solved family: a hypertree for the
/// tree family, a spanning multi-tree (multiplicity up to |V|) for Omega.
bool has_member(const Hypergraph& h, FamilyKind kind, int vertex_cap) {
  int cap = kind == FamilyKind::Tree ? 1 : h.vertex_count();
  try {
    greedy_min_basis(h, std::vector<Rational>(h.edge_count(), Rational(1)), cap, true,
                     vertex_cap);
    return true;
  } catch (const InfeasibilityError&) {
    return false;
  }
}

}  // namespace

std::vector<EtaLevel> extract_levels(const std::vector<double>& eta, double cluster_tol) {
  if (eta.empty()) throw ArgumentError("extract_levels: empty density");
  if (cluster_tol <= 0) throw ArgumentError("extract_levels: cluster_tol must be positive");
  std::vector<int> order(eta.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return eta[a] > eta[b]; });

  std::vector<EtaLevel> levels;
  for (int e : order) {
    if (!levels.empty() && eta[levels.back().edges.back()] - eta[e] <= cluster_tol) {
      levels.back().edges.push_back(e);
    } else {
      levels.push_back({0.0, {e}});
    }
  }
  for (auto& lv : levels) {
    double sum = 0;
    for (int e : lv.edges) sum += eta[e];
    lv.value = sum / static_cast<double>(lv.edges.size());
    std::sort(lv.edges.begin(), lv.edges.end());
  }
  for (size_t i = 0; i + 1 < levels.size(); ++i) {
    double lo = eta[*std::min_element(levels[i].edges.begin(), levels[i].edges.end(),
                                      [&](int a, int b) { return eta[a] < eta[b]; })];
    double hi = eta[*std::max_element(levels[i + 1].edges.begin(), levels[i + 1].edges.end(),
                                      [&](int a, int b) { return eta[a] < eta[b]; })];
    if (lo - hi < 10 * cluster_tol)
      throw AmbiguityError("extract_levels: clusters too close; tighten the solver tolerance");
  }
  return levels;
}

bool is_homogeneous(const Hypergraph& h, int vertex_cap, int edge_cap) {
  if (!is_connected(h)) throw ArgumentError("is_homogeneous: input is disconnected");
  return strength(h, std::nullopt, false, vertex_cap).value ==
         arboricity(h, vertex_cap, edge_cap).value;
}

SerialSplit serial_split(const Hypergraph& h, FamilyKind kind, const std::vector<double>& eta,
                         double cluster_tol, int vertex_cap) {
  if (static_cast<int>(eta.size()) != h.edge_count())
    throw ArgumentError("serial_split: eta size mismatch");
  std::vector<EtaLevel> levels = extract_levels(eta, cluster_tol);
  if (levels.size() < 2) throw ArgumentError("serial_split: eta is constant");

  SerialSplit out;
  out.e_max = levels.front().edges;
  std::vector<bool> top(h.edge_count(), false);
  for (int e : out.e_max) top[e] = true;
  std::vector<int> rest;
  for (int e = 0; e < h.edge_count(); ++e)
    if (!top[e]) rest.push_back(e);

  out.partition = component_partition(h, rest);
  if (out.partition.cut != out.e_max)
    throw ConvergenceError(
        "serial_split: top level is not the cut of the component partition; tighten tol");
  out.shrunk = contract(h, rest);

  for (const auto& cls : out.partition.classes) {
    if (cls.size() == 1) {
      out.isolated_vertices.push_back(cls.front());
      continue;
    }
    Hypergraph part = class_subgraph(h, cls, rest);
    if (!has_member(part, kind, vertex_cap))
      throw ConvergenceError("serial_split: a part carries no family member; tighten tol");
    out.parts.push_back(std::move(part));
  }
  return out;
}

DecompositionNode hdp(const Hypergraph& h, FamilyKind kind, double tol, double cluster_tol,
                      int vertex_cap) {
  DecompositionNode node;
  node.hypergraph = h;
  node.provenance = "root";
  if (h.vertex_count() == 1) {
    node.kind = DecompositionNode::Kind::Isolated;
    return node;
  }

  Rational s = strength(h, std::nullopt, false, vertex_cap).value;
  Rational d = arboricity(h, vertex_cap).value;
  node.strength_value = s;
  node.arboricity_value = d;

  ObjectFamily fam = family_of(h, kind, vertex_cap);
  ModulusResult res = mod2_mnp(fam, weights_of(h), tol);
  node.dual_objective = res.dual_objective;
  std::vector<EtaLevel> levels = extract_levels(res.eta_star, cluster_tol);

  if (levels.size() == 1) {
    node.kind = DecompositionNode::Kind::Homogeneous;
    if (s != d)
      throw ConvergenceError("hdp: constant density on a non-homogeneous hypergraph; tighten tol");
    if (std::abs(levels.front().value - 1.0 / to_double(s)) > 1e-6)
      throw ConvergenceError("hdp: homogeneous level disagrees with 1/S; tighten tol");
    return node;
  }

  node.kind = DecompositionNode::Kind::Split;
  if (std::abs(levels.front().value - 1.0 / to_double(s)) > 1e-6)
    throw ConvergenceError("hdp: eta_max disagrees with 1/S; tighten tol");
  SerialSplit split = serial_split(h, kind, res.eta_star, cluster_tol, vertex_cap);
  if (strength(split.shrunk, std::nullopt, false, vertex_cap).value != s)
    throw ConvergenceError("hdp: shrunk hypergraph changed the strength; tighten tol");

  DecompositionNode shrunk_child = hdp(split.shrunk, kind, tol, cluster_tol, vertex_cap);
  shrunk_child.provenance = "shrunk";
  shrunk_child.eta_level = levels.front().value;
  node.children.push_back(std::move(shrunk_child));
  for (const auto& part : split.parts) {
    DecompositionNode child = hdp(part, kind, tol, cluster_tol, vertex_cap);
    child.provenance = "component";
    child.eta_level = levels.front().value;
    node.children.push_back(std::move(child));
  }
  for (int v : split.isolated_vertices) {
    DecompositionNode child;
    child.hypergraph = Hypergraph::make({h.vertex_name(v)}, {});
    child.kind = DecompositionNode::Kind::Isolated;
    child.provenance = "isolated";
    child.eta_level = levels.front().value;
    node.children.push_back(std::move(child));
  }

  double child_sum = 0;
  for (const auto& c : node.children) child_sum += c.dual_objective;
  if (std::abs(child_sum - node.dual_objective) > 1e-6)
    throw ConvergenceError("hdp: dual objective is not additive across children; tighten tol");
  return node;
}

std::vector<Hypergraph> hsp(const Hypergraph& h, FamilyKind kind, double tol, double cluster_tol,
                            int vertex_cap) {
  std::vector<Hypergraph> seq;
  Hypergraph cur = h;
  for (int round = 0; round <= h.edge_count(); ++round) {
    if (cur.vertex_count() == 1 || is_homogeneous(cur, vertex_cap)) return seq;

    ObjectFamily fam = family_of(cur, kind, vertex_cap);
    ModulusResult res = mod2_mnp(fam, weights_of(cur), tol);
    std::vector<EtaLevel> levels = extract_levels(res.eta_star, cluster_tol);
    const std::vector<int>& e_min = levels.back().edges;

    Partition p = component_partition(cur, e_min);
    double cores_dual = 0;
    for (const auto& cls : p.classes) {
      if (cls.size() == 1) continue;
      Hypergraph core = class_subgraph(cur, cls, e_min);
      if (!is_homogeneous(core, vertex_cap))
        throw ConvergenceError("hsp: a bottom-level core is not homogeneous; tighten tol");
      cores_dual += mod2_mnp(family_of(core, kind, vertex_cap), weights_of(core), tol)
                        .dual_objective;
    }

    Hypergraph shrunk = contract(cur, e_min);
    double shrunk_dual =
        shrunk.vertex_count() == 1
            ? 0.0
            : mod2_mnp(family_of(shrunk, kind, vertex_cap), weights_of(shrunk), tol)
                  .dual_objective;
    if (std::abs(res.dual_objective - cores_dual - shrunk_dual) > 1e-6)
      throw ConvergenceError("hsp: shrinking identity violated; tighten tol");

    cur = shrunk;
    seq.push_back(std::move(shrunk));
  }
  throw ConsistencyError("hsp: shrinking did not terminate");
}

Main2Report theorem_main2_check(const Hypergraph& h, double tol, double cluster_tol,
                                int vertex_cap) {
  Main2Report rep;
  rep.strength_value = strength(h, std::nullopt, false, vertex_cap).value;
  rep.arboricity_value = arboricity(h, vertex_cap).value;

  ObjectFamily fam = multitree_family(h, vertex_cap);
  ModulusResult res = mod2_mnp(fam, weights_of(h), tol);
  std::vector<EtaLevel> levels = extract_levels(res.eta_star, cluster_tol);
  rep.eta_max = levels.front().value;
  rep.eta_min = levels.back().value;

  auto note = [&](std::string s) {
    rep.ok = false;
    rep.findings.push_back(std::move(s));
  };
  if (std::abs(rep.eta_max - 1.0 / to_double(rep.strength_value)) > 1e-6)
    note("eta_max does not match 1/S");
  if (std::abs(rep.eta_min - 1.0 / to_double(rep.arboricity_value)) > 1e-6)
    note("eta_min does not match 1/D");

  // E_max optimality: the component partition of H[E - E_max] attains S.
  std::vector<bool> top(h.edge_count(), false);
  for (int e : levels.front().edges) top[e] = true;
  std::vector<int> rest;
  for (int e = 0; e < h.edge_count(); ++e)
    if (!top[e]) rest.push_back(e);
  Partition p = component_partition(h, rest);
  if (p.size() < 2) {
    note("E_max removal does not disconnect the component partition");
  } else {
    Rational val(static_cast<long>(p.cut.size()), p.size() - 1);
    if (val != rep.strength_value) note("E_max partition does not attain the strength");
  }

  // E_min optimality: some bottom-level core attains D.
  Partition q = component_partition(h, levels.back().edges);
  Rational best(0);
  for (const auto& cls : q.classes) {
    if (cls.size() == 1) continue;
    long inside = 0;
    std::vector<bool> in(h.vertex_count(), false);
    for (int v : cls) in[v] = true;
    for (int e : levels.back().edges) {
      const auto& verts = h.edge(e).vertices;
      if (std::all_of(verts.begin(), verts.end(), [&](int v) { return in[v]; })) ++inside;
    }
    best = std::max(best, Rational(inside, static_cast<long>(cls.size()) - 1));
  }
  if (best != rep.arboricity_value) note("no E_min core attains the fractional arboricity");
  return rep;
}

namespace {

void dot_rec(const DecompositionNode& node, int& counter, std::ostringstream& out) {
  int id = counter++;
  std::ostringstream label;
  label << "|V|=" << node.hypergraph.vertex_count()
        << " |E|=" << node.hypergraph.edge_count();
  if (node.strength_value) label << "\\nS=" << rational_to_string(*node.strength_value);
  if (node.arboricity_value) label << " D=" << rational_to_string(*node.arboricity_value);
  if (node.eta_level) label << "\\neta=" << *node.eta_level;
  const char* shape = node.kind == DecompositionNode::Kind::Split ? "box" : "ellipse";
  out << "  n" << id << " [shape=" << shape << ", label=\"" << label.str() << "\"];\n";
  for (const auto& c : node.children) {
    int cid = counter;
    dot_rec(c, counter, out);
    out << "  n" << id << " -> n" << cid << " [label=\"" << c.provenance << "\"];\n";
  }
}

nlohmann::json json_rec(const DecompositionNode& node) {
  nlohmann::json j;
  j["vertices"] = node.hypergraph.vertex_names();
  j["edges"] = node.hypergraph.edge_ids();
  switch (node.kind) {
    case DecompositionNode::Kind::Homogeneous: j["kind"] = "homogeneous"; break;
    case DecompositionNode::Kind::Split: j["kind"] = "split"; break;
    case DecompositionNode::Kind::Isolated: j["kind"] = "isolated"; break;
  }
  j["provenance"] = node.provenance;
  if (node.eta_level) j["eta_level"] = *node.eta_level;
  if (node.strength_value) j["strength"] = rational_to_string(*node.strength_value);
  if (node.arboricity_value) j["arboricity"] = rational_to_string(*node.arboricity_value);
  j["children"] = nlohmann::json::array();
  for (const auto& c : node.children) j["children"].push_back(json_rec(c));
  return j;
}

}  // namespace

std::string decomposition_to_dot(const DecompositionNode& root) {
  std::ostringstream out;
  out << "digraph decomposition {\n";
  int counter = 0;
  dot_rec(root, counter, out);
  out << "}\n";
  return out.str();
}

std::string decomposition_to_json(const DecompositionNode& root) {
  return json_rec(root).dump(2);
}

}  // namespace hypermod
