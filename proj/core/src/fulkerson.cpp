#include "hypermod/fulkerson.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>
#include <string>

#include "hypermod/oracle.hpp"
#include "hypermod/rational.hpp"

namespace hypermod {

namespace {

long rational_rank(std::vector<std::vector<Rational>> m) {
  long rank = 0;
  size_t cols = m.empty() ? 0 : m.front().size();
  size_t row = 0;
  for (size_t col = 0; col < cols && row < m.size(); ++col) {
    size_t piv = row;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[row], m[piv]);
    for (size_t i = row + 1; i < m.size(); ++i) {
      if (m[i][col] == 0) continue;
      Rational f = m[i][col] / m[row][col];
      for (size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
    }
    ++row;
    ++rank;
  }
  return rank;
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational out(0);
  for (size_t i = 0; i < a.size(); ++i) out += a[i] * b[i];
  return out;
}

bool extreme_against(const std::vector<std::vector<Rational>>& members,
                     const std::vector<Rational>& w) {
  int n = static_cast<int>(w.size());
  std::vector<std::vector<Rational>> tight;
  for (const auto& m : members)
    if (dot(m, w) == 1) tight.push_back(m);
  for (int e = 0; e < n; ++e) {
    if (w[e] != 0) continue;
    std::vector<Rational> unit(n, Rational(0));
    unit[e] = 1;
    tight.push_back(std::move(unit));
  }
  return rational_rank(std::move(tight)) == n;
}

}  // namespace

std::vector<BlockerElement> blocker_omega(const Hypergraph& h, bool include_non_biconnected,
                                          int vertex_cap) {
  std::vector<BlockerElement> out;
  for_each_feasible(
      h,
      [&](const PartitionUsage& u) {
        BlockerElement el{u, shrink_partition(h, u.partition), false};
        el.biconnected = is_vertex_biconnected(el.shrunk);
        if (el.biconnected || include_non_biconnected) out.push_back(std::move(el));
        return true;
      },
      vertex_cap);
  return out;
}

bool in_partition_polyhedron(const Hypergraph& h, const std::vector<Rational>& x,
                             int vertex_cap) {
  if (static_cast<int>(x.size()) != h.edge_count())
    throw ArgumentError("in_partition_polyhedron: dimension mismatch");
  for (const auto& v : x)
    if (v < 0) return false;
  bool ok = true;
  for_each_partition_rgs(
      h.vertex_count(), 2,
      [&](const std::vector<int>& assign, int k) {
        Rational cut(0);
        for (int e = 0; e < h.edge_count(); ++e) {
          const auto& verts = h.edge(e).vertices;
          int first = assign[verts.front()];
          for (int v : verts)
            if (assign[v] != first) { cut += x[e]; break; }
        }
        if (cut < k - 1) { ok = false; return false; }
        return true;
      },
      vertex_cap);
  return ok;
}

bool verify_extreme(const Hypergraph& h, const std::vector<Rational>& w, int vertex_cap,
                    int edge_cap) {
  if (static_cast<int>(w.size()) != h.edge_count())
    throw ArgumentError("verify_extreme: dimension mismatch");
  ExplicitFamily fam = enumerate_multitrees(h, -1, vertex_cap, edge_cap);
  if (fam.members.empty()) throw ArgumentError("verify_extreme: the multi-tree family is empty");
  for (const auto& v : w)
    if (v < 0) throw ArgumentError("verify_extreme: w has a negative coordinate");
  for (const auto& m : fam.members)
    if (dot(m, w) < 1) throw ArgumentError("verify_extreme: w is not admissible");
  return extreme_against(fam.members, w);
}

BlockerReport blocker_matches_extremes(const Hypergraph& h, int vertex_cap, int edge_cap) {
  BlockerReport rep;
  auto note = [&](std::string s) {
    rep.ok = false;
    rep.findings.push_back(std::move(s));
  };

  ExplicitFamily omega = enumerate_multitrees(h, -1, vertex_cap, edge_cap);
  if (omega.members.empty()) throw ArgumentError("blocker_matches_extremes: empty family");
  std::vector<BlockerElement> blockers = blocker_omega(h, false, vertex_cap);

  for (size_t i = 0; i < blockers.size(); ++i) {
    const auto& w = blockers[i].usage.usage;
    bool admissible = true;
    for (const auto& m : omega.members)
      if (dot(m, w) < 1) admissible = false;
    if (!admissible) {
      note("blocker vector " + std::to_string(i) + " is not admissible for the family");
      continue;
    }
    if (!extreme_against(omega.members, w))
      note("blocker vector " + std::to_string(i) + " is not extreme in the admissible set");
  }

  rep.polyhedron_extremes = polyhedron_vertices(h, vertex_cap, edge_cap);
  for (const auto& v : rep.polyhedron_extremes) {
    bool integral = std::all_of(v.begin(), v.end(), [](const Rational& x) {
      return boost::multiprecision::denominator(x) == 1;
    });
    if (!integral) note("polyhedron vertex is not integral");
    if (!std::binary_search(omega.members.begin(), omega.members.end(), v))
      note("polyhedron vertex is not a multi-tree");
  }

  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  for (const auto& b : blockers) {
    rows.push_back(b.usage.usage);
    rhs.emplace_back(1);
  }
  auto carved = cone_vertices(rows, rhs, h.edge_count());
  if (carved != rep.polyhedron_extremes)
    note("blocker inequalities carve a polyhedron with a different vertex set");
  return rep;
}

SplitWitness biconnectivity_split(const Hypergraph& h, const Partition& p) {
  Hypergraph shrunk = shrink_partition(h, p);
  if (p.size() < 3 || is_vertex_biconnected(shrunk))
    throw ArgumentError("biconnectivity_split: shrunk hypergraph is vertex-biconnected");

  // Shrunk vertex i represents p.classes[i]; recover classes by name.
  std::map<std::string, int> class_of_name;
  for (int c = 0; c < p.size(); ++c) {
    int repv = *std::min_element(p.classes[c].begin(), p.classes[c].end());
    class_of_name[h.vertex_name(repv)] = c;
  }

  for (int q = 0; q < shrunk.vertex_count(); ++q) {
    Hypergraph del = delete_vertex(shrunk, q);
    if (is_connected(del)) continue;
    int qc = class_of_name.at(shrunk.vertex_name(q));
    auto comps = component_vertex_sets(del);
    std::vector<bool> in_c(p.size(), false);
    for (int v : comps.front()) in_c[class_of_name.at(del.vertex_name(v))] = true;

    std::vector<std::vector<int>> cls1, cls2;
    std::vector<int> merged1, merged2;
    for (int c = 0; c < p.size(); ++c) {
      if (in_c[c]) {
        cls1.push_back(p.classes[c]);
        merged2.insert(merged2.end(), p.classes[c].begin(), p.classes[c].end());
      } else if (c != qc) {
        cls2.push_back(p.classes[c]);
        merged1.insert(merged1.end(), p.classes[c].begin(), p.classes[c].end());
      }
    }
    merged1.insert(merged1.end(), p.classes[qc].begin(), p.classes[qc].end());
    merged2.insert(merged2.end(), p.classes[qc].begin(), p.classes[qc].end());
    cls1.push_back(std::move(merged1));
    cls2.push_back(std::move(merged2));

    SplitWitness sw;
    sw.p1 = make_partition(h, std::move(cls1));
    sw.p2 = make_partition(h, std::move(cls2));
    sw.lambda = Rational(sw.p1.size() - 1, p.size() - 1);

    std::vector<Rational> u = usage_of(h, p).usage;
    std::vector<Rational> u1 = usage_of(h, sw.p1).usage;
    std::vector<Rational> u2 = usage_of(h, sw.p2).usage;
    for (int e = 0; e < h.edge_count(); ++e)
      if (u[e] != sw.lambda * u1[e] + (1 - sw.lambda) * u2[e])
        throw ConsistencyError("biconnectivity_split: convex identity failed");
    return sw;
  }
  throw ConsistencyError("biconnectivity_split: no cut vertex found");
}

std::string blocker_to_json(const Hypergraph& h, const std::vector<BlockerElement>& elements) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& el : elements) {
    nlohmann::json item;
    item["partition"] = nlohmann::json::array();
    for (const auto& cls : el.usage.partition.classes) {
      nlohmann::json names = nlohmann::json::array();
      for (int v : cls) names.push_back(h.vertex_name(v));
      item["partition"].push_back(names);
    }
    item["vector"] = nlohmann::json::object();
    for (int e = 0; e < h.edge_count(); ++e)
      item["vector"][h.edge(e).id] = rational_to_string(el.usage.usage[e]);
    arr.push_back(std::move(item));
  }
  return arr.dump(2);
}

}  // namespace hypermod
