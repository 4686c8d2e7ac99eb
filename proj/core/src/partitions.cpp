#include "hypermod/partitions.hpp"

#include <algorithm>
#include <string>

namespace hypermod {

Partition make_partition(const Hypergraph& h, std::vector<std::vector<int>> classes) {
  std::vector<int> cls(h.vertex_count(), -1);
  for (size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].empty()) throw ArgumentError("make_partition: empty class");
    std::sort(classes[c].begin(), classes[c].end());
    for (int v : classes[c]) {
      if (v < 0 || v >= h.vertex_count() || cls[v] != -1)
        throw ArgumentError("make_partition: classes are not disjoint subsets of V");
      cls[v] = static_cast<int>(c);
    }
  }
  for (int v = 0; v < h.vertex_count(); ++v)
    if (cls[v] == -1) throw ArgumentError("make_partition: classes do not cover V");
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  Partition p;
  p.classes = std::move(classes);
  for (size_t c = 0; c < p.classes.size(); ++c)
    for (int v : p.classes[c]) cls[v] = static_cast<int>(c);
  for (int e = 0; e < h.edge_count(); ++e) {
    int first = cls[h.edge(e).vertices.front()];
    for (int v : h.edge(e).vertices)
      if (cls[v] != first) { p.cut.push_back(e); break; }
  }
  return p;
}

Partition partition_from_rgs(const Hypergraph& h, const std::vector<int>& assign) {
  int k = assign.empty() ? 0 : *std::max_element(assign.begin(), assign.end()) + 1;
  std::vector<std::vector<int>> classes(k);
  for (int v = 0; v < static_cast<int>(assign.size()); ++v) classes[assign[v]].push_back(v);
  return make_partition(h, std::move(classes));
}

void for_each_partition_rgs(int n, int min_classes,
                            const std::function<bool(const std::vector<int>&, int)>& fn,
                            int vertex_cap) {
  if (n < 1) throw ArgumentError("for_each_partition: empty vertex set");
  if (min_classes < 1 || min_classes > n)
    throw ArgumentError("for_each_partition: min_classes out of range");
  if (n > vertex_cap)
    throw CapacityError("partition enumeration over " + std::to_string(n) +
                        " vertices exceeds cap " + std::to_string(vertex_cap));

  // Restricted growth strings: a[0] = 0, a[i] <= max(a[0..i-1]) + 1.
  std::vector<int> a(n, 0), maxv(n, 0);
  while (true) {
    int k = maxv[n - 1] + 1;
    if (k >= min_classes && !fn(a, k)) return;
    int i = n - 1;
    while (i > 0 && a[i] == maxv[i - 1] + 1) --i;
    if (i == 0) return;
    ++a[i];
    maxv[i] = std::max(maxv[i - 1], a[i]);
    for (int j = i + 1; j < n; ++j) { a[j] = 0; maxv[j] = maxv[i]; }
  }
}

void for_each_partition(const Hypergraph& h, int min_classes,
                        const std::function<bool(const Partition&)>& fn, int vertex_cap) {
  for_each_partition_rgs(
      h.vertex_count(), min_classes,
      [&](const std::vector<int>& assign, int) { return fn(partition_from_rgs(h, assign)); },
      vertex_cap);
}

std::vector<int> cut_of(const Hypergraph& h, const Partition& p, const std::vector<int>& f) {
  std::vector<int> cls(h.vertex_count(), -1);
  for (size_t c = 0; c < p.classes.size(); ++c)
    for (int v : p.classes[c]) cls[v] = static_cast<int>(c);
  std::vector<int> out;
  for (int e : f) {
    const auto& verts = h.edge(e).vertices;
    int first = cls[verts.front()];
    for (int v : verts)
      if (cls[v] != first) { out.push_back(e); break; }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_feasible(const Hypergraph& h, const Partition& p) {
  for (const auto& cls : p.classes) {
    if (cls.size() == 1) continue;
    if (!is_connected(induced_by_vertices(h, cls))) return false;
  }
  return true;
}

PartitionUsage usage_of(const Hypergraph& h, const Partition& p) {
  if (p.size() < 2) throw ArgumentError("usage_of: partition needs |P| >= 2");
  PartitionUsage u;
  u.usage.assign(h.edge_count(), Rational(0));
  Rational val(1, p.size() - 1);
  for (int e : p.cut) u.usage[e] = val;
  u.partition = p;
  return u;
}

void for_each_feasible(const Hypergraph& h,
                       const std::function<bool(const PartitionUsage&)>& fn, int vertex_cap) {
  if (!is_connected(h)) throw ArgumentError("for_each_feasible: input is disconnected");
  for_each_partition(
      h, 2,
      [&](const Partition& p) {
        if (!is_feasible(h, p)) return true;
        return fn(usage_of(h, p));
      },
      vertex_cap);
}

Hypergraph shrink_partition(const Hypergraph& h, const Partition& p) {
  for (const auto& cls : p.classes)
    if (cls.size() > 1 && !is_connected(induced_by_vertices(h, cls))) {
      std::string names;
      for (int v : cls) names += (names.empty() ? "" : ",") + h.vertex_name(v);
      throw ArgumentError("shrink_partition: class {" + names + "} induces a disconnected subhypergraph");
    }
  return shrink_classes(h, p.classes);
}

}  // namespace hypermod
