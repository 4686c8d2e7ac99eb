#include "hypermod/metrics.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "hypermod/matroid.hpp"

namespace hypermod {

Rational density(const Hypergraph& h, const std::vector<int>& f) {
  if (f.empty()) throw ArgumentError("density: empty edge subset");
  std::vector<bool> in(h.vertex_count(), false);
  for (int e : f) {
    if (e < 0 || e >= h.edge_count()) throw ArgumentError("density: edge index out of range");
    for (int v : h.edge(e).vertices) in[v] = true;
  }
  long k = std::count(in.begin(), in.end(), true);
  if (k < 2) throw ArgumentError("density: support has fewer than 2 vertices");
  return Rational(static_cast<long>(f.size()), k - 1);
}

StrengthReport strength(const Hypergraph& h, const std::optional<std::vector<Rational>>& weights,
                        bool collect_optima, int vertex_cap) {
  if (h.vertex_count() < 2) throw ArgumentError("strength: need at least 2 vertices");
  if (!is_connected(h)) throw ArgumentError("strength: input is disconnected");

  std::vector<Rational> w;
  if (weights) {
    if (static_cast<int>(weights->size()) != h.edge_count())
      throw ArgumentError("strength: weight size mismatch");
    w = *weights;
  } else {
    for (int e = 0; e < h.edge_count(); ++e) w.push_back(h.weight(e));
  }
  bool unit = std::all_of(w.begin(), w.end(), [](const Rational& x) { return x == 1; });

  StrengthReport rep;
  bool found = false;
  std::vector<std::vector<int>> optima_rgs;  // growth strings of ties
  for_each_partition_rgs(
      h.vertex_count(), 2,
      [&](const std::vector<int>& assign, int k) {
        Rational num(0);
        long cut_count = 0;
        for (int e = 0; e < h.edge_count(); ++e) {
          const auto& verts = h.edge(e).vertices;
          int first = assign[verts.front()];
          for (int v : verts)
            if (assign[v] != first) {
              ++cut_count;
              if (!unit) num += w[e];
              break;
            }
        }
        Rational val = (unit ? Rational(cut_count) : num) / (k - 1);
        if (!found || val < rep.value) {
          found = true;
          rep.value = val;
          rep.witness_partition = partition_from_rgs(h, assign);
          if (collect_optima) {
            optima_rgs.clear();
            optima_rgs.push_back(assign);
          }
        } else if (collect_optima && val == rep.value) {
          optima_rgs.push_back(assign);
        }
        return true;
      },
      vertex_cap);
  for (const auto& a : optima_rgs) rep.all_optima.push_back(partition_from_rgs(h, a));
  return rep;
}

ArboricityReport arboricity(const Hypergraph& h, int vertex_cap, int edge_cap) {
  if (h.edge_count() < 1) throw ArgumentError("arboricity: no edges");
  int n = h.vertex_count();
  if (n > vertex_cap)
    throw CapacityError("arboricity: " + std::to_string(n) + " vertices exceeds cap " +
                        std::to_string(vertex_cap));

  std::vector<unsigned> edge_mask(h.edge_count(), 0);
  for (int e = 0; e < h.edge_count(); ++e)
    for (int v : h.edge(e).vertices) edge_mask[e] |= 1u << v;

  ArboricityReport rep;
  bool found = false;
  for (unsigned x = 1; x < (1u << n); ++x) {
    int k = std::popcount(x);
    if (k < 2) continue;
    long inside = 0;
    for (unsigned m : edge_mask)
      if ((m & ~x) == 0) ++inside;
    Rational val(inside, k - 1);
    if (!found || val > rep.value) {
      found = true;
      rep.value = val;
      rep.witness_vertex_set.clear();
      for (int v = 0; v < n; ++v)
        if (x >> v & 1) rep.witness_vertex_set.push_back(v);
    }
  }

  // Same maximum over edge subsets via theta.
  int m = h.edge_count();
  if (m > edge_cap)
    throw CapacityError("arboricity: " + std::to_string(m) + " edges exceeds cap " +
                        std::to_string(edge_cap));
  Rational theta_best(0);
  for (unsigned long fmask = 1; fmask < (1ul << m); ++fmask) {
    unsigned span = 0;
    for (int e = 0; e < m; ++e)
      if (fmask >> e & 1) span |= edge_mask[e];
    int k = std::popcount(span);
    if (k < 2) continue;
    theta_best = std::max(theta_best, Rational(std::popcount(fmask), k - 1));
  }
  if (theta_best != rep.value)
    throw ConsistencyError("arboricity: vertex-subset and edge-subset maxima disagree");
  return rep;
}

bool is_k_partition_connected(const Hypergraph& h, long k, int vertex_cap) {
  if (h.vertex_count() < 1) throw ArgumentError("is_k_partition_connected: empty vertex set");
  if (k < 1) throw ArgumentError("is_k_partition_connected: k must be positive");
  bool ok = true;
  for_each_partition_rgs(
      h.vertex_count(), 2,
      [&](const std::vector<int>& assign, int parts) {
        long cut = 0;
        for (int e = 0; e < h.edge_count(); ++e) {
          const auto& verts = h.edge(e).vertices;
          int first = assign[verts.front()];
          for (int v : verts)
            if (assign[v] != first) { ++cut; break; }
        }
        if (cut < k * (parts - 1)) { ok = false; return false; }
        return true;
      },
      vertex_cap);
  return ok;
}

long max_disjoint_hypertrees(const Hypergraph& h, int vertex_cap) {
  if (!is_connected(h)) throw ArgumentError("max_disjoint_hypertrees: input is disconnected");
  if (h.vertex_count() < 2) return 0;
  Rational s = strength(h, std::nullopt, false, vertex_cap).value;
  long k = static_cast<long>(rational_floor(s));
  if (k >= 1) {
    std::vector<Rational> cost(h.edge_count(), Rational(1));
    std::vector<long> tree = greedy_min_basis(h, cost, 1, true, vertex_cap);
    if (!is_hypertree(h, tree, vertex_cap))
      throw ConsistencyError("max_disjoint_hypertrees: greedy certificate is not a hypertree");
  }
  return k;
}

CoverReport min_hyperforest_cover(const Hypergraph& h, int vertex_cap, int edge_cap) {
  Rational d = arboricity(h, vertex_cap, edge_cap).value;
  long k = static_cast<long>(rational_ceil(d));

  CoverReport rep;
  rep.count = k;
  std::vector<bool> used(h.edge_count(), false);
  long remaining = h.edge_count();
  while (remaining > 0) {
    std::vector<long> mult(h.edge_count(), 0);
    std::vector<int> forest;
    for (int e = 0; e < h.edge_count(); ++e) {
      if (used[e]) continue;
      mult[e] = 1;
      if (is_hyperforest(h, mult, vertex_cap)) {
        forest.push_back(e);
        used[e] = true;
        --remaining;
      } else {
        mult[e] = 0;
      }
    }
    rep.forests.push_back(std::move(forest));
    if (static_cast<long>(rep.forests.size()) > k)
      throw ConsistencyError("min_hyperforest_cover: greedy peeling used more than ceil(D) forests");
  }
  return rep;
}

}  // namespace hypermod
