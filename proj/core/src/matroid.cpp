#include "hypermod/matroid.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "hypermod/partitions.hpp"

namespace hypermod {

namespace {

// Vertices touched by the support of a multiset.
std::vector<int> support_vertices(const Hypergraph& h, const std::vector<long>& mult) {
  std::vector<bool> in(h.vertex_count(), false);
  for (int e = 0; e < h.edge_count(); ++e)
    if (mult[e] > 0)
      for (int v : h.edge(e).vertices) in[v] = true;
  std::vector<int> out;
  for (int v = 0; v < h.vertex_count(); ++v)
    if (in[v]) out.push_back(v);
  return out;
}

}  // namespace

bool is_hyperforest(const Hypergraph& h, const std::vector<long>& mult, int vertex_cap) {
  if (static_cast<int>(mult.size()) != h.edge_count())
    throw ArgumentError("is_hyperforest: multiset size mismatch");
  for (long m : mult)
    if (m < 0) throw ArgumentError("is_hyperforest: negative multiplicity");

  std::vector<int> verts = support_vertices(h, mult);
  int k = static_cast<int>(verts.size());
  if (k == 0) return true;  // empty multiset
  if (k > vertex_cap)
    throw CapacityError("is_hyperforest: support spans " + std::to_string(k) +
                        " vertices, cap " + std::to_string(vertex_cap));
  std::vector<int> pos(h.vertex_count(), -1);
  for (int i = 0; i < k; ++i) pos[verts[i]] = i;

  std::vector<std::pair<unsigned, long>> masked;  // (vertex mask over support, multiplicity)
  for (int e = 0; e < h.edge_count(); ++e) {
    if (mult[e] == 0) continue;
    unsigned m = 0;
    for (int v : h.edge(e).vertices) m |= 1u << pos[v];
    masked.emplace_back(m, mult[e]);
  }
  for (unsigned x = 1; x < (1u << k); ++x) {
    long count = 0;
    int limit = std::popcount(x) - 1;
    for (const auto& [m, c] : masked) {
      if ((m & ~x) == 0) {
        count += c;
        if (count > limit) return false;
      }
    }
  }
  return true;
}

long rank(const Hypergraph& h, const std::vector<int>& f, int vertex_cap) {
  std::vector<bool> in_f(h.edge_count(), false);
  for (int e : f) in_f.at(e) = true;
  long n = h.vertex_count();
  long best = n - 1;  // trivial partition
  for_each_partition_rgs(
      h.vertex_count(), 1,
      [&](const std::vector<int>& assign, int k) {
        long cut = 0;
        for (int e = 0; e < h.edge_count(); ++e) {
          if (!in_f[e]) continue;
          const auto& verts = h.edge(e).vertices;
          int first = assign[verts.front()];
          for (int v : verts)
            if (assign[v] != first) { ++cut; break; }
        }
        best = std::min(best, n - k + cut);
        return true;
      },
      vertex_cap);
  return best;
}

long rank_greedy(const Hypergraph& h, const std::vector<int>& f, int vertex_cap) {
  std::vector<long> mult(h.edge_count(), 0);
  long r = 0;
  std::vector<int> sorted = f;
  std::sort(sorted.begin(), sorted.end());
  for (int e : sorted) {
    ++mult[e];
    if (is_hyperforest(h, mult, vertex_cap)) {
      ++r;
    } else {
      --mult[e];
    }
  }
  return r;
}

bool is_independent(const Hypergraph& h, const std::vector<int>& f, int vertex_cap) {
  std::vector<long> mult(h.edge_count(), 0);
  for (int e : f) mult.at(e) = 1;
  return is_hyperforest(h, mult, vertex_cap);
}

bool is_hypertree(const Hypergraph& h, const std::vector<long>& mult, int vertex_cap) {
  long total = std::accumulate(mult.begin(), mult.end(), 0L);
  if (total != h.vertex_count() - 1) return false;
  if (static_cast<int>(support_vertices(h, mult).size()) != h.vertex_count()) return false;
  return is_hyperforest(h, mult, vertex_cap);
}

std::vector<long> greedy_min_basis(const Hypergraph& h, const std::vector<Rational>& cost,
                                   int multiplicity_cap, bool require_spanning, int vertex_cap) {
  if (static_cast<int>(cost.size()) != h.edge_count())
    throw ArgumentError("greedy_min_basis: cost size mismatch");
  if (multiplicity_cap < 1) throw ArgumentError("greedy_min_basis: cap must be >= 1");

  std::vector<int> order(h.edge_count());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (cost[a] != cost[b]) return cost[a] < cost[b];
    return a < b;
  });

  std::vector<long> mult(h.edge_count(), 0);
  long total = 0;
  for (int e : order) {
    while (mult[e] < multiplicity_cap) {
      ++mult[e];
      if (is_hyperforest(h, mult, vertex_cap)) {
        ++total;
      } else {
        --mult[e];
        break;
      }
    }
  }
  if (require_spanning && total != h.vertex_count() - 1)
    throw InfeasibilityError("greedy_min_basis: no hypertree at multiplicity cap " +
                             std::to_string(multiplicity_cap));
  return mult;
}

bool closure_contains(const Hypergraph& h, const std::vector<int>& f, int e, int vertex_cap) {
  for (int x : f)
    if (x == e) throw ArgumentError("closure_contains: e already in f");
  std::vector<int> g = f;
  g.push_back(e);
  return rank(h, g, vertex_cap) == rank(h, f, vertex_cap);
}

namespace {

struct RollbackDsu {
  std::vector<int> parent, size;
  std::vector<int> trail;  // roots that were attached

  explicit RollbackDsu(int n) : parent(n), size(n, 1) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) const {
    while (parent[x] != x) x = parent[x];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
    trail.push_back(b);
    return true;
  }
  void rollback(size_t mark) {
    while (trail.size() > mark) {
      int b = trail.back();
      trail.pop_back();
      size[parent[b]] -= size[b];
      parent[b] = b;
    }
  }
};

bool represent(const Hypergraph& h, const std::vector<int>& f, size_t i, RollbackDsu& dsu,
               ForestRepresentation& rep, long& budget) {
  if (i == f.size()) return true;
  if (--budget < 0) throw CapacityError("forest_representation: backtracking budget exceeded");
  const auto& verts = h.edge(f[i]).vertices;
  for (size_t a = 0; a < verts.size(); ++a) {
    for (size_t b = a + 1; b < verts.size(); ++b) {
      size_t mark = dsu.trail.size();
      if (!dsu.unite(verts[a], verts[b])) continue;  // would close a cycle
      rep.pairs.emplace_back(f[i], std::make_pair(verts[a], verts[b]));
      if (represent(h, f, i + 1, dsu, rep, budget)) return true;
      rep.pairs.pop_back();
      dsu.rollback(mark);
    }
  }
  return false;
}

}  // namespace

std::optional<ForestRepresentation> forest_representation(const Hypergraph& h,
                                                          const std::vector<int>& f,
                                                          long budget) {
  RollbackDsu dsu(h.vertex_count());
  ForestRepresentation rep;
  if (represent(h, f, 0, dsu, rep, budget)) return rep;
  return std::nullopt;
}

namespace {

std::vector<int> mask_to_edges(unsigned long mask, int m) {
  std::vector<int> out;
  for (int e = 0; e < m; ++e)
    if (mask >> e & 1) out.push_back(e);
  return out;
}

}  // namespace

RatioWitness matroid_strength(const Hypergraph& h, const std::vector<Rational>& weights,
                              int edge_cap) {
  int m = h.edge_count();
  if (m > edge_cap)
    throw CapacityError("matroid_strength: " + std::to_string(m) + " edges exceeds cap " +
                        std::to_string(edge_cap));
  if (static_cast<int>(weights.size()) != m)
    throw ArgumentError("matroid_strength: weight size mismatch");

  std::vector<int> all(m);
  std::iota(all.begin(), all.end(), 0);
  long full_rank = rank_greedy(h, all);
  if (full_rank < 1) throw ArgumentError("matroid_strength: rank(E) must be >= 1");

  bool found = false;
  Rational best;
  unsigned long best_mask = 0;
  for (unsigned long mask = 1; mask < (1ul << m); ++mask) {
    long drop = full_rank - rank_greedy(h, mask_to_edges(~mask & ((1ul << m) - 1), m));
    if (drop <= 0) continue;
    Rational sigma(0);
    for (int e = 0; e < m; ++e)
      if (mask >> e & 1) sigma += weights[e];
    Rational val = sigma / drop;
    bool better = !found || val < best;
    if (!better && found && val == best) {
      // Maximal optimizer: larger sets win, then lexicographically larger.
      int pc = std::popcount(mask), bpc = std::popcount(best_mask);
      better = pc > bpc || (pc == bpc && mask > best_mask);
    }
    if (better) {
      found = true;
      best = val;
      best_mask = mask;
    }
  }
  return {best, mask_to_edges(best_mask, m)};
}

RatioWitness matroid_arboricity(const Hypergraph& h, int edge_cap) {
  int m = h.edge_count();
  if (m < 1) throw ArgumentError("matroid_arboricity: no edges");
  if (m > edge_cap)
    throw CapacityError("matroid_arboricity: " + std::to_string(m) + " edges exceeds cap " +
                        std::to_string(edge_cap));
  bool found = false;
  Rational best;
  unsigned long best_mask = 0;
  for (unsigned long mask = 1; mask < (1ul << m); ++mask) {
    long r = rank_greedy(h, mask_to_edges(mask, m));
    if (r <= 0) continue;
    Rational val(std::popcount(mask), r);
    bool better = !found || val > best;
    if (!better && found && val == best) {
      int pc = std::popcount(mask), bpc = std::popcount(best_mask);
      better = pc > bpc || (pc == bpc && mask > best_mask);
    }
    if (better) {
      found = true;
      best = val;
      best_mask = mask;
    }
  }
  return {best, mask_to_edges(best_mask, m)};
}

}  // namespace hypermod
