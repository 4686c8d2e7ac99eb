#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hypermod/hypergraph.hpp"
#include "hypermod/matroid.hpp"

namespace fixtures {

using hypermod::Hypergraph;
using hypermod::Rational;

inline Hypergraph from_file(const std::string& name) {
  std::ifstream in(std::string(HYPERMOD_DATA_DIR) + "/" + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  auto fmt = name.ends_with(".lines") ? Hypergraph::Format::Lines : Hypergraph::Format::Json;
  return Hypergraph::parse(ss.str(), fmt);
}

// Two parallel triple edges on three vertices.
inline Hypergraph twin_triples() { return from_file("twin_triples.json"); }

// One triple edge on three vertices.
inline Hypergraph single_triple() { return from_file("single_triple.lines"); }

// e1 = {v1,v2,v3}, e2 = {v3,v4}: connected but without hypertrees.
inline Hypergraph pendant_triple() { return from_file("pendant_triple.lines"); }

inline Hypergraph triangle() { return from_file("triangle.json"); }

// Three-level instance: two pendant-extended dense blocks joined by two
// parallel quadruple edges.
inline Hypergraph three_level() { return from_file("three_level.json"); }

inline Hypergraph path_abc() {
  return Hypergraph::make({"a", "b", "c"}, {{"e1", {"a", "b"}}, {"e2", {"b", "c"}}});
}

inline bool has_hypertree(const Hypergraph& h) {
  try {
    hypermod::greedy_min_basis(h, std::vector<Rational>(h.edge_count(), Rational(1)), 1, true);
    return true;
  } catch (const hypermod::InfeasibilityError&) {
    return false;
  }
}

struct Corpus {
  std::vector<Hypergraph> connected;            // at least 200
  std::vector<Hypergraph> partition_connected;  // at least 200, subset-like
};

/// Deterministic random corpus: connected hypergraphs with |V| <= 7, |E| <= 8.
inline const Corpus& corpus() {
  static const Corpus c = [] {
    Corpus out;
    std::mt19937 rng(20240817);
    while (out.connected.size() < 200 || out.partition_connected.size() < 200) {
      int n = std::uniform_int_distribution<int>(3, 7)(rng);
      int m = std::uniform_int_distribution<int>(2, 8)(rng);
      std::vector<std::string> names;
      for (int v = 0; v < n; ++v) names.push_back("v" + std::to_string(v + 1));
      std::vector<std::pair<std::string, std::vector<std::string>>> edges;
      for (int e = 0; e < m; ++e) {
        int size = std::uniform_int_distribution<int>(2, std::min(4, n))(rng);
        std::vector<int> pool(n);
        std::iota(pool.begin(), pool.end(), 0);
        std::shuffle(pool.begin(), pool.end(), rng);
        std::vector<std::string> verts;
        for (int i = 0; i < size; ++i) verts.push_back(names[pool[i]]);
        edges.emplace_back("e" + std::to_string(e + 1), verts);
      }
      Hypergraph h = Hypergraph::make(names, edges);
      if (!hypermod::is_connected(h)) continue;
      if (out.connected.size() < 200) out.connected.push_back(h);
      if (out.partition_connected.size() < 200 && has_hypertree(h))
        out.partition_connected.push_back(h);
    }
    return out;
  }();
  return c;
}

/// Deterministic positive rational weights in (0, 5].
inline std::vector<Rational> random_weights(int count, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<Rational> w;
  for (int i = 0; i < count; ++i) {
    long num = std::uniform_int_distribution<long>(1, 20)(rng);
    long den = std::uniform_int_distribution<long>(1, 4)(rng);
    w.emplace_back(num, den);
  }
  return w;
}

}  // namespace fixtures
