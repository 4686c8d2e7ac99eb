#include <doctest.h>

#include <numeric>

#include "fixtures.hpp"
#include "hypermod/matroid.hpp"
#include "hypermod/metrics.hpp"

using namespace hypermod;

TEST_CASE("density") {
  Hypergraph f1 = fixtures::twin_triples();
  CHECK(density(f1, {0, 1}) == Rational(1));
  CHECK(density(f1, {0}) == Rational(1, 2));

  Hypergraph tri = fixtures::triangle();
  CHECK(density(tri, {0, 1, 2}) == Rational(3, 2));
  CHECK(density(tri, {0, 1}) == Rational(2, 2));

  CHECK_THROWS_AS(density(tri, {}), ArgumentError);
  CHECK_THROWS_AS(density(tri, {0, 7}), ArgumentError);
}

TEST_CASE("strength examples") {
  CHECK(strength(fixtures::twin_triples()).value == Rational(1));
  CHECK(strength(fixtures::single_triple()).value == Rational(1, 2));
  CHECK(strength(fixtures::triangle()).value == Rational(3, 2));

  StrengthReport fr = strength(fixtures::pendant_triple());
  CHECK(fr.value == Rational(1, 2));
  // The witness partition really attains the value.
  long cut = static_cast<long>(fr.witness_partition.cut.size());
  CHECK(Rational(cut, fr.witness_partition.size() - 1) == fr.value);
}

TEST_CASE("weighted strength") {
  std::vector<Rational> w{Rational(1), Rational(2)};
  CHECK(strength(fixtures::twin_triples(), w).value == Rational(3, 2));

  std::vector<Rational> w3{Rational(1, 2), Rational(1, 2), Rational(1, 2)};
  CHECK(strength(fixtures::triangle(), w3).value == Rational(3, 4));
}

TEST_CASE("strength optima collection") {
  StrengthReport tri = strength(fixtures::triangle(), std::nullopt, true);
  CHECK(tri.value == Rational(3, 2));
  for (const Partition& p : tri.all_optima) {
    std::vector<int> f(3);
    std::iota(f.begin(), f.end(), 0);
    long cut = static_cast<long>(cut_of(fixtures::triangle(), p, f).size());
    CHECK(Rational(cut, p.size() - 1) == tri.value);
  }
  CHECK_FALSE(tri.all_optima.empty());
}

TEST_CASE("arboricity examples") {
  CHECK(arboricity(fixtures::twin_triples()).value == Rational(1));
  CHECK(arboricity(fixtures::triangle()).value == Rational(3, 2));

  ArboricityReport fr = arboricity(fixtures::pendant_triple());
  CHECK(fr.value == Rational(1));
  CHECK(fr.witness_vertex_set.size() >= 2);
}

TEST_CASE("strength <= density <= arboricity") {
  int checked = 0;
  for (const Hypergraph& h : fixtures::corpus().connected) {
    if (checked >= 60) break;
    ++checked;
    Rational s = strength(h).value;
    Rational d = arboricity(h).value;
    std::vector<int> all(h.edge_count());
    std::iota(all.begin(), all.end(), 0);
    Rational theta = density(h, all);
    CHECK(s <= theta);
    CHECK(theta <= d);
  }
  CHECK(checked == 60);
}

TEST_CASE("k-partition-connectivity") {
  CHECK(is_k_partition_connected(fixtures::twin_triples(), 1));
  CHECK_FALSE(is_k_partition_connected(fixtures::twin_triples(), 2));
  CHECK(is_k_partition_connected(fixtures::triangle(), 1));
  CHECK_FALSE(is_k_partition_connected(fixtures::pendant_triple(), 1));
  CHECK(is_k_partition_connected(parallelize(fixtures::twin_triples(), 2), 2));
}

TEST_CASE("packing and covering numbers") {
  CHECK(max_disjoint_hypertrees(fixtures::twin_triples()) == 1);
  CHECK(max_disjoint_hypertrees(fixtures::pendant_triple()) == 0);
  CHECK(max_disjoint_hypertrees(fixtures::triangle()) == 1);
  CHECK(max_disjoint_hypertrees(parallelize(fixtures::twin_triples(), 2)) == 2);

  CoverReport tri = min_hyperforest_cover(fixtures::triangle());
  CHECK(tri.count == 2);
  CHECK(tri.forests.size() == 2);
  std::vector<int> seen;
  for (const auto& f : tri.forests) {
    CHECK(is_independent(fixtures::triangle(), f));
    seen.insert(seen.end(), f.begin(), f.end());
  }
  std::sort(seen.begin(), seen.end());
  CHECK(seen == std::vector<int>{0, 1, 2});

  CHECK(min_hyperforest_cover(fixtures::twin_triples()).count == 1);
  CHECK(min_hyperforest_cover(fixtures::pendant_triple()).count == 1);
}

TEST_CASE("shrinking a feasible partition never lowers the strength") {
  // Partitions of H_P lift to partitions of H with the same cut and class
  // count, so S(H_P) >= S(H).
  int checked = 0;
  for (const Hypergraph& h : fixtures::corpus().connected) {
    if (checked >= 25) break;
    ++checked;
    Rational s = strength(h).value;
    for_each_feasible(h, [&](const PartitionUsage& u) {
      Hypergraph shrunk = shrink_partition(h, u.partition);
      if (shrunk.vertex_count() >= 2 && is_connected(shrunk))
        CHECK(strength(shrunk).value >= s);
      return true;
    });
  }
  CHECK(checked == 25);
}

TEST_CASE("single-edge corner cases") {
  Hypergraph one = Hypergraph::make({"a", "b"}, {{"e1", {"a", "b"}}});
  CHECK(density(one, {0}) == Rational(1));
  CHECK(min_hyperforest_cover(one).count == 1);
  CHECK_FALSE(is_k_partition_connected(fixtures::triangle(), 2));
}

TEST_CASE("strength equals the minimum contracted density") {
  int checked = 0;
  for (const Hypergraph& h : fixtures::corpus().connected) {
    if (checked >= 25) break;
    int m = h.edge_count();
    if (m > 6) continue;
    ++checked;
    Rational best(-1);
    for (int mask = 0; mask < (1 << m); ++mask) {
      std::vector<int> f;
      for (int e = 0; e < m; ++e)
        if (mask & (1 << e)) f.push_back(e);
      Hypergraph c = contract(h, f);
      if (c.vertex_count() < 2) continue;
      Rational theta(c.edge_count(), c.vertex_count() - 1);
      if (best < 0 || theta < best) best = theta;
    }
    CHECK(best == strength(h).value);
  }
  CHECK(checked == 25);
}

TEST_CASE("packing number matches k-partition-connectivity") {
  int checked = 0;
  for (const Hypergraph& h : fixtures::corpus().connected) {
    if (checked >= 25) break;
    ++checked;
    long k = max_disjoint_hypertrees(h);
    for (long t = 1; t <= k + 1; ++t)
      CHECK(is_k_partition_connected(h, t) == (t <= k));
  }
  CHECK(checked == 25);
}

TEST_CASE("feasible partitions suffice for the strength minimum") {
  int checked = 0;
  for (const Hypergraph& h : fixtures::corpus().connected) {
    if (checked >= 25) break;
    ++checked;
    Rational best(-1);
    for_each_feasible(h, [&](const PartitionUsage& u) {
      Rational val(static_cast<long>(u.partition.cut.size()), u.partition.size() - 1);
      if (best < 0 || val < best) best = val;
      return true;
    });
    CHECK(best == strength(h).value);
  }
  CHECK(checked == 25);
}
