#include <doctest.h>

#include <numeric>

#include "fixtures.hpp"
#include "hypermod/matroid.hpp"

using namespace hypermod;

namespace {

std::vector<int> all_edges(const Hypergraph& h) {
  std::vector<int> f(h.edge_count());
  std::iota(f.begin(), f.end(), 0);
  return f;
}

}  // namespace

TEST_CASE("hyperforest recognition") {
  Hypergraph f1 = fixtures::twin_triples();
  CHECK(is_hyperforest(f1, {1, 1}));
  CHECK(is_hyperforest(f1, {2, 0}));
  CHECK_FALSE(is_hyperforest(f1, {2, 1}));

  Hypergraph fr = fixtures::pendant_triple();
  CHECK(is_hyperforest(fr, {2, 1}));
  CHECK_FALSE(is_hyperforest(fr, {1, 2}));  // {v3,v4} holds two edges

  Hypergraph tri = fixtures::triangle();
  CHECK(is_hyperforest(tri, {1, 1, 0}));
  CHECK_FALSE(is_hyperforest(tri, {1, 1, 1}));
}

TEST_CASE("rank by the partition formula") {
  CHECK(rank(fixtures::single_triple(), {0}) == 1);
  CHECK(rank(fixtures::pendant_triple(), all_edges(fixtures::pendant_triple())) == 2);
  CHECK(rank(fixtures::twin_triples(), all_edges(fixtures::twin_triples())) == 2);
  CHECK(rank(fixtures::triangle(), all_edges(fixtures::triangle())) == 2);
  CHECK(rank(fixtures::triangle(), {}) == 0);
  CHECK(rank(fixtures::triangle(), {0}) == 1);
}

TEST_CASE("greedy rank agrees with the partition formula") {
  for (const Hypergraph& h :
       {fixtures::twin_triples(), fixtures::triangle(), fixtures::pendant_triple(),
        fixtures::path_abc(), fixtures::single_triple()}) {
    int m = h.edge_count();
    for (int mask = 0; mask < (1 << m); ++mask) {
      std::vector<int> f;
      for (int e = 0; e < m; ++e)
        if (mask & (1 << e)) f.push_back(e);
      CHECK(rank(h, f) == rank_greedy(h, f));
    }
  }
}

TEST_CASE("independence and hypertrees") {
  Hypergraph f1 = fixtures::twin_triples();
  CHECK(is_independent(f1, {0, 1}));
  CHECK(is_hypertree(f1, {1, 1}));
  CHECK(is_hypertree(f1, {2, 0}));
  CHECK_FALSE(is_hypertree(f1, {1, 0}));  // too small

  Hypergraph fr = fixtures::pendant_triple();
  CHECK(is_hypertree(fr, {2, 1}));
  CHECK_FALSE(is_hypertree(fr, {1, 1}));

  Hypergraph tri = fixtures::triangle();
  CHECK(is_hypertree(tri, {1, 0, 1}));
  CHECK_FALSE(is_hypertree(tri, {2, 0, 0}));  // misses vertex c
}

TEST_CASE("greedy minimum basis") {
  Hypergraph tri = fixtures::triangle();
  CHECK(greedy_min_basis(tri, {Rational(1), Rational(2), Rational(3)}, 1) ==
        std::vector<long>{1, 1, 0});

  Hypergraph f1 = fixtures::twin_triples();
  CHECK(greedy_min_basis(f1, {Rational(1), Rational(2)}, 3) == std::vector<long>{2, 0});
  CHECK(greedy_min_basis(f1, {Rational(2), Rational(1)}, 3) == std::vector<long>{0, 2});

  Hypergraph fr = fixtures::pendant_triple();
  CHECK(greedy_min_basis(fr, {Rational(1), Rational(1)}, 4) == std::vector<long>{2, 1});
  // With multiplicity 1 no spanning hyperforest of size |V|-1 exists.
  CHECK_THROWS_AS(greedy_min_basis(fr, {Rational(1), Rational(1)}, 1), InfeasibilityError);
  CHECK(greedy_min_basis(fr, {Rational(1), Rational(1)}, 1, false) == std::vector<long>{1, 1});
}

TEST_CASE("closure membership") {
  Hypergraph f1 = fixtures::twin_triples();
  CHECK_FALSE(closure_contains(f1, {0}, 1));  // adding the copy raises the rank

  Hypergraph tri = fixtures::triangle();
  CHECK(closure_contains(tri, {0, 1}, 2));
  CHECK_FALSE(closure_contains(tri, {0}, 1));

  Hypergraph p = fixtures::path_abc();
  CHECK_FALSE(closure_contains(p, {0}, 1));
}

TEST_CASE("forest representations certify independence") {
  Hypergraph f1 = fixtures::twin_triples();
  auto rep = forest_representation(f1, {0, 1});
  REQUIRE(rep.has_value());
  CHECK(rep->pairs.size() == 2);
  for (const auto& [e, pr] : rep->pairs) {
    CHECK(f1.edge(e).contains(pr.first));
    CHECK(f1.edge(e).contains(pr.second));
    CHECK(pr.first != pr.second);
  }

  Hypergraph tri = fixtures::triangle();
  CHECK(forest_representation(tri, {0, 1}).has_value());
  CHECK_FALSE(forest_representation(tri, {0, 1, 2}).has_value());
}

TEST_CASE("independence iff a forest representation exists") {
  int checked = 0;
  for (const Hypergraph& h : fixtures::corpus().connected) {
    if (checked >= 40) break;
    ++checked;
    int m = h.edge_count();
    for (int mask = 0; mask < (1 << m); ++mask) {
      std::vector<int> f;
      for (int e = 0; e < m; ++e)
        if (mask & (1 << e)) f.push_back(e);
      CHECK(is_independent(h, f) == forest_representation(h, f).has_value());
    }
  }
  CHECK(checked == 40);
}

TEST_CASE("matroid strength examples") {
  std::vector<Rational> one3(3, Rational(1));
  CHECK(matroid_strength(fixtures::single_triple(), {Rational(1)}).value == Rational(1));
  CHECK(matroid_strength(fixtures::triangle(), one3).value == Rational(3, 2));
  CHECK(matroid_strength(fixtures::twin_triples(), {Rational(1), Rational(1)}).value == Rational(1));

  auto tri = matroid_strength(fixtures::triangle(), one3);
  CHECK(tri.witness.size() == 3);  // maximal optimizer is the full edge set
}

TEST_CASE("matroid arboricity examples") {
  CHECK(matroid_arboricity(fixtures::triangle()).value == Rational(3, 2));
  CHECK(matroid_arboricity(fixtures::single_triple()).value == Rational(1));
  CHECK(matroid_arboricity(fixtures::twin_triples()).value == Rational(1));
  CHECK(matroid_arboricity(fixtures::path_abc()).value == Rational(1));
}
