#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>
#include <string>
#include <vector>

#include "redwords/simplex.hpp"
#include "redwords/tableaux.hpp"

using namespace redwords;

TEST_CASE("lattice point validation") {
  CHECK(make_lattice_point(1, 2, 3).to_string() == "(1,2)");
  CHECK_THROWS_AS(make_lattice_point(2, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(make_lattice_point(-1, 0, 3), std::invalid_argument);
  CHECK_THROWS_AS(make_lattice_point(0, 0, -1), std::invalid_argument);
}

TEST_CASE("enumeration and Ehrhart counts") {
  const auto pts3 = enumerate_lattice_points(3);
  CHECK(pts3.size() == 10);
  const std::set<std::string> expected = {"(0,3)", "(1,2)", "(0,2)", "(2,1)", "(1,1)",
                                          "(3,0)", "(0,1)", "(2,0)", "(1,0)", "(0,0)"};
  std::set<std::string> got;
  for (const LatticePoint& p : pts3) got.insert(p.to_string());
  CHECK(got == expected);

  CHECK(enumerate_lattice_points(0).size() == 1);
  CHECK(enumerate_lattice_points(10).size() == 66);
  CHECK(ehrhart(3) == 10);
  CHECK(ehrhart(0) == 1);
  CHECK(ehrhart(7) == 36);
  for (int k = 0; k <= 20; ++k)
    CHECK(ehrhart(k) == static_cast<std::int64_t>(enumerate_lattice_points(k).size()));

  // Ordered by weight, then first coordinate.
  for (std::size_t i = 1; i < pts3.size(); ++i) {
    const int wa = weight(pts3[i - 1]), wb = weight(pts3[i]);
    CHECK((wa < wb || (wa == wb && pts3[i - 1].a1 < pts3[i].a1)));
  }
}

TEST_CASE("weights and fitted partitions") {
  CHECK(weight(make_lattice_point(0, 0, 3)) == 0);
  CHECK(weight(make_lattice_point(0, 3, 3)) == 6);
  CHECK(weight(make_lattice_point(1, 2, 3)) == 5);
  CHECK(fitted_partition(make_lattice_point(1, 2, 3)) == make_partition({3, 2}));
  CHECK(fitted_partition(make_lattice_point(0, 0, 3)) == make_partition({}));
  CHECK(fitted_partition(make_lattice_point(3, 0, 3)) == make_partition({3}));

  for (int k = 0; k <= 10; ++k)
    for (const LatticePoint& p : enumerate_lattice_points(k)) {
      const Partition lam = fitted_partition(p);
      CHECK(lam.boxes() == weight(p));
      CHECK(lam.part(1) <= k);
      CHECK(lam.parts.size() <= 2);
      CHECK(lattice_point_from_partition(lam, k) == p);
    }
}

TEST_CASE("cover rule yields the expected dilation-3 graph") {
  CHECK_FALSE(lattice_covers(make_lattice_point(0, 0, 3), make_lattice_point(1, 1, 3)));
  CHECK(lattice_covers(make_lattice_point(0, 1, 3), make_lattice_point(1, 1, 3)));
  CHECK(lattice_covers(make_lattice_point(0, 2, 3), make_lattice_point(1, 1, 3)));
  CHECK_THROWS_AS(lattice_covers(make_lattice_point(0, 0, 2), make_lattice_point(1, 0, 3)),
                  std::invalid_argument);

  const LabeledGraph g3 = build_lattice_graph(3);
  CHECK(g3.order() == 10);
  CHECK(g3.size() == 12);
  const std::set<std::pair<std::string, std::string>> expected = {
      {"(0,0)", "(1,0)"}, {"(1,0)", "(2,0)"}, {"(2,0)", "(3,0)"},
      {"(0,1)", "(1,1)"}, {"(1,1)", "(2,1)"}, {"(0,2)", "(1,2)"},
      {"(0,1)", "(1,0)"}, {"(0,2)", "(1,1)"}, {"(0,3)", "(1,2)"},
      {"(1,1)", "(2,0)"}, {"(1,2)", "(2,1)"}, {"(2,1)", "(3,0)"}};
  std::set<std::pair<std::string, std::string>> got;
  for (const auto& [e, kind] : g3.edges()) {
    got.insert(e);
    CHECK(kind == EdgeKind::cover);
  }
  CHECK(got == expected);

  const LabeledGraph g0 = build_lattice_graph(0);
  CHECK(g0.order() == 1);
  CHECK(g0.size() == 0);
}

TEST_CASE("slice counts") {
  CHECK(slice_counts(3) == std::vector<std::int64_t>{1, 1, 2, 2, 2, 1, 1});
  CHECK(slice_counts(0) == std::vector<std::int64_t>{1});
  CHECK(slice_counts(2) == std::vector<std::int64_t>{1, 1, 2, 1, 1});
  for (int k = 0; k <= 20; ++k) {
    const auto counts = slice_counts(k);
    std::int64_t total = 0;
    for (std::int64_t c : counts) total += c;
    CHECK(total == ehrhart(k));
    for (std::size_t i = 0; i < counts.size(); ++i)
      CHECK(counts[i] == counts[counts.size() - 1 - i]);
  }
}

TEST_CASE("gaussian binomials") {
  CHECK(gaussian_binomial_k2(2) == IntPolynomial{{1, 1, 2, 1, 1}});
  CHECK(gaussian_binomial_k2(0) == IntPolynomial::constant(1));
  CHECK(gaussian_binomial_k2(3) == IntPolynomial{{1, 1, 2, 2, 2, 1, 1}});
  CHECK(gaussian_binomial_k2(3).eval(1) == 10);
  for (int k = 0; k <= 20; ++k) {
    const IntPolynomial g = gaussian_binomial_k2(k);
    CHECK(g == gaussian_binomial_n2(k + 2));
    CHECK(g.eval(1) == ehrhart(k));
    CHECK(g.is_palindromic());
  }
}

TEST_CASE("product expansion") {
  CHECK(product_expansion_check(0));
  CHECK(product_expansion_check(10));
}

TEST_CASE("young lattice in the rectangle") {
  const LabeledGraph y3 = young_lattice_rectangle(3);
  CHECK(y3.order() == 10);
  CHECK(y3.size() == 12);
  const std::set<std::pair<std::string, std::string>> expected = {
      {"()", "(1)"},      {"(1)", "(1,1)"},   {"(1,1)", "(2,1)"}, {"(2,1)", "(2,2)"},
      {"(2,2)", "(3,2)"}, {"(3,2)", "(3,3)"}, {"(1)", "(2)"},     {"(2)", "(3)"},
      {"(3)", "(3,1)"},   {"(3,1)", "(3,2)"}, {"(2)", "(2,1)"},   {"(2,1)", "(3,1)"}};
  std::set<std::pair<std::string, std::string>> got;
  for (const auto& [e, kind] : y3.edges()) got.insert(e);
  CHECK(got == expected);

  CHECK(young_lattice_rectangle(0).order() == 1);

  // Isomorphic to the lattice graph through the fitted-partition map.
  for (int k = 0; k <= 10; ++k) {
    std::map<std::string, std::string> fitted;
    for (const LatticePoint& p : enumerate_lattice_points(k))
      fitted[p.to_string()] = fitted_partition(p).to_string();
    CHECK(verify_isomorphism(build_lattice_graph(k), young_lattice_rectangle(k), fitted));
  }
}

TEST_CASE("grading and length checks") {
  for (int k = 0; k <= 10; ++k) {
    CHECK(lattice_rank_check(k));
    CHECK(lattice_length_check(k));
  }
  // Spot values: weights match Grassmannian lengths at k = 3, n = 5.
  CHECK(length(grassmannian_from_partition(
            fitted_partition(make_lattice_point(1, 2, 3)), 5)) == 5);
  CHECK(length(grassmannian_from_partition(
            fitted_partition(make_lattice_point(0, 0, 3)), 5)) == 0);
}

TEST_CASE("covers transport to single-box steps") {
  // A (1,0) step adds a box to the fitted partition, a (1,-1) step removes
  // one, so the undirected edge sets correspond exactly.
  for (int k = 1; k <= 10; ++k) {
    const auto pts = enumerate_lattice_points(k);
    for (const LatticePoint& a : pts)
      for (const LatticePoint& b : pts) {
        const Partition fa = fitted_partition(a), fb = fitted_partition(b);
        const bool lattice_edge = lattice_covers(a, b) || lattice_covers(b, a);
        const bool young_edge = partition_cover(fa, fb) || partition_cover(fb, fa);
        CHECK(lattice_edge == young_edge);
        if (lattice_covers(a, b)) {
          CHECK(std::abs(weight(b) - weight(a)) == 1);
          CHECK(b.a1 == a.a1 + 1);
        }
      }
  }
}
