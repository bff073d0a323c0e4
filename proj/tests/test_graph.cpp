#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>
#include <string>

#include "redwords/checked.hpp"
#include "redwords/family.hpp"
#include "redwords/graph.hpp"
#include "redwords/iso.hpp"
#include "redwords/simplex.hpp"
#include "redwords/tableaux.hpp"
#include "redwords/words.hpp"

using namespace redwords;

namespace {

LabeledGraph path(int n) {
  LabeledGraph g;
  for (int i = 0; i < n; ++i) g.add_vertex("p" + std::to_string(i));
  for (int i = 0; i + 1 < n; ++i)
    g.add_edge("p" + std::to_string(i), "p" + std::to_string(i + 1), EdgeKind::cover);
  return g;
}

LabeledGraph cycle(int n) {
  LabeledGraph g;
  for (int i = 0; i < n; ++i) g.add_vertex("c" + std::to_string(i));
  for (int i = 0; i < n; ++i)
    g.add_edge("c" + std::to_string(i), "c" + std::to_string((i + 1) % n), EdgeKind::cover);
  return g;
}

// Exhaustive oracle: scan vertex quadruples for the three possible cycles.
std::int64_t quad_scan_4cycles(const LabeledGraph& g) {
  std::vector<std::string> vs;
  for (const auto& [key, payload] : g.vertices()) vs.push_back(key);
  std::int64_t count = 0;
  const std::size_t n = vs.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        for (std::size_t d = c + 1; d < n; ++d) {
          const std::string* q[4] = {&vs[a], &vs[b], &vs[c], &vs[d]};
          const int orders[3][4] = {{0, 1, 2, 3}, {0, 1, 3, 2}, {0, 2, 1, 3}};
          for (const auto& ord : orders) {
            bool cyc = true;
            for (int i = 0; i < 4; ++i)
              if (!g.has_edge(*q[ord[i]], *q[ord[(i + 1) % 4]])) {
                cyc = false;
                break;
              }
            if (cyc) ++count;
          }
        }
  return count;
}

}  // namespace

TEST_CASE("invariants are enforced") {
  LabeledGraph g;
  g.add_vertex("a");
  g.add_vertex("b");
  CHECK_THROWS_AS(g.add_vertex("a"), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge("a", "a", EdgeKind::cover), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge("a", "x", EdgeKind::cover), std::invalid_argument);
  g.add_edge("a", "b", EdgeKind::braid);
  CHECK_THROWS_AS(g.add_edge("b", "a", EdgeKind::cover), std::invalid_argument);
  CHECK(g.has_edge("b", "a"));
  CHECK_THROWS_AS(g.degree("x"), std::invalid_argument);
}

TEST_CASE("degree histogram and degree sum") {
  LabeledGraph single;
  single.add_vertex("v");
  CHECK(degree_histogram(single) == IntPolynomial::constant(1));
  CHECK(degree_sum(single) == 0);

  const LabeledGraph g4 = build_word_graph(family_permutation(4));
  CHECK(degree_histogram(g4) == IntPolynomial{{0, 2, 2, 2}});
  const LabeledGraph g6 = build_word_graph(family_permutation(6));
  CHECK(degree_histogram(g6) == IntPolynomial{{0, 2, 4, 6, 3}});
  CHECK(degree_sum(g6) == 2 * static_cast<std::int64_t>(g6.size()));
  CHECK(degree_histogram(g6).eval(1) == static_cast<std::int64_t>(g6.order()));
}

TEST_CASE("4-cycle counting") {
  CHECK(count_4cycles(build_word_graph(family_permutation(4))) == 1);
  CHECK(count_4cycles(path(6)) == 0);
  CHECK(count_4cycles(cycle(4)) == 1);
  CHECK(count_4cycles(cycle(5)) == 0);
  CHECK(count_4cycles(build_word_graph(family_permutation(7))) == 10);

  // Complete graph on 4 vertices has 3 distinct 4-cycles.
  LabeledGraph k4;
  for (int i = 0; i < 4; ++i) k4.add_vertex("k" + std::to_string(i));
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      k4.add_edge("k" + std::to_string(i), "k" + std::to_string(j), EdgeKind::cover);
  CHECK(count_4cycles(k4) == 3);

  for (int n = 4; n <= 7; ++n) {
    const LabeledGraph g = build_word_graph(family_permutation(n));
    CHECK(count_4cycles(g) == quad_scan_4cycles(g));
  }
  CHECK(count_4cycles(k4) == quad_scan_4cycles(k4));
  CHECK(count_4cycles(cycle(6)) == quad_scan_4cycles(cycle(6)));
}

TEST_CASE("connectivity and bipartiteness") {
  CHECK(is_connected(LabeledGraph{}));
  LabeledGraph single;
  single.add_vertex("v");
  CHECK(is_connected(single));

  LabeledGraph two;
  two.add_vertex("a");
  two.add_vertex("b");
  CHECK_FALSE(is_connected(two));
  CHECK(is_bipartite(two));

  CHECK(is_connected(build_word_graph(family_permutation(5))));
  CHECK(is_bipartite(build_word_graph(family_permutation(5))));
  CHECK(is_bipartite(cycle(6)));
  CHECK_FALSE(is_bipartite(cycle(5)));
}

TEST_CASE("verify_isomorphism") {
  const LabeledGraph g4 = build_word_graph(family_permutation(4));
  std::map<std::string, std::string> ident;
  for (const auto& [key, payload] : g4.vertices()) ident[key] = key;
  CHECK(verify_isomorphism(g4, g4, ident));

  // Swapping two keys of unequal adjacency breaks the edge transport.
  std::map<std::string, std::string> wrong = ident;
  wrong["12321"] = "32123";
  wrong["32123"] = "12321";
  CHECK_FALSE(verify_isomorphism(g4, g4, wrong));

  std::map<std::string, std::string> not_bijective = ident;
  not_bijective["12321"] = "32123";
  CHECK_THROWS_AS(verify_isomorphism(g4, g4, not_bijective), std::invalid_argument);
  CHECK_THROWS_AS(verify_isomorphism(g4, g4, std::map<std::string, std::string>{}),
                  std::invalid_argument);

  // Known correspondence for n = 5: words to tableaux.
  std::map<std::string, std::string> bij;
  for (const Word& a : enumerate_reduced_words(family_permutation(5)))
    bij[word_key(a, 5)] = word_to_tableau(a).to_string();
  CHECK(verify_isomorphism(build_word_graph(family_permutation(5)),
                           build_tableau_hasse(5), bij));

  // Fitted-partition map on the 10 dilation-3 points.
  std::map<std::string, std::string> fitted;
  for (const LatticePoint& p : enumerate_lattice_points(3))
    fitted[p.to_string()] = fitted_partition(p).to_string();
  CHECK(verify_isomorphism(build_lattice_graph(3), young_lattice_rectangle(3), fitted));
}

TEST_CASE("brute isomorphism search") {
  CHECK(brute_isomorphic(path(3), path(3)).has_value());
  CHECK_FALSE(brute_isomorphic(path(3), cycle(3)).has_value());
  CHECK_FALSE(brute_isomorphic(path(4), path(3)).has_value());

  const auto found = brute_isomorphic(build_word_graph(family_permutation(5)),
                                      build_lattice_graph(3));
  REQUIRE(found.has_value());
  CHECK(verify_isomorphism(build_word_graph(family_permutation(5)),
                           build_lattice_graph(3), *found));

  CHECK_THROWS_AS(brute_isomorphic(build_word_graph(family_permutation(6)),
                                   build_lattice_graph(4)),
                  BudgetError);
  CHECK(brute_isomorphic(build_word_graph(family_permutation(6)),
                         build_lattice_graph(4), 16)
            .has_value());

  // Same degree multiset, different graphs: C6 vs two triangles.
  LabeledGraph two_triangles;
  for (int i = 0; i < 6; ++i) two_triangles.add_vertex("t" + std::to_string(i));
  for (int base : {0, 3})
    for (int i = 0; i < 3; ++i)
      two_triangles.add_edge("t" + std::to_string(base + i),
                             "t" + std::to_string(base + (i + 1) % 3), EdgeKind::cover);
  CHECK_FALSE(brute_isomorphic(cycle(6), two_triangles).has_value());
}

TEST_CASE("serialization") {
  LabeledGraph g;
  g.add_vertex("a");
  g.add_vertex("b", "note");
  g.add_edge("a", "b", EdgeKind::braid);

  CHECK(to_dot(g) ==
        "graph {\n"
        "  \"a\";\n"
        "  \"b\" [label=\"note\"];\n"
        "  \"a\" -- \"b\" [label=\"braid\"];\n"
        "}\n");

  const std::string json = to_json(g);
  CHECK(graph_from_json(json) == g);
  CHECK(json == to_json(graph_from_json(json)));
  CHECK(json.back() == '\n');

  const LabeledGraph g5 = build_word_graph(family_permutation(5));
  CHECK(graph_from_json(to_json(g5)) == g5);
  CHECK(to_dot(g5) == to_dot(build_word_graph(family_permutation(5))));

  CHECK(edge_kind_from_name("cover") == EdgeKind::cover);
  CHECK_THROWS_AS(edge_kind_from_name("nope"), std::invalid_argument);
}

TEST_CASE("isomorphism chain") {
  const ChainReport r4 = isomorphism_chain(4);
  CHECK(r4.all_verified);
  CHECK(r4.graphs.size() == 5);
  CHECK(r4.links.size() == 4);
  for (const auto& [name, g] : r4.graphs) {
    CHECK(g.order() == 6);
    CHECK(g.size() == 6);
  }

  const ChainReport r5 = isomorphism_chain(5);
  CHECK(r5.all_verified);
  for (const auto& [name, g] : r5.graphs) {
    CHECK(g.order() == 10);
    CHECK(g.size() == 12);
    CHECK(degree_histogram(g) == predicted_degree_polynomial(5));
  }

  CHECK_THROWS_AS(isomorphism_chain(3), std::invalid_argument);

  const std::string text = chain_report_text(r4);
  CHECK(text.find("chain verified") != std::string::npos);
  const std::string maps = chain_maps_json(r4);
  CHECK(maps.find("\"verified\": true") != std::string::npos);
}
