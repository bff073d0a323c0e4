#ifndef REDWORDS_GRAPH_HPP
#define REDWORDS_GRAPH_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "redwords/poly.hpp"

namespace redwords {

enum class EdgeKind { braid, commutation, cover };

std::string edge_kind_name(EdgeKind k);
EdgeKind edge_kind_from_name(const std::string& name);

// Undirected simple graph with string vertex keys, optional payload text per
// vertex, and an EdgeKind label per edge. No self-loops, no parallel edges.
// Vertices and edges iterate in lexicographic key order, which makes every
// derived serialization deterministic.
class LabeledGraph {
 public:
  using Edge = std::pair<std::string, std::string>;  // endpoints with first < second

  void add_vertex(const std::string& key, std::string payload = "");
  void add_edge(const std::string& a, const std::string& b, EdgeKind kind);

  bool has_vertex(const std::string& key) const;
  bool has_edge(const std::string& a, const std::string& b) const;

  std::size_t order() const { return vertices_.size(); }
  std::size_t size() const { return edges_.size(); }

  const std::map<std::string, std::string>& vertices() const { return vertices_; }
  const std::map<Edge, EdgeKind>& edges() const { return edges_; }
  const std::set<std::string>& neighbors(const std::string& key) const;
  std::size_t degree(const std::string& key) const;

  friend bool operator==(const LabeledGraph& a, const LabeledGraph& b);

 private:
  std::map<std::string, std::string> vertices_;
  std::map<Edge, EdgeKind> edges_;
  std::map<std::string, std::set<std::string>> adjacency_;
};

// Coefficient of d^j counts the vertices of degree j; the constant term
// counts isolated vertices. Evaluating at d = 1 gives the order.
IntPolynomial degree_histogram(const LabeledGraph& g);
std::int64_t degree_sum(const LabeledGraph& g);

// Number of 4-cycle subgraphs, each counted once.
std::int64_t count_4cycles(const LabeledGraph& g);

bool is_connected(const LabeledGraph& g);  // empty and single-vertex graphs count as connected
bool is_bipartite(const LabeledGraph& g);

// True iff `map` carries the edge set of g exactly onto the edge set of h;
// edge kinds are ignored. Throws std::invalid_argument unless `map` is a
// bijection from g's vertex set onto h's.
bool verify_isomorphism(const LabeledGraph& g, const LabeledGraph& h,
                        const std::map<std::string, std::string>& map);

// Backtracking isomorphism search with degree pruning; returns a witness map
// when one exists. Throws BudgetError when either graph has more than
// max_vertices vertices.
std::optional<std::map<std::string, std::string>> brute_isomorphic(
    const LabeledGraph& g, const LabeledGraph& h, std::size_t max_vertices = 12);

std::string to_dot(const LabeledGraph& g);
std::string to_json(const LabeledGraph& g);
LabeledGraph graph_from_json(const std::string& text);

}  // namespace redwords

#endif
