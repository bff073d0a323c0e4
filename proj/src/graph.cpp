#include "redwords/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "redwords/checked.hpp"

namespace redwords {

std::string edge_kind_name(EdgeKind k) {
  switch (k) {
    case EdgeKind::braid: return "braid";
    case EdgeKind::commutation: return "commutation";
    case EdgeKind::cover: return "cover";
  }
  throw std::logic_error("unknown edge kind");
}

EdgeKind edge_kind_from_name(const std::string& name) {
  if (name == "braid") return EdgeKind::braid;
  if (name == "commutation") return EdgeKind::commutation;
  if (name == "cover") return EdgeKind::cover;
  throw std::invalid_argument("unknown edge kind \"" + name + "\"");
}

void LabeledGraph::add_vertex(const std::string& key, std::string payload) {
  auto [it, inserted] = vertices_.emplace(key, std::move(payload));
  if (!inserted) throw std::invalid_argument("duplicate vertex \"" + key + "\"");
  adjacency_.emplace(key, std::set<std::string>{});
}

void LabeledGraph::add_edge(const std::string& a, const std::string& b, EdgeKind kind) {
  if (a == b) throw std::invalid_argument("self-loop on \"" + a + "\"");
  if (!has_vertex(a)) throw std::invalid_argument("unknown vertex \"" + a + "\"");
  if (!has_vertex(b)) throw std::invalid_argument("unknown vertex \"" + b + "\"");
  Edge e = a < b ? Edge{a, b} : Edge{b, a};
  auto [it, inserted] = edges_.emplace(std::move(e), kind);
  if (!inserted)
    throw std::invalid_argument("parallel edge between \"" + a + "\" and \"" + b + "\"");
  adjacency_[a].insert(b);
  adjacency_[b].insert(a);
}

bool LabeledGraph::has_vertex(const std::string& key) const {
  return vertices_.contains(key);
}

bool LabeledGraph::has_edge(const std::string& a, const std::string& b) const {
  return edges_.contains(a < b ? Edge{a, b} : Edge{b, a});
}

const std::set<std::string>& LabeledGraph::neighbors(const std::string& key) const {
  auto it = adjacency_.find(key);
  if (it == adjacency_.end()) throw std::invalid_argument("unknown vertex \"" + key + "\"");
  return it->second;
}

std::size_t LabeledGraph::degree(const std::string& key) const {
  return neighbors(key).size();
}

bool operator==(const LabeledGraph& a, const LabeledGraph& b) {
  return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
}

IntPolynomial degree_histogram(const LabeledGraph& g) {
  std::vector<std::int64_t> hist;
  for (const auto& [key, payload] : g.vertices()) {
    const std::size_t d = g.degree(key);
    if (hist.size() <= d) hist.resize(d + 1, 0);
    ++hist[d];
  }
  return IntPolynomial{std::move(hist)};
}

std::int64_t degree_sum(const LabeledGraph& g) {
  return 2 * static_cast<std::int64_t>(g.size());
}

std::int64_t count_4cycles(const LabeledGraph& g) {
  // Each 4-cycle is counted once per diagonal pair, i.e. twice in total.
  std::int64_t twice = 0;
  for (auto u = g.vertices().begin(); u != g.vertices().end(); ++u) {
    for (auto v = std::next(u); v != g.vertices().end(); ++v) {
      std::int64_t common = 0;
      const auto& nu = g.neighbors(u->first);
      for (const auto& x : g.neighbors(v->first))
        if (nu.contains(x)) ++common;
      twice = checked_add(twice, common * (common - 1) / 2);
    }
  }
  return twice / 2;
}

bool is_connected(const LabeledGraph& g) {
  if (g.order() <= 1) return true;
  std::set<std::string> seen;
  std::queue<std::string> todo;
  todo.push(g.vertices().begin()->first);
  seen.insert(g.vertices().begin()->first);
  while (!todo.empty()) {
    const std::string v = todo.front();
    todo.pop();
    for (const auto& w : g.neighbors(v))
      if (seen.insert(w).second) todo.push(w);
  }
  return seen.size() == g.order();
}

bool is_bipartite(const LabeledGraph& g) {
  std::map<std::string, int> color;
  for (const auto& [start, payload] : g.vertices()) {
    if (color.contains(start)) continue;
    color[start] = 0;
    std::queue<std::string> todo;
    todo.push(start);
    while (!todo.empty()) {
      const std::string v = todo.front();
      todo.pop();
      for (const auto& w : g.neighbors(v)) {
        auto it = color.find(w);
        if (it == color.end()) {
          color[w] = 1 - color[v];
          todo.push(w);
        } else if (it->second == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool verify_isomorphism(const LabeledGraph& g, const LabeledGraph& h,
                        const std::map<std::string, std::string>& map) {
  if (map.size() != g.order() || g.order() != h.order())
    throw std::invalid_argument("vertex map is not a bijection");
  std::set<std::string> image;
  for (const auto& [from, to] : map) {
    if (!g.has_vertex(from) || !h.has_vertex(to))
      throw std::invalid_argument("vertex map is not a bijection");
    if (!image.insert(to).second)
      throw std::invalid_argument("vertex map is not a bijection");
  }
  if (g.size() != h.size()) return false;
  for (const auto& [edge, kind] : g.edges())
    if (!h.has_edge(map.at(edge.first), map.at(edge.second))) return false;
  return true;
}

namespace {

struct IsoSearch {
  const LabeledGraph& g;
  const LabeledGraph& h;
  std::vector<std::string> gv;                   // g vertices in assignment order
  std::map<std::string, std::string> assigned;   // g key -> h key
  std::set<std::string> used;                    // h keys already taken

  bool consistent(const std::string& gu, const std::string& hu) const {
    if (g.degree(gu) != h.degree(hu)) return false;
    for (const auto& [gv_key, hv_key] : assigned)
      if (g.has_edge(gu, gv_key) != h.has_edge(hu, hv_key)) return false;
    return true;
  }

  bool extend(std::size_t idx) {
    if (idx == gv.size()) return true;
    const std::string& gu = gv[idx];
    for (const auto& [hu, payload] : h.vertices()) {
      if (used.contains(hu) || !consistent(gu, hu)) continue;
      assigned[gu] = hu;
      used.insert(hu);
      if (extend(idx + 1)) return true;
      assigned.erase(gu);
      used.erase(hu);
    }
    return false;
  }
};

}  // namespace

std::optional<std::map<std::string, std::string>> brute_isomorphic(
    const LabeledGraph& g, const LabeledGraph& h, std::size_t max_vertices) {
  if (g.order() > max_vertices || h.order() > max_vertices)
    throw BudgetError("graph too large for brute isomorphism search (bound " +
                      std::to_string(max_vertices) + ")");
  if (g.order() != h.order() || g.size() != h.size()) return std::nullopt;

  auto degree_multiset = [](const LabeledGraph& x) {
    std::vector<std::size_t> d;
    for (const auto& [key, payload] : x.vertices()) d.push_back(x.degree(key));
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degree_multiset(g) != degree_multiset(h)) return std::nullopt;

  IsoSearch search{g, h, {}, {}, {}};
  for (const auto& [key, payload] : g.vertices()) search.gv.push_back(key);
  // Assign high-degree vertices first; prefix adjacency checks prune sooner.
  std::stable_sort(search.gv.begin(), search.gv.end(),
                   [&](const std::string& a, const std::string& b) {
                     return g.degree(a) > g.degree(b);
                   });
  if (search.extend(0)) return search.assigned;
  return std::nullopt;
}

std::string to_dot(const LabeledGraph& g) {
  std::ostringstream out;
  out << "graph {\n";
  for (const auto& [key, payload] : g.vertices()) {
    out << "  \"" << key << "\"";
    if (!payload.empty()) out << " [label=\"" << payload << "\"]";
    out << ";\n";
  }
  for (const auto& [edge, kind] : g.edges())
    out << "  \"" << edge.first << "\" -- \"" << edge.second << "\" [label=\""
        << edge_kind_name(kind) << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string to_json(const LabeledGraph& g) {
  nlohmann::ordered_json doc;
  doc["vertices"] = nlohmann::ordered_json::array();
  for (const auto& [key, payload] : g.vertices()) {
    nlohmann::ordered_json v;
    v["id"] = key;
    if (!payload.empty()) v["payload"] = payload;
    doc["vertices"].push_back(std::move(v));
  }
  doc["edges"] = nlohmann::ordered_json::array();
  for (const auto& [edge, kind] : g.edges()) {
    nlohmann::ordered_json e;
    e["source"] = edge.first;
    e["target"] = edge.second;
    e["kind"] = edge_kind_name(kind);
    doc["edges"].push_back(std::move(e));
  }
  return doc.dump(2) + "\n";
}

LabeledGraph graph_from_json(const std::string& text) {
  const auto doc = nlohmann::json::parse(text);
  LabeledGraph g;
  for (const auto& v : doc.at("vertices"))
    g.add_vertex(v.at("id").get<std::string>(),
                 v.contains("payload") ? v.at("payload").get<std::string>() : "");
  for (const auto& e : doc.at("edges"))
    g.add_edge(e.at("source").get<std::string>(), e.at("target").get<std::string>(),
               edge_kind_from_name(e.at("kind").get<std::string>()));
  return g;
}

}  // namespace redwords
