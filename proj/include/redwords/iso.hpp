#ifndef REDWORDS_ISO_HPP
#define REDWORDS_ISO_HPP

#include <map>
#include <string>
#include <vector>

#include "redwords/graph.hpp"
#include "redwords/words.hpp"

namespace redwords {

// One link of the chain: an explicit vertex bijection between consecutive
// graphs, checked edge-for-edge by verify_isomorphism.
struct ChainLink {
  std::string from;
  std::string to;
  std::map<std::string, std::string> map;
  bool verified = false;
};

// The five graphs attached to the family permutation of S_n with k = n-2:
// the reduced-word graph, the recording-tableau Hasse diagram, the
// row-reading Hasse diagram, Young's lattice in the k x 2 rectangle, and the
// lattice graph of the k-fold dilated 2-simplex — plus the four explicit
// maps joining them:
//   word -> recording tableau (descent/ascent positions),
//   tableau -> row reading,
//   reading -> partition (non-increasing nonzero Lehmer code entries),
//   partition -> lattice point (inverse fitted map).
struct ChainReport {
  int n = 0;
  std::vector<std::pair<std::string, LabeledGraph>> graphs;
  std::vector<ChainLink> links;
  bool all_verified = false;
};

ChainReport isomorphism_chain(int n, std::size_t budget = kDefaultWordBudget);

// Human-readable summary: per-graph order, size and degree histogram, then
// one line per link.
std::string chain_report_text(const ChainReport& report);

// {"n":..., "links":[{"from":..., "to":..., "verified":..., "map":{...}}]}
std::string chain_maps_json(const ChainReport& report);

}  // namespace redwords

#endif
