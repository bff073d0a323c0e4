#include "redwords/iso.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "redwords/family.hpp"
#include "redwords/partition.hpp"
#include "redwords/perm.hpp"
#include "redwords/simplex.hpp"
#include "redwords/tableaux.hpp"

namespace redwords {

namespace {

Partition lehmer_partition(const Permutation& w) {
  std::vector<int> nonzero;
  for (int c : lehmer_code(w))
    if (c != 0) nonzero.push_back(c);
  std::sort(nonzero.begin(), nonzero.end(), std::greater<>());
  return make_partition(std::move(nonzero));
}

}  // namespace

ChainReport isomorphism_chain(int n, std::size_t budget) {
  if (n < 4) throw std::invalid_argument("isomorphism_chain requires n >= 4");
  const int k = n - 2;

  ChainReport rep;
  rep.n = n;
  rep.graphs.emplace_back("words", build_word_graph(family_permutation(n), budget));
  rep.graphs.emplace_back("tableaux", build_tableau_hasse(n));
  rep.graphs.emplace_back("readings", build_reading_hasse(n));
  rep.graphs.emplace_back("partitions", young_lattice_rectangle(k));
  rep.graphs.emplace_back("lattice", build_lattice_graph(k));

  ChainLink words_to_tableaux{"words", "tableaux", {}, false};
  ChainLink tableaux_to_readings{"tableaux", "readings", {}, false};
  ChainLink readings_to_partitions{"readings", "partitions", {}, false};
  ChainLink partitions_to_lattice{"partitions", "lattice", {}, false};

  for (const Word& a : enumerate_reduced_words(family_permutation(n), budget)) {
    const HookTableau t = word_to_tableau(a);
    words_to_tableaux.map[word_key(a, n)] = t.to_string();
  }
  for (const HookTableau& t : enumerate_recording(n)) {
    const Permutation reading = row_reading(t);
    tableaux_to_readings.map[t.to_string()] = reading.to_string();
    const Partition lambda = lehmer_partition(reading);
    readings_to_partitions.map[reading.to_string()] = lambda.to_string();
    partitions_to_lattice.map[lambda.to_string()] =
        lattice_point_from_partition(lambda, k).to_string();
  }

  rep.links = {std::move(words_to_tableaux), std::move(tableaux_to_readings),
               std::move(readings_to_partitions), std::move(partitions_to_lattice)};

  rep.all_verified = true;
  for (std::size_t i = 0; i < rep.links.size(); ++i) {
    rep.links[i].verified = verify_isomorphism(rep.graphs[i].second,
                                               rep.graphs[i + 1].second, rep.links[i].map);
    if (!rep.links[i].verified) rep.all_verified = false;
  }
  return rep;
}

std::string chain_report_text(const ChainReport& report) {
  std::ostringstream out;
  out << "isomorphism chain n=" << report.n << " (k=" << report.n - 2 << ")\n";
  out << "graph       order  size  degree histogram\n";
  for (const auto& [name, g] : report.graphs) {
    out << name << std::string(12 - name.size(), ' ') << g.order() << "      "
        << g.size() << "     " << degree_histogram(g).to_string("d") << "\n";
  }
  for (const ChainLink& link : report.links)
    out << link.from << " -> " << link.to << ": "
        << (link.verified ? "verified" : "FAILED") << "\n";
  out << "chain " << (report.all_verified ? "verified" : "FAILED") << "\n";
  return out.str();
}

std::string chain_maps_json(const ChainReport& report) {
  nlohmann::ordered_json doc;
  doc["n"] = report.n;
  doc["links"] = nlohmann::ordered_json::array();
  for (const ChainLink& link : report.links) {
    nlohmann::ordered_json l;
    l["from"] = link.from;
    l["to"] = link.to;
    l["verified"] = link.verified;
    l["map"] = nlohmann::ordered_json::object();
    for (const auto& [a, b] : link.map) l["map"][a] = b;
    doc["links"].push_back(std::move(l));
  }
  return doc.dump(2) + "\n";
}

}  // namespace redwords
