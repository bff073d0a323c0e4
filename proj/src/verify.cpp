#include "redwords/verify.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "redwords/checked.hpp"
#include "redwords/family.hpp"
#include "redwords/graph.hpp"
#include "redwords/iso.hpp"
#include "redwords/perm.hpp"
#include "redwords/poly.hpp"
#include "redwords/simplex.hpp"
#include "redwords/tableaux.hpp"

namespace redwords {

namespace {

struct Check {
  std::string description;
  std::function<bool(std::string&)> run;  // may append a reason on failure
};

std::vector<std::string> keys_of(const std::vector<Word>& words, int n) {
  std::vector<std::string> out;
  for (const Word& w : words) out.push_back(word_key(w, n));
  return out;
}

bool exact_word_sets(std::string& why) {
  const std::vector<std::string> expect_35124 = {"21432", "24132", "24312", "42132",
                                                 "42312"};
  const std::vector<std::string> expect_4231 = {"12321", "13213", "13231",
                                                "31213", "31231", "32123"};
  if (keys_of(enumerate_reduced_words(Permutation::parse("35124")), 5) != expect_35124) {
    why = "R(35124) differs";
    return false;
  }
  if (keys_of(enumerate_reduced_words(Permutation::parse("4231")), 4) != expect_4231) {
    why = "R(4231) differs";
    return false;
  }
  return true;
}

bool big_enumeration(const VerifyOptions& opts, std::string& why) {
  const auto words = enumerate_reduced_words(Permutation::parse("654231"), opts.budget);
  if (words.size() != 64064) {
    why = "|R(654231)| = " + std::to_string(words.size());
    return false;
  }
  return true;
}

bool order_formula(const VerifyOptions& opts, std::string& why) {
  for (int n = 4; n <= opts.max_n; ++n) {
    const auto words = enumerate_reduced_words(family_permutation(n), opts.budget);
    if (static_cast<std::int64_t>(words.size()) != predicted_order(n)) {
      why = "n = " + std::to_string(n);
      return false;
    }
  }
  return true;
}

bool degree_data(const VerifyOptions& opts, std::string& why) {
  for (int n = 4; n <= opts.max_n; ++n) {
    const LabeledGraph g = build_word_graph(family_permutation(n), opts.budget);
    if (degree_histogram(g) != predicted_degree_polynomial(n)) {
      why = "degree histogram at n = " + std::to_string(n);
      return false;
    }
    if (degree_sum(g) != 4 * binomial(n - 1, 2)) {
      why = "degree sum at n = " + std::to_string(n);
      return false;
    }
    if (n <= std::max(4, opts.max_n - 1) &&
        count_4cycles(g) != binomial(n - 2, 2)) {
      why = "4-cycle count at n = " + std::to_string(n);
      return false;
    }
  }
  return true;
}

bool series_audit(std::string& why) {
  const SeriesReport rep = generating_series_check(12);
  if (!rep.termwise_matches) {
    why = "closed form disagrees with a predicted polynomial beyond z^3";
    return false;
  }
  const IntPolynomial two_d2{{0, 0, 2}};
  for (int t = 0; t <= rep.max_n; ++t) {
    const IntPolynomial& d = rep.difference[t];
    if (t == 3 ? d != two_d2 : !d.is_zero()) {
      why = "difference is not exactly 2d^2 z^3";
      return false;
    }
  }
  return true;
}

bool bijection_suite(const VerifyOptions& opts, std::string& why) {
  const std::vector<std::pair<std::string, std::string>> anchors = {
      {"234321", "345|2|1"}, {"432134", "123|5|4"}, {"423241", "135|4|2"}};
  for (const auto& [word_text, tab_text] : anchors) {
    const Word a = parse_word(word_text, 5);
    const HookTableau t = word_to_tableau(a);
    if (t.to_string() != tab_text) {
      why = word_text + " -> " + t.to_string();
      return false;
    }
    if (tableau_to_word(t, opts.budget) != a) {
      why = "inverse of " + tab_text + " differs";
      return false;
    }
  }
  for (int n = 4; n <= opts.max_n; ++n) {
    std::set<std::string> image;
    const auto words = enumerate_reduced_words(family_permutation(n), opts.budget);
    for (const Word& a : words) {
      const HookTableau t = word_to_tableau(a);
      if (!image.insert(t.to_string()).second) {
        why = "not injective at n = " + std::to_string(n);
        return false;
      }
      if (tableau_to_word(t, opts.budget) != a) {
        why = "round trip failed at n = " + std::to_string(n);
        return false;
      }
    }
    std::set<std::string> codomain;
    for (const HookTableau& t : enumerate_recording(n)) codomain.insert(t.to_string());
    if (image != codomain) {
      why = "image differs from the recording tableaux at n = " + std::to_string(n);
      return false;
    }
  }
  return true;
}

bool poset_suite(const VerifyOptions& opts, std::string& why) {
  for (int n = 4; n <= std::min(7, opts.max_n); ++n) {
    const auto ts = enumerate_recording(n);
    for (const HookTableau& a : ts)
      for (const HookTableau& b : ts)
        if (tableau_covers(a, b) != tableau_covers_by_length(a, b)) {
          why = "cover criteria disagree at n = " + std::to_string(n);
          return false;
        }
  }
  for (int n = 4; n <= opts.max_n; ++n) {
    const auto ts = enumerate_recording(n);
    std::vector<std::int64_t> rank_hist(2 * (n - 2) + 1, 0);
    const HookTableau *min_tab = nullptr, *max_tab = nullptr;
    for (const HookTableau& t : ts) {
      const int r = tableau_rank(t);
      if (r < 0 || r > 2 * (n - 2)) {
        why = "rank out of range at n = " + std::to_string(n);
        return false;
      }
      ++rank_hist[r];
      if (r == 0) min_tab = &t;
      if (r == 2 * (n - 2)) max_tab = &t;
    }
    if (rank_hist.front() != 1 || rank_hist.back() != 1 || !min_tab || !max_tab) {
      why = "extremes not unique at n = " + std::to_string(n);
      return false;
    }
    std::vector<int> max_expected{n - 1, n};
    for (int v = 1; v <= n - 2; ++v) max_expected.push_back(v);
    if (row_reading(*min_tab) != Permutation::identity(n) ||
        row_reading(*max_tab) != Permutation{max_expected}) {
      why = "extreme readings differ at n = " + std::to_string(n);
      return false;
    }
    if (IntPolynomial{std::move(rank_hist)} != gaussian_binomial_n2(n)) {
      why = "rank polynomial differs at n = " + std::to_string(n);
      return false;
    }
  }
  return true;
}

bool simplex_suite(std::string& why) {
  for (int k = 0; k <= 10; ++k) {
    std::int64_t brute = 0;
    for (int a1 = 0; a1 <= k; ++a1)
      for (int a2 = 0; a2 <= k; ++a2)
        if (a1 + a2 <= k) ++brute;
    if (ehrhart(k) != brute ||
        brute != static_cast<std::int64_t>(enumerate_lattice_points(k).size())) {
      why = "Ehrhart count at k = " + std::to_string(k);
      return false;
    }
    const IntPolynomial gauss = gaussian_binomial_k2(k);  // slices vs algebraic inside
    if (gauss.coeffs() != slice_counts(k) || gauss != gaussian_binomial_n2(k + 2)) {
      why = "Gaussian binomial at k = " + std::to_string(k);
      return false;
    }
    if (!lattice_length_check(k)) {
      why = "length vs weight at k = " + std::to_string(k);
      return false;
    }
    if (!lattice_rank_check(k)) {
      why = "grading at k = " + std::to_string(k);
      return false;
    }
  }
  if (!product_expansion_check(10)) {
    why = "product expansion";
    return false;
  }
  const std::set<std::pair<std::string, std::string>> fig_edges = {
      {"(0,0)", "(1,0)"}, {"(1,0)", "(2,0)"}, {"(2,0)", "(3,0)"},
      {"(0,1)", "(1,1)"}, {"(1,1)", "(2,1)"}, {"(0,2)", "(1,2)"},
      {"(0,1)", "(1,0)"}, {"(0,2)", "(1,1)"}, {"(0,3)", "(1,2)"},
      {"(1,1)", "(2,0)"}, {"(1,2)", "(2,1)"}, {"(2,1)", "(3,0)"}};
  std::set<std::pair<std::string, std::string>> got;
  const LabeledGraph g3 = build_lattice_graph(3);
  for (const auto& [edge, kind] : g3.edges()) got.insert(edge);
  if (got != fig_edges) {
    why = "dilation-3 adjacency differs";
    return false;
  }
  return true;
}

bool chain_suite(const VerifyOptions& opts, std::string& why) {
  for (int n = 4; n <= std::min(8, opts.max_n); ++n) {
    if (!isomorphism_chain(n, opts.budget).all_verified) {
      why = "chain link failed at n = " + std::to_string(n);
      return false;
    }
  }
  for (int n = 4; n <= std::min(6, opts.max_n); ++n) {
    const LabeledGraph words = build_word_graph(family_permutation(n), opts.budget);
    const LabeledGraph lattice = build_lattice_graph(n - 2);
    if (!brute_isomorphic(words, lattice, 16).has_value()) {
      why = "search oracle found no isomorphism at n = " + std::to_string(n);
      return false;
    }
  }
  // Reference triple of aligned sets at k = 3.
  const std::vector<std::string> points = {"(0,3)", "(1,2)", "(0,2)", "(2,1)", "(1,1)",
                                           "(3,0)", "(0,1)", "(2,0)", "(1,0)", "(0,0)"};
  const std::vector<std::string> partitions = {"(3,3)", "(3,2)", "(2,2)", "(3,1)", "(2,1)",
                                               "(3)",   "(1,1)", "(2)",   "(1)",   "()"};
  const std::vector<std::string> grassmannians = {"45123", "35124", "34125", "25134",
                                                  "24135", "15234", "23145", "14235",
                                                  "13245", "12345"};
  std::set<std::string> point_keys, partition_keys, reading_keys;
  for (const LatticePoint& p : enumerate_lattice_points(3)) {
    point_keys.insert(p.to_string());
    partition_keys.insert(fitted_partition(p).to_string());
    reading_keys.insert(grassmannian_from_partition(fitted_partition(p), 5).to_string());
  }
  if (point_keys != std::set<std::string>(points.begin(), points.end()) ||
      partition_keys != std::set<std::string>(partitions.begin(), partitions.end()) ||
      reading_keys != std::set<std::string>(grassmannians.begin(), grassmannians.end())) {
    why = "reference sets differ";
    return false;
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::istringstream in(points[i].substr(1, points[i].size() - 2));
    int a1, a2;
    char comma;
    in >> a1 >> comma >> a2;
    const LatticePoint p = make_lattice_point(a1, a2, 3);
    const Partition lam = fitted_partition(p);
    if (lam.to_string() != partitions[i] ||
        grassmannian_from_partition(lam, 5).to_string() != grassmannians[i]) {
      why = "alignment differs at position " + std::to_string(i);
      return false;
    }
  }
  return true;
}

bool braid_counts(const VerifyOptions& opts, std::string& why) {
  for (int n = 4; n <= opts.max_n; ++n) {
    if (braid_vertex_count(n, opts.budget) != 2 * (n - 2)) {
      why = "n = " + std::to_string(n);
      return false;
    }
  }
  return true;
}

bool background_checks(const VerifyOptions& opts, std::string& why) {
  if (poincare_polynomial(4) != IntPolynomial{{1, 3, 5, 6, 5, 3, 1}}) {
    why = "Poincare polynomial of S_4";
    return false;
  }
  for (int n = 1; n <= 6; ++n) {
    std::vector<std::int64_t> hist(n * (n - 1) / 2 + 1, 0);
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i + 1;
    do {
      ++hist[length(Permutation{v})];
    } while (std::next_permutation(v.begin(), v.end()));
    if (IntPolynomial{std::move(hist)} != poincare_polynomial(n)) {
      why = "length histogram at n = " + std::to_string(n);
      return false;
    }
  }
  const std::map<int, std::int64_t> staircase = {{3, 2}, {4, 16}, {5, 768}};
  for (const auto& [n, expected] : staircase) {
    const auto words =
        enumerate_reduced_words(Permutation::longest_element(n), opts.budget);
    if (r_longest(n) != expected ||
        static_cast<std::int64_t>(words.size()) != expected) {
      why = "longest-element words at n = " + std::to_string(n);
      return false;
    }
  }
  for (int n = 4; n <= 20; ++n) {
    const Permutation w = family_permutation(n);
    std::vector<int> hook{n - 2, 1, 1};
    if (length(w) != n + 1 || cycle_type(w) != make_partition(hook) ||
        fixed_points(w) != std::set<int>{n - 2, n - 1} ||
        descent_set(w) != std::set<int>{1, n - 1} ||
        length(w) + length(reverse(w)) != binomial(n, 2)) {
      why = "family properties at n = " + std::to_string(n);
      return false;
    }
  }
  return true;
}

}  // namespace

bool run_verification(const VerifyOptions& opts, std::ostream& out) {
  const std::string span = "4.." + std::to_string(opts.max_n);
  const std::vector<Check> checks = {
      {"exact reduced-word sets for 35124 and 4231",
       [](std::string& why) { return exact_word_sets(why); }},
      {"|R(654231)| = 64064 by enumeration",
       [&](std::string& why) { return big_enumeration(opts, why); }},
      {"|R(w)| = n(n-1)/2 for the family, n = " + span,
       [&](std::string& why) { return order_formula(opts, why); }},
      {"degree histograms, degree sums and 4-cycle counts, n = " + span,
       [&](std::string& why) { return degree_data(opts, why); }},
      {"generating series match for n = 4..12 up to the 2d^2 z^3 discrepancy",
       [](std::string& why) { return series_audit(why); }},
      {"word/tableau bijection with anchor pairs, n = " + span,
       [&](std::string& why) { return bijection_suite(opts, why); }},
      {"tableau poset covers, extremes and rank polynomials, n = " + span,
       [&](std::string& why) { return poset_suite(opts, why); }},
      {"simplex counts, Gaussian binomials, expansions and adjacency, k = 0..10",
       [](std::string& why) { return simplex_suite(why); }},
      {"isomorphism chain links, search oracle, k = 3 reference sets",
       [&](std::string& why) { return chain_suite(opts, why); }},
      {"braid-vertex count equals 2(n-2), n = " + span,
       [&](std::string& why) { return braid_counts(opts, why); }},
      {"Poincare polynomials, staircase word counts, family properties",
       [&](std::string& why) { return background_checks(opts, why); }},
  };

  bool all = true;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    std::string why;
    bool ok = false;
    try {
      ok = checks[i].run(why);
    } catch (const std::exception& e) {
      why = e.what();
    }
    out << "[" << std::setw(2) << i + 1 << "] " << (ok ? "PASS" : "FAIL") << "  "
        << checks[i].description;
    if (!ok && !why.empty()) out << " (" << why << ")";
    out << "\n";
    all = all && ok;
  }
  out << "verify: " << (all ? "all criteria passed" : "FAILURES detected") << "\n";
  return all;
}

}  // namespace redwords
