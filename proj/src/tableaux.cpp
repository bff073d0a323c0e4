#include "redwords/tableaux.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "redwords/family.hpp"

namespace redwords {

std::string HookTableau::to_string() const {
  std::ostringstream out;
  const bool digits = n <= 9;
  for (std::size_t i = 0; i < first_row.size(); ++i) {
    if (i && !digits) out << ",";
    out << first_row[i];
  }
  out << "|" << box2 << "|" << box3;
  return out.str();
}

HookTableau make_hook_tableau(std::vector<int> first_row, int box2, int box3, int n) {
  if (n < 4) throw std::invalid_argument("hook tableau requires n >= 4");
  if (static_cast<int>(first_row.size()) != n - 2)
    throw std::invalid_argument("first row must have n-2 entries");
  std::vector<char> seen(n + 1, 0);
  auto use = [&](int v) {
    if (v < 1 || v > n)
      throw std::invalid_argument("entry " + std::to_string(v) + " is outside 1.." +
                                  std::to_string(n));
    if (seen[v])
      throw std::invalid_argument("entry " + std::to_string(v) + " is duplicated");
    seen[v] = 1;
  };
  for (int v : first_row) use(v);
  use(box2);
  use(box3);
  for (std::size_t i = 0; i + 1 < first_row.size(); ++i)
    if (first_row[i] >= first_row[i + 1])
      throw std::invalid_argument("first row must strictly increase");
  return HookTableau{std::move(first_row), box2, box3, n};
}

bool is_recording(const HookTableau& t) { return t.box2 > t.box3; }

std::vector<HookTableau> enumerate_rst(int n) {
  if (n < 4) throw std::invalid_argument("enumerate_rst requires n >= 4");
  std::vector<HookTableau> out;
  for (int box2 = 1; box2 <= n; ++box2) {
    for (int box3 = 1; box3 <= n; ++box3) {
      if (box2 == box3) continue;
      std::vector<int> row;
      for (int v = 1; v <= n; ++v)
        if (v != box2 && v != box3) row.push_back(v);
      out.push_back(HookTableau{std::move(row), box2, box3, n});
    }
  }
  std::sort(out.begin(), out.end(), [](const HookTableau& a, const HookTableau& b) {
    return a.to_string() < b.to_string();
  });
  return out;
}

std::vector<HookTableau> enumerate_recording(int n) {
  std::vector<HookTableau> out;
  for (HookTableau& t : enumerate_rst(n))
    if (is_recording(t)) out.push_back(std::move(t));
  return out;
}

HookTableau word_to_tableau(const Word& word) {
  const int n = static_cast<int>(word.size()) - 1;
  if (n < 4)
    throw std::invalid_argument("word is too short for any family permutation");
  if (evaluate(word, n) != family_permutation(n))
    throw std::invalid_argument("word does not reduce to the family permutation of S_" +
                                std::to_string(n));
  const std::set<int> des = word_descents(word);
  const std::set<int> asc = word_ascents(word);
  if (asc.size() != 2 || des.size() != static_cast<std::size_t>(n) - 2)
    throw std::logic_error("family word without 2 ascents and n-2 descents");
  std::vector<int> row(des.begin(), des.end());
  const int low = *asc.begin();
  const int high = *asc.rbegin();
  return make_hook_tableau(std::move(row), high, low, n);
}

Word tableau_to_word(const HookTableau& t, std::size_t budget) {
  if (!is_recording(t))
    throw std::invalid_argument("tableau is not recording: " + t.to_string());
  const std::set<int> want_desc(t.first_row.begin(), t.first_row.end());
  const std::set<int> want_asc{t.box2, t.box3};
  std::vector<Word> matches;
  for (const Word& a : enumerate_reduced_words(family_permutation(t.n), budget))
    if (word_descents(a) == want_desc && word_ascents(a) == want_asc)
      matches.push_back(a);
  if (matches.size() != 1)
    throw std::logic_error("tableau " + t.to_string() + " matched " +
                           std::to_string(matches.size()) +
                           " reduced words; expected exactly 1");
  return matches.front();
}

Permutation row_reading(const HookTableau& t) {
  std::vector<int> v;
  v.reserve(t.n);
  v.push_back(t.box3);
  v.push_back(t.box2);
  v.insert(v.end(), t.first_row.begin(), t.first_row.end());
  return Permutation{std::move(v)};
}

bool tableau_leq(const HookTableau& a, const HookTableau& b) {
  if (a.n != b.n) throw std::invalid_argument("tableau_leq: mismatched n");
  for (std::size_t i = 0; i < a.first_row.size(); ++i)
    if (a.first_row[i] < b.first_row[i]) return false;
  return a.box2 <= b.box2 && a.box3 <= b.box3;
}

bool tableau_covers(const HookTableau& a, const HookTableau& b) {
  if (a.n != b.n) throw std::invalid_argument("tableau_covers: mismatched n");
  if (a == b || !tableau_leq(a, b)) return false;
  for (const HookTableau& c : enumerate_recording(a.n))
    if (c != a && c != b && tableau_leq(a, c) && tableau_leq(c, b)) return false;
  return true;
}

bool tableau_covers_by_length(const HookTableau& a, const HookTableau& b) {
  if (a.n != b.n) throw std::invalid_argument("tableau_covers_by_length: mismatched n");
  if (a == b || !tableau_leq(a, b)) return false;
  return length(row_reading(b)) == length(row_reading(a)) + 1;
}

LabeledGraph build_tableau_hasse(int n) {
  const std::vector<HookTableau> ts = enumerate_recording(n);
  LabeledGraph g;
  for (const HookTableau& t : ts) g.add_vertex(t.to_string());
  for (const HookTableau& a : ts) {
    for (const HookTableau& b : ts) {
      const bool by_def = tableau_covers(a, b);
      if (by_def != tableau_covers_by_length(a, b))
        throw std::logic_error("cover criteria disagree on " + a.to_string() + " vs " +
                               b.to_string());
      if (by_def) g.add_edge(a.to_string(), b.to_string(), EdgeKind::cover);
    }
  }
  return g;
}

int tableau_rank(const HookTableau& t) { return length(row_reading(t)); }

Permutation grassmannian_from_partition(const Partition& lambda, int n) {
  if (lambda.parts.size() > 2)
    throw std::invalid_argument("partition " + lambda.to_string() +
                                " has more than two parts");
  if (lambda.part(1) > n - 2)
    throw std::invalid_argument("partition " + lambda.to_string() +
                                " does not fit the (n-2) x 2 rectangle for n = " +
                                std::to_string(n));
  const int w1 = 1 + lambda.part(2);
  const int w2 = 2 + lambda.part(1);
  std::vector<int> v{w1, w2};
  for (int x = 1; x <= n; ++x)
    if (x != w1 && x != w2) v.push_back(x);
  return Permutation{std::move(v)};
}

LabeledGraph build_reading_hasse(int n) {
  std::vector<Permutation> readings;
  for (const HookTableau& t : enumerate_recording(n))
    readings.push_back(row_reading(t));
  std::sort(readings.begin(), readings.end());

  auto strictly_below = [](const Permutation& u, const Permutation& w) {
    return u != w && bruhat_leq(u, w);
  };
  LabeledGraph g;
  for (const Permutation& w : readings) g.add_vertex(w.to_string());
  for (const Permutation& u : readings) {
    for (const Permutation& w : readings) {
      if (!strictly_below(u, w)) continue;
      bool cover = true;
      for (const Permutation& v : readings)
        if (strictly_below(u, v) && strictly_below(v, w)) {
          cover = false;
          break;
        }
      if (cover) g.add_edge(u.to_string(), w.to_string(), EdgeKind::cover);
    }
  }
  return g;
}

}  // namespace redwords
