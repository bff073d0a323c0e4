#include "redwords/words.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

#include "redwords/checked.hpp"

namespace redwords {

namespace {

void check_letters(const Word& word, int n) {
  if (n < 1) throw std::invalid_argument("ambient rank must be >= 1");
  for (int a : word)
    if (a < 1 || a >= n)
      throw std::invalid_argument("letter " + std::to_string(a) + " is outside 1.." +
                                  std::to_string(n - 1));
}

bool word_key_less(const Word& a, const Word& b, int n) {
  if (n <= 10) return a < b;
  return word_key(a, n) < word_key(b, n);
}

}  // namespace

std::string word_key(const Word& word, int n) {
  std::ostringstream out;
  const bool digits = n <= 10;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i && !digits) out << "-";
    out << word[i];
  }
  return out.str();
}

Word parse_word(const std::string& text, int n) {
  Word word;
  if (n <= 10) {
    for (char c : text) {
      if (c < '1' || c > '9')
        throw std::invalid_argument(std::string("bad character '") + c + "' in word \"" +
                                    text + "\"");
      word.push_back(c - '0');
    }
  } else {
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, '-')) word.push_back(std::stoi(tok));
  }
  check_letters(word, n);
  return word;
}

Permutation evaluate(const Word& word, int n) {
  check_letters(word, n);
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  for (int a : word) std::swap(v[a - 1], v[a]);  // right-multiply by s_a
  return Permutation{std::move(v)};
}

bool is_reduced(const Word& word, int n) {
  check_letters(word, n);
  for (std::size_t i = 0; i + 1 < word.size(); ++i)
    if (word[i] == word[i + 1]) return false;  // s_i s_i = e, never reduced
  return length(evaluate(word, n)) == static_cast<int>(word.size());
}

std::set<int> word_descents(const Word& word) {
  std::set<int> out;
  for (std::size_t j = 0; j + 1 < word.size(); ++j)
    if (word[j] > word[j + 1]) out.insert(static_cast<int>(j) + 1);
  return out;
}

std::set<int> word_ascents(const Word& word) {
  std::set<int> out;
  for (std::size_t j = 0; j + 1 < word.size(); ++j)
    if (word[j] < word[j + 1]) out.insert(static_cast<int>(j) + 1);
  return out;
}

std::vector<Move> move_neighbors(const Word& word, int n) {
  if (!is_reduced(word, n))
    throw std::invalid_argument("move_neighbors requires a reduced word");
  std::vector<Move> out;
  for (std::size_t i = 0; i + 1 < word.size(); ++i) {
    if (std::abs(word[i] - word[i + 1]) > 1) {
      Word nb = word;
      std::swap(nb[i], nb[i + 1]);
      out.push_back({std::move(nb), EdgeKind::commutation});
    }
  }
  for (std::size_t i = 0; i + 2 < word.size(); ++i) {
    if (word[i] == word[i + 2] && std::abs(word[i] - word[i + 1]) == 1) {
      Word nb = word;  // aba -> bab
      std::swap(nb[i], nb[i + 1]);
      nb[i + 2] = nb[i];
      out.push_back({std::move(nb), EdgeKind::braid});
    }
  }
  std::sort(out.begin(), out.end(), [n](const Move& a, const Move& b) {
    return word_key_less(a.word, b.word, n);
  });
  return out;
}

WordEnumerator::WordEnumerator(std::size_t budget) : budget_(budget) {}

const std::vector<Word>& WordEnumerator::words(const Permutation& w) {
  auto it = words_memo_.find(w.one_line());
  if (it != words_memo_.end()) return it->second;

  std::vector<Word> result;
  if (length(w) == 0) {
    result.push_back({});
  } else {
    for (int i : descent_set(w)) {
      std::vector<int> v = w.one_line();
      std::swap(v[i - 1], v[i]);
      const std::vector<Word>& sub = words(Permutation{std::move(v)});
      for (const Word& u : sub) {
        if (result.size() >= budget_)
          throw BudgetError("reduced-word budget of " + std::to_string(budget_) +
                            " exceeded");
        Word extended = u;
        extended.push_back(i);
        result.push_back(std::move(extended));
      }
    }
  }
  const int n = w.n();
  std::sort(result.begin(), result.end(),
            [n](const Word& a, const Word& b) { return word_key_less(a, b, n); });
  return words_memo_.emplace(w.one_line(), std::move(result)).first->second;
}

std::int64_t WordEnumerator::count(const Permutation& w) {
  auto it = count_memo_.find(w.one_line());
  if (it != count_memo_.end()) return it->second;
  std::int64_t total = 0;
  if (length(w) == 0) {
    total = 1;
  } else {
    for (int i : descent_set(w)) {
      std::vector<int> v = w.one_line();
      std::swap(v[i - 1], v[i]);
      total = checked_add(total, count(Permutation{std::move(v)}));
    }
  }
  if (total > static_cast<std::int64_t>(budget_))
    throw BudgetError("reduced-word budget of " + std::to_string(budget_) + " exceeded");
  count_memo_.emplace(w.one_line(), total);
  return total;
}

std::vector<Word> enumerate_reduced_words(const Permutation& w, std::size_t budget) {
  WordEnumerator e(budget);
  return e.words(w);
}

std::int64_t count_reduced_words(const Permutation& w, std::size_t budget) {
  WordEnumerator e(budget);
  return e.count(w);
}

std::vector<Word> reduced_words_by_moves(const Word& seed, int n, std::size_t budget) {
  if (!is_reduced(seed, n))
    throw std::invalid_argument("reduced_words_by_moves requires a reduced seed word");
  std::set<Word> seen{seed};
  std::deque<Word> todo{seed};
  while (!todo.empty()) {
    const Word v = todo.front();
    todo.pop_front();
    for (const Move& m : move_neighbors(v, n)) {
      if (seen.insert(m.word).second) {
        if (seen.size() > budget)
          throw BudgetError("reduced-word budget of " + std::to_string(budget) +
                            " exceeded in move closure");
        todo.push_back(m.word);
      }
    }
  }
  std::vector<Word> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(),
            [n](const Word& a, const Word& b) { return word_key_less(a, b, n); });
  return out;
}

LabeledGraph build_word_graph(const Permutation& w, std::size_t budget) {
  const std::vector<Word> words = enumerate_reduced_words(w, budget);
  const int n = w.n();
  LabeledGraph g;
  for (const Word& v : words) g.add_vertex(word_key(v, n));
  for (const Word& v : words) {
    const std::string vk = word_key(v, n);
    for (const Move& m : move_neighbors(v, n)) {
      const std::string nk = word_key(m.word, n);
      if (!g.has_vertex(nk))
        throw std::logic_error("move produced a word outside R(w): " + nk);
      if (vk < nk) g.add_edge(vk, nk, m.kind);
    }
  }
  return g;
}

std::int64_t r_longest(int n) {
  if (n < 2) throw std::invalid_argument("r_longest requires n >= 2");
  const int top = n * (n - 1) / 2;

  // Exponent vector of C(n,2)! / prod_j (2j-1)^(n-j) over the primes <= C(n,2).
  std::vector<int> exponent(top + 1, 0);
  std::vector<bool> composite(top + 1, false);
  for (int p = 2; p <= top; ++p) {
    if (composite[p]) continue;
    for (int m = 2 * p; m <= top; m += p) composite[m] = true;
    for (std::int64_t q = p; q <= top; q = checked_mul(q, p))
      exponent[p] += top / static_cast<int>(q);
  }
  for (int j = 1; j < n; ++j) {
    int base = 2 * j - 1;
    for (int p = 2; p <= base; ++p) {
      while (base % p == 0) {
        exponent[p] -= n - j;
        base /= p;
      }
    }
  }
  std::int64_t result = 1;
  for (int p = 2; p <= top; ++p) {
    if (exponent[p] < 0)
      throw std::logic_error("nonintegral value in r_longest");
    for (int e = 0; e < exponent[p]; ++e) result = checked_mul(result, p);
  }
  return result;
}

}  // namespace redwords
