#ifndef REDWORDS_WORDS_HPP
#define REDWORDS_WORDS_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "redwords/graph.hpp"
#include "redwords/perm.hpp"

namespace redwords {

// A word is a sequence of simple-transposition indices in 1..n-1; it is
// reduced when its letter count equals the length of the permutation it
// multiplies out to.
using Word = std::vector<int>;

inline constexpr std::size_t kDefaultWordBudget = 1'000'000;

// Digit string for n <= 10 (letters are single digits), e.g. "432134";
// dash-separated past that.
std::string word_key(const Word& word, int n);
Word parse_word(const std::string& text, int n);

// Product s_{a_1} s_{a_2} ... s_{a_p} evaluated left to right.
Permutation evaluate(const Word& word, int n);
bool is_reduced(const Word& word, int n);

// Positions j in 1..p-1 with a_j > a_{j+1} (descents) or a_j < a_{j+1}
// (ascents); in a reduced word the two sets partition 1..p-1.
std::set<int> word_descents(const Word& word);
std::set<int> word_ascents(const Word& word);

struct Move {
  Word word;
  EdgeKind kind;  // braid or commutation
  friend bool operator==(const Move& a, const Move& b) = default;
};

// All words one commutation swap (|a-b| > 1) or one braid replacement
// (aba <-> bab, |a-b| = 1) away. Requires a reduced word; every neighbor is
// again reduced and evaluates to the same permutation. Sorted by key.
std::vector<Move> move_neighbors(const Word& word, int n);

// Memoized enumeration by descent recursion:
//   R(w) = union over i in Des(w) of { u.i : u in R(w s_i) }.
// Instances are independent; share one across calls to reuse the memo.
class WordEnumerator {
 public:
  explicit WordEnumerator(std::size_t budget = kDefaultWordBudget);
  // R(w) sorted lexicographically by key.
  const std::vector<Word>& words(const Permutation& w);
  // |R(w)| without materializing the words.
  std::int64_t count(const Permutation& w);

 private:
  std::size_t budget_;
  std::map<std::vector<int>, std::vector<Word>> words_memo_;
  std::map<std::vector<int>, std::int64_t> count_memo_;
};

std::vector<Word> enumerate_reduced_words(const Permutation& w,
                                          std::size_t budget = kDefaultWordBudget);
std::int64_t count_reduced_words(const Permutation& w,
                                 std::size_t budget = kDefaultWordBudget);

// Independent enumeration route: breadth-first closure of one reduced word
// under single moves. Agrees with the descent recursion on every input; the
// test suite holds the two routes against each other.
std::vector<Word> reduced_words_by_moves(const Word& seed, int n,
                                         std::size_t budget = kDefaultWordBudget);

// Graph on R(w): one vertex per reduced word keyed by word_key, one edge per
// single move, labeled braid or commutation.
LabeledGraph build_word_graph(const Permutation& w,
                              std::size_t budget = kDefaultWordBudget);

// Number of reduced words of the longest element of S_n:
//   C(n,2)! / (1^{n-1} 3^{n-2} 5^{n-3} ... (2n-3)^1)
// computed exactly via prime factorization; throws OverflowError when the
// value leaves the int64 range (first at n = 9).
std::int64_t r_longest(int n);

}  // namespace redwords

#endif
