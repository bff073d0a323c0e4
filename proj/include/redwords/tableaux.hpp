#ifndef REDWORDS_TABLEAUX_HPP
#define REDWORDS_TABLEAUX_HPP

#include <string>
#include <vector>

#include "redwords/graph.hpp"
#include "redwords/partition.hpp"
#include "redwords/perm.hpp"
#include "redwords/words.hpp"

namespace redwords {

// Row-strict filling of the hook shape (n-2,1,1) with 1..n: first_row is
// strictly increasing, box2 sits alone in row 2 and box3 in row 3. The
// filling is "recording" when box2 > box3 (the column below the first row
// strictly decreases downward).
struct HookTableau {
  std::vector<int> first_row;
  int box2 = 0;
  int box3 = 0;
  int n = 0;

  // "345|2|1"; comma-separated first row once values pass one digit.
  std::string to_string() const;

  friend bool operator==(const HookTableau& a, const HookTableau& b) = default;
};

// Validates the filling: a bijective use of 1..n with strictly increasing
// first row of size n-2. Throws std::invalid_argument with a diagnostic.
HookTableau make_hook_tableau(std::vector<int> first_row, int box2, int box3, int n);

bool is_recording(const HookTableau& t);

// All n(n-1) row-strict hook fillings, sorted by serialization.
std::vector<HookTableau> enumerate_rst(int n);
// The n(n-1)/2 recording ones.
std::vector<HookTableau> enumerate_recording(int n);

// Reads the descent positions of a reduced word of the family permutation
// into the first row and its two ascent positions into the column, larger
// ascent in row 2. The word must multiply out to family_permutation(n) with
// n = |word| - 1.
HookTableau word_to_tableau(const Word& word);

// Inverse direction: the unique word in R(family_permutation(n)) whose
// descent set is the first row and ascent set is {box2, box3}. Found by
// filtering the enumerated words; anything but exactly one match throws
// std::logic_error, since the correspondence is supposed to be a bijection.
Word tableau_to_word(const HookTableau& t, std::size_t budget = kDefaultWordBudget);

// Row reading from the bottom row upward: (box3, box2, first_row...).
Permutation row_reading(const HookTableau& t);

// Componentwise order: first rows compare downward, column boxes upward.
//   a <= b  iff  a.first_row[i] >= b.first_row[i] for all i,
//                a.box2 <= b.box2 and a.box3 <= b.box3.
bool tableau_leq(const HookTableau& a, const HookTableau& b);

// Cover by definition: a < b with no recording tableau strictly between.
bool tableau_covers(const HookTableau& a, const HookTableau& b);
// Cover by rank: a < b with row-reading lengths differing by exactly 1.
// Agrees with tableau_covers on every pair; build_tableau_hasse checks that.
bool tableau_covers_by_length(const HookTableau& a, const HookTableau& b);

// Hasse diagram of the recording tableaux; edges carry the cover label.
// Both cover routes are evaluated per pair and must agree.
LabeledGraph build_tableau_hasse(int n);

// Rank in the tableau poset: the length of the row reading; the poset rank
// runs 0..2(n-2).
int tableau_rank(const HookTableau& t);

// The permutation with w_1 = 1 + lambda_2, w_2 = 2 + lambda_1 and the
// remaining values ascending; requires at most two parts with lambda_1 <=
// n-2. Its length is |lambda|.
Permutation grassmannian_from_partition(const Partition& lambda, int n);

// Hasse diagram of the row readings under the Bruhat order restricted to
// them; an independent route to the same poset shape.
LabeledGraph build_reading_hasse(int n);

}  // namespace redwords

#endif
