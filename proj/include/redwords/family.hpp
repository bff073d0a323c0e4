#ifndef REDWORDS_FAMILY_HPP
#define REDWORDS_FAMILY_HPP

#include <cstdint>
#include <vector>

#include "redwords/perm.hpp"
#include "redwords/poly.hpp"
#include "redwords/words.hpp"

namespace redwords {

// The permutation [n, 1, 2, ..., n-4, n-2, n-1, n-3] in S_n, n >= 4: length
// n+1, cycle type (n-2,1,1), fixed points at n-2 and n-1, descents at 1 and
// n-1. Its reduced-word graph is the object the rest of this module checks.
Permutation family_permutation(int n);

std::int64_t predicted_order(int n);  // n(n-1)/2 reduced words

// 2d + (n-2) d^2 + (2n-6) d^3 + C(n-3,2) d^4.
IntPolynomial predicted_degree_polynomial(int n);

IntPolynomial actual_degree_polynomial(int n, std::size_t budget = kDefaultWordBudget);
std::int64_t actual_four_cycles(int n, std::size_t budget = kDefaultWordBudget);

// The three corner vertices of the word graph in its triangular drawing; top
// and bottom have degree 1, middle degree 2.
struct CornerWords {
  Word top;     // (n-1)(n-2)...321(n-2)(n-1)
  Word bottom;  // (n-3)(n-2)(n-1)(n-2)...321
  Word middle;  // (n-3)(n-1)(n-2)(n-3)...321(n-1)
};
CornerWords corner_words(int n);

// Vertices of the word graph admitting at least one braid move; equals
// 2(n-2), the rank of the poset chain.
std::int64_t braid_vertex_count(int n, std::size_t budget = kDefaultWordBudget);

// l(w) + l(reverse(w)) = C(n,2) = |R(w)| for the family permutation.
bool reverse_length_identity(int n, std::size_t budget = kDefaultWordBudget);

struct FamilyReport {
  int n = 0;
  std::int64_t order_predicted = 0;
  std::int64_t order_actual = 0;
  IntPolynomial degree_poly_predicted;
  IntPolynomial degree_poly_actual;
  std::int64_t four_cycles_predicted = 0;
  std::int64_t four_cycles_actual = 0;
  std::int64_t degree_sum = 0;          // brute, equals 4 C(n-1,2) when pass
  std::int64_t braid_vertex_count = 0;  // brute, equals 2(n-2) when pass
  bool pass = false;
};
FamilyReport verify_family(int n, std::size_t budget = kDefaultWordBudget);

// Bivariate series in z whose coefficients are polynomials in d; the vector
// index is the power of z.
using DegreeSeries = std::vector<IntPolynomial>;

// Compares two routes to the generating series of the degree polynomials:
// the termwise sum of the predicted polynomials against the closed-form
// rational expression N(d,z)/(1-z)^3. The two disagree by exactly 2d^2 z^3
// (the closed form carries a spurious z^3 term); the report keeps the
// discrepancy visible instead of patching either side.
struct SeriesReport {
  int max_n = 0;
  DegreeSeries termwise;             // sum of predicted polynomials, z^0..z^max_n
  DegreeSeries closed_form;          // closed-form expansion, z^0..z^max_n
  DegreeSeries difference;           // closed_form - termwise
  DegreeSeries termwise_numerator;   // termwise series times (1-z)^3
  DegreeSeries closed_form_numerator;
  bool termwise_matches = false;     // closed_form[n] == predicted P_n for 4 <= n <= max_n
};
SeriesReport generating_series_check(int max_n);

}  // namespace redwords

#endif
