#ifndef REDWORDS_PERM_HPP
#define REDWORDS_PERM_HPP

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "redwords/partition.hpp"
#include "redwords/poly.hpp"

namespace redwords {

// Permutation of [n] in one-line notation. Positions and values are
// 1-indexed throughout. Immutable value type; ordering is lexicographic on
// the one-line word.
class Permutation {
 public:
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int n);
  static Permutation longest_element(int n);  // [n, n-1, ..., 2, 1]

  // Accepts comma-separated one-line notation "5,1,3,4,2"; for n <= 9 the
  // contiguous digit string "51342" is also accepted. Rejects non-bijections
  // with a diagnostic naming the missing or duplicated value.
  static Permutation parse(const std::string& text);

  int n() const { return static_cast<int>(values_.size()); }
  int operator()(int i) const { return values_[i - 1]; }
  const std::vector<int>& one_line() const { return values_; }

  // Digit string for n <= 9 ("51342"), comma-separated otherwise.
  std::string to_string() const;

  friend bool operator==(const Permutation& a, const Permutation& b) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) = default;

 private:
  std::vector<int> values_;
};

int length(const Permutation& w);  // inversion count
std::set<int> descent_set(const Permutation& w);
Partition cycle_type(const Permutation& w);
std::set<int> fixed_points(const Permutation& w);
std::vector<int> lehmer_code(const Permutation& w);

Permutation inverse(const Permutation& w);
// Composition acts on positions: compose(u, v)(i) = u(v(i)).
Permutation compose(const Permutation& u, const Permutation& v);
// One-line notation read right to left.
Permutation reverse(const Permutation& w);

// Up-covers in the strong Bruhat order: transpositions raising length by
// exactly 1. Sorted lexicographically.
std::vector<Permutation> bruhat_covers(const Permutation& w);
// Up-covers in the right weak order: adjacent transpositions at ascents.
std::vector<Permutation> weak_covers(const Permutation& w);
// Prefix-dominance comparison for the strong Bruhat order.
bool bruhat_leq(const Permutation& u, const Permutation& w);

// Length generating function of S_n: prod_{k=1..n} (1 + q + ... + q^{k-1}).
IntPolynomial poincare_polynomial(int n);

// The unique descent position when w has exactly one descent, else nullopt.
std::optional<int> grassmannian_descent(const Permutation& w);

}  // namespace redwords

#endif
