#ifndef REDWORDS_SIMPLEX_HPP
#define REDWORDS_SIMPLEX_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "redwords/graph.hpp"
#include "redwords/partition.hpp"
#include "redwords/poly.hpp"

namespace redwords {

// Lattice point of the k-fold dilation of the standard 2-simplex:
// a1, a2 >= 0 with a1 + a2 <= k.
struct LatticePoint {
  int a1 = 0;
  int a2 = 0;
  int k = 0;

  std::string to_string() const;  // "(a1,a2)"
  friend bool operator==(const LatticePoint& a, const LatticePoint& b) = default;
};

LatticePoint make_lattice_point(int a1, int a2, int k);

// All C(k+2,2) points, ordered by weight then by a1.
std::vector<LatticePoint> enumerate_lattice_points(int k);

std::int64_t ehrhart(int k);  // C(k+2,2)

int weight(const LatticePoint& a);  // a1 + 2 a2, in 0..2k

// (a1+a2, a2) with zero parts dropped; |lambda| equals the weight and the
// diagram fits the k x 2 rectangle.
Partition fitted_partition(const LatticePoint& a);
// Inverse map: (lambda1 - lambda2, lambda2).
LatticePoint lattice_point_from_partition(const Partition& lambda, int k);

// Cover rule: b - a in {(1,0), (1,-1)}. The first coordinate rises by
// exactly 1, points sharing a first coordinate are never joined, and each
// cover changes the weight by exactly +1 or -1.
bool lattice_covers(const LatticePoint& a, const LatticePoint& b);
LabeledGraph build_lattice_graph(int k);

// N_m = number of points of weight m, for m = 0..2k; sums to ehrhart(k) and
// reads the same in both directions.
std::vector<std::int64_t> slice_counts(int k);

// Gaussian binomial [n 2]_q = (1-q^n)(1-q^(n-1)) / ((1-q)(1-q^2)) by exact
// polynomial division.
IntPolynomial gaussian_binomial_n2(int n);

// [k+2 2]_q computed from the weight slices, cross-checked against the
// algebraic form gaussian_binomial_n2(k+2); a mismatch throws.
IntPolynomial gaussian_binomial_k2(int k);

// Expands prod_{i=0..2} 1/(1-q^i t) in t to order K and compares the t^k
// coefficient with gaussian_binomial_k2(k) for every k <= K.
bool product_expansion_check(int K);

// Young's lattice of partitions with at most two rows fitting the k x 2
// rectangle, covers adding a single box; vertices keyed by "(3,2)".
LabeledGraph young_lattice_rectangle(int k);

// The lattice graph is graded by weight: every edge changes the weight by
// exactly 1, (0,0) is the unique point of weight 0, (0,k) the unique point
// of weight 2k, and the rank polynomial is gaussian_binomial_k2(k).
bool lattice_rank_check(int k);

// Length of the fitted Grassmannian permutation equals the weight for every
// point, with ambient rank n = k+2.
bool lattice_length_check(int k);

}  // namespace redwords

#endif
