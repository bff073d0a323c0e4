#include "redwords/simplex.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "redwords/checked.hpp"
#include "redwords/perm.hpp"
#include "redwords/tableaux.hpp"

namespace redwords {

std::string LatticePoint::to_string() const {
  std::ostringstream out;
  out << "(" << a1 << "," << a2 << ")";
  return out.str();
}

LatticePoint make_lattice_point(int a1, int a2, int k) {
  if (k < 0) throw std::invalid_argument("dilation factor must be >= 0");
  if (a1 < 0 || a2 < 0 || a1 + a2 > k)
    throw std::invalid_argument("(" + std::to_string(a1) + "," + std::to_string(a2) +
                                ") is not a lattice point of the " + std::to_string(k) +
                                "-fold dilated simplex");
  return LatticePoint{a1, a2, k};
}

std::vector<LatticePoint> enumerate_lattice_points(int k) {
  if (k < 0) throw std::invalid_argument("dilation factor must be >= 0");
  std::vector<LatticePoint> out;
  for (int a1 = 0; a1 <= k; ++a1)
    for (int a2 = 0; a2 + a1 <= k; ++a2) out.push_back(LatticePoint{a1, a2, k});
  std::sort(out.begin(), out.end(), [](const LatticePoint& a, const LatticePoint& b) {
    if (weight(a) != weight(b)) return weight(a) < weight(b);
    return a.a1 < b.a1;
  });
  return out;
}

std::int64_t ehrhart(int k) {
  if (k < 0) throw std::invalid_argument("dilation factor must be >= 0");
  return binomial(k + 2, 2);
}

int weight(const LatticePoint& a) { return a.a1 + 2 * a.a2; }

Partition fitted_partition(const LatticePoint& a) {
  return make_partition({a.a1 + a.a2, a.a2});
}

LatticePoint lattice_point_from_partition(const Partition& lambda, int k) {
  if (lambda.parts.size() > 2)
    throw std::invalid_argument("partition " + lambda.to_string() +
                                " has more than two parts");
  return make_lattice_point(lambda.part(1) - lambda.part(2), lambda.part(2), k);
}

bool lattice_covers(const LatticePoint& a, const LatticePoint& b) {
  if (a.k != b.k) throw std::invalid_argument("lattice_covers: mismatched dilation");
  const int d1 = b.a1 - a.a1;
  const int d2 = b.a2 - a.a2;
  return d1 == 1 && (d2 == 0 || d2 == -1);
}

LabeledGraph build_lattice_graph(int k) {
  const std::vector<LatticePoint> pts = enumerate_lattice_points(k);
  LabeledGraph g;
  for (const LatticePoint& p : pts) g.add_vertex(p.to_string());
  for (const LatticePoint& a : pts)
    for (const LatticePoint& b : pts)
      if (lattice_covers(a, b)) g.add_edge(a.to_string(), b.to_string(), EdgeKind::cover);
  return g;
}

std::vector<std::int64_t> slice_counts(int k) {
  std::vector<std::int64_t> counts(2 * k + 1, 0);
  for (const LatticePoint& p : enumerate_lattice_points(k)) ++counts[weight(p)];
  return counts;
}

IntPolynomial gaussian_binomial_n2(int n) {
  if (n < 2) throw std::invalid_argument("gaussian_binomial_n2 requires n >= 2");
  auto one_minus_power = [](int e) {
    std::vector<std::int64_t> c(e + 1, 0);
    c[0] = 1;
    c[e] = -1;
    return IntPolynomial{std::move(c)};
  };
  return IntPolynomial::div_exact(one_minus_power(n) * one_minus_power(n - 1),
                                  one_minus_power(1) * one_minus_power(2));
}

IntPolynomial gaussian_binomial_k2(int k) {
  std::vector<std::int64_t> counts = slice_counts(k);
  IntPolynomial by_slices{std::move(counts)};
  if (by_slices != gaussian_binomial_n2(k + 2))
    throw std::logic_error("slice counts disagree with the algebraic q-binomial at k = " +
                           std::to_string(k));
  return by_slices;
}

bool product_expansion_check(int K) {
  if (K < 0) throw std::invalid_argument("product_expansion_check requires K >= 0");
  // Coefficients in t of prod_{i=0..2} 1/(1-q^i t); multiply the geometric
  // series (coefficient of t^m in 1/(1-q^i t) is q^{im}) one factor at a time.
  std::vector<IntPolynomial> series(K + 1);
  series[0] = IntPolynomial::constant(1);
  for (int i = 0; i <= 2; ++i) {
    std::vector<IntPolynomial> next(K + 1);
    for (int m = 0; m <= K; ++m) {
      IntPolynomial acc;
      for (int j = 0; j <= m; ++j)
        acc = acc + series[m - j] * IntPolynomial::monomial(i * j);
      next[m] = acc;
    }
    series = std::move(next);
  }
  for (int k = 0; k <= K; ++k)
    if (series[k] != gaussian_binomial_k2(k)) return false;
  return true;
}

LabeledGraph young_lattice_rectangle(int k) {
  if (k < 0) throw std::invalid_argument("dilation factor must be >= 0");
  std::vector<Partition> parts;
  for (int l1 = 0; l1 <= k; ++l1)
    for (int l2 = 0; l2 <= l1; ++l2) parts.push_back(make_partition({l1, l2}));
  LabeledGraph g;
  for (const Partition& p : parts) g.add_vertex(p.to_string());
  for (const Partition& a : parts)
    for (const Partition& b : parts)
      if (partition_cover(a, b)) g.add_edge(a.to_string(), b.to_string(), EdgeKind::cover);
  return g;
}

bool lattice_rank_check(int k) {
  const std::vector<LatticePoint> pts = enumerate_lattice_points(k);
  const LabeledGraph g = build_lattice_graph(k);
  for (const LatticePoint& a : pts)
    for (const LatticePoint& b : pts)
      if (lattice_covers(a, b) && std::abs(weight(b) - weight(a)) != 1) return false;
  std::int64_t bottom = 0, top = 0;
  for (const LatticePoint& p : pts) {
    if (weight(p) == 0 && !(p.a1 == 0 && p.a2 == 0)) return false;
    if (weight(p) == 2 * k && !(p.a1 == 0 && p.a2 == k)) return false;
    bottom += weight(p) == 0;
    top += weight(p) == 2 * k;
  }
  if (bottom != 1 || top != 1) return false;
  std::vector<std::int64_t> ranks = slice_counts(k);
  return IntPolynomial{std::move(ranks)} == gaussian_binomial_k2(k) && g.order() == pts.size();
}

bool lattice_length_check(int k) {
  const int n = k + 2;
  for (const LatticePoint& p : enumerate_lattice_points(k)) {
    const Permutation w = grassmannian_from_partition(fitted_partition(p), n);
    if (length(w) != weight(p)) return false;
  }
  return true;
}

}  // namespace redwords
