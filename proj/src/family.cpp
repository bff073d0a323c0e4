#include "redwords/family.hpp"

#include <stdexcept>

#include "redwords/checked.hpp"
#include "redwords/graph.hpp"

namespace redwords {

namespace {

void require_family_n(int n) {
  if (n < 4)
    throw std::invalid_argument("family permutation requires n >= 4, got " +
                                std::to_string(n));
}

bool has_braid_factor(const Word& w) {
  for (std::size_t i = 0; i + 2 < w.size(); ++i)
    if (w[i] == w[i + 2] && std::abs(w[i] - w[i + 1]) == 1) return true;
  return false;
}

}  // namespace

Permutation family_permutation(int n) {
  require_family_n(n);
  std::vector<int> v;
  v.reserve(n);
  v.push_back(n);
  for (int i = 1; i <= n - 4; ++i) v.push_back(i);
  v.push_back(n - 2);
  v.push_back(n - 1);
  v.push_back(n - 3);
  return Permutation{std::move(v)};
}

std::int64_t predicted_order(int n) {
  require_family_n(n);
  return static_cast<std::int64_t>(n) * (n - 1) / 2;
}

IntPolynomial predicted_degree_polynomial(int n) {
  require_family_n(n);
  return IntPolynomial{{0, 2, n - 2, 2 * n - 6, binomial(n - 3, 2)}};
}

IntPolynomial actual_degree_polynomial(int n, std::size_t budget) {
  require_family_n(n);
  return degree_histogram(build_word_graph(family_permutation(n), budget));
}

std::int64_t actual_four_cycles(int n, std::size_t budget) {
  require_family_n(n);
  return count_4cycles(build_word_graph(family_permutation(n), budget));
}

CornerWords corner_words(int n) {
  require_family_n(n);
  CornerWords c;
  for (int a = n - 1; a >= 1; --a) c.top.push_back(a);
  c.top.push_back(n - 2);
  c.top.push_back(n - 1);

  c.bottom = {n - 3, n - 2, n - 1};
  for (int a = n - 2; a >= 1; --a) c.bottom.push_back(a);

  c.middle = {n - 3, n - 1};
  for (int a = n - 2; a >= 1; --a) c.middle.push_back(a);
  c.middle.push_back(n - 1);
  return c;
}

std::int64_t braid_vertex_count(int n, std::size_t budget) {
  require_family_n(n);
  std::int64_t count = 0;
  for (const Word& w : enumerate_reduced_words(family_permutation(n), budget))
    if (has_braid_factor(w)) ++count;
  return count;
}

bool reverse_length_identity(int n, std::size_t budget) {
  require_family_n(n);
  const Permutation w = family_permutation(n);
  const std::int64_t total = length(w) + length(reverse(w));
  return total == binomial(n, 2) &&
         total == count_reduced_words(w, budget);
}

FamilyReport verify_family(int n, std::size_t budget) {
  require_family_n(n);
  const LabeledGraph g = build_word_graph(family_permutation(n), budget);

  FamilyReport r;
  r.n = n;
  r.order_predicted = predicted_order(n);
  r.order_actual = static_cast<std::int64_t>(g.order());
  r.degree_poly_predicted = predicted_degree_polynomial(n);
  r.degree_poly_actual = degree_histogram(g);
  r.four_cycles_predicted = binomial(n - 2, 2);
  r.four_cycles_actual = count_4cycles(g);
  r.degree_sum = degree_sum(g);
  r.braid_vertex_count = 0;
  for (const auto& [key, payload] : g.vertices())
    if (has_braid_factor(parse_word(key, n))) ++r.braid_vertex_count;

  r.pass = r.order_predicted == r.order_actual &&
           r.degree_poly_predicted == r.degree_poly_actual &&
           r.four_cycles_predicted == r.four_cycles_actual &&
           r.degree_sum == 4 * binomial(n - 1, 2) &&
           r.braid_vertex_count == 2 * (n - 2);
  return r;
}

SeriesReport generating_series_check(int max_n) {
  if (max_n < 4) throw std::invalid_argument("generating_series_check requires max_n >= 4");

  SeriesReport rep;
  rep.max_n = max_n;

  rep.termwise.assign(max_n + 1, {});
  for (int n = 4; n <= max_n; ++n) rep.termwise[n] = predicted_degree_polynomial(n);

  // Closed-form numerator N(d,z), nonzero only in z^3..z^6:
  //   N = 2d^2 z^3 + (2d - 4d^2 + 2d^3) z^4 + (-4d + 3d^2 - 2d^3 + d^4) z^5
  //     + (2d - d^2) z^6.
  rep.closed_form_numerator.assign(7, {});
  rep.closed_form_numerator[3] = IntPolynomial{{0, 0, 2}};
  rep.closed_form_numerator[4] = IntPolynomial{{0, 2, -4, 2}};
  rep.closed_form_numerator[5] = IntPolynomial{{0, -4, 3, -2, 1}};
  rep.closed_form_numerator[6] = IntPolynomial{{0, 2, -1}};

  // N / (1-z)^3 with 1/(1-z)^3 = sum_m C(m+2,2) z^m.
  rep.closed_form.assign(max_n + 1, {});
  for (int t = 0; t <= max_n; ++t) {
    IntPolynomial acc;
    for (int s = 3; s <= 6 && s <= t; ++s) {
      const std::int64_t c = binomial(t - s + 2, 2);
      acc = acc + rep.closed_form_numerator[s] * IntPolynomial::constant(c);
    }
    rep.closed_form[t] = acc;
  }

  rep.difference.assign(max_n + 1, {});
  for (int t = 0; t <= max_n; ++t)
    rep.difference[t] = rep.closed_form[t] - rep.termwise[t];

  // Termwise numerator: (sum_n P_n z^n)(1-z)^3. Coefficients are third
  // differences of the (eventually quadratic-in-n) polynomials P_n, so the
  // product is a polynomial; everything past z^7 must vanish.
  const int guard = std::max(max_n, 10);
  std::vector<IntPolynomial> extended(guard + 1);
  for (int n = 4; n <= guard; ++n) extended[n] = predicted_degree_polynomial(n);
  const std::int64_t cube[4] = {1, -3, 3, -1};
  rep.termwise_numerator.assign(guard + 1, {});
  for (int t = 0; t <= guard; ++t) {
    IntPolynomial acc;
    for (int j = 0; j <= 3 && j <= t; ++j)
      acc = acc + extended[t - j] * IntPolynomial::constant(cube[j]);
    rep.termwise_numerator[t] = acc;
  }
  for (int t = 7; t <= guard; ++t)
    if (!rep.termwise_numerator[t].is_zero())
      throw std::logic_error("termwise numerator is not a polynomial of degree <= 6");
  rep.termwise_numerator.resize(7);

  rep.termwise_matches = true;
  for (int n = 4; n <= max_n; ++n)
    if (rep.closed_form[n] != rep.termwise[n]) rep.termwise_matches = false;

  return rep;
}

}  // namespace redwords
