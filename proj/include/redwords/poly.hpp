#ifndef REDWORDS_POLY_HPP
#define REDWORDS_POLY_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace redwords {

// Dense univariate polynomial with exact signed 64-bit coefficients.
// coeffs()[i] is the coefficient of degree i; trailing zeros are trimmed, so
// the zero polynomial stores no coefficients. All arithmetic is
// overflow-checked and throws OverflowError rather than wrapping.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<std::int64_t> coeffs);

  static IntPolynomial constant(std::int64_t c);
  static IntPolynomial monomial(int degree, std::int64_t c = 1);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t coeff(int i) const;
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

  std::int64_t eval(std::int64_t x) const;
  bool is_palindromic() const;

  // "2d + 3d^2 + 4d^3 + d^4" with terms in ascending degree; zero prints "0".
  std::string to_string(std::string_view var) const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

  // Exact polynomial division over the integers; throws std::invalid_argument
  // if a remainder survives or a quotient coefficient is fractional.
  static IntPolynomial div_exact(const IntPolynomial& num, const IntPolynomial& den);

 private:
  void trim();
  std::vector<std::int64_t> coeffs_;
};

}  // namespace redwords

#endif
