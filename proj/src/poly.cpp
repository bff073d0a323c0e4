#include "redwords/poly.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

#include "redwords/checked.hpp"

namespace redwords {

IntPolynomial::IntPolynomial(std::vector<std::int64_t> coeffs)
    : coeffs_(std::move(coeffs)) {
  trim();
}

IntPolynomial IntPolynomial::constant(std::int64_t c) {
  return IntPolynomial{{c}};
}

IntPolynomial IntPolynomial::monomial(int degree, std::int64_t c) {
  if (degree < 0) throw std::invalid_argument("monomial degree must be >= 0");
  std::vector<std::int64_t> v(degree + 1, 0);
  v[degree] = c;
  return IntPolynomial{std::move(v)};
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::int64_t IntPolynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[i];
}

std::int64_t IntPolynomial::eval(std::int64_t x) const {
  std::int64_t r = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    r = checked_add(checked_mul(r, x), *it);
  return r;
}

bool IntPolynomial::is_palindromic() const {
  const std::size_t m = coeffs_.size();
  for (std::size_t i = 0; i < m / 2; ++i)
    if (coeffs_[i] != coeffs_[m - 1 - i]) return false;
  return true;
}

std::string IntPolynomial::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const std::int64_t c = coeffs_[i];
    if (c == 0) continue;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    const std::int64_t mag = c < 0 ? -c : c;
    if (i == 0) {
      out << mag;
    } else {
      if (mag != 1) out << mag;
      out << var;
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<std::int64_t> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i)
    v[i] = checked_add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
  return IntPolynomial{std::move(v)};
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<std::int64_t> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i)
    v[i] = checked_sub(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
  return IntPolynomial{std::move(v)};
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::int64_t> v(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      v[i + j] = checked_add(v[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
  return IntPolynomial{std::move(v)};
}

IntPolynomial IntPolynomial::div_exact(const IntPolynomial& num, const IntPolynomial& den) {
  if (den.is_zero()) throw std::invalid_argument("polynomial division by zero");
  if (num.is_zero()) return {};
  if (num.degree() < den.degree())
    throw std::invalid_argument("polynomial division leaves a remainder");
  std::vector<std::int64_t> rem = num.coeffs_;
  std::vector<std::int64_t> quot(num.degree() - den.degree() + 1, 0);
  const std::int64_t lead = den.coeffs_.back();
  for (int i = static_cast<int>(quot.size()) - 1; i >= 0; --i) {
    const std::int64_t top = rem[i + den.degree()];
    if (top % lead != 0)
      throw std::invalid_argument("polynomial division is not exact over the integers");
    const std::int64_t q = top / lead;
    quot[i] = q;
    for (int j = 0; j <= den.degree(); ++j)
      rem[i + j] = checked_sub(rem[i + j], checked_mul(q, den.coeffs_[j]));
  }
  for (std::int64_t c : rem)
    if (c != 0) throw std::invalid_argument("polynomial division leaves a remainder");
  return IntPolynomial{std::move(quot)};
}

}  // namespace redwords
