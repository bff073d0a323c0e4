#include "redwords/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "redwords/checked.hpp"

namespace redwords {

namespace {

void validate_one_line(const std::vector<int>& values) {
  const int n = static_cast<int>(values.size());
  if (n == 0) throw std::invalid_argument("permutation must have n >= 1");
  for (int v : values)
    if (v < 1 || v > n)
      throw std::invalid_argument("value " + std::to_string(v) + " is outside 1.." +
                                  std::to_string(n));
  std::vector<int> count(n + 1, 0);
  for (int v : values) ++count[v];
  int duplicated = 0, missing = 0;
  for (int v = n; v >= 1; --v) {
    if (count[v] > 1) duplicated = v;
    if (count[v] == 0) missing = v;
  }
  if (duplicated)
    throw std::invalid_argument("not a permutation of 1.." + std::to_string(n) +
                                ": value " + std::to_string(duplicated) +
                                " is duplicated and value " + std::to_string(missing) +
                                " is missing");
}

}  // namespace

Permutation::Permutation(std::vector<int> one_line) : values_(std::move(one_line)) {
  validate_one_line(values_);
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw std::invalid_argument("permutation must have n >= 1");
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation{std::move(v)};
}

Permutation Permutation::longest_element(int n) {
  if (n < 1) throw std::invalid_argument("permutation must have n >= 1");
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = n - i;
  return Permutation{std::move(v)};
}

Permutation Permutation::parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty permutation text");
  std::vector<int> values;
  if (text.find(',') == std::string::npos) {
    // Digit-string convenience, valid only when every value is a single digit.
    for (char c : text) {
      if (c < '1' || c > '9')
        throw std::invalid_argument(std::string("bad character '") + c +
                                    "' in permutation \"" + text + "\"");
      values.push_back(c - '0');
    }
    if (values.size() > 9)
      throw std::invalid_argument("digit-string form is limited to n <= 9; use commas");
  } else {
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
      std::size_t pos = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &pos);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad entry \"" + tok + "\" in permutation \"" + text + "\"");
      }
      if (pos != tok.size())
        throw std::invalid_argument("bad entry \"" + tok + "\" in permutation \"" + text + "\"");
      values.push_back(v);
    }
    if (!text.empty() && text.back() == ',')
      throw std::invalid_argument("trailing comma in permutation \"" + text + "\"");
  }
  return Permutation{std::move(values)};
}

std::string Permutation::to_string() const {
  std::ostringstream out;
  const bool digits = n() <= 9;
  for (int i = 0; i < n(); ++i) {
    if (i && !digits) out << ",";
    out << values_[i];
  }
  return out.str();
}

int length(const Permutation& w) {
  int count = 0;
  const int n = w.n();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (w(i) > w(j)) ++count;
  return count;
}

std::set<int> descent_set(const Permutation& w) {
  std::set<int> out;
  for (int i = 1; i < w.n(); ++i)
    if (w(i) > w(i + 1)) out.insert(i);
  return out;
}

Partition cycle_type(const Permutation& w) {
  const int n = w.n();
  std::vector<char> seen(n + 1, 0);
  std::vector<int> lens;
  for (int i = 1; i <= n; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = w(j)) {
      seen[j] = 1;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.begin(), lens.end(), std::greater<>());
  return Partition{std::move(lens)};
}

std::set<int> fixed_points(const Permutation& w) {
  std::set<int> out;
  for (int i = 1; i <= w.n(); ++i)
    if (w(i) == i) out.insert(i);
  return out;
}

std::vector<int> lehmer_code(const Permutation& w) {
  const int n = w.n();
  std::vector<int> code(n, 0);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (w(j) < w(i)) ++code[i - 1];
  return code;
}

Permutation inverse(const Permutation& w) {
  std::vector<int> v(w.n());
  for (int i = 1; i <= w.n(); ++i) v[w(i) - 1] = i;
  return Permutation{std::move(v)};
}

Permutation compose(const Permutation& u, const Permutation& v) {
  if (u.n() != v.n())
    throw std::invalid_argument("compose: mismatched ranks " + std::to_string(u.n()) +
                                " and " + std::to_string(v.n()));
  std::vector<int> out(u.n());
  for (int i = 1; i <= u.n(); ++i) out[i - 1] = u(v(i));
  return Permutation{std::move(out)};
}

Permutation reverse(const Permutation& w) {
  std::vector<int> v(w.one_line().rbegin(), w.one_line().rend());
  return Permutation{std::move(v)};
}

std::vector<Permutation> bruhat_covers(const Permutation& w) {
  const int n = w.n();
  const int len = length(w);
  std::vector<Permutation> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (w(i) >= w(j)) continue;  // transposing a descent pair lowers length
      std::vector<int> v = w.one_line();
      std::swap(v[i - 1], v[j - 1]);
      Permutation cand{std::move(v)};
      if (length(cand) == len + 1) out.push_back(std::move(cand));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> weak_covers(const Permutation& w) {
  std::vector<Permutation> out;
  for (int i = 1; i < w.n(); ++i) {
    if (w(i) >= w(i + 1)) continue;
    std::vector<int> v = w.one_line();
    std::swap(v[i - 1], v[i]);
    out.emplace_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool bruhat_leq(const Permutation& u, const Permutation& w) {
  if (u.n() != w.n())
    throw std::invalid_argument("bruhat_leq: mismatched ranks");
  const int n = u.n();
  std::vector<int> a, b;
  a.reserve(n);
  b.reserve(n);
  for (int i = 1; i < n; ++i) {
    a.insert(std::upper_bound(a.begin(), a.end(), u(i)), u(i));
    b.insert(std::upper_bound(b.begin(), b.end(), w(i)), w(i));
    for (int j = 0; j < i; ++j)
      if (a[j] > b[j]) return false;
  }
  return true;
}

IntPolynomial poincare_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("poincare_polynomial requires n >= 1");
  IntPolynomial out = IntPolynomial::constant(1);
  for (int k = 2; k <= n; ++k)
    out = out * IntPolynomial{std::vector<std::int64_t>(k, 1)};
  return out;
}

std::optional<int> grassmannian_descent(const Permutation& w) {
  const std::set<int> des = descent_set(w);
  if (des.size() != 1) return std::nullopt;
  return *des.begin();
}

}  // namespace redwords
