#include "gcpoly/polynomial.hpp"

#include <stdexcept>

namespace gcpoly {

IntPolynomial IntPolynomial::constant(BigInt c) { return monomial(0, std::move(c)); }

IntPolynomial IntPolynomial::monomial(std::size_t degree, BigInt coefficient) {
  IntPolynomial p;
  p.add_term(degree, coefficient);
  return p;
}

IntPolynomial IntPolynomial::binomial_power(std::int64_t shift, std::size_t n) {
  IntPolynomial p;
  BigInt binom = 1;
  BigInt shift_power = 1;
  // coefficient of k^(n - j) is C(n, j) * shift^j
  for (std::size_t j = 0; j <= n; ++j) {
    p.add_term(n - j, binom * shift_power);
    binom = binom * (n - j) / (j + 1);
    shift_power *= shift;
  }
  return p;
}

std::optional<std::size_t> IntPolynomial::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.rbegin()->first;
}

BigInt IntPolynomial::coefficient(std::size_t degree) const {
  auto it = coeffs_.find(degree);
  return it == coeffs_.end() ? BigInt(0) : it->second;
}

void IntPolynomial::add_term(std::size_t degree, const BigInt& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = coeffs_.emplace(degree, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) coeffs_.erase(it);
  }
}

IntPolynomial IntPolynomial::shifted_up(std::size_t n) const {
  IntPolynomial out;
  for (const auto& [d, c] : coeffs_) out.coeffs_.emplace(d + n, c);
  return out;
}

IntPolynomial IntPolynomial::shifted_down(std::size_t n) const {
  IntPolynomial out;
  for (const auto& [d, c] : coeffs_) {
    if (d < n) throw std::domain_error("polynomial is not divisible by k^" + std::to_string(n));
    out.coeffs_.emplace(d - n, c);
  }
  return out;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
  for (const auto& [d, c] : other.coeffs_) add_term(d, c);
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
  for (const auto& [d, c] : other.coeffs_) add_term(d, -c);
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& other) {
  IntPolynomial product;
  for (const auto& [da, ca] : coeffs_) {
    for (const auto& [db, cb] : other.coeffs_) product.add_term(da + db, ca * cb);
  }
  *this = std::move(product);
  return *this;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial out;
  for (const auto& [d, c] : coeffs_) out.coeffs_.emplace(d, -c);
  return out;
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const auto& [d, c] = *it;
    const BigInt magnitude = c < 0 ? BigInt(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const bool show_coefficient = magnitude != 1 || d == 0;
    if (show_coefficient) out += magnitude.str();
    if (d > 0) {
      if (show_coefficient) out += "*";
      out += "k";
      if (d > 1) out += "^" + std::to_string(d);
    }
  }
  return out;
}

BigInt evaluate(const IntPolynomial& p, const BigInt& k) {
  if (p.is_zero()) return 0;
  BigInt acc = 0;
  for (std::size_t d = *p.degree() + 1; d-- > 0;) acc = acc * k + p.coefficient(d);
  return acc;
}

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << p.to_string(); }

}  // namespace gcpoly
