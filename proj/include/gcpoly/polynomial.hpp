#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <string>

namespace gcpoly {

using BigInt = boost::multiprecision::cpp_int;

/// Univariate polynomial in k with exact integer coefficients. Only nonzero
/// coefficients are stored, so the zero polynomial has no terms.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  static IntPolynomial constant(BigInt c);
  static IntPolynomial monomial(std::size_t degree, BigInt coefficient = 1);
  /// (k + shift)^n
  static IntPolynomial binomial_power(std::int64_t shift, std::size_t n);

  bool is_zero() const { return coeffs_.empty(); }
  std::optional<std::size_t> degree() const;
  BigInt coefficient(std::size_t degree) const;
  const std::map<std::size_t, BigInt>& coefficients() const { return coeffs_; }
  void add_term(std::size_t degree, const BigInt& coefficient);

  /// Multiplies by k^n.
  IntPolynomial shifted_up(std::size_t n) const;
  /// Divides by k^n. Throws std::domain_error if a lower term is nonzero.
  IntPolynomial shifted_down(std::size_t n) const;

  IntPolynomial& operator+=(const IntPolynomial& other);
  IntPolynomial& operator-=(const IntPolynomial& other);
  IntPolynomial& operator*=(const IntPolynomial& other);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
  IntPolynomial operator-() const;
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// e.g. "k^3 - 3*k^2 + 2*k"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  std::map<std::size_t, BigInt> coeffs_;
};

/// Horner evaluation; k may be negative.
BigInt evaluate(const IntPolynomial& p, const BigInt& k);

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p);

}  // namespace gcpoly
