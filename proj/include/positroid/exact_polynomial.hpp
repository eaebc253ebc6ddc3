#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

namespace positroid {

/// Dense univariate polynomial with exact rational coefficients.
///
/// Coefficient `i` multiplies `z^i`. The stored sequence is always trimmed so
/// that the highest coefficient is nonzero; the zero polynomial has no
/// coefficients at all.
class ExactPolynomial {
 public:
  ExactPolynomial() = default;
  explicit ExactPolynomial(std::vector<mpq_class> coefficients);
  ExactPolynomial(std::initializer_list<long> coefficients);

  static ExactPolynomial constant(const mpq_class& c);
  static ExactPolynomial monomial(int degree, const mpq_class& c = 1);
  /// (1 - z)^k
  static ExactPolynomial one_minus_z_power(int k);
  /// binom(t + a, d) as a polynomial in t.
  static ExactPolynomial shifted_binomial(long a, int d);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree, or -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of z^i; zero past the degree.
  mpq_class coefficient(int i) const;
  const std::vector<mpq_class>& coefficients() const { return coeffs_; }

  mpq_class evaluate(const mpq_class& t) const;

  bool has_integer_coefficients() const;
  bool has_nonnegative_coefficients() const;
  /// Integer coefficient list padded to at least `min_length` entries.
  /// Throws std::domain_error when a coefficient is not an integer.
  std::vector<long long> integer_coefficients(std::size_t min_length = 0) const;

  ExactPolynomial& operator+=(const ExactPolynomial& other);
  ExactPolynomial& operator-=(const ExactPolynomial& other);
  ExactPolynomial& operator*=(const ExactPolynomial& other);
  ExactPolynomial& operator*=(const mpq_class& scalar);

  friend ExactPolynomial operator+(ExactPolynomial a, const ExactPolynomial& b) { return a += b; }
  friend ExactPolynomial operator-(ExactPolynomial a, const ExactPolynomial& b) { return a -= b; }
  friend ExactPolynomial operator*(ExactPolynomial a, const ExactPolynomial& b) { return a *= b; }
  friend ExactPolynomial operator*(ExactPolynomial a, const mpq_class& s) { return a *= s; }
  friend ExactPolynomial operator*(const mpq_class& s, ExactPolynomial a) { return a *= s; }
  friend bool operator==(const ExactPolynomial& a, const ExactPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Human-readable form in the variable `var`, e.g. "1 + 4z + 3z^2".
  std::string to_string(const std::string& var = "z") const;

 private:
  void trim();
  std::vector<mpq_class> coeffs_;
};

}  // namespace positroid
