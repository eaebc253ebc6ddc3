#include "positroid/exact_polynomial.hpp"

#include <stdexcept>

namespace positroid {

ExactPolynomial::ExactPolynomial(std::vector<mpq_class> coefficients)
    : coeffs_(std::move(coefficients)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

ExactPolynomial::ExactPolynomial(std::initializer_list<long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

ExactPolynomial ExactPolynomial::constant(const mpq_class& c) {
  return ExactPolynomial(std::vector<mpq_class>{c});
}

ExactPolynomial ExactPolynomial::monomial(int degree, const mpq_class& c) {
  if (degree < 0) throw std::invalid_argument("monomial degree must be nonnegative");
  std::vector<mpq_class> coeffs(static_cast<std::size_t>(degree) + 1);
  coeffs.back() = c;
  return ExactPolynomial(std::move(coeffs));
}

ExactPolynomial ExactPolynomial::one_minus_z_power(int k) {
  if (k < 0) throw std::invalid_argument("negative power of (1 - z)");
  ExactPolynomial result = constant(1);
  const ExactPolynomial factor{1, -1};
  for (int i = 0; i < k; ++i) result *= factor;
  return result;
}

ExactPolynomial ExactPolynomial::shifted_binomial(long a, int d) {
  // prod_{m=1..d} (t + a - m + 1) / m
  ExactPolynomial result = constant(1);
  for (int m = 1; m <= d; ++m) {
    result *= ExactPolynomial(std::vector<mpq_class>{mpq_class(a - m + 1), mpq_class(1)});
    result *= mpq_class(1, m);
  }
  return result;
}

mpq_class ExactPolynomial::coefficient(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

mpq_class ExactPolynomial::evaluate(const mpq_class& t) const {
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

bool ExactPolynomial::has_integer_coefficients() const {
  for (const auto& c : coeffs_)
    if (c.get_den() != 1) return false;
  return true;
}

bool ExactPolynomial::has_nonnegative_coefficients() const {
  for (const auto& c : coeffs_)
    if (sgn(c) < 0) return false;
  return true;
}

std::vector<long long> ExactPolynomial::integer_coefficients(std::size_t min_length) const {
  std::vector<long long> out(std::max(min_length, coeffs_.size()), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].get_den() != 1 || !coeffs_[i].get_num().fits_slong_p())
      throw std::domain_error("coefficient " + coeffs_[i].get_str() + " is not a machine integer");
    out[i] = coeffs_[i].get_num().get_si();
  }
  return out;
}

ExactPolynomial& ExactPolynomial::operator+=(const ExactPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

ExactPolynomial& ExactPolynomial::operator-=(const ExactPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

ExactPolynomial& ExactPolynomial::operator*=(const ExactPolynomial& other) {
  if (is_zero() || other.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<mpq_class> product(coeffs_.size() + other.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) product[i + j] += coeffs_[i] * other.coeffs_[j];
  coeffs_ = std::move(product);
  trim();
  return *this;
}

ExactPolynomial& ExactPolynomial::operator*=(const mpq_class& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

std::string ExactPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const mpq_class& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    mpq_class mag = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    const bool unit = mag == 1;
    if (i == 0 || !unit) out += mag.get_str();
    if (i >= 1) out += var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

void ExactPolynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

}  // namespace positroid
