#include "mapenum/rational_poly.hpp"

#include <sstream>
#include <stdexcept>

namespace mapenum {

RationalPolynomial::RationalPolynomial(std::vector<BigRational> coefficients)
    : coefficients_(std::move(coefficients)) {
  trim();
}

RationalPolynomial RationalPolynomial::constant(BigRational value) {
  return RationalPolynomial({std::move(value)});
}

RationalPolynomial RationalPolynomial::variable() {
  return RationalPolynomial({BigRational(0), BigRational(1)});
}

void RationalPolynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0)
    coefficients_.pop_back();
}

BigRational RationalPolynomial::coefficient(std::size_t power) const {
  return power < coefficients_.size() ? coefficients_[power] : BigRational(0);
}

bool RationalPolynomial::has_integer_coefficients() const {
  for (const auto& c : coefficients_)
    if (boost::multiprecision::denominator(c) != 1) return false;
  return true;
}

BigRational RationalPolynomial::evaluate(const BigRational& value) const {
  BigRational result(0);
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it)
    result = result * value + *it;
  return result;
}

std::string RationalPolynomial::to_string(const std::string& variable_name) const {
  if (coefficients_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = coefficients_.size(); k-- > 0;) {
    const BigRational& c = coefficients_[k];
    if (c == 0) continue;
    BigRational magnitude = c < 0 ? BigRational(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    bool unit = magnitude == 1;
    if (!unit || k == 0) out << magnitude;
    if (k > 0) {
      if (!unit) out << " ";
      out << variable_name;
      if (k > 1) out << "^" << k;
    }
  }
  return out.str();
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& other) {
  if (other.coefficients_.size() > coefficients_.size())
    coefficients_.resize(other.coefficients_.size());
  for (std::size_t k = 0; k < other.coefficients_.size(); ++k)
    coefficients_[k] += other.coefficients_[k];
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& other) {
  if (other.coefficients_.size() > coefficients_.size())
    coefficients_.resize(other.coefficients_.size());
  for (std::size_t k = 0; k < other.coefficients_.size(); ++k)
    coefficients_[k] -= other.coefficients_[k];
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const RationalPolynomial& other) {
  if (coefficients_.empty() || other.coefficients_.empty()) {
    coefficients_.clear();
    return *this;
  }
  std::vector<BigRational> product(coefficients_.size() + other.coefficients_.size() - 1,
                                   BigRational(0));
  for (std::size_t i = 0; i < coefficients_.size(); ++i)
    for (std::size_t j = 0; j < other.coefficients_.size(); ++j)
      product[i + j] += coefficients_[i] * other.coefficients_[j];
  coefficients_ = std::move(product);
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const BigRational& scalar) {
  if (scalar == 0) {
    coefficients_.clear();
    return *this;
  }
  for (auto& c : coefficients_) c *= scalar;
  return *this;
}

BigInt big_factorial(unsigned n) {
  BigInt result(1);
  for (unsigned i = 2; i <= n; ++i) result *= i;
  return result;
}

BigInt big_binomial(unsigned n, unsigned k) {
  if (k > n) return BigInt(0);
  k = std::min(k, n - k);
  BigInt result(1);
  for (unsigned i = 1; i <= k; ++i) {
    result *= (n - k + i);
    result /= i; // exact at every step
  }
  return result;
}

BigInt big_power(const BigInt& base, unsigned exponent) {
  BigInt result(1);
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

BigRational binomial_rational(const BigRational& x, unsigned m) {
  BigRational result(1);
  for (unsigned i = 0; i < m; ++i) result *= (x - i);
  return result / BigRational(big_factorial(m));
}

BigRational binomial_half(unsigned n, unsigned m) {
  BigInt numerator = 2 * BigInt(n) - 1;
  return binomial_rational(BigRational(numerator, BigInt(2)), m);
}

RationalPolynomial binomial_poly(const BigRational& shift, const BigRational& scale,
                                 unsigned k) {
  RationalPolynomial product = RationalPolynomial::constant(BigRational(1));
  RationalPolynomial argument({shift, scale}); // scale*N + shift
  for (unsigned i = 0; i < k; ++i)
    product *= argument - RationalPolynomial::constant(BigRational(i));
  product *= BigRational(BigInt(1), big_factorial(k));
  return product;
}

} // namespace mapenum
