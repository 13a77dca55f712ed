#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace mapenum {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Polynomial in a single formal variable N with exact rational coefficients;
// coefficient(k) is the coefficient of N^k.
class RationalPolynomial {
public:
  RationalPolynomial() = default; // zero polynomial
  explicit RationalPolynomial(std::vector<BigRational> coefficients);
  static RationalPolynomial constant(BigRational value);
  static RationalPolynomial variable(); // N

  bool is_zero() const { return coefficients_.empty(); }
  // Degree of the zero polynomial is reported as -1.
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  BigRational coefficient(std::size_t power) const;
  const std::vector<BigRational>& coefficients() const { return coefficients_; }

  bool has_integer_coefficients() const;
  BigRational evaluate(const BigRational& value) const;
  std::string to_string(const std::string& variable_name = "N") const;

  RationalPolynomial& operator+=(const RationalPolynomial& other);
  RationalPolynomial& operator-=(const RationalPolynomial& other);
  RationalPolynomial& operator*=(const RationalPolynomial& other);
  RationalPolynomial& operator*=(const BigRational& scalar);

  friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) {
    return a += b;
  }
  friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) {
    return a -= b;
  }
  friend RationalPolynomial operator*(RationalPolynomial a, const RationalPolynomial& b) {
    return a *= b;
  }
  friend RationalPolynomial operator*(RationalPolynomial a, const BigRational& s) {
    return a *= s;
  }
  friend RationalPolynomial operator*(const BigRational& s, RationalPolynomial a) {
    return a *= s;
  }

  bool operator==(const RationalPolynomial&) const = default;

private:
  void trim();
  std::vector<BigRational> coefficients_; // empty means zero
};

BigInt big_factorial(unsigned n);
BigInt big_binomial(unsigned n, unsigned k);
BigInt big_power(const BigInt& base, unsigned exponent);

// Generalized binomial C(x, m) = x (x-1) ... (x-m+1) / m!; C(x, 0) = 1 for
// every x, including C(-1, 0) = 1.
BigRational binomial_rational(const BigRational& x, unsigned m);

// C(n - 1/2, m).
BigRational binomial_half(unsigned n, unsigned m);

// C(scale*N + shift, k) as a degree-k polynomial in N.
RationalPolynomial binomial_poly(const BigRational& shift, const BigRational& scale,
                                 unsigned k);

} // namespace mapenum
