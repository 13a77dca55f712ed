#include "mapenum/closed_form.hpp"

#include <limits>
#include <stdexcept>

#include "mapenum/errors.hpp"

namespace mapenum {

namespace {

// (2n)!/(2^n n!), the count of matchings on 2n letters.
BigRational matching_prefactor(unsigned n) {
  return BigRational(big_factorial(2 * n)) /
         BigRational(big_power(BigInt(2), n) * big_factorial(n));
}

std::uint64_t to_u64(const BigRational& value, const char* what) {
  if (boost::multiprecision::denominator(value) != 1)
    throw EnumerationError(std::string(what) + ": non-integer coefficient");
  BigInt integer = boost::multiprecision::numerator(value);
  if (integer < 0 || integer > std::numeric_limits<std::uint64_t>::max())
    throw EnumerationError(std::string(what) + ": coefficient out of 64-bit range");
  return integer.convert_to<std::uint64_t>();
}

} // namespace

RationalPolynomial harer_zagier(unsigned n) {
  if (n < 1) throw std::invalid_argument("harer_zagier: n >= 1 required");
  RationalPolynomial sum;
  for (unsigned k = 0; k <= n; ++k) {
    BigRational weight = BigRational(big_power(BigInt(2), k) * big_binomial(n, k));
    sum += weight * binomial_poly(BigRational(0), BigRational(1), k + 1);
  }
  sum *= matching_prefactor(n);
  if (!sum.has_integer_coefficients())
    throw EnumerationError("harer_zagier: non-integer polynomial");
  return sum;
}

RationalPolynomial goulden_jackson(unsigned n) {
  if (n < 1) throw std::invalid_argument("goulden_jackson: n >= 1 required");
  RationalPolynomial twisted_part;
  for (unsigned k = 0; k <= n; ++k) {
    RationalPolynomial inner;
    for (unsigned r = 0; r <= n; ++r) {
      BigRational weight = binomial_half(n, n - r) *
                           binomial_rational(BigRational(static_cast<long long>(k) +
                                                         r - 1),
                                             k);
      if (weight == 0) continue;
      inner += weight * binomial_poly(BigRational(-1, 2), BigRational(1, 2), r);
    }
    inner *= BigRational(big_power(BigInt(2), 2 * n - k));
    twisted_part += inner;
  }
  twisted_part *= BigRational(big_factorial(n));

  RationalPolynomial oriented_part;
  for (unsigned k = 0; k <= n; ++k) {
    BigRational weight = BigRational(big_power(BigInt(2), k) * big_binomial(n, k));
    oriented_part += weight * binomial_poly(BigRational(-1), BigRational(1), k + 1);
  }
  oriented_part *= matching_prefactor(n);

  RationalPolynomial total = twisted_part + oriented_part;
  if (!total.has_integer_coefficients())
    throw EnumerationError("goulden_jackson: non-integer polynomial");
  return total;
}

std::map<int, std::uint64_t> harer_zagier_genus_counts(unsigned n) {
  RationalPolynomial poly = harer_zagier(n);
  std::map<int, std::uint64_t> counts;
  for (int power = 0; power <= poly.degree(); ++power) {
    BigRational c = poly.coefficient(power);
    if (c == 0) continue;
    int doubled_genus = 1 + static_cast<int>(n) - power; // 2g
    if (doubled_genus < 0 || doubled_genus % 2 != 0)
      throw EnumerationError("harer_zagier: coefficient at unexpected power N^" +
                             std::to_string(power));
    counts[doubled_genus / 2] = to_u64(c, "harer_zagier");
  }
  return counts;
}

std::map<int, std::uint64_t> goulden_jackson_chi_counts(unsigned n) {
  RationalPolynomial poly = goulden_jackson(n);
  std::map<int, std::uint64_t> counts;
  for (int power = 0; power <= poly.degree(); ++power) {
    BigRational c = poly.coefficient(power);
    if (c == 0) continue;
    int chi = power - (static_cast<int>(n) - 1);
    if (chi > 2)
      throw EnumerationError("goulden_jackson: coefficient at unexpected power N^" +
                             std::to_string(power));
    counts[chi] = to_u64(c, "goulden_jackson");
  }
  return counts;
}

} // namespace mapenum
