#pragma once

#include <cstdint>
#include <map>

#include "mapenum/rational_poly.hpp"

namespace mapenum {

// Harer-Zagier generating polynomial for oriented one-vertex maps with n
// edges:
//
//   G_n(N) = (2n)!/(2^n n!) * sum_{k=0}^{n} 2^k C(n,k) C(N,k+1)
//
// The genus-g map count is the coefficient of N^{1+n-2g}; every other
// coefficient vanishes.
RationalPolynomial harer_zagier(unsigned n);

// Goulden-Jackson generating polynomial for unoriented one-vertex maps with
// n edges:
//
//   F_n(N) = n! sum_{k=0}^{n} 2^{2n-k} sum_{r=0}^{n}
//              C(n-1/2, n-r) C(k+r-1, k) C((N-1)/2, r)
//          + (2n)!/(2^n n!) * sum_{k=0}^{n} 2^k C(n,k) C(N-1, k+1)
//
// with the empty-product convention C(-1, 0) = 1. The count at Euler
// characteristic chi is the coefficient of N^{n-1+chi}.
RationalPolynomial goulden_jackson(unsigned n);

// Coefficient tables read off the polynomials above; zero bins are omitted.
// Both throw EnumerationError if the polynomial violates its expected layout
// (non-integer, negative, or misplaced coefficients).
std::map<int, std::uint64_t> harer_zagier_genus_counts(unsigned n);
std::map<int, std::uint64_t> goulden_jackson_chi_counts(unsigned n);

} // namespace mapenum
