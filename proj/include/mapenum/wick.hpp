#pragma once

#include "mapenum/degree_profile.hpp"
#include "mapenum/histogram.hpp"
#include "mapenum/rational_poly.hpp"

namespace mapenum {

// A normalized Gaussian trace moment < prod_d (Tr M^d)^{j_d} > at matrix
// dimension N. Evaluated by explicit pairing-and-index summation, never by
// cycle counting, so it is an enumeration-free cross-check.
struct MomentSpec {
  DegreeProfile profile;
  unsigned dimension = 1; // N
};

// Hermitian (GUE) moment with pair correlator <M_ij M_kl> = delta_il
// delta_jk / N. Odd dart totals give 0. Limits: darts <= 8, N <= 4.
BigRational gue_moment(const MomentSpec& spec);

// Symmetric (GOE) moment with pair correlator <M_ij M_kl> = (delta_il
// delta_jk + delta_ik delta_jl) / N. Same limits.
BigRational goe_moment(const MomentSpec& spec);

// sum_F bins[F] * N^(F - E): the histogram side of the moment identities.
BigRational face_power_sum(const FaceHistogram& histogram, unsigned dimension,
                           std::uint64_t edges);

} // namespace mapenum
