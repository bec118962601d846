#ifndef LATRED_REDUCTIONS_HPP
#define LATRED_REDUCTIONS_HPP

#include "latred/problems.hpp"

namespace latred {

// Corner factor of the BHLE->SVP basis. KReport is the technical report's
// original factor and KAbs its absolute-value repair; both admit shortest
// vectors with a nonzero last coordinate and are kept so those failures can
// be reproduced. KCorrected is the factor for which the reduction is sound.
enum class SvpFactorVariant {
    KReport,    // 2*(k+1)*(sum b_i) + 1
    KAbs,       // 2*(k+1)*(sum |b_i|) + 1
    KCorrected, // 2*k*(k+1)*(sum |b_i|) + 1
};

// The selected corner factor for a given instance.
BigInt svp_corner_factor(const BhleInstance& inst, SvpFactorVariant variant);

// Subset Sum -> CVP in infinity norm. Basis is (n+2) x n: the row (a_1..a_n)
// twice, then 2*identity; target (s-1, s+1, 1, ..., 1); bound inf <= 1.
// The duplicated row with targets s-1 and s+1 pins sum a_i x_i to exactly s,
// which a single row with target s cannot do in the infinity norm.
CvpInstance subset_sum_to_cvp_inf(const SubsetSumInstance& inst);

// Subset Sum -> CVP in p-norm. Basis is (n+1) x n: row (a_1..a_n), then
// 2*identity; target (s, 1, ..., 1); bound k^p = n.
CvpInstance subset_sum_to_cvp_pnorm(const SubsetSumInstance& inst, int p);

// Subset Sum -> CVP in infinity norm, scaled variant: row 1 is c*a with
// target c*s for a constant c > 1 (typically 2); bound inf <= 1.
CvpInstance subset_sum_to_cvp_scaled(const SubsetSumInstance& inst, const BigInt& c);

// The literature's Subset Sum -> SVP construction. Basis is (n+1) x (n+1):
// row (c*a_1 .. c*a_n, c*s), then (2*identity | column of ones); bound
// inf <= 1. Intentionally NOT equivalence-preserving: NO instances can map
// to YES instances. Retained to reproduce the counterexamples.
SvpInstance flawed_subset_sum_to_svp(const SubsetSumInstance& inst, const BigInt& c);

// Partition -> BHLE. Output has length exactly 5n-1 and k = 1; entries mix
// each a_i with base-5 digit cofactors scaled by M = 2*(sum |a_i|) + 1.
// Within each 5-block the third value is stored last, and the final block
// drops it entirely and substitutes +1 for the wrapped-around digits.
BhleInstance partition_to_bhle(const PartitionInstance& inst);

// BHLE -> SVP in infinity norm. Basis is (n+1) x (n+1): identity on top with
// a zero last column, last row ((k+1)*b_1, ..., (k+1)*b_n, k''); bound
// inf <= k. The last row's global sign is normalized to +; negating a basis
// row negates one coordinate of every lattice vector and changes no norms.
SvpInstance bhle_to_svp(const BhleInstance& inst, SvpFactorVariant variant);

} // namespace latred

#endif
