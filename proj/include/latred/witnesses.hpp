#ifndef LATRED_WITNESSES_HPP
#define LATRED_WITNESSES_HPP

#include "latred/problems.hpp"

#include <stdexcept>

namespace latred {

// Thrown when a certificate map receives or produces something that cannot
// come from a genuine solution of a reduced instance. These maps encode the
// equivalence proofs constructively; silent acceptance would mask bugs.
struct witness_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Subset -> CVP coefficients: x_i = 1 iff i in S.
IntVec subset_to_cvp_coeffs(const IndexSet& s, std::size_t n);

// Inverse direction: requires every x_i in {0,1} (the reduced-CVP bound
// forces this for any valid certificate), returns {i : x_i = 1}.
IndexSet cvp_coeffs_to_subset(const IntVec& x);

// Partition -> BHLE coefficients, length 5n-1, entries in {-1,0,1}.
// Each 5-block is (1,-1,0,-1,0) when i and n agree on membership in I and
// (0,0,-1,1,1) otherwise; the final 4-block is (1,-1,0,-1).
IntVec partition_to_bhle_coeffs(const IndexSet& i_set, std::size_t n);

// BHLE -> Partition extraction: reads the weight w = x_{5(n-1)+1}, negates x
// when w = -1, then collects the positions whose block coefficient sum
// x_{5(i-1)+1} + x_{5(i-1)+3} is +1. Re-validates the result against
// check_partition and throws witness_error on any inconsistency, including
// w = 0 (which would force x = 0).
IndexSet bhle_coeffs_to_partition(const IntVec& x, const PartitionInstance& inst);

// BHLE -> SVP coefficients: append the forced zero last coordinate.
IntVec bhle_to_svp_coeffs(const IntVec& x);

// SVP -> BHLE coefficients: strip the last coordinate, which must be zero.
// With the corrected corner factor it always is; for the report/abs factors
// a nonzero last coordinate is exactly the counterexample behavior.
IntVec svp_coeffs_to_bhle(const IntVec& x);

} // namespace latred

#endif
