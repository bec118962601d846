#ifndef LATRED_PROBLEMS_HPP
#define LATRED_PROBLEMS_HPP

#include "latred/core.hpp"

#include <set>
#include <variant>

namespace latred {

// The five decision problems, in decision (not optimization) form.

struct SubsetSumInstance {
    IntVec a;
    BigInt s;
    bool operator==(const SubsetSumInstance&) const = default;
};

struct PartitionInstance {
    IntVec a;
    bool operator==(const PartitionInstance&) const = default;
};

// Bounded Homogeneous Linear Equations: nonzero x with |x|_inf <= k and <b,x> = 0.
struct BhleInstance {
    IntVec b;
    BigInt k; // must be >= 1
    bool operator==(const BhleInstance&) const = default;
};

struct CvpInstance {
    IntMat basis;
    IntVec target; // length must equal basis.rows()
    NormBound bound;
    bool operator==(const CvpInstance&) const = default;
};

struct SvpInstance {
    IntMat basis;
    NormBound bound;
    bool operator==(const SvpInstance&) const = default;
};

using ProblemInstance =
    std::variant<SubsetSumInstance, PartitionInstance, BhleInstance, CvpInstance, SvpInstance>;

// 1-based index positions into an instance's list.
using IndexSet = std::set<std::size_t>;

// Witness for a YES verdict: an index set or an integer coefficient vector.
using Certificate = std::variant<IndexSet, IntVec>;

// Exact certificate checkers. These define YES-instance semantics; every
// oracle and every reduction test is validated against them.

// sum_{i in S} a_i == s. The empty set is a legal certificate (sums to 0).
bool check_subset_sum(const SubsetSumInstance& inst, const IndexSet& cert);

// sum over I equals sum over the complement of I.
bool check_partition(const PartitionInstance& inst, const IndexSet& cert);

// x != 0, |x|_inf <= k, <b,x> = 0.
bool check_bhle(const BhleInstance& inst, const IntVec& cert);

// |Bx - target| within bound. x = 0 is allowed: the definition has no
// nonzero condition.
bool check_cvp(const CvpInstance& inst, const IntVec& cert);

// v = Bx, v != 0 and |v| within bound. The nonzero test is on the lattice
// vector v, not on x; for non-injective bases the two differ.
bool check_svp(const SvpInstance& inst, const IntVec& cert);

} // namespace latred

#endif
