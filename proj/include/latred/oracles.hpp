#ifndef LATRED_ORACLES_HPP
#define LATRED_ORACLES_HPP

#include "latred/problems.hpp"

#include <optional>
#include <stdexcept>

namespace latred {

// Brute-force exact deciders. Each one is independent ground truth: no
// oracle calls another, and every returned certificate is re-checked against
// its checker before it leaves the function.

struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr unsigned long long kDefaultBudget = 100'000'000ULL;

// Per-coordinate inclusive enumeration bounds for coefficient vectors.
struct SearchBox {
    IntVec lo;
    IntVec hi;

    std::size_t dims() const { return lo.size(); }
    // Number of candidate vectors in the box.
    BigInt count() const;
};

// Lexicographically smallest subset (by sorted index sequence) summing to s,
// or nullopt. Requires n <= 24.
std::optional<IndexSet> subset_sum_oracle(const SubsetSumInstance& inst);

// Lexicographically smallest balancing index set, or nullopt. Requires n <= 24.
std::optional<IndexSet> partition_oracle(const PartitionInstance& inst);

// First x in [-k,k]^n \ {0}, lexicographic order, with <b,x> = 0. Requires
// (2k+1)^n within budget.
std::optional<IntVec> bhle_oracle(const BhleInstance& inst,
                                  unsigned long long budget = kDefaultBudget);

// First x in the box, lexicographic order, passing check_cvp. A nullopt
// means none-within-box; it is a NO verdict only when the box provably
// contains all candidate solutions.
std::optional<IntVec> cvp_oracle(const CvpInstance& inst, const SearchBox& box,
                                 unsigned long long budget = kDefaultBudget);

// First x in the box, lexicographic order, passing check_svp; nullopt means
// none-within-box.
std::optional<IntVec> svp_oracle(const SvpInstance& inst, const SearchBox& box,
                                 unsigned long long budget = kDefaultBudget);

// {0,1}^n: complete for every CVP instance produced by the Subset Sum
// reductions. The bound forces |2x_i - 1| <= 1 in infinity norm, and for the
// p-norm instances any x_i outside {0,1} already contributes 3^p > n - (n-1).
SearchBox reduced_cvp_box(std::size_t n);

// [-k,k]^n x [-1,1]: the identity rows force |x_i| <= k, and the corner
// factor argument bounds the last coordinate. Complete for the corrected
// factor; for the report/abs factors the last-coordinate bound is unproven
// in general but contains the known counterexample witnesses.
SearchBox reduced_svp_box(const BhleInstance& inst);

} // namespace latred

#endif
