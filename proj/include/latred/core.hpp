#ifndef LATRED_CORE_HPP
#define LATRED_CORE_HPP

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace latred {

// All scalar arithmetic is exact; reduction coefficients reach 5^(4n)*M,
// so machine words are never enough.
using BigInt = mpz_class;
using IntVec = std::vector<BigInt>;

// base^exp as an exact integer.
BigInt ui_pow(unsigned long base, unsigned long exp);

// Dense row-major integer matrix.
class IntMat {
public:
    IntMat() = default;
    IntMat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static IntMat identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    BigInt& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const BigInt& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    const IntVec& entries() const { return entries_; }

    bool operator==(const IntMat&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    IntVec entries_;
};

// Norm threshold, kept exact: either an infinity-norm bound k, or a p-norm
// bound stored as the integer k^p (k itself may be irrational, k^p never is).
class NormBound {
public:
    static NormBound inf(BigInt k);
    static NormBound pnorm(int p, BigInt k_pow);

    bool is_inf() const { return p_ == 0; }
    // Exponent of a p-norm bound; only meaningful when !is_inf().
    int p() const { return p_; }
    // k for an infinity bound, k^p for a p-norm bound.
    const BigInt& threshold() const { return threshold_; }

    bool operator==(const NormBound&) const = default;

private:
    NormBound(int p, BigInt threshold) : p_(p), threshold_(std::move(threshold)) {}

    int p_ = 0; // 0 encodes the infinity norm
    BigInt threshold_;
};

// max_i |v_i|; 0 for the empty vector.
BigInt inf_norm(const IntVec& v);

// sum_i |v_i|^p, the p-th power of the p-norm, exact. Requires p >= 1.
BigInt p_norm_pow(const IntVec& v, int p);

// Exact threshold test: inf_norm(v) <= k, or p_norm_pow(v,p) <= k^p.
bool norm_within(const IntVec& v, const NormBound& nb);

// B*x. Requires B.cols == x.size().
IntVec mat_vec_mul(const IntMat& B, const IntVec& x);

// sum_i a_i*b_i. Requires a.size() == b.size().
BigInt inner_product(const IntVec& a, const IntVec& b);

IntVec vec_add(const IntVec& a, const IntVec& b);
IntVec vec_sub(const IntVec& a, const IntVec& b);
IntVec vec_neg(const IntVec& a);

} // namespace latred

#endif
