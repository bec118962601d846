#include "latred/core.hpp"

#include <stdexcept>

namespace latred {

BigInt ui_pow(unsigned long base, unsigned long exp) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

IntMat IntMat::identity(std::size_t n) {
    IntMat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

NormBound NormBound::inf(BigInt k) {
    if (k < 0)
        throw std::invalid_argument("NormBound::inf: threshold must be nonnegative");
    return NormBound(0, std::move(k));
}

NormBound NormBound::pnorm(int p, BigInt k_pow) {
    if (p < 1)
        throw std::invalid_argument("NormBound::pnorm: p must be >= 1");
    if (k_pow < 0)
        throw std::invalid_argument("NormBound::pnorm: threshold must be nonnegative");
    return NormBound(p, std::move(k_pow));
}

BigInt inf_norm(const IntVec& v) {
    BigInt m = 0;
    for (const auto& e : v) {
        if (mpz_cmpabs(m.get_mpz_t(), e.get_mpz_t()) < 0)
            m = abs(e);
    }
    return m;
}

BigInt p_norm_pow(const IntVec& v, int p) {
    if (p < 1)
        throw std::invalid_argument("p_norm_pow: p must be >= 1");
    BigInt sum = 0;
    BigInt term;
    for (const auto& e : v) {
        mpz_pow_ui(term.get_mpz_t(), e.get_mpz_t(), static_cast<unsigned long>(p));
        mpz_abs(term.get_mpz_t(), term.get_mpz_t());
        sum += term;
    }
    return sum;
}

bool norm_within(const IntVec& v, const NormBound& nb) {
    if (nb.is_inf())
        return inf_norm(v) <= nb.threshold();
    return p_norm_pow(v, nb.p()) <= nb.threshold();
}

IntVec mat_vec_mul(const IntMat& B, const IntVec& x) {
    if (B.cols() != x.size())
        throw std::invalid_argument("mat_vec_mul: dimension mismatch");
    IntVec out(B.rows());
    for (std::size_t r = 0; r < B.rows(); ++r) {
        BigInt& acc = out[r];
        for (std::size_t c = 0; c < B.cols(); ++c)
            mpz_addmul(acc.get_mpz_t(), B.at(r, c).get_mpz_t(), x[c].get_mpz_t());
    }
    return out;
}

BigInt inner_product(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("inner_product: dimension mismatch");
    BigInt acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        mpz_addmul(acc.get_mpz_t(), a[i].get_mpz_t(), b[i].get_mpz_t());
    return acc;
}

IntVec vec_add(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("vec_add: dimension mismatch");
    IntVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] + b[i];
    return out;
}

IntVec vec_sub(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("vec_sub: dimension mismatch");
    IntVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] - b[i];
    return out;
}

IntVec vec_neg(const IntVec& a) {
    IntVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = -a[i];
    return out;
}

} // namespace latred
