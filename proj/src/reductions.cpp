#include "latred/reductions.hpp"

#include <stdexcept>

namespace latred {

namespace {

void require_nonempty(std::size_t n, const char* who) {
    if (n == 0)
        throw std::invalid_argument(std::string(who) + ": n = 0 is not supported");
}

void require_scale(const BigInt& c, const char* who) {
    if (c <= 1)
        throw std::invalid_argument(std::string(who) + ": requires c > 1");
}

} // namespace

BigInt svp_corner_factor(const BhleInstance& inst, SvpFactorVariant variant) {
    BigInt sum = 0;
    BigInt sum_abs = 0;
    for (const auto& e : inst.b) {
        sum += e;
        sum_abs += abs(e);
    }
    BigInt kp1 = inst.k + 1;
    switch (variant) {
    case SvpFactorVariant::KReport:
        return 2 * kp1 * sum + 1;
    case SvpFactorVariant::KAbs:
        return 2 * kp1 * sum_abs + 1;
    case SvpFactorVariant::KCorrected:
        return 2 * inst.k * kp1 * sum_abs + 1;
    }
    throw std::logic_error("svp_corner_factor: unknown variant");
}

CvpInstance subset_sum_to_cvp_inf(const SubsetSumInstance& inst) {
    std::size_t n = inst.a.size();
    require_nonempty(n, "subset_sum_to_cvp_inf");

    IntMat basis(n + 2, n);
    for (std::size_t j = 0; j < n; ++j) {
        basis.at(0, j) = inst.a[j];
        basis.at(1, j) = inst.a[j];
        basis.at(2 + j, j) = 2;
    }
    IntVec target(n + 2, BigInt(1));
    target[0] = inst.s - 1;
    target[1] = inst.s + 1;
    return CvpInstance{std::move(basis), std::move(target), NormBound::inf(1)};
}

CvpInstance subset_sum_to_cvp_pnorm(const SubsetSumInstance& inst, int p) {
    std::size_t n = inst.a.size();
    require_nonempty(n, "subset_sum_to_cvp_pnorm");
    if (p < 1)
        throw std::invalid_argument("subset_sum_to_cvp_pnorm: p must be >= 1");

    IntMat basis(n + 1, n);
    for (std::size_t j = 0; j < n; ++j) {
        basis.at(0, j) = inst.a[j];
        basis.at(1 + j, j) = 2;
    }
    IntVec target(n + 1, BigInt(1));
    target[0] = inst.s;
    // The paper's bound is k = n^(1/p), irrational in general; k^p = n is
    // exact.
    return CvpInstance{std::move(basis), std::move(target), NormBound::pnorm(p, BigInt(n))};
}

CvpInstance subset_sum_to_cvp_scaled(const SubsetSumInstance& inst, const BigInt& c) {
    std::size_t n = inst.a.size();
    require_nonempty(n, "subset_sum_to_cvp_scaled");
    require_scale(c, "subset_sum_to_cvp_scaled");

    IntMat basis(n + 1, n);
    for (std::size_t j = 0; j < n; ++j) {
        basis.at(0, j) = c * inst.a[j];
        basis.at(1 + j, j) = 2;
    }
    IntVec target(n + 1, BigInt(1));
    target[0] = c * inst.s;
    return CvpInstance{std::move(basis), std::move(target), NormBound::inf(1)};
}

SvpInstance flawed_subset_sum_to_svp(const SubsetSumInstance& inst, const BigInt& c) {
    std::size_t n = inst.a.size();
    require_nonempty(n, "flawed_subset_sum_to_svp");
    require_scale(c, "flawed_subset_sum_to_svp");

    IntMat basis(n + 1, n + 1);
    for (std::size_t j = 0; j < n; ++j) {
        basis.at(0, j) = c * inst.a[j];
        basis.at(1 + j, j) = 2;
        basis.at(1 + j, n) = 1;
    }
    basis.at(0, n) = c * inst.s;
    return SvpInstance{std::move(basis), NormBound::inf(1)};
}

BhleInstance partition_to_bhle(const PartitionInstance& inst) {
    std::size_t n = inst.a.size();
    require_nonempty(n, "partition_to_bhle");

    BigInt sum_abs = 0;
    for (const auto& e : inst.a)
        sum_abs += abs(e);
    BigInt m = 2 * sum_abs + 1; // strictly dominates any reachable a-sum

    IntVec b;
    b.reserve(5 * n - 1);
    for (std::size_t i = 1; i <= n; ++i) {
        const BigInt& ai = inst.a[i - 1];
        unsigned long e = 4 * static_cast<unsigned long>(i); // exponents e-4 .. e
        BigInt p0 = ui_pow(5, e - 4);
        BigInt p1 = ui_pow(5, e - 3);
        BigInt p2 = ui_pow(5, e - 2);
        BigInt p3 = ui_pow(5, e - 1);
        if (i < n) {
            BigInt p4 = ui_pow(5, e);
            // stored order: b_i1, b_i2, b_i4, b_i5, b_i3
            b.push_back(ai + m * (p0 + p1 + p3));
            b.push_back(m * (p1 + p4));
            b.push_back(ai + m * (p2 + p3 + p4));
            b.push_back(m * p3);
            b.push_back(m * (p0 + p2));
        } else {
            // last block: b_n3 omitted, wrap-around digits replaced by +1
            b.push_back(ai + m * (p0 + p1 + p3));
            b.push_back(m * (p1 + 1));
            b.push_back(ai + m * (p2 + p3 + 1));
            b.push_back(m * p3);
        }
    }
    return BhleInstance{std::move(b), BigInt(1)};
}

SvpInstance bhle_to_svp(const BhleInstance& inst, SvpFactorVariant variant) {
    std::size_t n = inst.b.size();
    require_nonempty(n, "bhle_to_svp");
    if (inst.k < 1)
        throw std::invalid_argument("bhle_to_svp: requires k >= 1");

    IntMat basis(n + 1, n + 1);
    BigInt kp1 = inst.k + 1;
    for (std::size_t j = 0; j < n; ++j) {
        basis.at(j, j) = 1;
        basis.at(n, j) = kp1 * inst.b[j];
    }
    basis.at(n, n) = svp_corner_factor(inst, variant);
    return SvpInstance{std::move(basis), NormBound::inf(inst.k)};
}

} // namespace latred
