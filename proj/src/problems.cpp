#include "latred/problems.hpp"

#include <stdexcept>

namespace latred {

namespace {

// Sum of the indexed entries; indices are 1-based and must lie in 1..a.size().
BigInt indexed_sum(const IntVec& a, const IndexSet& indices) {
    BigInt sum = 0;
    for (std::size_t idx : indices) {
        if (idx < 1 || idx > a.size())
            throw std::invalid_argument("certificate index out of range");
        sum += a[idx - 1];
    }
    return sum;
}

bool is_zero_vec(const IntVec& v) {
    for (const auto& e : v)
        if (e != 0)
            return false;
    return true;
}

} // namespace

bool check_subset_sum(const SubsetSumInstance& inst, const IndexSet& cert) {
    return indexed_sum(inst.a, cert) == inst.s;
}

bool check_partition(const PartitionInstance& inst, const IndexSet& cert) {
    BigInt in_sum = indexed_sum(inst.a, cert);
    BigInt total = 0;
    for (const auto& e : inst.a)
        total += e;
    return in_sum == total - in_sum;
}

bool check_bhle(const BhleInstance& inst, const IntVec& cert) {
    if (inst.k < 1)
        throw std::invalid_argument("check_bhle: instance requires k >= 1");
    if (cert.size() != inst.b.size())
        throw std::invalid_argument("check_bhle: certificate length mismatch");
    if (is_zero_vec(cert))
        return false;
    if (inf_norm(cert) > inst.k)
        return false;
    return inner_product(inst.b, cert) == 0;
}

bool check_cvp(const CvpInstance& inst, const IntVec& cert) {
    if (inst.basis.rows() != inst.target.size())
        throw std::invalid_argument("check_cvp: malformed instance, basis rows != target length");
    if (cert.size() != inst.basis.cols())
        throw std::invalid_argument("check_cvp: certificate length mismatch");
    IntVec diff = vec_sub(mat_vec_mul(inst.basis, cert), inst.target);
    return norm_within(diff, inst.bound);
}

bool check_svp(const SvpInstance& inst, const IntVec& cert) {
    if (cert.size() != inst.basis.cols())
        throw std::invalid_argument("check_svp: certificate length mismatch");
    IntVec v = mat_vec_mul(inst.basis, cert);
    if (is_zero_vec(v))
        return false;
    return norm_within(v, inst.bound);
}

} // namespace latred
