#include "latred/witnesses.hpp"

namespace latred {

namespace {

void require_indices_in_range(const IndexSet& s, std::size_t n, const char* who) {
    for (std::size_t idx : s) {
        if (idx < 1 || idx > n)
            throw std::invalid_argument(std::string(who) + ": index out of range");
    }
}

// Block-local digit constraints every valid certificate of a reduced BHLE
// instance satisfies (derived by splitting <b,x> = 0 into base-5 digits).
// A violation means x did not arise from a genuine reduced-instance solution
// or the block layout was transcribed wrong.
void check_digit_equations(const IntVec& x, std::size_t n) {
    auto at = [&](std::size_t pos1based) -> const BigInt& { return x[pos1based - 1]; };
    auto or_zero = [&](bool cond, std::size_t pos1based) -> BigInt {
        return cond ? at(pos1based) : BigInt(0);
    };

    for (std::size_t j = 1; j < n; ++j) { // links block j to block j+1
        BigInt lhs = at(5 * j + 1) + or_zero(j < n - 1, 5 * j + 5) + at(5 * (j - 1) + 2) +
                     at(5 * (j - 1) + 3);
        if (lhs != 0)
            throw witness_error("bhle certificate violates cross-block digit equation");
    }
    {
        BigInt lhs = at(1) + or_zero(n > 1, 5) + at(5 * (n - 1) + 2) + at(5 * (n - 1) + 3);
        if (lhs != 0)
            throw witness_error("bhle certificate violates wrap-around digit equation");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (at(5 * i + 1) + at(5 * i + 2) != 0)
            throw witness_error("bhle certificate violates first-pair digit equation");
        if (or_zero(i < n - 1, 5 * i + 5) + at(5 * i + 3) != 0)
            throw witness_error("bhle certificate violates carry digit equation");
        if (at(5 * i + 1) + at(5 * i + 3) + at(5 * i + 4) != 0)
            throw witness_error("bhle certificate violates block-sum digit equation");
    }
}

} // namespace

IntVec subset_to_cvp_coeffs(const IndexSet& s, std::size_t n) {
    require_indices_in_range(s, n, "subset_to_cvp_coeffs");
    IntVec x(n);
    for (std::size_t idx : s)
        x[idx - 1] = 1;
    return x;
}

IndexSet cvp_coeffs_to_subset(const IntVec& x) {
    IndexSet s;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 1)
            s.insert(i + 1);
        else if (x[i] != 0)
            throw witness_error("cvp_coeffs_to_subset: coefficient outside {0,1}");
    }
    return s;
}

IntVec partition_to_bhle_coeffs(const IndexSet& i_set, std::size_t n) {
    if (n == 0)
        throw std::invalid_argument("partition_to_bhle_coeffs: n = 0 is not supported");
    require_indices_in_range(i_set, n, "partition_to_bhle_coeffs");

    bool last_in = i_set.count(n) > 0;
    IntVec x;
    x.reserve(5 * n - 1);
    for (std::size_t i = 1; i < n; ++i) {
        if ((i_set.count(i) > 0) == last_in) {
            x.insert(x.end(), {BigInt(1), BigInt(-1), BigInt(0), BigInt(-1), BigInt(0)});
        } else {
            x.insert(x.end(), {BigInt(0), BigInt(0), BigInt(-1), BigInt(1), BigInt(1)});
        }
    }
    x.insert(x.end(), {BigInt(1), BigInt(-1), BigInt(0), BigInt(-1)});
    return x;
}

IndexSet bhle_coeffs_to_partition(const IntVec& x, const PartitionInstance& inst) {
    std::size_t n = inst.a.size();
    if (n == 0)
        throw std::invalid_argument("bhle_coeffs_to_partition: n = 0 is not supported");
    if (x.size() != 5 * n - 1)
        throw std::invalid_argument("bhle_coeffs_to_partition: certificate length != 5n-1");
    for (const auto& e : x) {
        if (e < -1 || e > 1)
            throw std::invalid_argument("bhle_coeffs_to_partition: entry outside {-1,0,1}");
    }

    // Weight: first coefficient of the final block.
    const BigInt& w = x[5 * (n - 1)];
    if (w == 0)
        throw witness_error("bhle_coeffs_to_partition: weight 0 would force x = 0");
    IntVec y = (w == -1) ? vec_neg(x) : x;

    check_digit_equations(y, n);

    IndexSet result;
    for (std::size_t i = 1; i <= n; ++i) {
        BigInt sum = y[5 * (i - 1)] + y[5 * (i - 1) + 2];
        if (sum == 1)
            result.insert(i);
        else if (sum != -1)
            throw witness_error("bhle_coeffs_to_partition: block coefficient sum outside {-1,1}");
    }

    if (!check_partition(inst, result))
        throw witness_error("bhle_coeffs_to_partition: extracted set fails check_partition");
    return result;
}

IntVec bhle_to_svp_coeffs(const IntVec& x) {
    if (x.empty())
        throw std::invalid_argument("bhle_to_svp_coeffs: empty coefficient vector");
    IntVec out = x;
    out.push_back(0);
    return out;
}

IntVec svp_coeffs_to_bhle(const IntVec& x) {
    if (x.size() < 2)
        throw std::invalid_argument("svp_coeffs_to_bhle: need at least two coordinates");
    if (x.back() != 0)
        throw witness_error("svp_coeffs_to_bhle: nonzero last coordinate");
    return IntVec(x.begin(), x.end() - 1);
}

} // namespace latred
