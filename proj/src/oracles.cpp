#include "latred/oracles.hpp"

#include <functional>

namespace latred {

namespace {

constexpr std::size_t kMaxSubsetElems = 24;

// Pre-order DFS over subsets, extending by strictly larger indices: visits
// sorted index sequences in exactly lexicographic order, so the first hit is
// the lexicographically smallest witness.
std::optional<IndexSet> first_subset_such_that(std::size_t n,
                                               const IntVec& values,
                                               const std::function<bool(const BigInt&)>& pred) {
    std::vector<std::size_t> cur;
    BigInt sum = 0;

    std::function<bool(std::size_t)> dfs = [&](std::size_t next) -> bool {
        if (pred(sum))
            return true;
        for (std::size_t j = next; j <= n; ++j) {
            cur.push_back(j);
            sum += values[j - 1];
            if (dfs(j + 1))
                return true;
            sum -= values[j - 1];
            cur.pop_back();
        }
        return false;
    };

    if (dfs(1))
        return IndexSet(cur.begin(), cur.end());
    return std::nullopt;
}

void validate_box(const SearchBox& box, std::size_t expected_dims, unsigned long long budget) {
    if (box.lo.size() != box.hi.size())
        throw std::invalid_argument("SearchBox: lo/hi length mismatch");
    if (box.dims() != expected_dims)
        throw std::invalid_argument("SearchBox: dimension does not match instance");
    for (std::size_t i = 0; i < box.dims(); ++i) {
        if (box.lo[i] > box.hi[i])
            throw std::invalid_argument("SearchBox: lo > hi");
    }
    if (box.count() > BigInt(static_cast<unsigned long>(budget)))
        throw budget_error("search box exceeds enumeration budget");
}

// Walks a box in lexicographic order (last coordinate cycling fastest),
// calling visit on every candidate until it returns true. Returns whether a
// candidate was accepted; x holds it on success.
bool enumerate_box(const SearchBox& box, IntVec& x, const std::function<bool(const IntVec&)>& visit) {
    std::size_t n = box.dims();
    x = box.lo;
    if (n == 0)
        return visit(x); // single empty candidate
    for (;;) {
        if (visit(x))
            return true;
        std::size_t j = n;
        while (j > 0 && x[j - 1] == box.hi[j - 1])
            --j;
        if (j == 0)
            return false;
        ++x[j - 1];
        for (std::size_t i = j; i < n; ++i)
            x[i] = box.lo[i];
    }
}

} // namespace

BigInt SearchBox::count() const {
    BigInt c = 1;
    for (std::size_t i = 0; i < dims(); ++i)
        c *= hi[i] - lo[i] + 1;
    return c;
}

std::optional<IndexSet> subset_sum_oracle(const SubsetSumInstance& inst) {
    if (inst.a.size() > kMaxSubsetElems)
        throw budget_error("subset_sum_oracle: instance too large");
    auto result = first_subset_such_that(inst.a.size(), inst.a,
                                         [&](const BigInt& sum) { return sum == inst.s; });
    if (result && !check_subset_sum(inst, *result))
        throw std::logic_error("subset_sum_oracle: self-validation failed");
    return result;
}

std::optional<IndexSet> partition_oracle(const PartitionInstance& inst) {
    if (inst.a.size() > kMaxSubsetElems)
        throw budget_error("partition_oracle: instance too large");
    BigInt total = 0;
    for (const auto& e : inst.a)
        total += e;
    auto result = first_subset_such_that(inst.a.size(), inst.a,
                                         [&](const BigInt& sum) { return 2 * sum == total; });
    if (result && !check_partition(inst, *result))
        throw std::logic_error("partition_oracle: self-validation failed");
    return result;
}

std::optional<IntVec> bhle_oracle(const BhleInstance& inst, unsigned long long budget) {
    if (inst.k < 1)
        throw std::invalid_argument("bhle_oracle: instance requires k >= 1");
    std::size_t n = inst.b.size();
    if (n == 0)
        return std::nullopt; // no nonzero x exists

    BigInt width = 2 * inst.k + 1;
    BigInt candidates;
    mpz_pow_ui(candidates.get_mpz_t(), width.get_mpz_t(), static_cast<unsigned long>(n));
    if (candidates > BigInt(static_cast<unsigned long>(budget)))
        throw budget_error("bhle_oracle: enumeration exceeds budget");

    // Incremental scan: a lexicographic bump at position j adds b_j to the
    // inner product and resets the tail from hi to lo. Resets subtract the
    // precomputed b_i * (hi - lo).
    IntVec x(n, -inst.k);
    BigInt dot = 0;
    for (std::size_t i = 0; i < n; ++i)
        dot += inst.b[i] * x[i];
    std::size_t nonzero = n; // every coordinate starts at -k, k >= 1

    IntVec reset_delta(n);
    BigInt span = 2 * inst.k;
    for (std::size_t i = 0; i < n; ++i)
        reset_delta[i] = inst.b[i] * span;

    for (;;) {
        if (nonzero > 0 && dot == 0) {
            if (!check_bhle(inst, x))
                throw std::logic_error("bhle_oracle: self-validation failed");
            return x;
        }
        std::size_t j = n;
        while (j > 0 && x[j - 1] == inst.k)
            --j;
        if (j == 0)
            return std::nullopt;
        if (x[j - 1] == 0)
            ++nonzero;
        ++x[j - 1];
        if (x[j - 1] == 0)
            --nonzero;
        dot += inst.b[j - 1];
        for (std::size_t i = j; i < n; ++i) {
            if (x[i] == 0)
                ++nonzero;
            x[i] = -inst.k;
            if (x[i] == 0)
                --nonzero;
            dot -= reset_delta[i];
        }
    }
}

std::optional<IntVec> cvp_oracle(const CvpInstance& inst, const SearchBox& box,
                                 unsigned long long budget) {
    validate_box(box, inst.basis.cols(), budget);
    IntVec x;
    if (enumerate_box(box, x, [&](const IntVec& cand) { return check_cvp(inst, cand); }))
        return x;
    return std::nullopt;
}

std::optional<IntVec> svp_oracle(const SvpInstance& inst, const SearchBox& box,
                                 unsigned long long budget) {
    validate_box(box, inst.basis.cols(), budget);
    IntVec x;
    if (enumerate_box(box, x, [&](const IntVec& cand) { return check_svp(inst, cand); }))
        return x;
    return std::nullopt;
}

SearchBox reduced_cvp_box(std::size_t n) {
    if (n == 0)
        throw std::invalid_argument("reduced_cvp_box: n must be >= 1");
    return SearchBox{IntVec(n, BigInt(0)), IntVec(n, BigInt(1))};
}

SearchBox reduced_svp_box(const BhleInstance& inst) {
    std::size_t n = inst.b.size();
    SearchBox box{IntVec(n + 1, -inst.k), IntVec(n + 1, inst.k)};
    box.lo[n] = -1;
    box.hi[n] = 1;
    return box;
}

} // namespace latred
