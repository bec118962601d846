#include "latred/harness.hpp"

#include "latred/witnesses.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace latred {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

// Deterministic draw stream; every generator owns one seeded instance, so a
// generator is a pure function of its config.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(gmp_randinit_mt) {
        state_.seed(static_cast<unsigned long>(seed));
    }

    // uniform in [0, n-1], n >= 1
    BigInt below(const BigInt& n) { return state_.get_z_range(n); }

    unsigned long below_ul(unsigned long n) { return below(BigInt(n)).get_ui(); }

    BigInt in_range(const BigInt& lo, const BigInt& hi) { return lo + below(hi - lo + 1); }

    bool chance(double p) {
        if (p >= 1.0)
            return true;
        if (p <= 0.0)
            return false;
        constexpr unsigned long kScale = 1UL << 30;
        return below_ul(kScale) < static_cast<unsigned long>(p * static_cast<double>(kScale));
    }

    bool coin() { return below_ul(2) == 1; }

private:
    gmp_randclass state_;
};

std::size_t draw_n(Rng& rng, const GenConfig& cfg) {
    if (cfg.n_min > cfg.n_max || cfg.n_min == 0)
        throw std::invalid_argument("GenConfig: need 1 <= n_min <= n_max");
    return cfg.n_min + rng.below_ul(static_cast<unsigned long>(cfg.n_max - cfg.n_min + 1));
}

// Certificates' value counts: basis entries + target entries + the bound.
std::size_t cvp_value_count(const CvpInstance& inst) {
    return inst.basis.rows() * inst.basis.cols() + inst.target.size() + 1;
}

std::size_t svp_value_count(const SvpInstance& inst) {
    return inst.basis.rows() * inst.basis.cols() + 1;
}

// Certificates of the flawed construction can have arbitrarily large last
// coordinates in degenerate cases, so no complete box exists; this one
// contains every witness whose last coordinate lies in [-(2n+1), 2n+1]
// (the identity-plus-ones rows then force |x_i| <= n+1), which covers the
// published counterexamples. Verdicts are witnessed-YES only.
SearchBox flawed_svp_box(std::size_t n) {
    BigInt coeff_bound = BigInt(n) + 1;
    BigInt last_bound = 2 * BigInt(n) + 1;
    SearchBox box{IntVec(n + 1, -coeff_bound), IntVec(n + 1, coeff_bound)};
    box.lo[n] = -last_bound;
    box.hi[n] = last_bound;
    return box;
}

void run_subset_to_cvp(const ReductionSpec& spec, const SubsetSumInstance& ss, TrialRecord& rec) {
    std::size_t n = ss.a.size();
    auto src = subset_sum_oracle(ss);

    CvpInstance tgt = [&] {
        switch (spec.kind) {
        case ReductionSpec::Kind::SubsetSumToCvpInf:
            return subset_sum_to_cvp_inf(ss);
        case ReductionSpec::Kind::SubsetSumToCvpPnorm:
            return subset_sum_to_cvp_pnorm(ss, spec.p);
        default:
            return subset_sum_to_cvp_scaled(ss, spec.c);
        }
    }();

    auto found = cvp_oracle(tgt, reduced_cvp_box(n));

    rec.source_yes = src.has_value();
    rec.target_yes = found.has_value();
    if (src)
        rec.source_witness = *src;
    if (found)
        rec.target_witness = *found;

    if (spec.kind == ReductionSpec::Kind::SubsetSumToCvpInf) {
        rec.structural_ok = tgt.basis.rows() == n + 2 && tgt.basis.cols() == n &&
                            cvp_value_count(tgt) == (n + 2) * (n + 1) + 1;
    } else {
        rec.structural_ok = tgt.basis.rows() == n + 1 && tgt.basis.cols() == n &&
                            cvp_value_count(tgt) == (n + 1) * (n + 1) + 1;
    }

    rec.roundtrip_ok = [&] {
        try {
            if (src && !check_cvp(tgt, subset_to_cvp_coeffs(*src, n)))
                return false;
            if (found && !check_subset_sum(ss, cvp_coeffs_to_subset(*found)))
                return false;
            return true;
        } catch (const witness_error&) {
            return false;
        }
    }();
}

void run_partition_to_bhle(const PartitionInstance& part, TrialRecord& rec) {
    std::size_t n = part.a.size();
    auto src = partition_oracle(part);
    BhleInstance tgt = partition_to_bhle(part);
    auto found = bhle_oracle(tgt);

    rec.source_yes = src.has_value();
    rec.target_yes = found.has_value();
    if (src)
        rec.source_witness = *src;
    if (found)
        rec.target_witness = *found;
    rec.structural_ok = tgt.b.size() == 5 * n - 1 && tgt.k == 1;

    rec.roundtrip_ok = [&] {
        try {
            if (src && !check_bhle(tgt, partition_to_bhle_coeffs(*src, n)))
                return false;
            if (found && !check_partition(part, bhle_coeffs_to_partition(*found, part)))
                return false;
            return true;
        } catch (const witness_error&) {
            return false;
        }
    }();
}

void run_bhle_to_svp(const ReductionSpec& spec, const BhleInstance& bhle, TrialRecord& rec) {
    std::size_t n = bhle.b.size();
    auto src = bhle_oracle(bhle);
    SvpInstance tgt = bhle_to_svp(bhle, spec.variant);
    auto found = svp_oracle(tgt, reduced_svp_box(bhle));

    rec.source_yes = src.has_value();
    rec.target_yes = found.has_value();
    if (src)
        rec.source_witness = *src;
    if (found)
        rec.target_witness = *found;
    rec.structural_ok = tgt.basis.rows() == n + 1 && tgt.basis.cols() == n + 1 &&
                        svp_value_count(tgt) == (n + 1) * (n + 1) + 1;

    rec.roundtrip_ok = [&] {
        try {
            if (src && !check_svp(tgt, bhle_to_svp_coeffs(*src)))
                return false;
            if (found) {
                // svp_coeffs_to_bhle rejects a nonzero last coordinate; with
                // the corrected factor that never happens for a valid witness.
                if (!check_bhle(bhle, svp_coeffs_to_bhle(*found)))
                    return false;
            }
            return true;
        } catch (const witness_error&) {
            return false;
        }
    }();
}

void run_flawed_subset_to_svp(const ReductionSpec& spec, const SubsetSumInstance& ss,
                              TrialRecord& rec) {
    std::size_t n = ss.a.size();
    auto src = subset_sum_oracle(ss);
    SvpInstance tgt = flawed_subset_sum_to_svp(ss, spec.c);
    auto found = svp_oracle(tgt, flawed_svp_box(n));

    rec.source_yes = src.has_value();
    rec.target_yes = found.has_value();
    if (src)
        rec.source_witness = *src;
    if (found)
        rec.target_witness = *found;
    rec.structural_ok = tgt.basis.rows() == n + 1 && tgt.basis.cols() == n + 1 &&
                        svp_value_count(tgt) == (n + 1) * (n + 1) + 1;
    // There are no certificate maps for the flawed construction; that is the
    // point of keeping it.
    rec.roundtrip_ok = true;
}

} // namespace

std::uint64_t derive_seed(std::uint64_t base, const std::string& label, std::uint64_t index) {
    return splitmix64(splitmix64(base ^ fnv1a(label)) + index);
}

SubsetSumInstance gen_subset_sum(const GenConfig& cfg) {
    Rng rng(cfg.seed);
    std::size_t n = draw_n(rng, cfg);
    IntVec a(n);
    for (auto& e : a)
        e = rng.in_range(-cfg.magnitude, cfg.magnitude);

    BigInt s;
    if (rng.chance(cfg.yes_bias)) {
        for (const auto& e : a)
            if (rng.coin())
                s += e;
    } else {
        BigInt lim = BigInt(n) * cfg.magnitude;
        s = rng.in_range(-lim, lim);
    }
    return SubsetSumInstance{std::move(a), std::move(s)};
}

PartitionInstance gen_partition(const GenConfig& cfg) {
    Rng rng(cfg.seed);
    std::size_t n = draw_n(rng, cfg);
    IntVec a(n);
    if (rng.chance(cfg.yes_bias)) {
        // Paired values guarantee a balancing set; an odd length gets a zero.
        for (std::size_t j = 0; j + 1 < n; j += 2) {
            BigInt v = rng.in_range(-cfg.magnitude, cfg.magnitude);
            a[j] = v;
            a[j + 1] = v;
        }
        if (n % 2 == 1)
            a[n - 1] = 0;
        for (std::size_t i = n - 1; i > 0; --i) {
            std::size_t j = rng.below_ul(static_cast<unsigned long>(i + 1));
            std::swap(a[i], a[j]);
        }
    } else {
        for (auto& e : a)
            e = rng.in_range(-cfg.magnitude, cfg.magnitude);
    }
    return PartitionInstance{std::move(a)};
}

BhleInstance gen_bhle(const GenConfig& cfg, unsigned k_min, unsigned k_max) {
    if (k_min < 1 || k_min > k_max)
        throw std::invalid_argument("gen_bhle: need 1 <= k_min <= k_max");
    Rng rng(cfg.seed);
    std::size_t n = draw_n(rng, cfg);
    BigInt k = BigInt(k_min) + rng.below(BigInt(k_max - k_min + 1));

    IntVec b(n);
    if (rng.chance(cfg.yes_bias)) {
        if (n == 1) {
            b[0] = 0; // the only YES shape in one dimension
        } else {
            for (auto& e : b)
                e = rng.in_range(-cfg.magnitude, cfg.magnitude);
            // A duplicated entry admits the witness e_i - e_j.
            std::size_t i = rng.below_ul(static_cast<unsigned long>(n));
            std::size_t j = rng.below_ul(static_cast<unsigned long>(n - 1));
            if (j >= i)
                ++j;
            b[j] = b[i];
        }
    } else {
        for (auto& e : b)
            e = rng.in_range(-cfg.magnitude, cfg.magnitude);
    }
    return BhleInstance{std::move(b), std::move(k)};
}

std::string ReductionSpec::name() const {
    switch (kind) {
    case Kind::SubsetSumToCvpInf:
        return "subsetsum->cvp-inf";
    case Kind::SubsetSumToCvpPnorm:
        return "subsetsum->cvp-p" + std::to_string(p);
    case Kind::SubsetSumToCvpScaled:
        return "subsetsum->cvp-scaled-c" + c.get_str();
    case Kind::FlawedSubsetSumToSvp:
        return "subsetsum->svp-flawed-c" + c.get_str();
    case Kind::PartitionToBhle:
        return "partition->bhle";
    case Kind::BhleToSvp:
        switch (variant) {
        case SvpFactorVariant::KReport:
            return "bhle->svp-report";
        case SvpFactorVariant::KAbs:
            return "bhle->svp-abs";
        case SvpFactorVariant::KCorrected:
            return "bhle->svp-corrected";
        }
    }
    return "unknown";
}

TrialRecord run_equivalence(const ReductionSpec& spec, const ProblemInstance& inst) {
    TrialRecord rec;
    rec.reduction = spec.name();
    rec.instance = inst;

    auto t0 = std::chrono::steady_clock::now();
    switch (spec.kind) {
    case ReductionSpec::Kind::SubsetSumToCvpInf:
    case ReductionSpec::Kind::SubsetSumToCvpPnorm:
    case ReductionSpec::Kind::SubsetSumToCvpScaled:
        run_subset_to_cvp(spec, std::get<SubsetSumInstance>(inst), rec);
        break;
    case ReductionSpec::Kind::FlawedSubsetSumToSvp:
        run_flawed_subset_to_svp(spec, std::get<SubsetSumInstance>(inst), rec);
        break;
    case ReductionSpec::Kind::PartitionToBhle:
        run_partition_to_bhle(std::get<PartitionInstance>(inst), rec);
        break;
    case ReductionSpec::Kind::BhleToSvp:
        run_bhle_to_svp(spec, std::get<BhleInstance>(inst), rec);
        break;
    }
    rec.elapsed = std::chrono::steady_clock::now() - t0;
    return rec;
}

std::vector<ReductionSpec> default_suite_reductions() {
    std::vector<ReductionSpec> list;
    list.push_back({ReductionSpec::Kind::SubsetSumToCvpInf});
    for (int p : {1, 2, 3})
        list.push_back({ReductionSpec::Kind::SubsetSumToCvpPnorm, p});
    list.push_back({ReductionSpec::Kind::SubsetSumToCvpScaled});
    list.push_back({ReductionSpec::Kind::PartitionToBhle});
    list.push_back({ReductionSpec::Kind::BhleToSvp, 2, 2, SvpFactorVariant::KCorrected});
    list.push_back({ReductionSpec::Kind::FlawedSubsetSumToSvp});
    return list;
}

bool SuiteSummary::ok() const {
    for (const auto& st : per_reduction) {
        if (st.witness_failures > 0 || st.structural_failures > 0)
            return false;
        if (st.gating && st.mismatches > 0)
            return false;
        // A flawed reduction that fails to exhibit a mismatch is a failure
        // too: the refutation is part of the contract.
        if (!st.gating && st.mismatches == 0)
            return false;
    }
    return true;
}

std::string SuiteSummary::to_text() const {
    std::ostringstream out;
    out << "suite: seed=" << seed << " base_trials=" << base_trials << "\n";
    for (const auto& st : per_reduction) {
        out << (st.gating ? "[gating] " : "[flawed] ") << st.name << " trials=" << st.trials
            << " src_yes=" << st.source_yes << " src_no=" << st.source_no
            << " tgt_yes=" << st.target_yes << " tgt_no=" << st.target_no
            << " mismatch=" << st.mismatches << " witness_fail=" << st.witness_failures
            << " structural_fail=" << st.structural_failures << "\n";
    }
    out << "result: " << (ok() ? "PASS" : "FAIL") << "\n";
    return out.str();
}

SuiteSummary run_suite(const GenConfig& cfg, std::size_t base_trials,
                       const std::vector<ReductionSpec>& reductions) {
    SuiteSummary summary;
    summary.seed = cfg.seed;
    summary.base_trials = base_trials;

    for (const auto& spec : reductions) {
        ReductionStats st;
        st.name = spec.name();
        st.gating = spec.gating();

        auto run_one = [&](const ProblemInstance& inst) {
            TrialRecord rec = run_equivalence(spec, inst);
            ++st.trials;
            ++(rec.source_yes ? st.source_yes : st.source_no);
            ++(rec.target_yes ? st.target_yes : st.target_no);
            if (!rec.verdicts_agree())
                ++st.mismatches;
            if (!rec.roundtrip_ok)
                ++st.witness_failures;
            if (!rec.structural_ok)
                ++st.structural_failures;
        };

        auto seeded_trials = [&](std::size_t count, const GenConfig& base,
                                 const std::function<ProblemInstance(const GenConfig&)>& gen) {
            for (std::size_t t = 0; t < count; ++t) {
                GenConfig g = base;
                g.seed = derive_seed(cfg.seed, st.name, t);
                run_one(gen(g));
            }
        };

        switch (spec.kind) {
        case ReductionSpec::Kind::SubsetSumToCvpInf:
            seeded_trials(base_trials, cfg,
                          [](const GenConfig& g) { return ProblemInstance(gen_subset_sum(g)); });
            break;
        case ReductionSpec::Kind::SubsetSumToCvpPnorm:
        case ReductionSpec::Kind::SubsetSumToCvpScaled:
            seeded_trials(base_trials / 2, cfg,
                          [](const GenConfig& g) { return ProblemInstance(gen_subset_sum(g)); });
            break;
        case ReductionSpec::Kind::PartitionToBhle: {
            // Exhaustive over n in {1,2}, |a_i| <= 3 keeps the BHLE oracle
            // fully enumerable; larger n only via the seeded n = 3 slice.
            for (std::size_t n : {std::size_t(1), std::size_t(2)}) {
                IntVec a(n, BigInt(-3));
                for (;;) {
                    run_one(PartitionInstance{a});
                    std::size_t j = n;
                    while (j > 0 && a[j - 1] == 3)
                        --j;
                    if (j == 0)
                        break;
                    ++a[j - 1];
                    for (std::size_t i = j; i < n; ++i)
                        a[i] = -3;
                }
            }
            GenConfig g3 = cfg;
            g3.n_min = g3.n_max = 3;
            g3.magnitude = 4;
            seeded_trials(base_trials / 4, g3,
                          [](const GenConfig& g) { return ProblemInstance(gen_partition(g)); });
            break;
        }
        case ReductionSpec::Kind::BhleToSvp: {
            GenConfig gb = cfg;
            gb.n_min = 1;
            gb.n_max = 4;
            gb.magnitude = 5;
            seeded_trials(base_trials / 2, gb,
                          [](const GenConfig& g) { return ProblemInstance(gen_bhle(g, 1, 3)); });
            break;
        }
        case ReductionSpec::Kind::FlawedSubsetSumToSvp: {
            // The two published failures first, then a small random slice.
            run_one(SubsetSumInstance{{BigInt(3)}, BigInt(1)});
            run_one(SubsetSumInstance{{BigInt(1), BigInt(1), BigInt(1)}, BigInt(1)});
            GenConfig gf = cfg;
            gf.n_min = 1;
            gf.n_max = 4;
            gf.magnitude = 3;
            seeded_trials(18, gf,
                          [](const GenConfig& g) { return ProblemInstance(gen_subset_sum(g)); });
            break;
        }
        }

        summary.per_reduction.push_back(std::move(st));
    }
    return summary;
}

bool ReproReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass)
            return false;
    return true;
}

std::string ReproReport::to_text() const {
    std::ostringstream out;
    for (const auto& c : checks)
        out << "[repro] " << c.name << ": " << (c.pass ? "PASS" : "FAIL") << " (" << c.detail
            << ")\n";
    out << "repro result: " << (all_pass() ? "PASS" : "FAIL") << "\n";
    return out.str();
}

namespace {

IntVec vec(std::initializer_list<long> xs) {
    IntVec v;
    v.reserve(xs.size());
    for (long x : xs)
        v.emplace_back(x);
    return v;
}

IntMat mat(std::initializer_list<std::initializer_list<long>> rows) {
    std::size_t r = rows.size();
    std::size_t c = rows.begin()->size();
    IntMat m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (long x : row)
            m.at(i, j++) = x;
        ++i;
    }
    return m;
}

std::string vec_str(const IntVec& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += ",";
        out += v[i].get_str();
    }
    return out + ")";
}

} // namespace

ReproReport repro_counterexamples() {
    ReproReport report;
    const BigInt c2 = 2;

    {
        // NO Subset Sum instance mapped to a YES SVP instance.
        SubsetSumInstance ss{vec({3}), BigInt(1)};
        SvpInstance svp = flawed_subset_sum_to_svp(ss, c2);
        IntVec witness = vec({-1, 3});
        bool source_no = !subset_sum_oracle(ss).has_value();
        bool basis_ok = svp.basis == mat({{6, 2}, {2, 1}});
        IntVec image = mat_vec_mul(svp.basis, witness);
        bool witness_ok = image == vec({0, 1}) && check_svp(svp, witness);
        bool search_yes = svp_oracle(svp, flawed_svp_box(1)).has_value();
        report.checks.push_back(
            {"flawed svp reduction turns NO instance a=(3),s=1 into YES",
             source_no && basis_ok && witness_ok && search_yes,
             "B'=((6,2),(2,1)), B'*(-1,3)=" + vec_str(image) + ", source verdict NO"});
    }
    {
        // Shortest vector with last coefficient 3 instead of the claimed -1.
        SubsetSumInstance ss{vec({1, 1, 1}), BigInt(1)};
        SvpInstance svp = flawed_subset_sum_to_svp(ss, c2);
        IntVec witness = vec({-1, -1, -1, 3});
        bool source_yes = subset_sum_oracle(ss).has_value();
        IntVec image = mat_vec_mul(svp.basis, witness);
        bool witness_ok =
            image == vec({0, 1, 1, 1}) && inf_norm(image) == 1 && check_svp(svp, witness);
        report.checks.push_back({"flawed svp reduction admits last coefficient 3 on a=(1,1,1),s=1",
                                 source_yes && witness_ok,
                                 "B*(-1,-1,-1,3)=" + vec_str(image) + ", infinity norm 1"});
    }

    BhleInstance bhle1{vec({1, -1}), BigInt(1)};
    BhleInstance bhle5{vec({1, -1}), BigInt(5)};
    {
        // Report factor degenerates to 1 because sum b_i = 0.
        BigInt factor = svp_corner_factor(bhle1, SvpFactorVariant::KReport);
        SvpInstance svp = bhle_to_svp(bhle1, SvpFactorVariant::KReport);
        bool basis_ok = svp.basis == mat({{1, 0, 0}, {0, 1, 0}, {2, -2, 1}});
        bool admits = check_svp(svp, vec({0, 0, 1}));
        bool source_yes = bhle_oracle(bhle1).has_value();
        report.checks.push_back({"report corner factor on b=(1,-1),k=1 admits (0,0,1)",
                                 factor == 1 && basis_ok && admits && source_yes,
                                 "k''=" + factor.get_str() + ", nonzero last coordinate accepted"});
    }
    {
        // Absolute-value factor still fails once k grows.
        BigInt factor = svp_corner_factor(bhle5, SvpFactorVariant::KAbs);
        SvpInstance svp = bhle_to_svp(bhle5, SvpFactorVariant::KAbs);
        bool basis_ok = svp.basis == mat({{1, 0, 0}, {0, 1, 0}, {6, -6, 25}});
        IntVec image = mat_vec_mul(svp.basis, vec({0, 5, 1}));
        bool admits = image == vec({0, 5, -5}) && check_svp(svp, vec({0, 5, 1}));
        report.checks.push_back({"abs corner factor on b=(1,-1),k=5 admits (0,5,1)",
                                 factor == 25 && basis_ok && admits,
                                 "k''_1=" + factor.get_str() + ", B2*(0,5,1)=" + vec_str(image)});
    }
    {
        // The corrected factor rejects both witnesses above.
        SvpInstance corr1 = bhle_to_svp(bhle1, SvpFactorVariant::KCorrected);
        SvpInstance corr5 = bhle_to_svp(bhle5, SvpFactorVariant::KCorrected);
        BigInt f1 = svp_corner_factor(bhle1, SvpFactorVariant::KCorrected);
        BigInt f5 = svp_corner_factor(bhle5, SvpFactorVariant::KCorrected);
        bool rejects = !check_svp(corr1, vec({0, 0, 1})) && !check_svp(corr5, vec({0, 5, 1}));
        report.checks.push_back({"corrected corner factor rejects both witnesses",
                                 f1 == 9 && f5 == 121 && rejects,
                                 "k''_2=" + f1.get_str() + " and " + f5.get_str() +
                                     ", both witnesses rejected"});
    }
    return report;
}

} // namespace latred
