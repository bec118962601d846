#ifndef LATRED_HARNESS_HPP
#define LATRED_HARNESS_HPP

#include "latred/oracles.hpp"
#include "latred/reductions.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace latred {

// Seeded instance generation. Generators are pure functions of their config:
// the same config always yields the same instance.
struct GenConfig {
    std::size_t n_min = 1;
    std::size_t n_max = 10;
    BigInt magnitude = 50; // entries drawn from [-magnitude, magnitude]
    std::uint64_t seed = 1;
    double yes_bias = 0.5; // probability of planting a YES instance
};

SubsetSumInstance gen_subset_sum(const GenConfig& cfg);
PartitionInstance gen_partition(const GenConfig& cfg);
// BHLE corpus generator for the SVP equivalence trials; k drawn from
// [k_min, k_max].
BhleInstance gen_bhle(const GenConfig& cfg, unsigned k_min = 1, unsigned k_max = 3);

// Derives an independent per-trial seed from a base seed and a label/index.
std::uint64_t derive_seed(std::uint64_t base, const std::string& label, std::uint64_t index);

// One reduction under differential test, with its parameters.
struct ReductionSpec {
    enum class Kind {
        SubsetSumToCvpInf,
        SubsetSumToCvpPnorm,
        SubsetSumToCvpScaled,
        FlawedSubsetSumToSvp,
        PartitionToBhle,
        BhleToSvp,
    };

    Kind kind = Kind::SubsetSumToCvpInf;
    int p = 2;
    BigInt c = 2;
    SvpFactorVariant variant = SvpFactorVariant::KCorrected;

    std::string name() const;
    // Flawed reductions are reported but never gate the suite's exit status.
    bool gating() const { return kind != Kind::FlawedSubsetSumToSvp; }
};

struct TrialRecord {
    std::string reduction;
    ProblemInstance instance;
    bool source_yes = false;
    bool target_yes = false;
    std::optional<Certificate> source_witness;
    std::optional<Certificate> target_witness;
    bool roundtrip_ok = false;  // both directions of witness mapping validated
    bool structural_ok = false; // output size matches the exact accounting
    std::chrono::duration<double> elapsed{0};

    bool verdicts_agree() const { return source_yes == target_yes; }
};

// Decides the source instance with its oracle, applies the reduction,
// decides the image with the matching complete box, and maps witnesses both
// ways through the certificate maps, validating everything with the
// checkers. Witness failures are recorded, not thrown.
TrialRecord run_equivalence(const ReductionSpec& spec, const ProblemInstance& inst);

struct ReductionStats {
    std::string name;
    bool gating = true;
    std::size_t trials = 0;
    std::size_t source_yes = 0;
    std::size_t source_no = 0;
    std::size_t target_yes = 0;
    std::size_t target_no = 0;
    std::size_t mismatches = 0;
    std::size_t witness_failures = 0;
    std::size_t structural_failures = 0;
};

struct SuiteSummary {
    std::uint64_t seed = 0;
    std::size_t base_trials = 0;
    std::vector<ReductionStats> per_reduction;

    // Zero mismatches and witness failures on every gating reduction, and at
    // least one exhibited mismatch for each flawed one.
    bool ok() const;
    // Deterministic rendering: identical configs give byte-identical text.
    std::string to_text() const;
};

// The default reduction list: every corrected reduction plus the flawed
// SVP construction for mismatch exhibition.
std::vector<ReductionSpec> default_suite_reductions();

// Runs seeded corpora through run_equivalence. base_trials scales the
// per-reduction trial counts; the corpora keep each oracle exhaustive.
SuiteSummary run_suite(const GenConfig& cfg, std::size_t base_trials,
                       const std::vector<ReductionSpec>& reductions);

struct ReproCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct ReproReport {
    std::vector<ReproCheck> checks;
    bool all_pass() const;
    std::string to_text() const;
};

// Re-derives the published counterexamples from scratch: the two Subset
// Sum -> SVP failures, the two underestimated corner factors, and the
// corrected factor rejecting both offending witnesses.
ReproReport repro_counterexamples();

} // namespace latred

#endif
