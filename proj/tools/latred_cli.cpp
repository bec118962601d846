// Command-line front end: applies reductions, runs checkers and oracles over
// JSON instance files, and drives the differential test suite.

#include "latred/harness.hpp"
#include "latred/json_io.hpp"
#include "latred/witnesses.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

using namespace latred;

int cmd_reduce(const std::string& from, const std::string& to, int p, const std::string& c_str,
               const std::string& kpp, const std::string& in_path, const std::string& out_path) {
    ProblemInstance inst = instance_from_json(load_json_file(in_path));
    if (problem_name(inst) != from)
        throw std::invalid_argument("input file holds a '" + problem_name(inst) +
                                    "' instance, expected '" + from + "'");
    BigInt c(c_str);

    ProblemInstance out;
    if (from == "subsetsum" && to == "cvp-inf") {
        out = subset_sum_to_cvp_inf(std::get<SubsetSumInstance>(inst));
    } else if (from == "subsetsum" && to == "cvp-p") {
        out = subset_sum_to_cvp_pnorm(std::get<SubsetSumInstance>(inst), p);
    } else if (from == "subsetsum" && to == "cvp-scaled") {
        out = subset_sum_to_cvp_scaled(std::get<SubsetSumInstance>(inst), c);
    } else if (from == "subsetsum" && to == "svp-flawed") {
        out = flawed_subset_sum_to_svp(std::get<SubsetSumInstance>(inst), c);
    } else if (from == "partition" && to == "bhle") {
        out = partition_to_bhle(std::get<PartitionInstance>(inst));
    } else if (from == "bhle" && to == "svp") {
        SvpFactorVariant variant;
        if (kpp == "report")
            variant = SvpFactorVariant::KReport;
        else if (kpp == "abs")
            variant = SvpFactorVariant::KAbs;
        else if (kpp == "corrected")
            variant = SvpFactorVariant::KCorrected;
        else
            throw std::invalid_argument("--kpp must be report, abs or corrected");
        out = bhle_to_svp(std::get<BhleInstance>(inst), variant);
    } else {
        throw std::invalid_argument("unsupported reduction " + from + " -> " + to);
    }
    save_json_file(out_path, instance_to_json(out));
    return 0;
}

int cmd_check(const std::string& problem, const std::string& in_path,
              const std::string& cert_path) {
    ProblemInstance inst = instance_from_json(load_json_file(in_path));
    if (problem_name(inst) != problem)
        throw std::invalid_argument("input file holds a '" + problem_name(inst) +
                                    "' instance, expected '" + problem + "'");
    Certificate cert = certificate_from_json(load_json_file(cert_path));

    bool valid = false;
    if (const auto* ss = std::get_if<SubsetSumInstance>(&inst))
        valid = check_subset_sum(*ss, std::get<IndexSet>(cert));
    else if (const auto* part = std::get_if<PartitionInstance>(&inst))
        valid = check_partition(*part, std::get<IndexSet>(cert));
    else if (const auto* bhle = std::get_if<BhleInstance>(&inst))
        valid = check_bhle(*bhle, std::get<IntVec>(cert));
    else if (const auto* cvp = std::get_if<CvpInstance>(&inst))
        valid = check_cvp(*cvp, std::get<IntVec>(cert));
    else if (const auto* svp = std::get_if<SvpInstance>(&inst))
        valid = check_svp(*svp, std::get<IntVec>(cert));

    std::cout << (valid ? "valid" : "invalid") << "\n";
    return valid ? 0 : 1;
}

int cmd_decide(const std::string& problem, const std::string& in_path,
               const std::string& box_path) {
    ProblemInstance inst = instance_from_json(load_json_file(in_path));
    if (problem_name(inst) != problem)
        throw std::invalid_argument("input file holds a '" + problem_name(inst) +
                                    "' instance, expected '" + problem + "'");

    std::optional<Certificate> witness;
    if (const auto* ss = std::get_if<SubsetSumInstance>(&inst)) {
        if (auto r = subset_sum_oracle(*ss))
            witness = *r;
    } else if (const auto* part = std::get_if<PartitionInstance>(&inst)) {
        if (auto r = partition_oracle(*part))
            witness = *r;
    } else if (const auto* bhle = std::get_if<BhleInstance>(&inst)) {
        if (auto r = bhle_oracle(*bhle))
            witness = *r;
    } else {
        if (box_path.empty())
            throw std::invalid_argument("cvp/svp need --box (verdicts are box-relative)");
        SearchBox box = box_from_json(load_json_file(box_path));
        if (const auto* cvp = std::get_if<CvpInstance>(&inst)) {
            if (auto r = cvp_oracle(*cvp, box))
                witness = *r;
        } else if (const auto* svp = std::get_if<SvpInstance>(&inst)) {
            if (auto r = svp_oracle(*svp, box))
                witness = *r;
        }
    }

    nlohmann::json out;
    out["verdict"] = witness ? "yes" : "no";
    if (witness)
        out["witness"] = certificate_to_json(*witness);
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_verify(std::uint64_t seed, std::size_t trials) {
    GenConfig cfg;
    cfg.seed = seed;
    SuiteSummary summary = run_suite(cfg, trials, default_suite_reductions());
    std::cout << summary.to_text();
    return summary.ok() ? 0 : 1;
}

int cmd_repro() {
    ReproReport report = repro_counterexamples();
    std::cout << report.to_text();
    return report.all_pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact integer reductions between Subset Sum / Partition / BHLE and CVP / SVP"};
    app.require_subcommand(1);

    // reduce
    std::string from, to, in_path, out_path, cert_path, box_path, problem;
    int p = 2;
    std::string c_str = "2";
    std::string kpp = "corrected";
    auto* reduce = app.add_subcommand("reduce", "apply a reduction to an instance file");
    reduce->add_option("--from", from, "source problem")
        ->required()
        ->check(CLI::IsMember({"subsetsum", "partition", "bhle"}));
    reduce->add_option("--to", to, "target form")
        ->required()
        ->check(CLI::IsMember({"cvp-inf", "cvp-p", "cvp-scaled", "svp", "svp-flawed"}));
    reduce->add_option("--p", p, "norm exponent for cvp-p (default 2)");
    reduce->add_option("--c", c_str, "scale constant for cvp-scaled/svp-flawed (default 2)");
    reduce->add_option("--kpp", kpp, "corner factor for bhle->svp: report|abs|corrected")
        ->check(CLI::IsMember({"report", "abs", "corrected"}));
    reduce->add_option("--in", in_path, "input instance JSON")->required();
    reduce->add_option("--out", out_path, "output instance JSON")->required();

    // check
    auto* check = app.add_subcommand("check", "validate a certificate against an instance");
    check->add_option("--problem", problem, "subsetsum|partition|bhle|cvp|svp")
        ->required()
        ->check(CLI::IsMember({"subsetsum", "partition", "bhle", "cvp", "svp"}));
    check->add_option("--in", in_path, "instance JSON")->required();
    check->add_option("--cert", cert_path, "certificate JSON")->required();

    // decide
    auto* decide = app.add_subcommand("decide", "run the brute-force oracle on an instance");
    decide->add_option("--problem", problem, "subsetsum|partition|bhle|cvp|svp")
        ->required()
        ->check(CLI::IsMember({"subsetsum", "partition", "bhle", "cvp", "svp"}));
    decide->add_option("--in", in_path, "instance JSON")->required();
    decide->add_option("--box", box_path, "search box JSON (required for cvp/svp)");

    // verify
    std::uint64_t seed = 1;
    std::size_t trials = 200;
    std::string suite = "default";
    auto* verify = app.add_subcommand("verify", "run the differential equivalence suite");
    verify->add_option("--suite", suite, "suite name (only 'default')")
        ->check(CLI::IsMember({"default"}));
    verify->add_option("--seed", seed, "corpus seed");
    verify->add_option("--trials", trials, "base trial count (default 200)");

    // repro
    app.add_subcommand("repro", "reproduce the published counterexamples");

    CLI11_PARSE(app, argc, argv);

    try {
        if (reduce->parsed())
            return cmd_reduce(from, to, p, c_str, kpp, in_path, out_path);
        if (check->parsed())
            return cmd_check(problem, in_path, cert_path);
        if (decide->parsed())
            return cmd_decide(problem, in_path, box_path);
        if (verify->parsed())
            return cmd_verify(seed, trials);
        return cmd_repro();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
