#include "latred/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace latred {

using nlohmann::json;

namespace {

[[noreturn]] void bad_format(const std::string& what) {
    throw std::invalid_argument("json format error: " + what);
}

json vec_to_json(const IntVec& v) {
    json arr = json::array();
    for (const auto& e : v)
        arr.push_back(e.get_str());
    return arr;
}

IntVec vec_from_json(const json& j, const char* field) {
    if (!j.is_array())
        bad_format(std::string(field) + " must be an array");
    IntVec v;
    v.reserve(j.size());
    for (const auto& e : j)
        v.push_back(bigint_from_json(e));
    return v;
}

json basis_to_json(const IntMat& m) {
    json entries = json::array();
    for (const auto& e : m.entries())
        entries.push_back(e.get_str());
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

IntMat basis_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        bad_format("basis needs rows, cols and entries");
    std::size_t rows = j.at("rows").get<std::size_t>();
    std::size_t cols = j.at("cols").get<std::size_t>();
    const json& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != rows * cols)
        bad_format("basis entries count must equal rows*cols");
    IntMat m(rows, cols);
    std::size_t idx = 0;
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m.at(r, c) = bigint_from_json(entries[idx++]);
    return m;
}

json bound_to_json(const NormBound& nb) {
    if (nb.is_inf())
        return json{{"type", "inf"}, {"k", nb.threshold().get_str()}};
    return json{{"type", "p"}, {"p", nb.p()}, {"k_pow", nb.threshold().get_str()}};
}

NormBound bound_from_json(const json& j) {
    if (!j.is_object() || !j.contains("type"))
        bad_format("bound needs a type");
    std::string type = j.at("type").get<std::string>();
    if (type == "inf")
        return NormBound::inf(bigint_from_json(j.at("k")));
    if (type == "p")
        return NormBound::pnorm(j.at("p").get<int>(), bigint_from_json(j.at("k_pow")));
    bad_format("bound type must be 'inf' or 'p'");
}

} // namespace

json bigint_to_json(const BigInt& v) {
    return v.get_str();
}

BigInt bigint_from_json(const json& j) {
    if (j.is_number_integer()) {
        // Convenience for hand-written files; canonical form is a string.
        return BigInt(std::to_string(j.get<long long>()));
    }
    if (!j.is_string())
        bad_format("integer values must be decimal strings");
    const std::string s = j.get<std::string>();
    if (s.empty())
        bad_format("empty integer string");
    std::size_t start = (s[0] == '-') ? 1 : 0;
    if (start == s.size())
        bad_format("integer string has no digits");
    for (std::size_t i = start; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            bad_format("malformed integer string '" + s + "'");
    return BigInt(s);
}

std::string problem_name(const ProblemInstance& inst) {
    struct Namer {
        std::string operator()(const SubsetSumInstance&) const { return "subsetsum"; }
        std::string operator()(const PartitionInstance&) const { return "partition"; }
        std::string operator()(const BhleInstance&) const { return "bhle"; }
        std::string operator()(const CvpInstance&) const { return "cvp"; }
        std::string operator()(const SvpInstance&) const { return "svp"; }
    };
    return std::visit(Namer{}, inst);
}

json instance_to_json(const ProblemInstance& inst) {
    json j;
    j["problem"] = problem_name(inst);
    if (const auto* ss = std::get_if<SubsetSumInstance>(&inst)) {
        j["a"] = vec_to_json(ss->a);
        j["s"] = ss->s.get_str();
    } else if (const auto* part = std::get_if<PartitionInstance>(&inst)) {
        j["a"] = vec_to_json(part->a);
    } else if (const auto* bhle = std::get_if<BhleInstance>(&inst)) {
        j["b"] = vec_to_json(bhle->b);
        j["k"] = bhle->k.get_str();
    } else if (const auto* cvp = std::get_if<CvpInstance>(&inst)) {
        j["basis"] = basis_to_json(cvp->basis);
        j["target"] = vec_to_json(cvp->target);
        j["bound"] = bound_to_json(cvp->bound);
    } else if (const auto* svp = std::get_if<SvpInstance>(&inst)) {
        j["basis"] = basis_to_json(svp->basis);
        j["bound"] = bound_to_json(svp->bound);
    }
    return j;
}

ProblemInstance instance_from_json(const json& j) {
    if (!j.is_object() || !j.contains("problem"))
        bad_format("instance needs a 'problem' tag");
    std::string name = j.at("problem").get<std::string>();
    if (name == "subsetsum")
        return SubsetSumInstance{vec_from_json(j.at("a"), "a"), bigint_from_json(j.at("s"))};
    if (name == "partition")
        return PartitionInstance{vec_from_json(j.at("a"), "a")};
    if (name == "bhle") {
        BhleInstance inst{vec_from_json(j.at("b"), "b"), bigint_from_json(j.at("k"))};
        if (inst.k < 1)
            bad_format("bhle instance requires k >= 1");
        return inst;
    }
    if (name == "cvp") {
        CvpInstance inst{basis_from_json(j.at("basis")), vec_from_json(j.at("target"), "target"),
                         bound_from_json(j.at("bound"))};
        if (inst.basis.rows() != inst.target.size())
            bad_format("cvp instance requires basis rows == target length");
        return inst;
    }
    if (name == "svp")
        return SvpInstance{basis_from_json(j.at("basis")), bound_from_json(j.at("bound"))};
    bad_format("unknown problem '" + name + "'");
}

json certificate_to_json(const Certificate& cert) {
    if (const auto* s = std::get_if<IndexSet>(&cert)) {
        json indices = json::array();
        for (std::size_t idx : *s)
            indices.push_back(idx);
        return json{{"type", "indexset"}, {"indices", std::move(indices)}};
    }
    return json{{"type", "coeffs"}, {"x", vec_to_json(std::get<IntVec>(cert))}};
}

Certificate certificate_from_json(const json& j) {
    if (!j.is_object() || !j.contains("type"))
        bad_format("certificate needs a type");
    std::string type = j.at("type").get<std::string>();
    if (type == "indexset") {
        const json& indices = j.at("indices");
        if (!indices.is_array())
            bad_format("indices must be an array");
        IndexSet s;
        for (const auto& e : indices)
            s.insert(e.get<std::size_t>());
        return s;
    }
    if (type == "coeffs")
        return vec_from_json(j.at("x"), "x");
    bad_format("certificate type must be 'indexset' or 'coeffs'");
}

json box_to_json(const SearchBox& box) {
    return json{{"lo", vec_to_json(box.lo)}, {"hi", vec_to_json(box.hi)}};
}

SearchBox box_from_json(const json& j) {
    if (!j.is_object() || !j.contains("lo") || !j.contains("hi"))
        bad_format("box needs lo and hi arrays");
    SearchBox box{vec_from_json(j.at("lo"), "lo"), vec_from_json(j.at("hi"), "hi")};
    if (box.lo.size() != box.hi.size())
        bad_format("box lo/hi length mismatch");
    return box;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << "\n";
}

} // namespace latred
