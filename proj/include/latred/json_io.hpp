#ifndef LATRED_JSON_IO_HPP
#define LATRED_JSON_IO_HPP

#include "latred/oracles.hpp"
#include "latred/problems.hpp"

#include <json.hpp>

#include <string>

namespace latred {

// File formats for the CLI. Every integer value is carried as a decimal
// string so nothing is ever squeezed through a 64-bit lane; small counts
// (indices, dimensions, p) stay plain JSON numbers.

nlohmann::json bigint_to_json(const BigInt& v);
BigInt bigint_from_json(const nlohmann::json& j);

nlohmann::json instance_to_json(const ProblemInstance& inst);
ProblemInstance instance_from_json(const nlohmann::json& j);

nlohmann::json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const nlohmann::json& j);

nlohmann::json box_to_json(const SearchBox& box);
SearchBox box_from_json(const nlohmann::json& j);

// The "problem" tag used in instance files: subsetsum, partition, bhle,
// cvp or svp.
std::string problem_name(const ProblemInstance& inst);

nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);

} // namespace latred

#endif
