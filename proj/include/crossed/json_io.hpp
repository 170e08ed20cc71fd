#pragma once

#include "crossed/complex.hpp"
#include "crossed/report.hpp"
#include "crossed/tensor.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace crossed {

using Json = nlohmann::json;

Json group_to_json(const GroupPtr& g);
GroupPtr group_from_json(const Json& j);

Json complex_to_json(const CrossedComplexSpec& spec);
CrossedComplexSpec complex_from_json(const Json& j);

/// Adds a "tensor" block (graph + generator tuples) to the complex JSON.
Json tensor_to_json(const TensorComplex& t);

Json report_to_json(const Report& rep);
std::string report_to_jsonl(const Report& rep);
std::string report_pretty(const Report& rep);

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

} // namespace crossed
