#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "hk/classfun.hpp"
#include "hk/group.hpp"

namespace hk {

using Json = nlohmann::json;

Json group_to_json(const PermutationGroup& G);
/// {"name"?, "degree", "generators": [[1-based images], ...]}; SchemaError if malformed.
GroupPtr group_from_json(const Json& j, std::size_t cap = kDefaultOrderCap);
/// Reads a JSON group file, or a text file with one generator per line in
/// cycle notation (degree = largest point mentioned).
GroupPtr load_group(const std::filesystem::path& path, std::size_t cap = kDefaultOrderCap);
GroupPtr parse_group_text(const std::string& text, std::string name = {}, std::size_t cap = kDefaultOrderCap);

/// {"order": e, "coeffs": {"k": "p/q", ...}} (sparse).
Json cyclotomic_to_json(const Cyclotomic& c);
Cyclotomic cyclotomic_from_json(const Json& j);

Json class_function_to_json(const ClassFunction& f);
ClassFunction class_function_from_json(const Json& j, const GroupPtr& G);

Json rational_vector_to_json(const std::vector<Rational>& v);

Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& j);

}  // namespace hk
