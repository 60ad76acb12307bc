#include "hk/json_io.hpp"

#include <fstream>
#include <regex>
#include <sstream>

#include "hk/error.hpp"

namespace hk {

Json group_to_json(const PermutationGroup& G) {
  Json gens = Json::array();
  for (const Perm& g : G.generators()) gens.push_back(g.one_based());
  return Json{{"name", G.name()}, {"degree", G.degree()}, {"generators", gens}};
}

GroupPtr group_from_json(const Json& j, std::size_t cap) {
  try {
    if (!j.is_object() || !j.contains("degree") || !j.contains("generators")) {
      throw Error(ErrorCode::SchemaError, "group needs \"degree\" and \"generators\"");
    }
    const auto degree = j.at("degree").get<long long>();
    if (degree < 1) throw Error(ErrorCode::SchemaError, "degree must be positive");
    std::vector<Perm> gens;
    for (const auto& g : j.at("generators")) {
      auto images = g.get<std::vector<long long>>();
      if (static_cast<long long>(images.size()) != degree) {
        throw Error(ErrorCode::InvalidPermutation, "generator length differs from degree");
      }
      gens.push_back(Perm::from_one_based(images));
    }
    std::string name = j.contains("name") && j.at("name").is_string() ? j.at("name").get<std::string>() : "";
    return PermutationGroup::closure(static_cast<std::size_t>(degree), std::move(gens), std::move(name), cap);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::SchemaError, e.what());
  }
}

GroupPtr parse_group_text(const std::string& text, std::string name, std::size_t cap) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  std::size_t degree = 1;
  std::regex number("[0-9]+");
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (line.find('(') == std::string::npos) throw Error(ErrorCode::SchemaError, "expected cycle notation: " + line);
    for (auto it = std::sregex_iterator(line.begin(), line.end(), number); it != std::sregex_iterator(); ++it) {
      degree = std::max<std::size_t>(degree, std::stoul(it->str()));
    }
    lines.push_back(line);
  }
  std::vector<Perm> gens;
  for (const auto& l : lines) gens.push_back(Perm::from_cycles(degree, l));
  return PermutationGroup::closure(degree, std::move(gens), std::move(name), cap);
}

GroupPtr load_group(const std::filesystem::path& path, std::size_t cap) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::SchemaError, "cannot read " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::exception& e) {
      throw Error(ErrorCode::SchemaError, path.string() + ": " + e.what());
    }
    return group_from_json(j, cap);
  }
  return parse_group_text(text, path.stem().string(), cap);
}

Json cyclotomic_to_json(const Cyclotomic& c) {
  Json coeffs = Json::object();
  for (std::size_t k = 0; k < c.coords().size(); ++k) {
    if (c.coords()[k] != 0) coeffs[std::to_string(k)] = to_string(c.coords()[k]);
  }
  return Json{{"order", c.order()}, {"coeffs", coeffs}};
}

Cyclotomic cyclotomic_from_json(const Json& j) {
  try {
    if (j.is_number_integer()) return Cyclotomic(j.get<long long>());
    if (j.is_string()) return Cyclotomic(parse_rational(j.get<std::string>()));
    const int order = j.at("order").get<int>();
    if (order < 1) throw Error(ErrorCode::SchemaError, "cyclotomic order must be positive");
    std::vector<Rational> pw(order);
    for (const auto& [k, v] : j.at("coeffs").items()) {
      const long long idx = std::stoll(k);
      if (idx < 0) throw Error(ErrorCode::SchemaError, "negative exponent in cyclotomic");
      pw[idx % order] += parse_rational(v.is_string() ? v.get<std::string>() : v.dump());
    }
    return Cyclotomic::from_power_sum(order, pw);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::SchemaError, e.what());
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::SchemaError, "bad exponent key in cyclotomic");
  }
}

Json class_function_to_json(const ClassFunction& f) {
  Json vals = Json::array();
  for (const auto& v : f.values()) vals.push_back(cyclotomic_to_json(v));
  return Json{{"group", f.group()->name()}, {"values", vals}};
}

ClassFunction class_function_from_json(const Json& j, const GroupPtr& G) {
  try {
    std::vector<Cyclotomic> vals;
    for (const auto& v : j.at("values")) vals.push_back(cyclotomic_from_json(v));
    if (vals.size() != G->num_classes()) throw Error(ErrorCode::SchemaError, "wrong number of class values");
    return ClassFunction(G, std::move(vals));
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::SchemaError, e.what());
  }
}

Json rational_vector_to_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& r : v) out.push_back(to_string(r));
  return out;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::SchemaError, "cannot read " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::SchemaError, path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path.string());
  out << j.dump(2) << '\n';
}

}  // namespace hk
