#pragma once

// JSON file formats.
//
//   Solution  {"schema": "ybe/1", "n": N, "sigma": [[...], ...],
//              "labels": [[...], ...] (optional),
//              "family": {"name": ..., "params": {...}} (optional)}
//   Brace     {"schema": "brace/1", "n": N, "add": [[...]], "mul": [[...]]}
//   Brace map {"coset_rep": [[...]], "perm": [[...]]}
//
// Serialisation is canonical: keys sorted, no whitespace. Loading and
// re-serialising a file written here reproduces it byte for byte.

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ybe/brace.hpp"
#include "ybe/solution.hpp"
#include "ybe/structure_brace.hpp"

namespace ybe {

using nlohmann::json;

inline constexpr const char* kSolutionSchema = "ybe/1";
inline constexpr const char* kBraceSchema = "brace/1";

class ParseError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

inline json to_json(const Solution& s) {
  json rows = json::array();
  for (const auto& row : s.sigma_table()) rows.push_back(std::vector<Point>(row.images().begin(), row.images().end()));
  json j = {{"schema", kSolutionSchema}, {"n", s.size()}, {"sigma", std::move(rows)}};
  if (!s.labels.empty()) j["labels"] = s.labels;
  if (s.family) j["family"] = {{"name", s.family->name}, {"params", s.family->params}};
  return j;
}

inline Solution solution_from_json(const json& j) {
  try {
    if (!j.is_object()) throw ParseError("solution: expected a JSON object");
    if (j.value("schema", std::string()) != kSolutionSchema) throw ParseError("solution: schema must be \"ybe/1\"");
    auto n = j.at("n").get<std::size_t>();
    const auto& rows = j.at("sigma");
    if (!rows.is_array() || rows.size() != n) throw ParseError("solution: sigma must have n rows");
    std::vector<Perm> sigma;
    sigma.reserve(n);
    for (const auto& row : rows) {
      auto images = row.get<std::vector<Point>>();
      if (images.size() != n) throw ParseError("solution: sigma row must have n entries");
      sigma.emplace_back(std::move(images));
    }
    Solution s(std::move(sigma));
    if (j.contains("labels")) {
      s.labels = j.at("labels").get<std::vector<std::vector<std::int64_t>>>();
      if (s.labels.size() != n) throw ParseError("solution: labels must have n entries");
    }
    if (j.contains("family")) s.family = FamilyInfo{j.at("family").at("name").get<std::string>(), j.at("family").at("params")};
    return s;
  } catch (const json::exception& e) {
    throw ParseError(std::string("solution: ") + e.what());
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(std::string("solution: ") + e.what());
  }
}

/// Canonical compact text form.
inline std::string canonical_dump(const json& j) { return j.dump(); }

inline json brace_to_json(const FiniteBrace& B) {
  return {{"schema", kBraceSchema}, {"n", B.size()}, {"add", B.add_table()}, {"mul", B.mul_table()}};
}

inline FiniteBrace brace_from_json(const json& j) {
  try {
    if (j.value("schema", std::string()) != kBraceSchema) throw ParseError("brace: schema must be \"brace/1\"");
    auto n = j.at("n").get<std::size_t>();
    auto add = j.at("add").get<Table>();
    auto mul = j.at("mul").get<Table>();
    if (add.size() != n) throw ParseError("brace: table size does not match n");
    return FiniteBrace(std::move(add), std::move(mul));
  } catch (const json::exception& e) {
    throw ParseError(std::string("brace: ") + e.what());
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(std::string("brace: ") + e.what());
  }
}

inline json brace_map_to_json(const PermutationBrace& pb) {
  json reps = json::array();
  for (const auto& v : pb.coset_rep) {
    json row = json::array();
    for (const auto& x : v) {
      if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
        row.push_back(x.str());
      else
        row.push_back(static_cast<std::int64_t>(x));
    }
    reps.push_back(std::move(row));
  }
  json perms = json::array();
  for (const auto& p : pb.perm_of) perms.push_back(std::vector<Point>(p.images().begin(), p.images().end()));
  return {{"coset_rep", std::move(reps)}, {"perm", std::move(perms)}};
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path);
  out << text;
  if (!out) throw IoError("write failed for " + path);
}

inline json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(what + ": " + e.what());
  }
}

inline Solution load_solution(const std::string& path) { return solution_from_json(parse_json(read_file(path), path)); }

inline void save_solution(const std::string& path, const Solution& s) {
  write_file(path, canonical_dump(to_json(s)) + "\n");
}

}  // namespace ybe
