#pragma once

// Append-only catalog of certificates, one JSON object per line:
//   {"timestamp": "...Z", "family": ..., "n": N, "hash": "<sha256>", "certificate": {...}}

#include <chrono>
#include <cstdlib>
#include <ctime>

#include "ybe/certificate.hpp"

namespace ybe {

inline constexpr const char* kCatalogEnv = "YBE_CATALOG";

inline std::string utc_timestamp() {
  auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

inline json make_catalog_entry(const json& certificate, const std::string& timestamp) {
  if (!certificate.is_object() || !certificate.contains("solution_hash") || !certificate.contains("n"))
    throw ParseError("catalog: not a certificate");
  return {{"timestamp", timestamp},
          {"family", certificate.value("family", json(nullptr))},
          {"n", certificate.at("n")},
          {"hash", certificate.at("solution_hash")},
          {"certificate", certificate}};
}

inline void catalog_append(const std::string& path, const json& entry) {
  std::ofstream out(path, std::ios::app | std::ios::binary);
  if (!out) throw IoError("cannot open catalog " + path);
  out << canonical_dump(entry) << '\n';
  if (!out) throw IoError("append failed for catalog " + path);
}

inline std::vector<json> catalog_read(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open catalog " + path);
  std::vector<json> entries;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    entries.push_back(parse_json(line, path + ":" + std::to_string(lineno)));
  }
  return entries;
}

/// Entry filter; unset fields match everything.
struct CatalogQuery {
  std::optional<std::string> family;
  std::optional<std::size_t> cardinality;
  // check name -> required value, e.g. {"simple", true}
  std::map<std::string, bool> flags;
  // true: singular_primes non-empty; false: present and empty
  std::optional<bool> singular;

  bool matches(const json& entry) const {
    const json& cert = entry.at("certificate");
    if (family) {
      const json& fam = entry.at("family");
      if (!fam.is_object() || fam.value("name", std::string()) != *family) return false;
    }
    if (cardinality && entry.at("n").get<std::size_t>() != *cardinality) return false;
    for (const auto& [name, want] : flags) {
      const json& checks = cert.at("checks");
      if (!checks.contains(name) || checks.at(name).get<bool>() != want) return false;
    }
    if (singular) {
      if (!cert.contains("singular_primes")) return false;
      if (cert.at("singular_primes").empty() == *singular) return false;
    }
    return true;
  }
};

inline std::vector<json> catalog_query(const std::string& path, const CatalogQuery& q) {
  std::vector<json> out;
  for (auto& e : catalog_read(path))
    if (q.matches(e)) out.push_back(std::move(e));
  return out;
}

}  // namespace ybe
