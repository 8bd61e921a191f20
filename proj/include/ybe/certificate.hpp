#pragma once

// Machine-readable record of the properties verified for one solution.

#include <array>
#include <iomanip>

#include <openssl/evp.h>

#include "ybe/congruence.hpp"
#include "ybe/families.hpp"
#include "ybe/io.hpp"

namespace ybe {

/// SHA-256 of the canonical solution JSON, lowercase hex.
inline std::string solution_hash(const Solution& s) {
  std::string text = canonical_dump(to_json(s));
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(text.data(), text.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1)
    throw Error("solution_hash: digest failed");
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return hex.str();
}

inline const std::vector<std::string>& all_checks() {
  static const std::vector<std::string> checks{"ybe",           "involutive", "nondegenerate", "indecomposable",
                                               "irretractable", "simple",     "group",         "singular"};
  return checks;
}

struct Certificate {
  std::optional<FamilyInfo> family;
  std::size_t n = 0;
  std::string solution_hash;

  // Absent entries were not run.
  std::optional<bool> ybe, involutive, nondegenerate, indecomposable, irretractable, simple, simplicity_corollaries;
  // Computed alongside irretractable; inner nullopt means "none".
  std::optional<std::optional<std::size_t>> multipermutation_level;
  std::optional<BigInt> group_order;
  std::optional<std::uint64_t> group_is_p_group_for;
  std::optional<std::vector<std::uint64_t>> singular_primes;
  // Checks that could not run (failed precondition), with the reason.
  std::map<std::string, std::string> skipped;

  /// True iff every boolean check that ran returned true and no requested
  /// check was skipped. The group and singular computations pass by running.
  bool all_passed() const {
    for (const auto* flag :
         {&ybe, &involutive, &nondegenerate, &indecomposable, &irretractable, &simple, &simplicity_corollaries})
      if (flag->has_value() && !**flag) return false;
    return skipped.empty();
  }
};

struct VerifyOptions {
  std::vector<std::string> checks = all_checks();
  unsigned threads = 1;
};

inline Certificate verify_solution(const Solution& s, const VerifyOptions& options = {}) {
  for (const auto& c : options.checks)
    if (std::find(all_checks().begin(), all_checks().end(), c) == all_checks().end())
      throw Error("unknown check: " + c);
  auto wants = [&](const char* name) {
    return std::find(options.checks.begin(), options.checks.end(), name) != options.checks.end();
  };

  Certificate cert;
  cert.family = s.family;
  cert.n = s.size();
  cert.solution_hash = solution_hash(s);

  // Predicates past the basic checks assume a valid solution.
  const bool valid = check_ybe(s) && check_nondegenerate(s);
  if (wants("ybe")) cert.ybe = check_ybe(s);
  if (wants("involutive")) cert.involutive = check_involutive(s);
  if (wants("nondegenerate")) cert.nondegenerate = check_nondegenerate(s);
  auto needs_valid = [&](const char* name) {
    if (!wants(name)) return false;
    if (!valid) cert.skipped[name] = "input is not a non-degenerate solution";
    return valid;
  };

  if (needs_valid("indecomposable")) cert.indecomposable = is_indecomposable(s);
  if (needs_valid("irretractable")) {
    cert.irretractable = is_irretractable(s);
    cert.multipermutation_level = multipermutation_level(s);
  }
  if (needs_valid("simple")) {
    if (s.size() <= 1) {
      cert.skipped["simple"] = "simplicity requires |X| > 1";
    } else {
      cert.simple = is_simple(s, options.threads);
      if (*cert.simple) cert.simplicity_corollaries = check_simplicity_corollaries(s);
    }
  }
  if (wants("group") || wants("singular")) {
    cert.group_order = group_order(s.sigma_table(), s.size());
    auto primes = prime_divisors(*cert.group_order, s.size());
    if (primes.size() == 1) cert.group_is_p_group_for = primes.front();
  }
  if (needs_valid("singular")) {
    if (!is_indecomposable(s))
      cert.skipped["singular"] = "singularity is defined for indecomposable solutions only";
    else
      cert.singular_primes = is_singular_witness(s, *cert.group_order);
  }
  return cert;
}

inline json to_json(const Certificate& c) {
  json j = {{"schema", kSolutionSchema}, {"n", c.n}, {"solution_hash", c.solution_hash}};
  j["family"] = c.family ? json{{"name", c.family->name}, {"params", c.family->params}} : json(nullptr);
  json checks = json::object();
  auto put = [&](const char* name, const std::optional<bool>& v) {
    if (v) checks[name] = *v;
  };
  put("ybe", c.ybe);
  put("involutive", c.involutive);
  put("nondegenerate", c.nondegenerate);
  put("indecomposable", c.indecomposable);
  put("irretractable", c.irretractable);
  put("simple", c.simple);
  put("simplicity_corollaries", c.simplicity_corollaries);
  j["checks"] = std::move(checks);
  if (c.multipermutation_level)
    j["multipermutation_level"] = *c.multipermutation_level ? json(**c.multipermutation_level) : json("none");
  if (c.group_order) {
    j["group_order"] = c.group_order->str();
    j["group_is_p_group_for"] = c.group_is_p_group_for ? json(*c.group_is_p_group_for) : json(nullptr);
  }
  if (c.singular_primes) j["singular_primes"] = *c.singular_primes;
  if (!c.skipped.empty()) j["skipped"] = c.skipped;
  j["passed"] = c.all_passed();
  return j;
}

}  // namespace ybe
