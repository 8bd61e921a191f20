// ybe: generate solution families, verify them, and keep a catalog.
//
// Exit codes: 0 pass, 1 check failure, 2 usage or parse error, 3 IO error.

#include <iostream>

#include "CLI11.hpp"
#include "ybe/ybe.hpp"

namespace {

enum Exit : int { kPass = 0, kCheckFailed = 1, kUsage = 2, kIo = 3 };

struct GenArgs {
  std::string family;
  std::optional<std::uint64_t> p, q, n, m, m1, m2;
  std::string out;
};

std::uint64_t need(const std::optional<std::uint64_t>& v, const char* flag, const std::string& family) {
  if (!v) throw ybe::Error(family + " requires " + flag);
  return *v;
}

ybe::Solution build_family(const GenArgs& a) {
  const auto& f = a.family;
  if (f == "cyclic") return ybe::cyclic_solution(need(a.n, "-n", f));
  if (f == "trivial") return ybe::trivial_solution(need(a.n, "-n", f));
  if (f == "remark22") return ybe::remark22(need(a.m, "-m", f), need(a.m1, "--m1", f), need(a.m2, "--m2", f));
  if (f == "theorem23") return ybe::theorem23(need(a.m, "-m", f), need(a.n, "-n", f));
  if (f == "remark31") return ybe::remark31(need(a.m, "-m", f));
  if (f == "theorem_main") return ybe::theorem_main(need(a.p, "-p", f), need(a.n, "-n", f));
  if (f == "theorem42") return ybe::theorem42(need(a.p, "-p", f), need(a.q, "-q", f), need(a.n, "-n", f));
  throw ybe::Error("unknown family: " + f);
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-")
    std::cout << text;
  else
    ybe::write_file(path, text);
}

std::string catalog_path(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv(ybe::kCatalogEnv)) return env;
  throw ybe::Error(std::string("no catalog path: pass --catalog or set ") + ybe::kCatalogEnv);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Construct and verify set-theoretic solutions of the Yang-Baxter equation"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write the solution JSON of a family instance");
  gen_cmd->add_option("family", gen.family, "cyclic | trivial | remark22 | theorem23 | remark31 | theorem_main | theorem42")
      ->required();
  gen_cmd->add_option("-p", gen.p, "prime p");
  gen_cmd->add_option("-q", gen.q, "odd prime q dividing p - 1 (theorem42)");
  gen_cmd->add_option("-n", gen.n, "exponent or size parameter n");
  gen_cmd->add_option("-m", gen.m, "modulus m");
  gen_cmd->add_option("--m1", gen.m1, "factor m1 (remark22)");
  gen_cmd->add_option("--m2", gen.m2, "factor m2 (remark22)");
  gen_cmd->add_option("-o,--out", gen.out, "output path (default stdout)");

  std::string verify_in, verify_out, verify_catalog;
  std::vector<std::string> verify_checks;
  unsigned par = 1;
  bool verify_append = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run checks on a solution and print its certificate");
  verify_cmd->add_option("input", verify_in, "solution JSON")->required();
  verify_cmd->add_option("--checks", verify_checks, "comma-separated subset of: ybe, involutive, nondegenerate, "
                                                    "indecomposable, irretractable, simple, group, singular")
      ->delimiter(',');
  verify_cmd->add_option("--par", par, "worker threads for the principal-congruence sweep")->check(CLI::Range(1u, 256u));
  verify_cmd->add_option("-o,--out", verify_out, "write the certificate here instead of stdout");
  verify_cmd->add_flag("--append", verify_append, "append the certificate to the catalog");
  verify_cmd->add_option("--catalog", verify_catalog, "catalog path (default $YBE_CATALOG)");

  std::string group_in;
  auto* group_cmd = app.add_subcommand("group", "Order of the permutation group generated by the sigma_x");
  group_cmd->add_option("input", group_in, "solution JSON")->required();

  std::string brace_in, brace_out, brace_map;
  std::size_t brace_max = ybe::kMaxStructureBraceOrder;
  auto* brace_cmd = app.add_subcommand("brace", "Left brace structure of the permutation group");
  brace_cmd->add_option("input", brace_in, "solution JSON")->required();
  brace_cmd->add_option("-o,--out", brace_out, "brace JSON output (default stdout)");
  brace_cmd->add_option("--map", brace_map, "sidecar coset/permutation map output");
  brace_cmd->add_option("--max-order", brace_max, "largest group order to tabulate");

  std::string cat_path;
  auto* cat_cmd = app.add_subcommand("catalog", "Append to or query the certificate catalog");
  cat_cmd->add_option("--catalog", cat_path, "catalog path (default $YBE_CATALOG)");
  cat_cmd->require_subcommand(1);
  std::string append_in;
  auto* cat_append = cat_cmd->add_subcommand("append", "Append a certificate file");
  cat_append->add_option("certificate", append_in, "certificate JSON")->required();
  auto* cat_list = cat_cmd->add_subcommand("list", "Print every entry");
  ybe::CatalogQuery query;
  std::optional<bool> q_simple, q_indec, q_irret, q_singular;
  auto* cat_query = cat_cmd->add_subcommand("query", "Print matching entries");
  cat_query->add_option("--family", query.family);
  cat_query->add_option("--cardinality", query.cardinality);
  cat_query->add_option("--simple", q_simple);
  cat_query->add_option("--indecomposable", q_indec);
  cat_query->add_option("--irretractable", q_irret);
  cat_query->add_option("--singular", q_singular, "true: some singular prime recorded");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*gen_cmd) {
      ybe::Solution s = build_family(gen);
      emit(gen.out, ybe::canonical_dump(ybe::to_json(s)) + "\n");
      return kPass;
    }
    if (*verify_cmd) {
      ybe::Solution s = ybe::load_solution(verify_in);
      ybe::VerifyOptions options;
      if (!verify_checks.empty()) options.checks = verify_checks;
      options.threads = par;
      ybe::Certificate cert = ybe::verify_solution(s, options);
      ybe::json j = ybe::to_json(cert);
      emit(verify_out, j.dump(2) + "\n");
      if (verify_append) ybe::catalog_append(catalog_path(verify_catalog), ybe::make_catalog_entry(j, ybe::utc_timestamp()));
      return cert.all_passed() ? kPass : kCheckFailed;
    }
    if (*group_cmd) {
      ybe::Solution s = ybe::load_solution(group_in);
      ybe::PermGroup g = ybe::permutation_group(s);
      ybe::BigInt order = ybe::group_order(s.sigma_table(), s.size());
      auto primes = ybe::prime_divisors(order, s.size());
      ybe::json j = {{"degree", s.size()},
                     {"order", order.str()},
                     {"prime_divisors", primes},
                     {"p_group_for", primes.size() == 1 ? ybe::json(primes.front()) : ybe::json(nullptr)},
                     {"base", g.base()},
                     {"orbit_of_0", ybe::orbit(s.sigma_table(), 0, s.size()).size()}};
      std::cout << j.dump(2) << "\n";
      return kPass;
    }
    if (*brace_cmd) {
      ybe::Solution s = ybe::load_solution(brace_in);
      if (!ybe::check_ybe(s)) throw ybe::ParseError("input is not a solution of the YBE");
      auto pb = ybe::build_permutation_brace(s, brace_max);
      if (!pb) {
        std::cerr << "brace: group order exceeds " << brace_max << "; not computed\n";
        return kCheckFailed;
      }
      emit(brace_out, ybe::canonical_dump(ybe::brace_to_json(pb->brace)) + "\n");
      if (!brace_map.empty()) ybe::write_file(brace_map, ybe::canonical_dump(ybe::brace_map_to_json(*pb)) + "\n");
      bool ok = ybe::verify_brace(pb->brace) && ybe::check_lambda_on_generators(s, *pb) &&
                ybe::socle_index_check(s, pb->lattice);
      std::cerr << "brace: order " << pb->brace.size() << ", checks " << (ok ? "passed" : "FAILED") << "\n";
      return ok ? kPass : kCheckFailed;
    }
    if (*cat_cmd) {
      std::string path = catalog_path(cat_path);
      if (*cat_append) {
        auto cert = ybe::parse_json(ybe::read_file(append_in), append_in);
        ybe::catalog_append(path, ybe::make_catalog_entry(cert, ybe::utc_timestamp()));
        return kPass;
      }
      std::vector<ybe::json> entries;
      if (*cat_list) {
        entries = ybe::catalog_read(path);
      } else {
        if (q_simple) query.flags["simple"] = *q_simple;
        if (q_indec) query.flags["indecomposable"] = *q_indec;
        if (q_irret) query.flags["irretractable"] = *q_irret;
        query.singular = q_singular;
        entries = ybe::catalog_query(path, query);
      }
      for (const auto& e : entries) std::cout << ybe::canonical_dump(e) << "\n";
      return kPass;
    }
  } catch (const ybe::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const ybe::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
