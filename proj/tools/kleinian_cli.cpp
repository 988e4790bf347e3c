// Command-line surface for the kleinian library: character checking, identity
// verification, catalog queries, realization, and parameter-space scanning.
//
// Exit codes: 0 pass, 1 usage error, 2 ViolatesUnconditional,
// 3 ViolatesConditional, 4 Degenerate, 5 identity-suite failure.

#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "kleinian/kleinian.hpp"

namespace {

using namespace kleinian;

Cplx parse_or_die(const std::string& text, const char* what) {
  auto z = parse_complex(text);
  if (!z) {
    std::cerr << "error: cannot parse " << what << " from \"" << text
              << "\" (expected e.g. \"-3\" or \"0.5+0.8660254i\")\n";
    std::exit(1);
  }
  return *z;
}

int verdict_exit_code(Verdict v) {
  switch (v) {
    case Verdict::PassesAll: return 0;
    case Verdict::ViolatesUnconditional: return 2;
    case Verdict::ViolatesConditional: return 3;
    case Verdict::Degenerate: return 4;
  }
  return 1;
}

struct AssumeFlags {
  std::string f_order; // "none" or a positive integer
  bool g_order2 = false;

  Assumptions build() const {
    Assumptions as;
    as.g_order2 = g_order2;
    if (f_order == "none") as.f_not_small_elliptic = true;
    else if (!f_order.empty()) as.f_order = std::stoi(f_order);
    return as;
  }
};

int cmd_check(const std::vector<std::string>& args, const AssumeFlags& assume,
              unsigned depth) {
  PrincipalCharacter ch;
  if (args.size() == 1) {
    const KnownGroup* entry = catalog_lookup(args[0]);
    if (!entry) {
      std::cerr << "error: unknown catalog entry \"" << args[0] << "\"\n";
      return 1;
    }
    ch = entry->character;
  } else if (args.size() == 3) {
    ch = {parse_or_die(args[0], "gamma"), parse_or_die(args[1], "beta_f"),
          parse_or_die(args[2], "beta_g")};
  } else {
    std::cerr << "error: check expects <gamma> <beta_f> <beta_g> or a catalog name\n";
    return 1;
  }
  BatteryResult result = battery(ch, assume.build(), depth);
  std::cout << to_json(result).dump(2) << "\n";
  return verdict_exit_code(result.verdict);
}

int cmd_verify(unsigned depth, bool inject_fault) {
  auto checks = verify_printed_identities(inject_fault);

  // oracle suite: random characters, all four families
  std::mt19937_64 rng(20240901);
  std::uniform_real_distribution<double> mod(0.1, 4.0), arg(-std::numbers::pi,
                                                            std::numbers::pi);
  auto random_complex = [&] { return std::polar(mod(rng), arg(rng)); };
  double max_err = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    PrincipalCharacter ch{random_complex(), random_complex(), random_complex()};
    for (SubgroupFamily fam :
         {SubgroupFamily::PowerOfF, SubgroupFamily::ConjugatePower,
          SubgroupFamily::ProductPower, SubgroupFamily::CommutatorPower})
      for (unsigned n = 1; n <= depth; ++n)
        max_err = std::max(max_err, check_identity(ch, fam, n));
  }
  const bool oracle_ok = max_err <= 1e-8;
  const bool identities_ok = all_identities_pass(checks);

  Json out;
  out["identities"] = to_json(checks);
  out["oracle_max_rel_error"] = max_err;
  out["oracle_depth"] = depth;
  out["summary"] = (identities_ok && oracle_ok) ? "all identities pass"
                                                : "identity failures detected";
  std::cout << out.dump(2) << "\n";
  if (!identities_ok) {
    std::cerr << "failing identities:";
    for (const auto& c : checks)
      if (!c.pass) std::cerr << " " << c.identity;
    std::cerr << "\n";
  }
  if (!oracle_ok)
    std::cerr << "oracle max relative error " << max_err << " exceeds 1e-8\n";
  return (identities_ok && oracle_ok) ? 0 : 5;
}

int cmd_scan(const ScanSpec& spec, const std::string& format, const std::string& out_path,
             unsigned workers) {
  if (!spec.valid()) {
    std::cerr << "error: scan needs nx, ny >= 2 and a non-degenerate rectangle\n";
    return 1;
  }
  std::string payload;
  if (format == "csv") payload = scan_csv(spec, workers);
  else if (format == "pgm") payload = scan_pgm(spec, workers);
  else {
    std::cerr << "error: unknown format \"" << format << "\" (csv|pgm)\n";
    return 1;
  }
  if (out_path.empty() || out_path == "-") {
    std::cout << payload;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open " << out_path << " for writing\n";
    return 1;
  }
  out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
  if (!out) {
    std::cerr << "error: short write to " << out_path << "\n";
    return 1;
  }
  return 0;
}

int cmd_catalog() {
  Json arr = Json::array();
  for (const auto& e : catalog_entries()) arr.push_back(to_json(e));
  std::cout << arr.dump(2) << "\n";
  return 0;
}

int cmd_realize(const std::string& g, const std::string& b, const std::string& bg) {
  PrincipalCharacter ch{parse_or_die(g, "gamma"), parse_or_die(b, "beta_f"),
                        parse_or_die(bg, "beta_g")};
  try {
    std::cout << to_json(realize(ch)).dump(2) << "\n";
  } catch (const DegenerateCharacter& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}

int cmd_subgroup(const std::string& family_name, unsigned n, const std::string& g,
                 const std::string& b, const std::string& bg) {
  SubgroupFamily family;
  if (family_name == "PowerOfF") family = SubgroupFamily::PowerOfF;
  else if (family_name == "ConjugatePower") family = SubgroupFamily::ConjugatePower;
  else if (family_name == "ProductPower") family = SubgroupFamily::ProductPower;
  else if (family_name == "CommutatorPower") family = SubgroupFamily::CommutatorPower;
  else {
    std::cerr << "error: unknown family \"" << family_name << "\"\n";
    return 1;
  }
  PrincipalCharacter ch{parse_or_die(g, "gamma"), parse_or_die(b, "beta_f"),
                        parse_or_die(bg, "beta_g")};
  try {
    PrincipalCharacter sub = subgroup_character(ch, family, n);
    Json out;
    out["family"] = family_name;
    out["n"] = n;
    out["character"] = to_json(sub);
    std::cout << out.dump(2) << "\n";
  } catch (const DegenerateCharacter& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Trace-polynomial identities and discreteness necessary conditions for "
      "two-generator subgroups of PSL(2,C)"};
  app.require_subcommand(1);
  app.fallthrough(); // let subcommands accept the global --n after their name

  unsigned depth = kleinian::kDefaultBatteryDepth;
  app.add_option("--n", depth, "depth for the n-indexed inequality families")
      ->check(CLI::Range(1u, 64u))
      ->capture_default_str();

  AssumeFlags assume;

  auto* check = app.add_subcommand(
      "check", "run the inequality battery on a character (or catalog name)");
  std::vector<std::string> check_args;
  check->add_option("character", check_args,
                    "gamma beta_f beta_g as complex literals, or one catalog name")
      ->expected(1, 3);
  check->add_option("--assume-f-order", assume.f_order,
                    "assert the order of f: an integer, or 'none' for not elliptic "
                    "of order 2..6");
  check->add_flag("--assume-g-order2", assume.g_order2, "assert that g has order two");

  auto* verify = app.add_subcommand(
      "verify", "regenerate the printed identities and run the matrix oracle suite");
  bool inject_fault = false;
  verify->add_flag("--inject-fault", inject_fault)->group("");

  auto* scan = app.add_subcommand("scan", "battery over a gamma-plane rectangle");
  std::string beta_s = "0", gmin_s = "-1-1i", gmax_s = "1+1i";
  kleinian::ScanSpec spec;
  std::string format = "csv", out_path;
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  scan->add_option("--beta", beta_s, "fixed beta slice value")->capture_default_str();
  scan->add_option("--gamma-min", gmin_s, "rectangle corner")->capture_default_str();
  scan->add_option("--gamma-max", gmax_s, "rectangle corner")->capture_default_str();
  scan->add_option("--nx", spec.nx, "grid resolution, real axis")->capture_default_str();
  scan->add_option("--ny", spec.ny, "grid resolution, imaginary axis")
      ->capture_default_str();
  scan->add_option("--format", format, "csv|pgm")->capture_default_str();
  scan->add_option("--out", out_path, "output path (default stdout)");
  scan->add_option("--workers", workers, "parallel row workers")->capture_default_str();

  auto* catalog = app.add_subcommand("catalog", "list the named groups");

  auto* realize_cmd = app.add_subcommand("realize", "matrix realization of a character");
  std::vector<std::string> realize_args;
  realize_cmd->add_option("character", realize_args, "gamma beta_f beta_g")
      ->expected(3);

  auto* subgroup = app.add_subcommand("subgroup",
                                      "principal character of a subgroup family");
  std::string family_name;
  unsigned sub_n = 1;
  std::vector<std::string> sub_args;
  subgroup->add_option("family", family_name,
                       "PowerOfF|ConjugatePower|ProductPower|CommutatorPower")
      ->required();
  subgroup->add_option("n", sub_n, "power")->required();
  subgroup->add_option("character", sub_args, "gamma beta_f beta_g")->expected(3);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (check->parsed()) return cmd_check(check_args, assume, depth);
    if (verify->parsed()) return cmd_verify(depth, inject_fault);
    if (scan->parsed()) {
      spec.beta = parse_or_die(beta_s, "beta");
      spec.gamma_min = parse_or_die(gmin_s, "gamma-min");
      spec.gamma_max = parse_or_die(gmax_s, "gamma-max");
      spec.depth = depth;
      return cmd_scan(spec, format, out_path, workers);
    }
    if (catalog->parsed()) return cmd_catalog();
    if (realize_cmd->parsed())
      return cmd_realize(realize_args[0], realize_args[1], realize_args[2]);
    if (subgroup->parsed())
      return cmd_subgroup(family_name, sub_n, sub_args[0], sub_args[1], sub_args[2]);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
