//
// pdgenus: partial-dual Euler-genus polynomials of one-vertex ribbon graphs.
//
// Subcommands:
//   eval    polynomial, interpolation verdict, and gaps of one rotation
//   table   per-subset genus table (text, csv, or json)
//   family  the built-in B/C families: rotation, closed form, verification
//   search  exhaustive canonical search for non-interpolating bouquets
//   check   interpolation verdict for a polynomial or a rotation
//
// Exit codes: 0 success (check: interpolating), 1 input error,
// 2 verification mismatch (family --verify), 3 non-interpolating (check).
//

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pdgenus/families.hpp"
#include "pdgenus/polynomial.hpp"
#include "pdgenus/rotation.hpp"
#include "pdgenus/search.hpp"

using namespace pdgenus;

namespace {

constexpr int kEvalGuardEdges = 20;
constexpr int kSearchGuardDefault = 6;
constexpr int kSearchGuardForced = 8;
constexpr int kFamilyVerifyGuard = 5;

std::string gaps_text(const std::vector<int>& gaps) {
  std::string out = "[";
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(gaps[i]);
  }
  out += "]";
  return out;
}

nlohmann::ordered_json polynomial_json(const GenusPolynomial& poly) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [g, c] : poly.terms()) terms.push_back({g, c.str()});
  return terms;
}

void print_verdict_text(const GenusPolynomial& poly) {
  bool interpolating = is_interpolating(poly);
  std::vector<int> gaps = gap_exponents(poly);
  std::cout << "polynomial: " << format_polynomial(poly) << "\n";
  std::cout << "interpolating: " << (interpolating ? "true" : "false") << "\n";
  std::cout << "gaps: " << gaps_text(gaps) << "\n";
}

struct EvalOptions {
  std::string rotation;
  bool orientable = false;
  std::string format = "text";
};

int run_eval(const EvalOptions& opt) {
  if (opt.format == "csv") {
    throw ValidationError("csv output is only available for table output");
  }
  SignedRotation rot = parse_rotation(opt.rotation);
  if (rot.edge_count() > kEvalGuardEdges) {
    throw GuardError("refusing to enumerate 2^" +
                     std::to_string(rot.edge_count()) +
                     " subsets; the guard allows at most " +
                     std::to_string(kEvalGuardEdges) + " edges");
  }
  GenusPolynomial poly = opt.orientable
                             ? partial_dual_orientable_polynomial(rot)
                             : partial_dual_euler_polynomial(rot);
  if (opt.format == "json") {
    nlohmann::ordered_json j;
    j["rotation"] = format_rotation(rot);
    j["kind"] = opt.orientable ? "orientable" : "euler";
    j["polynomial"] = polynomial_json(poly);
    j["interpolating"] = is_interpolating(poly);
    j["gaps"] = gap_exponents(poly);
    std::cout << j.dump() << "\n";
    return 0;
  }
  std::cout << "rotation: " << format_rotation(rot) << "\n";
  print_verdict_text(poly);
  return 0;
}

struct TableOptions {
  std::string rotation;
  std::string format = "text";
  bool ascii = false;
};

int run_table(const TableOptions& opt) {
  SignedRotation rot = parse_rotation(opt.rotation);
  SubsetGenusTable table = subset_table(rot);
  if (opt.format == "json") {
    nlohmann::ordered_json j;
    j["rotation"] = format_rotation(rot);
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const SubsetTableRow& row : table.rows) {
      nlohmann::ordered_json r;
      r["subset"] = row.subset.members();
      r["eps_subset"] = row.eps_subset;
      r["eps_complement"] = row.eps_complement;
      r["eps_dual"] = row.eps_dual;
      rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    std::cout << j.dump() << "\n";
    return 0;
  }
  if (opt.format == "csv") {
    std::cout << format_table_csv(table, opt.ascii);
    return 0;
  }
  std::cout << format_table_text(table, opt.ascii);
  return 0;
}

struct FamilyOptions {
  std::string kind;
  int n = 1;
  bool verify = false;
  std::string format = "text";
};

int run_family(const FamilyOptions& opt) {
  if (opt.format == "csv") {
    throw ValidationError("csv output is only available for table output");
  }
  Family family{opt.kind == "B" ? FamilyKind::B : FamilyKind::C, opt.n};
  SignedRotation rot = family_rotation(family);
  GenusPolynomial closed = family.kind == FamilyKind::B
                               ? family_b_polynomial(opt.n)
                               : family_c_polynomial(opt.n);

  bool verified = false;
  std::int64_t subsets = 0;
  if (opt.verify) {
    if (opt.n > kFamilyVerifyGuard) {
      throw GuardError("--verify enumerates 2^" +
                       std::to_string(family_edge_count(family)) +
                       " subsets; the guard allows n <= " +
                       std::to_string(kFamilyVerifyGuard));
    }
    int m = family_edge_count(family);
    subsets = std::int64_t{1} << m;

    GenusPolynomial brute = partial_dual_euler_polynomial(rot);
    if (brute != closed) {
      std::cerr << "verification mismatch: closed form "
                << format_polynomial(closed) << " but enumeration gives "
                << format_polynomial(brute) << "\n";
      return 2;
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      EdgeSubset a = EdgeSubset::from_mask(mask);
      int by_cases = family.kind == FamilyKind::B
                         ? family_b_dual_genus(opt.n, a)
                         : family_c_dual_genus(opt.n, a);
      if (by_cases != partial_dual_euler_genus(rot, a)) {
        std::cerr << "verification mismatch: case formula gives " << by_cases
                  << " for subset " << format_subset(a, true)
                  << " but the boundary trace gives "
                  << partial_dual_euler_genus(rot, a) << "\n";
        return 2;
      }
    }
    verified = true;
  }

  if (opt.format == "json") {
    nlohmann::ordered_json j;
    j["family"] = opt.kind;
    j["n"] = opt.n;
    j["rotation"] = format_rotation(rot);
    j["polynomial"] = polynomial_json(closed);
    j["interpolating"] = is_interpolating(closed);
    j["gaps"] = gap_exponents(closed);
    if (opt.verify) j["verified"] = verified;
    std::cout << j.dump() << "\n";
    return 0;
  }
  std::cout << "family: " << opt.kind << " n=" << opt.n << "\n";
  std::cout << "rotation: " << format_rotation(rot) << "\n";
  print_verdict_text(closed);
  if (verified) {
    std::cout << "verify: closed form matches subset enumeration (" << subsets
              << " subsets)\n";
    std::cout << "verify: case formula matches on all " << subsets
              << " subsets\n";
  }
  return 0;
}

struct SearchOptions {
  int max_edges = 0;
  bool all = false;
  bool force = false;
  int jobs = 1;
  std::string out;
};

int run_cli_search(const SearchOptions& opt) {
  int guard = opt.force ? kSearchGuardForced : kSearchGuardDefault;
  if (opt.max_edges < 1 || opt.max_edges > guard) {
    throw GuardError("search edge bound must be within 1.." +
                     std::to_string(guard) +
                     (opt.force ? "" : " (use --force to allow up to " +
                                           std::to_string(kSearchGuardForced) +
                                           ")"));
  }
  SearchConfig cfg;
  cfg.max_edges = opt.max_edges;
  cfg.prime_only = !opt.all;
  cfg.nonorientable_only = !opt.all;
  cfg.worker_count = opt.jobs;

  SearchResult result = run_search(cfg);

  std::ofstream file;
  std::ostream* sink = &std::cout;
  if (!opt.out.empty()) {
    file.open(opt.out);
    if (!file) {
      throw ValidationError("cannot open output file: " + opt.out);
    }
    sink = &file;
  }
  for (const CounterexampleRecord& rec : result.records) {
    *sink << record_to_json(rec) << "\n";
  }

  std::int64_t total = 0;
  std::cout << "summary:";
  for (const EdgeClassSummary& s : result.per_edge) {
    std::cout << " m=" << s.edge_count << " orbits=" << s.orbit_count
              << " counterexamples=" << s.counterexample_count << " |";
    total += s.counterexample_count;
  }
  std::cout << " total counterexamples=" << total << "\n";
  return 0;
}

struct CheckOptions {
  std::string poly;
  std::string rotation;
};

int run_check(const CheckOptions& opt) {
  GenusPolynomial poly;
  if (!opt.rotation.empty()) {
    SignedRotation rot = parse_rotation(opt.rotation);
    if (rot.edge_count() > kEvalGuardEdges) {
      throw GuardError("refusing to enumerate 2^" +
                       std::to_string(rot.edge_count()) +
                       " subsets; the guard allows at most " +
                       std::to_string(kEvalGuardEdges) + " edges");
    }
    poly = partial_dual_euler_polynomial(rot);
    std::cout << "rotation: " << format_rotation(rot) << "\n";
  } else {
    poly = parse_polynomial(opt.poly);
  }
  print_verdict_text(poly);
  return is_interpolating(poly) ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "partial-dual Euler-genus polynomials of one-vertex ribbon graphs"};
  app.require_subcommand(1);

  EvalOptions eval_opt;
  CLI::App* eval = app.add_subcommand(
      "eval", "polynomial and interpolation verdict of a rotation");
  eval->add_option("rotation", eval_opt.rotation, "signed rotation text")
      ->required();
  eval->add_flag("--orientable-genus", eval_opt.orientable,
                 "orientable genus polynomial (orientable input only)");
  eval->add_option("--format", eval_opt.format, "text or json")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  TableOptions table_opt;
  CLI::App* table =
      app.add_subcommand("table", "per-subset genus table of a rotation");
  table->add_option("rotation", table_opt.rotation, "signed rotation text")
      ->required();
  table->add_option("--format", table_opt.format, "text, csv, or json")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  table->add_flag("--ascii", table_opt.ascii,
                  "render the empty set as {} instead of the UTF-8 symbol");

  FamilyOptions family_opt;
  CLI::App* family =
      app.add_subcommand("family", "built-in counterexample families");
  family->add_option("kind", family_opt.kind, "B or C")
      ->required()
      ->check(CLI::IsMember({"B", "C"}));
  family->add_option("n", family_opt.n, "family parameter (n >= 1)")
      ->required();
  family->add_flag("--verify", family_opt.verify,
                   "cross-check the closed form against subset enumeration");
  family->add_option("--format", family_opt.format, "text or json")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  SearchOptions search_opt;
  CLI::App* search = app.add_subcommand(
      "search", "exhaustive search for non-interpolating bouquets");
  search->add_option("max_edges", search_opt.max_edges,
                     "search all bouquets with up to this many edges")
      ->required();
  search->add_flag("--all", search_opt.all,
                   "lift the prime and non-orientable filters");
  search->add_flag("--force", search_opt.force,
                   "allow searches beyond the default 6-edge guard");
  search->add_option("--jobs", search_opt.jobs, "worker thread count")
      ->check(CLI::PositiveNumber);
  search->add_option("--out", search_opt.out,
                     "write JSON-lines records to this file");

  CheckOptions check_opt;
  CLI::App* check =
      app.add_subcommand("check", "interpolation verdict for a polynomial");
  CLI::Option* poly_opt =
      check->add_option("--poly", check_opt.poly, "polynomial text");
  CLI::Option* rot_opt =
      check->add_option("--rotation", check_opt.rotation,
                        "signed rotation text (verdict of its polynomial)");
  poly_opt->excludes(rot_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (eval->parsed()) return run_eval(eval_opt);
    if (table->parsed()) return run_table(table_opt);
    if (family->parsed()) return run_family(family_opt);
    if (search->parsed()) return run_cli_search(search_opt);
    if (check->parsed()) {
      if (check_opt.poly.empty() == check_opt.rotation.empty()) {
        throw ValidationError("check needs exactly one of --poly/--rotation");
      }
      return run_check(check_opt);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
