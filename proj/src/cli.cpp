#include "maxclass/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "maxclass/enumeration.hpp"
#include "maxclass/errors.hpp"
#include "maxclass/matrix_oracle.hpp"
#include "maxclass/verify.hpp"
#include "maxclass/zeta.hpp"

namespace maxclass {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

Json big_to_json(const BigInt& v) {
  static const BigInt lo = std::numeric_limits<std::int64_t>::min();
  static const BigInt hi = std::numeric_limits<std::int64_t>::max();
  if (v >= lo && v <= hi) return Json(static_cast<std::int64_t>(v));
  return Json(v.str());
}

struct LevelRange {
  int lo = 0;
  int hi = -1;  // empty when hi < lo

  static LevelRange parse(const std::string& text) {
    LevelRange r;
    const auto sep = text.find("..");
    try {
      if (sep == std::string::npos) {
        r.lo = r.hi = std::stoi(text);
      } else {
        r.lo = std::stoi(text.substr(0, sep));
        r.hi = std::stoi(text.substr(sep + 2));
      }
    } catch (const std::exception&) {
      throw usage_error("invalid level range '" + text + "'");
    }
    if (r.lo < 0) throw usage_error("levels must be >= 0");
    return r;
  }
};

int default_jobs() {
  if (const char* env = std::getenv("MAXCLASS_JOBS")) {
    try {
      return std::max(1, std::stoi(env));
    } catch (const std::exception&) {
      throw usage_error("MAXCLASS_JOBS is not an integer");
    }
  }
  return 1;
}

LambdaTuple tuple_from_args(int n, std::int64_t p, int level,
                            const std::string& lambdas) {
  std::vector<std::int64_t> exps;
  std::stringstream ss(lambdas);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      exps.push_back(std::stoll(item));
    } catch (const std::exception&) {
      throw usage_error("invalid exponent '" + item + "' in --lambdas");
    }
  }
  if (exps.size() != static_cast<std::size_t>(n - 1))
    throw usage_error("--lambdas needs " + std::to_string(n - 1) +
                      " comma-separated exponents (lambda_2..lambda_n at "
                      "modulus p^(N+n))");
  return LambdaTuple::from_exponents(GroupSpec(n, p, level), exps);
}

// Plain fixed tables: right-aligned numeric columns, stable across runs.
std::string format_table(const std::vector<std::vector<std::string>>& rows) {
  if (rows.empty()) return "";
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c)
      width[c] = std::max(width[c], row[c].size());
  }
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += "  ";
      out += std::string(width[c] - row[c].size(), ' ') + row[c];
    }
    out += '\n';
  }
  return out;
}

// ---- enumerate ------------------------------------------------------------

struct EnumerateRow {
  GroupSpec spec;
  EnumerationReport report;
  bool with_cases = false;
  CaseCountReport cases;
};

int cmd_enumerate(int n, std::int64_t p, const LevelRange& levels, bool cases,
                  const std::string& emit, int jobs, std::ostream& out,
                  std::ostream& err) {
  std::vector<EnumerateRow> rows;
  for (int N = levels.lo; N <= levels.hi; ++N) {
    EnumerateRow row;
    row.spec = GroupSpec(n, p, N);
    row.report = count_report(row.spec, jobs);
    row.with_cases = cases;
    if (cases) row.cases = case_counts(row.spec);
    err << "enumerated (" << n << ", " << p << ", " << N << "): "
        << row.report.tuples_total << " tuples\n";
    rows.push_back(std::move(row));
  }

  if (emit == "json") {
    auto row_json = [](const EnumerateRow& row) {
      Json j;
      j["n"] = row.spec.n;
      j["p"] = row.spec.p;
      j["N"] = row.spec.N;
      j["r"] = row.report.isoclasses;
      if (row.with_cases) {
        j["cases"] = Json::object();
        for (const auto& [label, count] : row.cases.major)
          j["cases"][label] = count;
        if (!row.cases.sub.empty()) {
          j["subcases"] = Json::object();
          for (const auto& [label, count] : row.cases.sub)
            j["subcases"][label] = count;
        }
      }
      j["tuples_total"] = row.report.tuples_total;
      j["irreducible_total"] = row.report.irreducible_total;
      return j;
    };
    if (rows.size() == 1) {
      out << row_json(rows[0]).dump(2) << '\n';
    } else {
      Json arr = Json::array();
      for (const auto& row : rows) arr.push_back(row_json(row));
      out << arr.dump(2) << '\n';
    }
    return kExitOk;
  }

  if (emit == "csv") {
    if (cases) {
      out << "n,p,N,case,count\n";
      for (const auto& row : rows)
        for (const auto& [label, count] : row.cases.major)
          out << row.spec.n << ',' << row.spec.p << ',' << row.spec.N << ','
              << label << ',' << count << '\n';
    } else {
      out << "n,p,N,r,tuples_total,irreducible_total\n";
      for (const auto& row : rows)
        out << row.spec.n << ',' << row.spec.p << ',' << row.spec.N << ','
            << row.report.isoclasses << ',' << row.report.tuples_total << ','
            << row.report.irreducible_total << '\n';
    }
    return kExitOk;
  }

  // table
  std::vector<std::vector<std::string>> table{
      {"n", "p", "N", "r", "tuples", "irreducible"}};
  for (const auto& row : rows)
    table.push_back({std::to_string(row.spec.n), std::to_string(row.spec.p),
                     std::to_string(row.spec.N),
                     std::to_string(row.report.isoclasses),
                     std::to_string(row.report.tuples_total),
                     std::to_string(row.report.irreducible_total)});
  out << format_table(table);
  for (const auto& row : rows) {
    if (!row.with_cases) continue;
    out << "\ncases at (" << row.spec.n << ", " << row.spec.p << ", "
        << row.spec.N << "):\n";
    std::vector<std::vector<std::string>> ct{{"case", "orbits"}};
    for (const auto& [label, count] : row.cases.major)
      ct.push_back({label, std::to_string(count)});
    for (const auto& [label, count] : row.cases.sub)
      ct.push_back({label, std::to_string(count)});
    out << format_table(ct);
  }
  return kExitOk;
}

// ---- rep show / rep check / orbit ----------------------------------------

int cmd_rep_show(const LambdaTuple& t, std::ostream& out) {
  const auto& spec = t.spec;
  out << "group M_" << spec.n << ", p = " << spec.p << ", level N = " << spec.N
      << ", dimension " << spec.dimension() << "\n";
  out << "tuple (lambda_2..lambda_" << spec.n << ") = " << t.str() << "\n\n";

  std::vector<std::vector<std::string>> table{{"row", "entries"}};
  for (int i = 1; i <= spec.n; ++i) {
    std::string entries;
    for (std::int64_t j = 1; j <= spec.dimension(); ++j) {
      if (j > 1) entries += ' ';
      entries += lambda_entry(t, i, j).str();
    }
    table.push_back({"x_" + std::to_string(i) + (i == 1 ? " (norm.)" : ""),
                     entries});
  }
  out << format_table(table) << '\n';

  bool well_defined = true;
  std::vector<std::vector<std::string>> defects{{"row", "closure defect"}};
  for (int i = 2; i <= spec.n; ++i) {
    const auto d = closure_defect(t, i);
    well_defined = well_defined && d.is_one();
    defects.push_back({"i=" + std::to_string(i), d.str()});
  }
  out << format_table(defects) << '\n';
  if (!well_defined) {
    out << "tuple is NOT well defined (nontrivial closure defect)\n";
    return kExitOk;
  }
  for (int low = 1; low <= 2; ++low)
    out << "minimal period exponent (rows >= " << low
        << "): " << minimal_period_exponent(t, low) << "\n";
  out << "irreducible: " << (is_irreducible(t) ? "yes" : "no") << "\n";
  return kExitOk;
}

int cmd_rep_check(const LambdaTuple& t, double tolerance, std::ostream& out) {
  const auto gens = build_rep(t);
  const auto rel = check_relations(gens);
  out << "relations: " << (rel.ok ? "ok" : "FAILED at " + rel.failed) << "\n";
  std::vector<std::vector<std::string>> table{{"k", "V_{p^k} stable"}};
  for (int k = 0; k <= t.spec.N; ++k)
    table.push_back(
        {std::to_string(k), subspace_stable(gens, k) ? "yes" : "no"});
  out << format_table(table);
  const auto com = commutant_dimension(gens, tolerance);
  out << "commutant dimension: " << com.dimension
      << (com.dimension == 1 ? " (irreducible)" : " (reducible)") << "\n";
  std::ostringstream margin;
  margin << std::setprecision(3) << com.margin;
  out << "singular-value margin: " << margin.str()
      << (com.conditioning_warning ? "  WARNING: near threshold" : "") << "\n";
  return kExitOk;
}

int cmd_orbit(const LambdaTuple& t, const std::string& emit,
              std::ostream& out) {
  if (!is_well_defined(t))
    throw usage_error("orbit: tuple is not well defined");
  const auto members = orbit_members(t);
  const auto orbit = orbit_of(t);
  if (emit == "json") {
    Json j;
    j["size"] = orbit.size;
    j["representative"] = orbit.representative.str();
    j["members"] = Json::array();
    for (const auto& m : members) j["members"].push_back(m.str());
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  out << "orbit size " << orbit.size << " (fast path "
      << orbit_size_fast(t) << ")\n";
  out << "representative " << orbit.representative.str() << "\n";
  for (const auto& m : members) out << "  " << m.str() << "\n";
  return kExitOk;
}

// ---- zeta -----------------------------------------------------------------

int cmd_zeta_local(int n, std::int64_t p, int terms, const std::string& emit,
                   int check_brute, int jobs, std::ostream& out,
                   std::ostream& err) {
  const auto series = local_closed_form(n, p);
  const auto coeffs = expand(series, terms);

  std::vector<std::int64_t> brute;
  bool brute_match = true;
  for (int N = 1; N <= check_brute; ++N) {
    err << "brute-force count at level " << N << "...\n";
    brute.push_back(count_twist_isoclasses(GroupSpec(n, p, N), jobs));
    if (N <= terms &&
        BigInt(brute.back()) != coeffs[static_cast<std::size_t>(N)])
      brute_match = false;
  }

  if (emit == "json") {
    Json j;
    j["n"] = n;
    j["p"] = p;
    j["numer"] = poly_str(series.numer);
    j["denom"] = poly_str(series.denom);
    j["coeffs"] = Json::array();
    for (const auto& c : coeffs) j["coeffs"].push_back(big_to_json(c));
    j["provenance"] = provenance_str(series.provenance);
    if (check_brute > 0) {
      j["brute"] = brute;
      j["brute_match"] = brute_match;
    }
    out << j.dump(2) << '\n';
  } else if (emit == "csv") {
    out << "n,p,k,coeff\n";
    for (std::size_t k = 0; k < coeffs.size(); ++k)
      out << n << ',' << p << ',' << k << ',' << coeffs[k].str() << '\n';
  } else {
    out << "zeta_{M_" << n << "," << p << "} = (" << poly_str(series.numer)
        << ") / (" << poly_str(series.denom) << ")   ["
        << provenance_str(series.provenance) << "]\n";
    std::vector<std::vector<std::string>> table{{"k", "r_{p^k}"}};
    for (std::size_t k = 0; k < coeffs.size(); ++k)
      table.push_back({std::to_string(k), coeffs[k].str()});
    out << format_table(table);
    if (check_brute > 0) {
      out << "brute-force counts:";
      for (const auto b : brute) out << ' ' << b;
      out << "\nseries " << (brute_match ? "matches" : "DOES NOT match")
          << " brute force on the compared range\n";
    }
  }
  return kExitOk;
}

int cmd_zeta_global(int n, std::int64_t bound, const std::string& emit,
                    std::ostream& out) {
  const auto global = global_coefficients(n, bound);
  // all Euler factors in the proven range n <= 4 carry the proven flag;
  // report the weakest one anyway
  auto weakest = Provenance::paper_proven;
  for (std::int64_t p : primes_up_to(bound))
    if (local_closed_form(n, p).provenance != Provenance::paper_proven)
      weakest = Provenance::conjectural_uniform;
  if (emit == "json") {
    Json j;
    j["n"] = n;
    j["max"] = bound;
    j["provenance"] = provenance_str(weakest);
    j["values"] = Json::array();
    for (const auto& v : global.values) j["values"].push_back(big_to_json(v));
    out << j.dump(2) << '\n';
  } else if (emit == "csv") {
    out << "n,m,r\n";
    for (std::int64_t m = 1; m <= bound; ++m)
      out << n << ',' << m << ',' << global.r(m).str() << '\n';
  } else {
    std::vector<std::vector<std::string>> table{{"m", "r_m"}};
    for (std::int64_t m = 1; m <= bound; ++m)
      table.push_back({std::to_string(m), global.r(m).str()});
    out << format_table(table);
  }
  return kExitOk;
}

// ---- verify ---------------------------------------------------------------

int cmd_verify(const std::string& only, const std::string& emit,
               std::ostream& out) {
  const auto results = run_verify(only);
  bool all_pass = true;
  for (const auto& r : results) all_pass = all_pass && r.pass;

  if (emit == "json") {
    Json arr = Json::array();
    for (const auto& r : results) {
      Json j;
      j["group"] = r.group;
      j["statement"] = r.statement;
      j["pass"] = r.pass;
      if (!r.detail.empty()) j["detail"] = r.detail;
      arr.push_back(j);
    }
    Json top;
    top["claims"] = arr;
    top["all_pass"] = all_pass;
    out << top.dump(2) << '\n';
  } else {
    std::size_t passed = 0;
    for (const auto& r : results) {
      out << (r.pass ? "PASS" : "FAIL") << " [" << r.group << "] "
          << r.statement;
      if (!r.pass && !r.detail.empty()) out << " -- " << r.detail;
      out << '\n';
      if (r.pass) ++passed;
    }
    out << passed << "/" << results.size() << " claims pass\n";
  }
  return all_pass ? kExitOk : kExitMismatch;
}

// ---- app ------------------------------------------------------------------

int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"exact enumeration of twist isoclasses and representation "
               "zeta functions of the maximal class groups M_n"};
  app.set_config("--config");
  app.require_subcommand(1);
  app.fallthrough();

  int jobs = default_jobs();
  app.add_option("--jobs", jobs, "worker threads for enumerations")
      ->check(CLI::PositiveNumber);
  std::string output_path;
  app.add_option("--output", output_path,
                 "write the data stream to a file instead of stdout");

  // tk
  auto* tk = app.add_subcommand("tk", "evaluate T_k(j), optionally mod p^M");
  std::int64_t tk_k = 0;
  std::string tk_j;
  std::int64_t tk_p = 0;
  int tk_mod = 0;
  tk->add_option("--k", tk_k, "subscript k >= 0")->required();
  tk->add_option("--j", tk_j, "argument j >= 0")->required();
  tk->add_option("--p", tk_p, "prime for reduction");
  tk->add_option("--mod", tk_mod, "reduce mod p^M");

  // rep show / rep check
  auto* rep = app.add_subcommand("rep", "inspect one standard-form tuple");
  rep->require_subcommand(1);
  int rep_n = 4;
  std::int64_t rep_p = 2;
  int rep_level = 1;
  std::string rep_lambdas;
  double rep_tolerance = 1e-6;
  auto add_tuple_options = [&](CLI::App* cmd) {
    cmd->add_option("--n", rep_n, "class parameter n >= 2")->required();
    cmd->add_option("--p", rep_p, "prime")->required();
    cmd->add_option("--level", rep_level, "level N >= 0")->required();
    cmd->add_option("--lambdas", rep_lambdas,
                    "comma-separated exponents e_2..e_n at modulus p^(N+n)")
        ->required();
  };
  auto* rep_show = rep->add_subcommand(
      "show", "diagonal entries, closure defects, periods, verdict");
  add_tuple_options(rep_show);
  auto* rep_check = rep->add_subcommand(
      "check", "relations, stable subspaces, numeric commutant");
  add_tuple_options(rep_check);
  rep_check->add_option("--tolerance", rep_tolerance,
                        "relative singular value threshold");

  // orbit
  auto* orbit = app.add_subcommand("orbit", "shout orbit of a tuple");
  add_tuple_options(orbit);
  std::string orbit_emit = "table";
  orbit->add_option("--emit", orbit_emit, "table|json")
      ->check(CLI::IsMember({"table", "json"}));

  // enumerate
  auto* enumerate = app.add_subcommand(
      "enumerate", "count twist isoclasses by exhaustive enumeration");
  int en_n = 4;
  std::int64_t en_p = 2;
  std::string en_levels;
  bool en_cases = false;
  std::string en_emit = "table";
  enumerate->add_option("--n", en_n, "class parameter n >= 2")->required();
  enumerate->add_option("--p", en_p, "prime")->required();
  auto* en_level_opt =
      enumerate->add_option("--level", en_levels, "level N, or range A..B");
  enumerate->add_option("--levels", en_levels, "level N, or range A..B")
      ->excludes(en_level_opt);
  enumerate->add_flag("--cases", en_cases, "split counts by case label");
  enumerate->add_option("--emit", en_emit, "table|json|csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));

  // zeta local / zeta global
  auto* zeta = app.add_subcommand("zeta", "local and global zeta functions");
  zeta->require_subcommand(1);
  auto* zl = zeta->add_subcommand("local", "closed-form local factor");
  int zl_n = 4;
  std::int64_t zl_p = 2;
  int zl_terms = 8;
  int zl_brute = 0;
  std::string zl_emit = "table";
  zl->add_option("--n", zl_n, "class parameter n >= 2")->required();
  zl->add_option("--p", zl_p, "prime")->required();
  zl->add_option("--terms", zl_terms, "number of coefficients past r_1")
      ->check(CLI::NonNegativeNumber);
  zl->add_option("--check-brute", zl_brute,
                 "also brute-force count levels 1..L and compare")
      ->check(CLI::NonNegativeNumber);
  zl->add_option("--emit", zl_emit, "table|json|csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  auto* zg = zeta->add_subcommand("global", "Dirichlet coefficients r_m");
  int zg_n = 4;
  std::int64_t zg_max = 100;
  std::string zg_emit = "table";
  zg->add_option("--n", zg_n, "group parameter, 2..4")->required();
  zg->add_option("--max", zg_max, "largest index m")->required();
  zg->add_option("--emit", zg_emit, "table|json|csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));

  // verify
  auto* verify = app.add_subcommand(
      "verify", "run the verification grid; exit 1 on any mismatch");
  std::string v_only;
  std::string v_emit = "table";
  verify->add_option("--only", v_only, "restrict to one claim family");
  verify->add_option("--emit", v_emit, "table|json")
      ->check(CLI::IsMember({"table", "json"}));

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("maxclass");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::ofstream file;
  std::ostream* data = &out;
  if (!output_path.empty()) {
    file.open(output_path);
    if (!file) throw usage_error("cannot open output file " + output_path);
    data = &file;
  }
  std::ostream& sink = *data;

  if (tk->parsed()) {
    BigInt j;
    try {
      j = BigInt(tk_j);
    } catch (const std::exception&) {
      throw usage_error("tk: --j must be a non-negative integer");
    }
    const bool has_p = tk->count("--p") > 0;
    const bool has_mod = tk->count("--mod") > 0;
    if (has_p != has_mod)
      throw usage_error("tk: --p and --mod must be given together");
    if (has_p)
      sink << t_number_mod(tk_k, j, tk_p, tk_mod).str() << '\n';
    else
      sink << t_number(tk_k, j).str() << '\n';
    return kExitOk;
  }
  if (rep_show->parsed())
    return cmd_rep_show(tuple_from_args(rep_n, rep_p, rep_level, rep_lambdas),
                        sink);
  if (rep_check->parsed())
    return cmd_rep_check(tuple_from_args(rep_n, rep_p, rep_level, rep_lambdas),
                         rep_tolerance, sink);
  if (orbit->parsed())
    return cmd_orbit(tuple_from_args(rep_n, rep_p, rep_level, rep_lambdas),
                     orbit_emit, sink);
  if (enumerate->parsed()) {
    if (en_levels.empty())
      throw usage_error("enumerate: --level (or --levels) is required");
    return cmd_enumerate(en_n, en_p, LevelRange::parse(en_levels), en_cases,
                         en_emit, jobs, sink, err);
  }
  if (zl->parsed())
    return cmd_zeta_local(zl_n, zl_p, zl_terms, zl_emit, zl_brute, jobs, sink,
                          err);
  if (zg->parsed()) return cmd_zeta_global(zg_n, zg_max, zg_emit, sink);
  if (verify->parsed()) return cmd_verify(v_only, v_emit, sink);
  throw usage_error("no subcommand given");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  try {
    return dispatch(args, out, err);
  } catch (const usage_error& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const internal_error& e) {
    err << "internal consistency failure: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace maxclass
