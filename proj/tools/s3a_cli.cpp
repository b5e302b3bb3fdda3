#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"

#include "s3a/checks.hpp"
#include "s3a/io.hpp"

using namespace s3a;

namespace {

constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;
constexpr int kBound = 3;

struct Global {
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::string cache_dir;
};

std::vector<CubicField> cubic_fields(const Global& g, std::uint64_t X) {
  CubicEnumOptions opt;
  opt.workers = g.workers;
  if (g.cache_dir.empty()) return enumerate_cubic_raw(X, opt);
  return Cache(g.cache_dir).cubic(X, opt);
}

int report_check(const std::string& name, const CheckResult& r) {
  std::cout << (r.pass ? "PASS " : "FAIL ") << name << ": " << r.detail << "\n";
  return r.pass ? 0 : kVerifyFailed;
}

int run_report(const Global& g, const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  CubicTable t(cubic_fields(g, 1000000), 1000000);

  std::ofstream counts(fs::path(dir) / "cubic_counts.csv");
  counts << "X,N_S3,N_C3,predicted,residual_over_X56\n";
  for (std::uint64_t X : {1000ULL, 10000ULL, 100000ULL, 1000000ULL}) {
    auto row = cubic_fit_rows(t, {X}).front();
    auto pred = predicted_Nqr(static_cast<long double>(X), 1, 1);
    counts << X << "," << row.N << "," << t.count(X, false) - row.N << "," << static_cast<double>(pred.total()) << ","
           << static_cast<double>(row.scaled) << "\n";
  }

  std::ofstream uni(fs::path(dir) / "uniformity.csv");
  uni << "q,r,count,ratio\n";
  std::vector<std::pair<std::uint64_t, std::uint64_t>> cells;
  for (std::uint64_t q = 1; q <= 50; ++q)
    if (is_squarefree(q) && q % 2 && q % 3) {
      cells.emplace_back(q, 1);
      if (q > 1) cells.emplace_back(1, q);
    }
  for (const auto& row : uniformity_report(t, 1000000, cells))
    uni << row.q << "," << row.r << "," << row.count << "," << static_cast<double>(row.ratio) << "\n";

  std::ofstream ps(fs::path(dir) / "power_saving.csv");
  ps << "group,m,p_min,secondary_term,power_saving,delta,recomputed\n";
  json profiles = json::array();
  for (const auto& A : odd_abelian_groups(45)) {
    auto r = verify_inequalities(A);
    ps << A.label() << "," << A.m() << "," << A.p_min() << "," << r.secondaryTerm << "," << r.powerSaving << ",";
    try {
      auto c = power_saving_crosscheck(A);
      ps << to_string(c.tabulated) << "," << to_string(c.machinery) << "\n";
    } catch (const not_applicable_error&) {
      ps << ",\n";
    }
    profiles.push_back(to_json(cell_exponents(A)));
  }
  std::ofstream(fs::path(dir) / "exponent_profiles.json") << profiles.dump(2) << "\n";

  json consts = json::array();
  for (int ell : {7, 11, 13}) consts.push_back(to_json(final_constants(ell, 1000000)));
  std::ofstream(fs::path(dir) / "constants.json") << consts.dump(2) << "\n";

  std::ofstream sv(fs::path(dir) / "sieve.csv");
  sv << "X,G,direct,rho_terms\n";
  SieveCheckOptions so;
  so.workers = g.workers;
  for (const auto& row : sieve_identity_rows(so)) sv << row.X << "," << row.G << "," << row.direct << "," << row.terms << "\n";

  std::cout << "wrote report to " << dir << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"S3 x A field counting toolkit"};
  app.require_subcommand(1);
  Global g;
  app.add_option("--workers", g.workers, "worker threads (default: available parallelism)")->check(CLI::PositiveNumber);
  app.add_option("--cache-dir", g.cache_dir, "cache directory for enumerations");

  std::string max_disc = "0", out, group = "C7", file, format = "lmfdb-like", kind = "cubic", scaling = "as-displayed";
  std::uint64_t partial = 1, total = 1, prime_bound = 1000000, seed = 1;
  std::string div = "1";
  int ell = 7;
  bool as_json = false;

  auto* ec = app.add_subcommand("enum-cubic", "enumerate cubic fields by |disc| (CSV: disc,a,b,c,d,galois)");
  ec->add_option("--max-disc", max_disc, "bound on |disc|")->required();
  ec->add_option("--out", out, "CSV output file");

  auto* ea = app.add_subcommand("enum-abelian", "enumerate C_l conductors (CSV: ell,conductor,disc,num_fields,wild)");
  ea->add_option("--ell", ell, "odd prime l")->required();
  ea->add_option("--max-disc", max_disc, "bound on disc")->required();
  ea->add_option("--out", out, "CSV output file");

  auto* cnt = app.add_subcommand("count", "count fields or S3 x C_l pairs");
  cnt->add_option("--kind", kind, "cubic | abelian | pairs")->check(CLI::IsMember({"cubic", "abelian", "pairs"}));
  cnt->add_option("--max-disc", max_disc, "bound on |disc| (decimal, may be huge for pairs)")->required();
  cnt->add_option("--partial", partial, "cubic: partially ramified at all p | q");
  cnt->add_option("--total", total, "cubic: totally ramified at all p | r");
  cnt->add_option("--div", div, "abelian: disc divisible by q");
  cnt->add_option("--ell", ell, "abelian/pairs: prime l");
  cnt->add_flag("--json", as_json, "pairs: JSON with per-rho breakdown");

  auto* co = app.add_subcommand("constants", "C1, C2 for S3 x C_l (JSON)");
  co->add_option("--ell", ell, "prime l > 5")->required();
  co->add_option("--prime-bound", prime_bound, "Euler product truncation P");
  co->add_option("--scaling", scaling, "as-displayed | from-sum")->check(CLI::IsMember({"as-displayed", "from-sum"}));

  auto* ps = app.add_subcommand("power-saving", "power saving delta for an odd abelian group");
  ps->add_option("--group", group, "e.g. C7, C3xC9")->required();
  ps->add_flag("--json", as_json, "dump the exponent profile");

  auto* ve = app.add_subcommand("verify", "run a verification");
  std::string what;
  ve->add_option("what", what, "sieve | lemma-3.2 | calcweight | uniformity | fit")
      ->required()
      ->check(CLI::IsMember({"sieve", "lemma-3.2", "calcweight", "uniformity", "fit"}));
  ve->add_option("--seed", seed, "seed for randomized instances");
  ve->add_option("--group", group, "sieve: C_l with l > 5");

  auto* in = app.add_subcommand("ingest", "compare an external table with our enumeration (diff as JSON)");
  in->add_option("--file", file, "CSV with columns label,degree,disc,galois_label")->required()->check(CLI::ExistingFile);
  in->add_option("--format", format, "table format")->check(CLI::IsMember({"lmfdb-like"}));

  auto* rp = app.add_subcommand("report", "write CSV/JSON reports: cubic_counts.csv (X,N_S3,N_C3,predicted,residual_over_X56), "
                                          "uniformity.csv (q,r,count,ratio), power_saving.csv "
                                          "(group,m,p_min,secondary_term,power_saving,delta,recomputed), sieve.csv "
                                          "(X,G,direct,rho_terms), constants.json, exponent_profiles.json");
  rp->add_option("--out", out, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (*ec) {
      auto X = parse_bigint(max_disc);
      auto fields = cubic_fields(g, X.convert_to<std::uint64_t>());
      if (out.empty()) {
        std::size_t c3 = 0;
        for (const auto& f : fields) c3 += f.cyclic;
        std::cout << "S3 " << fields.size() - c3 << "\nC3 " << c3 << "\n";
      } else {
        std::ofstream o(out);
        write_cubic_csv(o, fields);
      }
    } else if (*ea) {
      auto cs = enumerate_conductors(ell, parse_bigint(max_disc));
      if (out.empty()) {
        std::uint64_t n = 0;
        for (const auto& c : cs) n += c.num_fields;
        std::cout << "conductors " << cs.size() << "\nfields " << n << "\n";
      } else {
        std::ofstream o(out);
        write_abelian_csv(o, cs);
      }
    } else if (*cnt) {
      BigInt X = parse_bigint(max_disc);
      if (kind == "cubic") {
        auto x = X.convert_to<std::uint64_t>();
        CubicTable t(cubic_fields(g, x), x);
        if (partial == 1 && total == 1) {
          std::cout << "S3 " << t.count(x) << "\nC3 " << t.count(x, false) - t.count(x) << "\n";
        } else {
          std::cout << "S3 " << t.count_with_conditions(x, partial, total) << "\n";
        }
      } else if (kind == "abelian") {
        std::cout << count_with_divisibility(ell, X, parse_bigint(div)) << "\n";
      } else {
        AbelianGroupSpec A({ell});
        BigInt kb = iroot(X, static_cast<unsigned>(ell)), lb = iroot(X, 3);
        if (kb > 50000000) throw bound_error("cubic pool for this X exceeds the enumeration limit");
        auto U = PairUniverse::build(ell, kb.convert_to<std::uint64_t>(), lb, g.workers);
        auto a = assemble_G(X, U);
        if (as_json) std::cout << to_json(a, A, "oracle").dump(2) << "\n";
        else std::cout << a.G << "\n";
      }
    } else if (*co) {
      EulerOptions o;
      o.workers = g.workers;
      o.scaling = scaling == "from-sum" ? LocalScaling::from_sum : LocalScaling::as_displayed;
      std::cout << to_json(final_constants(ell, prime_bound, o)).dump(2) << "\n";
    } else if (*ps) {
      auto A = AbelianGroupSpec::parse(group);
      auto c = power_saving_crosscheck(A);
      std::cout << "delta = " << to_string(c.tabulated) << "\n";
      std::cout << "recomputed = " << to_string(c.machinery) << (c.agree ? " (agrees)" : " (differs)") << "\n";
      if (!c.note.empty()) std::cout << "note: " << c.note << "\n";
      if (as_json) std::cout << to_json(cell_exponents(A)).dump(2) << "\n";
    } else if (*ve) {
      if (what == "sieve") {
        auto A = AbelianGroupSpec::parse(group);
        if (A.factors().size() != 1) throw usage_error("sieve verification needs a cyclic group of prime order");
        SieveCheckOptions o;
        o.ell = A.m();
        o.workers = g.workers;
        int rc = report_check("sieve identity", check_sieve_identity(o));
        if (o.ell == 7) rc = std::max(rc, report_check("sieve strict example", check_sieve_strict_example(g.workers)));
        return rc;
      }
      if (what == "lemma-3.2") return report_check("product lemma", check_product_lemma());
      if (what == "calcweight") {
        int rc = report_check("calcweight <=", check_calcweight(Direction::le, seed));
        return std::max(rc, report_check("calcweight >=", check_calcweight(Direction::ge, seed + 1)));
      }
      CubicTable t(cubic_fields(g, 1000000), 1000000);
      if (what == "uniformity") return report_check("uniformity", check_uniformity(t));
      return report_check("cubic fit", check_cubic_fit(t));
    } else if (*in) {
      std::ifstream f(file);
      auto rep = ingest_compare(read_ingest_csv(f));
      std::cout << to_json(rep).dump(2) << "\n";
      return rep.ok() ? 0 : kVerifyFailed;
    } else if (*rp) {
      return run_report(g, out);
    }
  } catch (const usage_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const hypothesis_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const bound_error& e) {
    std::cerr << "bound error: " << e.what() << "\n";
    return kBound;
  } catch (const s3a::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerifyFailed;
  }
  return 0;
}
