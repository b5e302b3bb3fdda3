#ifndef S3A_IO_HPP
#define S3A_IO_HPP

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "abelian_enum.hpp"
#include "core.hpp"
#include "cubic_enum.hpp"
#include "euler_constants.hpp"
#include "exponent_calculus.hpp"
#include "sieve_engine.hpp"

namespace s3a {

using json = nlohmann::ordered_json;

// ---- cache: {dir}/{kind}/{hash}.bin plus {dir}/manifest.json

inline std::string params_hash(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream o;
  o << std::hex << h;
  return o.str();
}

class Cache {
 public:
  explicit Cache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  std::filesystem::path path_for(const std::string& kind, const std::string& params) const {
    return dir_ / kind / (params_hash(params) + ".bin");
  }

  bool load_cubic(std::uint64_t X, std::vector<CubicField>& out) const {
    std::ifstream in(path_for("cubic", params("cubic", X)), std::ios::binary);
    if (!in) return false;
    char magic[4];
    std::uint64_t x = 0, n = 0;
    in.read(magic, 4);
    in.read(reinterpret_cast<char*>(&x), 8);
    in.read(reinterpret_cast<char*>(&n), 8);
    if (!in || std::string(magic, 4) != "S3AC" || x != X) return false;
    out.resize(n);
    for (auto& f : out) {
      std::int64_t v[5];
      char cyc = 0;
      in.read(reinterpret_cast<char*>(v), sizeof v);
      in.read(&cyc, 1);
      f.form = {v[0], v[1], v[2], v[3]};
      f.disc = v[4];
      f.cyclic = cyc != 0;
    }
    return static_cast<bool>(in);
  }

  void store_cubic(std::uint64_t X, const std::vector<CubicField>& fields) const {
    auto p = path_for("cubic", params("cubic", X));
    std::filesystem::create_directories(p.parent_path());
    std::ofstream o(p, std::ios::binary);
    std::uint64_t n = fields.size();
    o.write("S3AC", 4);
    o.write(reinterpret_cast<const char*>(&X), 8);
    o.write(reinterpret_cast<const char*>(&n), 8);
    for (const auto& f : fields) {
      std::int64_t v[5] = {f.form.a, f.form.b, f.form.c, f.form.d, f.disc};
      char cyc = f.cyclic;
      o.write(reinterpret_cast<const char*>(v), sizeof v);
      o.write(&cyc, 1);
    }
    note("cubic", params("cubic", X), p, n);
  }

  std::vector<CubicField> cubic(std::uint64_t X, const CubicEnumOptions& opt = {}) const {
    std::vector<CubicField> f;
    if (load_cubic(X, f)) return f;
    f = enumerate_cubic_raw(X, opt);
    store_cubic(X, f);
    return f;
  }

 private:
  static std::string params(const std::string& kind, std::uint64_t X) { return kind + ":X=" + std::to_string(X); }

  void note(const std::string& kind, const std::string& params, const std::filesystem::path& file, std::uint64_t n) const {
    auto mp = dir_ / "manifest.json";
    json m = json::object();
    if (std::ifstream in(mp); in) {
      try { in >> m; } catch (const json::exception&) { m = json::object(); }
    }
    m[std::filesystem::relative(file, dir_).string()] = {{"kind", kind}, {"params", params}, {"records", n}};
    std::ofstream(mp) << m.dump(2) << "\n";
  }

  std::filesystem::path dir_;
};

// ---- CSV

inline std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (char c : line) {
    if (c == '"') quoted = !quoted;
    else if (c == ',' && !quoted) {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') cur += c;
  }
  out.push_back(cur);
  for (auto& s : out) {
    auto b = s.find_first_not_of(' '), e = s.find_last_not_of(' ');
    s = b == std::string::npos ? "" : s.substr(b, e - b + 1);
  }
  return out;
}

inline void write_cubic_csv(std::ostream& o, const std::vector<CubicField>& fields) {
  o << "disc,a,b,c,d,galois\n";
  for (const auto& f : fields)
    o << f.disc << "," << f.form.a << "," << f.form.b << "," << f.form.c << "," << f.form.d << ","
      << (f.cyclic ? "C3" : "S3") << "\n";
}

inline void write_abelian_csv(std::ostream& o, const std::vector<ConductorRecord>& cs) {
  o << "ell,conductor,disc,num_fields,wild\n";
  for (const auto& c : cs) o << c.ell << "," << c.conductor << "," << c.disc << "," << c.num_fields << "," << c.wild << "\n";
}

// ---- ingest

struct IngestRow {
  std::string label;
  int degree = 0;
  BigInt disc;
  std::string galois;
};

struct IngestDiff {
  BigInt disc;
  std::string galois;
  std::uint64_t theirs = 0, ours = 0;
};

struct IngestReport {
  std::size_t rows = 0;
  std::size_t compared = 0;
  std::size_t skipped = 0;  // degree or range we do not enumerate
  std::vector<IngestDiff> diffs;
  std::vector<std::string> rejected;  // labels of rows with no matching field
  std::size_t unlisted = 0;           // our discriminants in range that the file lacks
  bool ok() const { return diffs.empty(); }
};

inline std::vector<IngestRow> read_ingest_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw usage_error("empty ingest file");
  auto head = split_csv(line);
  std::map<std::string, std::size_t> col;
  for (std::size_t i = 0; i < head.size(); ++i) col[head[i]] = i;
  for (const char* k : {"label", "degree", "disc", "galois_label"})
    if (!col.count(k)) throw usage_error(std::string("ingest file lacks column ") + k);
  std::vector<IngestRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto f = split_csv(line);
    if (f.size() < head.size()) throw usage_error("short row: " + line);
    IngestRow r;
    r.label = f[col["label"]];
    try {
      r.degree = std::stoi(f[col["degree"]]);
      r.disc = parse_bigint(f[col["disc"]]);
    } catch (const std::exception&) {
      throw usage_error("bad row: " + line);
    }
    r.galois = f[col["galois_label"]];
    rows.push_back(r);
  }
  return rows;
}

// Galois class of a row in our vocabulary, or "" when we do not enumerate it.
inline std::string ingest_class(const IngestRow& r) {
  const std::string& g = r.galois;
  if (r.degree == 3) {
    if (g == "3T1" || g == "C3") return "C3";
    if (g == "3T2" || g == "S3") return "S3";
    return "";
  }
  if (r.degree >= 5 && is_prime_u64(static_cast<std::uint64_t>(r.degree)) &&
      (g == std::to_string(r.degree) + "T1" || g == "C" + std::to_string(r.degree)))
    return "C" + std::to_string(r.degree);
  return "";
}

inline IngestReport ingest_compare(const std::vector<IngestRow>& rows, std::uint64_t cubic_cap = 5000000,
                                   std::uint64_t conductor_cap = 100000000) {
  IngestReport rep;
  rep.rows = rows.size();
  std::map<std::string, std::map<BigInt, std::uint64_t>> theirs;
  std::map<std::string, BigInt> top;
  for (const auto& r : rows) {
    std::string c = ingest_class(r);
    if (c.empty() || (r.degree == 3 && abs(r.disc) > cubic_cap)) {
      ++rep.skipped;
      continue;
    }
    ++theirs[c][r.disc];
    BigInt a = abs(r.disc);
    if (!top.count(c) || top[c] < a) top[c] = a;
    ++rep.compared;
  }
  for (auto& [c, t] : theirs) {
    std::map<BigInt, std::uint64_t> ours;
    if (c == "S3" || c == "C3") {
      for (const auto& f : enumerate_cubic_raw(top[c].convert_to<std::uint64_t>()))
        if ((f.cyclic ? "C3" : "S3") == c) ++ours[BigInt(f.disc)];
    } else {
      int ell = std::stoi(c.substr(1));
      for (const auto& k : enumerate_conductors(ell, top[c], conductor_cap)) ours[k.disc] += k.num_fields;
    }
    for (auto& [d, n] : t) {
      std::uint64_t o = ours.count(d) ? ours.at(d) : 0;
      if (n != o) rep.diffs.push_back({d, c, n, o});
    }
    for (auto& [d, n] : ours)
      if (!t.count(d)) ++rep.unlisted;
  }
  for (const auto& r : rows) {
    std::string c = ingest_class(r);
    if (c.empty()) continue;
    for (const auto& d : rep.diffs)
      if (d.galois == c && d.disc == r.disc && d.theirs > d.ours) rep.rejected.push_back(r.label);
  }
  return rep;
}

// ---- JSON

inline json to_json(const IngestReport& r) {
  json j = {{"rows", r.rows}, {"compared", r.compared}, {"skipped", r.skipped}, {"unlisted", r.unlisted}, {"ok", r.ok()}};
  j["diffs"] = json::array();
  for (const auto& d : r.diffs)
    j["diffs"].push_back({{"disc", d.disc.str()}, {"galois", d.galois}, {"theirs", d.theirs}, {"ours", d.ours}});
  j["rejected"] = r.rejected;
  return j;
}

inline json to_json(const Assembly& a, const AbelianGroupSpec& A, const std::string& mode) {
  json j = {{"X", a.X.str()}, {"A", A.label()}, {"mode", mode}, {"G", a.G.str()}};
  j["per_rho"] = json::array();
  for (const auto& t : a.terms)
    j["per_rho"].push_back({{"rho", to_string(t.rho)}, {"L_rho", t.L.str()}, {"count", t.count.str()}});
  return j;
}

inline json to_json(const FinalConstants& f) {
  json w = json::object();
  auto one = [&](Term t) {
    json a = json::array();
    for (const auto& s : wild_summands(f.ell, t))
      a.push_back({{"sigma", to_string(s.sigma)}, {"lambda", s.lambda_ramified ? "conductor l^2" : "unramified"},
                   {"e", s.e}, {"value", static_cast<double>(s.value())}});
    return a;
  };
  w["c_l"] = static_cast<double>(f.raw1.wild);
  w["d_l"] = static_cast<double>(f.raw2.wild);
  w["main"] = one(Term::main);
  w["secondary"] = one(Term::secondary);
  return {{"ell", f.ell},
          {"P", f.P},
          {"C1", static_cast<double>(f.C1)},
          {"C2", static_cast<double>(f.C2)},
          {"calC1", static_cast<double>(f.raw1.value)},
          {"calC2", static_cast<double>(f.raw2.value)},
          {"truncation_bound", static_cast<double>(f.truncation_bound)},
          {"wild_factors", w}};
}

inline json to_json(const ExponentProfile& P) {
  json j = {{"A", P.A.label()},        {"m", P.A.m()},        {"p_min", P.A.p_min()},
            {"a", to_string(P.a)},     {"b", to_string(P.b)}, {"a_beta_gamma", to_string(P.a_beta_gamma)},
            {"U1", to_string(P.U1)},   {"U2", to_string(P.U2)}, {"V1", to_string(P.V1)},
            {"V2", to_string(P.V2)},   {"Q_exponent", to_string(P.q_exponent)}};
  j["cells"] = json::array();
  for (const auto& c : P.cells)
    j["cells"].push_back({{"i", c.i},
                          {"order", c.order},
                          {"ind_b", c.ind_b},
                          {"pair_index", c.pair_idx},
                          {"e", to_string(c.e)},
                          {"d", to_string(c.d)},
                          {"delta", to_string(c.delta)}});
  return j;
}

inline json to_json(const InequalityReport& r) {
  return {{"secondaryTerm", r.secondaryTerm},
          {"powerSaving", r.powerSaving},
          {"all_delta_positive", r.all_delta_positive},
          {"error_exponent", to_string(r.error_exponent)},
          {"secondary_slack", to_string(r.secondary_slack)},
          {"main_slack", to_string(r.main_slack)}};
}

inline json to_json(const ProductLemmaReport& r) {
  json j = {{"bound_constant", static_cast<double>(r.bound_constant)},
            {"bound_holds", r.bound_holds},
            {"hypotheses_hold", r.hypotheses_hold},
            {"last_decade_variation", static_cast<double>(r.last_decade_variation)}};
  j["rows"] = json::array();
  for (const auto& row : r.rows)
    j["rows"].push_back({{"X", row.X}, {"P", row.P}, {"bound", static_cast<double>(row.bound)}, {"ratio", static_cast<double>(row.ratio)}});
  return j;
}

}  // namespace s3a

#endif
