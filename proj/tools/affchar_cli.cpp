// Batch command-line driver.
//
// One job per process: compute a character family member, expand a character
// in a basis, evaluate branching / Kostka coefficients, query the affine
// orbit, or run a verification suite.  Standard output carries exactly one
// artifact (canonical JSON unless --format says otherwise); progress and
// warnings go to standard error.  Exit codes: 0 success, 1 verification
// failure, 2 usage error, 3 mathematical precondition violation.
//
// Character jobs are cached content-addressed under a directory taken from
// --cache-dir, then AFFCHAR_CACHE_DIR, then ~/.cache/affchar.  Entries embed
// a hash of their q^0 slice; entries that fail the self-check or carry an
// older schema_version are ignored and recomputed.  Writes go through a
// temporary file and an atomic rename, so concurrent processes may share a
// cache directory.

#include "CLI11.hpp"
#include "json.hpp"

#include "affchar/afweight.hpp"
#include "affchar/cartan.hpp"
#include "affchar/charring.hpp"
#include "affchar/demazure.hpp"
#include "affchar/expand.hpp"
#include "affchar/verify.hpp"

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using affchar::Anchor;
using affchar::BasisDesc;
using affchar::Expansion;
using affchar::Family;
using affchar::GradedCharacter;
using affchar::QPoly;
using affchar::RootSystem;
using affchar::Weight;
using affchar::Zint;
using json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Weight parse_weight(const std::string& s, int rank) {
  Weight w{};
  std::stringstream ss(s);
  std::string tok;
  int i = 0;
  while (std::getline(ss, tok, ',')) {
    if (i >= rank) throw UsageError("weight '" + s + "' has more than rank coordinates");
    try {
      size_t used = 0;
      w.c[i] = static_cast<int32_t>(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw UsageError("bad weight coordinate '" + tok + "' in '" + s + "'");
    }
    ++i;
  }
  if (i != rank)
    throw UsageError("weight '" + s + "' needs exactly " + std::to_string(rank) +
                     " comma-separated coordinates");
  return w;
}

json weight_json(const Weight& w, int rank) {
  json a = json::array();
  for (int i = 0; i < rank; ++i) a.push_back(w.c[i]);
  return a;
}

json poly_json(const QPoly& p) {
  json a = json::array();
  for (const auto& [e, c] : p) a.push_back(json::array({e, c.str()}));
  return a;
}

const char* family_name(Family f) {
  switch (f) {
    case Family::Irrep: return "irrep";
    case Family::Thin: return "thin";
    case Family::Weyl: return "weyl";
    case Family::Thick: return "thick";
  }
  return "?";
}

json character_json(const RootSystem& rs, const std::string& family, const Weight& w,
                    long long level, const GradedCharacter& f) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "character";
  j["type"] = std::string(1, rs.type);
  j["rank"] = rs.rank;
  j["family"] = family;
  j["weight"] = weight_json(w, rs.rank);
  j["level"] = level;
  j["truncation"] = f.qmax() ? json(*f.qmax()) : json(nullptr);
  j["anchor"] = f.anchor() == Anchor::Raw ? "raw" : "normalized";
  json terms = json::array();
  for (const auto& [m, z] : f.sorted_terms()) {
    json t;
    t["q"] = m.e;
    t["weight"] = weight_json(affchar::mono_weight(m), rs.rank);
    t["coeff"] = z.str();
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

json expansion_json(const RootSystem& rs, const BasisDesc& basis,
                    const std::optional<int32_t>& qmax,
                    const std::map<Weight, QPoly>& coeffs) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "expansion";
  j["type"] = std::string(1, rs.type);
  j["rank"] = rs.rank;
  json b;
  b["family"] = family_name(basis.family);
  b["level"] = basis.family == Family::Irrep ? 0 : basis.level;
  b["truncation"] = qmax ? json(*qmax) : json(nullptr);
  j["basis"] = std::move(b);
  json cs = json::array();
  for (const auto& [w, p] : coeffs) {
    json c;
    c["weight"] = weight_json(w, rs.rank);
    c["poly"] = poly_json(p);
    cs.push_back(std::move(c));
  }
  j["coeffs"] = std::move(cs);
  return j;
}

// ---- alternative render formats ----------------------------------------

std::string tuple_str(const Weight& w, int rank) {
  std::string s = "(";
  for (int i = 0; i < rank; ++i) s += (i ? "," : "") + std::to_string(w.c[i]);
  return s + ")";
}

std::string latex_poly(const QPoly& p) {
  if (p.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [e, c] : p) {
    Zint a = c;
    bool neg = a.sign() < 0;
    if (neg) a = -a;
    s += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    first = false;
    std::string mag = a.str();
    if (e == 0) {
      s += mag;
    } else {
      if (mag != "1") s += mag;
      s += (e == 1) ? "q" : "q^{" + std::to_string(e) + "}";
    }
  }
  return s;
}

std::string latex_character(const RootSystem& rs, const GradedCharacter& f) {
  if (f.empty()) return "0";
  std::string s;
  if (affchar::is_w_invariant(f) && f.anchor() == Anchor::Normalized) {
    // Per q-degree, decompose the slice into irreducible characters.
    bool first = true;
    for (int32_t e = f.min_exponent(); e <= f.max_exponent(); ++e) {
      for (const auto& [mu, a] : affchar::decompose_slice(rs, f.slice(e))) {
        QPoly p;
        p.emplace(e, a);
        if (!first) s += " + ";
        first = false;
        std::string coeff = latex_poly(p);
        if (coeff != "1") s += (coeff.find(' ') == std::string::npos ? coeff : "(" + coeff + ")") + "\\,";
        s += "\\mathrm{ch}\\,V_{" + tuple_str(mu, rs.rank) + "}";
      }
    }
    return s;
  }
  bool first = true;
  for (const auto& [m, z] : f.sorted_terms()) {
    QPoly p;
    p.emplace(m.e, z);
    if (!first) s += " + ";
    first = false;
    std::string coeff = latex_poly(p);
    if (coeff != "1") s += (coeff.find(' ') == std::string::npos ? coeff : "(" + coeff + ")") + "\\,";
    s += "e^{" + tuple_str(affchar::mono_weight(m), rs.rank) + "}";
  }
  return s;
}

std::string latex_basis_symbol(const BasisDesc& basis, const Weight& w, int rank) {
  std::string sub = "_{" + tuple_str(w, rank) + "}";
  std::string sup = "^{(" + std::to_string(basis.level) + ")}";
  switch (basis.family) {
    case Family::Irrep: return "\\mathrm{ch}\\,V" + sub;
    case Family::Thin: return "\\mathrm{gch}\\,D" + sup + sub;
    case Family::Weyl: return "\\mathrm{gch}\\,W" + sup + sub;
    case Family::Thick: return "\\mathrm{gch}\\,\\mathbb{W}" + sup + sub;
  }
  return "?";
}

std::string latex_expansion(const RootSystem& rs, const BasisDesc& basis,
                            const std::map<Weight, QPoly>& coeffs) {
  if (coeffs.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, p] : coeffs) {
    if (!first) s += " + ";
    first = false;
    std::string coeff = latex_poly(p);
    if (coeff == "1")
      ;
    else if (coeff.find(' ') == std::string::npos)
      s += coeff + "\\,";
    else
      s += "\\left(" + coeff + "\\right)";
    s += latex_basis_symbol(basis, w, rs.rank);
  }
  return s;
}

std::string csv_character(const RootSystem& rs, const GradedCharacter& f) {
  std::ostringstream os;
  os << "q";
  for (int i = 0; i < rs.rank; ++i) os << ",c" << (i + 1);
  os << ",coeff\n";
  for (const auto& [m, z] : f.sorted_terms()) {
    os << m.e;
    Weight w = affchar::mono_weight(m);
    for (int i = 0; i < rs.rank; ++i) os << "," << w.c[i];
    os << "," << z.str() << "\n";
  }
  return os.str();
}

std::string csv_expansion(const RootSystem& rs, const std::map<Weight, QPoly>& coeffs) {
  std::ostringstream os;
  for (int i = 0; i < rs.rank; ++i) os << "c" << (i + 1) << ",";
  os << "q,coeff\n";
  for (const auto& [w, p] : coeffs)
    for (const auto& [e, c] : p) {
      for (int i = 0; i < rs.rank; ++i) os << w.c[i] << ",";
      os << e << "," << c.str() << "\n";
    }
  return os.str();
}

// ---- cache --------------------------------------------------------------

uint64_t fnv64(const std::string& s) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string q0_slice_hash(const json& artifact) {
  std::string acc;
  for (const auto& t : artifact.at("terms")) {
    if (t.at("q").get<int64_t>() != 0) continue;
    for (const auto& c : t.at("weight")) acc += std::to_string(c.get<int64_t>()) + ",";
    acc += t.at("coeff").get<std::string>() + ";";
  }
  std::ostringstream os;
  os << std::hex << fnv64(acc);
  return os.str();
}

std::filesystem::path cache_directory(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("AFFCHAR_CACHE_DIR")) return env;
  if (const char* home = std::getenv("HOME"))
    return std::filesystem::path(home) / ".cache" / "affchar";
  return ".affchar-cache";
}

std::string cache_key(char type, int rank, const std::string& family, const Weight& w,
                      long long level, const std::optional<int32_t>& trunc) {
  std::ostringstream os;
  os << type << "|" << rank << "|" << family << "|";
  for (int i = 0; i < rank; ++i) os << w.c[i] << ",";
  os << "|" << level << "|" << (trunc ? std::to_string(*trunc) : "exact");
  return os.str();
}

std::optional<json> cache_get(const std::filesystem::path& path, const std::string& key) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  json j;
  try {
    in >> j;
    if (j.at("schema_version").get<int>() != kSchemaVersion) return std::nullopt;
    if (j.at("cache_key").get<std::string>() != key) return std::nullopt;
    if (j.at("q0_hash").get<std::string>() != q0_slice_hash(j)) {
      std::cerr << "affchar: cache entry " << path << " failed its self-check; recomputing\n";
      return std::nullopt;
    }
  } catch (const std::exception&) {
    std::cerr << "affchar: cache entry " << path << " is corrupt; recomputing\n";
    return std::nullopt;
  }
  return j;
}

void cache_put(const std::filesystem::path& path, const json& j) {
  std::error_code ec;
  std::filesystem::create_directories(path.parent_path(), ec);
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(static_cast<long long>(::getpid()));
  {
    std::ofstream out(tmp);
    if (!out) {
      std::cerr << "affchar: cannot write cache file " << tmp << "\n";
      return;
    }
    out << j.dump(2) << "\n";
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::cerr << "affchar: cache rename failed: " << ec.message() << "\n";
    std::filesystem::remove(tmp, ec);
  }
}

// ---- job plumbing -------------------------------------------------------

struct CommonOpts {
  std::string type = "A";
  int rank = 1;
  std::string format = "json";
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--type", o.type, "Root system type, A..G")->required();
  cmd->add_option("--rank", o.rank, "Root system rank")->required();
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "latex", "csv"}));
}

const RootSystem& open_root_system(const CommonOpts& o) {
  if (o.type.size() != 1 || o.type[0] < 'A' || o.type[0] > 'G')
    throw UsageError("--type must be a single letter A..G");
  if (o.rank < 1 || o.rank > static_cast<int>(affchar::kMaxRank))
    throw UsageError("--rank must be between 1 and " + std::to_string(affchar::kMaxRank));
  try {
    return affchar::shared_root_system(o.type[0], o.rank);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

Family parse_family(const std::string& s) {
  if (s == "irrep") return Family::Irrep;
  if (s == "thin") return Family::Thin;
  if (s == "weyl") return Family::Weyl;
  if (s == "thick") return Family::Thick;
  throw UsageError("unknown basis family '" + s + "'");
}

GradedCharacter compute_character(const RootSystem& rs, const std::string& family,
                                  const Weight& w, long long level,
                                  const std::optional<int32_t>& trunc) {
  auto need_trunc = [&]() {
    if (!trunc)
      throw UsageError("--family " + family + " produces an infinite series; --trunc is required");
    return *trunc;
  };
  if (family == "thin") {
    GradedCharacter f = affchar::thin_gch(rs, w, level);
    if (trunc) f.truncate(*trunc);
    return f;
  }
  if (family == "weyl") {
    GradedCharacter f = affchar::weyl_gch(rs, w, level);
    if (trunc) f.truncate(*trunc);
    return f;
  }
  if (family == "thick") return affchar::thick_weyl_gch(rs, w, level, need_trunc());
  if (family == "projective") return affchar::projective_gch(rs, w, level, need_trunc());
  if (family == "irrep") {
    if (level == 0) {
      // Level 0 degenerates to the finite-dimensional irreducible.
      GradedCharacter f(rs, 0, Anchor::Normalized);
      for (const auto& [mu, z] : affchar::finite_irrep_char(rs, w)) f.add_term(mu, 0, z);
      if (trunc) f.truncate(*trunc);
      return f;
    }
    return affchar::integrable_gch(rs, affchar::embed(w, level, 0), need_trunc());
  }
  throw UsageError("unknown character family '" + family + "'");
}

void emit(const std::string& s) { std::cout << s; }

int run_char(const CommonOpts& common, const std::string& family, const std::string& weight,
             long long level, std::optional<int32_t> trunc, const std::string& cache_flag,
             bool no_cache) {
  const RootSystem& rs = open_root_system(common);
  Weight w = parse_weight(weight, rs.rank);
  const std::string key = cache_key(rs.type, rs.rank, family, w, level, trunc);
  std::filesystem::path dir = cache_directory(cache_flag);
  std::ostringstream hex;
  hex << std::hex << fnv64(key);
  std::filesystem::path path = dir / ("char-" + hex.str() + ".json");

  json artifact;
  bool from_cache = false;
  if (!no_cache) {
    if (auto hit = cache_get(path, key)) {
      artifact = std::move(*hit);
      from_cache = true;
    }
  }
  if (!from_cache) {
    GradedCharacter f = compute_character(rs, family, w, level, trunc);
    artifact = character_json(rs, family, w, level, f);
    artifact["cache_key"] = key;
    artifact["q0_hash"] = q0_slice_hash(artifact);
    if (!no_cache) cache_put(path, artifact);
  }

  if (common.format == "json") {
    emit(artifact.dump(2) + "\n");
  } else {
    // Re-materialize the character for the renderers.
    GradedCharacter f = compute_character(rs, family, w, level, trunc);
    emit(common.format == "latex" ? latex_character(rs, f) + "\n" : csv_character(rs, f));
  }
  return 0;
}

int emit_expansion(const CommonOpts& common, const RootSystem& rs, const BasisDesc& basis,
                   const std::optional<int32_t>& qmax, const std::map<Weight, QPoly>& coeffs) {
  if (common.format == "json")
    emit(expansion_json(rs, basis, qmax, coeffs).dump(2) + "\n");
  else if (common.format == "latex")
    emit(latex_expansion(rs, basis, coeffs) + "\n");
  else
    emit(csv_expansion(rs, coeffs));
  return 0;
}

int run_expand(const CommonOpts& common, const std::string& family, const std::string& weight,
               long long level, std::optional<int32_t> trunc, const std::string& basis_name,
               long long basis_level, std::optional<int32_t> depth) {
  const RootSystem& rs = open_root_system(common);
  Weight w = parse_weight(weight, rs.rank);
  Family bf = parse_family(basis_name);
  GradedCharacter f = compute_character(rs, family, w, level, trunc);
  Expansion e = (bf == Family::Thin)
                    ? affchar::expand_thin(rs, f, basis_level, depth)
                    : affchar::expand_symmetric(rs, f, BasisDesc{bf, basis_level}, depth);
  return emit_expansion(common, rs, e.basis, e.qmax, e.coeffs);
}

int run_branch(const CommonOpts& common, const std::string& weight, long long level) {
  const RootSystem& rs = open_root_system(common);
  Weight w = parse_weight(weight, rs.rank);
  const Expansion& e = affchar::branching_weyl(rs, w, level);
  return emit_expansion(common, rs, e.basis, e.qmax, e.coeffs);
}

int run_kostka(const CommonOpts& common, const std::vector<std::string>& factor_specs,
               long long level, std::optional<int32_t> depth) {
  const RootSystem& rs = open_root_system(common);
  std::vector<std::pair<long long, Weight>> factors;
  for (const std::string& spec : factor_specs) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
      throw UsageError("factor '" + spec + "' must look like LEVEL:W1,W2,...");
    long long l = 0;
    try {
      l = std::stoll(spec.substr(0, colon));
    } catch (const std::exception&) {
      throw UsageError("bad factor level in '" + spec + "'");
    }
    factors.emplace_back(l, parse_weight(spec.substr(colon + 1), rs.rank));
  }
  auto coeffs = affchar::kostka(rs, factors, level, depth);
  return emit_expansion(common, rs, BasisDesc{Family::Weyl, level + 1}, depth, coeffs);
}

int run_orbit(const CommonOpts& common, const std::string& lambda, const std::string& mu,
              long long level) {
  const RootSystem& rs = open_root_system(common);
  Weight lam = parse_weight(lambda, rs.rank);
  Weight m = parse_weight(mu, rs.rank);
  auto res = affchar::orbit_equiv(rs, lam, m, level);
  json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "orbit";
  j["type"] = std::string(1, rs.type);
  j["rank"] = rs.rank;
  j["level"] = level;
  j["lambda"] = weight_json(lam, rs.rank);
  j["mu"] = weight_json(m, rs.rank);
  j["m"] = res ? json(*res) : json("none");
  emit(j.dump(2) + "\n");
  return 0;
}

int run_verify(const std::string& suite) {
  std::vector<affchar::verify::CheckResult> results;
  try {
    results = affchar::verify::run_suite(suite);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  bool ok = true;
  for (const auto& r : results) {
    std::cout << (r.passed ? "ok   " : "FAIL ") << r.name << " cases=" << r.cases << "\n";
    if (!r.passed) std::cout << "     " << r.details << "\n";
    std::fprintf(stderr, "affchar: %s finished in %.2fs\n", r.name.c_str(), r.seconds);
    ok = ok && r.passed;
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graded characters of twisted affinizations"};
  app.require_subcommand(1);

  CommonOpts c_char, c_expand, c_branch, c_kostka, c_orbit;
  std::string family = "weyl", weight, basis_name = "weyl", lambda, mu, cache_flag, suite = "all";
  std::string x_family = "weyl", x_weight;
  long long level = 1, x_level = 1, basis_level = 1, b_level = 1, k_level = 1, o_level = 1;
  int trunc = -1, x_trunc = -1, depth = -1, k_depth = -1;
  bool no_cache = false;
  std::vector<std::string> factor_specs;

  CLI::App* cmd_char = app.add_subcommand("char", "Compute one character family member");
  add_common(cmd_char, c_char);
  cmd_char->add_option("--family", family, "thin|weyl|thick|irrep|projective")->required();
  cmd_char->add_option("--weight", weight, "Fundamental-weight coordinates, comma-separated")
      ->required();
  cmd_char->add_option("--level", level, "Level of the family")->required();
  cmd_char->add_option("--trunc", trunc, "Truncate the q-adic series at this degree");
  cmd_char->add_option("--cache-dir", cache_flag, "Cache directory override");
  cmd_char->add_flag("--no-cache", no_cache, "Skip the artifact cache");

  CLI::App* cmd_expand = app.add_subcommand("expand", "Expand a character in a basis");
  add_common(cmd_expand, c_expand);
  cmd_expand->add_option("--family", x_family, "Input family")->required();
  cmd_expand->add_option("--weight", x_weight, "Input weight")->required();
  cmd_expand->add_option("--level", x_level, "Input level")->required();
  cmd_expand->add_option("--trunc", x_trunc, "Input truncation degree");
  cmd_expand->add_option("--basis", basis_name, "irrep|thin|weyl|thick")->required();
  cmd_expand->add_option("--basis-level", basis_level, "Basis level")->required();
  cmd_expand->add_option("--depth", depth, "Expansion depth (omit for exact)");

  CLI::App* cmd_branch =
      app.add_subcommand("branch", "Branch a local Weyl character one level up");
  add_common(cmd_branch, c_branch);
  cmd_branch->add_option("--weight", weight, "Dominant weight")->required();
  cmd_branch->add_option("--level", b_level, "Level of the branched character")->required();

  CLI::App* cmd_kostka =
      app.add_subcommand("kostka", "Level-restricted Kostka coefficient map");
  add_common(cmd_kostka, c_kostka);
  cmd_kostka
      ->add_option("--factor", factor_specs, "Factor LEVEL:W1,W2,... (repeatable)")
      ->required();
  cmd_kostka->add_option("--level", k_level, "Restriction level k")->required();
  cmd_kostka->add_option("--depth", k_depth, "Expansion depth (omit for exact)");

  CLI::App* cmd_orbit = app.add_subcommand("orbit", "Affine orbit delta-drop query");
  add_common(cmd_orbit, c_orbit);
  cmd_orbit->add_option("--lambda", lambda, "Dominant weight lambda")->required();
  cmd_orbit->add_option("--mu", mu, "Weight mu")->required();
  cmd_orbit->add_option("--level", o_level, "Level")->required();

  CLI::App* cmd_verify = app.add_subcommand("verify", "Run a verification suite");
  cmd_verify->add_option("--suite", suite, "Suite name or 'all'");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  affchar::progress_sink = [](const std::string& s) { std::cerr << "affchar: " << s << "\n"; };
  auto opt = [](int v) {
    return v >= 0 ? std::optional<int32_t>(v) : std::nullopt;
  };

  try {
    if (cmd_char->parsed())
      return run_char(c_char, family, weight, level, opt(trunc), cache_flag, no_cache);
    if (cmd_expand->parsed())
      return run_expand(c_expand, x_family, x_weight, x_level, opt(x_trunc), basis_name,
                        basis_level, opt(depth));
    if (cmd_branch->parsed()) return run_branch(c_branch, weight, b_level);
    if (cmd_kostka->parsed()) return run_kostka(c_kostka, factor_specs, k_level, opt(k_depth));
    if (cmd_orbit->parsed()) return run_orbit(c_orbit, lambda, mu, o_level);
    if (cmd_verify->parsed()) return run_verify(suite);
  } catch (const UsageError& e) {
    std::cerr << "affchar: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "affchar: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
