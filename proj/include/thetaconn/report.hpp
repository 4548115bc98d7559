#pragma once

// Job descriptions and report documents for the command-line front end.
// Reports are deterministic: identical jobs (including seeds) produce
// byte-identical output except for the timing field. Every number is exact;
// rationals serialize as "p/q" strings.

#include "thetaconn/connection.hpp"

#include <json.hpp>

#include <chrono>
#include <fstream>
#include <sstream>

namespace thetaconn {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kReportSchema = 1;

using Json = nlohmann::ordered_json;

struct JobSpec {
  char series = 'A';
  int rank = 1;
  std::vector<int> sigma_perm;  // 0-based images; empty means identity
  std::vector<long> kac;
  bool sampled = true;
  Predicate predicate = Predicate::Stable;
  std::uint64_t seed = 1;
  std::vector<Rat> vector_coords;  // g_1-basis coordinates when not sampled
  long truncation = 0;             // 0: default 4m
  std::string format = "json";

  std::string type_name() const { return std::string(1, series) + std::to_string(rank); }

  std::string sigma_name() const {
    if (sigma_perm.empty()) return "id";
    bool id = true;
    for (size_t i = 0; i < sigma_perm.size(); ++i)
      if (sigma_perm[i] != static_cast<int>(i)) id = false;
    if (id) return "id";
    std::string s;
    for (size_t i = 0; i < sigma_perm.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(sigma_perm[i] + 1);  // 1-based on the wire
    }
    return s;
  }

  /// Key-value config serialization; parse/serialize round-trips unchanged.
  std::string to_config() const {
    std::ostringstream os;
    os << "type = " << series << "\n";
    os << "rank = " << rank << "\n";
    os << "sigma = " << sigma_name() << "\n";
    os << "kac = ";
    for (size_t i = 0; i < kac.size(); ++i) os << (i ? "," : "") << kac[i];
    os << "\n";
    if (sampled) {
      os << "sample = " << predicate_name(predicate) << "\n";
      os << "seed = " << seed << "\n";
    } else {
      os << "vector = ";
      for (size_t i = 0; i < vector_coords.size(); ++i) os << (i ? "," : "") << rat_to_string(vector_coords[i]);
      os << "\n";
    }
    os << "truncation = " << truncation << "\n";
    os << "format = " << format << "\n";
    return os.str();
  }

  static JobSpec from_kv(const std::map<std::string, std::string>& kv);
  static JobSpec from_config_file(const std::string& path);
};

namespace detail {

inline std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!trim(cur).empty() || !out.empty()) out.push_back(trim(cur));
  return out;
}

}  // namespace detail

inline JobSpec JobSpec::from_kv(const std::map<std::string, std::string>& kv) {
  JobSpec j;
  auto need = [&](const std::string& k) {
    auto it = kv.find(k);
    if (it == kv.end()) throw InputError("missing config key: " + k);
    return it->second;
  };
  std::string type = need("type");
  if (type.size() == 1) {
    j.series = type[0];
    j.rank = std::stoi(need("rank"));
  } else {
    j.series = type[0];
    j.rank = std::stoi(type.substr(1));
    if (kv.count("rank")) j.rank = std::stoi(kv.at("rank"));
  }
  if (kv.count("sigma") && kv.at("sigma") != "id") {
    for (const std::string& p : detail::split(kv.at("sigma"), ','))
      j.sigma_perm.push_back(std::stoi(p) - 1);
  }
  for (const std::string& p : detail::split(need("kac"), ',')) j.kac.push_back(std::stol(p));
  if (kv.count("vector")) {
    j.sampled = false;
    for (const std::string& p : detail::split(kv.at("vector"), ',')) j.vector_coords.push_back(rat_from_string(p));
  } else {
    j.sampled = true;
    j.predicate = predicate_from_name(kv.count("sample") ? kv.at("sample") : "stable");
    if (kv.count("seed")) j.seed = std::stoull(kv.at("seed"));
  }
  if (kv.count("truncation")) j.truncation = std::stol(kv.at("truncation"));
  if (kv.count("format")) {
    j.format = kv.at("format");
    if (j.format != "json" && j.format != "text") throw InputError("format must be json or text");
  }
  return j;
}

inline JobSpec JobSpec::from_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open config file: " + path);
  std::map<std::string, std::string> kv;
  std::string line;
  while (std::getline(in, line)) {
    std::string t = detail::trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto eq = t.find('=');
    if (eq == std::string::npos) throw InputError("malformed config line: " + line);
    kv[detail::trim(t.substr(0, eq))] = detail::trim(t.substr(eq + 1));
  }
  return from_kv(kv);
}

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string counterexample;  // reproducer payload on failure
};

/// Everything cmd_analyze / cmd_examples emit for one job.
struct ReportDocument {
  JobSpec job;
  std::shared_ptr<const GradedDecomposition> grading;
  std::vector<long> sampled_coords;     // integer draws when sampled
  std::vector<Rat> explicit_coords;     // as given when explicit
  CycVec x;
  bool rss = false, semisimple = false, stable = false;
  std::map<long, CycVec> connection_terms;  // j -> P_j
  LocalReport local;
  std::vector<CheckResult> checks;
  long timing_ms = 0;

  Json to_json() const;
  std::string to_text() const;
};

inline std::string cyc_vec_to_string(const CycVec& v) {
  std::string s = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].to_string();
  }
  return s + "]";
}

inline Json cyc_vec_to_json(const CycVec& v) {
  Json a = Json::array();
  for (const Cyc& c : v) a.push_back(c.to_string());
  return a;
}

/// Basis labels: H1..Hl for the Cartan part, E[root coordinates] above.
inline std::string basis_label(const ChevalleyAlgebra& alg, size_t idx) {
  if (static_cast<int>(idx) < alg.rs.rank) return "H" + std::to_string(idx + 1);
  const RootVec& r = alg.rs.roots[idx - static_cast<size_t>(alg.rs.rank)];
  std::string s = "E[";
  for (size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r[i]);
  return s + "]";
}

inline std::string vector_display(const ChevalleyAlgebra& alg, const CycVec& v) {
  std::string s;
  bool first = true;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] == Cyc(0)) continue;
    if (!first) s += " + ";
    s += v[i].to_string() + "*" + basis_label(alg, i);
    first = false;
  }
  return first ? "0" : s;
}

/// Human-readable display of the one-form, e.g. "d + (...)/t dt + (...) dt".
inline std::string connection_form_string(const ChevalleyAlgebra& alg, const std::map<long, CycVec>& terms) {
  std::string s = "d";
  for (const auto& [j, v] : terms) {
    s += " + (" + vector_display(alg, v) + ")";
    if (j == 0)
      s += "/t dt";
    else if (j == 1)
      s += " dt";
    else
      s += " t^" + std::to_string(j - 1) + " dt";
  }
  return s;
}

inline Json ReportDocument::to_json() const {
  const GradedDecomposition& g = *grading;
  Json out;
  out["schema"] = kReportSchema;
  out["tool"] = "thetaconn";
  out["version"] = kToolVersion;

  Json jjob;
  jjob["type"] = job.type_name();
  jjob["sigma"] = job.sigma_name();
  jjob["kac"] = job.kac;
  Json jvec;
  if (job.sampled) {
    jvec["source"] = "sampled";
    jvec["predicate"] = predicate_name(job.predicate);
    jvec["seed"] = job.seed;
  } else {
    jvec["source"] = "explicit";
    Json coords = Json::array();
    for (const Rat& r : job.vector_coords) coords.push_back(rat_to_string(r));
    jvec["coords"] = coords;
  }
  jjob["vector"] = jvec;
  jjob["truncation"] = local.truncation;
  out["job"] = jjob;

  out["scalar_field"] = g.conductor <= 2 ? std::string("Q") : "Q(zeta_" + std::to_string(g.conductor) + ")";

  Json jg;
  jg["m"] = g.m;
  jg["e"] = g.e;
  jg["s0"] = g.s0;
  jg["dim_g"] = g.dim();
  Json dims = Json::array();
  for (const auto& s : g.g_i) dims.push_back(s.dim());
  jg["dims_g_i"] = dims;
  Json pieces = Json::array();
  for (const auto& [ik, piece] : g.g_i_k) {
    Json p;
    p["i"] = ik.first;
    p["k"] = ik.second;
    p["dim"] = piece.dim();
    pieces.push_back(p);
  }
  jg["pieces"] = pieces;
  Json lam = Json::array();
  for (const Rat& r : g.kc.lambda_check) lam.push_back(rat_to_string(r));
  jg["lambda_check"] = lam;
  out["grading"] = jg;

  Json jx;
  Json g1c = Json::array();
  if (job.sampled)
    for (long c : sampled_coords) g1c.push_back(std::to_string(c));
  else
    for (const Rat& r : explicit_coords) g1c.push_back(rat_to_string(r));
  jx["g1_coords"] = g1c;
  jx["ambient"] = cyc_vec_to_json(x);
  jx["regular_semisimple"] = rss;
  jx["semisimple"] = semisimple;
  jx["stable"] = stable;
  out["vector"] = jx;

  Json jc;
  Json terms = Json::array();
  for (const auto& [j, v] : connection_terms) {
    Json t;
    t["t_exponent"] = j;
    t["coefficient"] = cyc_vec_to_json(v);
    terms.push_back(t);
  }
  jc["terms"] = terms;
  jc["form"] = connection_form_string(*grading->alg, connection_terms);
  out["connection"] = jc;

  Json jl;
  jl["residue"] = cyc_vec_to_json(local.residue);
  jl["residue_nilpotent"] = local.residue_nilpotent;
  jl["residue_is_zero"] = vec_is_zero(local.residue);
  Json jp;
  jp["weighted_labels"] = local.predicted_orbit.weighted_labels;
  jp["expected_centralizer_dim"] = local.predicted_orbit.expected_centralizer_dim;
  jp["distinguished"] = local.predicted_orbit.distinguished;
  jp["stable_verified"] = local.predicted_orbit.stable_verified;
  jl["predicted_orbit"] = jp;
  Json jo;
  jo["dim_centralizer_sigma_x1"] = local.orbit_checks.dim_centralizer_sigma_x1;
  jo["dim_g0_sigma"] = local.orbit_checks.dim_g0_sigma;
  jo["dim_bracket_g0_x1"] = local.orbit_checks.dim_bracket_g0_x1;
  jo["dim_g1_sigma"] = local.orbit_checks.dim_g1_sigma;
  jo["centralizer_match"] = local.orbit_checks.centralizer_match;
  jo["orbit_dim_match"] = local.orbit_checks.orbit_dim_match;
  jl["orbit_checks"] = jo;
  jl["slope"] = local.slope ? Json(rat_to_string(*local.slope)) : Json(nullptr);
  jl["irregularity"] = local.irregularity ? Json(rat_to_string(*local.irregularity)) : Json(nullptr);
  jl["h0_zero"] = local.h0_zero;
  jl["h0_infinity"] = local.h0_infinity;
  jl["h1"] = local.h1 ? Json(*local.h1) : Json(nullptr);
  jl["euler_characteristic"] = local.euler ? Json(*local.euler) : Json(nullptr);
  jl["rigid"] = local.verdict.rigid ? Json(*local.verdict.rigid) : Json(nullptr);
  Json jf;
  jf["regular_semisimple"] = local.verdict.rss;
  jf["stable"] = local.verdict.stable;
  jf["s0_is_1"] = local.verdict.s0_is_1;
  jl["flags"] = jf;
  jl["truncation"] = local.truncation;
  jl["h0_stable_under_doubling"] = local.h0_stable_under_doubling;
  out["local"] = jl;

  Json jck = Json::array();
  for (const CheckResult& c : checks) {
    Json e;
    e["name"] = c.name;
    e["pass"] = c.pass;
    if (!c.pass) e["counterexample"] = c.counterexample;
    jck.push_back(e);
  }
  out["invariants"] = jck;
  out["timing_ms"] = timing_ms;
  return out;
}

inline std::string ReportDocument::to_text() const {
  const GradedDecomposition& g = *grading;
  std::ostringstream os;
  auto line = [&](const std::string& k, const std::string& v) {
    os << "  " << k;
    for (size_t i = k.size(); i < 28; ++i) os << ' ';
    os << v << "\n";
  };
  os << "theta-connection report (" << job.type_name() << ", sigma=" << job.sigma_name() << ")\n";
  std::string kacs;
  for (size_t i = 0; i < job.kac.size(); ++i) kacs += (i ? "," : "") + std::to_string(job.kac[i]);
  line("kac coordinates", kacs);
  line("order m", std::to_string(g.m));
  line("sigma order e", std::to_string(g.e));
  line("scalar field", g.conductor <= 2 ? std::string("Q") : "Q(zeta_" + std::to_string(g.conductor) + ")");
  std::string dims;
  for (size_t i = 0; i < g.g_i.size(); ++i) dims += (i ? " " : "") + std::to_string(g.g_i[i].dim());
  line("dims g_i", dims);
  if (job.sampled) {
    line("vector", "sampled(" + predicate_name(job.predicate) + ", seed " + std::to_string(job.seed) + ")");
  } else {
    line("vector", "explicit");
  }
  line("regular semisimple", rss ? "yes" : "no");
  line("semisimple", semisimple ? "yes" : "no");
  line("stable", stable ? "yes" : "no");
  line("connection", connection_form_string(*grading->alg, connection_terms));
  line("residue", vector_display(*grading->alg, local.residue));
  line("residue nilpotent", local.residue_nilpotent ? "yes" : "no");
  std::string labels;
  for (size_t i = 0; i < local.predicted_orbit.weighted_labels.size(); ++i)
    labels += (i ? "," : "") + std::to_string(local.predicted_orbit.weighted_labels[i]);
  line("predicted orbit labels", labels);
  line("orbit evidence dims",
       "(" + std::to_string(local.orbit_checks.dim_centralizer_sigma_x1) + "," +
           std::to_string(local.orbit_checks.dim_g0_sigma) + "," +
           std::to_string(local.orbit_checks.dim_bracket_g0_x1) + "," +
           std::to_string(local.orbit_checks.dim_g1_sigma) + ")");
  line("slope", local.slope ? rat_to_string(*local.slope) : "inapplicable");
  line("irregularity", local.irregularity ? rat_to_string(*local.irregularity) : "inapplicable");
  line("h0 at 0 (truncated)", std::to_string(local.h0_zero));
  line("h0 at infinity (truncated)", std::to_string(local.h0_infinity));
  line("h1", local.h1 ? std::to_string(*local.h1) : "inapplicable");
  line("euler characteristic", local.euler ? std::to_string(*local.euler) : "inapplicable");
  line("cohomologically rigid", local.verdict.rigid ? (*local.verdict.rigid ? "yes" : "no") : "undetermined");
  line("truncation", std::to_string(local.truncation));
  size_t passed = 0;
  for (const auto& c : checks)
    if (c.pass) ++passed;
  line("invariant checks", std::to_string(passed) + "/" + std::to_string(checks.size()) + " passed");
  for (const auto& c : checks)
    if (!c.pass) line("  FAILED", c.name + " [" + c.counterexample + "]");
  line("timing_ms", std::to_string(timing_ms));
  return os.str();
}

// ---------------------------------------------------------------------------
// Job execution
// ---------------------------------------------------------------------------

inline std::shared_ptr<const GradedDecomposition> build_grading(const JobSpec& job) {
  auto alg = std::make_shared<const ChevalleyAlgebra>(ChevalleyAlgebra::build(job.series, job.rank));
  DiagramAutomorphism sigma = job.sigma_perm.empty() ? DiagramAutomorphism::identity(alg)
                                                     : DiagramAutomorphism::pinned(alg, job.sigma_perm);
  KacCoordinates kc = KacCoordinates::build(sigma, job.kac);
  return std::make_shared<const GradedDecomposition>(GradedDecomposition::build(kc));
}

inline CycVec job_vector(const JobSpec& job, const GradedDecomposition& g, std::vector<long>* sampled_coords) {
  if (job.sampled) return g.sample_vector(job.predicate, job.seed, sampled_coords);
  if (job.vector_coords.size() != g.g1_basis.size())
    throw InputError("vector has " + std::to_string(job.vector_coords.size()) + " coordinates; g_1 has dimension " +
                     std::to_string(g.g1_basis.size()));
  CycVec x(g.dim(), Cyc(0));
  for (size_t i = 0; i < g.g1_basis.size(); ++i) {
    if (job.vector_coords[i] == 0) continue;
    x = vec_add(x, vec_scale(g.g1_basis[i], Cyc(job.vector_coords[i], g.conductor)));
  }
  return x;
}

inline ReportDocument run_analysis(const JobSpec& job) {
  auto t0 = std::chrono::steady_clock::now();
  ReportDocument doc;
  doc.job = job;
  doc.grading = build_grading(job);
  const GradedDecomposition& g = *doc.grading;
  doc.x = job_vector(job, g, &doc.sampled_coords);
  doc.explicit_coords = job.vector_coords;
  doc.rss = g.is_regular_semisimple(doc.x);
  doc.semisimple = g.is_semisimple(doc.x);
  doc.stable = doc.rss ? g.is_stable(doc.x) : false;
  ThetaConnection conn = ThetaConnection::build(doc.grading, doc.x);
  doc.connection_terms = conn.terms;
  doc.local = local_report(g, conn, job.truncation);
  doc.checks.push_back({"construction-assertions", true, ""});
  auto t1 = std::chrono::steady_clock::now();
  doc.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  return doc;
}

}  // namespace thetaconn
