// Command-line front end: analyze one grading/vector pair, run verification
// suites, reproduce the built-in examples, or list them.
//
// Exit codes: 0 success (regardless of mathematical verdict), 1 property
// failure in `verify`, 2 bad input, 3 internal invariant violation.

#include "thetaconn/catalog.hpp"
#include "thetaconn/verify.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <future>
#include <iostream>

namespace fs = std::filesystem;
using namespace thetaconn;

namespace {

struct CommonFlags {
  std::string type;
  int rank = 0;
  std::string sigma = "id";
  std::string kac;
  std::string vector_csv;
  std::string sample;
  std::uint64_t seed = 1;
  long truncation = 0;
  std::string format = "json";
  std::string out_path;
  std::string config;
};

void add_jobspec_flags(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--type", f.type, "simple type, e.g. G2 or A (with --rank)");
  cmd->add_option("--rank", f.rank, "rank when --type is a bare series letter");
  cmd->add_option("--sigma", f.sigma, "diagram symmetry: 'id' or 1-based images, e.g. 3,2,1");
  cmd->add_option("--kac", f.kac, "Kac coordinates s_0,...,s_l as csv");
  cmd->add_option("--vector", f.vector_csv, "explicit g_1 coordinates (csv of rationals)");
  cmd->add_option("--sample", f.sample, "sampling predicate: any|regular-semisimple|stable");
  cmd->add_option("--seed", f.seed, "sampler seed");
  cmd->add_option("--truncation", f.truncation, "series truncation (default 4m)");
  cmd->add_option("--format", f.format, "json|text");
  cmd->add_option("--out", f.out_path, "write the report here instead of stdout");
  cmd->add_option("--config", f.config, "read the job from a key-value config file");
}

JobSpec jobspec_from_flags(const CommonFlags& f) {
  if (!f.config.empty()) {
    JobSpec j = JobSpec::from_config_file(f.config);
    if (f.truncation > 0) j.truncation = f.truncation;
    return j;
  }
  std::map<std::string, std::string> kv;
  if (f.type.empty()) throw InputError("--type is required (or use --config)");
  kv["type"] = f.type;
  if (f.rank > 0) kv["rank"] = std::to_string(f.rank);
  kv["sigma"] = f.sigma;
  if (f.kac.empty()) throw InputError("--kac is required");
  kv["kac"] = f.kac;
  if (!f.vector_csv.empty() && !f.sample.empty())
    throw InputError("--vector and --sample are mutually exclusive");
  if (!f.vector_csv.empty())
    kv["vector"] = f.vector_csv;
  else
    kv["sample"] = f.sample.empty() ? "stable" : f.sample;
  kv["seed"] = std::to_string(f.seed);
  kv["truncation"] = std::to_string(f.truncation);
  kv["format"] = f.format;
  return JobSpec::from_kv(kv);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw InputError("cannot write to " + out_path);
  out << text;
  if (!text.empty() && text.back() != '\n') out << "\n";
}

void emit_report(const ReportDocument& doc, const std::string& format, const std::string& out_path) {
  if (format == "text")
    emit(doc.to_text(), out_path);
  else
    emit(doc.to_json().dump(2), out_path);
}

int run_batch(const std::string& dir, const std::string& out_path) {
  std::vector<std::string> files;
  for (const auto& ent : fs::directory_iterator(dir))
    if (ent.is_regular_file()) files.push_back(ent.path().string());
  std::sort(files.begin(), files.end());
  struct Item {
    std::string file;
    std::string status;
    std::string error;
    Json report;
  };
  std::vector<std::future<Item>> futs;
  for (const std::string& f : files)
    futs.push_back(std::async(std::launch::async, [f]() {
      Item it;
      it.file = fs::path(f).filename().string();
      try {
        ReportDocument doc = run_analysis(JobSpec::from_config_file(f));
        it.status = "ok";
        it.report = doc.to_json();
      } catch (const InternalError& e) {
        it.status = "internal-error";
        it.error = e.what();
      } catch (const std::exception& e) {
        it.status = "input-error";
        it.error = e.what();
      }
      return it;
    }));
  Json arr = Json::array();
  int rc = 0;
  for (auto& fu : futs) {
    Item it = fu.get();
    Json e;
    e["file"] = it.file;
    e["status"] = it.status;
    if (it.status == "ok")
      e["report"] = it.report;
    else
      e["error"] = it.error;
    arr.push_back(e);
    if (it.status == "input-error") rc = std::max(rc, 2);
    if (it.status == "internal-error") rc = std::max(rc, 3);
  }
  emit(arr.dump(2), out_path);
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact theta-group gradings and the invariants of their flat connections"};
  app.require_subcommand(1);

  CommonFlags fa;
  std::string batch_dir;
  CLI::App* analyze = app.add_subcommand("analyze", "build a grading, pick a vector, report all invariants");
  add_jobspec_flags(analyze, fa);
  analyze->add_option("--batch", batch_dir, "directory of config files; reports merge in filename order");

  CommonFlags fv;
  std::string suite = "all";
  bool parallel = false;
  CLI::App* verify = app.add_subcommand("verify", "run property suites against a grading");
  add_jobspec_flags(verify, fv);
  verify->add_option("--suite", suite, "core|gradings|loopalg|connection|all");
  verify->add_flag("--parallel", parallel, "fan out per-degree loop-algebra checks");

  std::string example_name;
  CommonFlags fe;
  CLI::App* examples = app.add_subcommand("examples", "reproduce a built-in example with pinned seeds");
  examples->add_option("name", example_name, "frenkel-gross:<type> | g2-subregular | 2a2n:<n>")->required();
  examples->add_option("--format", fe.format, "json|text");
  examples->add_option("--out", fe.out_path, "write the report here instead of stdout");
  examples->add_option("--truncation", fe.truncation, "series truncation (default 4m)");

  std::string list_format = "text";
  CLI::App* list = app.add_subcommand("list", "list the built-in example gradings");
  list->add_option("--format", list_format, "json|text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*analyze) {
      if (!batch_dir.empty()) return run_batch(batch_dir, fa.out_path);
      JobSpec job = jobspec_from_flags(fa);
      if (fa.format != "json") job.format = fa.format;
      ReportDocument doc = run_analysis(job);
      emit_report(doc, job.format, fa.out_path);
      return 0;
    }
    if (*verify) {
      JobSpec job = jobspec_from_flags(fv);
      auto t0 = std::chrono::steady_clock::now();
      auto grading = build_grading(job);
      std::vector<CheckResult> checks = run_suite(*grading, suite, job.seed, job.truncation, parallel);
      bool all = true;
      for (const auto& c : checks) all = all && c.pass;
      auto t1 = std::chrono::steady_clock::now();
      if (job.format == "text" || fv.format == "text") {
        std::ostringstream os;
        os << "verify " << job.type_name() << " suite=" << suite << "\n";
        for (const auto& c : checks) {
          os << (c.pass ? "  [PASS] " : "  [FAIL] ") << c.name;
          if (!c.pass) os << "  (" << c.counterexample << ")";
          os << "\n";
        }
        os << (all ? "all checks passed" : "CHECKS FAILED") << "\n";
        emit(os.str(), fv.out_path);
      } else {
        Json out;
        out["schema"] = kReportSchema;
        out["tool"] = "thetaconn";
        out["version"] = kToolVersion;
        Json jjob;
        jjob["type"] = job.type_name();
        jjob["sigma"] = job.sigma_name();
        jjob["kac"] = job.kac;
        jjob["seed"] = job.seed;
        out["job"] = jjob;
        out["suite"] = suite;
        Json arr = Json::array();
        for (const auto& c : checks) {
          Json e;
          e["name"] = c.name;
          e["pass"] = c.pass;
          if (!c.pass) e["counterexample"] = c.counterexample;
          arr.push_back(e);
        }
        out["invariants"] = arr;
        out["all_passed"] = all;
        out["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        emit(out.dump(2), fv.out_path);
      }
      return all ? 0 : 1;
    }
    if (*examples) {
      JobSpec job = example_job(example_name);
      if (fe.truncation > 0) job.truncation = fe.truncation;
      if (fe.format == "text") job.format = "text";
      ReportDocument doc = run_analysis(job);
      emit_report(doc, job.format, fe.out_path);
      return 0;
    }
    if (*list) {
      auto rows = catalog_rows();
      if (list_format == "json") {
        Json arr = Json::array();
        for (const auto& r : rows) {
          Json e;
          e["name"] = r.name;
          e["type"] = r.type;
          e["sigma_order"] = r.sigma_order;
          e["kac"] = r.kac;
          e["m"] = r.m;
          e["stable"] = r.stable;
          arr.push_back(e);
        }
        std::cout << arr.dump(2) << "\n";
      } else {
        std::cout << "name                 type  e  kac          m  stable\n";
        for (const auto& r : rows) {
          std::string kacs;
          for (size_t i = 0; i < r.kac.size(); ++i) kacs += (i ? "," : "") + std::to_string(r.kac[i]);
          std::ostringstream os;
          os.width(20);
          os.setf(std::ios::left);
          os << r.name;
          os << " " << r.type << "   " << r.sigma_order << "  ";
          os.width(12);
          os << kacs;
          os << " " << r.m << "  " << (r.stable ? "yes" : "no") << "\n";
          std::cout << os.str();
        }
      }
      return 0;
    }
  } catch (const InternalError& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return 3;
  } catch (const SamplingError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
