#include "powelem/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "powelem/annulus.hpp"
#include "powelem/matrix.hpp"
#include "powelem/parallel.hpp"
#include "powelem/poly_io.hpp"
#include "powelem/power_poly.hpp"
#include "powelem/qarith.hpp"

namespace powelem {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string check;
  std::optional<int> d;
  std::optional<int> n;
  std::optional<int> i;
  std::optional<int> order;
  int max_d = 4;
  int max_n = 4;
  int max_order = 50;
  int trials = 10;
  int steps = 8;
  std::uint64_t seed = 1;
  std::string format = "text";
  std::string report_format = "json";
  bool reduced = false;
  bool timing = false;
  int threads = 1;
  std::string out_dir = "goldens";
};

struct Job {
  std::string check;
  CaseTuple tuple;
  std::uint64_t seed = 0;
};

std::vector<int> values(const std::optional<int>& fixed, int lo, int hi) {
  if (fixed) {
    if (*fixed < lo || *fixed > hi) {
      return {};
    }
    return {*fixed};
  }
  std::vector<int> out;
  for (int v = lo; v <= hi; ++v) {
    out.push_back(v);
  }
  return out;
}

std::vector<int> divisors(int m) {
  std::vector<int> out;
  for (int k = 1; k <= m; ++k) {
    if (m % k == 0) {
      out.push_back(k);
    }
  }
  return out;
}

// A fixed parameter is used as given; an omitted one ranges over its valid
// values up to the grid bound.
std::vector<Job> jobs_for(const std::string& check, const RunConfig& cfg) {
  std::vector<Job> jobs;
  const int max_d = cfg.d ? std::max(cfg.d.value(), cfg.max_d) : cfg.max_d;
  const int max_n = cfg.n ? std::max(cfg.n.value(), cfg.max_n) : cfg.max_n;
  for (int d : values(cfg.d, check == "defining" ? 1 : 2, max_d)) {
    for (int n : values(cfg.n, 1, max_n)) {
      if (check == "hypothesis") {
        for (int order : values(cfg.order, 1, cfg.order ? *cfg.order : cfg.max_order)) {
          jobs.push_back({check, {d, n, 0, order}});
        }
        continue;
      }
      const bool top_included = check == "defining" || check == "homogeneity";
      for (int i : values(cfg.i, 1, top_included ? d : d - 1)) {
        if (check == "oracle") {
          for (int t = 0; t < cfg.trials; ++t) {
            jobs.push_back({check, {d, n, i, std::nullopt}, cfg.seed + static_cast<std::uint64_t>(t)});
          }
        } else if (check == "annulus") {
          for (int order : cfg.order ? std::vector<int>{*cfg.order} : divisors(2 * n)) {
            jobs.push_back({check, {d, n, i, order}});
          }
        } else {
          jobs.push_back({check, {d, n, i, std::nullopt}});
        }
      }
    }
  }
  return jobs;
}

VerificationReport run_job(const Job& job, const RunConfig& cfg) {
  const auto& c = job.tuple;
  if (job.check == "defining") {
    return verify_defining_property({c.d, c.n, c.i});
  }
  if (job.check == "homogeneity") {
    return verify_homogeneity({c.d, c.n, c.i});
  }
  if (job.check == "identity") {
    return verify_main_identity(c.d, c.n, c.i);
  }
  if (job.check == "oracle") {
    auto report = verify_on_matrix(random_sl_matrix(c.d, job.seed, cfg.steps), c.n, c.i);
    report.details = {{"seed", job.seed}, {"steps", cfg.steps}};
    return report;
  }
  if (job.check == "annulus") {
    return verify_prop_power_times_I(c.d, c.n, c.i, *c.order);
  }
  if (job.check == "hypothesis") {
    return verify_hypothesis(c.d, c.n, *c.order);
  }
  throw UsageError("unknown check '" + job.check + "'");
}

const std::vector<std::string>& all_checks() {
  static const std::vector<std::string> checks{"defining", "homogeneity", "identity",
                                               "oracle",   "annulus",     "hypothesis"};
  return checks;
}

std::vector<VerificationReport> run_checks(const RunConfig& cfg) {
  std::vector<Job> jobs;
  for (const auto& check : all_checks()) {
    if (cfg.check == "all" || cfg.check == check) {
      auto more = jobs_for(check, cfg);
      jobs.insert(jobs.end(), more.begin(), more.end());
    }
  }
  if (jobs.empty()) {
    throw UsageError("no valid cases for the given parameters");
  }
  auto reports = parallel_map(jobs, [&](const Job& job) { return run_job(job, cfg); }, cfg.threads);
  if (!cfg.timing) {
    for (auto& r : reports) {
      r.millis = 0;
    }
  }
  std::stable_sort(reports.begin(), reports.end(), report_less);
  return reports;
}

nlohmann::json report_document(const std::string& check, const std::vector<VerificationReport>& reports) {
  nlohmann::json cases = nlohmann::json::array();
  std::size_t passed = 0;
  for (const auto& r : reports) {
    passed += r.passed ? 1 : 0;
    cases.push_back(to_json(r));
  }
  return {{"check", check},
          {"summary", {{"cases", reports.size()}, {"passed", passed}, {"failed", reports.size() - passed}}},
          {"reports", std::move(cases)}};
}

void write_text_reports(std::ostream& out, const std::vector<VerificationReport>& reports) {
  std::size_t passed = 0;
  for (const auto& r : reports) {
    passed += r.passed ? 1 : 0;
    const auto& c = r.case_tuple;
    out << (r.passed ? "PASS " : "FAIL ") << r.check << " d=" << c.d << " n=" << c.n << " i=" << c.i;
    if (c.order) {
      out << " N=" << *c.order;
    }
    if (r.details.contains("seed")) {
      out << " seed=" << r.details["seed"].get<std::uint64_t>();
    }
    if (r.witness) {
      out << " witness: " << *r.witness;
    }
    out << '\n';
  }
  out << reports.size() << " cases, " << passed << " passed, " << reports.size() - passed << " failed\n";
}

bool all_passed(const std::vector<VerificationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });
}

std::string poly_name(int d, int n, int i, bool reduced, bool latex) {
  const std::string head = reduced ? (latex ? "\\widehat{P}" : "Phat") : "P";
  if (latex) {
    return head + "_{" + std::to_string(d) + "}^{(" + std::to_string(n) + "," + std::to_string(i) + ")}";
  }
  return head + "_" + std::to_string(d) + "^(" + std::to_string(n) + "," + std::to_string(i) + ")";
}

std::string render(const Polynomial& p, const std::string& format) {
  if (format == "json") {
    return to_json(p).dump(2);
  }
  if (format == "latex") {
    return to_latex(p);
  }
  return to_text(p);
}

int cmd_poly(const RunConfig& cfg, std::ostream& out) {
  const PowerPolyKey key{*cfg.d, *cfg.n, *cfg.i};
  if (cfg.reduced && key.d < 2) {
    throw UsageError("--reduced needs d >= 2");
  }
  try {
    key.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const Polynomial p = cfg.reduced ? reduced_power_elementary_poly(key) : power_elementary_poly(key);
  if (cfg.format == "latex") {
    out << poly_name(key.d, key.n, key.i, cfg.reduced, true) << " = " << to_latex(p) << '\n';
  } else {
    out << render(p, cfg.format) << '\n';
  }
  return kExitPass;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const auto reports = run_checks(cfg);
  if (cfg.report_format == "text") {
    write_text_reports(out, reports);
  } else {
    out << report_document(cfg.check, reports).dump(2) << '\n';
  }
  return all_passed(reports) ? kExitPass : kExitFailure;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  file << content;
  if (!file) {
    throw std::runtime_error("cannot write " + path.string());
  }
}

constexpr int kGoldenD = 4;
constexpr int kGoldenN = 6;

int cmd_emit_goldens(const RunConfig& cfg, std::ostream& out) {
  namespace fs = std::filesystem;
  const fs::path dir(cfg.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    throw std::runtime_error("cannot create " + dir.string() + ": " + ec.message());
  }
  const std::string ext = cfg.format == "json" ? ".json" : cfg.format == "latex" ? ".tex" : ".txt";
  std::string display = "\\begin{align*}\n";
  for (int i = 1; i <= kGoldenD; ++i) {
    const Polynomial p = power_elementary_poly({kGoldenD, kGoldenN, i});
    const std::string stem =
        "P_" + std::to_string(kGoldenD) + "_" + std::to_string(kGoldenN) + "_" + std::to_string(i);
    write_file(dir / (stem + ext), render(p, cfg.format) + "\n");
    out << (dir / (stem + ext)).string() << '\n';
    display += poly_name(kGoldenD, kGoldenN, i, false, true) + " &= " + to_latex(p);
    display += i < kGoldenD ? " \\\\\n" : ".\n";
  }
  display += "\\end{align*}\n";
  if (cfg.format == "latex") {
    write_file(dir / "P_4_6_display.tex", display);
    out << (dir / "P_4_6_display.tex").string() << '\n';
  }

  RunConfig sweep = cfg;
  sweep.check = "all";
  sweep.d.reset();
  sweep.n.reset();
  sweep.i.reset();
  sweep.order.reset();
  sweep.max_d = 3;
  sweep.max_n = 3;
  sweep.max_order = 12;
  sweep.trials = 3;
  sweep.timing = false;
  const auto reports = run_checks(sweep);
  write_file(dir / "sweep_report.json", report_document("all", reports).dump(2) + "\n");
  out << (dir / "sweep_report.json").string() << '\n';
  return all_passed(reports) ? kExitPass : kExitFailure;
}

void add_case_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--d", cfg.d, "Number of eigenvalues / matrix size")->check(CLI::Range(1, 16));
  cmd->add_option("--n", cfg.n, "Power")->check(CLI::Range(1, 1000));
  cmd->add_option("--i", cfg.i, "Index of the elementary polynomial")->check(CLI::Range(0, 16));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  cfg.threads = default_thread_count();

  CLI::App app{"Power elementary polynomials: computation and identity verification"};
  app.name(args.empty() ? "powelem" : args.front());
  app.require_subcommand(1, 1);

  auto* poly = app.add_subcommand("poly", "Print P_d^(n,i), or the reduced polynomial with --reduced");
  add_case_options(poly, cfg);
  poly->get_option("--d")->required();
  poly->get_option("--n")->required();
  poly->get_option("--i")->required();
  poly->add_flag("--reduced", cfg.reduced, "Specialize e_d = 1");
  poly->add_option("--format", cfg.format, "text, json or latex")
      ->check(CLI::IsMember({"text", "json", "latex"}));

  auto* verify = app.add_subcommand("verify", "Run verification checks; exit 1 on any failure");
  verify->add_option("check", cfg.check, "defining, homogeneity, identity, oracle, annulus, hypothesis or all")
      ->required()
      ->check(CLI::IsMember({"defining", "homogeneity", "identity", "oracle", "annulus", "hypothesis", "all"}));
  add_case_options(verify, cfg);
  verify->add_option("--order", cfg.order, "Order N of zeta = q^(1/d)")->check(CLI::Range(1, 100000));
  verify->add_option("--max-d", cfg.max_d, "Grid bound on d")->check(CLI::Range(2, 16));
  verify->add_option("--max-n", cfg.max_n, "Grid bound on n")->check(CLI::Range(1, 1000));
  verify->add_option("--max-order", cfg.max_order, "Grid bound on N for hypothesis checks")
      ->check(CLI::Range(1, 100000));
  verify->add_option("--trials", cfg.trials, "Random matrices per (d, n, i)")->check(CLI::Range(1, 100000));
  verify->add_option("--steps", cfg.steps, "Transvections per random matrix")->check(CLI::Range(1, 10000));
  verify->add_option("--seed", cfg.seed, "Seed of the first random matrix");
  verify->add_option("--format", cfg.report_format, "json or text")->check(CLI::IsMember({"json", "text"}));
  verify->add_flag("--timing", cfg.timing, "Record per-case wall-clock milliseconds");
  verify->add_option("--threads", cfg.threads, "Worker threads (default: POWELEM_THREADS)")
      ->check(CLI::Range(1, 1024));

  auto* goldens = app.add_subcommand("emit-goldens", "Write the P_4^(6,i) golden files and a sweep report");
  goldens->add_option("--out", cfg.out_dir, "Output directory");
  goldens->add_option("--format", cfg.format, "text, json or latex")
      ->check(CLI::IsMember({"text", "json", "latex"}));
  goldens->add_option("--seed", cfg.seed, "Seed of the sweep's random matrices");
  goldens->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::Range(1, 1024));

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) {
    argv.push_back(a.c_str());
  }
  if (argv.empty()) {
    argv.push_back("powelem");
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (poly->parsed()) {
      return cmd_poly(cfg, out);
    }
    if (verify->parsed()) {
      return cmd_verify(cfg, out);
    }
    return cmd_emit_goldens(cfg, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace powelem
