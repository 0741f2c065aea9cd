// cpident: batch verification driver.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cpident/verify.hpp"

namespace {

struct Options {
  std::string n = "3";
  std::string l = "3";
  std::string q = "all";
  std::string suite = "all";
  int prec = 128;
  int threads = 1;
  std::uint64_t seed = 1;
  std::string format = "text";
  std::string out;
};

void add_common(CLI::App* cmd, Options& o, bool with_suite) {
  cmd->add_option("--N", o.n, "N values: comma list or range a..b")->capture_default_str();
  cmd->add_option("--L", o.l, "L values: comma list or range a..b")->capture_default_str();
  cmd->add_option("--Q", o.q, "'all' or a comma list")->capture_default_str();
  if (with_suite) {
    cmd->add_option("--suite", o.suite,
                    "comma list of qseries,oracle,lemma1,lemma2,theorem,corollary,roots or 'all'")
        ->capture_default_str();
  }
  cmd->add_option("--prec", o.prec, "precision in bits (>= 128)")->capture_default_str();
  cmd->add_option("--threads", o.threads, "worker threads (default: CPIDENT_THREADS or 1)");
  cmd->add_option("--seed", o.seed, "seed for sampled (mu, lambda) pairs")->capture_default_str();
  cmd->add_option("--format", o.format, "json, csv or text")->capture_default_str();
  cmd->add_option("--out", o.out, "write the report here instead of stdout");
}

std::optional<std::vector<int>> parse_q(const std::string& q) {
  if (q == "all") return std::nullopt;
  return cpident::parse_int_list(q);
}

std::vector<cpident::Suite> parse_suites(const std::string& s) {
  if (s == "all") return cpident::all_suites();
  std::vector<cpident::Suite> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto v = cpident::parse_suite(item);
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("no suites selected");
  std::sort(out.begin(), out.end());
  return out;
}

void check_format(const std::string& f) {
  if (f != "json" && f != "csv" && f != "text") throw std::invalid_argument("format must be json, csv or text");
}

bool emit(const std::string& body, const std::string& path) {
  if (path.empty()) {
    std::cout << body;
    return true;
  }
  std::ofstream f(path);
  f << body;
  if (!f) {
    std::cerr << "cpident: cannot write " << path << "\n";
    return false;
  }
  return true;
}

int cmd_verify(const Options& o) {
  cpident::RunConfig cfg;
  cfg.n_list = cpident::parse_int_list(o.n);
  cfg.l_list = cpident::parse_int_list(o.l);
  cfg.q_list = parse_q(o.q);
  cfg.suites = parse_suites(o.suite);
  cfg.precision = o.prec;
  cfg.threads = o.threads;
  cfg.seed = o.seed;
  cfg.format = o.format;
  cfg.out = o.out;
  cfg.validate();
  const auto report = cpident::run_verification(cfg);
  std::string body;
  if (o.format == "json") {
    body = cpident::to_json(report);
  } else if (o.format == "csv") {
    body = cpident::to_csv(report);
  } else {
    body = cpident::to_text(report);
  }
  if (!emit(body, o.out)) return 1;
  if (!o.out.empty()) {
    std::cout << "cpident verify: " << report.records.size() << " records, " << report.passed() << " passed, "
              << report.failed() << " failed\n";
  }
  return report.ok() ? 0 : 1;
}

int cmd_roots(const Options& o) {
  check_format(o.format);
  if (o.prec < 32) throw std::invalid_argument("precision must be at least 32 bits");
  std::string body;
  for (int n : cpident::parse_int_list(o.n)) {
    if (n < 2) throw std::invalid_argument("N must be at least 2");
    for (int l : cpident::parse_int_list(o.l)) {
      if (l < 1) throw std::invalid_argument("L must be at least 1");
      body += cpident::roots_report(n, l, parse_q(o.q), o.prec, o.format);
    }
  }
  return emit(body, o.out) ? 0 : 1;
}

int cmd_bench(const Options& o) {
  check_format(o.format);
  constexpr int kReps = 5;
  std::string body;
  for (int n : cpident::parse_int_list(o.n)) {
    for (int l : cpident::parse_int_list(o.l)) {
      if (n < 2 || n > 8 || l < 1 || l > 12) throw std::invalid_argument("bench grid must stay within N <= 8, L <= 12");
      const auto r = cpident::run_bench(n, l, kReps);
      if (o.format == "json") {
        body += cpident::bench_to_json(r);
      } else if (o.format == "csv") {
        body += cpident::bench_to_csv(r);
      } else {
        body += cpident::bench_to_text(r);
      }
      if (n == 3 && l == 9 && r.speedup() < 10.0) {
        std::cerr << "cpident: warning: generating-function speedup " << r.speedup()
                  << "x at N=3 L=9 is below the expected 10x\n";
      }
    }
  }
  return emit(body, o.out) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the orthogonality identities for the superintegrable chiral Potts Drinfeld polynomials"};
  app.set_version_flag("--version", std::string(cpident::tool_version()));
  app.require_subcommand(1);
  Options verify_opts, roots_opts, bench_opts;
  if (const char* env = std::getenv("CPIDENT_THREADS")) {
    const int t = std::atoi(env);
    if (t > 0) verify_opts.threads = roots_opts.threads = bench_opts.threads = t;
  }
  roots_opts.q = "all";
  auto* verify = app.add_subcommand("verify", "run verification suites over an (N, L, Q) grid");
  auto* roots = app.add_subcommand("roots", "certified roots of the Drinfeld polynomials");
  auto* bench = app.add_subcommand("bench", "time brute-force sums against the generating function");
  add_common(verify, verify_opts, true);
  add_common(roots, roots_opts, false);
  add_common(bench, bench_opts, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (verify->parsed()) return cmd_verify(verify_opts);
    if (roots->parsed()) return cmd_roots(roots_opts);
    if (bench->parsed()) return cmd_bench(bench_opts);
  } catch (const std::invalid_argument& e) {
    std::cerr << "cpident: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "cpident: error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
