#include "cpident/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "cpident/identities.hpp"
#include "cpident/parallel.hpp"
#include "cpident/qseries.hpp"

namespace cpident {

namespace {

using Clock = std::chrono::steady_clock;
using Json = nlohmann::ordered_json;

constexpr int kMaxPrecision = 2048;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fixed(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string sci(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join_ints(const std::vector<Integer>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : " ") + x.get_str();
  return s;
}

std::string join_ints(std::span<const int> v) {
  std::string s;
  for (int x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

Integer ipow(long base, unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), e);
  return r;
}

// Uniform draw from [0, N-1]^L with the requested residue and ell >= n.
std::vector<int> draw_parts(std::mt19937_64& rng, int n, int length) {
  std::uniform_int_distribution<int> part(0, n - 1);
  std::vector<int> v(static_cast<std::size_t>(length));
  for (auto& x : v) x = part(rng);
  return v;
}

int total_of(const std::vector<int>& v) {
  int s = 0;
  for (int x : v) s += x;
  return s;
}

// Calls fn on every vector in [0, N-1]^L, in lexicographic order.
void for_each_vector(int n, int length, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> v(static_cast<std::size_t>(length), 0);
  for (;;) {
    fn(v);
    int j = length - 1;
    while (j >= 0 && v[static_cast<std::size_t>(j)] == n - 1) v[static_cast<std::size_t>(j--)] = 0;
    if (j < 0) return;
    ++v[static_cast<std::size_t>(j)];
  }
}

RootSet refine_at(const DrinfeldData& dd, int precision) { return isolate_and_refine(dd, precision); }

// State shared by the suites of one (N, L) cell.
class Cell {
 public:
  Cell(int n, int length, const RunConfig& cfg, int threads)
      : n_(n), length_(length), cfg_(cfg), threads_(threads), field_(CycField::of(n)) {}

  std::vector<Record> run(const std::vector<int>& qs) {
    std::vector<Record> out;
    for (int q : qs) {
      for (Suite s : cfg_.suites) {
        Record rec;
        rec.n = n_;
        rec.length = length_;
        rec.q = q;
        rec.suite = s;
        const auto start = Clock::now();
        try {
          dispatch(s, q, rec);
        } catch (const std::exception& e) {
          rec.pass = false;
          rec.details.emplace_back("error", e.what());
        }
        rec.seconds = seconds_since(start);
        out.push_back(std::move(rec));
      }
    }
    return out;
  }

 private:
  void dispatch(Suite s, int q, Record& rec) {
    switch (s) {
      case Suite::qseries: return run_qseries(q, rec);
      case Suite::oracle: return run_oracle(q, rec);
      case Suite::lemma1: return run_lemma1(q, rec);
      case Suite::lemma2: return run_lemma2(q, rec);
      case Suite::theorem: return run_theorem(q, rec);
      case Suite::corollary: return run_corollary(q, rec);
      case Suite::roots: return run_roots(q, rec);
    }
  }

  const KCache& k1() {
    if (!k1_) k1_ = KCache::build(n_, length_, 1, threads_);
    return *k1_;
  }
  const KCache& k2() {
    if (!k2_) k2_ = KCache::build(n_, length_, 2, threads_);
    return *k2_;
  }
  const DrinfeldData& dd(int q) {
    auto it = dd_.find(q);
    if (it == dd_.end()) it = dd_.emplace(q, drinfeld(n_, length_, q)).first;
    return it->second;
  }
  const PairSample& pairs(int q) {
    auto it = pairs_.find(q);
    if (it == pairs_.end()) it = pairs_.emplace(q, admissible_pairs(n_, length_, q, cfg_.seed)).first;
    return it->second;
  }

  void add_pair_policy(int q, Record& rec) {
    const auto& ps = pairs(q);
    rec.details.emplace_back("pair_policy", ps.exhaustive ? "exhaustive" : "sampled");
    rec.details.emplace_back("admissible_pairs", ps.admissible_count);
    rec.details.emplace_back("pairs_checked", std::to_string(ps.pairs.size()));
  }

  void run_qseries(int q, Record& rec) {
    rec.kind = "exact";
    if (!qseries_done_) {
      for (int a = 0; a < n_; ++a) {
        for (int r = 0; r < n_; ++r) {
          ++id1_count_;
          if (!check_id1(field_, a, r)) ++id1_failed_;
        }
      }
      for (int s = 0; s < n_; ++s) {
        ++id1a_count_;
        if (!check_id1a(field_, s)) ++id1a_failed_;
      }
      qfact_ok_ = pochhammer(CycNum::omega_power(field_, 1), n_ - 1) == CycNum(field_, n_);
      qseries_done_ = true;
    }
    int prod_failed = 0;
    std::string first;
    for (const auto& [mu, lambda] : pairs(q).pairs) {
      if (!check_product_identity(field_, mu, lambda).ok()) {
        if (prod_failed++ == 0) first = join_ints(mu) + ";" + join_ints(lambda);
      }
    }
    rec.details.emplace_back("id1_checked", std::to_string(id1_count_));
    rec.details.emplace_back("id1_failed", std::to_string(id1_failed_));
    rec.details.emplace_back("id1a_checked", std::to_string(id1a_count_));
    rec.details.emplace_back("id1a_failed", std::to_string(id1a_failed_));
    rec.details.emplace_back("qfactorial_equals_N", yes_no(qfact_ok_));
    add_pair_policy(q, rec);
    rec.details.emplace_back("product_identity_failed", std::to_string(prod_failed));
    if (!first.empty()) rec.details.emplace_back("first_failure", first);
    rec.pass = id1_failed_ == 0 && id1a_failed_ == 0 && qfact_ok_ && prod_failed == 0;
  }

  void build_oracle() {
    if (oracle_done_) return;
    const auto& cache = k1();
    for (const auto& t : cache.tables) {
      const auto plain = K_brute_all(t.composition, Variant::plain);
      const auto bar = K_brute_all(t.composition, Variant::bar);
      for (std::size_t m = 0; m < plain.size(); ++m) {
        const int mi = static_cast<int>(m);
        OracleStat& st = oracle_[mi % n_];
        ++st.checked;
        if (!(plain[m] == t.at(mi, Variant::plain)) || !(bar[m] == t.at(mi, Variant::bar))) {
          if (st.failed++ == 0) st.first = join_ints(t.composition.parts()) + " m=" + std::to_string(m);
        }
        if (!(bar[m] == plain[m].conjugate())) ++st.conj_failed;
      }
      if (!(gen_gbar_closed(t.composition) == gen_g(t.composition).conjugate())) ++gbar_failed_;
    }
    // spot check on compositions of 2N
    int spot = 0;
    for (const auto& c : CompositionRange(length_, n_, 2 * n_)) {
      if (spot++ >= 16) break;
      const KTable t = K_via_g(c);
      const auto plain = K_brute_all(c, Variant::plain);
      for (std::size_t m = 0; m < plain.size(); ++m) {
        OracleStat& st = oracle_[static_cast<int>(m) % n_];
        ++st.spot_checked;
        if (!(plain[m] == t.at(static_cast<int>(m), Variant::plain))) ++st.failed;
      }
    }
    oracle_done_ = true;
  }

  void run_oracle(int q, Record& rec) {
    rec.kind = "exact";
    build_oracle();
    const OracleStat& st = oracle_[q];
    rec.details.emplace_back("compositions", std::to_string(k1().tables.size()));
    rec.details.emplace_back("values_checked", std::to_string(st.checked));
    rec.details.emplace_back("spot_values_2N", std::to_string(st.spot_checked));
    rec.details.emplace_back("mismatches", std::to_string(st.failed));
    rec.details.emplace_back("conjugation_failures", std::to_string(st.conj_failed));
    rec.details.emplace_back("gbar_closed_failures", std::to_string(gbar_failed_));
    if (!st.first.empty()) rec.details.emplace_back("first_failure", st.first);
    rec.pass = st.failed == 0 && st.conj_failed == 0 && gbar_failed_ == 0;
  }

  void run_lemma1(int q, Record& rec) {
    rec.kind = "exact";
    int failed = 0;
    std::string first;
    for (const auto& [mu, lambda] : pairs(q).pairs) {
      const bool ok = check_lemma1(field_, mu, lambda).ok() && check_generating_function(field_, mu, lambda).ok();
      if (!ok && failed++ == 0) first = join_ints(mu) + ";" + join_ints(lambda);
    }
    add_pair_policy(q, rec);
    rec.details.emplace_back("failed", std::to_string(failed));
    if (!first.empty()) rec.details.emplace_back("first_failure", first);
    rec.pass = failed == 0;
  }

  void run_lemma2(int q, Record& rec) {
    rec.kind = "exact";
    const auto r = check_lemma2(k1(), k2(), dd(q));
    rec.details.emplace_back("m_Q", std::to_string(r.degree));
    rec.details.emplace_back("m0_checked", std::to_string(r.m0_checked));
    rec.details.emplace_back("m0_failed", std::to_string(r.m0_failed));
    rec.details.emplace_back("k1_checked", std::to_string(r.k1_checked));
    rec.details.emplace_back("k1_failed", std::to_string(r.k1_failed));
    rec.details.emplace_back("alt_form_agrees", yes_no(r.alt_form_agrees));
    rec.details.emplace_back("symmetric", yes_no(r.symmetric));
    if (!r.first_failure.empty()) rec.details.emplace_back("first_failure", r.first_failure);
    rec.pass = r.ok();
  }

  void run_theorem(int q, Record& rec) {
    rec.kind = "numeric";
    const auto& d = dd(q);
    int prec = cfg_.precision;
    RootSet rs = refine_at(d, prec);
    GramReport g = gram_matrix(k1(), d, rs, threads_);
    while (g.precision_insufficient && prec < kMaxPrecision) {
      prec *= 2;
      rs = refine_at(d, prec);
      g = gram_matrix(k1(), d, rs, threads_);
    }
    settled_[q] = prec;
    rec.details.emplace_back("m_Q", std::to_string(d.degree));
    rec.details.emplace_back("precision", std::to_string(prec));
    rec.details.emplace_back("all_real", yes_no(g.all_real));
    rec.details.emplace_back("multiple_root_path", yes_no(g.multiple_root_path));
    for (std::size_t k = 0; k < g.matrix.size(); ++k) {
      const std::string idx = std::to_string(k + 1);
      rec.details.emplace_back("h_" + idx + idx, g.matrix[k][k].real().mid_string(25));
      rec.details.emplace_back("minus_B_" + idx, (-g.B[k]).mid_string(25));
    }
    rec.details.emplace_back("max_offdiag", sci(g.max_offdiag));
    rec.details.emplace_back("max_diag_rel", sci(g.max_diag_rel));
    rec.details.emplace_back("offdiag_contains_zero", yes_no(g.offdiag_contains_zero));
    rec.details.emplace_back("diag_contains_minus_B", yes_no(g.diag_contains_expected));
    rec.details.emplace_back("routes_agree", yes_no(g.routes_agree));
    rec.details.emplace_back("radius_ok", yes_no(g.radius_ok));
    if (g.precision_insufficient) rec.details.emplace_back("note", "precision cap reached");
    rec.pass = g.ok();
  }

  void run_corollary(int q, Record& rec) {
    rec.kind = "numeric";
    const auto& d = dd(q);
    int prec = settled_.count(q) ? settled_[q] : cfg_.precision;
    RootSet rs = refine_at(d, prec);
    CorollaryReport c = check_corollary(k1(), d, rs, threads_);
    while (!c.ok() && !c.skipped && prec < kMaxPrecision) {
      prec *= 2;
      rs = refine_at(d, prec);
      c = check_corollary(k1(), d, rs, threads_);
    }
    rec.details.emplace_back("m_Q", std::to_string(d.degree));
    rec.details.emplace_back("precision", std::to_string(prec));
    rec.details.emplace_back("skipped", yes_no(c.skipped));
    rec.details.emplace_back("max_rel_error", sci(c.max_rel_error));
    rec.details.emplace_back("tolerance", sci(kCorollaryTolerance));
    rec.details.emplace_back("real_within_radii", yes_no(c.real_within_radii));
    rec.details.emplace_back("bar_equals", yes_no(c.bar_equals));
    rec.pass = c.ok();
  }

  void run_roots(int q, Record& rec) {
    rec.kind = "exact";
    const auto& d = dd(q);
    const auto cert = certify_roots(d);
    const RootSet rs = refine_at(d, cfg_.precision);
    const bool p1 = d.value_at(1) == ipow(n_, static_cast<unsigned long>(length_ - 1));
    bool no_zero = true;
    for (const auto& r : rs.roots) no_zero = no_zero && !r.contains_zero();
    // sum of roots against -Lambda_(m-1) / Lambda_m
    bool vieta = true;
    if (d.degree >= 1) {
      const int prec = rs.roots.empty() ? cfg_.precision : rs.roots.front().precision();
      RealBall sum(prec);
      for (std::size_t k = 0; k < rs.roots.size(); ++k) {
        for (int rep = 0; rep < rs.multiplicity[k]; ++rep) sum += rs.roots[k];
      }
      vieta = !rs.all_real || sum.contains(Rational(-d.coeff(d.degree - 1), d.coeff(d.degree)));
    }
    const bool real_ok = d.degree == 0 || cert.real_count == d.degree;
    const bool distinct = d.degree == 0 || cert.distinct;
    rec.details.emplace_back("m_Q", std::to_string(d.degree));
    rec.details.emplace_back("Lambda", join_ints(d.lambda));
    rec.details.emplace_back("real_count", std::to_string(cert.real_count));
    rec.details.emplace_back("distinct", yes_no(distinct));
    if (d.degree >= 1) {
      rec.details.emplace_back("resultant", cert.resultant.get_str());
      rec.details.emplace_back("discriminant", cert.discriminant.get_str());
    }
    for (std::size_t k = 0; k < rs.roots.size(); ++k) {
      const std::string key = "z_" + std::to_string(k + 1);
      rec.details.emplace_back(key, rs.exact[k] ? rs.exact[k]->get_str() : rs.roots[k].mid_string(25));
    }
    rec.details.emplace_back("no_root_ball_contains_zero", yes_no(no_zero));
    rec.details.emplace_back("P_at_1_equals_N_pow_L_minus_1", yes_no(p1));
    rec.details.emplace_back("root_sum_matches", yes_no(vieta));
    rec.details.emplace_back("converged", yes_no(rs.converged));
    rec.pass = real_ok && distinct && no_zero && p1 && vieta && rs.converged;
  }

  struct OracleStat {
    long checked = 0;
    long spot_checked = 0;
    long failed = 0;
    long conj_failed = 0;
    std::string first;
  };

  int n_;
  int length_;
  const RunConfig& cfg_;
  int threads_;
  const CycField& field_;
  std::optional<KCache> k1_;
  std::optional<KCache> k2_;
  std::map<int, DrinfeldData> dd_;
  std::map<int, PairSample> pairs_;
  std::map<int, int> settled_;
  bool qseries_done_ = false;
  int id1_count_ = 0, id1_failed_ = 0, id1a_count_ = 0, id1a_failed_ = 0;
  bool qfact_ok_ = false;
  bool oracle_done_ = false;
  std::map<int, OracleStat> oracle_;
  long gbar_failed_ = 0;
};

Json config_json(const RunConfig& c) {
  Json j;
  Json ns = Json::array(), ls = Json::array();
  for (int n : c.n_list) ns.push_back(std::to_string(n));
  for (int l : c.l_list) ls.push_back(std::to_string(l));
  j["N"] = ns;
  j["L"] = ls;
  if (c.q_list) {
    Json qs = Json::array();
    for (int q : *c.q_list) qs.push_back(std::to_string(q));
    j["Q"] = qs;
  } else {
    j["Q"] = "all";
  }
  Json suites = Json::array();
  for (Suite s : c.suites) suites.push_back(std::string(suite_name(s)));
  j["suites"] = suites;
  j["precision"] = std::to_string(c.precision);
  j["threads"] = std::to_string(c.threads);
  j["seed"] = std::to_string(c.seed);
  j["format"] = c.format;
  j["out"] = c.out;
  return j;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string r = "\"";
  for (char ch : s) {
    if (ch == '"') r += '"';
    r += ch;
  }
  return r + "\"";
}

}  // namespace

std::string_view tool_version() { return CPIDENT_VERSION; }

std::string_view suite_name(Suite s) {
  switch (s) {
    case Suite::qseries: return "qseries";
    case Suite::oracle: return "oracle";
    case Suite::lemma1: return "lemma1";
    case Suite::lemma2: return "lemma2";
    case Suite::theorem: return "theorem";
    case Suite::corollary: return "corollary";
    case Suite::roots: return "roots";
  }
  return "?";
}

const std::vector<Suite>& all_suites() {
  static const std::vector<Suite> v{Suite::qseries, Suite::oracle,    Suite::lemma1, Suite::lemma2,
                                    Suite::theorem, Suite::corollary, Suite::roots};
  return v;
}

Suite parse_suite(std::string_view name) {
  for (Suite s : all_suites()) {
    if (suite_name(s) == name) return s;
  }
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

std::vector<int> parse_int_list(std::string_view text) {
  auto to_int = [&](std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty number in list '" + std::string(text) + "'");
    int v = 0;
    for (char ch : s) {
      if (ch < '0' || ch > '9') throw std::invalid_argument("malformed number '" + std::string(s) + "'");
      v = v * 10 + (ch - '0');
      if (v > 1000000) throw std::invalid_argument("number too large '" + std::string(s) + "'");
    }
    return v;
  };
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    const std::string_view item = text.substr(pos, comma - pos);
    const std::size_t dots = item.find("..");
    if (dots == std::string_view::npos) {
      out.push_back(to_int(item));
    } else {
      const int lo = to_int(item.substr(0, dots));
      const int hi = to_int(item.substr(dots + 2));
      if (hi < lo) throw std::invalid_argument("descending range '" + std::string(item) + "'");
      for (int v = lo; v <= hi; ++v) out.push_back(v);
    }
    pos = comma + 1;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void RunConfig::validate() const {
  if (n_list.empty() || l_list.empty()) throw std::invalid_argument("empty N or L grid");
  if (suites.empty()) throw std::invalid_argument("no suites selected");
  for (int n : n_list) {
    if (n < 2 || n > 16) throw std::invalid_argument("N must lie in [2, 16]");
  }
  for (int l : l_list) {
    if (l < 1 || l > 24) throw std::invalid_argument("L must lie in [1, 24]");
  }
  if (q_list) {
    if (q_list->empty()) throw std::invalid_argument("empty Q list");
    for (int q : *q_list) {
      for (int n : n_list) {
        if (q >= n) throw std::invalid_argument("Q=" + std::to_string(q) + " is out of range for N=" + std::to_string(n));
      }
    }
  }
  if (precision < 128) throw std::invalid_argument("precision must be at least 128 bits");
  if (threads < 1) throw std::invalid_argument("threads must be positive");
  if (format != "json" && format != "csv" && format != "text") {
    throw std::invalid_argument("format must be json, csv or text");
  }
}

int VerificationReport::passed() const {
  return static_cast<int>(std::count_if(records.begin(), records.end(), [](const Record& r) { return r.pass; }));
}

int VerificationReport::failed() const { return static_cast<int>(records.size()) - passed(); }

PairSample admissible_pairs(int n, int length, int q, std::uint64_t seed, std::size_t exhaustive_limit,
                            std::size_t sample_size) {
  PairSample ps;
  const auto c = count_cm(length, n);
  Integer count = 0;
  for (std::size_t s1 = static_cast<std::size_t>(q); s1 < c.size(); s1 += static_cast<std::size_t>(n)) {
    for (std::size_t s2 = static_cast<std::size_t>(q); s2 <= s1; s2 += static_cast<std::size_t>(n)) count += c[s1] * c[s2];
  }
  ps.admissible_count = count.get_str();
  if (count <= Integer(static_cast<unsigned long>(exhaustive_limit))) {
    ps.exhaustive = true;
    std::vector<std::vector<int>> residue;
    for_each_vector(n, length, [&](const std::vector<int>& v) {
      if (total_of(v) % n == q) residue.push_back(v);
    });
    for (const auto& mu : residue) {
      for (const auto& lambda : residue) {
        if (total_of(lambda) <= total_of(mu)) ps.pairs.emplace_back(mu, lambda);
      }
    }
    return ps;
  }
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(length), static_cast<std::uint32_t>(q)};
  std::mt19937_64 rng(seq);
  while (ps.pairs.size() < sample_size) {
    auto mu = draw_parts(rng, n, length);
    auto lambda = draw_parts(rng, n, length);
    if (total_of(mu) % n != q || total_of(lambda) % n != q || total_of(lambda) > total_of(mu)) continue;
    ps.pairs.emplace_back(std::move(mu), std::move(lambda));
  }
  return ps;
}

VerificationReport run_verification(const RunConfig& config) {
  config.validate();
  const auto start = Clock::now();
  VerificationReport report;
  report.config = config;
  struct Task {
    int n;
    int length;
  };
  std::vector<Task> tasks;
  for (int n : config.n_list) {
    for (int l : config.l_list) tasks.push_back({n, l});
  }
  const int outer = std::min<int>(config.threads, static_cast<int>(tasks.size()));
  const int inner = tasks.size() == 1 ? config.threads : 1;
  std::vector<std::vector<Record>> results(tasks.size());
  parallel_for(tasks.size(), outer, [&](std::size_t i) {
    const Task& t = tasks[i];
    std::vector<int> qs;
    if (config.q_list) {
      qs = *config.q_list;
    } else {
      for (int q = 0; q < t.n; ++q) qs.push_back(q);
    }
    Cell cell(t.n, t.length, config, inner);
    results[i] = cell.run(qs);
  });
  for (auto& r : results) {
    for (auto& rec : r) report.records.push_back(std::move(rec));
  }
  std::stable_sort(report.records.begin(), report.records.end(), [](const Record& a, const Record& b) {
    return std::tie(a.n, a.length, a.q, a.suite) < std::tie(b.n, b.length, b.q, b.suite);
  });
  report.seconds = seconds_since(start);
  return report;
}

std::string to_json(const VerificationReport& report, bool include_timing) {
  Json j;
  j["schema"] = "cpident/1";
  j["tool_version"] = std::string(tool_version());
  j["config"] = config_json(report.config);
  j["summary"] = {{"records", std::to_string(report.records.size())},
                  {"passed", std::to_string(report.passed())},
                  {"failed", std::to_string(report.failed())}};
  Json recs = Json::array();
  for (const auto& r : report.records) {
    Json jr;
    jr["N"] = std::to_string(r.n);
    jr["L"] = std::to_string(r.length);
    jr["Q"] = std::to_string(r.q);
    jr["suite"] = std::string(suite_name(r.suite));
    jr["verdict"] = r.pass ? "pass" : "fail";
    jr["kind"] = r.kind;
    Json det = Json::object();
    for (const auto& [k, v] : r.details) det[k] = v;
    jr["details"] = det;
    if (include_timing) jr["seconds"] = fixed(r.seconds);
    recs.push_back(jr);
  }
  j["records"] = recs;
  if (include_timing) j["total_seconds"] = fixed(report.seconds);
  return j.dump(2) + "\n";
}

std::string to_csv(const VerificationReport& report) {
  std::ostringstream out;
  out << "N,L,Q,suite,verdict,kind,seconds,details\n";
  for (const auto& r : report.records) {
    std::string det;
    for (const auto& [k, v] : r.details) det += (det.empty() ? "" : ";") + k + "=" + v;
    out << r.n << ',' << r.length << ',' << r.q << ',' << suite_name(r.suite) << ',' << (r.pass ? "pass" : "fail")
        << ',' << r.kind << ',' << fixed(r.seconds) << ',' << csv_escape(det) << '\n';
  }
  return out.str();
}

std::string to_text(const VerificationReport& report) {
  std::ostringstream out;
  out << "cpident " << tool_version() << " verify: " << report.records.size() << " records, " << report.passed()
      << " passed, " << report.failed() << " failed (" << fixed(report.seconds, 2) << " s)\n";
  for (const auto& r : report.records) {
    char head[96];
    std::snprintf(head, sizeof head, "N=%-2d L=%-2d Q=%-2d %-9s %s  %-7s", r.n, r.length, r.q,
                  std::string(suite_name(r.suite)).c_str(), r.pass ? "PASS" : "FAIL", r.kind.c_str());
    out << head;
    for (const auto& [k, v] : r.details) out << ' ' << k << '=' << v;
    out << '\n';
  }
  return out.str();
}

BenchReport run_bench(int n, int length, int reps) {
  if (n < 2 || length < 1 || reps < 1) throw std::invalid_argument("run_bench: bad parameters");
  BenchReport rep{n, length, reps, {}, 0.0, 0.0, 0.0};
  const int top = (n - 1) * length;
  auto median = [](std::vector<double> v) {
    std::sort(v.begin(), v.end());
    return v.size() % 2 ? v[v.size() / 2] : 0.5 * (v[v.size() / 2 - 1] + v[v.size() / 2]);
  };
  for (const auto& c : CompositionRange(length, n, n)) {
    const KTable t = K_via_g(c);
    for (int m = 0; m <= top; ++m) {
      if (!(K_brute(c, m, Variant::plain) == t.at(m, Variant::plain)) ||
          !(K_brute(c, m, Variant::bar) == t.at(m, Variant::bar))) {
        throw std::logic_error("bench: brute force and generating function disagree on " + join_ints(c.parts()) +
                               " at m=" + std::to_string(m));
      }
    }
    std::vector<double> tb, tg, ts;
    for (int r = 0; r < reps; ++r) {
      auto s = Clock::now();
      for (int m = 0; m <= top; ++m) {
        (void)K_brute(c, m, Variant::plain);
        (void)K_brute(c, m, Variant::bar);
      }
      tb.push_back(seconds_since(s));
      s = Clock::now();
      (void)K_via_g(c);
      tg.push_back(seconds_since(s));
      s = Clock::now();
      (void)K_brute_all(c, Variant::plain);
      (void)K_brute_all(c, Variant::bar);
      ts.push_back(seconds_since(s));
    }
    BenchRow row{join_ints(c.parts()), median(tb), median(tg)};
    rep.brute_total += row.brute_median;
    rep.gen_total += row.gen_median;
    rep.brute_single_pass_total += median(ts);
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

std::string bench_to_text(const BenchReport& r) {
  std::ostringstream out;
  out << "cpident " << tool_version() << " bench N=" << r.n << " L=" << r.length << " compositions=" << r.rows.size()
      << " reps=" << r.reps << "\n";
  out << "paths agree: yes\n";
  out << "brute force (per m, both variants): " << sci(r.brute_total) << " s\n";
  out << "brute force (single pass):          " << sci(r.brute_single_pass_total) << " s\n";
  out << "generating function:                " << sci(r.gen_total) << " s\n";
  out << "speedup: " << fixed(r.speedup(), 2) << "x\n";
  return out.str();
}

std::string bench_to_json(const BenchReport& r) {
  Json j;
  j["schema"] = "cpident/1";
  j["tool_version"] = std::string(tool_version());
  j["N"] = std::to_string(r.n);
  j["L"] = std::to_string(r.length);
  j["reps"] = std::to_string(r.reps);
  j["paths_agree"] = true;
  j["brute_seconds"] = sci(r.brute_total);
  j["brute_single_pass_seconds"] = sci(r.brute_single_pass_total);
  j["gen_seconds"] = sci(r.gen_total);
  j["speedup"] = fixed(r.speedup(), 3);
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"composition", row.composition},
                    {"brute_median_seconds", sci(row.brute_median)},
                    {"gen_median_seconds", sci(row.gen_median)}});
  }
  j["compositions"] = rows;
  return j.dump(2) + "\n";
}

std::string bench_to_csv(const BenchReport& r) {
  std::ostringstream out;
  out << "N,L,composition,brute_median_seconds,gen_median_seconds\n";
  for (const auto& row : r.rows) {
    out << r.n << ',' << r.length << ',' << csv_escape(row.composition) << ',' << sci(row.brute_median) << ','
        << sci(row.gen_median) << '\n';
  }
  return out.str();
}

std::string roots_report(int n, int length, const std::optional<std::vector<int>>& q_list, int precision,
                         const std::string& format) {
  std::vector<int> qs;
  if (q_list) {
    qs = *q_list;
  } else {
    for (int q = 0; q < n; ++q) qs.push_back(q);
  }
  for (int q : qs) {
    if (q < 0 || q >= n) throw std::invalid_argument("Q out of range");
  }
  std::ostringstream text, csv;
  Json j;
  j["schema"] = "cpident/1";
  j["tool_version"] = std::string(tool_version());
  j["N"] = std::to_string(n);
  j["L"] = std::to_string(length);
  j["precision"] = std::to_string(precision);
  Json sectors = Json::array();
  csv << "N,L,Q,m_Q,k,root,radius,exact,multiplicity,B\n";
  for (int q : qs) {
    const auto dd = drinfeld(n, length, q);
    const auto cert = certify_roots(dd);
    const RootSet rs = isolate_and_refine(dd, precision);
    text << "N=" << n << " L=" << length << " Q=" << q << " m_Q=" << dd.degree << " Lambda=[" << join_ints(dd.lambda)
         << "]\n";
    text << "  real_count=" << cert.real_count << " distinct=" << yes_no(dd.degree == 0 || cert.distinct);
    if (dd.degree >= 1) text << " resultant=" << cert.resultant.get_str() << " discriminant=" << cert.discriminant.get_str();
    text << " converged=" << yes_no(rs.converged) << "\n";
    Json js;
    js["Q"] = std::to_string(q);
    js["m_Q"] = std::to_string(dd.degree);
    Json lam = Json::array();
    for (const auto& v : dd.lambda) lam.push_back(v.get_str());
    js["Lambda"] = lam;
    js["real_count"] = std::to_string(cert.real_count);
    js["distinct"] = dd.degree == 0 || cert.distinct;
    js["resultant"] = cert.resultant.get_str();
    js["discriminant"] = cert.discriminant.get_str();
    js["converged"] = rs.converged;
    Json roots = Json::array();
    for (std::size_t k = 0; k < rs.roots.size(); ++k) {
      const std::string root = rs.roots[k].mid_string(30);
      const std::string rad = rs.roots[k].rad_string();
      const std::string exact = rs.exact[k] ? rs.exact[k]->get_str() : "-";
      const std::string b = rs.B[k].mid_string(30);
      text << "  z_" << (k + 1) << " = " << root << " +/- " << rad << "  exact=" << exact
           << "  multiplicity=" << rs.multiplicity[k] << "  B=" << b << "\n";
      csv << n << ',' << length << ',' << q << ',' << dd.degree << ',' << (k + 1) << ',' << root << ',' << rad << ','
          << exact << ',' << rs.multiplicity[k] << ',' << b << '\n';
      roots.push_back({{"root", root},
                       {"radius", rad},
                       {"exact", exact},
                       {"multiplicity", std::to_string(rs.multiplicity[k])},
                       {"B", b},
                       {"B_radius", rs.B[k].rad_string()}});
    }
    js["roots"] = roots;
    sectors.push_back(js);
  }
  j["sectors"] = sectors;
  if (format == "json") return j.dump(2) + "\n";
  if (format == "csv") return csv.str();
  return text.str();
}

}  // namespace cpident
