#include "sonc/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "sonc/covers.hpp"
#include "sonc/error.hpp"
#include "sonc/experiment.hpp"
#include "sonc/report.hpp"
#include "sonc/selftest.hpp"

namespace sonc {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<double> parse_numbers(std::string text) {
  for (char& c : text) {
    if (c == ',' || c == ';') c = ' ';
  }
  std::istringstream in(text);
  in.imbue(std::locale::classic());
  std::vector<double> out;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) throw UsageError("not a number: '" + token + "'");
    out.push_back(v);
  }
  return out;
}

double parse_delta(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    const auto v = parse_numbers(text);
    if (v.size() != 1) throw UsageError("bad --delta '" + text + "'");
    return v[0];
  }
  const auto num = parse_numbers(text.substr(0, slash));
  const auto den = parse_numbers(text.substr(slash + 1));
  if (num.size() != 1 || den.size() != 1 || den[0] == 0.0) throw UsageError("bad --delta '" + text + "'");
  return num[0] / den[0];
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Emits `text` to `path`; "-" is the given stream.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) return;
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

struct PlanFlags {
  std::uint64_t n = 1000000;
  double box = 1.0;
  std::uint64_t seed = 42;
  unsigned threads = 1;
  std::uint64_t chunk = 1 << 16;
  std::string csv = "-";
  std::string json;
  std::string config;

  SamplePlan plan() const {
    SamplePlan p;
    p.target = n;
    p.box = box;
    p.seed = seed;
    p.threads = threads;
    p.chunk_size = chunk;
    try {
      p.validate();
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
    return p;
  }
};

void add_plan_flags(CLI::App* sub, PlanFlags& f) {
  sub->add_option("--config", f.config, "key=value file with defaults for these flags; flags win");
  sub->add_option("--n", f.n, "number of Case-4 samples")->capture_default_str();
  sub->add_option("--box", f.box, "box size N of (0,N]^12")->capture_default_str();
  sub->add_option("--seed", f.seed, "RNG seed (fallback: $SONC_MONO_SEED)")->capture_default_str();
  sub->add_option("--threads", f.threads, "worker threads, 0 = all cores")->capture_default_str();
  sub->add_option("--chunk", f.chunk, "draws per work unit")->capture_default_str();
  sub->add_option("--csv", f.csv, "CSV output path, '-' for stdout")->capture_default_str();
  sub->add_option("--json", f.json, "JSON output path, '-' for stdout");
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

void set_if_unset(CLI::Option* opt, const std::string& value) {
  if (opt->count() != 0) return;
  opt->add_result(value);
  try {
    opt->run_callback();
  } catch (const CLI::Error& e) {
    throw UsageError(opt->get_name() + ": " + e.what());
  }
}

// Precedence: command-line flags, then the --config file, then the seed
// environment variable, then built-in defaults.
void apply_defaults(CLI::App* sub, const PlanFlags& f) {
  if (!f.config.empty()) {
    std::istringstream in(read_file(f.config));
    std::string line;
    while (std::getline(in, line)) {
      if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      if (trim(line).empty()) continue;
      const auto eq = line.find('=');
      if (eq == std::string::npos) throw UsageError("config line without '=': " + line);
      const std::string key = trim(line.substr(0, eq));
      auto* opt = key == "config" ? nullptr : sub->get_option_no_throw("--" + key);
      if (!opt) throw UsageError("unknown config key '" + key + "'");
      set_if_unset(opt, trim(line.substr(eq + 1)));
    }
  }
  if (const char* env = std::getenv("SONC_MONO_SEED"); env && *env) {
    set_if_unset(sub->get_option("--seed"), env);
  }
}

SampleSet draw(const PlanFlags& f, std::ostream& err) {
  auto samples = sample_case4(f.plan());
  err << "sampled " << samples.size() << " Case-4 points from " << samples.raw_draws
      << " draws (acceptance " << fixed(samples.acceptance_rate(), 5) << ")\n";
  return samples;
}

void emit_json(const PlanFlags& f, const nlohmann::ordered_json& j, std::ostream& out) {
  emit(f.json, j.dump(2) + "\n", out);
}

int cmd_enumerate(const std::string& points_path, const std::string& interior_text,
                  const std::string& fixture_path, bool check_census, std::ostream& out,
                  std::ostream& err) {
  if (!points_path.empty()) {
    std::vector<LatticePoint> points;
    std::istringstream in(read_file(points_path));
    std::string line;
    while (std::getline(in, line)) {
      if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      const auto v = parse_numbers(line);
      if (v.empty()) continue;
      if (v.size() != 2 || v[0] != std::floor(v[0]) || v[1] != std::floor(v[1])) {
        throw UsageError("point lines need two integers: '" + line + "'");
      }
      points.push_back({static_cast<int>(v[0]), static_cast<int>(v[1])});
    }
    const auto m = parse_numbers(interior_text);
    if (m.size() != 2) throw UsageError("--interior needs two integers");
    const LatticePoint interior{static_cast<int>(m[0]), static_cast<int>(m[1])};
    const auto covers = enumerate_pure_covers(points, interior);
    out << "covers: " << covers.size() << "\n";
    for (const auto& c : covers) out << canonical_key(c) << "\n";
    if (covers.empty()) err << "warning: no pure cover of " << points.size() << " points around " << to_string(interior) << "\n";
    return kExitOk;
  }

  const auto& hp = hexagon_points();
  auto covers = enumerate_pure_covers(hp.positive, hp.negative);
  const CoverFixture fixture =
      fixture_path.empty() ? CoverFixture::builtin() : CoverFixture::parse(read_file(fixture_path));
  label_covers(covers, fixture);
  std::sort(covers.begin(), covers.end(), [](const auto& a, const auto& b) { return a.id() < b.id(); });
  for (const auto& c : covers) out << c.id() << ": " << canonical_key(c) << "\n";
  if (check_census) {
    const auto c = census(covers);
    out << "5-segment: " << c.five_segment << ", special-triangle: " << c.special_triangle
        << ", row-spanning: " << c.row_spanning << "\n";
  }
  const auto diff = compare_with_fixture(covers, fixture);
  for (const auto& k : diff.missing) err << "- " << k << " (fixture only)\n";
  for (const auto& k : diff.unexpected) err << "+ " << k << " (enumerated only)\n";
  if (covers.size() != 16 || !diff.empty()) {
    err << "error: enumeration does not match the cover fixture\n";
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_certify(const std::string& kappa_text, const std::string& eta_text,
                const std::string& file, std::ostream& out) {
  const int given = !kappa_text.empty() + !eta_text.empty() + !file.empty();
  if (given != 1) throw UsageError("give exactly one of --kappa, --eta, --file");
  const auto values = parse_numbers(file.empty() ? (kappa_text.empty() ? eta_text : kappa_text) : read_file(file));

  EtaPoint eta;
  try {
    if (values.size() == 12 && eta_text.empty()) {
      std::array<double, 12> k{};
      std::copy(values.begin(), values.end(), k.begin());
      eta = reduce(KappaVector(k));
    } else if (values.size() == 8 && kappa_text.empty()) {
      std::array<double, 8> e{};
      std::copy(values.begin(), values.end(), e.begin());
      eta = EtaPoint::from_array(e);
    } else {
      throw UsageError("expected 12 kappa or 8 eta values, got " + std::to_string(values.size()));
    }
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }

  const auto cls = classify(eta);
  out << std::setprecision(12);
  out << "eta: K1=" << eta.K1 << " K2=" << eta.K2 << " K3=" << eta.K3 << " K4=" << eta.K4
      << " k3=" << eta.k3 << " k6=" << eta.k6 << " k9=" << eta.k9 << " k12=" << eta.k12 << "\n";
  out << "case: " << to_string(cls.tag) << "\n";
  out << "a: " << cls.a << "\nb: " << cls.b << "\n";
  switch (cls.tag) {
    case SignCase::Case1Monostationary:
      out << "verdict: MONOSTATIONARY (all coefficients nonnegative)\n";
      return kExitOk;
    case SignCase::Case2Multistationary:
      out << "verdict: MULTISTATIONARITY ENABLED\n";
      return kExitMultistationary;
    case SignCase::Case3AZeroBNegative:
      out << "verdict: UNDETERMINED (Case 3 is outside the circuit test)\n";
      return kExitFailure;
    case SignCase::Case4APositiveBNegative:
      break;
  }

  const auto h = case4_coefficients(eta);
  out << "-c_m: " << -h.c_m << "\n";
  bool any = false;
  for (const auto& cover : hexagon_covers()) {
    const double theta = cover_theta_sum(cover, h.coeffs);
    const bool hit = certifies(theta, h.c_m);
    any = any || hit;
    out << "CC(" << cover.id() << "): theta_sum=" << theta << " " << (hit ? "CERTIFIED" : "not certified") << "\n";
  }
  out << "union: " << (any ? "CERTIFIED" : "not certified") << "\n";
  for (int id : {4, 9, 10, 12, 15}) {
    const double bound = closed_form_bound(id, eta);
    out << "closed-form CC(" << id << "): bound=" << bound << " -b=" << -cls.b << " "
        << (-cls.b <= bound ? "CERTIFIED" : "not certified") << "\n";
  }
  out << "verdict: " << (any ? "MONOSTATIONARY (certified)" : "UNDETERMINED") << "\n";
  return any ? kExitOk : kExitFailure;
}

std::vector<int> parse_cover_list(const std::string& text) {
  std::vector<int> ids;
  for (double v : parse_numbers(text)) {
    if (v != std::floor(v) || v < 1 || v > 16) throw UsageError("cover ids must be integers in 1..16");
    ids.push_back(static_cast<int>(v));
  }
  if (ids.size() != 2 && ids.size() != 3) throw UsageError("--covers takes 2 or 3 ids");
  return ids;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"SONC certificates for the dual phosphorylation network", "sonc-mono"};
  app.require_subcommand(1);

  std::string points_path, fixture_path, interior_text = "2,1";
  bool check_census = false;
  auto* enumerate = app.add_subcommand("enumerate", "list the pure circuit covers of the hexagon");
  enumerate->add_option("--points", points_path, "file of 'x z' lines to use instead of the hexagon");
  enumerate->add_option("--interior", interior_text, "interior point for --points")->capture_default_str();
  enumerate->add_option("--fixture", fixture_path, "id fixture file (default: built in)");
  enumerate->add_flag("--check-census", check_census, "print the structural census");

  std::string kappa_text, eta_text, certify_file;
  auto* certify = app.add_subcommand("certify", "classify one parameter point and test every cover");
  certify->add_option("--kappa", kappa_text, "12 rate constants, comma separated");
  certify->add_option("--eta", eta_text, "K1,K2,K3,K4,k3,k6,k9,k12");
  certify->add_option("--file", certify_file, "file with 12 or 8 numbers");

  PlanFlags t1, t2, co, ho;
  auto* table1 = app.add_subcommand("table1", "certified ratio per cover and for the union");
  add_plan_flags(table1, t1);
  int baseline = 9;
  auto* table2 = app.add_subcommand("table2", "samples gained and lost against a baseline cover");
  add_plan_flags(table2, t2);
  table2->add_option("--baseline", baseline, "baseline cover id")->capture_default_str()->check(CLI::Range(1, 16));
  std::uint64_t threshold = 0;
  auto* containment = app.add_subcommand("containment", "containment between certified sets");
  add_plan_flags(containment, co);
  containment->add_option("--threshold", threshold, "violations tolerated by an edge")->capture_default_str();
  std::string covers_text = "4,9", delta_text = "0.05";
  auto* homotopy = app.add_subcommand("homotopy", "ratios along weighted combinations of covers");
  add_plan_flags(homotopy, ho);
  homotopy->add_option("--covers", covers_text, "2 ids (linear) or 3 ids (simplicial)")->capture_default_str();
  homotopy->add_option("--delta", delta_text, "grid step, e.g. 0.05 or 1/16")->capture_default_str();

  bool selftest_json = false;
  auto* selftest = app.add_subcommand("selftest", "run the built-in fixture checks");
  selftest->add_flag("--json", selftest_json, "machine-readable result");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (enumerate->parsed()) {
      return cmd_enumerate(points_path, interior_text, fixture_path, check_census, out, err);
    }
    if (certify->parsed()) return cmd_certify(kappa_text, eta_text, certify_file, out);
    if (table1->parsed()) {
      apply_defaults(table1, t1);
      const auto s = draw(t1, err);
      const auto m = evaluate_covers(s, t1.threads);
      const auto info = RunInfo::of("table1", s);
      emit(t1.csv, table1_csv(info, m), out);
      emit_json(t1, table1_json(info, m), out);
      return kExitOk;
    }
    if (table2->parsed()) {
      apply_defaults(table2, t2);
      const auto s = draw(t2, err);
      const auto m = evaluate_covers(s, t2.threads);
      const auto info = RunInfo::of("table2", s);
      emit(t2.csv, table2_csv(info, m, baseline), out);
      emit_json(t2, table2_json(info, m, baseline), out);
      return kExitOk;
    }
    if (containment->parsed()) {
      apply_defaults(containment, co);
      const auto s = draw(co, err);
      const auto r = containment_analysis(evaluate_covers(s, co.threads), threshold);
      const auto info = RunInfo::of("containment", s);
      emit(co.csv, containment_csv(info, r), out);
      emit_json(co, containment_json(info, r), out);
      return kExitOk;
    }
    if (homotopy->parsed()) {
      apply_defaults(homotopy, ho);
      const auto ids = parse_cover_list(covers_text);
      const double delta = parse_delta(delta_text);
      try {
        grid_steps(delta);
      } catch (const DomainError& e) {
        throw UsageError(e.what());
      }
      const auto s = draw(ho, err);
      const auto curve = ids.size() == 2 ? linear_homotopy(s, ids[0], ids[1], delta, ho.threads)
                                         : simplicial_homotopy(s, ids[0], ids[1], ids[2], delta, ho.threads);
      const auto info = RunInfo::of("homotopy", s);
      emit(ho.csv, homotopy_csv(info, curve), out);
      emit_json(ho, homotopy_json(info, curve), out);
      return kExitOk;
    }
    if (selftest->parsed()) {
      const auto checks = run_selftest();
      bool ok = true;
      nlohmann::ordered_json j = nlohmann::ordered_json::array();
      for (const auto& c : checks) {
        ok = ok && c.passed;
        if (selftest_json) {
          j.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        } else {
          out << (c.passed ? "PASS " : "FAIL ") << c.name << "  " << c.detail << "\n";
        }
      }
      if (selftest_json) out << nlohmann::ordered_json{{"passed", ok}, {"checks", j}}.dump(2) << "\n";
      return ok ? kExitOk : kExitFailure;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace sonc
