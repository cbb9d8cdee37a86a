#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "cantor/asymptotics.hpp"
#include "cantor/bitsums.hpp"
#include "cantor/errors.hpp"
#include "cantor/moments.hpp"
#include "cantor/oracle.hpp"
#include "cantor/orderstats.hpp"
#include "cantor/runs.hpp"

namespace cantor::cli {

namespace {

struct Common {
  std::string kind = "unconstrained";
  std::string theta = "1/3";
  int n = 10;
  int digits = 10;
  std::string format = "csv";
  std::uint64_t seed = 0;
  int max_len = -1;  // -1: use the default enumeration cap
  unsigned jobs = 1;
};

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

template <class T>
Row exact_row(std::string quantity, std::optional<long> index, const T& value, int digits) {
  const DecimalApprox d = approximate(value, digits);
  return {std::move(quantity), index, value.to_string(), d.value, d.error_bound_string()};
}

Row approx_row(std::string quantity, std::optional<long> index, const DecimalApprox& d) {
  return {std::move(quantity), index, "", d.value, d.error_bound_string()};
}

std::string fixed(double v, int digits) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

std::string scientific(double v) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(1) << v;
  return os.str();
}

Rational parse_theta(const std::string& text) {
  if (text.find_first_not_of("0123456789/") != std::string::npos) {
    fail(ErrorCode::invalid_argument, "theta must be an exact fraction p/q, got '" + text + "'");
  }
  const Rational t = Rational::parse(text);
  DistributionParams check(t);
  return t;
}

// Enumeration cap honoring --max-len: lengths up to max_len are always
// allowed, longer ones never.
std::uint64_t enumeration_cap(const Common& c, EnsembleKind kind, unsigned m) {
  if (c.max_len < 0) return kMaxEnumeration;
  if (m > static_cast<unsigned>(c.max_len)) {
    fail(ErrorCode::infeasible_size, "length " + std::to_string(m) + " exceeds --max-len " +
                                         std::to_string(c.max_len));
  }
  const BigInt n = count(kind, m);
  return n.fits_ulong_p() ? std::max<std::uint64_t>(n.get_ui(), kMaxEnumeration)
                          : kMaxEnumeration;
}

void add_common(CLI::App* app, Common& c) {
  app->add_option("--kind", c.kind, "unconstrained (cantor) | solus | multus")
      ->check(CLI::IsMember({"unconstrained", "cantor", "solus", "multus"}));
  app->add_option("--theta", c.theta, "theta as an exact fraction p/q, 0 < theta <= 1/2");
  app->add_option("--n", c.n, "table size or string length")->check(CLI::NonNegativeNumber);
  app->add_option("--digits", c.digits, "decimal digits")->check(CLI::Range(1, 50));
  app->add_option("--format", c.format)->check(CLI::IsMember({"csv", "json"}));
  app->add_option("--seed", c.seed, "random seed");
  app->add_option("--max-len", c.max_len, "enumeration length guard / oracle range")
      ->check(CLI::NonNegativeNumber);
  app->add_option("--jobs", c.jobs, "worker threads for parallel paths")
      ->check(CLI::PositiveNumber);
}

class Runner {
 public:
  Runner(Common& c, std::ostream& err) : c_(c), err_(err) {}

  OutputRecord moments(std::optional<unsigned> length, const std::string& method, bool use_float) {
    OutputRecord r = start("moments");
    const Rational theta = parse_theta(c_.theta);
    const EnsembleKind kind = parse_kind(c_.kind);
    if (length) {
      r.parameters["length"] = std::to_string(*length);
      r.parameters["method"] = method;
      const auto mu = method == "enumeration"
                          ? empirical_moments(kind, theta, *length, c_.n,
                                              enumeration_cap(c_, kind, *length))
                          : finite_moments(kind, theta, *length, c_.n);
      for (std::size_t i = 0; i < mu.size(); ++i) {
        r.rows.push_back(exact_row("mu", static_cast<long>(i), mu[i], c_.digits));
      }
      return r;
    }
    if (use_float) {
      r.parameters["float"] = "true";
      if (kind == EnsembleKind::multus) {
        fail(ErrorCode::unsupported, "floating moments are available for cantor and solus");
      }
      const auto mu = kind == EnsembleKind::solus ? solus_moments_real(theta, c_.n)
                                                  : cantor_moments_real(theta, c_.n);
      const Real rel = Real(4) * c_.n * c_.n * pow(Real(10), -(kRealDigits - 1));
      for (std::size_t i = 0; i < mu.size(); ++i) {
        r.rows.push_back(
            approx_row("mu", static_cast<long>(i), approximate(mu[i], mu[i] * rel, c_.digits)));
      }
      return r;
    }
    switch (kind) {
      case EnsembleKind::unconstrained:
        emit_moments(r, cantor_moments(theta, c_.n, c_.digits));
        break;
      case EnsembleKind::solus:
        emit_moments(r, solus_moments(theta, c_.n, c_.digits));
        break;
      case EnsembleKind::multus:
        emit_moments(r, multus_moments(theta, c_.n, c_.digits));
        break;
    }
    return r;
  }

  OutputRecord order_stats(bool monte_carlo, std::uint64_t samples, unsigned prefix,
                           bool use_float, const std::vector<int>& window) {
    OutputRecord r = start("order-stats");
    const Rational theta = parse_theta(c_.theta);
    const EnsembleKind kind = parse_kind(c_.kind);
    if (kind == EnsembleKind::multus) {
      fail(ErrorCode::unsupported, "order statistics are available for cantor and solus");
    }
    if (c_.n < 1) fail(ErrorCode::invalid_argument, "--n must be >= 1");
    if (monte_carlo) {
      r.parameters["samples"] = std::to_string(samples);
      r.parameters["prefix"] = std::to_string(prefix);
      r.parameters["monte_carlo"] = "true";
      const MonteCarloConfig cfg{samples, prefix, c_.seed, c_.jobs};
      for (int n = 1; n <= c_.n; ++n) {
        for (const auto which : {Extreme::min, Extreme::max}) {
          const auto est = monte_carlo_order_stat(kind, theta, n, which, cfg);
          r.rows.push_back({which == Extreme::min ? "xi" : "eta", n, "",
                            fixed(est.estimate, c_.digits), scientific(est.standard_error)});
        }
      }
      return r;
    }
    if (!window.empty()) {
      r.parameters["window"] = std::to_string(window[0]) + ":" + std::to_string(window[1]);
      const auto stats = kind == EnsembleKind::solus ? solus_order_stats_real(theta, window[1])
                                                     : cantor_order_stats_real(theta, window[1]);
      const Real t = to_real(theta);
      const Real base = kind == EnsembleKind::solus ? log(golden_mean()) : log(Real(2));
      const Real exponent = -log(t) / base;
      const Real top = kind == EnsembleKind::solus ? 1 / (1 + t) : Real(1);
      std::vector<Real> gap;
      for (const auto& e : stats.eta) gap.push_back(top - e);
      const Real err = pow(Real(10), -(kRealDigits - 12));
      r.rows.push_back(approx_row(
          "xi-scaled", std::nullopt,
          approximate(window_average(stats.xi, exponent, window[0], window[1]), err, c_.digits)));
      r.rows.push_back(approx_row(
          "eta-gap-scaled", std::nullopt,
          approximate(window_average(gap, exponent, window[0], window[1]), err, c_.digits)));
      return r;
    }
    if (use_float) {
      r.parameters["float"] = "true";
      const auto stats = kind == EnsembleKind::solus ? solus_order_stats_real(theta, c_.n)
                                                     : cantor_order_stats_real(theta, c_.n);
      const Real rel = Real(4) * c_.n * c_.n * pow(Real(10), -(kRealDigits - 1));
      for (int n = 1; n <= c_.n; ++n) {
        const auto& x = stats.xi[static_cast<std::size_t>(n - 1)];
        const auto& e = stats.eta[static_cast<std::size_t>(n - 1)];
        r.rows.push_back(approx_row("xi", n, approximate(x, x * rel, c_.digits)));
        r.rows.push_back(approx_row("eta", n, approximate(e, e * rel, c_.digits)));
      }
      return r;
    }
    if (kind == EnsembleKind::solus) {
      emit_order_stats(r, solus_order_stats(theta, c_.n));
    } else {
      emit_order_stats(r, cantor_order_stats(theta, c_.n));
    }
    return r;
  }

  OutputRecord bitsums(bool limit, std::optional<unsigned> length) {
    OutputRecord r = start("bitsums");
    const EnsembleKind kind = parse_kind(c_.kind);
    if (length) {
      r.parameters["length"] = std::to_string(*length);
      const auto e = empirical_bitsum(kind, *length, enumeration_cap(c_, kind, *length));
      r.rows.push_back(exact_row("total", *length, Rational(e.total), c_.digits));
      r.rows.push_back(exact_row("total_sq", *length, Rational(e.total_sq), c_.digits));
      r.rows.push_back(exact_row("mean", *length, e.mean, c_.digits));
      r.rows.push_back(exact_row("variance", *length, e.variance, c_.digits));
      return r;
    }
    if (limit) {
      r.parameters["limit"] = "true";
      const DensityLimit d = bitsum_density(kind, c_.digits);
      r.rows.push_back({"mean_density", std::nullopt, to_string(d.mean_density),
                        d.mean_decimal.value, d.mean_decimal.error_bound_string()});
      r.rows.push_back({"variance_density", std::nullopt, to_string(d.variance_density),
                        d.variance_decimal.value, d.variance_decimal.error_bound_string()});
      return r;
    }
    const BitsumSeries s = bitsum_series(kind, c_.n);
    for (int n = 0; n <= c_.n; ++n) {
      const auto i = static_cast<std::size_t>(n);
      for (const auto& [name, series] :
           {std::pair{"a", &s.a}, {"b", &s.b}, {"c", &s.c}, {"count", &s.counts}}) {
        r.rows.push_back({name, n, (*series)[i].to_string(), "", ""});
      }
    }
    return r;
  }

  OutputRecord runs(int bit, std::optional<int> no_run_k, std::optional<unsigned> length) {
    OutputRecord r = start("runs");
    r.parameters["bit"] = std::to_string(bit);
    const EnsembleKind kind = parse_kind(c_.kind);
    if (length) {
      r.parameters["length"] = std::to_string(*length);
      r.rows.push_back(exact_row(
          "expectation", *length,
          empirical_longest_run(kind, bit, *length, enumeration_cap(c_, kind, *length)),
          c_.digits));
      return r;
    }
    if (no_run_k) {
      r.parameters["no_run_k"] = std::to_string(*no_run_k);
      const RationalGF g = no_run_gf(kind, bit, *no_run_k);
      r.parameters["gf"] = g.to_string();
      const Series s = gf_coefficients(g, c_.n);
      for (int n = 0; n <= c_.n; ++n) {
        r.rows.push_back({"count", n, s[static_cast<std::size_t>(n)].to_string(), "", ""});
      }
      return r;
    }
    const RunTable t = expected_longest_run(kind, bit, c_.n);
    for (int n = 0; n <= c_.n; ++n) {
      const auto i = static_cast<std::size_t>(n);
      r.rows.push_back({"numerator", n, t.numerators[i].to_string(), "", ""});
      r.rows.push_back(exact_row("expectation", n, t.expectations[i], c_.digits));
    }
    return r;
  }

  OutputRecord constants(const std::string& name, const std::string& s_text) {
    OutputRecord r = start("constants");
    if (!name.empty()) r.parameters["name"] = name;
    const auto want = [&](const char* n) { return name.empty() || name == n; };
    const auto add = [&](const AsymptoticConstant& k) {
      r.rows.push_back(approx_row(k.name, std::nullopt, k.value));
      err_ << "# " << k.name << ": " << k.method << "; error bound "
           << k.value.error_bound_string();
      for (const auto& [key, value] : k.parameters) err_ << ", " << key << "=" << value;
      err_ << "\n";
    };
    if (want("cantor-moment")) add(cantor_moment_constant(std::min(c_.digits, 12)));
    if (want("cantor-min")) add(cantor_min_constant(std::min(c_.digits, 30)));
    if (want("moment-sum")) add(cantor_moment_sum(std::min(c_.digits, 12)));
    if (want("solus-moment")) add(solus_moment_constant(std::min(c_.digits, 8)));
    if (want("phi")) {
      r.rows.push_back(exact_row("phi", std::nullopt, QuadElement::generator(), c_.digits));
    }
    if (want("psi")) {
      r.rows.push_back(exact_row("psi", std::nullopt, CubicElement::generator(), c_.digits));
    }
    if (name == "gamma" || name == "zeta") {
      const Rational s = Rational::parse(s_text);
      r.parameters["s"] = s.to_string();
      const DecimalApprox v =
          name == "gamma" ? gamma_fn(to_real(s), c_.digits) : zeta_fn(to_real(s), c_.digits);
      r.rows.push_back(approx_row(name, std::nullopt, v));
    }
    if (name == "run-asymptotic") {
      r.rows.push_back(approx_row(name, c_.n, unconstrained_run_asymptotic(c_.n, c_.digits)));
    }
    if (r.rows.empty()) fail(ErrorCode::invalid_argument, "unknown constant '" + name + "'");
    return r;
  }

  OutputRecord sample(unsigned how_many) {
    OutputRecord r = start("sample");
    r.parameters["count"] = std::to_string(how_many);
    const EnsembleKind kind = parse_kind(c_.kind);
    const DistributionParams params(parse_theta(c_.theta));
    const UniformSampler sampler(kind, static_cast<unsigned>(c_.n));
    std::mt19937_64 rng(c_.seed);
    BitString s;
    for (unsigned i = 0; i < how_many; ++i) {
      sampler.draw(rng, s);
      const DecimalApprox f = approximate(f_value(params, s), c_.digits);
      r.rows.push_back({"sample", i, s.to_string(), f.value, f.error_bound_string()});
    }
    return r;
  }

  OutputRecord enumerate_members() {
    OutputRecord r = start("enumerate");
    const EnsembleKind kind = parse_kind(c_.kind);
    const auto m = static_cast<unsigned>(c_.n);
    const DistributionParams params(parse_theta(c_.theta));
    long i = 0;
    for_each_member(
        kind, m,
        [&](const BitString& s) {
          const DecimalApprox f = approximate(f_value(params, s), c_.digits);
          r.rows.push_back({"member", i++, s.to_string(), f.value, f.error_bound_string()});
        },
        enumeration_cap(c_, kind, m));
    return r;
  }

  OutputRecord fib_word(bool show_prefix) {
    OutputRecord r = start("fib-word");
    const auto n = static_cast<std::size_t>(c_.n);
    const BitString w = fibonacci_word(n);
    if (show_prefix) r.rows.push_back({"prefix", static_cast<long>(n), w.to_string(), "", ""});
    r.rows.push_back({"is_solus", static_cast<long>(n),
                      is_member(EnsembleKind::solus, w) ? "1" : "0", "", ""});
    const Rational ones(static_cast<long>(w.popcount()));
    r.rows.push_back(exact_row("ones", static_cast<long>(n), ones, c_.digits));
    if (n > 0) {
      r.rows.push_back(exact_row("density", static_cast<long>(n),
                                 ones / Rational(static_cast<long>(n)), c_.digits));
    }
    r.rows.push_back(exact_row("limit", std::nullopt, QuadElement(2, -1), c_.digits));
    return r;
  }

  OutputRecord verify(const std::string& suite, int& status) {
    OutputRecord r = start("verify");
    r.parameters["suite"] = suite;
    const unsigned range = c_.max_len < 0 ? 16U : static_cast<unsigned>(c_.max_len);
    std::vector<OracleCheck> checks;
    if (suite == "oracle" || suite == "all") {
      checks = oracle_suite(range, parse_theta(c_.theta));
    }
    if (suite == "counts" || suite == "all") {
      auto more = count_suite(30);
      checks.insert(checks.end(), more.begin(), more.end());
    }
    for (const auto& c : checks) {
      r.rows.push_back({c.name + ":" + to_string(c.kind), static_cast<long>(c.length),
                        c.passed ? "pass" : "fail", "", ""});
      if (!c.passed) {
        err_ << "FAIL " << c.name << " " << to_string(c.kind) << " m=" << c.length << ": "
             << c.detail << "\n";
      }
    }
    status = all_passed(checks) ? kOk : kCheckFailed;
    return r;
  }

 private:
  OutputRecord start(std::string command) {
    OutputRecord r;
    r.command = std::move(command);
    r.seed = c_.seed;
    r.parameters = {{"kind", c_.kind}, {"theta", c_.theta},  {"n", std::to_string(c_.n)},
                    {"digits", std::to_string(c_.digits)}, {"format", c_.format}};
    if (c_.max_len >= 0) r.parameters["max_len"] = std::to_string(c_.max_len);
    return r;
  }

  template <class F>
  void emit_moments(OutputRecord& r, const MomentTable<F>& t) {
    for (std::size_t i = 0; i < t.size(); ++i) {
      r.rows.push_back({"mu", static_cast<long>(i), t.values[i].to_string(), t.decimals[i].value,
                        t.decimals[i].error_bound_string()});
    }
    if (t.size() > 2) {
      r.rows.push_back(exact_row("variance", std::nullopt, t.values[2] - t.values[1] * t.values[1],
                                 c_.digits));
    }
  }

  template <class F>
  void emit_order_stats(OutputRecord& r, const OrderStatTable<F>& t) {
    for (int n = 1; n <= t.size(); ++n) {
      r.rows.push_back(exact_row("xi", n, t.xi(n), c_.digits));
      r.rows.push_back(exact_row("eta", n, t.eta(n), c_.digits));
    }
  }

  Common& c_;
  std::ostream& err_;
};

}  // namespace

std::string to_csv(const OutputRecord& record) {
  std::ostringstream os;
  os << "quantity,index,exact,decimal,error_bound\n";
  for (const auto& row : record.rows) {
    os << csv_escape(row.quantity) << ','
       << (row.index ? std::to_string(*row.index) : std::string()) << ','
       << csv_escape(row.exact) << ',' << row.decimal << ',' << row.error_bound << '\n';
  }
  return os.str();
}

std::string to_json(const OutputRecord& record) {
  nlohmann::ordered_json j;
  j["command"] = record.command;
  j["parameters"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : record.parameters) j["parameters"][k] = v;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : record.rows) {
    nlohmann::ordered_json o;
    o["quantity"] = row.quantity;
    o["index"] = row.index ? nlohmann::ordered_json(*row.index) : nlohmann::ordered_json();
    o["exact"] = row.exact;
    o["decimal"] = row.decimal;
    o["error_bound"] = row.error_bound;
    j["rows"].push_back(std::move(o));
  }
  j["metadata"] = {{"version", CANTORSTAT_VERSION}, {"seed", record.seed}};
  return j.dump(2) + "\n";
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact moments, order statistics and run statistics of Cantor-type "
               "distributions on bitstring ensembles",
               "cantorstat"};
  app.require_subcommand(1);
  Common c;

  std::optional<unsigned> length;
  std::string method = "recursion";
  bool use_float = false;
  auto* moments = app.add_subcommand("moments", "limiting or finite-length moments mu_n");
  add_common(moments, c);
  moments->add_option("--length", length, "finite string length instead of the limit");
  moments->add_option("--method", method)->check(CLI::IsMember({"recursion", "enumeration"}));
  moments->add_flag("--float", use_float, "64-digit floating recurrence");

  bool monte_carlo = false;
  std::uint64_t samples = 100'000;
  unsigned prefix = 40;
  std::vector<int> window;
  auto* order = app.add_subcommand("order-stats", "expected minimum xi_n and maximum eta_n");
  add_common(order, c);
  order->add_flag("--monte-carlo", monte_carlo, "estimate by simulation");
  order->add_option("--samples", samples)->check(CLI::Range(1000, 100'000'000));
  order->add_option("--prefix", prefix)->check(CLI::Range(1, 64));
  order->add_flag("--float", use_float, "64-digit floating recurrence");
  order->add_option("--window", window, "LO HI: averages of the scaled gaps over [LO, HI]")
      ->expected(2);

  bool limit = false;
  auto* bitsums = app.add_subcommand("bitsums", "total bitsum series and density limits");
  add_common(bitsums, c);
  bitsums->add_flag("--limit", limit, "limiting density and variance per bit");
  bitsums->add_option("--length", length, "exhaustive totals at one length");

  int bit = 1;
  std::optional<int> no_run_k;
  auto* runs = app.add_subcommand("runs", "expected longest run of a bit");
  add_common(runs, c);
  runs->add_option("--bit", bit)->check(CLI::IsMember({0, 1}));
  runs->add_option("--no-run", no_run_k, "coefficients of the no-run-of-k series")
      ->check(CLI::PositiveNumber);
  runs->add_option("--length", length, "exhaustive average at one length");

  std::string name;
  std::string s_text = "2";
  auto* constants = app.add_subcommand("constants", "asymptotic constants");
  add_common(constants, c);
  constants->add_option("--name", name)->check(CLI::IsMember(
      {"cantor-moment", "cantor-min", "moment-sum", "solus-moment", "phi", "psi", "gamma", "zeta",
       "run-asymptotic"}));
  constants->add_option("--s", s_text, "argument of gamma/zeta as p/q");

  unsigned how_many = 1;
  auto* sample = app.add_subcommand("sample", "uniform random members");
  add_common(sample, c);
  sample->add_option("--count", how_many);

  auto* enumerate = app.add_subcommand("enumerate", "all members of one length");
  add_common(enumerate, c);

  bool show_prefix = false;
  auto* fib = app.add_subcommand("fib-word", "Fibonacci word prefix statistics");
  add_common(fib, c);
  fib->add_flag("--show-prefix", show_prefix, "print the prefix itself");

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "oracle equivalence checks");
  add_common(verify, c);
  verify->add_option("--suite", suite)->check(CLI::IsMember({"oracle", "counts", "all"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const auto t0 = std::chrono::steady_clock::now();
  Runner runner(c, err);
  int status = kOk;
  try {
    OutputRecord record;
    if (moments->parsed()) {
      record = runner.moments(length, method, use_float);
    } else if (order->parsed()) {
      if (!window.empty() && (window[0] < 1 || window[0] > window[1])) {
        fail(ErrorCode::invalid_argument, "--window needs 1 <= LO <= HI");
      }
      record = runner.order_stats(monte_carlo, samples, prefix, use_float, window);
    } else if (bitsums->parsed()) {
      record = runner.bitsums(limit, length);
    } else if (runs->parsed()) {
      record = runner.runs(bit, no_run_k, length);
    } else if (constants->parsed()) {
      record = runner.constants(name, s_text);
    } else if (sample->parsed()) {
      record = runner.sample(how_many);
    } else if (enumerate->parsed()) {
      record = runner.enumerate_members();
    } else if (fib->parsed()) {
      record = runner.fib_word(show_prefix);
    } else {
      record = runner.verify(suite, status);
    }
    out << (c.format == "json" ? to_json(record) : to_csv(record));
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    err << "# " << record.command << ": " << record.rows.size() << " rows in " << fixed(seconds, 3)
        << " s\n";
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::infeasible_size ? kInfeasible : kUsage;
  }
  return status;
}

}  // namespace cantor::cli
