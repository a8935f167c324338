#include "modrecip/cli.hpp"

#include "modrecip/bench.hpp"
#include "modrecip/core.hpp"
#include "modrecip/gaussian.hpp"
#include "modrecip/identities.hpp"
#include "modrecip/reciprocity.hpp"
#include "modrecip/sweep.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>
#include <thread>

namespace modrecip::cli {
namespace {

using Json = nlohmann::ordered_json;

// Arbitrary-precision values are emitted as decimal strings.
std::string js(const Integer& x) { return to_string(x); }
std::string js(const GaussianInteger& z) { return to_string(z); }

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Integer parse_int_arg(const std::string& text, const char* name) {
  auto v = parse_integer(text);
  if (!v) throw UsageError(std::string("invalid integer for ") + name + ": '" + text + "'");
  return *v;
}

GaussianInteger parse_gauss_arg(const std::string& text, const char* name) {
  auto v = parse_gaussian(text);
  if (!v) throw UsageError(std::string("invalid Gaussian integer for ") + name + ": '" + text + "'");
  return *v;
}

struct Globals {
  bool json = false;
  std::optional<std::uint64_t> seed;
};

void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

std::string bool_text(bool b) { return b ? "true" : "false"; }

// ---------------------------------------------------------------- inv

struct InvArgs {
  std::string a, m;
  bool classical = false;
  std::string method = "extgcd";
};

int cmd_inv(const InvArgs& args, const Globals& g, std::ostream& out) {
  const Integer a = parse_int_arg(args.a, "a");
  const Integer m = parse_int_arg(args.m, "m");

  InverseOutcome inv = Failure::Domain;
  if (args.method == "extgcd") {
    inv = mod_inverse(a, m);
  } else if (args.method == "reciprocity") {
    inv = inverse_via_reciprocity(a, m);
  } else {
    if (abs(m) > (Integer(1) << 20)) throw UsageError("brute force is limited to |m| <= 2^20");
    inv = is_unit(m) ? mod_inverse(a, m) : brute_force_inverse(a, m);
  }
  const Integer& x = inv.value();
  const Integer classical = classical_inverse(a, m).value();

  if (g.json) {
    emit(out, Json{{"a", js(a)}, {"m", js(m)}, {"inverse", js(x)}, {"classical", js(classical)},
                   {"method", args.method}});
  } else if (args.classical) {
    out << x << " (classical: " << classical << ")\n";
  } else {
    out << x << '\n';
  }
  return kSuccess;
}

int cmd_classical_inv(const std::string& a_text, const std::string& m_text, const Globals& g,
                      std::ostream& out) {
  const Integer a = parse_int_arg(a_text, "a");
  const Integer m = parse_int_arg(m_text, "m");
  const Integer x = classical_inverse(a, m).value();
  if (g.json) {
    emit(out, Json{{"a", js(a)}, {"m", js(m)}, {"classical", js(x)}});
  } else {
    out << x << '\n';
  }
  return kSuccess;
}

// ---------------------------------------------------------------- recip

int cmd_recip(const std::string& a_text, const std::string& b_text, const Globals& g, std::ostream& out) {
  const Integer a = parse_int_arg(a_text, "a");
  const Integer b = parse_int_arg(b_text, "b");
  const ReciprocityReport r = reciprocity_check(a, b);
  if (g.json) {
    emit(out, Json{{"a", js(r.a)}, {"b", js(r.b)}, {"inv_a_mod_b", js(r.inv_a_mod_b)},
                   {"inv_b_mod_a", js(r.inv_b_mod_a)}, {"lhs", js(r.lhs)}, {"rhs", js(r.rhs)},
                   {"k", js(r.k)}, {"holds", r.holds}});
  } else {
    out << "a=" << r.a << " b=" << r.b << '\n'
        << "inv_a_mod_b=" << r.inv_a_mod_b << " inv_b_mod_a=" << r.inv_b_mod_a << '\n'
        << "lhs=" << r.lhs << " rhs=" << r.rhs << " k=" << r.k << " holds=" << bool_text(r.holds) << '\n';
  }
  return r.holds ? kSuccess : kViolation;
}

// ---------------------------------------------------------------- identities

int cmd_reduce(const std::string& a_text, const std::string& b_text, const std::string& k_text,
               bool minus, bool classical, const Globals& g, std::ostream& out) {
  const Integer a = parse_int_arg(a_text, "a");
  const Integer b = parse_int_arg(b_text, "b");
  const Integer k = parse_int_arg(k_text, "k");
  const Integer modulus = minus ? Integer(k * a - b) : Integer(k * a + b);
  auto reduce = [&](UnitConvention conv) {
    return minus ? reduce_inverse_minus(a, b, k, conv) : reduce_inverse_plus(a, b, k, conv);
  };
  const Integer x = reduce(UnitConvention::Extended);
  if (g.json) {
    Json j{{"a", js(a)}, {"b", js(b)}, {"k", js(k)}, {"form", minus ? "k*a-b" : "k*a+b"},
           {"modulus", js(modulus)}, {"inverse", js(x)}};
    if (classical) j["classical_replay"] = js(reduce(UnitConvention::Classical));
    emit(out, j);
  } else {
    out << "modulus=" << modulus << " inverse=" << x;
    if (classical) out << " (classical replay: " << reduce(UnitConvention::Classical) << ')';
    out << '\n';
  }
  return kSuccess;
}

int cmd_square_inv(const std::string& a_text, const std::string& b_text, const Globals& g,
                   std::ostream& out) {
  const Integer a = parse_int_arg(a_text, "a");
  const Integer b = parse_int_arg(b_text, "b");
  const SquareInverse f = square_inverse_forms(a, b);
  const Integer x = square_inverse(a, b);
  const Integer modulus = a * a;
  if (g.json) {
    emit(out, Json{{"a", js(a)}, {"b", js(b)}, {"modulus", js(modulus)}, {"inverse", js(x)},
                   {"form_square", js(f.form_square)}, {"form_cubic", js(f.form_cubic)}});
  } else {
    out << "modulus=" << modulus << " inverse=" << x << " form_square=" << f.form_square
        << " form_cubic=" << f.form_cubic << '\n';
  }
  return kSuccess;
}

Json quad_json(const QuadPairReport& r, bool with_sums) {
  auto arr = [](const auto& xs) {
    Json j = Json::array();
    for (const auto& x : xs) j.push_back(js(x));
    return j;
  };
  Json j{{"a", js(r.a)}, {"b", js(r.b)}, {"c", js(r.c)}, {"d", js(r.d)},
         {"u", js(r.u)}, {"v", js(r.v)}, {"s", js(r.s)}, {"t", js(r.t)},
         {"x", arr(r.x)}, {"y", arr(r.y)}, {"z", arr(r.z)},
         {"pass_inverse_pairs", r.pass_inverse_pairs},
         {"pass_exact_identities", r.pass_exact_identities}};
  if (with_sums) {
    j["inv_s_mod_u"] = js(r.inv_s_mod_u);
    j["inv_t_mod_u"] = js(r.inv_t_mod_u);
    j["inv_s_mod_v"] = js(r.inv_s_mod_v);
    j["inv_t_mod_v"] = js(r.inv_t_mod_v);
    j["pass_sum_of_squares"] = r.pass_sum_of_squares;
  }
  return j;
}

void print_quad(const QuadPairReport& r, bool with_sums, std::ostream& out) {
  out << "u=" << r.u << " v=" << r.v << " s=" << r.s << " t=" << r.t << '\n';
  for (std::size_t i = 0; i < 4; ++i) {
    out << 'x' << i + 1 << '=' << r.x[i] << " y" << i + 1 << '=' << r.y[i]
        << " pass=" << bool_text(r.pass_inverse_pairs[i]) << '\n';
  }
  out << "z1=" << r.z[0] << " z2=" << r.z[1] << " z3=" << r.z[2] << '\n';
  out << "exact identities:";
  for (bool p : r.pass_exact_identities) out << ' ' << bool_text(p);
  out << '\n';
  if (with_sums) {
    out << "inv_s_mod_u=" << r.inv_s_mod_u << " inv_t_mod_u=" << r.inv_t_mod_u
        << " inv_s_mod_v=" << r.inv_s_mod_v << " inv_t_mod_v=" << r.inv_t_mod_v << '\n';
    out << "sum-of-squares checks:";
    for (bool p : r.pass_sum_of_squares) out << ' ' << bool_text(p);
    out << '\n';
  }
}

int cmd_quad(const std::vector<std::string>& xs, bool sums, const Globals& g, std::ostream& out) {
  const Integer a = parse_int_arg(xs[0], "a"), b = parse_int_arg(xs[1], "b");
  const Integer c = parse_int_arg(xs[2], "c"), d = parse_int_arg(xs[3], "d");
  const QuadPairReport r = sums ? sum_of_squares_inverses(a, b, c, d) : quad_pair_inverses(a, b, c, d);
  if (g.json) {
    emit(out, quad_json(r, sums));
  } else {
    print_quad(r, sums, out);
  }
  const bool ok = r.all_inverse_pairs_pass() && r.all_exact_identities_pass() &&
                  (!sums || r.all_sum_of_squares_pass());
  return ok ? kSuccess : kViolation;
}

// ---------------------------------------------------------------- gaussian

int cmd_gauss_inv(const std::string& z_text, const std::string& w_text, const Globals& g,
                  std::ostream& out) {
  const GaussianInteger z = parse_gauss_arg(z_text, "z");
  const GaussianInteger w = parse_gauss_arg(w_text, "w");
  const GaussianInverse inv = gaussian_inverse(z, w);
  if (g.json) {
    emit(out, Json{{"z", js(z)}, {"w", js(w)}, {"representative", js(inv.representative)},
                   {"canonical", js(inv.canonical)}});
  } else {
    out << "representative=" << to_string(inv.representative) << '\n'
        << "canonical=" << to_string(inv.canonical) << '\n';
  }
  return kSuccess;
}

int cmd_gauss_linear_inv(const std::string& a_text, const std::string& b_text, const Globals& g,
                         std::ostream& out) {
  const Integer a = parse_int_arg(a_text, "a");
  const Integer b = parse_int_arg(b_text, "b");
  const GaussianInteger x = inverse_mod_gaussian_linear(a, b);
  const GaussianInteger modulus{b, a};
  if (g.json) {
    emit(out, Json{{"a", js(a)}, {"b", js(b)}, {"modulus", js(modulus)}, {"inverse", js(x)}});
  } else {
    out << "modulus=" << to_string(modulus) << " inverse=" << to_string(x) << '\n';
  }
  return kSuccess;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::optional<std::int64_t> bound;
  std::optional<int> shards;
  std::string config_path;
  bool serial = false;
  bool classical_unit = false;
};

int cmd_verify(const VerifyArgs& args, const Globals& g, std::ostream& out) {
  sweep::SweepConfig config;
  config.shard_count = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  if (!args.config_path.empty()) {
    std::ifstream in(args.config_path);
    if (!in) throw UsageError("cannot read config file '" + args.config_path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      sweep::apply_config_text(config, buf.str());
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  if (args.bound) config.apply_global_bound(*args.bound);
  if (args.shards) config.shard_count = *args.shards;
  if (args.classical_unit) config.convention = UnitConvention::Classical;
  try {
    config.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  const auto exec = args.serial ? sweep::Execution::Serial : sweep::Execution::Parallel;
  const std::vector<sweep::SuiteResult> results = sweep::run_all(config, exec);
  const bool all_pass = std::ranges::all_of(results, [](const auto& r) { return r.passed(); });
  const bool confined = std::ranges::all_of(results, [](const auto& r) { return r.violations_confined_to_unit(); });
  const bool classical = config.convention == UnitConvention::Classical;

  if (g.json) {
    Json suites = Json::array();
    for (const auto& r : results) {
      Json j{{"name", r.name}, {"cases", r.cases}, {"violations", r.violations},
             {"unit_cases", r.unit_cases}, {"unit_violations", r.unit_violations}, {"passed", r.passed()}};
      if (r.counterexample) j["counterexample"] = *r.counterexample;
      suites.push_back(std::move(j));
    }
    emit(out, Json{{"convention", classical ? "classical" : "extended"}, {"bound", config.bound},
                   {"passed", all_pass}, {"violations_confined_to_unit_modulus", confined},
                   {"suites", std::move(suites)}});
  } else {
    out << std::left << std::setw(26) << "suite" << std::right << std::setw(10) << "cases"
        << std::setw(12) << "violations" << std::setw(12) << "unit-cases" << "  result\n";
    for (const auto& r : results) {
      out << std::left << std::setw(26) << r.name << std::right << std::setw(10) << r.cases
          << std::setw(12) << r.violations << std::setw(12) << r.unit_cases << "  "
          << (r.passed() ? "PASS" : "FAIL") << '\n';
      if (r.counterexample) out << "    counterexample: " << *r.counterexample << '\n';
    }
    if (all_pass) {
      out << "all " << results.size() << " suites passed\n";
    } else {
      std::uint64_t total = 0;
      for (const auto& r : results) total += r.violations;
      out << total << " violations";
      if (classical) {
        out << (confined ? "; every violation involves an inverse modulo +-1"
                         : "; some violations do not involve a unit modulus");
      }
      out << '\n';
    }
  }
  return all_pass ? kSuccess : kViolation;
}

// ---------------------------------------------------------------- bench

int cmd_bench(int bits, std::uint64_t iters, const Globals& g, std::ostream& out, std::ostream& err) {
  BenchOptions opts;
  opts.bit_width = bits;
  opts.iterations = iters;
  opts.seed = g.seed ? *g.seed : std::random_device{}();
  BenchReport report;
  try {
    report = run_inversion_bench(opts);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (!report.consistent()) {
    err << "error: reciprocity and extended-gcd inverses disagree on " << report.iterations - report.agreement_count
        << " of " << report.iterations << " trials (first: " << report.first_disagreement.value_or("?")
        << ", seed " << report.seed << ")\n";
    return kViolation;
  }
  if (g.json) {
    emit(out, Json{{"bit_width", report.bit_width}, {"iterations", report.iterations}, {"seed", report.seed},
                   {"median_ns_reciprocity", report.median_ns_reciprocity},
                   {"median_ns_ext_gcd", report.median_ns_ext_gcd},
                   {"agreement_count", report.agreement_count}});
  } else {
    out << "bit_width=" << report.bit_width << " iterations=" << report.iterations << " seed=" << report.seed << '\n'
        << "median_ns_reciprocity=" << report.median_ns_reciprocity << '\n'
        << "median_ns_ext_gcd=" << report.median_ns_ext_gcd << '\n'
        << "agreement_count=" << report.agreement_count << '\n';
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Signed modular inverses, the reciprocity formula and its identities"};
  app.name(args.empty() ? "modrecip" : args.front());
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_flag("--json", g.json, "Emit JSON");
  std::uint64_t seed_value = 0;
  auto* seed_opt = app.add_option("--seed", seed_value, "Seed for random generation (bench)");

  InvArgs inv;
  auto* inv_cmd = app.add_subcommand("inv", "(a^-1)_m with the signed window and unit-modulus closed form");
  inv_cmd->add_option("a", inv.a)->required();
  inv_cmd->add_option("m", inv.m)->required();
  inv_cmd->add_flag("--classical", inv.classical, "Also print the classical value");
  inv_cmd->add_option("--method", inv.method, "extgcd, reciprocity or brute")
      ->check(CLI::IsMember({"extgcd", "reciprocity", "brute"}));

  std::string ca, cm;
  auto* cinv_cmd = app.add_subcommand("classical-inv", "Classical inverse in [0, |m|-1]; 0 for |m| = 1");
  cinv_cmd->add_option("a", ca)->required();
  cinv_cmd->add_option("m", cm)->required();

  std::string ra, rb;
  auto* recip_cmd = app.add_subcommand("recip", "Check a*(a^-1)_b + b*(b^-1)_a = 1 + a*b");
  recip_cmd->add_option("a", ra)->required();
  recip_cmd->add_option("b", rb)->required();

  std::string da, db, dk;
  bool minus = false;
  auto* reduce_cmd = app.add_subcommand("reduce", "(a^-1)_{k*a+b} (or k*a-b with --minus) by reduction");
  reduce_cmd->add_option("a", da)->required();
  reduce_cmd->add_option("b", db)->required();
  reduce_cmd->add_option("k", dk)->required();
  reduce_cmd->add_flag("--minus", minus, "Use the modulus k*a - b");
  bool reduce_classical = false;
  reduce_cmd->add_flag("--classical", reduce_classical, "Also replay the reduction with the classical unit inverse");

  std::string sa, sb;
  auto* square_cmd = app.add_subcommand("square-inv", "((b^2)^-1)_{a^2} from (b^-1)_a");
  square_cmd->add_option("a", sa)->required();
  square_cmd->add_option("b", sb)->required();

  std::vector<std::string> quad_args;
  auto* quad_cmd = app.add_subcommand("quad", "x/y inverse pairs modulo u = ac+bd and v = ad-bc");
  quad_cmd->add_option("abcd", quad_args, "a b c d")->expected(4)->required();

  std::vector<std::string> sums_args;
  auto* sums_cmd = app.add_subcommand("sums", "Inverses of a^2+b^2 and c^2+d^2 modulo u and v");
  sums_cmd->add_option("abcd", sums_args, "a b c d")->expected(4)->required();

  std::string gz, gw;
  auto* gauss_cmd = app.add_subcommand("gauss-inv", "Inverse of z modulo w in Z[i] via norms");
  gauss_cmd->add_option("z", gz, "e.g. 1+1i")->required();
  gauss_cmd->add_option("w", gw, "e.g. 2+1i")->required();

  std::string la, lb;
  auto* glin_cmd = app.add_subcommand("gauss-linear-inv", "Inverse of a modulo a*i + b");
  glin_cmd->add_option("a", la)->required();
  glin_cmd->add_option("b", lb)->required();

  VerifyArgs verify;
  std::int64_t bound_value = 0;
  int shards_value = 1;
  auto* verify_cmd = app.add_subcommand("verify", "Run every exhaustive verification sweep");
  auto* bound_opt = verify_cmd->add_option("--bound", bound_value, "Global cap on sweep bounds");
  auto* shards_opt = verify_cmd->add_option("--shards", shards_value, "Worker threads");
  verify_cmd->add_option("--config", verify.config_path, "key=value sweep configuration file");
  verify_cmd->add_flag("--serial", verify.serial, "Use the serial reference kernels");
  verify_cmd->add_flag("--use-classical-unit-inverse", verify.classical_unit,
                       "Take inverses modulo +-1 to be 0");

  int bits = 256;
  std::uint64_t iters = 1000;
  auto* bench_cmd = app.add_subcommand("bench", "Time reciprocity inversion against extended gcd");
  bench_cmd->add_option("--bits", bits, "Operand bit width (64..4096)");
  bench_cmd->add_option("--iters", iters, "Number of random pairs");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }
  if (*seed_opt) g.seed = seed_value;
  if (*bound_opt) verify.bound = bound_value;
  if (*shards_opt) verify.shards = shards_value;

  try {
    if (*inv_cmd) return cmd_inv(inv, g, out);
    if (*cinv_cmd) return cmd_classical_inv(ca, cm, g, out);
    if (*recip_cmd) return cmd_recip(ra, rb, g, out);
    if (*reduce_cmd) return cmd_reduce(da, db, dk, minus, reduce_classical, g, out);
    if (*square_cmd) return cmd_square_inv(sa, sb, g, out);
    if (*quad_cmd) return cmd_quad(quad_args, false, g, out);
    if (*sums_cmd) return cmd_quad(sums_args, true, g, out);
    if (*gauss_cmd) return cmd_gauss_inv(gz, gw, g, out);
    if (*glin_cmd) return cmd_gauss_linear_inv(la, lb, g, out);
    if (*verify_cmd) return cmd_verify(verify, g, out);
    if (*bench_cmd) return cmd_bench(bits, iters, g, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ArithmeticError& e) {
    const std::string reason(to_string(e.reason()));
    if (g.json) {
      emit(out, Json{{"error", reason}, {"message", e.what()}});
    } else {
      err << "error: " << reason << ": " << e.what() << '\n';
    }
    return kUndefined;
  }
  return kUsage;
}

}  // namespace modrecip::cli
