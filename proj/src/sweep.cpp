#include "modrecip/sweep.hpp"

#include "modrecip/gaussian.hpp"
#include "modrecip/identities.hpp"
#include "modrecip/reciprocity.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace modrecip::sweep {
namespace {

using Status = CaseOutcome::Status;

void accumulate(SuiteResult& r, std::int64_t index, CaseOutcome&& outcome) {
  if (outcome.status == Status::Skipped) return;
  ++r.cases;
  if (outcome.unit_modulus) ++r.unit_cases;
  if (outcome.status == Status::Passed) return;
  ++r.violations;
  if (outcome.unit_modulus) ++r.unit_violations;
  if (r.counterexample_index < 0 || index < r.counterexample_index) {
    r.counterexample_index = index;
    r.counterexample = std::move(outcome.counterexample);
  }
}

void merge(SuiteResult& total, SuiteResult&& part) {
  total.cases += part.cases;
  total.violations += part.violations;
  total.unit_cases += part.unit_cases;
  total.unit_violations += part.unit_violations;
  if (part.counterexample_index >= 0 &&
      (total.counterexample_index < 0 || part.counterexample_index < total.counterexample_index)) {
    total.counterexample_index = part.counterexample_index;
    total.counterexample = std::move(part.counterexample);
  }
}

// Runs case_fn(i) for i in [0, count). The serial branch is the reference
// the parallel branch is tested against.
template <class CaseFn>
SuiteResult run_indexed(std::string name, std::int64_t count, const CaseFn& case_fn,
                        Execution exec, int threads) {
  SuiteResult total;
  total.name = std::move(name);
  if (exec == Execution::Serial) {
    for (std::int64_t i = 0; i < count; ++i) accumulate(total, i, case_fn(i));
    return total;
  }

#pragma omp parallel num_threads(threads)
  {
    SuiteResult local;
#pragma omp for schedule(dynamic, 256) nowait
    for (std::int64_t i = 0; i < count; ++i) accumulate(local, i, case_fn(i));
#pragma omp critical(modrecip_sweep_merge)
    merge(total, std::move(local));
  }
  return total;
}

// Converts unexpected ArithmeticErrors inside a case into a failure.
template <class Body>
CaseOutcome guarded(bool unit, const Body& body, const std::string& label) {
  try {
    return body();
  } catch (const ArithmeticError& e) {
    return CaseOutcome::failed(unit, label + ": unexpected error: " + e.what());
  }
}

std::vector<std::int64_t> nonzero_range(std::int64_t bound) {
  std::vector<std::int64_t> v;
  v.reserve(static_cast<std::size_t>(2 * bound));
  for (std::int64_t x = -bound; x <= bound; ++x) {
    if (x != 0) v.push_back(x);
  }
  return v;
}

std::vector<std::int64_t> full_range(std::int64_t bound) {
  std::vector<std::int64_t> v(static_cast<std::size_t>(2 * bound + 1));
  std::iota(v.begin(), v.end(), -bound);
  return v;
}

// Values with lo <= |x| <= hi.
std::vector<std::int64_t> magnitude_range(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> v;
  for (std::int64_t x = -hi; x <= hi; ++x) {
    if (std::abs(x) >= lo) v.push_back(x);
  }
  return v;
}

std::vector<std::int64_t> positive_range(std::int64_t bound) {
  std::vector<std::int64_t> v(static_cast<std::size_t>(bound));
  std::iota(v.begin(), v.end(), 1);
  return v;
}

bool coprime(std::int64_t a, std::int64_t b) { return std::gcd(a, b) == 1; }

bool unit(std::int64_t x) { return x == 1 || x == -1; }

Integer big(std::int64_t x) { return Integer(static_cast<long>(x)); }

// Mixed-radix decoding of a flat index into per-axis positions.
template <std::size_t N>
std::array<std::size_t, N> decode(std::int64_t index, const std::array<std::size_t, N>& dims) {
  std::array<std::size_t, N> pos{};
  auto rest = static_cast<std::size_t>(index);
  for (std::size_t i = N; i-- > 0;) {
    pos[i] = rest % dims[i];
    rest /= dims[i];
  }
  return pos;
}

template <std::size_t N>
std::int64_t volume(const std::array<std::size_t, N>& dims) {
  std::size_t v = 1;
  for (auto d : dims) v *= d;
  return static_cast<std::int64_t>(v);
}

std::string describe(std::initializer_list<std::pair<const char*, std::string>> fields) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, value] : fields) {
    if (!first) os << ' ';
    os << key << '=' << value;
    first = false;
  }
  return os.str();
}

std::string str(std::int64_t x) { return std::to_string(x); }
std::string str(const Integer& x) { return to_string(x); }
std::string str(const InverseOutcome& o) {
  return o.ok() ? to_string(o.value()) : std::string(to_string(o.failure()));
}

}  // namespace

void SweepConfig::apply_global_bound(std::int64_t cap) {
  bound = cap;
  for (std::int64_t* field : {&oracle_bound, &shift_bound, &k_bound, &square_bound, &quad_bound,
                              &gaussian_bound, &linear_bound, &unit_table_bound}) {
    *field = std::min(*field, cap);
  }
}

void SweepConfig::validate() const {
  for (std::int64_t b : {bound, oracle_bound, shift_bound, square_bound, quad_bound,
                         gaussian_bound, linear_bound, unit_table_bound}) {
    if (b < 2) throw std::invalid_argument("sweep bounds must be at least 2");
  }
  if (k_bound < 0) throw std::invalid_argument("k_bound must be non-negative");
  if (shard_count < 1) throw std::invalid_argument("shard_count must be at least 1");
}

void apply_config_text(SweepConfig& config, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(line_no) + ": expected key=value");
    }
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));

    if (key == "convention") {
      if (value == "extended") {
        config.convention = UnitConvention::Extended;
      } else if (value == "classical") {
        config.convention = UnitConvention::Classical;
      } else {
        throw std::invalid_argument("config: convention must be extended or classical");
      }
      continue;
    }

    std::int64_t number = 0;
    const auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), number);
    if (ec != std::errc() || end != value.data() + value.size()) {
      throw std::invalid_argument("config: '" + key + "' needs an integer value");
    }
    if (key == "bound") config.bound = number;
    else if (key == "oracle_bound") config.oracle_bound = number;
    else if (key == "shift_bound") config.shift_bound = number;
    else if (key == "k_bound") config.k_bound = number;
    else if (key == "square_bound") config.square_bound = number;
    else if (key == "quad_bound") config.quad_bound = number;
    else if (key == "gaussian_bound") config.gaussian_bound = number;
    else if (key == "linear_bound") config.linear_bound = number;
    else if (key == "unit_table_bound") config.unit_table_bound = number;
    else if (key == "shard_count") config.shard_count = static_cast<int>(number);
    else throw std::invalid_argument("config: unknown key '" + key + "'");
  }
}

SuiteResult floor_division_suite(const SweepConfig& config, Execution exec) {
  const auto as = full_range(config.bound);
  const auto ms = nonzero_range(config.bound);
  const std::array dims{as.size(), ms.size()};
  return run_indexed("floor-division", volume(dims), [&](std::int64_t i) {
    const auto [ia, im] = decode(i, dims);
    const Integer a = big(as[ia]), m = big(ms[im]);
    const Integer q = floor_div(a, m);
    const Integer r = floor_mod(a, m);
    const bool in_window = sgn(m) > 0 ? (r >= 0 && r < m) : (r > m && r <= 0);
    if (a == m * q + r && in_window) return CaseOutcome::passed(false);
    return CaseOutcome::failed(false, describe({{"a", str(a)}, {"m", str(m)}, {"q", str(q)}, {"r", str(r)}}));
  }, exec, config.shard_count);
}

SuiteResult inverse_oracle_suite(const SweepConfig& config, Execution exec) {
  const auto as = full_range(config.oracle_bound);
  const auto ms = magnitude_range(2, config.oracle_bound);
  const std::array dims{as.size(), ms.size()};
  return run_indexed("inverse-oracle", volume(dims), [&](std::int64_t i) {
    const auto [ia, im] = decode(i, dims);
    const Integer a = big(as[ia]), m = big(ms[im]);
    const std::string label = describe({{"a", str(a)}, {"m", str(m)}});
    return guarded(false, [&] {
      const InverseOutcome inv = mod_inverse(a, m);
      const InverseOutcome brute = brute_force_inverse(a, m);
      const ReciprocityTrace recip = inverse_via_reciprocity_traced(a, m);
      auto fail = [&](const std::string& why) {
        return CaseOutcome::failed(false, label + " " + why + " mod_inverse=" + str(inv) +
                                              " brute=" + str(brute) + " reciprocity=" + str(recip.inverse));
      };
      if (!(inv == brute) || !(inv == recip.inverse)) return fail("disagreement");
      if (!inv.ok()) {
        const Failure expected = sgn(a) == 0 ? Failure::ZeroOperand : Failure::NotCoprime;
        return inv.failure() == expected ? CaseOutcome::passed(false) : fail("wrong failure");
      }

      const Integer& x = inv.value();
      const bool in_window = sgn(m) > 0 ? (x >= 1 && x <= m - 1) : (x >= m + 1 && x <= -1);
      if (!in_window) return fail("outside signed window");
      if (sgn(floor_mod(a * x - 1, m)) != 0) return fail("congruence");

      const Bezout bz = extended_gcd(a, m);
      if (bz.g != 1 || a * bz.x + m * bz.y != 1 || floor_mod(bz.x, m) != x) return fail("bezout");
      if (recip.steps > 3 * bit_length(m)) return fail("step bound");

      const DiophantineSolution dio = solve_diophantine(a, m);
      if (dio.x != x || a * dio.x - dio.k * m != 1) return fail("diophantine");

      // The classical residue lives in [0, |m|-1]; it is the same class.
      const Integer classical = classical_inverse(a, m).value();
      if (classical != (sgn(m) > 0 ? x : Integer(x - m))) return fail("classical residue");
      return CaseOutcome::passed(false);
    }, label);
  }, exec, config.shard_count);
}

SuiteResult unit_modulus_suite(const SweepConfig& config, Execution exec) {
  const auto as = nonzero_range(config.unit_table_bound);
  const std::array<std::int64_t, 2> ms{1, -1};
  const std::array dims{as.size(), ms.size()};
  return run_indexed("unit-modulus", volume(dims), [&](std::int64_t i) {
    const auto [ia, im] = decode(i, dims);
    const std::int64_t a = as[ia], m = ms[im];
    const std::int64_t expected = m == 1 ? (a > 0 ? 1 : 0) : (a > 0 ? 0 : -1);
    const InverseOutcome got = mod_inverse(big(a), big(m), config.convention);
    const InverseOutcome classical = classical_inverse(big(a), big(m));
    const InverseOutcome extended = mod_inverse(big(a), big(m));
    const bool diverges = (m == 1 && a > 0) || (m == -1 && a < 0);
    const bool ok = got.ok() && got.value() == expected && classical.ok() && classical.value() == 0 &&
                    (extended.value() != classical.value()) == diverges;
    if (ok) return CaseOutcome::passed(true);
    return CaseOutcome::failed(true, describe({{"a", str(a)}, {"m", str(m)}, {"expected", str(expected)},
                                               {"got", str(got)}, {"classical", str(classical)}}));
  }, exec, config.shard_count);
}

SuiteResult reciprocity_suite(const SweepConfig& config, Execution exec) {
  const auto vs = nonzero_range(config.bound);
  const std::array dims{vs.size(), vs.size()};
  return run_indexed("reciprocity", volume(dims), [&](std::int64_t i) {
    const auto [ia, ib] = decode(i, dims);
    const std::int64_t a = vs[ia], b = vs[ib];
    if (!coprime(a, b)) return CaseOutcome::skipped();
    const bool u = unit(a) || unit(b);
    const std::string label = describe({{"a", str(a)}, {"b", str(b)}});
    return guarded(u, [&] {
      const ReciprocityReport r = reciprocity_check(big(a), big(b), config.convention);
      if (r.holds && r.k == 1 && r.lhs == 1 + big(a) * big(b)) return CaseOutcome::passed(u);
      return CaseOutcome::failed(u, label + " " + describe({{"lhs", str(r.lhs)}, {"rhs", str(r.rhs)}, {"k", str(r.k)}}));
    }, label);
  }, exec, config.shard_count);
}

SuiteResult shift_invariance_suite(const SweepConfig& config, Execution exec) {
  const auto vs = nonzero_range(config.shift_bound);
  const auto ks = full_range(config.k_bound);
  const std::array dims{vs.size(), vs.size(), ks.size()};
  return run_indexed("shift-invariance", volume(dims), [&](std::int64_t i) {
    const auto [ia, ib, ik] = decode(i, dims);
    const std::int64_t a = vs[ia], b = vs[ib], k = ks[ik];
    if (!coprime(a, b) || k * a + b == 0) return CaseOutcome::skipped();
    const bool u = unit(a);
    const std::string label = describe({{"a", str(a)}, {"b", str(b)}, {"k", str(k)}});
    return guarded(u, [&] {
      const Integer got = shift_invariance(big(a), big(b), big(k), config.convention);
      const InverseOutcome want = mod_inverse(big(k * a + b), big(a), config.convention);
      if (want.ok() && want.value() == got) return CaseOutcome::passed(u);
      return CaseOutcome::failed(u, label + " " + describe({{"formula", str(got)}, {"direct", str(want)}}));
    }, label);
  }, exec, config.shard_count);
}

SuiteResult reduction_suite(const SweepConfig& config, Execution exec) {
  const auto as = magnitude_range(2, config.shift_bound);
  const auto bs = nonzero_range(config.shift_bound);
  const auto ks = full_range(config.k_bound);
  const std::array dims{as.size(), bs.size(), ks.size()};
  return run_indexed("reduction", volume(dims), [&](std::int64_t i) {
    const auto [ia, ib, ik] = decode(i, dims);
    const std::int64_t a = as[ia], b = bs[ib], k = ks[ik];
    if (!coprime(a, b)) return CaseOutcome::skipped();
    const std::int64_t plus = k * a + b, minus = k * a - b;
    const bool u = unit(b) || unit(plus) || unit(minus);
    const std::string label = describe({{"a", str(a)}, {"b", str(b)}, {"k", str(k)}});
    return guarded(u, [&] {
      if (plus != 0) {
        const Integer got = reduce_inverse_plus(big(a), big(b), big(k), config.convention);
        const InverseOutcome want = mod_inverse(big(a), big(plus), config.convention);
        if (!want.ok() || want.value() != got) {
          return CaseOutcome::failed(u, label + " plus " + describe({{"formula", str(got)}, {"direct", str(want)}}));
        }
      }
      if (minus != 0) {
        const Integer got = reduce_inverse_minus(big(a), big(b), big(k), config.convention);
        const InverseOutcome want = mod_inverse(big(a), big(minus), config.convention);
        if (!want.ok() || want.value() != got) {
          return CaseOutcome::failed(u, label + " minus " + describe({{"formula", str(got)}, {"direct", str(want)}}));
        }
      }
      return CaseOutcome::passed(u);
    }, label);
  }, exec, config.shard_count);
}

SuiteResult classical_contradiction_suite(const SweepConfig& config, Execution exec) {
  // Replaying the reduction for a=7, b=1, k=3 with (7^-1)_1 = 0 gives 18,
  // while (7^-1)_22 = 19. With (7^-1)_1 = 1 both sides are 19.
  return run_indexed("classical-contradiction", 1, [](std::int64_t) {
    const Integer direct = mod_inverse(7, 22).value();
    const Integer extended = reduce_inverse_plus(7, 1, 3, UnitConvention::Extended);
    const Integer classical = reduce_inverse_plus(7, 1, 3, UnitConvention::Classical);
    const bool recip_breaks = !reciprocity_check(5, 1, UnitConvention::Classical).holds;
    if (direct == 19 && extended == 19 && classical == 18 && recip_breaks) return CaseOutcome::passed(true);
    return CaseOutcome::failed(true, describe({{"direct", str(direct)}, {"extended", str(extended)},
                                               {"classical", str(classical)}}));
  }, exec, config.shard_count);
}

SuiteResult square_inverse_suite(const SweepConfig& config, Execution exec) {
  const auto as = magnitude_range(2, config.square_bound);
  const auto bs = nonzero_range(config.square_bound);
  const std::array dims{as.size(), bs.size()};
  return run_indexed("square-inverse", volume(dims), [&](std::int64_t i) {
    const auto [ia, ib] = decode(i, dims);
    const std::int64_t a = as[ia], b = bs[ib];
    if (!coprime(a, b)) return CaseOutcome::skipped();
    const std::string label = describe({{"a", str(a)}, {"b", str(b)}});
    return guarded(false, [&] {
      const SquareInverse f = square_inverse_forms(big(a), big(b), config.convention);
      const InverseOutcome want = mod_inverse(big(b * b), big(a * a));
      if (f.forms_agree && want.ok() && want.value() == f.form_square) return CaseOutcome::passed(false);
      return CaseOutcome::failed(false, label + " " + describe({{"form_square", str(f.form_square)},
                                                                {"form_cubic", str(f.form_cubic)},
                                                                {"direct", str(want)}}));
    }, label);
  }, exec, config.shard_count);
}

namespace {

struct Quad {
  std::int64_t a, b, c, d;
  std::int64_t u() const { return a * c + b * d; }
  std::int64_t v() const { return a * d - b * c; }
  bool touches_unit() const { return unit(a) || unit(b) || unit(c) || unit(d); }
  std::string label() const { return describe({{"a", str(a)}, {"b", str(b)}, {"c", str(c)}, {"d", str(d)}}); }
};

template <class CaseFn>
SuiteResult run_quads(std::string name, const std::vector<std::int64_t>& axis, const CaseFn& case_fn,
                      const SweepConfig& config, Execution exec) {
  const std::array dims{axis.size(), axis.size(), axis.size(), axis.size()};
  return run_indexed(std::move(name), volume(dims), [&](std::int64_t i) {
    const auto [ia, ib, ic, id] = decode(i, dims);
    const Quad q{axis[ia], axis[ib], axis[ic], axis[id]};
    if (!coprime(q.a, q.b) || !coprime(q.c, q.d)) return CaseOutcome::skipped();
    return case_fn(q);
  }, exec, config.shard_count);
}

}  // namespace

SuiteResult quad_pair_suite(const SweepConfig& config, Execution exec) {
  return run_quads("quad-pair", nonzero_range(config.quad_bound), [&](const Quad& q) {
    if (std::abs(q.u()) <= 1 || std::abs(q.v()) <= 1) return CaseOutcome::skipped();
    const bool u = q.touches_unit();
    return guarded(u, [&] {
      const QuadPairReport r = quad_pair_inverses(big(q.a), big(q.b), big(q.c), big(q.d), config.convention);
      if (r.all_inverse_pairs_pass() && r.all_exact_identities_pass()) return CaseOutcome::passed(u);
      std::string flags;
      for (bool p : r.pass_inverse_pairs) flags += p ? '1' : '0';
      flags += '/';
      for (bool p : r.pass_exact_identities) flags += p ? '1' : '0';
      return CaseOutcome::failed(u, q.label() + " flags=" + flags);
    }, q.label());
  }, config, exec);
}

SuiteResult positive_case_suite(const SweepConfig& config, Execution exec) {
  return run_quads("positive-case", positive_range(config.quad_bound), [&](const Quad& q) {
    if (q.v() == 0) return CaseOutcome::skipped();
    const bool u = q.touches_unit();
    return guarded(u, [&] {
      try {
        const Integer y1 = positive_case_exact(big(q.a), big(q.b), big(q.c), big(q.d));
        if (sgn(y1) > 0 && y1 < q.u()) return CaseOutcome::passed(u);
        return CaseOutcome::failed(u, q.label() + " y1=" + str(y1));
      } catch (const std::logic_error& e) {
        if (dynamic_cast<const ArithmeticError*>(&e) != nullptr) throw;
        return CaseOutcome::failed(u, q.label() + " " + e.what());
      }
    }, q.label());
  }, config, exec);
}

SuiteResult sum_of_squares_suite(const SweepConfig& config, Execution exec) {
  return run_quads("sum-of-squares", nonzero_range(config.quad_bound), [&](const Quad& q) {
    const std::int64_t uu = q.u(), vv = q.v();
    if (std::abs(uu) <= 1 || std::abs(vv) <= 1 || !coprime(uu, vv)) return CaseOutcome::skipped();
    const bool u = q.touches_unit();
    return guarded(u, [&] {
      const QuadPairReport r = sum_of_squares_inverses(big(q.a), big(q.b), big(q.c), big(q.d), config.convention);
      if (r.all_sum_of_squares_pass() && r.all_exact_identities_pass()) return CaseOutcome::passed(u);
      std::string flags;
      for (bool p : r.pass_sum_of_squares) flags += p ? '1' : '0';
      flags += '/';
      for (bool p : r.pass_exact_identities) flags += p ? '1' : '0';
      return CaseOutcome::failed(u, q.label() + " flags=" + flags);
    }, q.label());
  }, config, exec);
}

SuiteResult gaussian_divmod_suite(const SweepConfig& config, Execution exec) {
  const auto vs = full_range(config.gaussian_bound);
  const std::array dims{vs.size(), vs.size(), vs.size(), vs.size()};
  return run_indexed("gaussian-divmod", volume(dims), [&](std::int64_t i) {
    const auto [nr, ni, dr, di] = decode(i, dims);
    const GaussianInteger n{big(vs[nr]), big(vs[ni])};
    const GaussianInteger d{big(vs[dr]), big(vs[di])};
    if (d.is_zero()) return CaseOutcome::skipped();
    const GaussianDivMod qr = gaussian_divmod(n, d);
    if (d * qr.quotient + qr.remainder == n && 2 * gaussian_norm(qr.remainder) <= gaussian_norm(d)) {
      return CaseOutcome::passed(false);
    }
    return CaseOutcome::failed(false, describe({{"n", to_string(n)}, {"d", to_string(d)},
                                                {"q", to_string(qr.quotient)}, {"r", to_string(qr.remainder)}}));
  }, exec, config.shard_count);
}

SuiteResult gaussian_inverse_suite(const SweepConfig& config, Execution exec) {
  const auto vs = nonzero_range(config.gaussian_bound);
  const std::array dims{vs.size(), vs.size(), vs.size(), vs.size()};
  return run_indexed("gaussian-inverse", volume(dims), [&](std::int64_t i) {
    const auto [ia, ib, ic, id] = decode(i, dims);
    const std::int64_t a = vs[ia], b = vs[ib], c = vs[ic], d = vs[id];
    if (!coprime(a * a + b * b, c * c + d * d)) return CaseOutcome::skipped();
    const GaussianInteger z{big(a), big(b)};
    const GaussianInteger w{big(c), big(d)};
    const std::string label = describe({{"z", to_string(z)}, {"w", to_string(w)}});
    return guarded(false, [&] {
      const GaussianInverse inv = gaussian_inverse(z, w);
      const GaussianInteger one{1};
      if (!gaussian_divides(w, z * inv.representative - one)) return CaseOutcome::failed(false, label + " representative");
      if (!gaussian_divides(w, z * inv.canonical - one)) return CaseOutcome::failed(false, label + " canonical");
      if (2 * gaussian_norm(inv.canonical) > gaussian_norm(w)) return CaseOutcome::failed(false, label + " norm bound");
      for (const GaussianInteger& shift : {GaussianInteger(1), GaussianInteger(0, 1), GaussianInteger(-2, 3)}) {
        if (gaussian_divmod(inv.representative + w * shift, w).remainder != inv.canonical) {
          return CaseOutcome::failed(false, label + " representative dependence");
        }
      }
      if (!gaussian_bezout_identity(big(a), big(b), big(c), big(d))) return CaseOutcome::failed(false, label + " identity");
      return CaseOutcome::passed(false);
    }, label);
  }, exec, config.shard_count);
}

SuiteResult gaussian_linear_suite(const SweepConfig& config, Execution exec) {
  const auto as = magnitude_range(2, config.linear_bound);
  const auto bs = nonzero_range(config.linear_bound);
  const std::array dims{as.size(), bs.size()};
  return run_indexed("gaussian-linear", volume(dims), [&](std::int64_t i) {
    const auto [ia, ib] = decode(i, dims);
    const std::int64_t a = as[ia], b = bs[ib];
    if (!coprime(a, b)) return CaseOutcome::skipped();
    const bool u = unit(b);
    const std::string label = describe({{"a", str(a)}, {"b", str(b)}});
    return guarded(u, [&] {
      const GaussianInteger x = inverse_mod_gaussian_linear(big(a), big(b), config.convention);
      const GaussianInteger modulus{big(b), big(a)};
      if (gaussian_divides(modulus, GaussianInteger(big(a)) * x - GaussianInteger(1))) return CaseOutcome::passed(u);
      return CaseOutcome::failed(u, label + " inverse=" + to_string(x));
    }, label);
  }, exec, config.shard_count);
}

std::vector<SuiteResult> run_all(const SweepConfig& config, Execution exec) {
  config.validate();
  return {floor_division_suite(config, exec),   inverse_oracle_suite(config, exec),
          unit_modulus_suite(config, exec),     reciprocity_suite(config, exec),
          shift_invariance_suite(config, exec), reduction_suite(config, exec),
          classical_contradiction_suite(config, exec), square_inverse_suite(config, exec),
          quad_pair_suite(config, exec),        positive_case_suite(config, exec),
          sum_of_squares_suite(config, exec),   gaussian_divmod_suite(config, exec),
          gaussian_inverse_suite(config, exec), gaussian_linear_suite(config, exec)};
}

}  // namespace modrecip::sweep
