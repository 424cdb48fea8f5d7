#pragma once

// The scrollsec command line: argument parsing, dispatch, report output and
// exit codes (0 all match, 1 usage, 2 mismatch, 3 budget).

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "scrollsec/gitcheck/examples.hpp"
#include "scrollsec/groebner/ideal_file.hpp"
#include "scrollsec/invariants/blowup.hpp"
#include "scrollsec/invariants/local.hpp"

namespace scrollsec::cli {

enum ExitCode { kOk = 0, kUsage = 1, kMismatch = 2, kBudget = 3 };

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::string command;
  std::optional<int> a, b, r, d;
  std::size_t samples = kSmoothSamples;
  std::size_t trials = 50;
  std::optional<std::uint64_t> seed;
  std::string prime;  // empty = default, "Q" = rationals
  std::string output = "json";
  std::size_t budget = kDefaultPairBudget;
  int max_r = 5;
  bool timing = true;
  std::string kind;
  std::string ideal_in, ideal_out;
  std::string coeffs;
  bool random = false;
};

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> c{"degree", "veronese",  "adp",   "components",   "span",
                                          "tangent-cone", "chart", "smooth", "blowup",    "conic-system",
                                          "lemma-sec", "git-check", "emit-ideal", "verify-all"};
  return c;
}

namespace detail {

inline int need(const std::optional<int>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing --") + flag);
  return *v;
}

inline ScrollSpec spec_of(const RunConfig& c) {
  ScrollSpec s{need(c.a, "a"), need(c.b, "b")};
  s.validate();
  return s;
}

inline FieldChoice field_of(const RunConfig& c) {
  if (c.prime.empty()) return FieldChoice::modulo(kDefaultPrimes[0]);
  if (c.prime == "Q") return FieldChoice::rationals();
  std::uint64_t p = 0;
  try {
    std::size_t used = 0;
    p = std::stoull(c.prime, &used);
    if (used != c.prime.size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw UsageError("--prime must be Q or one of the built-in primes (got '" + c.prime + "')");
  }
  if (std::find(kDefaultPrimes.begin(), kDefaultPrimes.end(), p) == kDefaultPrimes.end())
    throw UsageError("--prime must be Q or one of the built-in primes 2147483647, 2147483629, 2147483587");
  return FieldChoice::modulo(static_cast<std::uint32_t>(p));
}

inline std::uint32_t prime_of(const RunConfig& c) {
  auto f = field_of(c);
  if (f.is_rational()) throw UsageError("command '" + c.command + "' needs a prime field; --prime Q is not supported");
  return *f.prime;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, sep);) out.push_back(::scrollsec::detail::trim(item));
  return out;
}

template <FieldContext Ctx>
typename Ctx::value_type parse_scalar(const std::string& text, const Ctx& ctx) {
  try {
    auto slash = text.find('/');
    mpz_class num(text.substr(0, slash)), den(slash == std::string::npos ? "1" : text.substr(slash + 1));
    if (den == 0) throw UsageError("zero denominator in '" + text + "'");
    return ctx.from_rational(num, den);
  } catch (const std::invalid_argument&) {
    throw UsageError("not a rational number: '" + text + "'");
  }
}

// A thunk producing one report; failures are captured in the report.
using Claim = std::function<VerificationReport()>;

struct Outcome {
  std::vector<VerificationReport> reports;
  bool budget = false;
  std::size_t errors = 0;
};

inline Outcome collect(const std::vector<Claim>& claims, std::ostream& err) {
  Outcome out;
  for (const auto& c : claims) {
    try {
      out.reports.push_back(c());
    } catch (const BudgetExceeded& e) {
      err << "scrollsec: budget: " << e.what() << '\n';
      out.budget = true;
    } catch (const NonGenericSlice& e) {
      err << "scrollsec: mismatch: " << e.what() << '\n';
      ++out.errors;
    }
  }
  return out;
}

inline std::vector<Claim> verify_all_claims(const RunConfig& c, std::uint64_t seed, std::uint32_t p,
                                            const CountingOptions& opt) {
  std::vector<Claim> v;
  std::vector<ScrollSpec> specs;
  for (int r = 2; r <= c.max_r; ++r)
    for (int a = 1; 2 * a <= r; ++a) specs.push_back({a, r - a});
  for (auto s : specs) {
    v.push_back([=] { return degree_secant_fourfold(s, seed, p, opt); });
    v.push_back([=] { return span_dimension(s, seed, p); });
    v.push_back([=] { return lemma_sec_check(s, c.trials, seed, p); });
    v.push_back([=] { return smoothness_sample(SmoothKind::Scroll, s, 0, c.samples, seed, p); });
    if (s.r() >= 3) v.push_back([=] { return verify_chart(s, p, opt.groebner); });
    if (s.r() >= 4) {
      v.push_back([=] { return apparent_double_points(s, seed, p, opt); });
      v.push_back([=] { return component_degrees(s, seed, p, opt); });
    }
  }
  for (int d = 2; d <= c.max_r + 1; ++d) v.push_back([=] { return degree_veronese(d, seed, p, opt); });
  for (int r = 3; r <= c.max_r; ++r) {
    v.push_back([=] { return tangent_cone_invariants(r, seed, p, opt.groebner); });
    v.push_back([=] { return smoothness_sample(SmoothKind::TangentCone, {}, r, c.samples, seed, p); });
  }
  for (int a = 1; a <= 3; ++a) v.push_back([=] { return blowup_intersection(a); });
  for (int a = 2; a <= 3; ++a)
    v.push_back([=] { return conic_linear_system(a, ModContext{p}, FieldChoice::modulo(p)); });
  v.push_back([=] { return gitcheck_examples(seed, p); });
  return v;
}

template <FieldContext Ctx>
int run_git_check(const RunConfig& c, const Ctx& ctx, std::uint64_t seed, std::ostream& out) {
  std::optional<HyperplaneClass<Ctx>> H;
  if (c.random) {
    if (!c.coeffs.empty()) throw UsageError("--coeffs and --random are exclusive");
    std::mt19937_64 rng(seed);
    H = HyperplaneClass<Ctx>::random(ctx, rng);
  } else {
    if (c.coeffs.empty()) throw UsageError("git-check needs --coeffs or --random");
    std::vector<typename Ctx::value_type> v;
    for (const auto& t : split(c.coeffs, ',')) v.push_back(parse_scalar(t, ctx));
    H = HyperplaneClass<Ctx>(std::move(v));
  }
  auto cert = semistability_certificate(*H, ctx);
  nlohmann::ordered_json j;
  j["restriction"] = binary_form_text(cert.restriction);
  if (cert.max_multiplicity)
    j["max_multiplicity"] = *cert.max_multiplicity;
  else
    j["max_multiplicity"] = nullptr;
  j["verdict"] = verdict_name(cert.verdict);
  if (c.random) j["seed"] = seed;
  out << (c.output == "pretty" ? j.dump(2) : j.dump()) << '\n';
  return kOk;
}

template <FieldContext Ctx>
int run_emit_ideal(const RunConfig& c, const Ctx& ctx, std::ostream& out) {
  std::optional<Ideal<Ctx>> I;
  if (!c.ideal_in.empty()) {
    if (!c.kind.empty()) throw UsageError("--ideal-in and --kind are exclusive");
    std::ifstream in(c.ideal_in);
    if (!in) throw UsageError("cannot read " + c.ideal_in);
    auto src = read_ideal_file(in, ctx);
    auto G = buchberger(src, BuchbergerOptions{c.budget});
    I = Ideal<Ctx>(G.ring(), G.polynomials());
  } else if (c.kind == "scroll") {
    I = scroll_ideal(spec_of(c), ctx);
  } else if (c.kind == "rnc") {
    I = rnc_ideal(need(c.d, "d"), ctx);
  } else if (c.kind == "tangent-cone") {
    I = tangent_cone_ideal(need(c.r, "r"), ctx);
  } else if (c.kind == "chart") {
    I = chart_ideal(spec_of(c), ctx);
  } else if (c.kind == "singular-scroll") {
    I = singular_scroll_ideal(need(c.r, "r"), ctx).ideal;
  } else {
    throw UsageError("emit-ideal needs --kind scroll|rnc|tangent-cone|chart|singular-scroll or --ideal-in FILE");
  }
  if (c.ideal_out.empty()) {
    write_ideal_file(out, *I);
  } else {
    std::ofstream f(c.ideal_out);
    if (!f) throw UsageError("cannot write " + c.ideal_out);
    write_ideal_file(f, *I);
  }
  return kOk;
}

}  // namespace detail

inline int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const std::uint64_t seed = c.seed ? *c.seed : (std::uint64_t(std::random_device{}()) << 32) ^ std::random_device{}();
  const CountingOptions opt{BuchbergerOptions{c.budget}, 5};
  if (c.output != "json" && c.output != "pretty") throw UsageError("--output must be json or pretty");

  if (c.command == "git-check") {
    auto f = detail::field_of(c);
    if (f.is_rational()) return detail::run_git_check(c, RationalContext{}, seed, out);
    return detail::run_git_check(c, ModContext{*f.prime}, seed, out);
  }
  if (c.command == "emit-ideal") {
    // constructors have integer coefficients; default to Q
    auto f = c.prime.empty() ? FieldChoice::rationals() : detail::field_of(c);
    if (f.is_rational()) return detail::run_emit_ideal(c, RationalContext{}, out);
    return detail::run_emit_ideal(c, ModContext{*f.prime}, out);
  }

  std::vector<detail::Claim> claims;
  const std::string& cmd = c.command;
  if (cmd == "degree") {
    auto s = detail::spec_of(c);
    auto p = detail::prime_of(c);
    claims.push_back([=] { return degree_secant_fourfold(s, seed, p, opt); });
  } else if (cmd == "veronese") {
    int d = detail::need(c.d, "d");
    check_rnc_degree(d);
    auto p = detail::prime_of(c);
    claims.push_back([=] { return degree_veronese(d, seed, p, opt); });
  } else if (cmd == "adp") {
    auto s = detail::spec_of(c);
    auto p = detail::prime_of(c);
    claims.push_back([=] { return apparent_double_points(s, seed, p, opt); });
  } else if (cmd == "components") {
    auto s = detail::spec_of(c);
    auto p = detail::prime_of(c);
    claims.push_back([=] { return component_degrees(s, seed, p, opt); });
  } else if (cmd == "span") {
    auto s = detail::spec_of(c);
    auto p = detail::prime_of(c);
    claims.push_back([=] { return span_dimension(s, seed, p); });
  } else if (cmd == "tangent-cone") {
    int r = detail::need(c.r, "r");
    check_tangent_cone_r(r);
    auto p = detail::prime_of(c);
    claims.push_back([=] { return tangent_cone_invariants(r, seed, p, opt.groebner); });
  } else if (cmd == "chart") {
    auto s = detail::spec_of(c);
    check_chart_spec(s);
    auto p = detail::prime_of(c);
    claims.push_back([=] { return verify_chart(s, p, opt.groebner); });
  } else if (cmd == "smooth") {
    auto p = detail::prime_of(c);
    if (c.kind == "scroll") {
      auto s = detail::spec_of(c);
      claims.push_back([=] { return smoothness_sample(SmoothKind::Scroll, s, 0, c.samples, seed, p); });
    } else if (c.kind == "tangent-cone") {
      int r = detail::need(c.r, "r");
      check_tangent_cone_r(r);
      claims.push_back([=] { return smoothness_sample(SmoothKind::TangentCone, {}, r, c.samples, seed, p); });
    } else {
      throw UsageError("smooth needs --kind scroll|tangent-cone");
    }
  } else if (cmd == "blowup") {
    int a = detail::need(c.a, "a");
    if (a < 1) throw UsageError("blowup needs a >= 1");
    claims.push_back([=] { return blowup_intersection(a); });
  } else if (cmd == "conic-system") {
    int a = detail::need(c.a, "a");
    if (a < 2 || a > 4) throw UsageError("conic-system needs 2 <= a <= 4");
    auto f = detail::field_of(c);
    if (f.is_rational())
      claims.push_back([=] { return conic_linear_system(a, RationalContext{}, f); });
    else
      claims.push_back([=] { return conic_linear_system(a, ModContext{*f.prime}, f); });
  } else if (cmd == "lemma-sec") {
    auto s = detail::spec_of(c);
    auto p = detail::prime_of(c);
    claims.push_back([=] { return lemma_sec_check(s, c.trials, seed, p); });
  } else if (cmd == "verify-all") {
    if (c.max_r < 2) throw UsageError("--max-r must be at least 2");
    claims = detail::verify_all_claims(c, seed, detail::prime_of(c), opt);
  } else {
    throw UsageError("unknown command '" + cmd + "'");
  }

  auto outcome = detail::collect(claims, err);
  for (auto& rep : outcome.reports) rep.seed = seed;
  std::stable_sort(outcome.reports.begin(), outcome.reports.end(),
                   [](const auto& x, const auto& y) { return x.claim_id < y.claim_id; });
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  std::size_t passed = 0;
  for (const auto& rep : outcome.reports) {
    arr.push_back(rep.to_json(c.timing));
    passed += rep.match;
  }
  out << (c.output == "pretty" ? arr.dump(2) : arr.dump()) << '\n';
  const std::size_t failed = outcome.reports.size() - passed + outcome.errors;
  err << "scrollsec: summary: " << passed << " passed, " << failed << " failed"
      << (outcome.budget ? ", budget exceeded" : "") << ", seed " << seed << '\n';
  if (outcome.budget) return kBudget;
  return failed ? kMismatch : kOk;
}

// Parse argv and run; every failure ends in one line on `err`.
inline int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"scrollsec: verification toolkit for secant fourfolds of rational normal scrolls"};
  app.add_option("command", c.command, "command to run")->required()->check(CLI::IsMember(commands()));
  app.add_option("--a", c.a, "smaller scroll degree a");
  app.add_option("--b", c.b, "larger scroll degree b");
  app.add_option("--r", c.r, "r = a + b for tangent-cone and singular-scroll");
  app.add_option("--d", c.d, "degree of the rational normal curve");
  app.add_option("--samples", c.samples, "sample points for smooth");
  app.add_option("--trials", c.trials, "random secant lines for lemma-sec");
  app.add_option("--seed", c.seed, "random seed (default: from entropy; always echoed)");
  app.add_option("--prime", c.prime, "built-in prime or Q");
  app.add_option("--output", c.output, "json or pretty");
  app.add_option("--budget", c.budget, "S-pair budget per Groebner computation");
  app.add_option("--max-r", c.max_r, "largest r covered by verify-all");
  bool no_timing = false;
  app.add_flag("--no-timing", no_timing, "write elapsed_ms as 0");
  app.add_option("--kind", c.kind, "smooth: scroll|tangent-cone; emit-ideal: scroll|rnc|tangent-cone|chart|singular-scroll");
  app.add_option("--ideal-in", c.ideal_in, "ideal file to normalize (emit-ideal)");
  app.add_option("--ideal-out", c.ideal_out, "write the ideal file here instead of stdout");
  app.add_option("--coeffs", c.coeffs, "15 comma-separated rationals (git-check)");
  app.add_flag("--random", c.random, "random hyperplane (git-check)");
  try {
    app.parse(argc, argv);
    c.timing = !no_timing;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    err << "scrollsec: usage: " << msg << '\n';
    return kUsage;
  }
  try {
    return run(c, out, err);
  } catch (const BudgetExceeded& e) {
    err << "scrollsec: budget: " << e.what() << '\n';
    return kBudget;
  } catch (const NonGenericSlice& e) {
    err << "scrollsec: mismatch: " << e.what() << '\n';
    return kMismatch;
  } catch (const std::invalid_argument& e) {
    err << "scrollsec: usage: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "scrollsec: usage: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace scrollsec::cli
