#pragma once

// Command-line front end as a library call, so tests can drive it in-process.
//
// Exit codes: 0 success or true, 1 usage or parse error, 2 domain error
// (including a false answer to is-involution / is-idempotent), 3 field
// limitation, 4 internal inconsistency.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dinf/algebra.hpp"
#include "dinf/classify.hpp"
#include "dinf/error.hpp"
#include "dinf/expr.hpp"
#include "dinf/field/field.hpp"
#include "dinf/serialize.hpp"

namespace dinf {

struct CommandResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

inline int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::BadSpec:
    case ErrorKind::CharacteristicTwo: return 1;
    case ErrorKind::NotInvolution:
    case ErrorKind::NotIdempotent:
    case ErrorKind::NotInvertible:
    case ErrorKind::InverseOutsideR:
    case ErrorKind::NotAUnit:
    case ErrorKind::NonUnitPower: return 2;
    case ErrorKind::NotSplitOverField:
    case ErrorKind::LevelOverflow:
    case ErrorKind::DivisionByZero: return 3;
    case ErrorKind::BadLevel:
    case ErrorKind::InternalInconsistency: return 4;
  }
  return 4;
}

/// splitmix64 of seed + index: independent per-iteration RNG streams.
inline std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + index + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

struct CommandConfig {
  std::uint64_t seed = 0;
  std::optional<int> iterations;
  bool json = false;
  int degree_bound = 3;
  int max_level = 64;
};

// ---- selftest ------------------------------------------------------------------

struct SuiteTally {
  std::string name;
  int passed = 0;
  int failed = 0;
  int skipped = 0;
  std::string first_failure;
};

template <class K>
std::vector<SuiteTally> run_selftest(const K& k, std::uint64_t seed, int iterations, int degree_bound) {
  using E = typename K::element_type;
  std::vector<SuiteTally> suites;
  for (const char* name : {"ring-axioms", "iota", "star", "characters", "classify", "idempotents", "parse"})
    suites.push_back(SuiteTally{name, 0, 0, 0, {}});
  auto run = [&](SuiteTally& s, const std::function<bool()>& check, const std::string& what) {
    try {
      if (check()) {
        ++s.passed;
      } else {
        ++s.failed;
        if (s.first_failure.empty()) s.first_failure = what;
      }
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::NotSplitOverField) {
        ++s.skipped;
        return;
      }
      ++s.failed;
      if (s.first_failure.empty()) s.first_failure = what + ": " + e.what();
    }
  };
  const int deg = std::min(degree_bound, 3);
  for (int i = 0; i < iterations; ++i) {
    std::mt19937_64 rng(stream_seed(seed, static_cast<std::uint64_t>(i)));
    const auto u = random_element(k, rng, deg), v = random_element(k, rng, deg), w = random_element(k, rng, deg);
    const auto unit = random_unit(k, rng, degree_bound, 3);
    const std::string where = "iteration " + std::to_string(i);
    run(suites[0], [&] { return (u * v) * w == u * (v * w) && u * one(k) == u && one(k) * u == u && u * (v + w) == u * v + u * w; },
        where);
    run(suites[1], [&] { return iota(u * v) == iota(u) * iota(v) && from_matrix(iota(u)) == u; }, where);
    run(suites[2], [&] { return u.f.star().star() == u.f && (u.f * v.f).star() == u.f.star() * v.f.star(); }, where);
    run(suites[3],
        [&] {
          const auto c = conjugate(k, unit, u);
          for (auto chi : kCharacters) {
            if (character_eval(k, chi, u * v) != character_eval(k, chi, u) * character_eval(k, chi, v)) return false;
            if (character_eval(k, chi, u + v) != character_eval(k, chi, u) + character_eval(k, chi, v)) return false;
            if (character_eval(k, chi, c) != character_eval(k, chi, u)) return false;
          }
          return true;
        },
        where);
    InvolutionParams params;
    params.degree_bound = degree_bound;
    const auto gen = random_involution(k, rng, params);
    run(suites[4],
        [&] {
          const auto c = classify(k, gen.u);
          return c.label == gen.label && c.checks.all();
        },
        where + " on " + format(k, gen.u));
    run(suites[5],
        [&] {
          const AlgebraElement<E> r = to_idempotent(k, gen.u);
          return is_idempotent(r) && to_involution(k, r) == gen.u && to_idempotent(k, to_involution(k, r)) == r;
        },
        where);
    run(suites[6], [&] { return parse_element(format(k, u), k) == u; }, where + " on " + format(k, u));
  }
  return suites;
}

// ---- dispatch ------------------------------------------------------------------------

namespace detail {

struct Outcome {
  int code = 0;
  std::string text;
  json doc;
};

template <class K>
Outcome dispatch(const K& k, const std::string& cmd, const std::string& expr, const std::string& by,
                 const CommandConfig& cfg) {
  Outcome o;
  std::ostringstream os;
  if (cmd == "normalize") {
    const auto u = parse_element(expr, k);
    os << format(k, u) << '\n';
    o.doc = element_json(k, u);
  } else if (cmd == "is-involution" || cmd == "is-idempotent") {
    const auto u = parse_element(expr, k);
    const bool inv = cmd == "is-involution";
    const bool yes = inv ? is_involution(k, u) : is_idempotent(u);
    os << (yes ? "true" : "false") << '\n';
    o.doc = json{{inv ? "involution" : "idempotent", yes}};
    o.code = yes ? 0 : 2;
  } else if (cmd == "classify") {
    const auto u = parse_element(expr, k);
    const auto c = classify(k, u);
    os << "label: " << c.label.to_string() << '\n' << "representative: " << c.label.representative_name() << '\n';
    if (c.witness) {
      os << "epsilon: " << (c.label.epsilon > 0 ? "+1" : "-1") << '\n' << "theta: " << c.label.theta << '\n';
      os << "1+f: " << describe(k, c.factors->one_plus_f) << '\n' << "g: " << describe(k, c.factors->g_fact) << '\n';
      os << "I: " << describe_roots(k, c.subset->in_I) << ", I^c: " << describe_roots(k, c.subset->in_Ic)
         << ", gamma: " << k.format(c.subset->gamma) << ", l: " << c.subset->l << '\n';
      os << "witness: " << format(k, c.witness->nu) << '\n';
    } else {
      os << "witness: none (central)\n";
    }
    auto verdict = [](bool b) { return b ? "pass" : "FAIL"; };
    os << "checks: in_R " << verdict(c.checks.in_R) << ", det_one " << verdict(c.checks.det_one) << ", conjugation "
       << verdict(c.checks.conjugation) << '\n';
    o.doc = transcript_json(k, c);
  } else if (cmd == "conjugate") {
    const auto u = parse_element(expr, k);
    const auto v = parse_element(by, k);
    const auto c = conjugate(k, v, u);
    os << format(k, c) << '\n';
    o.doc = element_json(k, c);
  } else if (cmd == "char-table") {
    const auto u = parse_element(expr, k);
    o.doc = json{{"values", json::array()}};
    for (auto chi : kCharacters) {
      const auto value = character_eval(k, chi, u);
      os << "chi(" << (chi.alpha > 0 ? "+1" : "-1") << "," << (chi.beta > 0 ? "+1" : "-1") << ") = " << k.format(value)
         << '\n';
      o.doc["values"].push_back(json{{"alpha", chi.alpha}, {"beta", chi.beta}, {"value", coeff_json(k, value)}});
    }
  } else if (cmd == "random-involution") {
    const int n = cfg.iterations.value_or(1);
    InvolutionParams params;
    params.degree_bound = cfg.degree_bound;
    o.doc = json::array();
    for (int i = 0; i < n; ++i) {
      std::mt19937_64 rng(stream_seed(cfg.seed, static_cast<std::uint64_t>(i)));
      const auto gen = random_involution(k, rng, params);
      os << format(k, gen.u) << "\t" << gen.label.to_string() << '\n';
      o.doc.push_back(json{{"element", element_json(k, gen.u)}, {"label", gen.label.to_string()}});
    }
  } else if (cmd == "selftest") {
    const int n = cfg.iterations.value_or(100);
    const auto suites = run_selftest(k, cfg.seed, n, cfg.degree_bound);
    bool ok = true;
    os << "selftest on " << k.name() << ", seed " << cfg.seed << ", " << n << " iterations\n";
    o.doc = json{{"field", k.name()}, {"seed", cfg.seed}, {"iterations", n}, {"suites", json::object()}};
    for (const auto& s : suites) {
      ok = ok && s.failed == 0;
      os << "  " << s.name << ": " << s.passed << " passed, " << s.failed << " failed";
      if (s.skipped) os << ", " << s.skipped << " skipped (not split)";
      if (!s.first_failure.empty()) os << "  first failure: " << s.first_failure;
      os << '\n';
      o.doc["suites"][s.name] = json{{"passed", s.passed}, {"failed", s.failed}, {"skipped", s.skipped}};
    }
    os << (ok ? "PASS" : "FAIL") << '\n';
    o.doc["pass"] = ok;
    o.code = ok ? 0 : 4;
  }
  o.text = os.str();
  return o;
}

inline std::string default_field(const std::string& cmd) {
  return cmd == "classify" || cmd == "random-involution" || cmd == "selftest" ? "fp:7" : "q";
}

}  // namespace detail

/// args excludes the program name.
inline CommandResult run_command(const std::vector<std::string>& args) {
  CommandResult result;
  CLI::App app{"Exact arithmetic and involution classification in the group algebra of the infinite dihedral group",
               "dinf"};
  app.require_subcommand(1);
  CommandConfig cfg;
  std::string field_text;
  app.add_option("--field", field_text, "coefficient field: q or fp:<odd prime>");
  app.add_option("--seed", cfg.seed, "random seed");
  app.add_option("--iterations", cfg.iterations, "rounds for selftest / random-involution")->check(CLI::PositiveNumber);
  app.add_flag("--json", cfg.json, "machine-readable output");
  app.add_option("--degree-bound", cfg.degree_bound, "degree bound for random units")->check(CLI::PositiveNumber);
  app.add_option("--max-level", cfg.max_level, "largest extension degree of F_p")->check(CLI::PositiveNumber);

  std::string expr, by;
  struct Spec {
    const char* name;
    const char* help;
    bool takes_expr;
  };
  const Spec specs[] = {{"normalize", "print the canonical form", true},
                        {"is-involution", "test u^2 = 1", true},
                        {"is-idempotent", "test r^2 = r", true},
                        {"classify", "conjugacy class and witness of an involution", true},
                        {"conjugate", "compute v^-1 u v", true},
                        {"char-table", "values of the four one-dimensional characters", true},
                        {"random-involution", "draw random involutions with known labels", false},
                        {"selftest", "run the invariant suites", false}};
  for (const auto& s : specs) {
    auto* sub = app.add_subcommand(s.name, s.help);
    sub->fallthrough();
    if (s.takes_expr) sub->add_option("expr", expr, "element, e.g. \"(1-a)/2\" or \"s*t^2\"")->required();
    if (std::string(s.name) == "conjugate") sub->add_option("--by", by, "the conjugating unit v")->required();
  }

  std::ostringstream out, err;
  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return {code == 0 ? 0 : 1, out.str(), err.str()};
  }
  const std::string cmd = app.get_subcommands().front()->get_name();
  if (field_text.empty()) field_text = detail::default_field(cmd);

  try {
    const AnyField field = make_field(FieldSpec::parse(field_text, cfg.max_level));
    const auto o = std::visit([&](const auto& k) { return detail::dispatch(k, cmd, expr, by, cfg); }, field);
    result.exit_code = o.code;
    result.out = cfg.json ? o.doc.dump(2) + "\n" : o.text;
  } catch (const Error& e) {
    result.exit_code = exit_code_for(e.kind());
    result.err = std::string("error: ") + e.what() + "\n";
    if (cfg.json)
      result.out = json{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}}.dump(2) + "\n";
  } catch (const std::exception& e) {
    result.exit_code = 4;
    result.err = std::string("error: ") + e.what() + "\n";
  }
  return result;
}

}  // namespace dinf
