// schurlab: certify, factor, complete, enumerate and probe multiplicative
// Schur multipliers from the command line.
//
// Exit codes: 0 ok, 1 property false, 2 input error, 3 underdetermined.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "schurlab/io.hpp"
#include "schurlab/schurlab.hpp"
#include "schurlab/verify.hpp"

namespace {

using namespace schurlab;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kPropertyFalse = 1;
constexpr int kInputError = 2;
constexpr int kUnderdetermined = 3;

Tolerance resolve_tolerance(const std::optional<double>& flag) {
  double rel = Tolerance::kDefaultRel;
  if (const char* env = std::getenv("SCHURLAB_TOL"); env && *env) {
    try {
      rel = io::parse_real(env);
    } catch (const io::ParseError&) {
      throw PreconditionError(std::string("SCHURLAB_TOL is not a number: '") + env + "'");
    }
  }
  if (flag) rel = *flag;
  return Tolerance(rel, Tolerance::kDefaultAbs);
}

std::string human_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

std::string human_complex(Complex z) {
  if (z.imag() == 0.0) return human_number(z.real());
  const auto imag = [](double v) {
    if (v == 1.0) return std::string("i");
    if (v == -1.0) return std::string("-i");
    return human_number(v) + "i";
  };
  if (z.real() == 0.0) return imag(z.imag());
  const auto im = imag(z.imag());
  return human_number(z.real()) + (im.front() == '-' ? "" : "+") + im;
}

std::string tolerance_line(const Tolerance& tol) {
  return "tolerance: rel=" + human_number(tol.rel()) + " abs=" + human_number(tol.abs());
}

void print_conditions(const std::vector<ConditionResult>& conditions) {
  for (const auto& c : conditions)
    std::printf("  %-30s %s  residual %s\n", c.name.c_str(), c.pass ? "pass" : "FAIL", human_number(c.residual).c_str());
}

ComplexMatrix load_square(const std::string& path) {
  auto a = io::to_matrix(io::load_document(path));
  require_square(a, "input");
  return a;
}

json witness_json(const std::optional<CocycleWitness>& w) {
  if (!w) return nullptr;
  json out = {{"i", w->i}, {"j", w->j}};
  out["k"] = w->k ? json(*w->k) : json(nullptr);
  return out;
}

std::string witness_text(const CocycleWitness& w) {
  return "(" + std::to_string(w.i) + "," + std::to_string(w.j) + "," + (w.k ? std::to_string(*w.k) : "-") + ")";
}

// --------------------------------------------------------------------------

int cmd_check(const std::string& path, const std::optional<double>& tol_flag, bool star, bool as_json,
              std::size_t trials, std::uint64_t seed) {
  const auto tol = resolve_tolerance(tol_flag);
  const auto a = load_square(path);
  if (max_abs(a) == 0.0) throw PreconditionError("the zero matrix defines the zero Schur map");
  const auto cert = certify_multiplicative(a, tol, trials, seed);

  std::optional<StarCertificate> star_cert;
  std::string star_reason;
  try {
    star_cert = certify_star_multiplicative(a, tol);
  } catch (const PreconditionError& e) {
    star_reason = e.what();
  }
  const bool star_verdict = star_cert && star_cert->verdict;

  if (as_json) {
    json out;
    out["tolerance"] = io::tolerance_json(tol);
    out["multiplicative"] = {{"verdict", cert.verdict},
                             {"inconsistent", cert.inconsistent},
                             {"conditions", io::conditions_json(cert.conditions)},
                             {"witness", witness_json(cert.witness)},
                             {"scaling", cert.scaling ? io::scaling_json(*cert.scaling) : json(nullptr)}};
    json s = {{"verdict", star_verdict}};
    if (star_cert) {
      s["inconsistent"] = star_cert->inconsistent;
      s["conditions"] = io::conditions_json(star_cert->conditions);
    } else {
      s["reason"] = star_reason;
    }
    out["star_preserving"] = s;
    std::cout << out.dump() << '\n';
  } else {
    std::printf("%s\n", tolerance_line(tol).c_str());
    std::printf("multiplicative: %s\n", cert.verdict ? "yes" : "no");
    print_conditions(cert.conditions);
    if (cert.inconsistent) std::printf("  note: conditions disagree; the input is badly conditioned\n");
    if (cert.witness) std::printf("  worst cocycle violation at %s\n", witness_text(*cert.witness).c_str());
    std::printf("star-preserving: %s\n", star_verdict ? "yes" : "no");
    if (star_cert)
      print_conditions(star_cert->conditions);
    else
      std::printf("  not evaluated: %s\n", star_reason.c_str());
  }
  return cert.verdict && (!star || star_verdict) ? kOk : kPropertyFalse;
}

int cmd_factor(const std::string& path, const std::optional<double>& tol_flag, bool as_json) {
  const auto tol = resolve_tolerance(tol_flag);
  const auto a = load_square(path);
  const auto cocycle = check_cocycle(a, tol);
  if (!cocycle.pass) {
    std::fprintf(stderr, "not multiplicative: cocycle condition fails with residual %s at %s\n",
                 human_number(cocycle.residual).c_str(), witness_text(*cocycle.witness).c_str());
    if (as_json)
      std::cout << json{{"multiplicative", false},
                        {"failed_condition", "cocycle"},
                        {"residual", io::number(cocycle.residual)},
                        {"witness", witness_json(cocycle.witness)}}
                       .dump()
                << '\n';
    return kPropertyFalse;
  }
  const auto f = factor_scaling(a, tol);
  if (as_json) {
    std::cout << json{{"multiplicative", true},
                      {"scaling", io::scaling_json(f)},
                      {"similarity", "S_A(B) = L B L^-1 with L = diag(f)"},
                      {"tolerance", io::tolerance_json(tol)}}
                     .dump()
              << '\n';
    return kOk;
  }
  std::string text = "f = (";
  for (std::size_t i = 0; i < f.size(); ++i) text += (i ? ", " : "") + human_complex(f[i]);
  std::printf("%s)\n", text.c_str());
  std::printf("S_A(B) = Λ B Λ^{-1} with Λ = diag(f)\n");
  return kOk;
}

int cmd_complete(const std::string& path, const std::optional<double>& tol_flag, bool star) {
  const auto tol = resolve_tolerance(tol_flag);
  const auto p = io::to_partial(io::load_document(path));
  const auto report = complete_partial(p, tol, star);
  switch (report.status) {
    case CompletionStatus::completed:
      std::cout << io::serialize(*report.matrix) << '\n';
      return kOk;
    case CompletionStatus::inconsistent: {
      json violations = json::array();
      for (const auto& v : report.violations) {
        violations.push_back({{"cycle", v.cycle}, {"entry", {v.row, v.col}}, {"residual", io::number(v.residual)}});
        std::string cycle;
        for (auto k : v.cycle) cycle += (cycle.empty() ? "" : ",") + std::to_string(k);
        std::fprintf(stderr, "inconsistent cycle (%s) through entry (%zu,%zu): residual %s\n", cycle.c_str(), v.row,
                     v.col, human_number(v.residual).c_str());
      }
      std::cout << json{{"status", "inconsistent"}, {"violations", violations}, {"tolerance", io::tolerance_json(tol)}}
                       .dump()
                << '\n';
      return kPropertyFalse;
    }
    case CompletionStatus::underdetermined:
      std::fprintf(stderr, "underdetermined: constraint graph has %zu components\n", report.components.size());
      std::cout << json{{"status", "underdetermined"},
                        {"components", report.components},
                        {"tolerance", io::tolerance_json(tol)}}
                       .dump()
                << '\n';
      return kUnderdetermined;
  }
  return kInputError;
}

int cmd_enumerate(long long n, const std::string& format) {
  if (n < 1 || n > static_cast<long long>(kMaxEnumerationSize)) {
    std::fprintf(stderr, "enumerate: n must lie in 1..%zu\n", kMaxEnumerationSize);
    return kInputError;
  }
  if (format != "jsonl" && format != "array") {
    std::fprintf(stderr, "enumerate: unknown format '%s' (jsonl, array)\n", format.c_str());
    return kInputError;
  }
  const bool array = format == "array";
  bool first = true;
  std::string buffer;
  if (array) buffer += '[';
  for_each_real_positive(static_cast<std::size_t>(n), [&](const SignMatrix& s) {
    if (array && !first) buffer += ',';
    first = false;
    buffer += io::serialize(s.to_matrix());
    if (!array) buffer += '\n';
    if (buffer.size() > (1U << 20)) {
      std::fwrite(buffer.data(), 1, buffer.size(), stdout);
      buffer.clear();
    }
  });
  if (array) buffer += "]\n";
  std::fwrite(buffer.data(), 1, buffer.size(), stdout);
  return kOk;
}

int cmd_norm(const std::string& path, const std::optional<double>& tol_flag, bool as_json) {
  const auto tol = resolve_tolerance(tol_flag);
  const auto a = load_square(path);
  const double op = operator_norm(a);
  std::optional<double> map_norm;
  try {
    map_norm = schur_map_norm(a, tol);
  } catch (const NotMultiplicativeError&) {
  }
  if (as_json) {
    std::cout << json{{"operator_norm", op},
                      {"schur_map_norm", map_norm ? json(*map_norm) : json(nullptr)},
                      {"tolerance", io::tolerance_json(tol)}}
                     .dump()
              << '\n';
  } else {
    std::printf("%s\n", tolerance_line(tol).c_str());
    std::printf("operator_norm: %s\n", human_number(op).c_str());
    std::printf("schur_map_norm: %s\n", map_norm ? human_number(*map_norm).c_str() : "undefined (not multiplicative)");
  }
  return map_norm ? kOk : kPropertyFalse;
}

CoefficientGenerator parse_generator(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (kind == "toeplitz") {
    const auto comma = arg.find(',');
    const double re = io::parse_real(io::trim(arg.substr(0, comma)));
    const double im = comma == std::string::npos ? 0.0 : io::parse_real(io::trim(arg.substr(comma + 1)));
    return CoefficientGenerator::toeplitz({re, im});
  }
  if (kind == "scaling") return CoefficientGenerator::from_scaling(io::parse_scaling(io::read_text(arg)));
  if (kind == "table") return CoefficientGenerator::table(io::to_matrix(io::load_document(arg)));
  throw io::ParseError("unknown generator '" + spec + "' (toeplitz:<re>,<im> | scaling:<file> | table:<file>)");
}

int cmd_witness(const std::string& gen_spec, std::size_t n, const std::optional<double>& tol_flag, bool as_json,
                bool csv) {
  const auto tol = resolve_tolerance(tol_flag);
  if (n == 0) throw DimensionError("witness: n must be positive");
  const auto gen = parse_generator(gen_spec);
  if (csv) {
    std::printf("n,lower_bound\n");
    for (std::size_t m = 1;; m = std::min(2 * m, n)) {
      const auto w = unboundedness_witness(gen, m, tol);
      std::printf("%zu,%s\n", m, io::format_double(w.lower_bound).c_str());
      if (m == n) break;
    }
  }
  const auto w = unboundedness_witness(gen, n, tol);
  const bool ok = w.lower_bound >= static_cast<double>(n) - tol.threshold(static_cast<double>(n));
  if (as_json) {
    json x = json::array();
    for (const auto& z : w.x) x.push_back(io::complex_json(z));
    std::cout << json{{"generator", gen_spec},
                      {"n", n},
                      {"lower_bound", w.lower_bound},
                      {"x", x},
                      {"tolerance", io::tolerance_json(tol)}}
                     .dump()
              << '\n';
  } else if (!csv) {
    std::printf("generator: %s\nn: %zu\nlower_bound: %s\nx: [", gen_spec.c_str(), n, human_number(w.lower_bound).c_str());
    for (std::size_t i = 0; i < w.x.size(); ++i) std::printf("%s%s", i ? ", " : "", human_complex(w.x[i]).c_str());
    std::printf("]\n");
  }
  return ok ? kOk : kPropertyFalse;
}

int cmd_verify(const std::string& suite, std::size_t trials, std::uint64_t seed, const std::optional<double>& tol_flag) {
  const auto tol = resolve_tolerance(tol_flag);
  if (!verify::is_suite_name(suite)) {
    std::fprintf(stderr, "verify: unknown suite '%s'\n", suite.c_str());
    return kInputError;
  }
  const auto report = verify::run_suite(suite, trials, seed, tol);
  json failures = json::array();
  for (const auto& f : report.failures)
    failures.push_back({{"case", f.case_id}, {"digest", f.digest}, {"residual", io::number(f.residual)}});
  std::cout << json{{"suite", report.suite},
                    {"trials", report.trials},
                    {"seed", report.seed},
                    {"tolerance", io::tolerance_json(tol)},
                    {"checks", report.checks},
                    {"failures", failures},
                    {"elapsed", report.elapsed}}
                   .dump()
            << '\n';
  return report.ok() ? kOk : kPropertyFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"schurlab: multiplicative Schur multipliers"};
  app.require_subcommand(1);

  std::optional<double> tol;
  std::string path;
  bool star = false;
  bool as_json = false;
  std::size_t trials = 8;
  std::uint64_t seed = 0;

  auto* check = app.add_subcommand("check", "certify that S_A is multiplicative (and *-preserving)");
  check->add_option("path", path, "matrix document (JSON, .csv, or - for stdin)")->required();
  check->add_option("--tol", tol, "relative tolerance");
  check->add_flag("--star", star, "also require the *-preserving conditions for exit status 0");
  check->add_flag("--json", as_json, "machine-readable certificate");
  check->add_option("--trials", trials, "random (B, C) pairs for the product test")->check(CLI::PositiveNumber);
  check->add_option("--seed", seed, "seed for the product test");

  auto* factor = app.add_subcommand("factor", "extract f with a_ij = f(i)/f(j)");
  factor->add_option("path", path, "matrix document")->required();
  factor->add_option("--tol", tol, "relative tolerance");
  factor->add_flag("--json", as_json, "machine-readable output");

  auto* complete = app.add_subcommand("complete", "complete a partially specified multiplicative matrix");
  complete->add_option("path", path, "partial matrix document (null = unspecified)")->required();
  complete->add_option("--tol", tol, "relative tolerance");
  complete->add_flag("--star", star, "require unimodular entries (*-preserving completion)");

  long long n_enum = 0;
  std::string format = "jsonl";
  auto* enumerate = app.add_subcommand("enumerate", "list all real positive multiplicative n x n matrices");
  enumerate->add_option("n", n_enum, "matrix size, 1..24")->required();
  enumerate->add_option("--format", format, "jsonl (one document per line) or array");

  auto* norm = app.add_subcommand("norm", "operator norm of A and of S_A");
  norm->add_option("path", path, "matrix document")->required();
  norm->add_option("--tol", tol, "relative tolerance");
  norm->add_flag("--json", as_json, "machine-readable output");

  std::string gen_spec;
  std::size_t n_witness = 0;
  bool csv = false;
  auto* witness = app.add_subcommand("witness", "unit vectors on which a truncated generator has norm >= n");
  witness->add_option("--gen", gen_spec, "toeplitz:<re>,<im> | scaling:<file> | table:<file>")->required();
  auto* n_pos = witness->add_option("N", n_witness, "corner size");
  witness->add_option("--n", n_witness, "corner size")->excludes(n_pos);
  witness->add_option("--tol", tol, "relative tolerance");
  witness->add_flag("--json", as_json, "machine-readable output");
  witness->add_flag("--csv", csv, "emit n,lower_bound rows for n = 1, 2, 4, ..., n");

  std::string suite = "all";
  std::size_t verify_trials = 100;
  std::uint64_t verify_seed = 0;
  auto* verify_cmd = app.add_subcommand("verify", "run the seeded property suites");
  verify_cmd->add_option("--suite", suite, "thm21 | thm24 | prop26 | group | torus | completion | schatten | extreme | all");
  verify_cmd->add_option("--trials", verify_trials, "trials per suite");
  verify_cmd->add_option("--seed", verify_seed, "seed");
  verify_cmd->add_option("--tol", tol, "relative tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*check) return cmd_check(path, tol, star, as_json, trials, seed);
    if (*factor) return cmd_factor(path, tol, as_json);
    if (*complete) return cmd_complete(path, tol, star);
    if (*enumerate) return cmd_enumerate(n_enum, format);
    if (*norm) return cmd_norm(path, tol, as_json);
    if (*witness) {
      if (n_witness == 0) {
        std::fprintf(stderr, "witness: corner size n is required\n");
        return kInputError;
      }
      return cmd_witness(gen_spec, n_witness, tol, as_json, csv);
    }
    if (*verify_cmd) return cmd_verify(suite, verify_trials, verify_seed, tol);
  } catch (const NotMultiplicativeError& e) {
    std::fprintf(stderr, "not multiplicative: %s\n", e.what());
    return kPropertyFalse;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kInputError;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kInputError;
  }
  return kInputError;
}
