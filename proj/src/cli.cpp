#include <zmsp/cli.hpp>

#include <zmsp/errors.hpp>
#include <zmsp/groupdet.hpp>
#include <zmsp/msp.hpp>
#include <zmsp/partitions.hpp>
#include <zmsp/verify.hpp>

#include "CLI11.hpp"

#include <algorithm>
#include <ostream>

namespace zmsp::cli {

namespace {

Method parse_method(const std::string& name) {
  if (name == "auto") return Method::kAuto;
  if (name == "dp") return Method::kDp;
  if (name == "naive") return Method::kNaive;
  if (name == "closed") return Method::kClosed;
  throw UsageError("unknown method '" + name + "' (dp|naive|closed|auto)");
}

int require(const std::optional<int>& v, const char* flag, const char* command) {
  if (!v) throw UsageError(std::string(command) + " requires --" + flag);
  return *v;
}

void require_positive(int v, const char* flag) {
  if (v < 1) throw UsageError(std::string("--") + flag + " must be >= 1");
}

VerifyOptions verify_options(const CliConfig& c) {
  return VerifyOptions{std::max(1u, c.jobs), c.budget ? c.budget : default_budget()};
}

VerificationReport lemma24_sweep(int n) {
  std::vector<VerificationReport> parts;
  for_each_partition(n, n, true, [&](const BoundedPartition& p) {
    if (p.weight() % n == 0) parts.push_back(check_lemma_2_4(n, p.parts()));
  });
  return merge_reports("lemma24", n, 1, parts);
}

int run_eval(const CliConfig& c, std::ostream& out, std::ostream& err) {
  const int n = require(c.n, "n", "eval");
  const int k = require(c.k, "k", "eval");
  require_positive(n, "n");
  require_positive(k, "k");
  if (!c.lambda) throw UsageError("eval requires --lambda");
  std::vector<Part> parts = parse_parts(*c.lambda);
  if (parts.size() != static_cast<std::size_t>(k) * static_cast<std::size_t>(n)) {
    throw UsageError("--lambda must have k*n = " + std::to_string(k * n) + " parts, got " +
                     std::to_string(parts.size()));
  }
  const BoundedPartition lambda = canonical_residues(parts, n);
  std::sort(parts.begin(), parts.end());
  if (parts != lambda.parts()) {
    err << "notice: parts reduced to residues 1.." << n << "; reporting m_(" << lambda.to_string()
        << ")\n";
  }

  const std::size_t budget = c.budget ? c.budget : default_budget();
  BigInt value;
  std::string method_used;
  std::optional<std::string> closed_form;
  switch (c.method) {
    case Method::kNaive:
      value = msp_value_naive(lambda.parts(), n, k);
      method_used = "naive";
      break;
    case Method::kDp:
      value = msp_value_dp(lambda.parts(), n, k, budget);
      method_used = "dp";
      break;
    case Method::kClosed:
    case Method::kAuto:
      if (auto cf = closed_form_value(lambda.parts(), n, k)) {
        value = cf->value;
        method_used = "closed";
        closed_form = cf->form;
      } else if (c.method == Method::kClosed) {
        throw UsageError("no closed form applies to (" + lambda.to_string() + ")");
      } else {
        value = msp_value_dp(lambda.parts(), n, k, budget);
        method_used = "dp";
      }
      break;
  }

  switch (c.format) {
    case OutputFormat::kJson: {
      Json j{{"n", n}, {"k", k}, {"lambda", lambda.to_string()}, {"value", to_json(value)},
             {"method_used", method_used}};
      if (closed_form) j["closed_form"] = *closed_form;
      out << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::kTsv:
      out << "n\tk\tlambda\tvalue\tmethod_used\n"
          << n << '\t' << k << '\t' << lambda.to_string() << '\t' << value.get_str() << '\t'
          << method_used << '\n';
      break;
    case OutputFormat::kPlain:
      out << "m_(" << lambda.to_string() << ")(zeta_(" << n << "," << k << ")) = " << value.get_str()
          << "  [" << method_used << (closed_form ? ":" + *closed_form : "") << "]\n";
      break;
  }
  return kOk;
}

int run_expand(const CliConfig& c, std::ostream& out) {
  const int n = require(c.n, "n", "expand");
  const int k = require(c.k, "k", "expand");
  require_positive(n, "n");
  require_positive(k, "k");
  out << export_expansion(dedekind_expand(n, k, c.budget), c.format);
  return kOk;
}

int run_count(const CliConfig& c, std::ostream& out) {
  const int n = require(c.n, "n", "count");
  const int k = require(c.k, "k", "count");
  require_positive(n, "n");
  require_positive(k, "k");
  const TermCount tc = count_terms(n, k, c.budget);
  switch (c.format) {
    case OutputFormat::kJson:
      out << Json{{"n", n}, {"k", k}, {"nu", to_json(tc.nu)},
                  {"lambda_tilde", to_json(tc.lambda_tilde)}, {"equal", tc.equal}}
                 .dump(2)
          << '\n';
      break;
    case OutputFormat::kTsv:
      out << "n\tk\tnu\tlambda_tilde\tequal\n"
          << n << '\t' << k << '\t' << tc.nu.get_str() << '\t' << tc.lambda_tilde.get_str() << '\t'
          << (tc.equal ? "true" : "false") << '\n';
      break;
    case OutputFormat::kPlain:
      out << "Theta(Z/" << n << "Z)^" << k << " has " << tc.nu.get_str() << " terms; |Lambda~| = "
          << tc.lambda_tilde.get_str() << (tc.equal ? " (equal)" : " (strictly fewer terms)") << '\n';
      break;
  }
  return kOk;
}

int run_verify(const CliConfig& c, std::ostream& out) {
  const int n = require(c.n, "n", "verify");
  const int k = c.k.value_or(1);
  require_positive(n, "n");
  require_positive(k, "k");
  require_positive(c.l, "l");
  const VerifyOptions opts = verify_options(c);

  VerificationReport report;
  const std::string& s = c.suite;
  if (s == "lemma24") {
    if (c.lambda) {
      report = check_lemma_2_4(n, parse_parts(*c.lambda));
    } else {
      report = lemma24_sweep(n);
    }
  } else if (s == "prop21") {
    report = check_prop_2_1(n, k, opts);
  } else if (s == "branching") {
    report = check_branching(n, k, c.l, opts);
  } else if (s == "thm11") {
    report = check_sections(n, k, sum_of_roots_sections(), opts, "thm11");
  } else if (s == "thm12") {
    std::vector<VerificationReport> parts{
        check_sections(n, k, special_value_sections(), opts, "thm12"),
        check_branching(n, k, c.l, opts)};
    report = merge_reports("thm12", n, k, parts);
  } else if (s == "thm32") {
    report = check_sections(n, k, group_determinant_sections(), opts, "thm32");
  } else if (s == "all") {
    std::vector<VerificationReport> parts{check_theorems(n, k, opts)};
    if (n <= 7) parts.push_back(lemma24_sweep(n));
    parts.push_back(check_prop_2_1(n, k, opts));
    parts.push_back(check_branching(n, k, c.l, opts));
    report = merge_reports("all", n, k, parts);
  } else {
    throw UsageError("unknown suite '" + s + "' (thm11|thm12|thm32|lemma24|prop21|branching|all)");
  }
  out << render(report, c.format, !c.omit_elapsed);
  return report.passed() ? kOk : kMathFailure;
}

int run_conjecture(const CliConfig& c, std::ostream& out) {
  const int n = require(c.n, "n", "conjecture");
  const int k = require(c.k, "k", "conjecture");
  require_positive(n, "n");
  require_positive(k, "k");
  const ConjectureReport report = explore_conjecture(n, k, verify_options(c));
  out << render(report, c.format, !c.omit_elapsed);
  return kOk;
}

}  // namespace

ParseResult parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact special values of monomial symmetric polynomials at roots of unity "
               "and powers of cyclic group determinants"};
  app.require_subcommand(1);

  CliConfig config;
  std::optional<int> n, k;
  std::optional<std::string> lambda;
  std::string method = "auto", format = "json";

  auto common = [&](CLI::App* sub, bool with_k, bool with_lambda) {
    sub->add_option("--n", n, "order n of the root of unity / cyclic group");
    if (with_k) sub->add_option("--k", k, "multiplicity k (length of lambda is k*n)");
    if (with_lambda) sub->add_option("--lambda", lambda, "partition, comma separated, e.g. 1,2,3");
    sub->add_option("--format", format, "json | tsv | plain")->capture_default_str();
    sub->add_option("--budget", config.budget, "state / monomial cap (default 10^7 or ZMSP_BUDGET)");
  };

  auto* eval = app.add_subcommand("eval", "evaluate m_lambda(zeta_(n,k))");
  common(eval, true, true);
  eval->add_option("--method", method, "dp | naive | closed | auto")->capture_default_str();

  auto* expand = app.add_subcommand("expand", "print the terms of Theta(Z/nZ)^k");
  common(expand, true, false);

  auto* count = app.add_subcommand("count", "count the terms of Theta(Z/nZ)^k");
  common(count, true, false);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  common(verify, true, true);
  verify->add_option("--suite", config.suite, "thm11 | thm12 | thm32 | lemma24 | prop21 | branching | all")
      ->capture_default_str();
  verify->add_option("--l", config.l, "second multiplicity for the branching identity")
      ->capture_default_str();
  verify->add_option("--jobs", config.jobs, "worker threads")->capture_default_str();
  verify->add_flag("--omit-elapsed", config.omit_elapsed, "leave elapsed_ms out of the report");

  auto* conj = app.add_subcommand("conjecture", "collect vanishing coefficients over Lambda~_n^k");
  common(conj, true, false);
  conj->add_option("--jobs", config.jobs, "worker threads")->capture_default_str();
  conj->add_flag("--omit-elapsed", config.omit_elapsed, "leave elapsed_ms out of the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return ParseResult{std::nullopt, code == 0 ? kOk : kUsage};
  }

  if (eval->parsed()) config.command = Command::kEval;
  if (expand->parsed()) config.command = Command::kExpand;
  if (count->parsed()) config.command = Command::kCount;
  if (verify->parsed()) config.command = Command::kVerify;
  if (conj->parsed()) config.command = Command::kConjecture;
  config.n = n;
  config.k = k;
  config.lambda = lambda;
  try {
    config.method = parse_method(method);
    config.format = parse_format(format);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return ParseResult{std::nullopt, kUsage};
  }
  return ParseResult{config, kOk};
}

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::kEval: return run_eval(config, out, err);
      case Command::kExpand: return run_expand(config, out);
      case Command::kCount: return run_count(config, out);
      case Command::kVerify: return run_verify(config, out);
      case Command::kConjecture: return run_conjecture(config, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const IntegralityViolation& e) {
    err << "INTEGRALITY VIOLATION: " << e.what() << '\n';
    return kMathFailure;
  } catch (const TheoremViolation& e) {
    err << "THEOREM VIOLATION: " << e.what() << '\n';
    return kMathFailure;
  }
  return kUsage;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  const ParseResult parsed = parse_args(argc, argv, out, err);
  if (!parsed.config) return parsed.exit_code;
  return run(*parsed.config, out, err);
}

}  // namespace zmsp::cli
