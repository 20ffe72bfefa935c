// qw22: normal ordering, Hopf maps and verification suites from the shell.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qw22/errors.hpp"
#include "qw22/expression.hpp"
#include "qw22/format.hpp"
#include "qw22/hopf.hpp"
#include "qw22/suites.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;
constexpr int kBound = 3;

struct Args {
  std::string expr;
  std::string profile = "standard";
  bool json = false;
  std::string q;
  std::string p;
  std::string suite;
  qw22::SuiteOptions suite_options;
  std::string k_range = "-8..8";
};

qw22::OutputMode mode(const Args& a) {
  return a.json ? qw22::OutputMode::json : qw22::OutputMode::text;
}

void parse_k_range(const std::string& text, qw22::SuiteOptions& o) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    throw CLI::ValidationError("--k-range", "expected A..B, got '" + text + "'");
  }
  try {
    std::size_t used = 0;
    const std::string lo = text.substr(0, dots);
    const std::string hi = text.substr(dots + 2);
    o.k_lo = std::stoll(lo, &used);
    if (used != lo.size()) throw std::invalid_argument(lo);
    o.k_hi = std::stoll(hi, &used);
    if (used != hi.size()) throw std::invalid_argument(hi);
  } catch (const std::logic_error&) {
    throw CLI::ValidationError("--k-range", "expected A..B, got '" + text + "'");
  }
  if (o.k_lo > o.k_hi) {
    throw CLI::ValidationError("--k-range", "empty range '" + text + "'");
  }
}

int run_check(Args& a) {
  parse_k_range(a.k_range, a.suite_options);
  if (const char* env = std::getenv("QW22_SEED"); env && *env) {
    try {
      std::size_t used = 0;
      a.suite_options.seed = std::stoull(env, &used);
      if (env[used] != '\0') throw std::invalid_argument(env);
    } catch (const std::logic_error&) {
      throw CLI::ValidationError("QW22_SEED", std::string("not an integer: ") + env);
    }
  }
  const auto reports = qw22::run_check(a.suite, a.suite_options);
  std::cout << qw22::format(reports, mode(a)) << '\n';
  bool ok = true;
  for (const auto& r : reports) {
    std::cerr << r.suite << ": wall time " << r.wall_time_s << " s\n";
    ok = ok && r.passed();
  }
  return ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact normal ordering and Hopf structure for the q-deformed W(2,2) algebra"};
  app.require_subcommand(1);
  Args a;

  auto add_expr = [&](CLI::App* sub, bool with_profile) {
    sub->add_option("expr", a.expr, "Expression, e.g. \"L[2]*L[1]\"")->required();
    sub->add_flag("--json", a.json, "Print JSON");
    if (with_profile) {
      sub->add_option("--profile", a.profile, "standard or generalized")
          ->check(CLI::IsMember({"standard", "generalized"}));
    }
  };

  auto* normalize_cmd = app.add_subcommand("normalize", "Normal-order an expression");
  add_expr(normalize_cmd, true);
  auto* coproduct_cmd = app.add_subcommand("coproduct", "Apply Delta");
  add_expr(coproduct_cmd, false);
  auto* antipode_cmd = app.add_subcommand("antipode", "Apply S");
  add_expr(antipode_cmd, false);
  auto* counit_cmd = app.add_subcommand("counit", "Apply eps");
  add_expr(counit_cmd, false);
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate coefficients at rational q (and p)");
  add_expr(eval_cmd, true);
  eval_cmd->add_option("--q", a.q, "Rational value of q, e.g. 3/2")->required();
  eval_cmd->add_option("--p", a.p, "Rational value of p (generalized profile)");
  auto* limit_cmd = app.add_subcommand("limit", "Classical limit q = 1");
  add_expr(limit_cmd, true);

  auto* check_cmd = app.add_subcommand("check", "Run a verification suite");
  std::string suites_help = "One of:";
  for (auto n : qw22::suite_names()) suites_help += " " + std::string(n);
  suites_help += " all";
  check_cmd->add_option("suite", a.suite, suites_help)->required();
  check_cmd->add_option("--max-index", a.suite_options.max_index, "Index bound")
      ->check(CLI::Range(std::int64_t{0}, std::int64_t{64}));
  check_cmd->add_option("--max-len", a.suite_options.max_len, "Word length bound")
      ->check(CLI::Range(std::int64_t{1}, std::int64_t{16}));
  check_cmd->add_option("--k-range", a.k_range, "Module grades A..B");
  check_cmd->add_option("--seed", a.suite_options.seed, "Random seed (QW22_SEED overrides)");
  check_cmd->add_option("--cases", a.suite_options.cases, "Random cases per sample set")
      ->check(CLI::NonNegativeNumber);
  check_cmd->add_flag("--json", a.json, "Print JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::Error& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    const auto profile = qw22::parse_deformation(a.profile);
    if (*check_cmd) return run_check(a);
    const qw22::Element x = qw22::parse_element(a.expr, profile);
    const auto m = mode(a);
    if (*normalize_cmd) {
      std::cout << qw22::format(x, m) << '\n';
    } else if (*coproduct_cmd) {
      std::cout << qw22::format(qw22::coproduct(x), m) << '\n';
    } else if (*antipode_cmd) {
      std::cout << qw22::format(qw22::antipode(x), m) << '\n';
    } else if (*counit_cmd) {
      std::cout << qw22::format(qw22::counit(x), m) << '\n';
    } else if (*eval_cmd) {
      std::optional<qw22::Rational> p;
      if (!a.p.empty()) p = qw22::parse_rational(a.p);
      std::cout << qw22::format(qw22::evaluate(x, qw22::parse_rational(a.q), p), m)
                << '\n';
    } else if (*limit_cmd) {
      std::cout << qw22::format(qw22::classical_limit(x), m) << '\n';
    }
    return kOk;
  } catch (const qw22::ArithmeticBoundError& e) {
    std::cerr << "qw22: " << e.what() << '\n';
    return kBound;
  } catch (const CLI::Error& e) {
    std::cerr << "qw22: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "qw22: " << e.what() << '\n';
    return kUsage;
  }
}
