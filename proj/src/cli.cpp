#include "valdim/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <ostream>

#include <CLI11.hpp>

#include "valdim/checks.hpp"
#include "valdim/error.hpp"
#include "valdim/parse.hpp"
#include "valdim/report.hpp"

namespace valdim {

namespace {

std::size_t iteration_budget() {
  const char* env = std::getenv("VALDIM_ITERATION_BUDGET");
  if (!env || !*env) return kDefaultIterationBudget;
  char* end = nullptr;
  long long v = std::strtoll(env, &end, 10);
  if (*end != '\0' || v < 1)
    throw Error(ErrorCode::InvalidArgument, std::string("VALDIM_ITERATION_BUDGET must be a positive integer, got '") + env + "'");
  return static_cast<std::size_t>(v);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dimensions and Ziegler spectra of Bezout domains from their value groups", "valdim"};
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));

  std::string gamma, top, klass = "two", lhs, rhs, suite = "acceptance", tag;
  int bound = 4;
  bool stratify = false;

  auto gamma_cmd = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--gamma", gamma, "Value group, e.g. Z^2, lex(Z,Z), Q, C(w^2), Cminus(w)")->required();
    sub->fallthrough();
    return sub;
  };
  CLI::App* classify_cmd = gamma_cmd("classify", "Dimension, superdecomposability and Ziegler summary");
  CLI::App* mdim_cmd = gamma_cmd("mdim", "m-dimension of the extended positive cone");
  CLI::App* breadth_cmd = gamma_cmd("breadth", "Breadth of the extended positive cone");
  CLI::App* chain_cmd = gamma_cmd("chain", "Chain of collapse quotients");
  chain_cmd->add_option("--class", klass, "Collapse class")->check(CLI::IsMember({"two", "chain"}));
  CLI::App* space_cmd = app.add_subcommand("cbrank-space", "Cantor-Bendixson rank of [0, top]");
  space_cmd->add_option("--top", top, "Ordinal, e.g. w^2*3+w")->required();
  space_cmd->fallthrough();
  CLI::App* zg_cmd = gamma_cmd("zg", "Points of the Ziegler spectrum");
  zg_cmd->add_option("--bound", bound, "Filter parameter bound")->check(CLI::Range(1, 12));
  zg_cmd->add_flag("--stratify", stratify, "Compute CB layers and compare with the closed form");
  CLI::App* leq_cmd = gamma_cmd("leq", "Order of pp formulas");
  leq_cmd->add_option("--lhs", lhs, "pp formula, e.g. sum((1;inf),(0;2))")->required();
  leq_cmd->add_option("--rhs", rhs, "pp formula")->required();
  CLI::App* star_cmd = gamma_cmd("spec-star", "CB rank of the inverse prime spectrum");
  CLI::App* check_cmd = app.add_subcommand("check", "Run the acceptance suite");
  check_cmd->add_option("--suite", suite, "Suite name");
  check_cmd->add_option("--tag", tag, "Restrict to checks with this tag, criterion number or id");
  check_cmd->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  int status = kExitOk;
  try {
    const std::size_t budget = iteration_budget();
    auto t0 = std::chrono::steady_clock::now();
    Json report;
    if (*space_cmd) {
      Ordinal t = parse_ordinal(top);
      report = make_report("cbrank-space", "", "closed_form", cbrank_space_payload(t, budget), seconds_since(t0));
    } else if (*check_cmd) {
      std::optional<std::string> selected;
      if (!tag.empty()) selected = tag;
      SuiteResult r = run_suite(suite, selected);
      if (!r.warning.empty()) err << "warning: " << r.warning << "\n";
      if (!r.passed()) status = kExitCheckFailed;
      report = make_report("check", "", "suite", suite_payload(r), seconds_since(t0));
    } else {
      LGroup g = parse_gamma(gamma);
      const std::string spec = to_string(g);
      if (*classify_cmd) {
        report = make_report("classify", spec, "closed_form+literal_iteration", classify_payload(classify(g)), seconds_since(t0));
      } else if (*mdim_cmd || *breadth_cmd) {
        DimensionResult r = *mdim_cmd ? mdim_cone(g, budget) : breadth_cone(g, budget);
        report = make_report(*mdim_cmd ? "mdim" : "breadth", spec, to_string(r.method), dimension_payload(g, r),
                             seconds_since(t0));
      } else if (*chain_cmd) {
        CollapseClass c = klass == "two" ? CollapseClass::Two : CollapseClass::Chain;
        CollapseChain ch = s_chain(g, c, budget);
        report = make_report("chain", spec, ch.truncated ? "literal_iteration+closed_form" : "literal_iteration",
                             chain_payload(g, c, ch), seconds_since(t0));
      } else if (*zg_cmd) {
        report = make_report("zg", spec, stratify ? "direct_stratification" : "enumeration", zg_payload(g, bound, stratify),
                             seconds_since(t0));
      } else if (*leq_cmd) {
        PpFormula l = parse_pp(g, lhs);
        PpFormula r = parse_pp(g, rhs);
        report = make_report("leq", spec, "closed_form", leq_payload(l, r), seconds_since(t0));
      } else if (*star_cmd) {
        SpecStarReport r = spec_star_cb(g);
        report = make_report("spec-star", spec, "closed_form", spec_star_payload(g, r, mdim_cone(g, budget).value),
                             seconds_since(t0));
      }
    }
    if (format == "json")
      out << report.dump(2) << "\n";
    else
      out << render_table(report);
  } catch (const SyntaxError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return status;
}

}  // namespace valdim
