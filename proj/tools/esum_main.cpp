// esum: closed forms and numeric verification for Euler sums of generalized
// hyperharmonic numbers and related reciprocal-binomial series.
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "esum/error.hpp"
#include "esum/tables.hpp"
#include "esum/verify.hpp"

namespace {

using namespace esum;

struct Config {
  long precision_bits = 192;
  long terms = 100000;
  std::string tolerance = "1e-6";
  std::string format = "plain";

  RenderFormat render_format() const {
    if (format == "latex") return RenderFormat::Latex;
    if (format == "json") return RenderFormat::Json;
    return RenderFormat::Plain;
  }

  BigFloat tolerance_value() const {
    BigFloat t(static_cast<mpfr_prec_t>(precision_bits));
    if (mpfr_set_str(t.raw(), tolerance.c_str(), 10, MPFR_RNDN) != 0) {
      throw PreconditionError("cannot parse tolerance '" + tolerance + "'");
    }
    return t;
  }
};

void add_config_flags(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--precision", cfg.precision_bits, "working precision in bits")
      ->check(CLI::Range(64L, 1000000L))
      ->capture_default_str();
  cmd->add_option("--terms", cfg.terms, "direct-summation truncation")
      ->check(CLI::Range(10L, 2000000000L))
      ->capture_default_str();
  cmd->add_option("--tolerance", cfg.tolerance, "verification tolerance (decimal)")
      ->capture_default_str();
  cmd->add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"plain", "latex", "json"}))
      ->capture_default_str();
}

void print_report(const VerifyReport& rep, const Config& cfg) {
  if (cfg.format == "json") {
    std::cout << rep.to_json() << "\n";
    return;
  }
  std::cout << "spec:       " << rep.spec_desc << "\n";
  if (rep.error) {
    std::cout << "error:      " << *rep.error << "\n";
    return;
  }
  size_t digits =
      static_cast<size_t>(static_cast<double>(rep.symbolic_numeric.precision()) * 0.30103) + 1;
  std::cout << "symbolic:   " << rep.symbolic->render(cfg.render_format()) << "\n"
            << "numeric:    " << rep.symbolic_numeric.str(digits) << "\n"
            << "direct:     " << rep.direct_sum.str(digits) << "\n"
            << "tail_bound: " << rep.tail_bound.str(6) << "\n"
            << "abs_diff:   " << rep.abs_diff.str(6) << "\n"
            << "terms:      " << rep.terms_used << "\n"
            << "passed:     " << (rep.passed ? "true" : "false") << "\n";
}

int run_table(const std::string& which, bool check, const Config& cfg) {
  const std::vector<EulerSumSpec>* specs = nullptr;
  if (which == "tablo") {
    specs = &tablo_specs();
  } else if (which == "hyper4") {
    specs = &hyper4_specs();
  } else {
    specs = &example_specs();
  }

  bool all_passed = true;
  bool json = cfg.format == "json";
  if (json) std::cout << "[";
  bool first = true;
  for (const EulerSumSpec& s : *specs) {
    ZExpr value = hyper_reduce(s);
    VerifyReport rep;
    if (check) {
      rep = verify_euler(s, cfg.terms, static_cast<mpfr_prec_t>(cfg.precision_bits),
                         cfg.tolerance_value());
      all_passed = all_passed && rep.passed;
    }
    if (json) {
      if (!first) std::cout << ",";
      std::cout << "{\"spec\":{\"p\":" << s.p << ",\"order\":" << s.order << ",\"r\":" << s.r
                << "},\"value\":" << value.render_json();
      if (check) std::cout << ",\"check\":" << rep.to_json();
      std::cout << "}";
    } else {
      std::cout << "euler p=" << s.p << " order=" << s.order << " r=" << s.r << " -> "
                << value.render(cfg.render_format());
      if (check) std::cout << (rep.passed ? "  [PASS]" : "  [FAIL]");
      std::cout << "\n";
    }
    first = false;
  }
  if (json) std::cout << "]\n";
  return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Euler-sum reduction and verification"};
  app.require_subcommand(1);
  app.set_config("--config");

  Config cfg;
  EulerSumSpec espec;
  BinomSeriesSpec bspec;
  std::string table_which;
  bool table_check = false;

  auto* reduce = app.add_subcommand("reduce", "print the closed form");
  reduce->require_subcommand(1);
  auto* red_euler = reduce->add_subcommand("euler", "zeta_{H^(p,order)}(r)");
  red_euler->add_option("--p", espec.p)->required();
  red_euler->add_option("--order", espec.order, "hyperharmonic level (q+1)")->required();
  red_euler->add_option("--r", espec.r)->required();
  add_config_flags(red_euler, cfg);
  auto* red_binom = reduce->add_subcommand("binom", "sum H_n^(p,q)/((n+m)C(n+m+l,l))");
  red_binom->add_option("--p", bspec.p)->required();
  red_binom->add_option("--q", bspec.q)->required();
  red_binom->add_option("--m", bspec.m)->required();
  red_binom->add_option("--l", bspec.l)->required();
  add_config_flags(red_binom, cfg);

  auto* verify = app.add_subcommand("verify", "check a closed form against direct summation");
  verify->require_subcommand(1);
  auto* ver_euler = verify->add_subcommand("euler", "verify an Euler sum");
  ver_euler->add_option("--p", espec.p)->required();
  ver_euler->add_option("--order", espec.order)->required();
  ver_euler->add_option("--r", espec.r)->required();
  add_config_flags(ver_euler, cfg);
  auto* ver_binom = verify->add_subcommand("binom", "verify a binomial series");
  ver_binom->add_option("--p", bspec.p)->required();
  ver_binom->add_option("--q", bspec.q)->required();
  ver_binom->add_option("--m", bspec.m)->required();
  ver_binom->add_option("--l", bspec.l)->required();
  add_config_flags(ver_binom, cfg);

  auto* table = app.add_subcommand("table", "print a value table");
  table->add_option("which", table_which, "tablo | hyper4 | examples")
      ->required()
      ->check(CLI::IsMember({"tablo", "hyper4", "examples"}));
  table->add_flag("--check", table_check, "verify each row numerically");
  add_config_flags(table, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (red_euler->parsed()) {
      std::cout << hyper_reduce(espec).render(cfg.render_format()) << "\n";
      return 0;
    }
    if (red_binom->parsed()) {
      std::cout << binom_series(bspec).render(cfg.render_format()) << "\n";
      return 0;
    }
    if (ver_euler->parsed() || ver_binom->parsed()) {
      VerifyReport rep =
          ver_euler->parsed()
              ? verify_euler(espec, cfg.terms, static_cast<mpfr_prec_t>(cfg.precision_bits),
                             cfg.tolerance_value())
              : verify_binom(bspec, cfg.terms, static_cast<mpfr_prec_t>(cfg.precision_bits),
                             cfg.tolerance_value());
      print_report(rep, cfg);
      if (rep.error) {
        std::cerr << "error: " << *rep.error << "\n";
        return 2;
      }
      return rep.passed ? 0 : 1;
    }
    if (table->parsed()) {
      return run_table(table_which, table_check, cfg);
    }
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
