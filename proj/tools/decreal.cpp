// decreal: evaluate expressions over the decimal reals.
//
//   decreal eval "<expr>" --digits N [--backend exact|lazy] [--trace N]
//   decreal scan "<expr>" --digits D --max-period P
//   decreal selftest
//
// Exit codes: 0 success, 1 parse error, 2 math error, 3 budget exhausted or
// jump membership undecided.

#include <iostream>

#include "CLI11.hpp"
#include "decreal/errors.hpp"
#include "decreal/expr.hpp"
#include "decreal/selftest.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kParse = 1;
constexpr int kMath = 2;
constexpr int kBudget = 3;

int report_parse_error(const std::string& text, const decreal::ParseError& e) {
  std::cerr << "parse error: " << e.what() << " (expected " << e.expected << ")\n"
            << "  " << text << "\n  " << std::string(e.offset, ' ') << "^\n";
  return kParse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact arithmetic on decimal expansions"};
  app.require_subcommand(1);

  std::string text;
  std::int64_t digits = 20;
  std::string backend = "exact";
  int trace = 0;
  auto* eval = app.add_subcommand("eval", "evaluate an expression");
  eval->add_option("expr", text, "expression")->required();
  eval->add_option("--digits", digits, "digits after the point")->check(CLI::PositiveNumber);
  eval->add_option("--backend", backend, "exact or lazy")
      ->check(CLI::IsMember({"exact", "lazy"}));
  eval->add_option("--trace", trace, "print the first N truncation terms of the outer operation");

  std::size_t scan_digits = 100;
  std::size_t max_period = 10;
  auto* scan = app.add_subcommand("scan", "look for an ultimate period");
  scan->add_option("expr", text, "expression")->required();
  scan->add_option("--digits", scan_digits, "digits to inspect")->check(CLI::PositiveNumber);
  scan->add_option("--max-period", max_period, "longest period tried")->check(CLI::PositiveNumber);

  auto* selftest = app.add_subcommand("selftest", "run the worked-example regression suite");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*selftest) {
      bool all = true;
      for (const auto& c : decreal::run_selftest()) {
        std::cout << (c.passed ? "PASS " : "FAIL ") << c.name;
        if (!c.passed) std::cout << " (" << c.detail << ")";
        std::cout << "\n";
        all = all && c.passed;
      }
      return all ? kOk : kMath;
    }
    auto expr = decreal::parse_expr(text);
    if (*scan) {
      std::cout << decreal::scan(*expr, scan_digits, max_period).text << "\n";
      return kOk;
    }
    auto mode = backend == "lazy" ? decreal::EvalBackend::lazy : decreal::EvalBackend::exact;
    auto res = decreal::evaluate(*expr, digits, mode, trace);
    for (const auto& line : res.trace) std::cout << line << "\n";
    switch (res.exactness) {
      case decreal::Exactness::exact:
        std::cout << res.rendered << "\n";
        return kOk;
      case decreal::Exactness::enclosed:
        std::cout << res.rendered << " \xC2\xB1 1e-" << res.radius_exponent << "\n";
        return kOk;
      case decreal::Exactness::undecided_jump:
        std::cout << res.rendered << "\n";
        return kBudget;
    }
  } catch (const decreal::ParseError& e) {
    return report_parse_error(text, e);
  } catch (const decreal::DivisionByZero& e) {
    std::cerr << "math error: " << e.what() << "\n";
    return kMath;
  } catch (const decreal::NegativeInput& e) {
    std::cerr << "math error: " << e.what() << "\n";
    return kMath;
  } catch (const decreal::BudgetExhausted& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return kBudget;
  } catch (const decreal::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMath;
  }
  return kOk;
}
