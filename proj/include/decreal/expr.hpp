#pragma once

// Expression language over real classes:
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := '-'? (number | '(' expr ')' | 'sqrt' '(' expr ')')
//   number := digits ['.' digits] ['(' digits ')']
// A '(' directly after the fraction digits opens a repetend; anywhere else
// it groups.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "decreal/order.hpp"
#include "decreal/periodic.hpp"

namespace decreal {

struct Expr {
  enum class Kind { literal, neg, add, sub, mul, div, sqrt };
  Kind kind = Kind::literal;
  PeriodicDecimal value;  // literal only
  std::vector<std::shared_ptr<const Expr>> args;
};
using ExprPtr = std::shared_ptr<const Expr>;

/// Throws ParseError with the offset of the offending character.
ExprPtr parse_expr(std::string_view text);
/// Debug form, e.g. "Mul(Literal 1.(2), Literal 0.(81))".
std::string describe(const Expr& e);

enum class EvalBackend { exact, lazy };
enum class Exactness { exact, enclosed, undecided_jump };

struct EvalResult {
  RealClass value;
  Exactness exactness = Exactness::exact;
  /// Enclosed: |value - shown digits| < 10^-radius_exponent.
  std::int64_t radius_exponent = 0;
  /// Undecided: the terminating decimal the value is pinned to.
  std::optional<TerminatingDecimal> candidate;
  std::string rendered;
  /// Truncation sums or products of the outermost binary operation.
  std::vector<std::string> trace;
};

/// Throws DivisionByZero / NegativeInput for math errors and
/// BudgetExhausted when a lazy result cannot be refined.
EvalResult evaluate(const Expr& e, std::int64_t digits, EvalBackend backend = EvalBackend::exact,
                    int trace_terms = 0);

struct ScanReport {
  std::optional<PeriodicDecimal> found;
  std::string text;
};

/// Looks for an ultimate period of the expression's decimal expansion.
ScanReport scan(const Expr& e, std::size_t digits, std::size_t max_period);

}  // namespace decreal
