#include "decreal/expr.hpp"

#include <cctype>

#include "decreal/errors.hpp"
#include "decreal/periodic_field.hpp"
#include "decreal/real_arith.hpp"
#include "decreal/sqrt.hpp"

namespace decreal {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExprPtr run() {
    ExprPtr e = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected input", "operator or end of input");
    return e;
  }

 private:
  static constexpr const char* kFactorStart = "number, '(', '-' or sqrt";

  [[noreturn]] void fail(const std::string& what, const std::string& expected) {
    throw ParseError(what + " at offset " + std::to_string(pos_), pos_, expected);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  static ExprPtr node(Expr::Kind kind, std::vector<ExprPtr> args) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->args = std::move(args);
    return e;
  }

  ExprPtr expr() {
    ExprPtr lhs = term();
    for (;;) {
      if (accept('+')) {
        lhs = node(Expr::Kind::add, {lhs, term()});
      } else if (accept('-')) {
        lhs = node(Expr::Kind::sub, {lhs, term()});
      } else {
        return lhs;
      }
    }
  }

  ExprPtr term() {
    ExprPtr lhs = factor();
    for (;;) {
      if (accept('*')) {
        lhs = node(Expr::Kind::mul, {lhs, factor()});
      } else if (accept('/')) {
        lhs = node(Expr::Kind::div, {lhs, factor()});
      } else {
        return lhs;
      }
    }
  }

  ExprPtr factor() {
    if (accept('-')) return node(Expr::Kind::neg, {primary()});
    return primary();
  }

  ExprPtr primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input", kFactorStart);
    char ch = text_[pos_];
    if (ch >= '0' && ch <= '9') {
      auto e = std::make_shared<Expr>();
      e->value = parse_unsigned_literal(text_, pos_);
      return e;
    }
    if (ch == '(') {
      ++pos_;
      ExprPtr inner = expr();
      if (!accept(')')) fail("missing ')'", ")");
      return inner;
    }
    if (text_.substr(pos_, 4) == "sqrt") {
      pos_ += 4;
      if (!accept('(')) fail("expected '(' after sqrt", "(");
      ExprPtr inner = expr();
      if (!accept(')')) fail("missing ')'", ")");
      return node(Expr::Kind::sqrt, {inner});
    }
    fail("unexpected character", kFactorStart);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

RealClass eval_node(const Expr& e, const ArithOptions& opts) {
  auto arg = [&](std::size_t i) { return eval_node(*e.args[i], opts); };
  switch (e.kind) {
    case Expr::Kind::literal:
      return RealClass(Decimal(e.value));
    case Expr::Kind::neg:
      return neg(arg(0));
    case Expr::Kind::add:
      return add(arg(0), arg(1), opts);
    case Expr::Kind::sub:
      return sub(arg(0), arg(1), opts);
    case Expr::Kind::mul:
      return mul(arg(0), arg(1), opts);
    case Expr::Kind::div:
      return mul(arg(0), reciprocal(arg(1), opts), opts);
    case Expr::Kind::sqrt:
      return sqrt_class(arg(0), opts.limits);
  }
  throw std::logic_error("unknown expression kind");
}

std::vector<std::string> trace_terms(const Expr& e, const ArithOptions& opts, int count) {
  if (count <= 0 || e.args.size() != 2) return {};
  Decimal l = eval_node(*e.args[0], opts).representative();
  Decimal r = eval_node(*e.args[1], opts).representative();
  ApproxSequence seq;
  switch (e.kind) {
    case Expr::Kind::add: seq = sum_sequence(l, r); break;
    case Expr::Kind::sub: seq = sum_sequence(l, negate(r)); break;
    case Expr::Kind::mul: seq = product_sequence(l, r); break;
    default: return {};
  }
  std::vector<std::string> out;
  for (int n = 1; n <= count; ++n) {
    out.push_back("n=" + std::to_string(n) + ": " + seq.term(n).to_string());
  }
  return out;
}

}  // namespace

ExprPtr parse_expr(std::string_view text) { return Parser(text).run(); }

std::string describe(const Expr& e) {
  static const char* names[] = {"Literal", "Neg", "Add", "Sub", "Mul", "Div", "Sqrt"};
  std::string name = names[static_cast<int>(e.kind)];
  if (e.kind == Expr::Kind::literal) return name + " " + e.value.to_string();
  std::string out = name + "(";
  for (std::size_t i = 0; i < e.args.size(); ++i) {
    if (i) out += ", ";
    out += describe(*e.args[i]);
  }
  return out + ")";
}

EvalResult evaluate(const Expr& e, std::int64_t digits, EvalBackend backend, int trace_count) {
  if (digits < 1) throw std::invalid_argument("digits must be at least 1");
  ArithOptions opts;
  opts.backend = backend == EvalBackend::exact ? Backend::exact : Backend::enclosure;
  opts.limits.depth = std::max<std::int64_t>(opts.limits.depth, digits + 10);
  EvalResult res;
  try {
    res.value = eval_node(e, opts);
    res.trace = trace_terms(e, opts, trace_count);
    if (res.value.finitely_represented()) {
      res.exactness = Exactness::exact;
      res.rendered = res.value.to_string();
      return res;
    }
    TerminatingDecimal t = res.value.representative().truncation(digits);
    res.exactness = Exactness::enclosed;
    res.radius_exponent = digits;
    res.rendered = t.to_string_fixed(digits) + "\xE2\x80\xA6";
  } catch (const JumpUnresolved& j) {
    res.exactness = Exactness::undecided_jump;
    res.candidate = j.candidate;
    res.radius_exponent = j.radius_exponent;
    res.value = RealClass(Decimal(j.candidate));
    res.rendered = j.candidate.to_string() + " \xC2\xB1 1e-" + std::to_string(j.radius_exponent) +
                   " (jump membership undecided)";
  }
  return res;
}

ScanReport scan(const Expr& e, std::size_t digits, std::size_t max_period) {
  Decimal d = e.kind == Expr::Kind::literal
                  ? Decimal(e.value)
                  : eval_node(e, ArithOptions{}).representative();
  ScanReport rep;
  rep.found = detect_period(d, digits, max_period);
  if (!rep.found) {
    rep.text = "no ultimate period \xE2\x89\xA4 " + std::to_string(max_period) + " in first " +
               std::to_string(digits) + " digits";
    return rep;
  }
  std::string repetend;
  for (auto dg : rep.found->repetend(max_period)) repetend.push_back(static_cast<char>('0' + dg));
  rep.text = "period " + rep.found->period_length().get_str() + ", preperiod " +
             std::to_string(rep.found->preperiod_length()) + ", repetend " + repetend + ": " +
             rep.found->to_string();
  return rep;
}

}  // namespace decreal
