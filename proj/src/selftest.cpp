#include "decreal/selftest.hpp"

#include <functional>

#include "decreal/expr.hpp"
#include "decreal/periodic_field.hpp"
#include "decreal/real_arith.hpp"
#include "decreal/sqrt.hpp"

namespace decreal {
namespace {

Decimal lit(const char* s) { return Decimal::parse(s); }

SelfTestCase check(std::string name, const std::function<std::string()>& got, std::string want) {
  try {
    std::string g = got();
    return {std::move(name), g == want, "got " + g + ", want " + want};
  } catch (const std::exception& e) {
    return {std::move(name), false, std::string("threw: ") + e.what()};
  }
}

}  // namespace

std::vector<SelfTestCase> run_selftest() {
  std::vector<SelfTestCase> out;
  auto eval = [](const char* text, EvalBackend b) {
    return evaluate(*parse_expr(text), 10, b).rendered;
  };
  out.push_back(check("fowler product, exact", [&] { return eval("1.(2)*0.(81)", EvalBackend::exact); },
                      "{0.(9), 1}"));
  out.push_back(check("fowler product, lazy", [&] { return eval("1.(2)*0.(81)", EvalBackend::lazy); },
                      "{0.(9), 1}"));
  out.push_back(check("fowler partial products", [] {
    auto seq = product_sequence(lit("1.(2)"), lit("0.(81)"));
    return seq.term(1).to_string() + " " + seq.term(2).to_string() + " " + seq.term(3).to_string();
  }, "0.96 0.9882 0.999596"));
  out.push_back(check("class sum", [&] { return eval("0.2 + (-0.5)", EvalBackend::exact); },
                      "{-0.3, -0.2(9)}"));
  out.push_back(check("formal sum, left grouping", [] {
    return formal_add(formal_add(lit("-0.(9)"), lit("1")), lit("0.(9)")).to_string();
  }, "0.(9)"));
  out.push_back(check("formal sum, right grouping", [] {
    return formal_add(lit("-0.(9)"), formal_add(lit("1"), lit("0.(9)"))).to_string();
  }, "1"));
  out.push_back(check("formal product (10-1)*0.(1)", [] {
    return formal_mul(formal_add(lit("10"), lit("-1")), lit("0.(1)")).to_string();
  }, "0.(9)"));
  out.push_back(check("formal 10*0.(1) - 1*0.(1)", [] {
    return formal_add(formal_mul(lit("10"), lit("0.(1)")), negate(formal_mul(lit("1"), lit("0.(1)"))))
        .to_string();
  }, "1"));
  out.push_back(check("sqrt(2) digits", [] {
    return sqrt_stream(PeriodicDecimal::parse("2")).digits.truncation(33).to_string();
  }, "1.414213562373095048801688724209698"));
  out.push_back(check("(sqrt 2)^2 from truncations", [] {
    return square_of_truncations(sqrt_stream(PeriodicDecimal::parse("2"))).truncation(30).to_string();
  }, "1." + std::string(30, '9')));
  out.push_back(check("residue obstruction for 2", [] {
    return std::string(residue_obstruction(TerminatingDecimal::from_int(2)) ? "true" : "false");
  }, "true"));
  out.push_back(check("period of 1/7", [] { return scan(*parse_expr("1/7"), 100, 10).text; },
                      "period 6, preperiod 0, repetend 142857: 0.(142857)"));
  return out;
}

}  // namespace decreal
