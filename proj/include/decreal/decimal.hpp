#pragma once

// Decimals as signed digit streams. A Decimal is either finitely represented
// (terminating or ultimately periodic, held exactly) or a lazy stream that
// produces its n-truncations on demand and memoizes the deepest one seen.

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "decreal/periodic.hpp"
#include "decreal/terminating.hpp"
#include "decreal/types.hpp"

namespace decreal {

enum class Representation { terminating, periodic, lazy };

/// Demand-driven truncation source. The generator is called with
/// nondecreasing levels n >= 0 and must return the n-truncation of one fixed
/// decimal; results are cached so every query is answered consistently.
class LazyStream {
 public:
  using Generator = std::function<TerminatingDecimal(std::int64_t level)>;

  explicit LazyStream(Generator gen) : gen_(std::move(gen)) {}

  TerminatingDecimal truncation(std::int64_t level) const;

 private:
  Generator gen_;
  mutable std::mutex mu_;
  mutable std::int64_t level_ = -1;
  mutable TerminatingDecimal deepest_;
};

class Decimal {
 public:
  Decimal() = default;
  Decimal(PeriodicDecimal p) : rep_(std::move(p)) {}
  Decimal(const TerminatingDecimal& t) : rep_(PeriodicDecimal::from_terminating(t)) {}

  static Decimal lazy(LazyStream::Generator gen);
  /// Literal syntax shared with the expression parser.
  static Decimal parse(std::string_view text) { return PeriodicDecimal::parse(text); }

  Representation representation() const;
  bool finitely_represented() const { return std::holds_alternative<PeriodicDecimal>(rep_); }
  /// Throws NotFinitelyRepresented for lazy streams.
  const PeriodicDecimal& finite() const;
  const PeriodicDecimal* as_finite() const { return std::get_if<PeriodicDecimal>(&rep_); }

  /// Lazy streams look at truncations down to level `budget`; a stream whose
  /// truncations are all zero that deep has undetermined sign.
  std::optional<Sign> sign(std::int64_t budget = 64) const;
  std::optional<std::int64_t> msd_index(std::int64_t budget = 64) const;

  Digit digit(std::int64_t index) const;
  /// n-truncation for any integer n (negative n drops integer digits too).
  TerminatingDecimal truncation(std::int64_t n) const;

  /// Lazy streams render their `lazy_digits`-truncation followed by "…".
  std::string to_string(RenderStyle style = RenderStyle::parens,
                        std::int64_t lazy_digits = 40) const;

 private:
  std::variant<PeriodicDecimal, std::shared_ptr<const LazyStream>> rep_;
};

Digit digit_at(const Decimal& d, std::int64_t i);
TerminatingDecimal truncate(const Decimal& d, std::int64_t n);
Decimal shift(const Decimal& d, std::int64_t k);
Decimal negate(const Decimal& d);
/// Exact for finitely represented decimals; nullopt for lazy streams.
std::optional<TailClass> classify_tail(const Decimal& d, std::int64_t budget = 64);

}  // namespace decreal
