#pragma once

// Sequences of terminating decimals with explicit convergence moduli, and the
// limit engines built on them: hybrid limits (class valued) and formal limits
// (digitwise stabilisation) of monotone and of bracketed sequences.

#include <cstdint>
#include <functional>
#include <optional>

#include "decreal/decimal.hpp"
#include "decreal/errors.hpp"
#include "decreal/order.hpp"

namespace decreal {

enum class Contract {
  cauchy,   // |term(m) - term(n)| < 10^-k for m, n > modulus(k)
  to_zero,  // |term(n)| < 10^-k for n > modulus(k)
};

struct ApproxSequence {
  std::function<TerminatingDecimal(std::int64_t n)> term;
  std::function<std::int64_t(std::int64_t k)> modulus;
  Contract contract = Contract::cauchy;
  /// Exact limit known by construction. Limit engines check it against the
  /// enclosures before trusting it.
  std::optional<PeriodicDecimal> certified_limit;
};

/// lower < term(n) < upper for n > valid_from, upper = lower + 10^-k, and
/// lower has no digits below index -k.
struct BracketPair {
  TerminatingDecimal lower;
  TerminatingDecimal upper;
  std::int64_t valid_from = 0;
};

enum class Direction { nondecreasing, nonincreasing };

/// Bound on a monotone sequence. `strict` promises the bound is never
/// attained, which decides between the two members of a jump at the bound.
struct MonotoneBound {
  TerminatingDecimal value;
  bool strict = false;
};

struct LimitOptions {
  std::int64_t depth = 64;  // extra refinement digits per emitted truncation
  int spot_checks = 4;
};

/// The enclosure around `candidate` never separated the two members of its
/// jump. `radius_exponent` k means the limit is within 10^-k of candidate.
class JumpUnresolved : public Error {
 public:
  JumpUnresolved(TerminatingDecimal candidate, std::int64_t radius_exponent)
      : Error("limit is within 1e-" + std::to_string(radius_exponent) + " of " +
              candidate.to_string() + "; jump membership undecided"),
        candidate(std::move(candidate)),
        radius_exponent(radius_exponent) {}
  TerminatingDecimal candidate;
  std::int64_t radius_exponent;
};

/// Checks the to-zero contract at ten indices past modulus(k) for every
/// k <= k_max. Throws ContractViolation with the failing (k, n).
bool tends_to_zero(const ApproxSequence& s, std::int64_t k_max);

/// Samples pairs past modulus(k) for k <= k_max; false on the first pair
/// breaking the Cauchy bound, reported through `witness` when given.
bool cauchy_check(const ApproxSequence& s, std::int64_t k_max,
                  std::optional<ContractViolation>* witness = nullptr);

/// The class [c] with term(n) - c|n -> 0. Throws JumpUnresolved when the
/// enclosures keep straddling a jump within the depth budget.
RealClass hybrid_limit(const ApproxSequence& s, const LimitOptions& opts = {});

/// Formal limit of a monotone bounded sequence, as a lazy decimal.
Decimal formal_limit_monotone(const ApproxSequence& s, Direction direction,
                              const MonotoneBound& bound, const LimitOptions& opts = {});

/// Formal limit of a sequence squeezed by strict brackets of width 10^-k.
Decimal formal_limit_bracketed(const ApproxSequence& s,
                               std::function<BracketPair(std::int64_t k)> brackets,
                               const LimitOptions& opts = {});

/// The lazy sequence of truncations of d with modulus k -> k.
ApproxSequence truncation_sequence(const Decimal& d);

}  // namespace decreal
