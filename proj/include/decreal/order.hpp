#pragma once

// Lexicographic order of decimals, jumps, the jump equivalence, and real
// numbers as its classes.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "decreal/decimal.hpp"

namespace decreal {

/// Exact when both inputs are finitely represented. Lazy inputs are compared
/// through their `budget`-truncations; nullopt if those agree.
std::optional<Ordering> compare(const Decimal& c, const Decimal& d, std::int64_t budget);
/// Exact order; throws NotFinitelyRepresented for lazy inputs.
Ordering compare(const Decimal& c, const Decimal& d);

/// True iff c < d is a jump: no decimal lies strictly between them.
bool is_jump(const Decimal& c, const Decimal& d);
std::optional<Decimal> jump_partner(const Decimal& d);
bool equivalent(const Decimal& c, const Decimal& d);
/// Some e with c < e < d, or nullopt when c >= d or (c, d) is a jump.
std::optional<Decimal> between(const Decimal& c, const Decimal& d);

/// A real number: a singleton class or a jump pair. Finitely represented
/// classes are stored through their all-zeros member; lazy decimals are
/// carried as unresolved singletons.
class RealClass {
 public:
  RealClass() = default;
  explicit RealClass(const Decimal& d);

  const Decimal& representative() const { return rep_; }
  bool finitely_represented() const { return rep_.finitely_represented(); }
  /// Members in ascending order (one or two).
  std::vector<Decimal> members() const;
  bool is_pair() const;

  /// Singletons render as the decimal, pairs as "{smaller, larger}".
  std::string to_string(RenderStyle style = RenderStyle::parens,
                        std::int64_t lazy_digits = 40) const;

 private:
  Decimal rep_;
};

RealClass real_class(const Decimal& d);

/// Throws NotFinitelyRepresented when either class is lazy.
Ordering compare_class(const RealClass& a, const RealClass& b);
/// Lazy classes are separated when their truncations at `budget` differ by
/// more than the two truncation errors.
std::optional<Ordering> compare_class(const RealClass& a, const RealClass& b, std::int64_t budget);

/// Exact class equality (finitely represented classes only).
bool operator==(const RealClass& a, const RealClass& b);

/// Least upper bound of a nonempty finite set of finitely represented
/// decimals, chosen digit by digit from the top.
Decimal supremum_finite(std::span<const Decimal> s);

}  // namespace decreal
