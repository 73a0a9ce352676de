#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "rif/errors.hpp"

namespace rif {

// A membership grade in [0, 1], stored as an exact fixed-point decimal with
// four fractional digits (integer ticks over 10^4). Cut predicates compare
// with strict inequalities, so grades must never carry binary-float noise;
// every operation here stays in integer arithmetic.
class Degree {
 public:
  static constexpr std::int32_t kScale = 10'000;

  constexpr Degree() = default;

  // Accepts "0", "1", "0.2", "0.9999", "1.0000"; rejects sign characters,
  // missing integer part, more than four fractional digits, values > 1.
  static Degree parse(std::string_view text);
  static Degree from_ticks(std::int32_t ticks);

  static constexpr Degree zero() { return Degree(0); }
  static constexpr Degree one() { return Degree(kScale); }

  constexpr std::int32_t ticks() const { return ticks_; }

  // Canonical decimal rendering: no trailing fractional zeros, so
  // parse(str()) round-trips exactly and str(parse(s)) == s for canonical s.
  std::string str() const;

  constexpr Degree complemented() const { return Degree(kScale - ticks_); }

  friend constexpr auto operator<=>(Degree, Degree) = default;

 private:
  explicit constexpr Degree(std::int32_t t) : ticks_(t) {}

  std::int32_t ticks_ = 0;
};

constexpr Degree min(Degree a, Degree b) { return a < b ? a : b; }
constexpr Degree max(Degree a, Degree b) { return a < b ? b : a; }

constexpr bool sum_at_most_one(Degree a, Degree b) {
  return a.ticks() + b.ticks() <= Degree::kScale;
}

// One element's (membership, nonmembership) grades. Valid only when
// mu + nu <= 1; containers enforce that at construction.
struct DegreePair {
  Degree mu;
  Degree nu;

  friend constexpr bool operator==(DegreePair, DegreePair) = default;
};

constexpr bool pair_valid(DegreePair d) { return sum_at_most_one(d.mu, d.nu); }

// Threshold pair for cuts. The admissible region is alpha + beta <= 1, the
// same constraint a degree pair satisfies.
class CutParams {
 public:
  CutParams(Degree alpha, Degree beta) : alpha_(alpha), beta_(beta) {
    if (!sum_at_most_one(alpha, beta)) {
      throw CutParamsError("cut params (" + alpha.str() + ", " + beta.str() +
                           "): alpha + beta exceeds 1");
    }
  }

  Degree alpha() const { return alpha_; }
  Degree beta() const { return beta_; }

  friend bool operator==(const CutParams&, const CutParams&) = default;

 private:
  Degree alpha_;
  Degree beta_;
};

}  // namespace rif
