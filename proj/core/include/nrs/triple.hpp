#pragma once

#include <algorithm>
#include <cmath>
#include <iosfwd>

#include "nrs/errors.hpp"

namespace nrs {

/// One (truth, indeterminacy, falsity) membership value.
///
/// Components live in [0,1] independently, so the componentwise sum is
/// automatically within [0,3].
struct Triple {
  double t{0.0};
  double i{0.0};
  double f{0.0};

  bool is_valid() const {
    return t >= 0.0 && t <= 1.0 && i >= 0.0 && i <= 1.0 && f >= 0.0 && f <= 1.0;
  }

  void validate(const char* where = "triple") const;

  friend bool operator==(const Triple&, const Triple&) = default;
};

std::ostream& operator<<(std::ostream& os, const Triple& v);

/// How the complement treats the indeterminacy component. Truth and falsity
/// always swap.
enum class ComplementStyle {
  /// (t,i,f) -> (f, 1-i, t). Involutive and satisfies the De Morgan laws.
  Standard,
  /// (t,i,f) -> (f, i, t). Involutive, but breaks De Morgan on the
  /// indeterminacy slot.
  KeepIndeterminacy,
  /// (t,i,f) -> (f, t, i). Order three, not an involution. Kept for audit
  /// demonstrations only.
  Cyclic,
};

Triple complement(const Triple& a, ComplementStyle style = ComplementStyle::Standard);

/// max on truth, min on indeterminacy and falsity.
Triple join(const Triple& a, const Triple& b);
/// min on truth, max on indeterminacy and falsity.
Triple meet(const Triple& a, const Triple& b);

/// Partial order: a.t <= b.t and a.i >= b.i and a.f >= b.f.
bool leq(const Triple& a, const Triple& b);

/// Componentwise x + y - xy.
Triple prob_sum(const Triple& a, const Triple& b);
/// Componentwise min(1, x + y).
Triple bold_sum(const Triple& a, const Triple& b);
/// Componentwise max(0, x + y - 1).
Triple bold_intersection(const Triple& a, const Triple& b);
/// Componentwise max(0, x - y).
Triple bounded_diff(const Triple& a, const Triple& b);
/// Componentwise |x - y|.
Triple sym_diff(const Triple& a, const Triple& b);
/// Componentwise lambda*min + (1-lambda)*max; lambda in [0,1].
Triple convex_combo(const Triple& a, const Triple& b, double lambda);
/// Componentwise products.
Triple cart_prod_algebraic(const Triple& a, const Triple& b);
/// min on truth, max on indeterminacy, min on falsity.
Triple cart_prod_minmax(const Triple& a, const Triple& b);

/// Neutral element of join.
inline constexpr Triple bottom() { return Triple{0.0, 1.0, 1.0}; }
/// Neutral element of meet.
inline constexpr Triple top() { return Triple{1.0, 0.0, 0.0}; }

inline double clamp01(double x) { return std::min(1.0, std::max(0.0, x)); }

}  // namespace nrs
