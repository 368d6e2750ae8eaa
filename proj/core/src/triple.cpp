#include "nrs/triple.hpp"

#include <ostream>
#include <sstream>

namespace nrs {

void Triple::validate(const char* where) const {
  if (!is_valid()) {
    std::ostringstream os;
    os << where << ": components out of [0,1]: " << *this;
    throw ValidationError(os.str());
  }
}

std::ostream& operator<<(std::ostream& os, const Triple& v) {
  return os << "(" << v.t << ", " << v.i << ", " << v.f << ")";
}

Triple complement(const Triple& a, ComplementStyle style) {
  switch (style) {
    case ComplementStyle::Standard:
      return {a.f, 1.0 - a.i, a.t};
    case ComplementStyle::KeepIndeterminacy:
      return {a.f, a.i, a.t};
    case ComplementStyle::Cyclic:
      return {a.f, a.t, a.i};
  }
  return a;  // unreachable
}

Triple join(const Triple& a, const Triple& b) {
  return {std::max(a.t, b.t), std::min(a.i, b.i), std::min(a.f, b.f)};
}

Triple meet(const Triple& a, const Triple& b) {
  return {std::min(a.t, b.t), std::max(a.i, b.i), std::max(a.f, b.f)};
}

bool leq(const Triple& a, const Triple& b) {
  return a.t <= b.t && a.i >= b.i && a.f >= b.f;
}

Triple prob_sum(const Triple& a, const Triple& b) {
  return {a.t + b.t - a.t * b.t, a.i + b.i - a.i * b.i, a.f + b.f - a.f * b.f};
}

Triple bold_sum(const Triple& a, const Triple& b) {
  return {std::min(1.0, a.t + b.t), std::min(1.0, a.i + b.i), std::min(1.0, a.f + b.f)};
}

Triple bold_intersection(const Triple& a, const Triple& b) {
  return {std::max(0.0, a.t + b.t - 1.0), std::max(0.0, a.i + b.i - 1.0),
          std::max(0.0, a.f + b.f - 1.0)};
}

Triple bounded_diff(const Triple& a, const Triple& b) {
  return {std::max(0.0, a.t - b.t), std::max(0.0, a.i - b.i), std::max(0.0, a.f - b.f)};
}

Triple sym_diff(const Triple& a, const Triple& b) {
  return {std::abs(a.t - b.t), std::abs(a.i - b.i), std::abs(a.f - b.f)};
}

Triple convex_combo(const Triple& a, const Triple& b, double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw ValidationError("convex_combo: lambda must be in [0,1]");
  }
  auto mix = [lambda](double x, double y) {
    return lambda * std::min(x, y) + (1.0 - lambda) * std::max(x, y);
  };
  return {mix(a.t, b.t), mix(a.i, b.i), mix(a.f, b.f)};
}

Triple cart_prod_algebraic(const Triple& a, const Triple& b) {
  return {a.t * b.t, a.i * b.i, a.f * b.f};
}

Triple cart_prod_minmax(const Triple& a, const Triple& b) {
  return {std::min(a.t, b.t), std::max(a.i, b.i), std::min(a.f, b.f)};
}

}  // namespace nrs
