#pragma once

#include <array>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "nrs/labeled_set.hpp"

namespace nrs {

/// Breakpoints of one linguistic label: a trapezoid for truth, valleys for
/// indeterminacy and falsity. Each quadruple must be non-decreasing; equal
/// neighbours degenerate to steps.
struct TrapezoidParams {
  std::array<double, 4> truth{};
  std::array<double, 4> indeterminacy{};
  std::array<double, 4> falsity{};

  void validate(const std::string& label) const;
};

/// Trapezoid: 0 below a1, rising to 1 at a2, plateau to a3, falling to 0 at a4.
double trapezoid_value(double x, const std::array<double, 4>& a);

/// Valley: 1 below b1, falling to 0 at b2, floor to b3, rising back to 1 at b4.
double valley_value(double x, const std::array<double, 4>& b);

Triple neutrosophicate(double x, const TrapezoidParams& p);

struct LabelMembership {
  std::string label;
  TrapezoidParams params;
};

struct AttributeMembership {
  std::string attribute;
  std::vector<LabelMembership> labels;
};

/// One LabeledNSet per attribute. Throws ValidationError naming the attribute
/// when the configuration does not cover every value.
std::vector<LabeledNSet> neutrosophicate_record(std::span<const double> values,
                                                std::span<const AttributeMembership> config);

/// Synthesization weights; alpha + beta + gamma = 1.
struct DeneutroParams {
  double alpha{0.5};
  double beta{0.3};
  double gamma{0.2};

  void validate() const;
};

/// alpha*T + beta*F/4 + gamma*I/2; stays in [0,1] for valid inputs.
double synthesize(const Triple& h, const DeneutroParams& d);

/// Centroid of a membership curve over [lo, hi] by composite trapezoid
/// quadrature on a uniform grid. Throws DataError when the curve carries no
/// mass.
double deneutrosophicate(const std::function<double(double)>& curve, double lo, double hi,
                         std::size_t grid_points = 1001);

/// Discrete centroid of per-label synthesized heights over label anchors.
/// Throws DataError when the total height is not positive.
double crisp_from_heights(std::span<const double> heights, std::span<const double> anchors);

}  // namespace nrs
