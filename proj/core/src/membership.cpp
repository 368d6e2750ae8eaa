#include "nrs/membership.hpp"

#include <cmath>
#include <sstream>

#include "nrs/errors.hpp"

namespace nrs {

namespace {

void check_sorted(const std::array<double, 4>& q, const std::string& label, const char* part) {
  for (int k = 0; k < 3; ++k) {
    if (!(q[k] <= q[k + 1])) {
      std::ostringstream os;
      os << "label '" << label << "': " << part << " breakpoint " << k + 2 << " (" << q[k + 1]
         << ") is below breakpoint " << k + 1 << " (" << q[k] << ")";
      throw ValidationError(os.str());
    }
  }
}

}  // namespace

void TrapezoidParams::validate(const std::string& label) const {
  check_sorted(truth, label, "truth");
  check_sorted(indeterminacy, label, "indeterminacy");
  check_sorted(falsity, label, "falsity");
}

double trapezoid_value(double x, const std::array<double, 4>& a) {
  if (x < a[0]) return 0.0;
  if (x < a[1]) return (x - a[0]) / (a[1] - a[0]);
  if (x <= a[2]) return 1.0;
  if (x < a[3]) return (a[3] - x) / (a[3] - a[2]);
  return 0.0;
}

double valley_value(double x, const std::array<double, 4>& b) {
  if (x <= b[0]) return 1.0;
  if (x < b[1]) return (b[1] - x) / (b[1] - b[0]);
  if (x <= b[2]) return 0.0;
  if (x < b[3]) return (x - b[2]) / (b[3] - b[2]);
  return 1.0;
}

Triple neutrosophicate(double x, const TrapezoidParams& p) {
  return {clamp01(trapezoid_value(x, p.truth)), clamp01(valley_value(x, p.indeterminacy)),
          clamp01(valley_value(x, p.falsity))};
}

std::vector<LabeledNSet> neutrosophicate_record(std::span<const double> values,
                                                std::span<const AttributeMembership> config) {
  if (values.size() != config.size()) {
    throw ValidationError("attribute value count (" + std::to_string(values.size()) +
                          ") does not match membership configuration (" +
                          std::to_string(config.size()) + " attributes)");
  }
  std::vector<LabeledNSet> out;
  out.reserve(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) {
    const auto& attr = config[k];
    if (attr.labels.empty()) {
      throw ValidationError("attribute '" + attr.attribute + "' has no configured labels");
    }
    std::vector<LabeledNSet::Entry> entries;
    entries.reserve(attr.labels.size());
    for (const auto& lm : attr.labels) {
      entries.emplace_back(lm.label, neutrosophicate(values[k], lm.params));
    }
    out.push_back(LabeledNSet(std::move(entries)));
  }
  return out;
}

void DeneutroParams::validate() const {
  auto in01 = [](double v) { return v >= 0.0 && v <= 1.0; };
  if (!in01(alpha) || !in01(beta) || !in01(gamma)) {
    throw ValidationError("deneutrosophication weights must lie in [0,1]");
  }
  if (std::abs(alpha + beta + gamma - 1.0) > 1e-12) {
    throw ValidationError("deneutrosophication weights must sum to 1");
  }
}

double synthesize(const Triple& h, const DeneutroParams& d) {
  return d.alpha * h.t + d.beta * h.f / 4.0 + d.gamma * h.i / 2.0;
}

double deneutrosophicate(const std::function<double(double)>& curve, double lo, double hi,
                         std::size_t grid_points) {
  if (grid_points < 2) throw ValidationError("deneutrosophicate needs at least 2 grid points");
  if (!(hi > lo)) throw ValidationError("deneutrosophicate needs a nonempty interval");
  const double h = (hi - lo) / static_cast<double>(grid_points - 1);
  double mass = 0.0, moment = 0.0;
  for (std::size_t k = 0; k < grid_points; ++k) {
    const double y = lo + h * static_cast<double>(k);
    const double v = curve(y);
    const double w = (k == 0 || k + 1 == grid_points) ? 0.5 : 1.0;
    mass += w * v;
    moment += w * v * y;
  }
  if (!(mass > 0.0)) throw DataError("deneutrosophicate: curve has no mass on the interval");
  return moment / mass;
}

double crisp_from_heights(std::span<const double> heights, std::span<const double> anchors) {
  if (heights.size() != anchors.size() || heights.empty()) {
    throw ValidationError("crisp_from_heights: heights and anchors must align and be nonempty");
  }
  double mass = 0.0, moment = 0.0;
  for (std::size_t k = 0; k < heights.size(); ++k) {
    mass += heights[k];
    moment += heights[k] * anchors[k];
  }
  if (!(mass > 0.0)) throw DataError("crisp_from_heights: total height is not positive");
  return moment / mass;
}

}  // namespace nrs
