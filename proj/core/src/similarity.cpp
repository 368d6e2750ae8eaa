#include "nrs/similarity.hpp"

#include <algorithm>
#include <cmath>

#include "nrs/errors.hpp"

namespace nrs {

const char* measure_token(MeasureKind kind) {
  switch (kind) {
    case MeasureKind::Eq60UnionIntersection: return "eq60";
    case MeasureKind::Eq65ProbSum: return "eq65";
    case MeasureKind::Eq67BoldSum: return "eq67";
    case MeasureKind::Eq69BoundedDiff: return "eq69";
    case MeasureKind::Eq71SymDiff: return "eq71";
  }
  return "?";
}

MeasureKind parse_measure(const std::string& token) {
  if (token == "eq60") return MeasureKind::Eq60UnionIntersection;
  if (token == "eq65") return MeasureKind::Eq65ProbSum;
  if (token == "eq67") return MeasureKind::Eq67BoldSum;
  if (token == "eq69") return MeasureKind::Eq69BoundedDiff;
  if (token == "eq71") return MeasureKind::Eq71SymDiff;
  throw ValidationError("unknown measure '" + token +
                        "' (expected eq60|eq65|eq67|eq69|eq71)");
}

void Measure::validate() const {
  if (weights) {
    auto [w1, w2] = *weights;
    if (w1 < 0.0 || w2 < 0.0 || std::abs(w1 + w2 - 1.0) > 1e-12) {
      throw ValidationError("measure weights must be nonnegative and sum to 1");
    }
  }
}

double component_similarity(const LabeledNSet& a, const LabeledNSet& b) {
  if (!a.same_schema(b)) {
    throw AlignmentError("component_similarity: label schemas differ");
  }
  if (a.empty()) throw ValidationError("component_similarity: empty label set");
  double sum = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const Triple& u = a.value(k);
    const Triple& v = b.value(k);
    sum += std::max({std::abs(u.t - v.t), std::abs(u.i - v.i), std::abs(u.f - v.f)});
  }
  return sum / (2.0 * static_cast<double>(a.size()));
}

SimilarityComponents record_components(const NrsRecord& a, const NrsRecord& b,
                                       bool with_ratings) {
  SimilarityComponents c;
  c.sx = component_similarity(a.x, b.x);
  c.sy = component_similarity(a.y, b.y);
  if (with_ratings) {
    if (a.d.size() != b.d.size()) {
      throw AlignmentError("record_components: disease slot count mismatch");
    }
    if (a.d.empty()) throw ValidationError("record_components: no disease slots");
    double sum = 0.0;
    for (std::size_t l = 0; l < a.d.size(); ++l) {
      sum += component_similarity(a.d[l], b.d[l]);
    }
    c.sd = sum / static_cast<double>(a.d.size());
  }
  return c;
}

double pair_measure(const Measure& m, const SimilarityComponents& c) {
  m.validate();
  if (!c.sd) {
    throw ValidationError("pair_measure: rating component missing; "
                          "substitute one before measuring a query record");
  }
  const double sx = c.sx, sy = c.sy, sd = *c.sd;
  const double w1 = m.weights ? m.weights->first : 1.0;
  const double w2 = m.weights ? m.weights->second : 1.0;
  switch (m.kind) {
    case MeasureKind::Eq60UnionIntersection:
      return std::max(w1 * std::min(sx, sy), w2 * std::min(sy, sd));
    case MeasureKind::Eq65ProbSum:
      return std::min(w1 * (sx + sy - sx * sy), w2 * (sy + sd - sy * sd));
    case MeasureKind::Eq67BoldSum:
      return std::min(w1 * std::min(1.0, sx + sy), w2 * std::min(1.0, sy + sd));
    case MeasureKind::Eq69BoundedDiff:
      return std::max(w1 * std::max(0.0, sx - sy), w2 * std::max(0.0, sy - sd));
    case MeasureKind::Eq71SymDiff:
      if (m.sym_diff_absolute) {
        return w1 * std::abs(sx - sy) + w2 * std::abs(sy - sd);
      }
      // Signed differences telescope: (sx-sy) + (sy-sd) = sx - sd.
      return w1 * (sx - sy) + w2 * (sy - sd);
  }
  throw ValidationError("unknown measure kind");
}

SimilarityMatrix similarity_matrix(const Measure& m, std::span<const SimilarityComponents> rows,
                                   bool normalize) {
  if (rows.empty()) throw ValidationError("similarity_matrix: no component rows");
  std::vector<double> v(rows.size());
  for (std::size_t k = 0; k < rows.size(); ++k) v[k] = pair_measure(m, rows[k]);

  const bool summed = m.kind == MeasureKind::Eq65ProbSum ||
                      m.kind == MeasureKind::Eq69BoundedDiff ||
                      m.kind == MeasureKind::Eq71SymDiff;
  SimilarityMatrix out;
  out.measure = m;
  out.n = rows.size();
  out.values.resize(out.n * out.n);
  for (std::size_t i = 0; i < out.n; ++i) {
    for (std::size_t j = 0; j < out.n; ++j) {
      double cell;
      switch (m.kind) {
        case MeasureKind::Eq60UnionIntersection: cell = std::max(v[i], v[j]); break;
        case MeasureKind::Eq67BoldSum: cell = v[i] * v[j]; break;
        default: cell = v[i] + v[j]; break;
      }
      if (normalize && summed) cell /= 2.0;
      out.values[i * out.n + j] = cell;
    }
  }
  return out;
}

}  // namespace nrs
