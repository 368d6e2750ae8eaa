#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nrs/labeled_set.hpp"
#include "nrs/record.hpp"

namespace nrs {

/// The (feature, symptom, rating) scalars of one record pair. `sd` is absent
/// for query records whose ratings are unknown.
struct SimilarityComponents {
  double sx{0.0};
  double sy{0.0};
  std::optional<double> sd;
};

/// The five pair measures. The names are the tokens the CLI accepts.
enum class MeasureKind {
  Eq60UnionIntersection,
  Eq65ProbSum,
  Eq67BoldSum,
  Eq69BoundedDiff,
  Eq71SymDiff,
};

const char* measure_token(MeasureKind kind);
MeasureKind parse_measure(const std::string& token);

struct Measure {
  MeasureKind kind{MeasureKind::Eq65ProbSum};
  /// Branch weights (w1, w2); must sum to 1 when present.
  std::optional<std::pair<double, double>> weights;
  /// Use |sx-sy| + |sy-sd| instead of the signed telescoping form of the
  /// symmetrical-difference measure.
  bool sym_diff_absolute{false};

  void validate() const;
};

/// Mean over shared labels of the largest componentwise gap, halved:
/// (1/(2r)) * sum over labels of max(|dT|, |dI|, |dF|). Zero for identical
/// sets; larger values mean the sets are further apart.
double component_similarity(const LabeledNSet& a, const LabeledNSet& b);

/// Components of one record pair; `sd` averages over the disease slots.
SimilarityComponents record_components(const NrsRecord& a, const NrsRecord& b,
                                       bool with_ratings = true);

/// Combines (sx, sy, sd) into one scalar. Requires sd.
double pair_measure(const Measure& m, const SimilarityComponents& c);

struct SimilarityMatrix {
  Measure measure;
  std::size_t n{0};
  std::vector<double> values;  // row-major n*n

  double at(std::size_t i, std::size_t j) const { return values[i * n + j]; }
};

/// Pairwise aggregation of per-row pair values: cell(i,j) combines row i's and
/// row j's pair measures; the aggregator is max for the union-intersection
/// measure, product for the bold-sum measure and sum for the rest. With
/// `normalize` the summed matrices are halved back into [0,1]-style ranges.
SimilarityMatrix similarity_matrix(const Measure& m, std::span<const SimilarityComponents> rows,
                                   bool normalize = false);

}  // namespace nrs
