#pragma once

#include <span>
#include <string>
#include <vector>

#include "nrs/record.hpp"
#include "nrs/similarity.hpp"

namespace nrs {

/// Predicted membership value. The cumulative construction means t stays in
/// [0,1] while i may reach 2 and f may reach 3.
struct PredictedTriple {
  double t{0.0};
  double i{0.0};
  double f{0.0};
};

struct WeightedTriple {
  double weight{0.0};
  Triple value;
};

/// Similarity-weighted neighbor means, cumulatively stacked:
/// t = mean(T), i = t + mean(I), f = i + mean(F).
/// Throws DataError when no neighbor carries positive weight.
PredictedTriple predict_triple(std::span<const WeightedTriple> neighbors);

/// |(t+i+f) - (3*mean(T) + 2*mean(I) + mean(F))|; an exact identity up to
/// floating-point rounding.
double theorem1_identity(const PredictedTriple& p, std::span<const WeightedTriple> neighbors);

enum class RecommendVariant { One, Two };

/// Per-label selector scores: variant one is T*(4 - T - I - F), variant two is
/// T*(3 - 2T - I - F).
double recommendation_score(const Triple& v, RecommendVariant variant);

/// Index of the best-scoring label; ties break toward the lowest index.
std::size_t recommend_1(const LabeledNSet& levels);
std::size_t recommend_2(const LabeledNSet& levels);

/// Multi-criteria selector: per-disease scores combined with nonnegative
/// disease weights summing to 1.
std::size_t mc_recommend(std::span<const LabeledNSet> per_disease_levels,
                         std::span<const double> disease_weights, RecommendVariant variant);

enum class WeightMode { AsStated, Inverted };

const char* weight_mode_token(WeightMode mode);
WeightMode parse_weight_mode(const std::string& token);

struct LabelPrediction {
  std::string label;
  PredictedTriple value;
};

/// Predicts every disease label of a query record from a corpus.
///
/// Neighbor weights come from the pair measure with the query's feature
/// component substituted for the unknown rating component. AsStated uses the
/// raw measure (negative values clamp to zero); Inverted uses exp(-measure),
/// which keeps near-duplicates of the query influential even though the
/// measure vanishes for identical records.
std::vector<std::vector<LabelPrediction>> predict_labels(const NrsRecord& query,
                                                         std::span<const NrsRecord> corpus,
                                                         const Measure& measure,
                                                         WeightMode mode);

}  // namespace nrs
