#include "nrs/prediction.hpp"

#include <cmath>
#include <limits>

#include "nrs/errors.hpp"

namespace nrs {

namespace {

struct Means {
  double t, i, f;
};

Means weighted_means(std::span<const WeightedTriple> neighbors) {
  double w_sum = 0.0, t = 0.0, i = 0.0, f = 0.0;
  bool any_positive = false;
  for (const auto& n : neighbors) {
    if (n.weight < 0.0) throw ValidationError("predict_triple: negative neighbor weight");
    if (n.weight > 0.0) any_positive = true;
    w_sum += n.weight;
    t += n.weight * n.value.t;
    i += n.weight * n.value.i;
    f += n.weight * n.value.f;
  }
  if (!any_positive || !(w_sum > 0.0)) {
    throw DataError("degenerate neighborhood: no neighbor carries positive weight");
  }
  return {t / w_sum, i / w_sum, f / w_sum};
}

}  // namespace

PredictedTriple predict_triple(std::span<const WeightedTriple> neighbors) {
  const Means m = weighted_means(neighbors);
  PredictedTriple p;
  p.t = m.t;
  p.i = p.t + m.i;
  p.f = p.i + m.f;
  return p;
}

double theorem1_identity(const PredictedTriple& p, std::span<const WeightedTriple> neighbors) {
  const Means m = weighted_means(neighbors);
  return std::abs((p.t + p.i + p.f) - (3.0 * m.t + 2.0 * m.i + m.f));
}

double recommendation_score(const Triple& v, RecommendVariant variant) {
  switch (variant) {
    case RecommendVariant::One:
      return v.t + v.t * (3.0 - v.t - v.i - v.f);
    case RecommendVariant::Two:
      return v.t + v.t * (2.0 * (1.0 - v.t) - v.i - v.f);
  }
  return 0.0;
}

namespace {

std::size_t argmax_score(const LabeledNSet& levels, RecommendVariant variant) {
  if (levels.empty()) throw ValidationError("recommend: empty label set");
  std::size_t best = 0;
  double best_score = recommendation_score(levels.value(0), variant);
  for (std::size_t k = 1; k < levels.size(); ++k) {
    const double s = recommendation_score(levels.value(k), variant);
    if (s > best_score) {
      best = k;
      best_score = s;
    }
  }
  return best;
}

}  // namespace

std::size_t recommend_1(const LabeledNSet& levels) {
  return argmax_score(levels, RecommendVariant::One);
}

std::size_t recommend_2(const LabeledNSet& levels) {
  return argmax_score(levels, RecommendVariant::Two);
}

std::size_t mc_recommend(std::span<const LabeledNSet> per_disease_levels,
                         std::span<const double> disease_weights, RecommendVariant variant) {
  if (per_disease_levels.empty()) throw ValidationError("mc_recommend: no diseases");
  if (per_disease_levels.size() != disease_weights.size()) {
    throw ValidationError("mc_recommend: one weight per disease required");
  }
  double w_sum = 0.0;
  for (double w : disease_weights) {
    if (w < 0.0) throw ValidationError("mc_recommend: weights must be nonnegative");
    w_sum += w;
  }
  if (std::abs(w_sum - 1.0) > 1e-12) {
    throw ValidationError("mc_recommend: weights must sum to 1");
  }
  const std::size_t s = per_disease_levels.front().size();
  for (const auto& levels : per_disease_levels) {
    if (levels.size() != s) {
      throw AlignmentError("mc_recommend: diseases must share the label count");
    }
  }
  std::size_t best = 0;
  double best_score = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < s; ++k) {
    double score = 0.0;
    for (std::size_t j = 0; j < per_disease_levels.size(); ++j) {
      score += disease_weights[j] *
               recommendation_score(per_disease_levels[j].value(k), variant);
    }
    if (score > best_score) {
      best = k;
      best_score = score;
    }
  }
  return best;
}

const char* weight_mode_token(WeightMode mode) {
  return mode == WeightMode::AsStated ? "as-stated" : "inverted";
}

WeightMode parse_weight_mode(const std::string& token) {
  if (token == "as-stated") return WeightMode::AsStated;
  if (token == "inverted") return WeightMode::Inverted;
  throw ValidationError("unknown weight mode '" + token + "' (expected as-stated|inverted)");
}

std::vector<std::vector<LabelPrediction>> predict_labels(const NrsRecord& query,
                                                         std::span<const NrsRecord> corpus,
                                                         const Measure& measure,
                                                         WeightMode mode) {
  if (corpus.empty()) throw ValidationError("predict_labels: empty corpus");
  std::vector<double> weights(corpus.size());
  for (std::size_t j = 0; j < corpus.size(); ++j) {
    SimilarityComponents c = record_components(query, corpus[j], /*with_ratings=*/false);
    c.sd = c.sx;  // the rating component is unknown at prediction time
    const double v = pair_measure(measure, c);
    weights[j] = mode == WeightMode::Inverted ? std::exp(-v) : std::max(0.0, v);
  }

  std::vector<std::vector<LabelPrediction>> out;
  out.reserve(corpus.front().d.size());
  for (std::size_t l = 0; l < corpus.front().d.size(); ++l) {
    const LabeledNSet& schema = corpus.front().d[l];
    std::vector<LabelPrediction> slot;
    slot.reserve(schema.size());
    for (std::size_t q = 0; q < schema.size(); ++q) {
      std::vector<WeightedTriple> neighbors;
      neighbors.reserve(corpus.size());
      for (std::size_t j = 0; j < corpus.size(); ++j) {
        if (corpus[j].d.size() != corpus.front().d.size() ||
            !corpus[j].d[l].same_schema(schema)) {
          throw AlignmentError("predict_labels: corpus disease schemas differ");
        }
        neighbors.push_back({weights[j], corpus[j].d[l].value(q)});
      }
      slot.push_back({schema.name(q), predict_triple(neighbors)});
    }
    out.push_back(std::move(slot));
  }
  return out;
}

}  // namespace nrs
