#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nrs/labeled_set.hpp"

namespace nrs {

/// One patient row: feature labels (x), symptom labels (y) and one label set
/// per disease.
struct NrsRecord {
  LabeledNSet x;
  LabeledNSet y;
  std::vector<LabeledNSet> d;

  friend bool operator==(const NrsRecord&, const NrsRecord&) = default;
};

enum class OpKind {
  Union,
  Intersection,
  ProbSum,
  BoldSum,
  BoldIntersection,
  BoundedDiff,
  SymDiff,
  ConvexCombo,
  CartProdAlgebraic,
  CartProdMinMax,
};

const char* op_name(OpKind kind);

Triple apply_op(OpKind kind, const Triple& a, const Triple& b,
                std::optional<double> lambda = std::nullopt);

/// Applies the scalar operation label-by-label to x, y and each disease slot.
///
/// Identical schemas are combined positionally. When label sets differ, the
/// union-style operations (union, probabilistic sum, bold sum, symmetrical
/// difference, convex combination) take the label union and read absent labels
/// as the join-neutral (0,1,1); the intersection-style operations (including
/// both Cartesian products) keep only shared labels; the bounded difference
/// keeps the labels of the left operand that the right one lacks.
///
/// `lambda` must be present exactly when kind == ConvexCombo.
/// Throws AlignmentError when the disease slot counts differ.
NrsRecord nrs_combine(OpKind kind, const NrsRecord& a, const NrsRecord& b,
                      std::optional<double> lambda = std::nullopt);

/// Complement relative to a universe record. The crisp x/y slots flip to the
/// universe labels the operand lacks (carrying the universe's values); the
/// disease slots keep their labels with triple-complemented values. Involutive
/// whenever the operand's x/y slots are restrictions of the universe.
NrsRecord nrs_complement(const NrsRecord& a, const NrsRecord& universe,
                         ComplementStyle style = ComplementStyle::Standard);

}  // namespace nrs
