#include "nrs/record.hpp"

#include <algorithm>

#include "nrs/errors.hpp"

namespace nrs {

namespace {

enum class AlignFamily { Union, Intersection, LeftMinus };

AlignFamily family_of(OpKind kind) {
  switch (kind) {
    case OpKind::Union:
    case OpKind::ProbSum:
    case OpKind::BoldSum:
    case OpKind::SymDiff:
    case OpKind::ConvexCombo:
      return AlignFamily::Union;
    case OpKind::Intersection:
    case OpKind::BoldIntersection:
    case OpKind::CartProdAlgebraic:
    case OpKind::CartProdMinMax:
      return AlignFamily::Intersection;
    case OpKind::BoundedDiff:
      return AlignFamily::LeftMinus;
  }
  return AlignFamily::Union;  // unreachable
}

LabeledNSet combine_sets(OpKind kind, const LabeledNSet& a, const LabeledNSet& b,
                         std::optional<double> lambda, const std::string& slot) {
  std::vector<LabeledNSet::Entry> out;
  if (a.same_schema(b)) {
    out.reserve(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
      out.emplace_back(a.name(k), apply_op(kind, a.value(k), b.value(k), lambda));
    }
    return LabeledNSet(std::move(out));
  }

  switch (family_of(kind)) {
    case AlignFamily::Union: {
      for (const auto& [name, va] : a.entries()) {
        auto kb = b.find(name);
        out.emplace_back(name, apply_op(kind, va, kb ? b.value(*kb) : bottom(), lambda));
      }
      for (const auto& [name, vb] : b.entries()) {
        if (!a.contains(name)) {
          out.emplace_back(name, apply_op(kind, bottom(), vb, lambda));
        }
      }
      break;
    }
    case AlignFamily::Intersection: {
      for (const auto& [name, va] : a.entries()) {
        if (auto kb = b.find(name)) {
          out.emplace_back(name, apply_op(kind, va, b.value(*kb), lambda));
        }
      }
      break;
    }
    case AlignFamily::LeftMinus: {
      for (const auto& [name, va] : a.entries()) {
        if (!b.contains(name)) out.emplace_back(name, va);
      }
      break;
    }
  }
  if (out.empty() && !a.empty() && !b.empty() && family_of(kind) == AlignFamily::Intersection) {
    throw AlignmentError("slot '" + slot + "': no shared labels between operands");
  }
  return LabeledNSet(std::move(out));
}

}  // namespace

const char* op_name(OpKind kind) {
  switch (kind) {
    case OpKind::Union: return "union";
    case OpKind::Intersection: return "intersection";
    case OpKind::ProbSum: return "prob_sum";
    case OpKind::BoldSum: return "bold_sum";
    case OpKind::BoldIntersection: return "bold_intersection";
    case OpKind::BoundedDiff: return "bounded_diff";
    case OpKind::SymDiff: return "sym_diff";
    case OpKind::ConvexCombo: return "convex_combo";
    case OpKind::CartProdAlgebraic: return "cart_prod_algebraic";
    case OpKind::CartProdMinMax: return "cart_prod_minmax";
  }
  return "?";
}

Triple apply_op(OpKind kind, const Triple& a, const Triple& b, std::optional<double> lambda) {
  switch (kind) {
    case OpKind::Union: return join(a, b);
    case OpKind::Intersection: return meet(a, b);
    case OpKind::ProbSum: return prob_sum(a, b);
    case OpKind::BoldSum: return bold_sum(a, b);
    case OpKind::BoldIntersection: return bold_intersection(a, b);
    case OpKind::BoundedDiff: return bounded_diff(a, b);
    case OpKind::SymDiff: return sym_diff(a, b);
    case OpKind::ConvexCombo:
      if (!lambda) throw ValidationError("convex_combo requires lambda");
      return convex_combo(a, b, *lambda);
    case OpKind::CartProdAlgebraic: return cart_prod_algebraic(a, b);
    case OpKind::CartProdMinMax: return cart_prod_minmax(a, b);
  }
  throw ValidationError("unknown operation kind");
}

NrsRecord nrs_combine(OpKind kind, const NrsRecord& a, const NrsRecord& b,
                      std::optional<double> lambda) {
  if (lambda && kind != OpKind::ConvexCombo) {
    throw ValidationError("lambda is only meaningful for convex_combo");
  }
  if (a.d.size() != b.d.size()) {
    throw AlignmentError("disease slot count mismatch: left has " +
                         std::to_string(a.d.size()) + ", right has " +
                         std::to_string(b.d.size()));
  }
  NrsRecord out;
  out.x = combine_sets(kind, a.x, b.x, lambda, "x");
  out.y = combine_sets(kind, a.y, b.y, lambda, "y");
  out.d.reserve(a.d.size());
  for (std::size_t l = 0; l < a.d.size(); ++l) {
    out.d.push_back(combine_sets(kind, a.d[l], b.d[l], lambda, "d" + std::to_string(l + 1)));
  }
  return out;
}

namespace {

// Crisp complement of the x/y slots: keep the universe labels the operand
// lacks, carrying the universe's own membership values.
LabeledNSet crisp_complement_set(const LabeledNSet& a, const LabeledNSet& universe,
                                 const std::string& slot) {
  for (const auto& [name, value] : a.entries()) {
    if (!universe.contains(name)) {
      throw ValidationError("slot '" + slot + "': label '" + name +
                            "' is not part of the universe");
    }
  }
  std::vector<LabeledNSet::Entry> out;
  for (const auto& [name, value] : universe.entries()) {
    if (!a.contains(name)) out.emplace_back(name, value);
  }
  return LabeledNSet(std::move(out));
}

}  // namespace

NrsRecord nrs_complement(const NrsRecord& a, const NrsRecord& universe, ComplementStyle style) {
  if (a.d.size() != universe.d.size()) {
    throw ValidationError("disease slot count mismatch against universe");
  }
  NrsRecord out;
  out.x = crisp_complement_set(a.x, universe.x, "x");
  out.y = crisp_complement_set(a.y, universe.y, "y");
  // Disease slots keep their labels; only the triples flip.
  out.d.reserve(a.d.size());
  for (const auto& slot : a.d) {
    std::vector<LabeledNSet::Entry> entries;
    entries.reserve(slot.size());
    for (const auto& [name, value] : slot.entries()) {
      entries.emplace_back(name, complement(value, style));
    }
    out.d.push_back(LabeledNSet(std::move(entries)));
  }
  return out;
}

}  // namespace nrs
