#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nrs/triple.hpp"

namespace nrs {

/// Every law the audit can check. Each id maps to one closed-form predicate
/// over one to three sampled triples.
enum class LawId {
  LatticeIdempotence,
  LatticeAbsorption,
  Commutativity,
  Associativity,
  Distributivity,
  DeMorgan1,
  DeMorgan2,
  ComplementInvolution,
  KleeneCondition,
  BooleanComplement,
  MvDoubleNegation,
  MvLukasiewiczAxiom,
  Bck1,
  Bck2,
  Bck3,
  Bck4,
  Bck5,
  StoneIdentity,
  ResiduumAdjunction,
};

const char* law_name(LawId law);
std::span<const LawId> all_laws();

struct LawReport {
  LawId law{};
  std::size_t samples{0};
  std::size_t failures{0};
  double max_violation{0.0};
  /// First failing sample, when any; only the first `counterexample_arity`
  /// entries are meaningful.
  std::optional<std::array<Triple, 3>> first_counterexample;
  std::size_t counterexample_arity{0};
};

/// Evaluates one law on uniformly sampled valid triples. Deterministic for a
/// fixed (law, sample_count, seed, style). Equality checks use an absolute
/// tolerance of 1e-12.
LawReport check_law(LawId law, std::size_t sample_count, std::uint64_t seed,
                    ComplementStyle style = ComplementStyle::Standard);

/// Runs every law with the same sample count and seed, in enum order.
std::vector<LawReport> audit_all(std::size_t sample_count, std::uint64_t seed,
                                 ComplementStyle style = ComplementStyle::Standard);

/// Largest c with meet(a, c) <= b: componentwise residuum of the triple order
/// (1 or b.t on truth; 0 or the bound on the reversed components).
Triple relative_pseudocomplement(const Triple& a, const Triple& b);

}  // namespace nrs
