// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "affsemi/certificate.hpp"

namespace affsemi {

// ---------------------------------------------------------------------------
// Counting criterion for non-freeness

enum class Theorem3Reason { Holds, SlopeNotPositiveInteger, InterceptIrrational, SumNotAboveOne };

std::string_view to_string(Theorem3Reason r) noexcept;

struct Theorem3Check {
  bool holds = false;
  Theorem3Reason reason = Theorem3Reason::SumNotAboveOne;
  /// Sum of reciprocal slopes, when the slopes are positive integers.
  std::optional<Rational> mu;
  std::string detail;
};

/// Integer slopes, rational intercepts and sum 1/a_i > 1. A positive answer
/// guarantees a relation exists; a negative one guarantees nothing.
Theorem3Check theorem3_check(const MapSystem& sys);
inline bool theorem3_applies(const MapSystem& sys) { return theorem3_check(sys).holds; }

struct ReductionReport {
  /// Word length L.
  std::uint64_t length = 1;
  /// Letter multiplicities (l_1, ..., l_n), summing to L.
  std::vector<std::uint64_t> tuple;
  /// Common slope m = prod a_i^l_i of the words in E.
  Integer m;
  Rational mu;
  /// Multinomial coefficient (L; l_1, ..., l_n), a lower bound on |E|.
  Integer e_lower_bound;
  /// multinomial * prod a_i^-l_i.
  Rational term;
  /// All slopes already equal: E is the generating set itself.
  bool trivial = false;
};

/// Length and letter counts of a set E of equal-slope words with |E| > m.
/// Picks the smallest L >= 2 with mu^L > L^n (for L >= 2 there are at most
/// L^n tuples) and the tuple maximizing the multinomial term, first in
/// lexicographic order on ties. HypothesisNotSatisfied unless
/// theorem3_applies.
ReductionReport reduction_step(const MapSystem& sys);

enum class BoundMode {
  /// b(L) = k * L * m^L * max(1, max ceil|b_i|) * lcm(q_i), k = 2 when some
  /// intercept is negative.
  Guarded,
  /// b(L) = L * m^L * max ceil(b_i) * lcm(q_i) as originally stated.
  Strict,
};

/// Parameters of the pigeonhole count for an equal-slope alphabet.
struct RivestInputs {
  Integer alphabet;
  Integer slope;
  Integer max_ceil_abs;
  Integer max_ceil_signed;
  Integer denominator_lcm;
  bool negative = false;
};

RivestInputs rivest_inputs(const MapSystem& sys);
/// b(L), an upper bound on the number of constant terms of length-L words.
Integer rivest_count(const RivestInputs& in, std::uint64_t length, BoundMode mode = BoundMode::Guarded);
/// Smallest L with alphabet^L > b(L).
std::uint64_t rivest_length(const RivestInputs& in, BoundMode mode = BoundMode::Guarded);
/// rivest_length for an equal-slope system with n > m; two distinct words
/// of that length coincide. HypothesisNotSatisfied otherwise.
std::uint64_t rivest_bound(const MapSystem& sys, BoundMode mode = BoundMode::Guarded);

struct RelationDepthPlan {
  std::uint64_t depth = 0;
  std::uint64_t outer = 1;  ///< reduction length L
  std::uint64_t inner = 1;  ///< Rivest length over the E alphabet
  bool e_set_enumerated = false;
  bool e_set_collides = false;
};

/// Depth D for which search_relation is guaranteed to find a relation:
/// L * L' (or L when two E-words already coincide).
RelationDepthPlan relation_depth_plan(const MapSystem& sys);
inline std::uint64_t guaranteed_relation_depth(const MapSystem& sys) { return relation_depth_plan(sys).depth; }

// ---------------------------------------------------------------------------
// Relation search

struct SearchReport {
  enum class Outcome { RelationFound, NoRelationUpToDepth, StateCapExceeded };
  Outcome outcome = Outcome::NoRelationUpToDepth;
  std::optional<Relation> relation;
  /// The colliding words as discovered, before normalization.
  Word first, second;
  std::uint64_t states_explored = 0;
  std::uint64_t max_depth_reached = 0;
  /// Set for NoRelationUpToDepth: absence of short relations proves nothing.
  std::string note;

  friend bool operator==(const SearchReport& x, const SearchReport& y);
};

std::string_view to_string(SearchReport::Outcome o) noexcept;

struct SearchOptions {
  std::uint64_t max_depth = 10;
  std::uint64_t state_cap = 1'000'000;
  /// Worker threads for composing each level; results do not depend on it.
  unsigned threads = 1;
};

/// Breadth-first enumeration of words in (length, lexicographic) order keyed
/// by their exact composite, seeded with the identity as the empty word. The
/// first repeated key gives the reported relation.
SearchReport search_relation(const MapSystem& sys, const SearchOptions& options);
inline SearchReport search_relation(const MapSystem& sys, std::uint64_t max_depth, std::uint64_t state_cap) {
  return search_relation(sys, SearchOptions{max_depth, state_cap, 1});
}

// ---------------------------------------------------------------------------

/// FreeIndependence when every slope equals one integer a >= 2 and the
/// intercepts are Q-linearly independent: a relation would give, per
/// independent direction, two base-a expansions with 0/1 digits on distinct
/// digit sets.
FreenessCertificate independence_criterion(const MapSystem& sys);

/// Rank over Q of the intercept coefficient vectors.
std::size_t intercept_rank(const MapSystem& sys);

}  // namespace affsemi
