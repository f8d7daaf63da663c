// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "affsemi/affine.hpp"

namespace affsemi {

/// Open interval (lo, hi) with lo < hi.
class Interval {
 public:
  /// DegenerateInterval unless lo < hi.
  Interval(Scalar lo, Scalar hi);

  const Scalar& lo() const noexcept { return lo_; }
  const Scalar& hi() const noexcept { return hi_; }

  /// Image under an affine map; endpoints swap for negative slopes.
  Interval image(const AffineMap& f) const;
  /// Containment of open intervals: other.lo <= lo and hi <= other.hi.
  bool within(const Interval& other) const;
  /// Open intervals may share an endpoint.
  bool disjoint_from(const Interval& other) const;

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  Scalar lo_, hi_;
};

std::string to_string(const Interval& i);

/// Two distinct words with equal composites. A normalized relation has
/// distinct first letters and distinct last letters; an empty rhs stands for
/// the identity map.
struct Relation {
  Word lhs, rhs;
  AffineMap map;
};

/// Strips the common prefix and the common suffix, then orders the pair so
/// that lhs is the lexicographically smaller nonempty word. Prefix
/// cancellation is left multiplication by an inverse; suffix cancellation
/// holds because affine maps are onto. The map is recomputed from lhs.
Relation normalize(Word lhs, Word rhs, const MapSystem& sys);

/// Witness validity: words differ, compose to `map`, and are normalized.
bool is_valid(const Relation& r, const MapSystem& sys);

enum class Verdict {
  FreeTheorem1,
  FreeTheorem2,
  FreeIndependence,
  FreePingPongWitness,
  NotFree,
  Commuting,
  Inconclusive,
};

std::string_view to_string(Verdict v) noexcept;
/// Every Free* verdict.
bool is_free(Verdict v) noexcept;

struct FreenessCertificate {
  Verdict verdict = Verdict::Inconclusive;
  /// Generator indices (1-based) in the order the intervals refer to.
  std::vector<std::size_t> permutation;
  /// Ping-pong sets for the inverse system listed in `permutation` order.
  std::vector<Interval> intervals;
  std::optional<Scalar> left, right;
  std::optional<Relation> relation;
  std::string notes;
};

}  // namespace affsemi
