// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "affsemi/certificate.hpp"

namespace affsemi {

struct PingPongViolation {
  enum class Kind { Overlap, ImageEscapes };
  Kind kind;
  /// Overlap: intervals i and j intersect. ImageEscapes: f_i(I_j) is not
  /// inside I_i. Both 1-based.
  std::size_t i, j;

  friend bool operator==(const PingPongViolation&, const PingPongViolation&) = default;
};

struct VerificationReport {
  bool ok = true;
  std::vector<PingPongViolation> violations;
};

/// Checks the ping-pong hypotheses for sys with one open interval per
/// generator: pairwise disjointness and f_i(I_j) within I_i for all i, j.
/// Every violated pair is reported.
VerificationReport verify_pingpong(const MapSystem& sys, const std::vector<Interval>& intervals);

/// FreePingPongWitness when the supplied intervals verify, Inconclusive
/// otherwise.
FreenessCertificate certify_pingpong(const MapSystem& sys, const std::vector<Interval>& intervals);

/// Sorted fixed points with the gap condition g_i(R) <= g_{i+1}(L) on the
/// inverses. Emits intervals I_i = g_i((L, R)) in sorted order and checks
/// them with verify_pingpong. Never answers NotFree.
FreenessCertificate certify_theorem1(const MapSystem& sys);

/// Two generators with slopes > 1 (SlopePreconditionViolated otherwise):
/// Commuting, FreeTheorem2 when 1/a + 1/c <= 1, else Inconclusive.
FreenessCertificate certify_theorem2(const AffineMap& f, const AffineMap& g);

}  // namespace affsemi
