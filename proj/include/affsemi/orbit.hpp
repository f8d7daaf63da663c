// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "affsemi/affine.hpp"

namespace affsemi {

struct OrbitReport {
  Scalar seed;
  std::uint64_t bound = 1;
  /// |orbit ∩ [1, bound]|
  std::uint64_t count = 0;
  /// count / bound; an empirical finite-range ratio, not a density claim.
  Rational density;
  /// orbit ∩ [1, bound], strictly increasing, only when requested.
  std::optional<std::vector<Scalar>> elements;
};

/// Throws NonExpandingSystem unless either every generator has slope >= 1
/// and moves the seed up, or every slope is > 1, every intercept >= 0 and the
/// seed >= 0. Either condition makes the closure below any bound finite.
void require_expanding(const MapSystem& sys, const Scalar& seed);

/// Exact closure of {seed} under the generators, discarding values > bound.
/// Integer systems run on machine integers with a bitmap, everything else on
/// exact Scalars.
OrbitReport orbit_up_to(const MapSystem& sys, const Scalar& seed, std::uint64_t bound, bool emit_elements = false);

/// One report per bound (strictly increasing). A single closure at the
/// largest bound serves every report: generators are increasing above the
/// seed, so every path to v <= N stays below N.
std::vector<OrbitReport> density_series(const MapSystem& sys, const Scalar& seed,
                                        const std::vector<std::uint64_t>& bounds, bool emit_elements = false);

}  // namespace affsemi
