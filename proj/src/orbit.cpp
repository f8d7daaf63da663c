// SPDX-License-Identifier: Apache-2.0
#include "affsemi/orbit.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

namespace affsemi {

void require_expanding(const MapSystem& sys, const Scalar& seed) {
  const Scalar zero(sys.basis(), Rational(0));
  const Scalar one(sys.basis(), Rational(1));

  const bool moves_up = std::all_of(sys.maps().begin(), sys.maps().end(), [&](const AffineMap& f) {
    return compare(f.slope(), one) >= 0 && compare(evaluate(f, seed), seed) > 0;
  });
  if (moves_up) return;

  const bool nonnegative = compare(seed, zero) >= 0 &&
                           std::all_of(sys.maps().begin(), sys.maps().end(), [&](const AffineMap& f) {
                             return compare(f.slope(), one) > 0 && compare(f.intercept(), zero) >= 0;
                           });
  if (nonnegative) return;
  throw Error(ErrorCode::NonExpandingSystem, "generators do not push the seed upward; the closure may not terminate");
}

namespace {

struct Closure {
  // Exactly one of the two is populated, sorted ascending, all values <= bound.
  std::vector<std::int64_t> integers;
  std::vector<Scalar> scalars;
  bool machine = false;
};

bool fits_int64(const Rational& q) { return q.get_den() == 1 && q.get_num().fits_slong_p(); }

std::optional<Closure> machine_closure(const MapSystem& sys, const Scalar& seed, std::uint64_t bound) {
  constexpr std::uint64_t kMaxSpan = std::uint64_t{1} << 32;
  if (!seed.is_integer() || !fits_int64(seed.rational_part())) return std::nullopt;
  if (bound > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) return std::nullopt;
  std::vector<std::pair<std::int64_t, std::int64_t>> gens;
  for (const auto& f : sys.maps()) {
    if (!f.slope().is_integer() || !f.intercept().is_integer()) return std::nullopt;
    if (!fits_int64(f.slope().rational_part()) || !fits_int64(f.intercept().rational_part())) return std::nullopt;
    gens.emplace_back(f.slope().rational_part().get_num().get_si(), f.intercept().rational_part().get_num().get_si());
  }
  const std::int64_t lo = seed.rational_part().get_num().get_si();
  const auto hi = static_cast<std::int64_t>(bound);
  Closure out;
  out.machine = true;
  if (lo > hi) return out;
  // Every orbit value lies in [seed, bound] under require_expanding.
  const auto span = static_cast<std::uint64_t>(static_cast<__int128>(hi) - lo + 1);
  if (span > kMaxSpan) return std::nullopt;

  std::vector<bool> seen(span, false);
  std::vector<std::int64_t> stack{lo};
  seen[0] = true;
  while (!stack.empty()) {
    const std::int64_t x = stack.back();
    stack.pop_back();
    for (const auto& [a, b] : gens) {
      const __int128 y = static_cast<__int128>(a) * x + b;
      if (y > hi || y < lo) continue;
      const auto slot = static_cast<std::size_t>(y - lo);
      if (seen[slot]) continue;
      seen[slot] = true;
      stack.push_back(static_cast<std::int64_t>(y));
    }
  }
  for (std::size_t k = 0; k < span; ++k) {
    if (seen[k]) out.integers.push_back(lo + static_cast<std::int64_t>(k));
  }
  return out;
}

Closure exact_closure(const MapSystem& sys, const Scalar& seed, std::uint64_t bound) {
  const Scalar top(sys.basis(), Rational(Integer(std::to_string(bound))));
  Closure out;
  if (compare(seed, top) > 0) return out;
  std::unordered_set<Scalar> seen{seed};
  std::vector<Scalar> frontier{seed};
  while (!frontier.empty()) {
    std::vector<Scalar> next;
    for (const auto& x : frontier) {
      for (const auto& f : sys.maps()) {
        Scalar y = evaluate(f, x);
        if (compare(y, top) > 0) continue;
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  out.scalars.assign(seen.begin(), seen.end());
  std::sort(out.scalars.begin(), out.scalars.end(), [](const Scalar& x, const Scalar& y) { return compare(x, y) < 0; });
  return out;
}

Closure closure(const MapSystem& sys, const Scalar& seed, std::uint64_t bound) {
  if (!(seed.basis() == sys.basis())) throw Error(ErrorCode::BasisMismatch, "seed over a different basis");
  require_expanding(sys, seed);
  if (auto fast = machine_closure(sys, seed, bound)) return std::move(*fast);
  return exact_closure(sys, seed, bound);
}

OrbitReport report_for(const Closure& c, const MapSystem& sys, const Scalar& seed, std::uint64_t bound, bool emit) {
  OrbitReport rep;
  rep.seed = seed;
  rep.bound = bound;
  if (c.machine) {
    const auto first = std::lower_bound(c.integers.begin(), c.integers.end(), std::int64_t{1});
    const auto last = std::upper_bound(c.integers.begin(), c.integers.end(), static_cast<std::int64_t>(bound));
    rep.count = first < last ? static_cast<std::uint64_t>(last - first) : 0;
    if (emit) {
      rep.elements.emplace();
      for (auto it = first; it < last; ++it) rep.elements->emplace_back(sys.basis(), Rational(static_cast<long>(*it)));
    }
  } else {
    const Scalar one(sys.basis(), Rational(1));
    const Scalar top(sys.basis(), Rational(Integer(std::to_string(bound))));
    const auto first = std::lower_bound(c.scalars.begin(), c.scalars.end(), one,
                                        [](const Scalar& x, const Scalar& y) { return compare(x, y) < 0; });
    const auto last = std::upper_bound(c.scalars.begin(), c.scalars.end(), top,
                                       [](const Scalar& x, const Scalar& y) { return compare(x, y) < 0; });
    rep.count = first < last ? static_cast<std::uint64_t>(last - first) : 0;
    if (emit) rep.elements.emplace(first, std::max(first, last));
  }
  rep.density = Rational(Integer(std::to_string(rep.count)), Integer(std::to_string(bound)));
  rep.density.canonicalize();
  return rep;
}

}  // namespace

OrbitReport orbit_up_to(const MapSystem& sys, const Scalar& seed, std::uint64_t bound, bool emit_elements) {
  if (bound < 1) throw Error(ErrorCode::InvalidArgument, "bound must be >= 1");
  return report_for(closure(sys, seed, bound), sys, seed, bound, emit_elements);
}

std::vector<OrbitReport> density_series(const MapSystem& sys, const Scalar& seed,
                                        const std::vector<std::uint64_t>& bounds, bool emit_elements) {
  if (bounds.empty()) throw Error(ErrorCode::InvalidArgument, "no bounds given");
  if (bounds.front() < 1) throw Error(ErrorCode::InvalidArgument, "bounds must be >= 1");
  for (std::size_t k = 1; k < bounds.size(); ++k) {
    if (bounds[k] <= bounds[k - 1]) throw Error(ErrorCode::InvalidArgument, "bounds must be strictly increasing");
  }
  const Closure c = closure(sys, seed, bounds.back());
  std::vector<OrbitReport> out;
  out.reserve(bounds.size());
  for (auto bound : bounds) out.push_back(report_for(c, sys, seed, bound, emit_elements));
  return out;
}

}  // namespace affsemi
