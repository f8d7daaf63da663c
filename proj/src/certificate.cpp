// SPDX-License-Identifier: Apache-2.0
#include "affsemi/certificate.hpp"

#include <algorithm>

namespace affsemi {

Interval::Interval(Scalar lo, Scalar hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (compare(lo_, hi_) != std::strong_ordering::less) {
    throw Error(ErrorCode::DegenerateInterval, "(" + to_string(lo_) + ", " + to_string(hi_) + ") is empty");
  }
}

Interval Interval::image(const AffineMap& f) const {
  Scalar a = evaluate(f, lo_);
  Scalar b = evaluate(f, hi_);
  if (sign(f.slope()) > 0) return Interval(std::move(a), std::move(b));
  return Interval(std::move(b), std::move(a));
}

bool Interval::within(const Interval& other) const {
  return compare(other.lo_, lo_) <= 0 && compare(hi_, other.hi_) <= 0;
}

bool Interval::disjoint_from(const Interval& other) const {
  return compare(hi_, other.lo_) <= 0 || compare(other.hi_, lo_) <= 0;
}

std::string to_string(const Interval& i) { return "(" + to_string(i.lo()) + ", " + to_string(i.hi()) + ")"; }

Relation normalize(Word lhs, Word rhs, const MapSystem& sys) {
  auto& l = lhs.indices;
  auto& r = rhs.indices;
  const auto prefix = std::mismatch(l.begin(), l.end(), r.begin(), r.end());
  const std::size_t p = static_cast<std::size_t>(prefix.first - l.begin());
  l.erase(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(p));
  r.erase(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(p));
  const auto suffix = std::mismatch(l.rbegin(), l.rend(), r.rbegin(), r.rend());
  const std::size_t s = static_cast<std::size_t>(suffix.first - l.rbegin());
  l.resize(l.size() - s);
  r.resize(r.size() - s);
  if (l.empty() && r.empty()) throw Error(ErrorCode::InvalidArgument, "a relation needs two distinct words");
  if (l.empty() || (!r.empty() && r < l)) std::swap(lhs, rhs);
  AffineMap map = apply_word(lhs, sys);
  return Relation{std::move(lhs), std::move(rhs), std::move(map)};
}

bool is_valid(const Relation& r, const MapSystem& sys) {
  if (r.lhs.empty() || r.lhs == r.rhs) return false;
  if (!(apply_word(r.lhs, sys) == r.map) || !(apply_word(r.rhs, sys) == r.map)) return false;
  if (r.rhs.empty()) return true;
  return r.lhs.indices.front() != r.rhs.indices.front() && r.lhs.indices.back() != r.rhs.indices.back();
}

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::FreeTheorem1: return "FreeTheorem1";
    case Verdict::FreeTheorem2: return "FreeTheorem2";
    case Verdict::FreeIndependence: return "FreeIndependence";
    case Verdict::FreePingPongWitness: return "FreePingPongWitness";
    case Verdict::NotFree: return "NotFree";
    case Verdict::Commuting: return "Commuting";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

bool is_free(Verdict v) noexcept {
  return v == Verdict::FreeTheorem1 || v == Verdict::FreeTheorem2 || v == Verdict::FreeIndependence ||
         v == Verdict::FreePingPongWitness;
}

}  // namespace affsemi
