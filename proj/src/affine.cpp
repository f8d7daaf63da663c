// SPDX-License-Identifier: Apache-2.0
#include "affsemi/affine.hpp"

namespace affsemi {

AffineMap::AffineMap(Scalar slope, Scalar intercept) : slope_(std::move(slope)), intercept_(std::move(intercept)) {
  if (!(slope_.basis() == intercept_.basis())) {
    throw Error(ErrorCode::BasisMismatch, "slope and intercept over different bases");
  }
  if (slope_.is_zero()) throw Error(ErrorCode::NonInvertibleSlope, "slope must be nonzero");
}

AffineMap AffineMap::identity(const Basis& basis) {
  return AffineMap(Scalar(basis, Rational(1)), Scalar(basis, Rational(0)));
}

AffineMap AffineMap::rational(const Rational& slope, const Rational& intercept) {
  return AffineMap(Scalar::rational(slope), Scalar::rational(intercept));
}

std::size_t AffineMap::hash() const noexcept {
  const std::size_t h = slope_.hash();
  return h ^ (intercept_.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

AffineMap compose(const AffineMap& f, const AffineMap& g) {
  return AffineMap(f.slope() * g.slope(), f.slope() * g.intercept() + f.intercept());
}

AffineMap inverse(const AffineMap& f) {
  Scalar inv;
  try {
    inv = reciprocal(f.slope());
  } catch (const Error& e) {
    throw Error(ErrorCode::NonInvertibleSlope, e.what());
  }
  return AffineMap(inv, -(inv * f.intercept()));
}

Scalar fixed_point(const AffineMap& f) {
  const Scalar one(f.basis(), Rational(1));
  if (f.slope() == one) throw Error(ErrorCode::NoFixedPoint, to_string(f) + " is a translation");
  return divide(f.intercept(), one - f.slope());
}

Scalar evaluate(const AffineMap& f, const Scalar& x) { return f.slope() * x + f.intercept(); }

namespace {

std::string wrapped(const Scalar& s) {
  std::string t = to_string(s);
  return s.is_rational() ? t : "(" + t + ")";
}

}  // namespace

std::string to_string(const AffineMap& f) { return wrapped(f.slope()) + "*x + " + wrapped(f.intercept()); }

std::string to_string(const Word& w) {
  std::string out = "(";
  for (std::size_t k = 0; k < w.indices.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(w.indices[k]);
  }
  return out + ")";
}

MapSystem::MapSystem(Basis basis, std::vector<AffineMap> maps) : basis_(std::move(basis)), maps_(std::move(maps)) {
  if (maps_.empty()) throw Error(ErrorCode::InvalidArgument, "a map system needs at least one generator");
  for (const auto& f : maps_) {
    if (!(f.basis() == basis_)) throw Error(ErrorCode::BasisMismatch, "generator over a different basis");
  }
}

MapSystem::MapSystem(std::vector<AffineMap> maps)
    : MapSystem(maps.empty() ? Basis() : maps.front().basis(), std::move(maps)) {}

const AffineMap& MapSystem::generator(std::size_t index) const {
  if (index < 1 || index > maps_.size()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "generator index " + std::to_string(index) + " outside [1, " + std::to_string(maps_.size()) + "]");
  }
  return maps_[index - 1];
}

MapSystem MapSystem::inverted() const {
  std::vector<AffineMap> inv;
  inv.reserve(maps_.size());
  for (const auto& f : maps_) inv.push_back(inverse(f));
  return MapSystem(basis_, std::move(inv));
}

MapSystem MapSystem::permuted(const std::vector<std::size_t>& order) const {
  std::vector<AffineMap> out;
  out.reserve(order.size());
  for (std::size_t i : order) out.push_back(generator(i));
  return MapSystem(basis_, std::move(out));
}

AffineMap apply_word(const Word& w, const MapSystem& sys) {
  AffineMap acc = AffineMap::identity(sys.basis());
  for (std::size_t i : w.indices) acc = compose(acc, sys.generator(i));
  return acc;
}

UTMatrix operator*(const UTMatrix& x, const UTMatrix& y) {
  return {x.m11 * y.m11 + x.m12 * y.m21, x.m11 * y.m12 + x.m12 * y.m22,
          x.m21 * y.m11 + x.m22 * y.m21, x.m21 * y.m12 + x.m22 * y.m22};
}

UTMatrix to_matrix(const AffineMap& f) {
  const Basis& b = f.basis();
  return {f.slope(), f.intercept(), Scalar(b, Rational(0)), Scalar(b, Rational(1))};
}

AffineMap from_matrix(const UTMatrix& m) {
  const Basis& b = m.m11.basis();
  if (!m.m21.is_zero() || !(m.m22 == Scalar(b, Rational(1)))) {
    throw Error(ErrorCode::MalformedMatrix, "expected bottom row (0, 1)");
  }
  if (m.m11.is_zero()) throw Error(ErrorCode::MalformedMatrix, "m11 must be nonzero");
  return AffineMap(m.m11, m.m12);
}

}  // namespace affsemi
