// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "affsemi/scalar.hpp"

namespace affsemi {

/// x -> a x + b with a != 0.
class AffineMap {
 public:
  AffineMap(Scalar slope, Scalar intercept);

  static AffineMap identity(const Basis& basis);
  /// Rational coefficients over {1}.
  static AffineMap rational(const Rational& slope, const Rational& intercept);

  const Scalar& slope() const noexcept { return slope_; }
  const Scalar& intercept() const noexcept { return intercept_; }
  const Basis& basis() const noexcept { return slope_.basis(); }

  friend bool operator==(const AffineMap& f, const AffineMap& g) = default;

  std::size_t hash() const noexcept;

 private:
  Scalar slope_;
  Scalar intercept_;
};

/// x -> f(g(x)).
AffineMap compose(const AffineMap& f, const AffineMap& g);
AffineMap inverse(const AffineMap& f);
/// b / (1 - a). NoFixedPoint for translations.
Scalar fixed_point(const AffineMap& f);
Scalar evaluate(const AffineMap& f, const Scalar& x);

/// "a*x + b", scalars in canonical text.
std::string to_string(const AffineMap& f);

/// Generator indices, 1-based. (i1, ..., ik) denotes f_i1 o ... o f_ik, so
/// the rightmost generator is applied first. The empty word only appears as
/// the identity side of a relation.
struct Word {
  std::vector<std::size_t> indices;

  Word() = default;
  Word(std::initializer_list<std::size_t> init) : indices(init) {}
  explicit Word(std::vector<std::size_t> v) : indices(std::move(v)) {}

  std::size_t size() const noexcept { return indices.size(); }
  bool empty() const noexcept { return indices.empty(); }
  friend auto operator<=>(const Word&, const Word&) = default;
};

std::string to_string(const Word& w);

class MapSystem {
 public:
  MapSystem(Basis basis, std::vector<AffineMap> maps);
  /// Basis taken from the first map.
  explicit MapSystem(std::vector<AffineMap> maps);

  const Basis& basis() const noexcept { return basis_; }
  std::size_t size() const noexcept { return maps_.size(); }
  /// 1-based.
  const AffineMap& generator(std::size_t index) const;
  const std::vector<AffineMap>& maps() const noexcept { return maps_; }

  /// The system of inverse maps, same index order.
  MapSystem inverted() const;
  /// New system whose i-th generator is this system's order[i] (1-based).
  MapSystem permuted(const std::vector<std::size_t>& order) const;

  friend bool operator==(const MapSystem&, const MapSystem&) = default;

 private:
  Basis basis_;
  std::vector<AffineMap> maps_;
};

/// Composite f_i1 o ... o f_ik; identity for the empty word.
AffineMap apply_word(const Word& w, const MapSystem& sys);

/// Upper-triangular affine matrix [[a, b], [0, 1]] and general products of
/// such matrices.
struct UTMatrix {
  Scalar m11, m12, m21, m22;

  friend bool operator==(const UTMatrix&, const UTMatrix&) = default;
};

UTMatrix operator*(const UTMatrix& x, const UTMatrix& y);
UTMatrix to_matrix(const AffineMap& f);
/// MalformedMatrix unless m21 == 0, m22 == 1 and m11 != 0.
AffineMap from_matrix(const UTMatrix& m);

}  // namespace affsemi

template <>
struct std::hash<affsemi::AffineMap> {
  std::size_t operator()(const affsemi::AffineMap& f) const noexcept { return f.hash(); }
};
