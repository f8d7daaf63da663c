// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "affsemi/error.hpp"

namespace affsemi {

using Integer = mpz_class;
using Rational = mpq_class;

/// A Q-basis {1, sqrt(r_1), ..., sqrt(r_k)} of distinct square-free radicands.
///
/// Linear independence over Q of the square roots of distinct square-free
/// integers is classical and taken for granted; it is what makes coefficient
/// equality coincide with equality of reals.
///
/// Basis is a cheap handle: copies share the radicand list.
class Basis {
 public:
  /// The trivial basis {1}.
  Basis();

  /// Builds {1, sqrt(r) for r in irrational}. Throws BasisError when a
  /// radicand is < 2, not square-free, or repeated. Order is preserved.
  explicit Basis(std::span<const std::uint64_t> irrational);
  Basis(std::initializer_list<std::uint64_t> irrational);

  /// Radicands including the leading 1.
  std::span<const std::uint64_t> radicands() const noexcept { return *radicands_; }
  std::size_t size() const noexcept { return radicands_->size(); }
  std::optional<std::size_t> index_of(std::uint64_t radicand) const noexcept;

  friend bool operator==(const Basis& x, const Basis& y) noexcept {
    return x.radicands_ == y.radicands_ || *x.radicands_ == *y.radicands_;
  }

 private:
  std::shared_ptr<const std::vector<std::uint64_t>> radicands_;
};

bool is_square_free(std::uint64_t value) noexcept;

/// Exact real number sum_k q_k * sqrt(r_k) over a Basis. Immutable value.
class Scalar {
 public:
  static constexpr int kDefaultMaxRefinements = 256;

  /// Zero over the trivial basis.
  Scalar();
  Scalar(const Basis& basis, const Rational& value);
  Scalar(const Basis& basis, std::vector<Rational> coeffs);

  /// Convenience for rationals over {1}.
  static Scalar rational(const Rational& value) { return Scalar(Basis(), value); }
  static Scalar rational(long num, long den = 1);

  const Basis& basis() const noexcept { return basis_; }
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }
  const Rational& rational_part() const noexcept { return coeffs_.front(); }

  bool is_zero() const noexcept;
  bool is_rational() const noexcept;
  /// Throws NotRational when an irrational coefficient is nonzero.
  Rational as_rational() const;
  bool is_integer() const noexcept;

  /// Re-expresses the value over a larger basis that contains every radicand
  /// with a nonzero coefficient. Throws BasisMismatch otherwise.
  Scalar rebased(const Basis& target) const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& x, const Scalar& y);
  friend Scalar operator-(const Scalar& x, const Scalar& y);
  friend Scalar operator*(const Scalar& x, const Scalar& y);
  friend Scalar operator*(const Scalar& x, const Rational& q);
  friend Scalar operator/(const Scalar& x, const Rational& q);

  /// Equality of coefficient vectors, which is equality of reals.
  friend bool operator==(const Scalar& x, const Scalar& y);

  /// Total order on reals; see compare().
  friend std::strong_ordering operator<=>(const Scalar& x, const Scalar& y);

  std::size_t hash() const noexcept;

  /// Display-only approximation.
  double to_double() const;

 private:
  Basis basis_;
  std::vector<Rational> coeffs_;
};

/// x / y. Supported when y involves at most one irrational radicand;
/// otherwise ProductOutsideBasis. DivisionByZero when y == 0.
Scalar divide(const Scalar& x, const Scalar& y);
Scalar reciprocal(const Scalar& x);

/// Sign of x - y. Equal vectors answer immediately; otherwise each sqrt(r) is
/// enclosed in [floor(sqrt r), floor(sqrt r) + 1] and bisected until the
/// enclosure of x - y excludes zero. Throws PrecisionLimitExceeded after
/// max_refinements bisection rounds.
std::strong_ordering compare(const Scalar& x, const Scalar& y,
                             int max_refinements = Scalar::kDefaultMaxRefinements);

/// -1, 0 or +1.
int sign(const Scalar& x, int max_refinements = Scalar::kDefaultMaxRefinements);

/// Canonical text: `p/q (+|-) c*sqrt(r) ...`, rational part always first.
std::string to_string(const Scalar& x);
std::string to_string(const Rational& q);

/// Parses the scalar grammar over `basis`. Accepts a leading sign, bare
/// `sqrt(n)` terms and a missing rational part in addition to the canonical
/// form; `sqrt(n)` is reduced to k*sqrt(s) with s square-free. Reported
/// columns are 1-based and shifted by column_offset.
Scalar parse_scalar(std::string_view text, const Basis& basis, std::size_t column_offset = 0);

}  // namespace affsemi

template <>
struct std::hash<affsemi::Scalar> {
  std::size_t operator()(const affsemi::Scalar& x) const noexcept { return x.hash(); }
};
