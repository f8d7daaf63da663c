// SPDX-License-Identifier: Apache-2.0
#include "affsemi/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numeric>

namespace affsemi {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::BasisMismatch: return "BasisMismatch";
    case ErrorCode::BasisError: return "BasisError";
    case ErrorCode::ProductOutsideBasis: return "ProductOutsideBasis";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::PrecisionLimitExceeded: return "PrecisionLimitExceeded";
    case ErrorCode::NotRational: return "NotRational";
    case ErrorCode::NonInvertibleSlope: return "NonInvertibleSlope";
    case ErrorCode::NoFixedPoint: return "NoFixedPoint";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::MalformedMatrix: return "MalformedMatrix";
    case ErrorCode::DegenerateInterval: return "DegenerateInterval";
    case ErrorCode::SlopePreconditionViolated: return "SlopePreconditionViolated";
    case ErrorCode::HypothesisNotSatisfied: return "HypothesisNotSatisfied";
    case ErrorCode::NonExpandingSystem: return "NonExpandingSystem";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotCertified: return "NotCertified";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// Basis

bool is_square_free(std::uint64_t value) noexcept {
  if (value == 0) return false;
  for (std::uint64_t p = 2; p * p <= value; ++p) {
    if (value % p == 0) {
      value /= p;
      if (value % p == 0) return false;
    }
  }
  return true;
}

namespace {

std::shared_ptr<const std::vector<std::uint64_t>> trivial_radicands() {
  static const auto kOne = std::make_shared<const std::vector<std::uint64_t>>(1, 1);
  return kOne;
}

}  // namespace

Basis::Basis() : radicands_(trivial_radicands()) {}

Basis::Basis(std::span<const std::uint64_t> irrational) {
  if (irrational.empty()) {
    radicands_ = trivial_radicands();
    return;
  }
  std::vector<std::uint64_t> all{1};
  for (std::uint64_t r : irrational) {
    if (r < 2) throw Error(ErrorCode::BasisError, "radicand " + std::to_string(r) + " must be >= 2");
    if (!is_square_free(r)) {
      throw Error(ErrorCode::BasisError, "radicand " + std::to_string(r) + " is not square-free");
    }
    if (std::find(all.begin(), all.end(), r) != all.end()) {
      throw Error(ErrorCode::BasisError, "duplicate radicand " + std::to_string(r));
    }
    all.push_back(r);
  }
  radicands_ = std::make_shared<const std::vector<std::uint64_t>>(std::move(all));
}

Basis::Basis(std::initializer_list<std::uint64_t> irrational)
    : Basis(std::span<const std::uint64_t>(irrational.begin(), irrational.size())) {}

std::optional<std::size_t> Basis::index_of(std::uint64_t radicand) const noexcept {
  const auto& r = *radicands_;
  auto it = std::find(r.begin(), r.end(), radicand);
  if (it == r.end()) return std::nullopt;
  return static_cast<std::size_t>(it - r.begin());
}

// ---------------------------------------------------------------------------
// Scalar

namespace {

void require_same_basis(const Scalar& x, const Scalar& y) {
  if (!(x.basis() == y.basis())) throw Error(ErrorCode::BasisMismatch, "scalars over different bases");
}

Integer integer_sqrt_floor(std::uint64_t r) {
  Integer v(static_cast<unsigned long>(r));
  Integer s;
  mpz_sqrt(s.get_mpz_t(), v.get_mpz_t());
  return s;
}

std::size_t hash_integer(const mpz_class& z) noexcept {
  std::size_t h = static_cast<std::size_t>(mpz_sgn(z.get_mpz_t()) + 1);
  const std::size_t limbs = mpz_size(z.get_mpz_t());
  for (std::size_t i = 0; i < limbs; ++i) {
    h ^= static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), i)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace

Scalar::Scalar() : coeffs_(1) {}

Scalar::Scalar(const Basis& basis, const Rational& value) : basis_(basis), coeffs_(basis.size()) {
  coeffs_[0] = value;
  coeffs_[0].canonicalize();
}

Scalar::Scalar(const Basis& basis, std::vector<Rational> coeffs) : basis_(basis), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != basis_.size()) {
    throw Error(ErrorCode::BasisMismatch, "coefficient count does not match basis size");
  }
  for (auto& c : coeffs_) c.canonicalize();
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return Scalar(Basis(), q);
}

bool Scalar::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

bool Scalar::is_rational() const noexcept {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

Rational Scalar::as_rational() const {
  if (!is_rational()) throw Error(ErrorCode::NotRational, to_string(*this) + " is irrational");
  return coeffs_.front();
}

bool Scalar::is_integer() const noexcept { return is_rational() && coeffs_.front().get_den() == 1; }

Scalar Scalar::rebased(const Basis& target) const {
  if (basis_ == target) return *this;
  std::vector<Rational> out(target.size());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (sgn(coeffs_[k]) == 0) continue;
    auto idx = target.index_of(basis_.radicands()[k]);
    if (!idx) {
      throw Error(ErrorCode::BasisMismatch,
                  "radicand " + std::to_string(basis_.radicands()[k]) + " missing from target basis");
    }
    out[*idx] = coeffs_[k];
  }
  return Scalar(target, std::move(out));
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Scalar operator+(const Scalar& x, const Scalar& y) {
  require_same_basis(x, y);
  Scalar r = x;
  for (std::size_t k = 0; k < r.coeffs_.size(); ++k) r.coeffs_[k] += y.coeffs_[k];
  return r;
}

Scalar operator-(const Scalar& x, const Scalar& y) {
  require_same_basis(x, y);
  Scalar r = x;
  for (std::size_t k = 0; k < r.coeffs_.size(); ++k) r.coeffs_[k] -= y.coeffs_[k];
  return r;
}

Scalar operator*(const Scalar& x, const Rational& q) {
  Scalar r = x;
  for (auto& c : r.coeffs_) c *= q;
  return r;
}

Scalar operator/(const Scalar& x, const Rational& q) {
  if (sgn(q) == 0) throw Error(ErrorCode::DivisionByZero, "division by zero");
  Scalar r = x;
  for (auto& c : r.coeffs_) c /= q;
  return r;
}

Scalar operator*(const Scalar& x, const Scalar& y) {
  require_same_basis(x, y);
  if (y.is_rational()) return x * y.coeffs_.front();
  if (x.is_rational()) return y * x.coeffs_.front();

  // sqrt(r) * sqrt(s) = g * sqrt(r s / g^2) with g = gcd(r, s); the cofactor
  // is a product of coprime square-free numbers and hence square-free.
  const auto rad = x.basis_.radicands();
  std::vector<Rational> out(rad.size());
  for (std::size_t i = 0; i < rad.size(); ++i) {
    if (sgn(x.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < rad.size(); ++j) {
      if (sgn(y.coeffs_[j]) == 0) continue;
      const std::uint64_t g = std::gcd(rad[i], rad[j]);
      const unsigned __int128 cofactor =
          static_cast<unsigned __int128>(rad[i] / g) * static_cast<unsigned __int128>(rad[j] / g);
      std::optional<std::size_t> idx;
      if (cofactor <= UINT64_MAX) idx = x.basis_.index_of(static_cast<std::uint64_t>(cofactor));
      if (!idx) {
        throw Error(ErrorCode::ProductOutsideBasis,
                    "sqrt(" + std::to_string(rad[i]) + ")*sqrt(" + std::to_string(rad[j]) + ") leaves the basis span");
      }
      out[*idx] += x.coeffs_[i] * y.coeffs_[j] * Rational(static_cast<unsigned long>(g));
    }
  }
  return Scalar(x.basis_, std::move(out));
}

bool operator==(const Scalar& x, const Scalar& y) {
  require_same_basis(x, y);
  return x.coeffs_ == y.coeffs_;
}

std::strong_ordering operator<=>(const Scalar& x, const Scalar& y) { return compare(x, y); }

std::size_t Scalar::hash() const noexcept {
  std::size_t h = coeffs_.size();
  for (const auto& c : coeffs_) {
    h ^= hash_integer(c.get_num()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= hash_integer(c.get_den()) + 0x7f4a7c159e3779b9ULL + (h << 6) + (h >> 2);
  }
  return h;
}

double Scalar::to_double() const {
  double v = 0.0;
  const auto rad = basis_.radicands();
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    v += coeffs_[k].get_d() * std::sqrt(static_cast<double>(rad[k]));
  }
  return v;
}

Scalar reciprocal(const Scalar& x) {
  if (x.is_zero()) throw Error(ErrorCode::DivisionByZero, "reciprocal of zero");
  const auto c = x.coeffs();
  if (x.is_rational()) return Scalar(x.basis(), Rational(1) / c[0]);

  std::optional<std::size_t> irrational;
  for (std::size_t k = 1; k < c.size(); ++k) {
    if (sgn(c[k]) == 0) continue;
    if (irrational) {
      throw Error(ErrorCode::ProductOutsideBasis, "reciprocal of " + to_string(x) + " is not supported");
    }
    irrational = k;
  }
  // (p + q sqrt r)^-1 = (p - q sqrt r) / (p^2 - q^2 r); the norm is nonzero
  // because r is not a perfect square.
  const std::size_t k = *irrational;
  const Rational r(static_cast<unsigned long>(x.basis().radicands()[k]));
  const Rational norm = c[0] * c[0] - c[k] * c[k] * r;
  std::vector<Rational> out(c.size());
  out[0] = c[0] / norm;
  out[k] = -c[k] / norm;
  return Scalar(x.basis(), std::move(out));
}

Scalar divide(const Scalar& x, const Scalar& y) {
  if (y.is_rational()) return x / y.rational_part();
  return x * reciprocal(y);
}

int sign(const Scalar& x, int max_refinements) {
  if (x.is_rational()) return sgn(x.rational_part());

  struct Enclosure {
    Rational coeff;
    std::uint64_t radicand;
    Rational lo, hi;
  };
  const auto c = x.coeffs();
  const auto rad = x.basis().radicands();
  std::vector<Enclosure> terms;
  for (std::size_t k = 1; k < c.size(); ++k) {
    if (sgn(c[k]) == 0) continue;
    Integer f = integer_sqrt_floor(rad[k]);
    terms.push_back({c[k], rad[k], Rational(f), Rational(f + 1)});
  }

  for (int round = 0;; ++round) {
    Rational lo = c[0];
    Rational hi = c[0];
    for (const auto& t : terms) {
      if (sgn(t.coeff) > 0) {
        lo += t.coeff * t.lo;
        hi += t.coeff * t.hi;
      } else {
        lo += t.coeff * t.hi;
        hi += t.coeff * t.lo;
      }
    }
    if (sgn(lo) > 0) return 1;
    if (sgn(hi) < 0) return -1;
    if (round >= max_refinements) {
      throw Error(ErrorCode::PrecisionLimitExceeded,
                  "sign of " + to_string(x) + " undecided after " + std::to_string(max_refinements) + " refinements");
    }
    for (auto& t : terms) {
      Rational mid = (t.lo + t.hi) / 2;
      // mid^2 == r is impossible for a square-free r > 1.
      if (mid * mid < Rational(static_cast<unsigned long>(t.radicand))) {
        t.lo = mid;
      } else {
        t.hi = mid;
      }
    }
  }
}

std::strong_ordering compare(const Scalar& x, const Scalar& y, int max_refinements) {
  require_same_basis(x, y);
  if (x.coeffs().size() == y.coeffs().size() &&
      std::equal(x.coeffs().begin(), x.coeffs().end(), y.coeffs().begin())) {
    return std::strong_ordering::equal;
  }
  const int s = sign(x - y, max_refinements);
  return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

// ---------------------------------------------------------------------------
// Text

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Scalar& x) {
  const auto c = x.coeffs();
  const auto rad = x.basis().radicands();
  std::string out = to_string(c[0]);
  for (std::size_t k = 1; k < c.size(); ++k) {
    if (sgn(c[k]) == 0) continue;
    out += sgn(c[k]) < 0 ? " - " : " + ";
    out += to_string(Rational(abs(c[k])));
    out += "*sqrt(" + std::to_string(rad[k]) + ")";
  }
  return out;
}

namespace {

class ScalarParser {
 public:
  ScalarParser(std::string_view text, const Basis& basis, std::size_t offset)
      : text_(text), basis_(basis), coeffs_(basis.size()), offset_(offset) {}

  Scalar parse() {
    skip_ws();
    int sign = 1;
    if (peek() == '-' || peek() == '+') {
      sign = take() == '-' ? -1 : 1;
      skip_ws();
    }
    term(sign);
    for (;;) {
      skip_ws();
      if (at_end()) break;
      const char op = peek();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      take();
      skip_ws();
      term(op == '-' ? -1 : 1);
    }
    return Scalar(basis_, std::move(coeffs_));
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char take() { return text_[pos_++]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw Error(ErrorCode::ParseError, "column " + std::to_string(offset_ + pos_ + 1) + ": " + message);
  }

  Integer digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  bool keyword(std::string_view word) {
    if (text_.substr(pos_, word.size()) == word) {
      pos_ += word.size();
      return true;
    }
    return false;
  }

  // sqrt '(' int ')' -> (multiplier, basis index)
  std::pair<Integer, std::size_t> radical() {
    if (!keyword("sqrt")) fail("expected sqrt(");
    skip_ws();
    if (peek() != '(') fail("expected '('");
    take();
    skip_ws();
    const std::size_t at = pos_;
    Integer n = digits();
    skip_ws();
    if (peek() != ')') fail("expected ')'");
    take();
    if (sgn(n) == 0) return {Integer(0), 0};
    if (!n.fits_ulong_p()) fail("radicand too large");
    // n = g^2 * s with s square-free
    unsigned long s = n.get_ui();
    unsigned long g = 1;
    for (unsigned long p = 2; p * p <= s; ++p) {
      while (s % (p * p) == 0) {
        s /= p * p;
        g *= p;
      }
    }
    auto idx = basis_.index_of(s);
    if (!idx) {
      pos_ = at;
      fail("sqrt(" + std::to_string(s) + ") is not in the declared basis");
    }
    return {Integer(g), *idx};
  }

  void term(int sign) {
    if (keyword("sqrt")) {
      pos_ -= 4;
      auto [mult, idx] = radical();
      coeffs_[idx] += Rational(sign * mult);
      return;
    }
    Integer num = digits();
    Integer den = 1;
    skip_ws();
    if (peek() == '/') {
      take();
      skip_ws();
      den = digits();
      if (sgn(den) == 0) fail("zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    skip_ws();
    if (peek() == '*') {
      take();
      skip_ws();
      auto [mult, idx] = radical();
      coeffs_[idx] += sign * q * mult;
      return;
    }
    coeffs_[0] += sign * q;
  }

  std::string_view text_;
  Basis basis_;
  std::vector<Rational> coeffs_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text, const Basis& basis, std::size_t column_offset) {
  return ScalarParser(text, basis, column_offset).parse();
}

}  // namespace affsemi
