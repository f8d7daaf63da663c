// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "affsemi/affine.hpp"
#include "test_support.hpp"

using namespace affsemi;
using namespace affsemi::testing;

namespace {

constexpr int kIterations = 300;

const MapSystem kRelation = system_of({{Q(2), Q(1)}, {Q(3), Q(1)}, {Q(6), Q(1)}});

AffineMap random_map(Random& rng) {
  Rational a;
  do a = rng.rational(Q(-6), Q(6), 5);
  while (a == 0);
  return M(a, rng.rational(Q(-8), Q(8), 5));
}

Word random_word(Random& rng, std::size_t n, std::size_t max_len) {
  Word w;
  const auto len = static_cast<std::size_t>(rng.integer(1, static_cast<long>(max_len)));
  for (std::size_t k = 0; k < len; ++k) w.indices.push_back(rng.index(n) + 1);
  return w;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(AffineMap, RejectsZeroSlope) {
  EXPECT_EQ(code_of([] { (void)M(Q(0), Q(1)); }), ErrorCode::NonInvertibleSlope);
}

TEST(AffineMap, Compose) {
  EXPECT_EQ(compose(M(Q(2), Q(1)), compose(M(Q(2), Q(1)), M(Q(3), Q(1)))), M(Q(12), Q(7)));
  EXPECT_EQ(compose(M(Q(6), Q(1)), M(Q(2), Q(1))), M(Q(12), Q(7)));
  const AffineMap f = M(Q(5, 2), Q(-1, 3));
  EXPECT_EQ(compose(f, AffineMap::identity(Basis())), f);
  EXPECT_EQ(compose(M(Q(2), Q(0)), M(Q(3), Q(2))), M(Q(6), Q(4)));
}

TEST(AffineMap, Inverse) {
  EXPECT_EQ(inverse(M(Q(3), Q(2))), M(Q(1, 3), Q(-2, 3)));
  EXPECT_EQ(inverse(M(Q(1), Q(5))), M(Q(1), Q(-5)));
  EXPECT_EQ(inverse(inverse(M(Q(2), Q(1)))), M(Q(2), Q(1)));
}

TEST(AffineMap, FixedPoint) {
  EXPECT_EQ(fixed_point(M(Q(3), Q(2))), S(-1));
  EXPECT_EQ(fixed_point(M(Q(2), Q(0))), S(0));
  EXPECT_EQ(fixed_point(M(Q(6), Q(3))), S(-3, 5));
  EXPECT_EQ(code_of([] { (void)fixed_point(M(Q(1), Q(4))); }), ErrorCode::NoFixedPoint);
}

TEST(AffineMap, Evaluate) {
  EXPECT_EQ(evaluate(M(Q(2), Q(1)), S(3)), S(7));
  EXPECT_EQ(evaluate(M(Q(6), Q(3)), S(1)), S(9));
  const Basis b2{2};
  const Scalar x0(b2, {Q(1, 7), Q(-3)});
  EXPECT_EQ(evaluate(AffineMap::identity(b2), x0), x0);
}

TEST(AffineMap, RadicalCoefficients) {
  const Basis b2{2};
  const AffineMap f(Scalar(b2, Q(2)), Scalar(b2, {Q(0), Q(1)}));
  EXPECT_EQ(compose(f, f), AffineMap(Scalar(b2, Q(4)), Scalar(b2, {Q(0), Q(3)})));
  EXPECT_EQ(fixed_point(f), Scalar(b2, {Q(0), Q(-1)}));
  EXPECT_EQ(to_string(M(Q(2), Q(-1, 3))), "2*x + -1/3");
}

TEST(ApplyWord, EqualComposites) {
  EXPECT_EQ(apply_word(Word{1, 1, 2}, kRelation), M(Q(12), Q(7)));
  EXPECT_EQ(apply_word(Word{3, 1}, kRelation), M(Q(12), Q(7)));
  for (std::size_t i = 1; i <= 3; ++i) EXPECT_EQ(apply_word(Word{i}, kRelation), kRelation.generator(i));
  EXPECT_EQ(apply_word(Word{}, kRelation), AffineMap::identity(Basis()));
  EXPECT_EQ(code_of([] { (void)apply_word(Word{1, 4}, kRelation); }), ErrorCode::IndexOutOfRange);
  EXPECT_EQ(code_of([] { (void)kRelation.generator(0); }), ErrorCode::IndexOutOfRange);
  EXPECT_EQ(to_string(Word{1, 1, 2}), "(1,1,2)");
}

TEST(MapSystem, Shape) {
  EXPECT_EQ(code_of([] { (void)MapSystem(std::vector<AffineMap>{}); }), ErrorCode::InvalidArgument);
  const MapSystem p = kRelation.permuted({3, 1, 2});
  EXPECT_EQ(p.generator(1), kRelation.generator(3));
  EXPECT_EQ(kRelation.inverted().generator(2), M(Q(1, 3), Q(-1, 3)));
}

TEST(UTMatrix, Correspondence) {
  const UTMatrix m = to_matrix(M(Q(2), Q(3)));
  EXPECT_EQ(m.m11, S(2));
  EXPECT_EQ(m.m12, S(3));
  EXPECT_EQ(m.m21, S(0));
  EXPECT_EQ(m.m22, S(1));
  EXPECT_EQ(to_matrix(AffineMap::identity(Basis())), (UTMatrix{S(1), S(0), S(0), S(1)}));
  EXPECT_EQ(to_matrix(M(Q(2), Q(1))) * to_matrix(M(Q(3), Q(1))), to_matrix(M(Q(6), Q(3))));
  EXPECT_EQ(from_matrix(m), M(Q(2), Q(3)));
  EXPECT_EQ(code_of([] { (void)from_matrix(UTMatrix{S(2), S(1), S(1), S(1)}); }), ErrorCode::MalformedMatrix);
  EXPECT_EQ(code_of([] { (void)from_matrix(UTMatrix{S(2), S(1), S(0), S(2)}); }), ErrorCode::MalformedMatrix);
  EXPECT_EQ(code_of([] { (void)from_matrix(UTMatrix{S(0), S(1), S(0), S(1)}); }), ErrorCode::MalformedMatrix);
}

// ============================================================================
// Properties
// ============================================================================

TEST(AffineProperty, Associativity) {
  Random rng(21);
  for (int k = 0; k < kIterations; ++k) {
    const AffineMap f = random_map(rng), g = random_map(rng), h = random_map(rng);
    EXPECT_EQ(compose(f, compose(g, h)), compose(compose(f, g), h));
  }
}

TEST(AffineProperty, InverseCancels) {
  Random rng(22);
  for (int k = 0; k < kIterations; ++k) {
    const AffineMap f = random_map(rng);
    EXPECT_EQ(compose(f, inverse(f)), AffineMap::identity(Basis()));
    EXPECT_EQ(compose(inverse(f), f), AffineMap::identity(Basis()));
  }
}

TEST(AffineProperty, FixedPointIsFixed) {
  Random rng(23);
  for (int k = 0; k < kIterations; ++k) {
    const AffineMap f = random_map(rng);
    if (f.slope() == S(1)) continue;
    const Scalar s = fixed_point(f);
    EXPECT_EQ(evaluate(f, s), s);
  }
}

TEST(AffineProperty, WordMatchesSequentialEvaluation) {
  Random rng(24);
  for (int k = 0; k < kIterations; ++k) {
    const std::size_t n = static_cast<std::size_t>(rng.integer(1, 4));
    std::vector<std::pair<Rational, Rational>> coeffs;
    std::vector<AffineMap> maps;
    for (std::size_t i = 0; i < n; ++i) {
      maps.push_back(random_map(rng));
      coeffs.emplace_back(maps.back().slope().as_rational(), maps.back().intercept().as_rational());
    }
    const MapSystem sys(maps);
    const Word w = random_word(rng, n, 8);
    const Scalar x = S(rng.integer(-9, 9), rng.integer(1, 4));
    Scalar y = x;
    for (auto it = w.indices.rbegin(); it != w.indices.rend(); ++it) y = evaluate(sys.generator(*it), y);
    EXPECT_EQ(evaluate(apply_word(w, sys), x), y);
    const auto [a, b] = naive_composite(coeffs, w.indices);
    EXPECT_EQ(apply_word(w, sys), M(a, b));
  }
}

TEST(AffineProperty, MatrixHomomorphism) {
  Random rng(25);
  for (int k = 0; k < kIterations; ++k) {
    const std::size_t n = static_cast<std::size_t>(rng.integer(1, 4));
    std::vector<AffineMap> maps;
    for (std::size_t i = 0; i < n; ++i) maps.push_back(random_map(rng));
    const MapSystem sys(maps);
    const Word w = random_word(rng, n, 10);
    UTMatrix product = to_matrix(AffineMap::identity(Basis()));
    for (auto i : w.indices) product = product * to_matrix(sys.generator(i));
    EXPECT_EQ(to_matrix(apply_word(w, sys)), product);
  }
}
