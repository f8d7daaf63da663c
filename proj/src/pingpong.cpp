// SPDX-License-Identifier: Apache-2.0
#include "affsemi/pingpong.hpp"

#include <algorithm>
#include <numeric>

namespace affsemi {

VerificationReport verify_pingpong(const MapSystem& sys, const std::vector<Interval>& intervals) {
  const std::size_t n = sys.size();
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "ping-pong needs at least two generators");
  if (intervals.size() != n) {
    throw Error(ErrorCode::InvalidArgument, "expected " + std::to_string(n) + " intervals, got " +
                                                std::to_string(intervals.size()));
  }
  for (const auto& iv : intervals) {
    if (!(iv.lo().basis() == sys.basis())) throw Error(ErrorCode::BasisMismatch, "interval over a different basis");
  }

  VerificationReport report;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!intervals[i].disjoint_from(intervals[j])) {
        report.violations.push_back({PingPongViolation::Kind::Overlap, i + 1, j + 1});
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const AffineMap& f = sys.maps()[i];
    for (std::size_t j = 0; j < n; ++j) {
      if (!intervals[j].image(f).within(intervals[i])) {
        report.violations.push_back({PingPongViolation::Kind::ImageEscapes, i + 1, j + 1});
      }
    }
  }
  report.ok = report.violations.empty();
  return report;
}

FreenessCertificate certify_pingpong(const MapSystem& sys, const std::vector<Interval>& intervals) {
  FreenessCertificate cert;
  const auto report = verify_pingpong(sys, intervals);
  cert.permutation.resize(sys.size());
  std::iota(cert.permutation.begin(), cert.permutation.end(), std::size_t{1});
  if (report.ok) {
    cert.verdict = Verdict::FreePingPongWitness;
    cert.intervals = intervals;
    cert.notes = "supplied intervals satisfy the ping-pong conditions";
  } else {
    cert.notes = std::to_string(report.violations.size()) + " ping-pong violation(s)";
  }
  return cert;
}

namespace {

FreenessCertificate inconclusive(std::string notes) {
  FreenessCertificate cert;
  cert.notes = std::move(notes);
  return cert;
}

std::string label(std::size_t index) { return "f" + std::to_string(index); }

}  // namespace

FreenessCertificate certify_theorem1(const MapSystem& sys) {
  const std::size_t n = sys.size();
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "certify_theorem1 needs at least two generators");
  const Scalar one(sys.basis(), Rational(1));

  std::vector<Scalar> fixed;
  fixed.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    const AffineMap& f = sys.generator(i);
    if (compare(f.slope(), one) != std::strong_ordering::greater) {
      return inconclusive("SlopeNotGreaterThanOne: slope of " + label(i) + " is " + to_string(f.slope()));
    }
    try {
      fixed.push_back(fixed_point(f));
    } catch (const Error& e) {
      return inconclusive(std::string("fixed point of ") + label(i) + " unavailable: " + e.what());
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{1});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return compare(fixed[x - 1], fixed[y - 1]) < 0; });
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (fixed[order[k] - 1] == fixed[order[k + 1] - 1]) {
      return inconclusive("TiedFixedPoints: " + label(order[k]) + " and " + label(order[k + 1]) + " both fix " +
                          to_string(fixed[order[k] - 1]));
    }
  }

  const Scalar& left = fixed[order.front() - 1];
  const Scalar& right = fixed[order.back() - 1];
  const MapSystem inverse_sorted = sys.permuted(order).inverted();

  // g_i(R) <= g_{i+1}(L) is (s_n - b_i)/a_i <= (s_1 - b_{i+1})/a_{i+1}.
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const Scalar upper = evaluate(inverse_sorted.maps()[k], right);
    const Scalar lower = evaluate(inverse_sorted.maps()[k + 1], left);
    if (compare(upper, lower) == std::strong_ordering::greater) {
      return inconclusive("gap inequality fails for sorted pair (" + label(order[k]) + ", " + label(order[k + 1]) +
                          "): (s_n - b)/a = " + to_string(upper) + " > (s_1 - b)/a = " + to_string(lower));
    }
  }

  FreenessCertificate cert;
  cert.permutation = order;
  cert.left = left;
  cert.right = right;
  for (const auto& g : inverse_sorted.maps()) cert.intervals.emplace_back(evaluate(g, left), evaluate(g, right));

  const auto report = verify_pingpong(inverse_sorted, cert.intervals);
  if (!report.ok) {
    return inconclusive("derived intervals failed ping-pong verification (" +
                        std::to_string(report.violations.size()) + " violations)");
  }
  cert.verdict = Verdict::FreeTheorem1;
  cert.notes = "fixed points strictly increasing in permutation order; intervals are g_i((L, R)) for the inverse "
               "system and pass ping-pong verification";
  return cert;
}

FreenessCertificate certify_theorem2(const AffineMap& f, const AffineMap& g) {
  if (!(f.basis() == g.basis())) throw Error(ErrorCode::BasisMismatch, "generators over different bases");
  const Scalar one(f.basis(), Rational(1));
  const Scalar& a = f.slope();
  const Scalar& b = f.intercept();
  const Scalar& c = g.slope();
  const Scalar& d = g.intercept();
  if (compare(a, one) <= 0 || compare(c, one) <= 0) {
    throw Error(ErrorCode::SlopePreconditionViolated, "both slopes must exceed 1");
  }

  // f(g(0)) = g(f(0))
  if (a * d + b == c * b + d) {
    FreenessCertificate cert;
    cert.verdict = Verdict::Commuting;
    cert.notes = "f(g(0)) = g(f(0)): the generators commute";
    return cert;
  }

  std::optional<std::strong_ordering> budget;
  try {
    budget = compare(reciprocal(a) + reciprocal(c), one);
  } catch (const Error& e) {
    return inconclusive(std::string("1/a + 1/c unavailable: ") + e.what());
  }
  if (*budget == std::strong_ordering::greater) return inconclusive("1/a + 1/c > 1");

  Scalar sf, sg;
  try {
    sf = fixed_point(f);
    sg = fixed_point(g);
  } catch (const Error& e) {
    return inconclusive(std::string("fixed points unavailable: ") + e.what());
  }

  const MapSystem pair(std::vector<AffineMap>{f, g});
  const std::vector<std::size_t> order =
      compare(sf, sg) < 0 ? std::vector<std::size_t>{1, 2} : std::vector<std::size_t>{2, 1};
  const MapSystem inverse_sorted = pair.permuted(order).inverted();

  FreenessCertificate cert;
  cert.permutation = order;
  cert.left = order[0] == 1 ? sf : sg;
  cert.right = order[0] == 1 ? sg : sf;
  for (const auto& h : inverse_sorted.maps()) cert.intervals.emplace_back(evaluate(h, *cert.left), evaluate(h, *cert.right));

  const auto report = verify_pingpong(inverse_sorted, cert.intervals);
  if (!report.ok) return inconclusive("touching intervals failed ping-pong verification");
  cert.verdict = Verdict::FreeTheorem2;
  cert.notes = "1/a + 1/c <= 1 and f, g do not commute; |I1| + |I2| <= R - L";
  return cert;
}

}  // namespace affsemi
