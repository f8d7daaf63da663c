// SPDX-License-Identifier: Apache-2.0
#include "affsemi/relations.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <thread>
#include <unordered_map>

namespace affsemi {

std::string_view to_string(Theorem3Reason r) noexcept {
  switch (r) {
    case Theorem3Reason::Holds: return "Holds";
    case Theorem3Reason::SlopeNotPositiveInteger: return "SlopeNotPositiveInteger";
    case Theorem3Reason::InterceptIrrational: return "InterceptIrrational";
    case Theorem3Reason::SumNotAboveOne: return "SumNotAboveOne";
  }
  return "SumNotAboveOne";
}

std::string_view to_string(SearchReport::Outcome o) noexcept {
  switch (o) {
    case SearchReport::Outcome::RelationFound: return "RelationFound";
    case SearchReport::Outcome::NoRelationUpToDepth: return "NoRelationUpToDepth";
    case SearchReport::Outcome::StateCapExceeded: return "StateCapExceeded";
  }
  return "NoRelationUpToDepth";
}

bool operator==(const SearchReport& x, const SearchReport& y) {
  if (x.outcome != y.outcome || x.first != y.first || x.second != y.second ||
      x.states_explored != y.states_explored || x.max_depth_reached != y.max_depth_reached || x.note != y.note) {
    return false;
  }
  if (x.relation.has_value() != y.relation.has_value()) return false;
  if (!x.relation) return true;
  return x.relation->lhs == y.relation->lhs && x.relation->rhs == y.relation->rhs && x.relation->map == y.relation->map;
}

namespace {

std::vector<Integer> integer_slopes(const MapSystem& sys) {
  std::vector<Integer> out;
  for (const auto& f : sys.maps()) out.push_back(f.slope().as_rational().get_num());
  return out;
}

Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer lcm_of(const Integer& x, const Integer& y) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return r;
}

Integer power(const Integer& base, std::uint64_t exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Integer factorial(std::uint64_t k) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

Integer multinomial(std::uint64_t total, const std::vector<std::uint64_t>& parts) {
  Integer r = factorial(total);
  for (auto p : parts) r /= factorial(p);
  return r;
}

RivestInputs inputs_from_intercepts(const Integer& alphabet, const Integer& slope, const std::vector<Rational>& b) {
  RivestInputs in;
  in.alphabet = alphabet;
  in.slope = slope;
  in.denominator_lcm = 1;
  bool first = true;
  for (const auto& q : b) {
    const Integer c_abs = ceil_of(Rational(abs(q)));
    const Integer c = ceil_of(q);
    if (first || c_abs > in.max_ceil_abs) in.max_ceil_abs = c_abs;
    if (first || c > in.max_ceil_signed) in.max_ceil_signed = c;
    first = false;
    in.denominator_lcm = lcm_of(in.denominator_lcm, q.get_den());
    if (sgn(q) < 0) in.negative = true;
  }
  return in;
}

}  // namespace

// ---------------------------------------------------------------------------

Theorem3Check theorem3_check(const MapSystem& sys) {
  Theorem3Check out;
  Rational mu = 0;
  for (std::size_t i = 1; i <= sys.size(); ++i) {
    const AffineMap& f = sys.generator(i);
    if (!f.slope().is_integer() || sgn(f.slope().rational_part()) <= 0) {
      out.reason = Theorem3Reason::SlopeNotPositiveInteger;
      out.detail = "slope of f" + std::to_string(i) + " is " + to_string(f.slope());
      return out;
    }
    mu += Rational(1) / f.slope().rational_part();
  }
  out.mu = mu;
  for (std::size_t i = 1; i <= sys.size(); ++i) {
    if (!sys.generator(i).intercept().is_rational()) {
      out.reason = Theorem3Reason::InterceptIrrational;
      out.detail = "intercept of f" + std::to_string(i) + " is irrational";
      return out;
    }
  }
  if (mu <= 1) {
    out.reason = Theorem3Reason::SumNotAboveOne;
    out.detail = "sum of 1/a_i = " + to_string(mu);
    return out;
  }
  out.holds = true;
  out.reason = Theorem3Reason::Holds;
  out.detail = "sum of 1/a_i = " + to_string(mu) + " > 1";
  return out;
}

namespace {

ReductionReport compute_reduction(const std::vector<Integer>& slopes, const Rational& mu) {
  const std::size_t n = slopes.size();
  ReductionReport rep;
  rep.mu = mu;

  if (std::all_of(slopes.begin(), slopes.end(), [&](const Integer& a) { return a == slopes.front(); })) {
    rep.trivial = true;
    rep.length = 1;
    rep.tuple.assign(n, 0);
    rep.tuple[0] = 1;
    rep.m = slopes.front();
    rep.e_lower_bound = static_cast<unsigned long>(n);
    rep.term = Rational(rep.e_lower_bound) / Rational(rep.m);
    return rep;
  }

  // Smallest L >= 2 with mu^L > L^n.
  std::uint64_t length = 2;
  Rational mu_pow = mu * mu;
  while (!(mu_pow > Rational(power(Integer(static_cast<unsigned long>(length)), n)))) {
    ++length;
    mu_pow *= mu;
  }
  rep.length = length;

  std::vector<double> log_fact(length + 1, 0.0);
  for (std::uint64_t k = 1; k <= length; ++k) log_fact[k] = log_fact[k - 1] + std::log(static_cast<double>(k));
  std::vector<double> log_slope(n);
  for (std::size_t i = 0; i < n; ++i) log_slope[i] = std::log(slopes[i].get_d());

  std::vector<std::uint64_t> tuple(n, 0);
  auto for_each_tuple = [&](const std::function<void(double)>& visit) {
    std::function<void(std::size_t, std::uint64_t, double)> fill = [&](std::size_t pos, std::uint64_t left,
                                                                       double score) {
      if (pos + 1 == n) {
        tuple[pos] = left;
        visit(score - log_fact[left] - static_cast<double>(left) * log_slope[pos]);
        return;
      }
      for (std::uint64_t v = 0; v <= left; ++v) {
        tuple[pos] = v;
        fill(pos + 1, left - v, score - log_fact[v] - static_cast<double>(v) * log_slope[pos]);
      }
    };
    fill(0, length, log_fact[length]);
  };

  double best = -HUGE_VAL;
  for_each_tuple([&](double s) { best = std::max(best, s); });

  // Near-ties in floating point are settled exactly.
  const double tolerance = 1e-7 * std::max(1.0, std::abs(best));
  std::optional<Rational> best_term;
  for_each_tuple([&](double s) {
    if (s < best - tolerance) return;
    Integer slope_product = 1;
    for (std::size_t i = 0; i < n; ++i) slope_product *= power(slopes[i], tuple[i]);
    const Integer coeff = multinomial(length, tuple);
    Rational term(coeff, slope_product);
    term.canonicalize();
    if (!best_term || term > *best_term) {
      best_term = term;
      rep.tuple = tuple;
      rep.m = slope_product;
      rep.e_lower_bound = coeff;
    }
  });
  rep.term = *best_term;
  return rep;
}

}  // namespace

ReductionReport reduction_step(const MapSystem& sys) {
  const auto check = theorem3_check(sys);
  if (!check.holds) throw Error(ErrorCode::HypothesisNotSatisfied, check.detail);
  const auto slopes = integer_slopes(sys);

  static std::mutex cache_mutex;
  static std::map<std::vector<Integer>, ReductionReport> cache;
  {
    std::lock_guard lock(cache_mutex);
    if (auto it = cache.find(slopes); it != cache.end()) return it->second;
  }
  ReductionReport rep = compute_reduction(slopes, *check.mu);
  std::lock_guard lock(cache_mutex);
  cache.emplace(slopes, rep);
  return rep;
}

// ---------------------------------------------------------------------------

RivestInputs rivest_inputs(const MapSystem& sys) {
  for (const auto& f : sys.maps()) {
    if (!f.slope().is_integer() || sgn(f.slope().rational_part()) <= 0) {
      throw Error(ErrorCode::HypothesisNotSatisfied, "slopes must be positive integers");
    }
    if (!f.intercept().is_rational()) throw Error(ErrorCode::HypothesisNotSatisfied, "intercepts must be rational");
  }
  const auto slopes = integer_slopes(sys);
  if (!std::all_of(slopes.begin(), slopes.end(), [&](const Integer& a) { return a == slopes.front(); })) {
    throw Error(ErrorCode::HypothesisNotSatisfied, "slopes must all be equal");
  }
  const Integer n(static_cast<unsigned long>(sys.size()));
  if (!(n > slopes.front())) {
    throw Error(ErrorCode::HypothesisNotSatisfied, "need more generators than the common slope");
  }
  std::vector<Rational> b;
  for (const auto& f : sys.maps()) b.push_back(f.intercept().as_rational());
  return inputs_from_intercepts(n, slopes.front(), b);
}

Integer rivest_count(const RivestInputs& in, std::uint64_t length, BoundMode mode) {
  const Integer l(static_cast<unsigned long>(length));
  if (mode == BoundMode::Strict) return l * power(in.slope, length) * in.max_ceil_signed * in.denominator_lcm;
  const Integer ceiling = in.max_ceil_abs > 1 ? in.max_ceil_abs : Integer(1);
  return Integer(in.negative ? 2 : 1) * l * power(in.slope, length) * ceiling * in.denominator_lcm;
}

std::uint64_t rivest_length(const RivestInputs& in, BoundMode mode) {
  if (!(in.alphabet > in.slope)) throw Error(ErrorCode::HypothesisNotSatisfied, "alphabet must exceed the slope");
  constexpr std::uint64_t kMaxLength = 1u << 20;
  Integer words = 1;
  for (std::uint64_t length = 1; length <= kMaxLength; ++length) {
    words *= in.alphabet;
    if (words > rivest_count(in, length, mode)) return length;
  }
  throw Error(ErrorCode::InvalidArgument, "Rivest length exceeds 2^20");
}

std::uint64_t rivest_bound(const MapSystem& sys, BoundMode mode) { return rivest_length(rivest_inputs(sys), mode); }

RelationDepthPlan relation_depth_plan(const MapSystem& sys) {
  const ReductionReport red = reduction_step(sys);
  RelationDepthPlan plan;
  plan.outer = red.length;
  if (red.trivial) {
    plan.inner = rivest_bound(sys);
    plan.depth = plan.inner;
    return plan;
  }

  constexpr unsigned long kEnumerationLimit = 1ul << 16;
  std::vector<Rational> b;
  for (const auto& f : sys.maps()) b.push_back(f.intercept().as_rational());

  RivestInputs in;
  if (red.e_lower_bound <= kEnumerationLimit) {
    plan.e_set_enumerated = true;
    std::vector<std::size_t> letters;
    for (std::size_t i = 0; i < red.tuple.size(); ++i) letters.insert(letters.end(), red.tuple[i], i + 1);
    std::unordered_map<AffineMap, bool> seen;
    std::vector<Rational> intercepts;
    do {
      AffineMap f = apply_word(Word(letters), sys);
      intercepts.push_back(f.intercept().as_rational());
      if (!seen.emplace(std::move(f), true).second) {
        plan.e_set_collides = true;
        plan.depth = plan.outer;
        return plan;
      }
    } while (std::next_permutation(letters.begin(), letters.end()));
    in = inputs_from_intercepts(Integer(static_cast<unsigned long>(intercepts.size())), red.m, intercepts);
  } else {
    // Over-approximate the E-word intercepts: |b_w| <= max|b_i| * sum_{d<L} A^d
    // with denominators dividing lcm(q_i).
    in = inputs_from_intercepts(red.e_lower_bound, red.m, b);
    Integer top_slope = 0;
    for (const auto& a : integer_slopes(sys)) top_slope = std::max(top_slope, a);
    Integer geometric = 0;
    for (std::uint64_t d = 0; d < red.length; ++d) geometric += power(top_slope, d);
    Rational max_abs = 0;
    for (const auto& q : b) max_abs = std::max(max_abs, Rational(abs(q)));
    in.max_ceil_abs = ceil_of(max_abs * geometric);
    in.max_ceil_signed = in.max_ceil_abs;
  }
  plan.inner = rivest_length(in);
  plan.depth = plan.outer * plan.inner;
  return plan;
}

// ---------------------------------------------------------------------------

namespace {

Word word_at(std::uint64_t level, std::uint64_t rank, std::size_t n) {
  std::vector<std::size_t> idx(level);
  for (std::uint64_t k = level; k-- > 0;) {
    idx[k] = static_cast<std::size_t>(rank % n) + 1;
    rank /= n;
  }
  return Word(std::move(idx));
}

struct WordRef {
  std::uint64_t level;
  std::uint64_t rank;
};

// cur[r] = prev[r / n] o f_{r % n + 1} for r in [0, count)
std::vector<AffineMap> expand_level(const std::vector<AffineMap>& prev, const MapSystem& sys, std::uint64_t count,
                                    unsigned threads) {
  const std::size_t n = sys.size();
  const auto& gens = sys.maps();
  std::vector<std::optional<AffineMap>> slots(count);
  auto work = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t r = begin; r < end; ++r) slots[r].emplace(compose(prev[r / n], gens[r % n]));
  };
  constexpr std::uint64_t kMinChunk = 2048;
  if (threads <= 1 || count < 2 * kMinChunk) {
    work(0, count);
  } else {
    const std::uint64_t workers = std::min<std::uint64_t>(threads, count / kMinChunk);
    const std::uint64_t chunk = (count + workers - 1) / workers;
    std::vector<std::jthread> pool;
    for (std::uint64_t w = 0; w < workers; ++w) {
      const std::uint64_t begin = w * chunk;
      const std::uint64_t end = std::min(count, begin + chunk);
      if (begin < end) pool.emplace_back(work, begin, end);
    }
  }
  std::vector<AffineMap> cur;
  cur.reserve(count);
  for (auto& s : slots) cur.push_back(std::move(*s));
  return cur;
}

}  // namespace

SearchReport search_relation(const MapSystem& sys, const SearchOptions& options) {
  if (options.max_depth < 1) throw Error(ErrorCode::InvalidArgument, "max_depth must be >= 1");
  if (options.state_cap < 1) throw Error(ErrorCode::InvalidArgument, "state_cap must be >= 1");
  const std::size_t n = sys.size();

  SearchReport rep;
  std::unordered_map<AffineMap, WordRef> table;
  std::vector<AffineMap> prev{AffineMap::identity(sys.basis())};
  table.emplace(prev.front(), WordRef{0, 0});

  for (std::uint64_t depth = 1; depth <= options.max_depth; ++depth) {
    const std::uint64_t remaining = options.state_cap - rep.states_explored;
    const std::uint64_t full = static_cast<std::uint64_t>(prev.size()) * n;
    const std::uint64_t count = std::min<std::uint64_t>(full, remaining + 1);
    std::vector<AffineMap> cur = expand_level(prev, sys, count, options.threads);
    rep.max_depth_reached = depth;

    for (std::uint64_t r = 0; r < count; ++r) {
      if (auto it = table.find(cur[r]); it != table.end()) {
        rep.outcome = SearchReport::Outcome::RelationFound;
        rep.first = word_at(it->second.level, it->second.rank, n);
        rep.second = word_at(depth, r, n);
        rep.relation = normalize(rep.first, rep.second, sys);
        return rep;
      }
      if (rep.states_explored == options.state_cap) {
        rep.outcome = SearchReport::Outcome::StateCapExceeded;
        rep.note = "state cap " + std::to_string(options.state_cap) + " reached at depth " + std::to_string(depth);
        return rep;
      }
      table.emplace(cur[r], WordRef{depth, r});
      ++rep.states_explored;
    }
    prev = std::move(cur);
  }
  rep.outcome = SearchReport::Outcome::NoRelationUpToDepth;
  rep.note = "no relation among words of length <= " + std::to_string(options.max_depth) +
             "; this is not a proof of freeness";
  return rep;
}

// ---------------------------------------------------------------------------

std::size_t intercept_rank(const MapSystem& sys) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& f : sys.maps()) {
    const auto c = f.intercept().coeffs();
    rows.emplace_back(c.begin(), c.end());
  }
  const std::size_t cols = sys.basis().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    auto pivot = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(rank), rows.end(),
                              [&](const auto& row) { return sgn(row[col]) != 0; });
    if (pivot == rows.end()) continue;
    std::iter_swap(rows.begin() + static_cast<std::ptrdiff_t>(rank), pivot);
    const auto& p = rows[rank];
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (sgn(rows[r][col]) == 0) continue;
      const Rational factor = rows[r][col] / p[col];
      for (std::size_t k = col; k < cols; ++k) rows[r][k] -= factor * p[k];
    }
    ++rank;
  }
  return rank;
}

FreenessCertificate independence_criterion(const MapSystem& sys) {
  FreenessCertificate cert;
  const Scalar& a = sys.maps().front().slope();
  if (!a.is_integer() || a.rational_part() < 2) {
    cert.notes = "slopes must equal one integer >= 2";
    return cert;
  }
  for (const auto& f : sys.maps()) {
    if (!(f.slope() == a)) {
      cert.notes = "slopes differ";
      return cert;
    }
  }
  const std::size_t rank = intercept_rank(sys);
  if (rank < sys.size()) {
    cert.notes = "intercepts span a Q-space of dimension " + std::to_string(rank) + " < " +
                 std::to_string(sys.size());
    return cert;
  }
  cert.verdict = Verdict::FreeIndependence;
  cert.permutation.resize(sys.size());
  for (std::size_t i = 0; i < sys.size(); ++i) cert.permutation[i] = i + 1;
  cert.notes = "common integer slope " + to_string(a) +
               " and Q-linearly independent intercepts: equal composites would need equal base-" + to_string(a) +
               " 0/1 expansions per intercept direction";
  return cert;
}

}  // namespace affsemi
