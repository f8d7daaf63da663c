// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "affsemi/orbit.hpp"
#include "affsemi/pingpong.hpp"
#include "affsemi/relations.hpp"
#include "affsemi/report.hpp"
#include "affsemi/system_io.hpp"
#include "test_support.hpp"

using namespace affsemi;
using namespace affsemi::testing;

namespace {

using Clock = std::chrono::steady_clock;
using Outcome = SearchReport::Outcome;

double ms_since(Clock::time_point t0) { return std::chrono::duration<double, std::milli>(Clock::now() - t0).count(); }

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) detail << "failed: ";
      else detail << "; ";
      detail << what;
      ok = false;
    }
  }
};

Interval I(long p, long q, long r, long s) { return Interval(S(p, q), S(r, s)); }

void relation_witness(Check& c) {
  const MapSystem sys = system_of({{Q(2), Q(1)}, {Q(3), Q(1)}, {Q(6), Q(1)}});
  const auto t0 = Clock::now();
  const auto result = analyze(sys);
  const auto report = search_relation(sys, 3, 1'000'000);
  const double ms = ms_since(t0);
  c.expect(result.outcome == affsemi::Outcome::NotFree, "verdict NotFree");
  c.expect(report.outcome == Outcome::RelationFound, "relation within depth 3");
  if (report.relation) {
    c.expect(report.relation->lhs == Word{1, 1, 2} && report.relation->rhs == Word{3, 1}, "words (1,1,2) = (3,1)");
    c.expect(report.relation->map == M(Q(12), Q(7)), "composite 12x+7");
    c.expect(is_valid(*report.relation, sys), "valid witness");
  }
  c.expect(ms < 1000.0, "under 1 s");
  c.detail << (c.ok ? "" : "; ") << "(1,1,2) = (3,1) -> 12x+7 at depth " << report.max_depth_reached << " in " << ms
           << " ms";
}

void klarner(Check& c) {
  const MapSystem sys = system_of({{Q(2), Q(0)}, {Q(3), Q(2)}, {Q(6), Q(3)}});
  const auto cert = certify_theorem1(sys);
  c.expect(cert.verdict == Verdict::FreeTheorem1, "FreeTheorem1");
  c.expect(cert.permutation == std::vector<std::size_t>{2, 3, 1}, "order (3x+2, 6x+3, 2x)");
  c.expect(cert.left && *cert.left == S(-1) && cert.right && *cert.right == S(0), "L = -1, R = 0");
  c.expect(cert.intervals == std::vector<Interval>{I(-1, 1, -2, 3), I(-2, 3, -1, 2), I(-1, 2, 0, 1)},
           "exact intervals");
  c.expect(cert.intervals.size() == 3 && verify_pingpong(sys.permuted(cert.permutation).inverted(), cert.intervals).ok,
           "verify_pingpong");
  const auto report = search_relation(sys, SearchOptions{10, 1'000'000, 4});
  c.expect(report.outcome == Outcome::NoRelationUpToDepth && report.max_depth_reached == 10,
           "no relation up to depth 10");
  c.detail << (c.ok ? "" : "; ") << "intervals (-1,-2/3) (-2/3,-1/2) (-1/2,0); " << report.states_explored
           << " composites to depth 10";
}

void radical_independence(Check& c) {
  const MapSystem sys = parse_system("basis: 2, 3\n2 ; 1\n2 ; 1*sqrt(2)\n2 ; 1*sqrt(3)");
  c.expect(independence_criterion(sys).verdict == Verdict::FreeIndependence, "FreeIndependence");
  const auto report = search_relation(sys, SearchOptions{8, 1'000'000, 4});
  c.expect(report.outcome == Outcome::NoRelationUpToDepth && report.max_depth_reached == 8,
           "no relation up to depth 8");
  c.detail << (c.ok ? "" : "; ") << "rank 3 intercepts, " << report.states_explored << " composites to depth 8";
}

void counting_pipeline(Check& c) {
  const MapSystem equal = system_of({{Q(2), Q(0)}, {Q(2), Q(1)}, {Q(2), Q(2)}});
  c.expect(theorem3_applies(equal), "predicate on (2x, 2x+1, 2x+2)");
  const auto L = rivest_bound(equal);
  c.expect(L == 7, "rivest_bound = 7");
  const auto in = rivest_inputs(equal);
  Integer p7, p6;
  mpz_ui_pow_ui(p7.get_mpz_t(), 3, 7);
  mpz_ui_pow_ui(p6.get_mpz_t(), 3, 6);
  c.expect(p7 > rivest_count(in, 7) && rivest_count(in, 7) == 14 * 128, "3^7 > 14*2^7");
  c.expect(p6 <= rivest_count(in, 6) && rivest_count(in, 6) == 12 * 64, "3^6 <= 12*2^6");
  const auto r1 = search_relation(equal, 2, 1'000'000);
  c.expect(r1.outcome == Outcome::RelationFound && r1.max_depth_reached == 2, "relation at depth 2");

  const MapSystem mixed = system_of({{Q(2), Q(0)}, {Q(2), Q(1)}, {Q(3), Q(2)}});
  const auto check = theorem3_check(mixed);
  c.expect(check.holds && check.mu && *check.mu == Q(4, 3), "predicate on (2x, 2x+1, 3x+2), sum 4/3");
  const auto depth = guaranteed_relation_depth(mixed);
  const auto r2 = search_relation(mixed, 2, 1'000'000);
  c.expect(r2.outcome == Outcome::RelationFound && r2.relation && r2.relation->lhs == Word{2, 3} &&
               r2.relation->rhs == Word{3, 2} && r2.relation->map == M(Q(6), Q(5)),
           "(2,3) = (3,2) -> 6x+5");
  c.expect(2 <= depth, "depth 2 within guaranteed depth");
  c.detail << (c.ok ? "" : "; ") << "rivest L = " << L << ", guaranteed depth " << depth << " for (2x, 2x+1, 3x+2)";
}

void interval_soundness(Check& c) {
  Random rng(20240601);
  int failures = 0;
  for (int k = 0; k < 1000; ++k) {
    const Coeffs maps = random_gap_system(rng);
    const auto oracle = gap_oracle(maps);
    const MapSystem sys = system_of(maps);
    const auto cert = certify_theorem1(sys);
    bool ok = oracle.holds && cert.verdict == Verdict::FreeTheorem1 && cert.permutation == oracle.order &&
              verify_pingpong(sys.permuted(cert.permutation).inverted(), cert.intervals).ok;
    for (std::size_t i = 0; ok && i < maps.size(); ++i)
      ok = cert.intervals[i] == Interval(Scalar::rational(oracle.intervals[i].first),
                                         Scalar::rational(oracle.intervals[i].second));
    if (!ok) ++failures;
  }
  c.expect(failures == 0, std::to_string(failures) + " of 1000 systems");
  c.detail << (c.ok ? "" : "; ") << "1000 systems, " << failures << " failures";
}

void oracle_equivalence(Check& c) {
  Random rng(20240602);
  int mismatches = 0, found = 0;
  for (int k = 0; k < 200; ++k) {
    Coeffs maps;
    const long n = rng.integer(1, 3);
    for (long i = 0; i < n; ++i) {
      long a = 0;
      while (a == 0) a = rng.integer(-4, 4);
      maps.emplace_back(Q(a), Q(rng.integer(-3, 3)));
    }
    const auto naive = naive_search(maps, 5);
    const auto report = search_relation(system_of(maps), 5, 1'000'000);
    const bool hit = report.outcome == Outcome::RelationFound;
    bool same = hit == naive.found;
    if (same && hit) {
      ++found;
      same = report.second.size() == naive.collision_length && report.max_depth_reached == naive.collision_length &&
             naive_composite(maps, report.relation->lhs.indices) == naive_composite(maps, report.relation->rhs.indices);
    }
    if (!same) ++mismatches;
  }
  c.expect(mismatches == 0, std::to_string(mismatches) + " mismatches");
  c.detail << (c.ok ? "" : "; ") << "200 systems, " << found << " with relations, " << mismatches << " mismatches";
}

void bound_soundness(Check& c) {
  std::size_t systems = 0, failures = 0, max_depth = 0, max_found = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<std::size_t> digits(2 * n, 0);
    for (;;) {
      Coeffs maps;
      for (std::size_t i = 0; i < n; ++i) maps.emplace_back(Q(2 + static_cast<long>(digits[i])), Q(static_cast<long>(digits[n + i])));
      const MapSystem sys = system_of(maps);
      if (theorem3_applies(sys)) {
        ++systems;
        const auto depth = guaranteed_relation_depth(sys);
        const auto report = search_relation(sys, depth, 10'000'000);
        if (report.outcome != Outcome::RelationFound) ++failures;
        max_depth = std::max<std::size_t>(max_depth, depth);
        max_found = std::max<std::size_t>(max_found, report.max_depth_reached);
      }
      std::size_t pos = 0;
      while (pos < digits.size() && ++digits[pos] == (pos < n ? 3u : 4u)) digits[pos++] = 0;
      if (pos == digits.size()) break;
    }
  }
  c.expect(failures == 0, std::to_string(failures) + " systems without a relation");
  c.detail << (c.ok ? "" : "; ") << systems << " systems, deepest relation " << max_found
           << ", largest guaranteed depth " << max_depth;
}

void matrix_homomorphism(Check& c) {
  Random rng(20240603);
  const Basis b{2, 3};
  int failures = 0;
  for (int k = 0; k < 500; ++k) {
    const bool radical = k % 2;
    const long n = rng.integer(1, 4);
    std::vector<AffineMap> maps;
    for (long i = 0; i < n; ++i) {
      Rational a;
      while (a == 0) a = rng.rational(Q(-5), Q(5), 6);
      std::vector<Rational> c0{rng.rational(Q(-5), Q(5), 6), Q(0), Q(0)};
      if (radical) c0[1 + rng.index(2)] = rng.rational(Q(-3), Q(3), 4);
      maps.emplace_back(Scalar(b, a), Scalar(b, std::move(c0)));
    }
    const MapSystem sys(b, maps);
    Word w;
    const long len = rng.integer(1, 12);
    for (long j = 0; j < len; ++j) w.indices.push_back(rng.index(static_cast<std::size_t>(n)) + 1);
    UTMatrix product = to_matrix(AffineMap::identity(b));
    for (auto i : w.indices) product = product * to_matrix(sys.generator(i));
    if (!(to_matrix(apply_word(w, sys)) == product)) ++failures;
  }
  c.expect(failures == 0, std::to_string(failures) + " of 500 words");
  c.detail << (c.ok ? "" : "; ") << "500 words, " << failures << " failures";
}

void orbit_engine(Check& c) {
  const MapSystem sys = system_of({{Q(2), Q(0)}, {Q(3), Q(2)}, {Q(6), Q(3)}});
  const std::vector<std::pair<long, long>> ints{{2, 0}, {3, 2}, {6, 3}};
  const auto series = density_series(sys, S(1), {1000, 10000, 100000});
  const auto n3 = naive_orbit(ints, 1, 1000).size();
  const auto n4 = naive_orbit(ints, 1, 10000).size();
  c.expect(series[0].count == n3 && n3 == 460, "N = 1000");
  c.expect(series[1].count == n4 && n4 == 4205, "N = 10000");
  bool monotone = true;
  for (std::size_t k = 1; k < series.size(); ++k) monotone = monotone && series[k - 1].count <= series[k].count;
  c.expect(monotone, "monotone counts");
  c.detail << (c.ok ? "" : "; ") << "counts " << series[0].count << ", " << series[1].count << ", " << series[2].count
           << " (finite-range ratios only)";
}

void commuting(Check& c) {
  certify_theorem2(M(Q(5), Q(1)), M(Q(7), Q(2)));  // warm-up
  auto t0 = Clock::now();
  const auto a = certify_theorem2(M(Q(2), Q(0)), M(Q(3), Q(0)));
  const double ms_a = ms_since(t0);
  t0 = Clock::now();
  const auto b = certify_theorem2(M(Q(2), Q(0)), M(Q(2), Q(1)));
  const double ms_b = ms_since(t0);
  c.expect(a.verdict == Verdict::Commuting, "(2x, 3x) Commuting");
  c.expect(b.verdict == Verdict::FreeTheorem2, "(2x, 2x+1) FreeTheorem2");
  c.expect(ms_a < 1.0 && ms_b < 1.0, "under 1 ms each");
  c.detail << (c.ok ? "" : "; ") << ms_a << " ms, " << ms_b << " ms";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Check&)>>> criteria{
      {"relation-witness-regression", relation_witness},
      {"klarner-triple-certificate", klarner},
      {"radical-independence", radical_independence},
      {"counting-criterion-pipeline", counting_pipeline},
      {"interval-certificate-soundness", interval_soundness},
      {"search-oracle-equivalence", oracle_equivalence},
      {"guaranteed-depth-soundness", bound_soundness},
      {"matrix-homomorphism", matrix_homomorphism},
      {"orbit-engine", orbit_engine},
      {"commuting-detection", commuting},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, fn] : criteria) {
    Check c;
    const auto t0 = Clock::now();
    try {
      fn(c);
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail << " exception: " << e.what();
    }
    if (!c.ok) ++failed;
    std::printf("%s %2d %-32s %s [%.0f ms]\n", c.ok ? "PASS" : "FAIL", ++index, name, c.detail.str().c_str(),
                ms_since(t0));
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
