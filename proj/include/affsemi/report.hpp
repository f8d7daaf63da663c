// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "affsemi/orbit.hpp"
#include "affsemi/pingpong.hpp"
#include "affsemi/relations.hpp"

namespace affsemi {

/// Field order is insertion order, so documents are stable byte-for-byte.
using Json = nlohmann::ordered_json;

Json to_json(const Scalar& x);
Json to_json(const AffineMap& f);
Json to_json(const Word& w);
Json to_json(const Interval& i);
Json to_json(const Relation& r);
Json to_json(const FreenessCertificate& c);
Json to_json(const VerificationReport& r);
Json to_json(const Theorem3Check& c);
Json to_json(const ReductionReport& r);
Json to_json(const RelationDepthPlan& p);
Json to_json(const SearchReport& r);
Json to_json(const OrbitReport& r);
/// Echo of the input: name, basis, maps and the canonical text.
Json input_json(const MapSystem& sys, const std::optional<std::string>& name);

/// Overall answer of a command; maps onto the exit-code contract.
enum class Outcome { Free, NotFree, Inconclusive };
std::string_view to_string(Outcome o) noexcept;
/// 0 for a definitive answer, 2 for inconclusive.
int exit_code(Outcome o) noexcept;

struct AnalyzeOptions {
  std::uint64_t max_depth = 10;
  std::uint64_t state_cap = 1'000'000;
  /// Run every analysis instead of stopping at the first definitive one.
  bool all = false;
  /// Also report the Rivest length under the unguarded b(L).
  bool strict_paper_bound = false;
  /// Include wall-clock timings (makes the document nondeterministic).
  bool timings = false;
  unsigned threads = 1;
};

struct AnalysisResult {
  Outcome outcome = Outcome::Inconclusive;
  /// Certificate that decided the outcome, if any.
  std::optional<FreenessCertificate> decisive;
  Json document;
};

/// Certificate cascade: sorted fixed points, the two-generator test,
/// independence,
/// the counting criterion with its bounds, then relation search (depth capped
/// by the guaranteed depth when the counting criterion applies).
AnalysisResult analyze(const MapSystem& sys, const AnalyzeOptions& options = {},
                       const std::optional<std::string>& name = std::nullopt);

/// Counting-criterion bundle used by `bound` and `analyze`.
Json bound_json(const MapSystem& sys, bool strict_paper_bound);

}  // namespace affsemi
