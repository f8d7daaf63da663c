// SPDX-License-Identifier: Apache-2.0
#include "affsemi/report.hpp"

#include <algorithm>
#include <chrono>

#include "affsemi/system_io.hpp"

namespace affsemi {

Json to_json(const Scalar& x) { return to_string(x); }

Json to_json(const AffineMap& f) {
  Json j;
  j["slope"] = to_json(f.slope());
  j["intercept"] = to_json(f.intercept());
  return j;
}

Json to_json(const Word& w) {
  Json j = Json::array();
  for (auto i : w.indices) j.push_back(i);
  return j;
}

Json to_json(const Interval& i) {
  Json j;
  j["lo"] = to_json(i.lo());
  j["hi"] = to_json(i.hi());
  return j;
}

Json to_json(const Relation& r) {
  Json j;
  j["lhs"] = to_json(r.lhs);
  j["rhs"] = to_json(r.rhs);
  j["map"] = to_json(r.map);
  return j;
}

Json to_json(const FreenessCertificate& c) {
  Json j;
  j["verdict"] = std::string(to_string(c.verdict));
  if (!c.permutation.empty()) j["permutation"] = c.permutation;
  if (c.left) j["L"] = to_json(*c.left);
  if (c.right) j["R"] = to_json(*c.right);
  if (!c.intervals.empty()) {
    j["intervals"] = Json::array();
    for (const auto& i : c.intervals) j["intervals"].push_back(to_json(i));
  }
  if (c.relation) j["relation"] = to_json(*c.relation);
  j["notes"] = c.notes;
  return j;
}

Json to_json(const VerificationReport& r) {
  Json j;
  j["ok"] = r.ok;
  j["violations"] = Json::array();
  for (const auto& v : r.violations) {
    Json e;
    e["kind"] = v.kind == PingPongViolation::Kind::Overlap ? "overlap" : "image_escapes";
    e["i"] = v.i;
    e["j"] = v.j;
    j["violations"].push_back(e);
  }
  return j;
}

Json to_json(const Theorem3Check& c) {
  Json j;
  j["applies"] = c.holds;
  j["reason"] = std::string(to_string(c.reason));
  if (c.mu) j["mu"] = to_string(*c.mu);
  j["detail"] = c.detail;
  return j;
}

Json to_json(const ReductionReport& r) {
  Json j;
  j["L"] = r.length;
  j["tuple"] = r.tuple;
  j["m"] = r.m.get_str();
  j["mu"] = to_string(r.mu);
  j["E_lower_bound"] = r.e_lower_bound.get_str();
  j["term"] = to_string(r.term);
  j["trivial"] = r.trivial;
  return j;
}

Json to_json(const RelationDepthPlan& p) {
  Json j;
  j["depth"] = p.depth;
  j["outer_L"] = p.outer;
  j["inner_L"] = p.inner;
  j["e_set_enumerated"] = p.e_set_enumerated;
  j["e_set_collides"] = p.e_set_collides;
  return j;
}

Json to_json(const SearchReport& r) {
  Json j;
  j["outcome"] = std::string(to_string(r.outcome));
  if (r.relation) {
    j["relation"] = to_json(*r.relation);
    Json c;
    c["first"] = to_json(r.first);
    c["second"] = to_json(r.second);
    j["collision"] = c;
  }
  j["states_explored"] = r.states_explored;
  j["max_depth_reached"] = r.max_depth_reached;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json to_json(const OrbitReport& r) {
  Json j;
  j["seed"] = to_json(r.seed);
  j["bound"] = r.bound;
  j["count"] = r.count;
  j["density"] = to_string(r.density);
  j["density_approx"] = r.density.get_num().get_d() / r.density.get_den().get_d();
  if (r.elements) {
    j["elements"] = Json::array();
    for (const auto& x : *r.elements) j["elements"].push_back(to_json(x));
  }
  return j;
}

Json input_json(const MapSystem& sys, const std::optional<std::string>& name) {
  Json j;
  if (name) j["name"] = *name;
  const auto rad = sys.basis().radicands();
  j["basis"] = std::vector<std::uint64_t>(rad.begin() + 1, rad.end());
  j["maps"] = Json::array();
  for (const auto& f : sys.maps()) j["maps"].push_back(to_json(f));
  j["text"] = print_system(sys, name);
  return j;
}

std::string_view to_string(Outcome o) noexcept {
  switch (o) {
    case Outcome::Free: return "Free";
    case Outcome::NotFree: return "NotFree";
    case Outcome::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

int exit_code(Outcome o) noexcept { return o == Outcome::Inconclusive ? 2 : 0; }

Json bound_json(const MapSystem& sys, bool strict_paper_bound) {
  const auto check = theorem3_check(sys);
  Json j = to_json(check);
  if (!check.holds) return j;
  j["reduction"] = to_json(reduction_step(sys));
  j["guaranteed_depth"] = to_json(relation_depth_plan(sys));
  try {
    const auto in = rivest_inputs(sys);
    Json r;
    r["L"] = rivest_length(in, BoundMode::Guarded);
    if (strict_paper_bound) r["L_strict"] = rivest_length(in, BoundMode::Strict);
    j["rivest"] = r;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::HypothesisNotSatisfied) throw;
    j["rivest"] = Json::object({{"applicable", false}, {"detail", e.message()}});
  }
  return j;
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

}  // namespace

AnalysisResult analyze(const MapSystem& sys, const AnalyzeOptions& options, const std::optional<std::string>& name) {
  AnalysisResult result;
  Json analyses = Json::array();
  Json timings;
  std::string decided_by;
  std::optional<Relation> witness;
  std::vector<std::string> notes;

  auto settle = [&](Outcome o, const FreenessCertificate& cert, const std::string& by) {
    if (!decided_by.empty()) {
      if (o != result.outcome) {
        throw Error(ErrorCode::InvalidArgument, "analyses disagree: " + decided_by + " vs " + by);
      }
      return;
    }
    result.outcome = o;
    result.decisive = cert;
    decided_by = by;
  };
  auto done = [&] { return !decided_by.empty() && !options.all; };

  if (sys.size() >= 2) {
    const auto t0 = Clock::now();
    const auto cert = certify_theorem1(sys);
    timings["theorem1"] = elapsed_ms(t0);
    analyses.push_back(Json::object({{"analysis", "theorem1"}, {"certificate", to_json(cert)}}));
    if (is_free(cert.verdict)) settle(Outcome::Free, cert, "theorem1");
  }

  if (!done() && sys.size() == 2) {
    const auto t0 = Clock::now();
    Json entry = Json::object({{"analysis", "theorem2"}});
    try {
      auto cert = certify_theorem2(sys.maps()[0], sys.maps()[1]);
      if (cert.verdict == Verdict::Commuting) {
        cert.relation = normalize(Word{1, 2}, Word{2, 1}, sys);
        witness = cert.relation;
        settle(Outcome::NotFree, cert, "theorem2");
      } else if (is_free(cert.verdict)) {
        settle(Outcome::Free, cert, "theorem2");
      }
      entry["certificate"] = to_json(cert);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::SlopePreconditionViolated) throw;
      entry["skipped"] = e.message();
    }
    timings["theorem2"] = elapsed_ms(t0);
    analyses.push_back(entry);
  }

  if (!done()) {
    const auto t0 = Clock::now();
    const auto cert = independence_criterion(sys);
    timings["independence"] = elapsed_ms(t0);
    analyses.push_back(Json::object({{"analysis", "independence"}, {"certificate", to_json(cert)}}));
    if (is_free(cert.verdict)) settle(Outcome::Free, cert, "independence");
  }

  std::uint64_t depth = options.max_depth;
  bool counting_applies = false;
  if (!done()) {
    const auto t0 = Clock::now();
    Json entry = bound_json(sys, options.strict_paper_bound);
    counting_applies = entry["applies"].get<bool>();
    if (counting_applies) depth = std::min(depth, entry["guaranteed_depth"]["depth"].get<std::uint64_t>());
    timings["theorem3"] = elapsed_ms(t0);
    Json wrapped = Json::object({{"analysis", "theorem3"}});
    wrapped.update(entry);
    analyses.push_back(wrapped);
  }

  if (!done()) {
    const auto t0 = Clock::now();
    const auto report = search_relation(sys, SearchOptions{depth, options.state_cap, options.threads});
    timings["search"] = elapsed_ms(t0);
    Json entry = Json::object({{"analysis", "search"}, {"max_depth", depth}, {"state_cap", options.state_cap}});
    entry.update(to_json(report));
    analyses.push_back(entry);
    if (report.relation) {
      FreenessCertificate cert;
      cert.verdict = Verdict::NotFree;
      cert.relation = report.relation;
      cert.notes = "explicit relation found by exhaustive search";
      if (!witness) witness = report.relation;
      settle(Outcome::NotFree, cert, "search");
    } else if (counting_applies) {
      notes.push_back("the counting criterion guarantees a relation, but none was found within depth " +
                      std::to_string(depth));
    }
  }

  Json doc;
  doc["command"] = "analyze";
  doc["input"] = input_json(sys, name);
  doc["verdict"] = std::string(to_string(result.outcome));
  if (result.decisive) {
    doc["decided_by"] = decided_by;
    doc["certificate"] = to_json(*result.decisive);
  }
  if (witness) doc["relation"] = to_json(*witness);
  doc["analyses"] = analyses;
  if (!notes.empty()) doc["notes"] = notes;
  if (options.timings) doc["timings_ms"] = timings;
  result.document = std::move(doc);
  return result;
}

}  // namespace affsemi
