#pragma once

// JSON forms of the reports. Element labels are one-based throughout.

#include <json.hpp>

#include "aglab/congruences.hpp"
#include "aglab/enumerate.hpp"
#include "aglab/extended.hpp"
#include "aglab/identities.hpp"
#include "aglab/ideals.hpp"
#include "aglab/verify.hpp"

namespace aglab::json {

  using nlohmann::json;

  inline json entries(cayley_table const& t) {
    json out = json::array();
    for (element a = 0; a < t.order(); ++a) {
      json row = json::array();
      for (element b = 0; b < t.order(); ++b) {
        row.push_back(t(a, b) + 1);
      }
      out.push_back(std::move(row));
    }
    return out;
  }

  /// One-based entries in row-major order.
  inline json flat_entries(cayley_table const& t) {
    json out = json::array();
    for (element v : t.entries()) {
      out.push_back(v + 1);
    }
    return out;
  }

  inline json subset(element_subset const& s) {
    json out = json::array();
    for (element a : s.members()) {
      out.push_back(a + 1);
    }
    return out;
  }

  template <class Range>
  json one_based(Range const& r) {
    json out = json::array();
    for (auto v : r) {
      out.push_back(static_cast<int>(v) + 1);
    }
    return out;
  }

  inline json check(check_result const& r) {
    json out{{"identity", info(r.identity).name}, {"holds", r.holds}};
    out["witness"] = r.counterexample ? one_based(*r.counterexample) : json();
    return out;
  }

  inline json classification(property_report const& r) {
    json props = json::object();
    for (auto const& c : r.results) {
      json p{{"holds", c.holds}};
      p["witness"] = c.counterexample ? one_based(*c.counterexample) : json();
      props[std::string(info(c.identity).name)] = std::move(p);
    }
    return {{"order", r.table.order()},
            {"entries", flat_entries(r.table)},
            {"properties", std::move(props)},
            {"idempotents", subset(r.idempotent_elements)},
            {"leftIdentities", subset(r.left_identity_elements)},
            {"isAgGroupoid", r.is_ag_groupoid},
            {"isAgMonoid", r.is_ag_monoid}};
  }

  inline json extended(lc_extended_report const& r) {
    json blocks = json::array();
    for (auto const& b : r.blocks) {
      blocks.push_back({{"x", b.x + 1},
                        {"derived", entries(b.derived)},
                        {"symmetric", b.symmetric}});
    }
    return {{"test", "lc"},
            {"table", entries(r.source)},
            {"blocks", std::move(blocks)},
            {"verdict", r.verdict}};
  }

  inline json extended(rc_extended_report const& r) {
    json blocks = json::array();
    for (auto const& b : r.blocks) {
      blocks.push_back({{"x", b.x + 1},
                        {"diamond", entries(b.diamond)},
                        {"heart", entries(b.heart)},
                        {"matches", b.matches}});
    }
    return {{"test", "rc"},
            {"table", entries(r.source)},
            {"blocks", std::move(blocks)},
            {"verdict", r.verdict}};
  }

  inline json pair_or_null(std::optional<std::pair<element, element>> const& p) {
    if (!p) {
      return nullptr;
    }
    return json::array({p->first + 1, p->second + 1});
  }

  inline json ideal(ideal_report const& r) {
    return {{"subset", subset(r.subset)},
            {"isLeftIdeal", r.is_left_ideal},
            {"isRightIdeal", r.is_right_ideal},
            {"isIdeal", r.is_ideal},
            {"leftViolation", pair_or_null(r.left_violation)},
            {"rightViolation", pair_or_null(r.right_violation)}};
  }

  inline json generated(element a, generated_sets_result const& g) {
    return {{"element", a + 1},       {"aS", subset(g.aS)},
            {"Sa", subset(g.Sa)},     {"J", subset(g.J)},
            {"aSa", subset(g.a_Sa)},  {"R", subset(g.R())}};
  }

  inline json blocks(partition const& p) {
    json out = json::array();
    for (auto const& b : p.blocks()) {
      out.push_back(subset(b));
    }
    return out;
  }

  inline json triple_or_null(std::optional<std::array<element, 3>> const& w) {
    return w ? one_based(*w) : json();
  }

  inline json congruence(congruence_report const& r) {
    json out{{"blocks", blocks(r.relation)},
             {"leftCompatible", r.left_compatible},
             {"rightCompatible", r.right_compatible},
             {"isCongruence", r.is_congruence},
             {"leftWitness", triple_or_null(r.left_witness)},
             {"rightWitness", triple_or_null(r.right_witness)}};
    out["idempotentSeparative"]
        = r.idempotent_separative ? json(*r.idempotent_separative) : json();
    return out;
  }

  inline json relation_pairs(binary_relation const& r) {
    json out = json::array();
    for (auto [a, b] : r.pairs()) {
      out.push_back(json::array({a + 1, b + 1}));
    }
    return out;
  }

  inline json enumeration(enumeration_result const& r) {
    return {{"order", r.order},
            {"class", to_string(r.filter)},
            {"count", r.class_count},
            {"elapsedSeconds", r.elapsed.count()},
            {"subtrees", r.subtrees},
            {"subtreesResumed", r.subtrees_resumed}};
  }

  inline json paper(paper_report const& r) {
    json claims = json::array();
    for (auto const& c : r.claims) {
      claims.push_back({{"fixture", c.fixture},
                        {"claim", c.key},
                        {"description", c.description},
                        {"citation", c.citation},
                        {"claimed", c.claimed},
                        {"actual", c.actual},
                        {"status", to_string(c.status)},
                        {"knownErratum", c.known},
                        {"witness", c.witness}});
    }
    json sweeps = json::array();
    for (auto const& s : r.sweeps) {
      json refs = json::array();
      for (auto const& f : s.refutations) {
        refs.push_back({{"theorem", std::string(1, f.label)},
                        {"table", entries(f.table)}});
      }
      sweeps.push_back({{"order", s.order},
                        {"tables", s.tables},
                        {"refutations", s.refutation_count},
                        {"examples", std::move(refs)}});
    }
    json counts = json::array();
    for (auto const& c : r.counts) {
      counts.push_back({{"order", c.order},
                        {"class", to_string(c.filter)},
                        {"expected", c.expected},
                        {"actual", c.actual},
                        {"seconds", c.seconds}});
    }
    return {{"erratumListVersion", r.errata_version},
            {"claims", std::move(claims)},
            {"theoremSweeps", std::move(sweeps)},
            {"counts", std::move(counts)},
            {"passed", r.passed()}};
  }

}  // namespace aglab::json
