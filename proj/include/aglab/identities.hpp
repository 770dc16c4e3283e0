#pragma once

// The identity catalog, exhaustive identity checking with witnesses, and
// the structural predicates (idempotents, left identities, right
// cancellative elements).
//
// AG* and AG** are fixed as (ab)c = b(ac) and a(bc) = b(ac) respectively;
// these are the formulas under which the chain a(bc) = (ba)c = (ca)b =
// a(cb) proving "every AG*-groupoid is right commutative" is valid.

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "aglab/table.hpp"

namespace aglab {

  enum class identity_id {
    left_invertive,
    medial,
    paramedial,
    left_commutative,
    right_commutative,
    bi_commutative,
    flexible,
    left_alternative,
    left_nuclear_square,
    middle_nuclear_square,
    right_nuclear_square,
    self_dual,
    ag_star,
    ag_star_star,
    t1,
    ag3_band,
    commutative,
    associative,
  };

  inline constexpr std::size_t identity_count = 18;

  using witness = std::vector<element>;

  struct identity_info {
    identity_id      id;
    std::string_view name;     // camelCase tag used in I/O
    std::size_t      arity;    // number of quantified variables
    std::string_view formula;  // human readable
  };

  inline constexpr std::array<identity_info, identity_count> identity_catalog{
      {{identity_id::left_invertive, "leftInvertive", 3, "(ab)c = (cb)a"},
       {identity_id::medial, "medial", 4, "(ab)(cd) = (ac)(bd)"},
       {identity_id::paramedial, "paramedial", 4, "(ab)(cd) = (db)(ca)"},
       {identity_id::left_commutative, "leftCommutative", 3,
        "(ab)c = (ba)c"},
       {identity_id::right_commutative, "rightCommutative", 3,
        "a(bc) = a(cb)"},
       {identity_id::bi_commutative, "biCommutative", 3,
        "(ab)c = (ba)c and a(bc) = a(cb)"},
       {identity_id::flexible, "flexible", 2, "(ab)a = a(ba)"},
       {identity_id::left_alternative, "leftAlternative", 2,
        "(aa)b = a(ab)"},
       {identity_id::left_nuclear_square, "leftNuclearSquare", 3,
        "(aa)(bc) = ((aa)b)c"},
       {identity_id::middle_nuclear_square, "middleNuclearSquare", 3,
        "(a(bb))c = a((bb)c)"},
       {identity_id::right_nuclear_square, "rightNuclearSquare", 3,
        "(ab)(cc) = a(b(cc))"},
       {identity_id::self_dual, "selfDual", 3, "a(bc) = c(ba)"},
       {identity_id::ag_star, "agStar", 3, "(ab)c = b(ac)"},
       {identity_id::ag_star_star, "agStarStar", 3, "a(bc) = b(ac)"},
       {identity_id::t1, "t1", 4, "ab = cd implies ba = dc"},
       {identity_id::ag3_band, "ag3Band", 1, "a(aa) = (aa)a = a"},
       {identity_id::commutative, "commutative", 2, "ab = ba"},
       {identity_id::associative, "associative", 3, "(ab)c = a(bc)"}}};

  inline constexpr identity_info const& info(identity_id id) {
    return identity_catalog[static_cast<std::size_t>(id)];
  }

  inline std::optional<identity_id> identity_from_name(std::string_view s) {
    for (auto const& i : identity_catalog) {
      if (i.name == s) {
        return i.id;
      }
    }
    return std::nullopt;
  }

  /// Whether the identity holds at one instantiation of its variables.
  /// `v` must hold at least info(id).arity elements.
  inline bool holds_at(cayley_table const& t, identity_id id,
                       std::span<element const> v) {
    auto m  = [&t](element x, element y) { return t(x, y); };
    auto sq = [&t](element x) { return t(x, x); };
    switch (id) {
      case identity_id::left_invertive:
        return m(m(v[0], v[1]), v[2]) == m(m(v[2], v[1]), v[0]);
      case identity_id::medial:
        return m(m(v[0], v[1]), m(v[2], v[3]))
               == m(m(v[0], v[2]), m(v[1], v[3]));
      case identity_id::paramedial:
        return m(m(v[0], v[1]), m(v[2], v[3]))
               == m(m(v[3], v[1]), m(v[2], v[0]));
      case identity_id::left_commutative:
        return m(m(v[0], v[1]), v[2]) == m(m(v[1], v[0]), v[2]);
      case identity_id::right_commutative:
        return m(v[0], m(v[1], v[2])) == m(v[0], m(v[2], v[1]));
      case identity_id::bi_commutative:
        return holds_at(t, identity_id::left_commutative, v)
               && holds_at(t, identity_id::right_commutative, v);
      case identity_id::flexible:
        return m(m(v[0], v[1]), v[0]) == m(v[0], m(v[1], v[0]));
      case identity_id::left_alternative:
        return m(sq(v[0]), v[1]) == m(v[0], m(v[0], v[1]));
      case identity_id::left_nuclear_square:
        return m(sq(v[0]), m(v[1], v[2])) == m(m(sq(v[0]), v[1]), v[2]);
      case identity_id::middle_nuclear_square:
        return m(m(v[0], sq(v[1])), v[2]) == m(v[0], m(sq(v[1]), v[2]));
      case identity_id::right_nuclear_square:
        return m(m(v[0], v[1]), sq(v[2])) == m(v[0], m(v[1], sq(v[2])));
      case identity_id::self_dual:
        return m(v[0], m(v[1], v[2])) == m(v[2], m(v[1], v[0]));
      case identity_id::ag_star:
        return m(m(v[0], v[1]), v[2]) == m(v[1], m(v[0], v[2]));
      case identity_id::ag_star_star:
        return m(v[0], m(v[1], v[2])) == m(v[1], m(v[0], v[2]));
      case identity_id::t1:
        return m(v[0], v[1]) != m(v[2], v[3])
               || m(v[1], v[0]) == m(v[3], v[2]);
      case identity_id::ag3_band:
        return m(v[0], sq(v[0])) == v[0] && m(sq(v[0]), v[0]) == v[0];
      case identity_id::commutative:
        return m(v[0], v[1]) == m(v[1], v[0]);
      case identity_id::associative:
        return m(m(v[0], v[1]), v[2]) == m(v[0], m(v[1], v[2]));
    }
    throw std::logic_error("holds_at: unknown identity");
  }

  struct check_result {
    identity_id            identity = identity_id::left_invertive;
    bool                   holds    = true;
    std::optional<witness> counterexample;  // present iff !holds
  };

  /// Exhaustive check over all n^arity tuples in lexicographic order; the
  /// first violating tuple is the witness.
  inline check_result check_identity(cayley_table const& t, identity_id id) {
    std::size_t const            n     = t.order();
    std::size_t const            arity = info(id).arity;
    std::array<element, 4>       v{};
    check_result                 r{id, true, std::nullopt};
    for (;;) {
      if (!holds_at(t, id, v)) {
        r.holds          = false;
        r.counterexample = witness(v.begin(), v.begin() + arity);
        return r;
      }
      // Odometer increment, last coordinate fastest.
      std::size_t i = arity;
      while (i > 0) {
        --i;
        if (++v[i] < n) {
          break;
        }
        v[i] = 0;
        if (i == 0) {
          return r;
        }
      }
    }
  }

  inline bool satisfies(cayley_table const& t, identity_id id) {
    return check_identity(t, id).holds;
  }

  inline element_subset idempotents(cayley_table const& t) {
    element_subset s(t.order());
    for (element a = 0; a < t.order(); ++a) {
      if (t(a, a) == a) {
        s.insert(a);
      }
    }
    return s;
  }

  inline element_subset left_identities(cayley_table const& t) {
    element_subset s(t.order());
    for (element e = 0; e < t.order(); ++e) {
      bool ok = true;
      for (element a = 0; ok && a < t.order(); ++a) {
        ok = t(e, a) == a;
      }
      if (ok) {
        s.insert(e);
      }
    }
    return s;
  }

  /// {x : ax = bx implies a = b}, i.e. column x has no repeated entry.
  inline element_subset right_cancellative_elements(cayley_table const& t) {
    element_subset s(t.order());
    for (element x = 0; x < t.order(); ++x) {
      std::uint32_t seen = 0;
      bool          ok   = true;
      for (element a = 0; ok && a < t.order(); ++a) {
        std::uint32_t bit = 1U << t(a, x);
        ok                = (seen & bit) == 0;
        seen |= bit;
      }
      if (ok) {
        s.insert(x);
      }
    }
    return s;
  }

  struct property_report {
    cayley_table                             table;
    std::array<check_result, identity_count> results;
    element_subset                           idempotent_elements;
    element_subset                           left_identity_elements;
    bool                                     is_ag_groupoid = false;
    bool                                     is_ag_monoid   = false;

    [[nodiscard]] check_result const& result(identity_id id) const {
      return results[static_cast<std::size_t>(id)];
    }
  };

  inline property_report classify(cayley_table const& t) {
    property_report r;
    r.table = t;
    for (auto const& i : identity_catalog) {
      r.results[static_cast<std::size_t>(i.id)] = check_identity(t, i.id);
    }
    r.idempotent_elements    = idempotents(t);
    r.left_identity_elements = left_identities(t);
    r.is_ag_groupoid = r.result(identity_id::left_invertive).holds;
    r.is_ag_monoid = r.is_ag_groupoid && !r.left_identity_elements.empty();
    return r;
  }

}  // namespace aglab
