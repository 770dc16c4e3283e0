#pragma once

// Implications between identity classes, checked on concrete tables. A
// refutation is a table meeting a hypothesis but not its conclusion.

#include <array>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "aglab/identities.hpp"
#include "aglab/table.hpp"

namespace aglab {

  class not_ag_groupoid_error : public std::invalid_argument {
   public:
    not_ag_groupoid_error()
        : std::invalid_argument("table does not satisfy (ab)c = (cb)a") {}
  };

  struct theorem_outcome {
    char             label;  // 'a' .. 'k'
    std::string_view statement;
    bool             hypothesis = false;
    bool             conclusion = false;

    [[nodiscard]] bool refuted() const noexcept {
      return hypothesis && !conclusion;
    }
  };

  /// Every implication of the registry evaluated on t. The conclusion is
  /// evaluated whether or not the hypothesis holds.
  inline std::vector<theorem_outcome> theorem_suite(cayley_table const& t) {
    auto const r = classify(t);
    if (!r.is_ag_groupoid) {
      throw not_ag_groupoid_error();
    }
    auto h = [&r](identity_id id) { return r.result(id).holds; };
    using enum identity_id;

    bool const lc = h(left_commutative);
    bool const bc = h(bi_commutative);
    bool const comm_semigroup = h(commutative) && h(associative);
    bool const nuclear_square = h(left_nuclear_square)
                                && h(middle_nuclear_square)
                                && h(right_nuclear_square);

    std::vector<theorem_outcome> out;
    out.push_back({'a', "AG-groupoid => medial", true, h(medial)});
    out.push_back({'b', "AG-monoid => paramedial", r.is_ag_monoid,
                   h(paramedial)});
    out.push_back({'c', "AG* => RC", h(ag_star), h(right_commutative)});
    out.push_back({'d', "LC and AG* => associative", lc && h(ag_star),
                   h(associative)});
    out.push_back({'e',
                   "LC with a right cancellative element or a left identity "
                   "=> commutative semigroup",
                   lc
                       && (!right_cancellative_elements(t).empty()
                           || !r.left_identity_elements.empty()),
                   comm_semigroup});
    out.push_back({'f', "LC => paramedial", lc, h(paramedial)});
    out.push_back({'g', "BC => left nuclear square", bc,
                   h(left_nuclear_square)});
    out.push_back({'h',
                   "BC and AG** => (middle NS <=> right NS <=> nuclear "
                   "square)",
                   bc && h(ag_star_star),
                   h(middle_nuclear_square) == h(right_nuclear_square)
                       && h(right_nuclear_square) == nuclear_square});
    out.push_back({'i', "BC => (left alternative <=> flexible)", bc,
                   h(left_alternative) == h(flexible)});
    out.push_back({'j', "T1 and BC => self-dual", h(t1) && bc, h(self_dual)});
    out.push_back({'k', "BC and AG-3-band => commutative semigroup",
                   bc && h(ag3_band), comm_semigroup});
    return out;
  }

  inline bool any_refuted(std::vector<theorem_outcome> const& outcomes) {
    for (auto const& o : outcomes) {
      if (o.refuted()) {
        return true;
      }
    }
    return false;
  }

}  // namespace aglab
