#pragma once

// Subset products, one- and two-sided ideals, connected sets, the sets
// generated by a single element, and a closure oracle for the smallest
// ideal containing an element.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>

#include "aglab/table.hpp"

namespace aglab {

  class empty_subset_error : public std::invalid_argument {
   public:
    empty_subset_error()
        : std::invalid_argument("subset must be nonempty") {}
  };

  /// {ab : a in A, b in B}.
  inline element_subset subset_product(cayley_table const&   t,
                                       element_subset const& A,
                                       element_subset const& B) {
    element_subset out(t.order());
    for (element a : A.members()) {
      for (element b : B.members()) {
        out.insert(t(a, b));
      }
    }
    return out;
  }

  inline element_subset whole(cayley_table const& t) {
    return element_subset::all(t.order());
  }

  struct ideal_report {
    element_subset subset;
    bool           is_left_ideal  = false;
    bool           is_right_ideal = false;
    bool           is_ideal       = false;
    // First (s, a) in lexicographic order with s*a not in the subset
    // (s arbitrary, a in the subset), and likewise for a*s.
    std::optional<std::pair<element, element>> left_violation;
    std::optional<std::pair<element, element>> right_violation;
  };

  inline ideal_report examine_ideal(cayley_table const&   t,
                                    element_subset const& A) {
    if (A.empty()) {
      throw empty_subset_error();
    }
    ideal_report r;
    r.subset = A;
    for (element s = 0; s < t.order(); ++s) {
      for (element a : A.members()) {
        if (!r.left_violation && !A.contains(t(s, a))) {
          r.left_violation = std::pair{s, a};
        }
        if (!r.right_violation && !A.contains(t(a, s))) {
          r.right_violation = std::pair{a, s};
        }
      }
    }
    r.is_left_ideal  = !r.left_violation;
    r.is_right_ideal = !r.right_violation;
    r.is_ideal       = r.is_left_ideal && r.is_right_ideal;
    return r;
  }

  /// SA is contained in A.
  inline bool is_left_ideal(cayley_table const& t, element_subset const& A) {
    return examine_ideal(t, A).is_left_ideal;
  }

  /// AS is contained in A.
  inline bool is_right_ideal(cayley_table const& t, element_subset const& A) {
    return examine_ideal(t, A).is_right_ideal;
  }

  inline bool is_ideal(cayley_table const& t, element_subset const& A) {
    return examine_ideal(t, A).is_ideal;
  }

  enum class side { left, right };

  /// Right: AS in B and BS in A. Left: SA in B and SB in A.
  inline bool connected(cayley_table const& t, element_subset const& A,
                        element_subset const& B, side s) {
    if (A.empty() || B.empty()) {
      throw empty_subset_error();
    }
    auto const S = whole(t);
    if (s == side::right) {
      return subset_product(t, A, S).is_subset_of(B)
             && subset_product(t, B, S).is_subset_of(A);
    }
    return subset_product(t, S, A).is_subset_of(B)
           && subset_product(t, S, B).is_subset_of(A);
  }

  struct generated_sets_result {
    element_subset aS;
    element_subset Sa;
    element_subset J;        // {a} u aS u Sa
    element_subset a_Sa;     // a(Sa)
    element_subset aS_a;     // (aS)a
    element_subset const& R() const noexcept { return aS_a; }
  };

  inline generated_sets_result generated_sets(cayley_table const& t,
                                               element             a) {
    if (a >= t.order()) {
      throw table_error("generated_sets: element out of range");
    }
    auto const S   = whole(t);
    auto const one = element_subset::singleton(t.order(), a);
    generated_sets_result g;
    g.aS   = subset_product(t, one, S);
    g.Sa   = subset_product(t, S, one);
    g.J    = one | g.aS | g.Sa;
    g.a_Sa = subset_product(t, one, g.Sa);
    g.aS_a = subset_product(t, g.aS, one);
    return g;
  }

  enum class ideal_kind { left, right, two_sided };

  /// Smallest ideal of the given kind containing a: start from {a} and add
  /// SX, XS or both until nothing changes.
  inline element_subset minimal_ideal_oracle(cayley_table const& t, element a,
                                             ideal_kind kind) {
    if (a >= t.order()) {
      throw table_error("minimal_ideal_oracle: element out of range");
    }
    auto const S = whole(t);
    auto       X = element_subset::singleton(t.order(), a);
    for (;;) {
      auto Y = X;
      if (kind != ideal_kind::right) {
        Y = Y | subset_product(t, S, X);
      }
      if (kind != ideal_kind::left) {
        Y = Y | subset_product(t, X, S);
      }
      if (Y == X) {
        return X;
      }
      X = Y;
    }
  }

}  // namespace aglab
