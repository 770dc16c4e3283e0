#pragma once

// The published example tables with their claimed classifications. Every
// claim is evaluated mechanically; the expected outcome of a claim is its
// `claimed` value.

#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aglab/congruences.hpp"
#include "aglab/extended.hpp"
#include "aglab/identities.hpp"
#include "aglab/ideals.hpp"
#include "aglab/io.hpp"
#include "aglab/table.hpp"

namespace aglab {

  struct claim_evaluation {
    bool        actual = false;
    std::string witness;  // one-based; empty when there is nothing to show
  };

  struct claim {
    std::string key;
    std::string description;
    std::string citation;
    bool        claimed = true;
    std::function<claim_evaluation(cayley_table const&)> evaluate;
  };

  struct fixture_record {
    std::string        id;
    cayley_table       table;
    std::vector<claim> claims;
    std::string        notes;
  };

  namespace detail {

    inline std::string format_tuple(std::span<element const> v) {
      std::string out = "(";
      for (std::size_t i = 0; i < v.size(); ++i) {
        out += (i == 0 ? "" : ",") + std::to_string(v[i] + 1);
      }
      return out + ")";
    }

    // All listed identities hold; the witness names the first that fails.
    inline claim class_claim(std::string key, std::string description,
                             std::string citation, bool claimed,
                             std::vector<identity_id> ids) {
      return {std::move(key), std::move(description), std::move(citation),
              claimed, [ids](cayley_table const& t) {
                for (auto id : ids) {
                  auto r = check_identity(t, id);
                  if (!r.holds) {
                    return claim_evaluation{
                        false, std::string(info(id).name) + " fails at "
                                   + format_tuple(*r.counterexample)};
                  }
                }
                return claim_evaluation{true, {}};
              }};
    }

    inline claim connected_claim(std::string key, std::string citation,
                                 side s, element_subset A,
                                 element_subset B) {
      std::string description = std::string(s == side::right ? "right" : "left")
                                + " connected: " + format_subset(A) + " and "
                                + format_subset(B);
      return {std::move(key), std::move(description), std::move(citation), true,
              [s, A, B](cayley_table const& t) {
                bool ok = connected(t, A, B, s);
                auto S  = whole(t);
                std::string w;
                if (!ok) {
                  auto AX = s == side::right ? subset_product(t, A, S)
                                             : subset_product(t, S, A);
                  auto BX = s == side::right ? subset_product(t, B, S)
                                             : subset_product(t, S, B);
                  w = "products " + format_subset(AX) + ", "
                      + format_subset(BX);
                }
                return claim_evaluation{ok, w};
              }};
    }

    inline claim semilattice_claim(std::string key, std::string citation) {
      return {std::move(key), "idempotents form a semilattice",
              std::move(citation), true, [](cayley_table const& t) {
                auto r = semilattice_check(t);
                std::string w;
                if (r.not_closed_at) {
                  w = "not closed at ("
                      + std::to_string(r.not_closed_at->first + 1) + ","
                      + std::to_string(r.not_closed_at->second + 1) + ")";
                } else if (r.not_commutative_at) {
                  w = "not commutative at ("
                      + std::to_string(r.not_commutative_at->first + 1) + ","
                      + std::to_string(r.not_commutative_at->second + 1)
                      + ")";
                } else if (r.not_associative_at) {
                  w = "not associative at "
                      + format_tuple(*r.not_associative_at);
                }
                return claim_evaluation{r.is_semilattice(), w};
              }};
    }

    inline claim printed_grid_claim(std::string key, std::string citation,
                                    std::string printed) {
      return {std::move(key),
              "printed extended RC table agrees with the table",
              std::move(citation), true,
              [printed](cayley_table const& t) {
                auto diff
                    = first_grid_difference(render(rc_extended_test(t)), printed);
                return claim_evaluation{!diff, diff.value_or("")};
              }};
    }

  }  // namespace detail

  /// The extended RC table printed for the right commutativity example,
  /// transcribed cell for cell.
  inline constexpr std::string_view printed_rc_example_grid
      = ". | 1 2 3 || 1 1 1 | 1 1 1 | 2 2 2\n"
        "1 | 1 1 1 || 1 1 1 | 1 1 1 | 1 1 1\n"
        "2 | 1 1 1 || 1 1 1 | 1 1 1 | 1 1 1\n"
        "3 | 2 2 1 || 2 2 2 | 2 2 2 | 2 2 2\n"
        "          || 1 1 1 | 1 1 1 | 1 1 1\n"
        "          || 1 1 1 | 1 1 1 | 1 1 1\n"
        "          || 2 2 2 | 2 2 2 | 2 2 2\n";

  /// The pairs listed for rho on the F16 table, one-based.
  inline constexpr std::array<std::pair<int, int>, 10> printed_rho_pairs{{
      {1, 1}, {1, 2}, {1, 4}, {2, 1}, {2, 2},
      {2, 4}, {3, 3}, {4, 1}, {4, 2}, {4, 4}}};

  inline std::vector<fixture_record> const& fixtures() {
    using enum identity_id;
    using detail::class_claim;
    static std::vector<fixture_record> const corpus = [] {
      std::vector<fixture_record> v;
      auto T = [](std::initializer_list<std::initializer_list<int>> rows) {
        return cayley_table::from_one_based(rows);
      };
      auto not_assoc = [](std::string cite) {
        return detail::class_claim("associative", "associative",
                                   std::move(cite), false, {associative});
      };

      v.push_back({"F1",
                   T({{1, 1, 1}, {1, 1, 1}, {2, 1, 1}}),
                   {class_claim("lcAg", "LC-AG-groupoid", "three-element "
                                "examples, table (i)", true,
                                {left_invertive, left_commutative}),
                    not_assoc("three-element examples, table (i)")},
                   ""});
      v.push_back({"F2",
                   T({{1, 1, 1}, {1, 1, 1}, {2, 2, 1}}),
                   {class_claim("rcAg", "RC-AG-groupoid", "three-element "
                                "examples, table (ii)", true,
                                {left_invertive, right_commutative}),
                    not_assoc("three-element examples, table (ii)")},
                   ""});
      v.push_back({"F3",
                   T({{1, 1, 1}, {1, 1, 1}, {2, 2, 2}}),
                   {class_claim("bcAg", "BC-AG-groupoid", "three-element "
                                "examples, table (iii)", true,
                                {left_invertive, left_commutative,
                                 right_commutative}),
                    not_assoc("three-element examples, table (iii)")},
                   "same table as G1"});
      v.push_back({"G1",
                   T({{1, 1, 1}, {1, 1, 1}, {2, 2, 2}}),
                   {class_claim("ag", "AG-groupoid", "LC test example, "
                                "Table 3", true, {left_invertive}),
                    class_claim("lcAg", "LC-AG-groupoid", "LC test example, "
                                "Table 3", true,
                                {left_invertive, left_commutative})},
                   ""});
      v.push_back({"G2",
                   T({{1, 2, 3}, {3, 1, 2}, {2, 3, 1}}),
                   {class_claim("ag", "AG-groupoid", "LC test example, "
                                "Table 4", true, {left_invertive}),
                    class_claim("lcAg", "LC-AG-groupoid", "LC test example, "
                                "Table 4", false,
                                {left_invertive, left_commutative})},
                   ""});
      {
        element_subset A(4, {0, 1, 2});
        element_subset B(4, {0, 1, 3});
        v.push_back(
            {"F4",
             T({{1, 1, 1, 1}, {1, 1, 1, 1}, {2, 1, 1, 1}, {2, 1, 2, 1}}),
             {class_claim("ag", "AG-groupoid", "connected sets example",
                          true, {left_invertive}),
              detail::connected_claim("rightConnected",
                                      "connected sets example", side::right,
                                      A, B),
              detail::connected_claim("leftConnected",
                                      "connected sets example", side::left,
                                      A, B)},
             ""});
      }
      v.push_back({"F5",
                   T({{2, 2, 2}, {3, 3, 3}, {3, 3, 3}}),
                   {class_claim("rcAg", "RC-AG-groupoid", "RC but not AG* "
                                "example", true,
                                {left_invertive, right_commutative}),
                    class_claim("agStarAg", "AG*-groupoid", "RC but not AG* "
                                "example", false,
                                {left_invertive, ag_star})},
                   ""});
      v.push_back({"F6",
                   T({{3, 4, 5, 5, 5, 5},
                      {3, 4, 6, 6, 5, 5},
                      {5, 5, 5, 5, 5, 5},
                      {6, 6, 5, 5, 5, 5},
                      {5, 5, 5, 5, 5, 5},
                      {5, 5, 5, 5, 5, 5}}),
                   {class_claim("agStarAg", "AG*-groupoid", "AG* but not LC "
                                "example", true, {left_invertive, ag_star}),
                    class_claim("lcAg", "LC-AG-groupoid", "AG* but not LC "
                                "example", false,
                                {left_invertive, left_commutative})},
                   ""});
      v.push_back({"F7",
                   T({{1, 1, 1, 1, 1},
                      {2, 2, 2, 2, 2},
                      {1, 1, 1, 1, 1},
                      {1, 1, 1, 1, 1},
                      {1, 1, 1, 1, 1}}),
                   {class_claim("semigroup", "semigroup", "semigroup that is "
                                "neither LC nor AG*", true, {associative}),
                    class_claim("lcAg", "LC-AG-groupoid", "semigroup that is "
                                "neither LC nor AG*", false,
                                {left_invertive, left_commutative}),
                    class_claim("agStarAg", "AG*-groupoid", "semigroup that "
                                "is neither LC nor AG*", false,
                                {left_invertive, ag_star})},
                   "not an AG-groupoid at all"});
      v.push_back({"F8",
                   T({{1, 3, 1, 1}, {4, 4, 4, 4}, {1, 3, 1, 1}, {3, 1, 3, 3}}),
                   {class_claim("rcAg", "RC-AG-groupoid", "RC but not "
                                "paramedial example", true,
                                {left_invertive, right_commutative}),
                    class_claim("paramedial", "paramedial", "RC but not "
                                "paramedial example", false, {paramedial})},
                   ""});
      v.push_back({"F9",
                   T({{1, 1, 1}, {1, 1, 1}, {1, 2, 2}}),
                   {class_claim("agStarStarAg", "AG**-groupoid", "nuclear "
                                "square counterexamples, table (i)", true,
                                {left_invertive, ag_star_star}),
                    class_claim("nuclearSquare", "nuclear square", "nuclear "
                                "square counterexamples, table (i)", false,
                                {left_nuclear_square, middle_nuclear_square,
                                 right_nuclear_square})},
                   ""});
      v.push_back({"F10",
                   T({{1, 2, 3}, {3, 1, 2}, {2, 3, 1}}),
                   {class_claim("bcAg", "BC-AG-groupoid", "nuclear square "
                                "counterexamples, table (ii)", true,
                                {left_invertive, left_commutative,
                                 right_commutative}),
                    class_claim("nuclearSquare", "nuclear square", "nuclear "
                                "square counterexamples, table (ii)", false,
                                {left_nuclear_square, middle_nuclear_square,
                                 right_nuclear_square})},
                   "same table as G2, which is shown not to be LC"});
      v.push_back({"F11",
                   T({{3, 3, 2, 2}, {4, 3, 3, 3}, {3, 3, 3, 3}, {3, 1, 3, 3}}),
                   {class_claim("leftAlternativeAg",
                                "left alternative AG-groupoid",
                                "flexibility counterexamples, table (1)", true,
                                {left_invertive, left_alternative}),
                    class_claim("flexibleAg", "flexible AG-groupoid",
                                "flexibility counterexamples, table (1)",
                                false, {left_invertive, flexible})},
                   "fails (ab)c = (cb)a at (3,2,4) and (aa)b = a(ab) at "
                   "(1,1); the transposed table fails too"});
      v.push_back({"F12",
                   T({{2, 2, 2}, {3, 3, 3}, {3, 3, 3}}),
                   {class_claim("bcAg", "BC-AG-groupoid", "flexibility "
                                "counterexamples, table (2)", true,
                                {left_invertive, left_commutative,
                                 right_commutative}),
                    class_claim("flexibleAg", "flexible AG-groupoid",
                                "flexibility counterexamples, table (2)",
                                false, {left_invertive, flexible})},
                   "same table as F5"});
      v.push_back({"F13",
                   T({{1, 1, 1}, {1, 1, 3}, {1, 2, 1}}),
                   {class_claim("t1Ag", "T1-AG-groupoid", "self-dual "
                                "counterexamples, table (1)", true,
                                {left_invertive, t1}),
                    class_claim("selfDual@caption", "self-dual",
                                "self-dual counterexamples, caption of "
                                "table (1)", true, {self_dual}),
                    class_claim("selfDual@prose", "self-dual",
                                "self-dual counterexamples, sentence "
                                "introducing the tables", false,
                                {self_dual})},
                   "the caption calls the table self-dual while the "
                   "surrounding sentence says it is not"});
      v.push_back({"F14",
                   T({{1, 1, 1}, {1, 1, 1}, {2, 2, 2}}),
                   {class_claim("bcAg", "BC-AG-groupoid", "self-dual "
                                "counterexamples, table (2)", true,
                                {left_invertive, left_commutative,
                                 right_commutative}),
                    class_claim("selfDual", "self-dual", "self-dual "
                                "counterexamples, table (2)", false,
                                {self_dual})},
                   ""});
      v.push_back({"F15",
                   T({{1, 1, 1, 1}, {1, 2, 2, 2}, {1, 2, 3, 3}, {1, 2, 3, 4}}),
                   {class_claim("lcAg", "LC-AG-groupoid", "LC-AG-band "
                                "example", true,
                                {left_invertive, left_commutative}),
                    class_claim("semilattice", "semilattice (commutative "
                                "idempotent semigroup)", "LC-AG-band example",
                                true, {commutative, associative}),
                    {"band", "every element idempotent",
                     "LC-AG-band example", true,
                     [](cayley_table const& t) {
                       auto E = idempotents(t);
                       return claim_evaluation{
                           E == element_subset::all(t.order()),
                           "idempotents " + format_subset(E)};
                     }},
                    detail::semilattice_claim("idempotentSemilattice",
                                              "LC-AG-band example")},
                   ""});
      v.push_back(
          {"F16",
           T({{1, 1, 1, 1}, {1, 1, 1, 1}, {1, 1, 3, 1}, {1, 2, 1, 1}}),
           {class_claim("lcAg", "LC-AG-groupoid", "rho example", true,
                        {left_invertive, left_commutative}),
            {"idempotents", "idempotents are {1,3}", "rho example", true,
             [](cayley_table const& t) {
               auto E = idempotents(t);
               return claim_evaluation{E == element_subset(4, {0, 2}),
                                       "idempotents " + format_subset(E)};
             }},
            detail::semilattice_claim("idempotentSemilattice", "rho example"),
            {"rhoPairs", "rho equals the listed ten pairs", "rho example",
             true,
             [](cayley_table const& t) {
               binary_relation listed(t.order());
               for (auto [a, b] : printed_rho_pairs) {
                 listed.relate(static_cast<element>(a - 1),
                               static_cast<element>(b - 1));
               }
               auto computed = rho(t).as_relation();
               std::string w;
               for (element a = 0; a < t.order() && w.empty(); ++a) {
                 for (element b = 0; b < t.order() && w.empty(); ++b) {
                   if (computed.related(a, b) != listed.related(a, b)) {
                     w = "pair (" + std::to_string(a + 1) + ","
                         + std::to_string(b + 1) + ") differs";
                   }
                 }
               }
               return claim_evaluation{computed == listed, w};
             }},
            {"rhoCongruence", "rho is a congruence", "rho example", true,
             [](cayley_table const& t) {
               auto r = verify_congruence(t, rho(t));
               std::string w;
               if (r.left_witness) {
                 w = "left compatibility fails at "
                     + detail::format_tuple(*r.left_witness);
               } else if (r.right_witness) {
                 w = "right compatibility fails at "
                     + detail::format_tuple(*r.right_witness);
               }
               return claim_evaluation{r.is_congruence, w};
             }}},
           ""});
      v.push_back({"F-exam-a1-a",
                   T({{1, 1, 1}, {1, 1, 1}, {2, 2, 2}}),
                   {class_claim("rcAg", "RC-AG-groupoid", "RC test example",
                                true, {left_invertive, right_commutative}),
                    detail::printed_grid_claim(
                        "printedExtendedTable", "RC test example",
                        std::string(printed_rc_example_grid))},
                   "table as printed before extension; the extended table "
                   "shows 3*3 = 1 in its source block"});
      v.push_back({"F-exam-a1-b",
                   T({{1, 1, 1}, {1, 1, 1}, {2, 2, 1}}),
                   {class_claim("rcAg", "RC-AG-groupoid", "RC test example",
                                true, {left_invertive, right_commutative}),
                    detail::printed_grid_claim(
                        "printedExtendedTable", "RC test example",
                        std::string(printed_rc_example_grid))},
                   "table as shown in the source block of the extended "
                   "table; the index row printed for x = 3 is the third row "
                   "of the other variant"});
      return v;
    }();
    return corpus;
  }

  inline fixture_record const& fixture(std::string_view id) {
    for (auto const& f : fixtures()) {
      if (f.id == id) {
        return f;
      }
    }
    throw std::out_of_range("no fixture " + std::string(id));
  }

}  // namespace aglab
