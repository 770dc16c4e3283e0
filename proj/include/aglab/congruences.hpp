#pragma once

// Relations on the elements of a table, partitions, congruence checks, and
// the relations rho and eta built from the idempotents.

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "aglab/identities.hpp"
#include "aglab/table.hpp"

namespace aglab {

  class no_idempotents_error : public std::invalid_argument {
   public:
    no_idempotents_error()
        : std::invalid_argument("table has no idempotent element") {}
  };

  /// A binary relation on {0, ..., n-1}; row a holds {b : a ~ b}.
  class binary_relation {
   public:
    explicit binary_relation(std::size_t n) : order_(n) {}

    [[nodiscard]] std::size_t order() const noexcept { return order_; }

    [[nodiscard]] bool related(element a, element b) const noexcept {
      return ((rows_[a] >> b) & 1U) != 0;
    }

    void relate(element a, element b) { rows_[a] |= 1U << b; }

    [[nodiscard]] std::size_t pair_count() const noexcept {
      std::size_t c = 0;
      for (std::size_t a = 0; a < order_; ++a) {
        c += static_cast<std::size_t>(std::popcount(rows_[a]));
      }
      return c;
    }

    /// Every related pair in lexicographic order.
    [[nodiscard]] std::vector<std::pair<element, element>> pairs() const {
      std::vector<std::pair<element, element>> out;
      for (element a = 0; a < order_; ++a) {
        for (element b = 0; b < order_; ++b) {
          if (related(a, b)) {
            out.emplace_back(a, b);
          }
        }
      }
      return out;
    }

    [[nodiscard]] bool is_subset_of(binary_relation const& other) const {
      for (std::size_t a = 0; a < order_; ++a) {
        if ((rows_[a] & ~other.rows_[a]) != 0) {
          return false;
        }
      }
      return true;
    }

    friend bool operator==(binary_relation const&, binary_relation const&)
        = default;

   private:
    std::size_t                          order_;
    std::array<std::uint32_t, max_order> rows_{};
  };

  /// An equivalence relation given by its blocks. Each block is labelled by
  /// its least member.
  class partition {
   public:
    explicit partition(std::vector<element> block_of)
        : block_of_(std::move(block_of)) {
      for (std::size_t a = 0; a < block_of_.size(); ++a) {
        element label = block_of_[a];
        if (label > a || label >= block_of_.size() || block_of_[label] != label) {
          throw std::invalid_argument(
              "partition: block labels must be least members");
        }
      }
    }

    static partition discrete(std::size_t n) {
      std::vector<element> b(n);
      for (std::size_t a = 0; a < n; ++a) {
        b[a] = static_cast<element>(a);
      }
      return partition(b);
    }

    static partition universal(std::size_t n) {
      return partition(std::vector<element>(n, 0));
    }

    /// Relabels arbitrary block keys into least-member labels.
    template <typename Key>
    static partition from_keys(std::vector<Key> const& keys) {
      std::map<Key, element> first;
      std::vector<element>   b(keys.size());
      for (std::size_t a = 0; a < keys.size(); ++a) {
        auto [it, fresh] = first.emplace(keys[a], static_cast<element>(a));
        b[a]             = it->second;
      }
      return partition(b);
    }

    /// Builds the partition from a table-independent list of blocks
    /// covering {0, ..., n-1} exactly once.
    static partition from_blocks(std::size_t                        n,
                                 std::vector<element_subset> const& blocks) {
      std::vector<int> key(n, -1);
      int              id = 0;
      for (auto const& blk : blocks) {
        for (element a : blk.members()) {
          if (a >= n || key[a] != -1) {
            throw std::invalid_argument("partition: blocks overlap or "
                                        "exceed the order");
          }
          key[a] = id;
        }
        ++id;
      }
      for (int k : key) {
        if (k == -1) {
          throw std::invalid_argument("partition: blocks do not cover");
        }
      }
      return from_keys(key);
    }

    [[nodiscard]] std::size_t order() const noexcept {
      return block_of_.size();
    }

    [[nodiscard]] element block_of(element a) const { return block_of_[a]; }

    [[nodiscard]] bool same_block(element a, element b) const {
      return block_of_[a] == block_of_[b];
    }

    [[nodiscard]] std::vector<element_subset> blocks() const {
      std::vector<element_subset> out;
      for (element a = 0; a < order(); ++a) {
        if (block_of_[a] == a) {
          element_subset blk(order());
          for (element b = a; b < order(); ++b) {
            if (block_of_[b] == a) {
              blk.insert(b);
            }
          }
          out.push_back(blk);
        }
      }
      return out;
    }

    [[nodiscard]] binary_relation as_relation() const {
      binary_relation r(order());
      for (element a = 0; a < order(); ++a) {
        for (element b = 0; b < order(); ++b) {
          if (same_block(a, b)) {
            r.relate(a, b);
          }
        }
      }
      return r;
    }

    friend bool operator==(partition const&, partition const&) = default;

   private:
    std::vector<element> block_of_;
  };

  struct equivalence_check {
    bool reflexive  = true;
    bool symmetric  = true;
    bool transitive = true;
    std::optional<element>                            not_reflexive_at;
    std::optional<std::pair<element, element>>        not_symmetric_at;
    std::optional<std::array<element, 3>>             not_transitive_at;

    [[nodiscard]] bool is_equivalence() const noexcept {
      return reflexive && symmetric && transitive;
    }
  };

  inline equivalence_check check_equivalence(binary_relation const& r) {
    equivalence_check c;
    std::size_t const n = r.order();
    for (element a = 0; a < n; ++a) {
      if (c.reflexive && !r.related(a, a)) {
        c.reflexive        = false;
        c.not_reflexive_at = a;
      }
      for (element b = 0; b < n; ++b) {
        if (c.symmetric && r.related(a, b) && !r.related(b, a)) {
          c.symmetric        = false;
          c.not_symmetric_at = std::pair{a, b};
        }
        for (element d = 0; c.transitive && d < n; ++d) {
          if (r.related(a, b) && r.related(b, d) && !r.related(a, d)) {
            c.transitive        = false;
            c.not_transitive_at = std::array{a, b, d};
          }
        }
      }
    }
    return c;
  }

  /// The partition of an equivalence relation, or nullopt.
  inline std::optional<partition> to_partition(binary_relation const& r) {
    if (!check_equivalence(r).is_equivalence()) {
      return std::nullopt;
    }
    std::vector<std::uint32_t> rows(r.order());
    for (element a = 0; a < r.order(); ++a) {
      for (element b = 0; b < r.order(); ++b) {
        if (r.related(a, b)) {
          rows[a] |= 1U << b;
        }
      }
    }
    return partition::from_keys(rows);
  }

  inline bool idempotent_separative(cayley_table const& t,
                                    partition const&    p) {
    auto const E = idempotents(t).members();
    for (std::size_t i = 0; i < E.size(); ++i) {
      for (std::size_t j = i + 1; j < E.size(); ++j) {
        if (p.same_block(E[i], E[j])) {
          return false;
        }
      }
    }
    return true;
  }

  struct congruence_report {
    partition relation = partition::discrete(0);
    bool      is_equivalence   = true;  // structural for a partition
    bool      left_compatible  = true;
    bool      right_compatible = true;
    bool      is_congruence    = true;
    std::optional<bool> idempotent_separative;
    // First (a, b, c) with a ~ b but not ca ~ cb (left) / ac ~ bc (right).
    std::optional<std::array<element, 3>> left_witness;
    std::optional<std::array<element, 3>> right_witness;
  };

  inline congruence_report verify_congruence(cayley_table const& t,
                                             partition const&    p) {
    if (p.order() != t.order()) {
      throw std::invalid_argument("verify_congruence: order mismatch");
    }
    congruence_report r;
    r.relation        = p;
    std::size_t const n = t.order();
    for (element a = 0; a < n; ++a) {
      for (element b = 0; b < n; ++b) {
        if (!p.same_block(a, b)) {
          continue;
        }
        for (element c = 0; c < n; ++c) {
          if (!r.left_witness && !p.same_block(t(c, a), t(c, b))) {
            r.left_witness = std::array{a, b, c};
          }
          if (!r.right_witness && !p.same_block(t(a, c), t(b, c))) {
            r.right_witness = std::array{a, b, c};
          }
        }
      }
    }
    r.left_compatible       = !r.left_witness;
    r.right_compatible      = !r.right_witness;
    r.is_congruence         = r.left_compatible && r.right_compatible;
    r.idempotent_separative = aglab::idempotent_separative(t, p);
    return r;
  }

  /// a rho b iff ea = eb for every idempotent e.
  inline partition rho(cayley_table const& t) {
    auto const E = idempotents(t).members();
    if (E.empty()) {
      throw no_idempotents_error();
    }
    std::vector<std::vector<element>> signature(t.order());
    for (element a = 0; a < t.order(); ++a) {
      for (element e : E) {
        signature[a].push_back(t(e, a));
      }
    }
    return partition::from_keys(signature);
  }

  enum class eta_semantics {
    // a eta b iff some x, y satisfy (xe)a = (ye)b for every idempotent e
    exists_witness,
    // a eta b iff (xe)a = (ye)b for all x, y and every idempotent e
    forall_witness,
  };

  struct eta_report {
    eta_semantics            semantics;
    binary_relation          relation;
    equivalence_check        equivalence;
    std::optional<partition> blocks;  // present iff an equivalence
  };

  /// The relation is returned as computed; it is never closed up.
  inline eta_report eta(cayley_table const& t, eta_semantics semantics) {
    auto const E = idempotents(t).members();
    if (E.empty()) {
      throw no_idempotents_error();
    }
    std::size_t const n = t.order();
    auto agree = [&](element x, element y, element a, element b) {
      for (element e : E) {
        if (t(t(x, e), a) != t(t(y, e), b)) {
          return false;
        }
      }
      return true;
    };
    binary_relation rel(n);
    for (element a = 0; a < n; ++a) {
      for (element b = 0; b < n; ++b) {
        bool any = false;
        bool all = true;
        for (element x = 0; x < n; ++x) {
          for (element y = 0; y < n; ++y) {
            bool ok = agree(x, y, a, b);
            any     = any || ok;
            all     = all && ok;
          }
        }
        if (semantics == eta_semantics::exists_witness ? any : all) {
          rel.relate(a, b);
        }
      }
    }
    auto eq = check_equivalence(rel);
    return {semantics, rel, eq, to_partition(rel)};
  }

  struct semilattice_report {
    bool           lc_hypothesis = false;  // table is an LC-AG-groupoid
    element_subset idempotent_elements;
    bool           closed         = true;
    bool           commutative    = true;
    bool           associative    = true;
    bool           all_idempotent = true;
    // e(ab) = (ea)b for every idempotent e and all a, b.
    bool           left_translation_law = true;

    std::optional<std::pair<element, element>> not_closed_at;
    std::optional<std::pair<element, element>> not_commutative_at;
    std::optional<std::array<element, 3>>      not_associative_at;
    std::optional<std::array<element, 3>>      law_fails_at;

    [[nodiscard]] bool is_semilattice() const noexcept {
      return closed && commutative && associative && all_idempotent;
    }
  };

  /// Tests the product restricted to the idempotents. Callable on any
  /// table; whether the LC hypothesis holds is recorded.
  inline semilattice_report semilattice_check(cayley_table const& t) {
    semilattice_report r;
    r.lc_hypothesis = satisfies(t, identity_id::left_invertive)
                      && satisfies(t, identity_id::left_commutative);
    r.idempotent_elements = idempotents(t);
    auto const E          = r.idempotent_elements.members();
    for (element e : E) {
      if (t(e, e) != e) {
        r.all_idempotent = false;
      }
      for (element f : E) {
        if (r.closed && !r.idempotent_elements.contains(t(e, f))) {
          r.closed        = false;
          r.not_closed_at = std::pair{e, f};
        }
        if (r.commutative && t(e, f) != t(f, e)) {
          r.commutative        = false;
          r.not_commutative_at = std::pair{e, f};
        }
        for (element g : E) {
          if (r.associative && t(t(e, f), g) != t(e, t(f, g))) {
            r.associative        = false;
            r.not_associative_at = std::array{e, f, g};
          }
        }
      }
      for (element a = 0; a < t.order(); ++a) {
        for (element b = 0; b < t.order(); ++b) {
          if (r.left_translation_law && t(e, t(a, b)) != t(t(e, a), b)) {
            r.left_translation_law = false;
            r.law_fails_at         = std::array{e, a, b};
          }
        }
      }
    }
    return r;
  }

}  // namespace aglab
