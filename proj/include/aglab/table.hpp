#pragma once

// Core data model: finite magmas stored as Cayley tables, and element
// subsets stored as bit masks.

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace aglab {

  using element = std::uint8_t;

  inline constexpr std::size_t max_order = 8;

  /// Raised when an element index, order, or grid shape is invalid.
  class table_error : public std::out_of_range {
   public:
    using std::out_of_range::out_of_range;
  };

  /// An order-n binary operation on {0, ..., n-1}. Entry (a, b) is a*b.
  /// Entries are stored row-major with stride n, so the entry sequence
  /// compares lexicographically in the same order tables are printed.
  class cayley_table {
   public:
    cayley_table() = default;

    /// Every entry set to zero.
    explicit cayley_table(std::size_t n) : order_(check_order(n)) {}

    cayley_table(std::size_t n, std::span<element const> entries)
        : order_(check_order(n)) {
      if (entries.size() != n * n) {
        throw table_error("cayley_table: expected " + std::to_string(n * n)
                          + " entries, got "
                          + std::to_string(entries.size()));
      }
      for (element v : entries) {
        if (v >= n) {
          throw table_error("cayley_table: entry " + std::to_string(v)
                            + " out of range for order "
                            + std::to_string(n));
        }
      }
      std::copy(entries.begin(), entries.end(), cells_.begin());
    }

    /// Zero-based rows, e.g. {{0, 0}, {0, 1}}.
    static cayley_table
    from_rows(std::initializer_list<std::initializer_list<int>> rows) {
      std::vector<element> flat;
      for (auto const& row : rows) {
        if (row.size() != rows.size()) {
          throw table_error("cayley_table: grid is not square");
        }
        for (int v : row) {
          if (v < 0 || static_cast<std::size_t>(v) >= rows.size()) {
            throw table_error("cayley_table: entry out of range");
          }
          flat.push_back(static_cast<element>(v));
        }
      }
      return cayley_table(rows.size(), flat);
    }

    /// One-based rows, as tables are printed.
    static cayley_table
    from_one_based(std::initializer_list<std::initializer_list<int>> rows) {
      std::vector<element> flat;
      for (auto const& row : rows) {
        if (row.size() != rows.size()) {
          throw table_error("cayley_table: grid is not square");
        }
        for (int v : row) {
          if (v < 1 || static_cast<std::size_t>(v) > rows.size()) {
            throw table_error("cayley_table: entry out of range");
          }
          flat.push_back(static_cast<element>(v - 1));
        }
      }
      return cayley_table(rows.size(), flat);
    }

    [[nodiscard]] std::size_t order() const noexcept { return order_; }

    /// Unchecked product.
    [[nodiscard]] element operator()(element a, element b) const noexcept {
      return cells_[a * order_ + b];
    }

    /// Checked product.
    [[nodiscard]] element product(std::size_t a, std::size_t b) const {
      if (a >= order_ || b >= order_) {
        throw table_error("product: element index out of range");
      }
      return cells_[a * order_ + b];
    }

    void set(std::size_t a, std::size_t b, element v) {
      if (a >= order_ || b >= order_ || v >= order_) {
        throw table_error("set: element index out of range");
      }
      cells_[a * order_ + b] = v;
    }

    [[nodiscard]] std::span<element const> entries() const noexcept {
      return {cells_.data(), order_ * order_};
    }

    friend bool operator==(cayley_table const& x, cayley_table const& y) {
      return x.order_ == y.order_
             && std::equal(x.entries().begin(), x.entries().end(),
                           y.entries().begin());
    }

    /// Orders first by order, then lexicographically by entries.
    friend std::strong_ordering operator<=>(cayley_table const& x,
                                            cayley_table const& y) {
      if (auto c = x.order_ <=> y.order_; c != 0) {
        return c;
      }
      return std::lexicographical_compare_three_way(
          x.entries().begin(), x.entries().end(), y.entries().begin(),
          y.entries().end());
    }

   private:
    static std::size_t check_order(std::size_t n) {
      if (n < 1 || n > max_order) {
        throw table_error("order " + std::to_string(n)
                          + " outside supported range [1, 8]");
      }
      return n;
    }

    std::size_t                               order_ = 1;
    std::array<element, max_order * max_order> cells_{};
  };

  /// A subset of the elements of an order-n table.
  class element_subset {
   public:
    element_subset() = default;

    explicit element_subset(std::size_t n, std::uint32_t mask = 0)
        : order_(n), mask_(mask & full_mask(n)) {}

    element_subset(std::size_t n, std::initializer_list<element> members)
        : order_(n) {
      for (element a : members) {
        insert(a);
      }
    }

    static element_subset all(std::size_t n) {
      return element_subset(n, full_mask(n));
    }

    static element_subset singleton(std::size_t n, element a) {
      element_subset s(n);
      s.insert(a);
      return s;
    }

    [[nodiscard]] std::size_t   order() const noexcept { return order_; }
    [[nodiscard]] std::uint32_t mask() const noexcept { return mask_; }
    [[nodiscard]] bool          empty() const noexcept { return mask_ == 0; }
    [[nodiscard]] std::size_t   size() const noexcept {
      return static_cast<std::size_t>(std::popcount(mask_));
    }

    [[nodiscard]] bool contains(element a) const noexcept {
      return a < order_ && ((mask_ >> a) & 1U) != 0;
    }

    void insert(element a) {
      if (a >= order_) {
        throw table_error("element_subset: element out of range");
      }
      mask_ |= 1U << a;
    }

    [[nodiscard]] bool is_subset_of(element_subset const& other) const {
      return (mask_ & ~other.mask_) == 0;
    }

    /// Members in increasing order.
    [[nodiscard]] std::vector<element> members() const {
      std::vector<element> out;
      for (element a = 0; a < order_; ++a) {
        if (contains(a)) {
          out.push_back(a);
        }
      }
      return out;
    }

    friend element_subset operator|(element_subset x, element_subset const& y) {
      x.mask_ |= y.mask_;
      return x;
    }

    friend element_subset operator&(element_subset x, element_subset const& y) {
      x.mask_ &= y.mask_;
      return x;
    }

    friend bool operator==(element_subset const&, element_subset const&)
        = default;

    static constexpr std::uint32_t full_mask(std::size_t n) {
      return n >= 32 ? ~0U : (1U << n) - 1U;
    }

   private:
    std::size_t   order_ = 0;
    std::uint32_t mask_  = 0;
  };

}  // namespace aglab
