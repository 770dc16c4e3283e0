#pragma once

// Relabelings, isomorphism testing and the lex-least canonical form.

#include <algorithm>
#include <array>
#include <cstddef>
#include <numeric>
#include <optional>

#include "aglab/table.hpp"

namespace aglab {

  /// A bijection on {0, ..., n-1}; image[a] is the image of a.
  struct permutation {
    std::size_t                      order = 0;
    std::array<element, max_order> image{};

    static permutation identity(std::size_t n) {
      permutation p{n, {}};
      std::iota(p.image.begin(), p.image.begin() + n, element{0});
      return p;
    }

    [[nodiscard]] element operator()(element a) const noexcept {
      return image[a];
    }

    [[nodiscard]] permutation inverse() const {
      permutation q{order, {}};
      for (std::size_t a = 0; a < order; ++a) {
        q.image[image[a]] = static_cast<element>(a);
      }
      return q;
    }

    [[nodiscard]] bool is_valid() const {
      std::array<bool, max_order> seen{};
      for (std::size_t a = 0; a < order; ++a) {
        if (image[a] >= order || seen[image[a]]) {
          return false;
        }
        seen[image[a]] = true;
      }
      return true;
    }

    friend bool operator==(permutation const& x, permutation const& y) {
      return x.order == y.order
             && std::equal(x.image.begin(), x.image.begin() + x.order,
                           y.image.begin());
    }
  };

  /// The table obtained by renaming every element a to p(a):
  /// result(p(a), p(b)) = p(t(a, b)).
  inline cayley_table relabel(cayley_table const& t, permutation const& p) {
    std::size_t  n = t.order();
    cayley_table out(n);
    for (element a = 0; a < n; ++a) {
      for (element b = 0; b < n; ++b) {
        out.set(p(a), p(b), p(t(a, b)));
      }
    }
    return out;
  }

  /// The transposed (opposite) table, t'(a, b) = t(b, a).
  inline cayley_table opposite(cayley_table const& t) {
    std::size_t  n = t.order();
    cayley_table out(n);
    for (element a = 0; a < n; ++a) {
      for (element b = 0; b < n; ++b) {
        out.set(a, b, t(b, a));
      }
    }
    return out;
  }

  namespace detail {

    // Compares relabel(t, inv^-1) against best in row-major order, where
    // inv maps new labels to old ones. Returns <0, 0, >0.
    inline int compare_image(cayley_table const&                   t,
                             std::array<element, max_order> const& inv,
                             std::array<element, max_order> const& fwd,
                             cayley_table const&                   best) {
      std::size_t n = t.order();
      for (element r = 0; r < n; ++r) {
        for (element c = 0; c < n; ++c) {
          element v = fwd[t(inv[r], inv[c])];
          element w = best(r, c);
          if (v != w) {
            return v < w ? -1 : 1;
          }
        }
      }
      return 0;
    }

  }  // namespace detail

  /// The lexicographically least entry sequence over all n! relabelings.
  inline cayley_table canonical_form(cayley_table const& t) {
    std::size_t                    n = t.order();
    std::array<element, max_order> inv{};
    std::array<element, max_order> fwd{};
    std::iota(inv.begin(), inv.begin() + n, element{0});
    cayley_table best = t;
    do {
      for (std::size_t i = 0; i < n; ++i) {
        fwd[inv[i]] = static_cast<element>(i);
      }
      if (detail::compare_image(t, inv, fwd, best) < 0) {
        permutation p{n, fwd};
        best = relabel(t, p);
      }
    } while (std::next_permutation(inv.begin(), inv.begin() + n));
    return best;
  }

  /// True when t equals its canonical form.
  inline bool is_canonical(cayley_table const& t) {
    std::size_t                    n = t.order();
    std::array<element, max_order> inv{};
    std::array<element, max_order> fwd{};
    std::iota(inv.begin(), inv.begin() + n, element{0});
    do {
      for (std::size_t i = 0; i < n; ++i) {
        fwd[inv[i]] = static_cast<element>(i);
      }
      if (detail::compare_image(t, inv, fwd, t) < 0) {
        return false;
      }
    } while (std::next_permutation(inv.begin(), inv.begin() + n));
    return true;
  }

  /// Some p with p(a*b) = p(a)*p(b) for all a, b (product on the left in
  /// `from`, on the right in `to`), or nullopt. The first such p in
  /// lexicographic order of images is returned.
  inline std::optional<permutation> are_isomorphic(cayley_table const& from,
                                                   cayley_table const& to) {
    std::size_t n = from.order();
    if (n != to.order()) {
      return std::nullopt;
    }
    // Depth-first extension of a partial bijection, checking every product
    // whose operands and result are already mapped.
    permutation                 p{n, {}};
    std::array<bool, max_order> used{};
    std::array<bool, max_order> mapped{};

    auto consistent = [&] {
      for (element x = 0; x < n; ++x) {
        for (element y = 0; mapped[x] && y < n; ++y) {
          element v = from(x, y);
          if (mapped[y] && mapped[v] && to(p(x), p(y)) != p(v)) {
            return false;
          }
        }
      }
      return true;
    };

    auto extend = [&](auto& self, element a) -> bool {
      if (a == n) {
        return true;
      }
      for (element img = 0; img < n; ++img) {
        if (used[img]) {
          continue;
        }
        p.image[a] = img;
        used[img]  = true;
        mapped[a]  = true;
        if (consistent() && self(self, static_cast<element>(a + 1))) {
          return true;
        }
        used[img] = false;
        mapped[a] = false;
      }
      return false;
    };

    if (extend(extend, 0)) {
      return p;
    }
    return std::nullopt;
  }

}  // namespace aglab
