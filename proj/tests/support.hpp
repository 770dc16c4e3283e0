#pragma once

// Shared helpers for the test suites.

#include <cstdint>
#include <random>
#include <vector>

#include "aglab/aglab.hpp"

namespace aglab::testing {

  inline cayley_table random_table(std::mt19937& rng, std::size_t n) {
    std::uniform_int_distribution<int> pick(0, static_cast<int>(n) - 1);
    cayley_table t(n);
    for (element a = 0; a < n; ++a) {
      for (element b = 0; b < n; ++b) {
        t.set(a, b, static_cast<element>(pick(rng)));
      }
    }
    return t;
  }

  inline permutation random_permutation(std::mt19937& rng, std::size_t n) {
    auto p = permutation::identity(n);
    std::shuffle(p.image.begin(), p.image.begin() + static_cast<long>(n), rng);
    return p;
  }

  /// Canonical representatives of every AG-groupoid of order n, associative
  /// ones included, optionally restricted to a class.
  inline std::vector<cayley_table> universe(std::size_t  n,
                                            class_filter f = class_filter::ag) {
    std::vector<cayley_table> out;
    enumeration_task          task;
    task.order                = n;
    task.filter               = f;
    task.include_associative  = true;
    task.emit_representatives = true;
    enumerate(task, [&](cayley_table const& t) { out.push_back(t); });
    std::ranges::sort(out);
    return out;
  }

  inline element_subset subset_from_mask(std::size_t n, std::uint32_t mask) {
    return element_subset(n, mask);
  }

}  // namespace aglab::testing
