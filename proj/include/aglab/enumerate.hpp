#pragma once

// Exhaustive enumeration of AG-groupoids (optionally left, right or
// bi-commutative) of a fixed order, up to isomorphism.
//
// Cells are assigned depth first in row-major order. Each assignment is
// checked against every instance of the defining identities that it
// completes, and the partial table is discarded as soon as some
// relabeling is known to produce a lexicographically smaller table. A
// completed table that survives is therefore the lex-least member of its
// isomorphism class, so every class is counted exactly once.

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "aglab/identities.hpp"
#include "aglab/isomorphism.hpp"
#include "aglab/table.hpp"

namespace aglab {

  enum class class_filter { ag, lc, rc, bc };

  inline std::string_view to_string(class_filter f) {
    switch (f) {
      case class_filter::ag:
        return "ag";
      case class_filter::lc:
        return "lc";
      case class_filter::rc:
        return "rc";
      case class_filter::bc:
        return "bc";
    }
    return "?";
  }

  inline std::optional<class_filter> class_filter_from_name(std::string_view s) {
    for (auto f : {class_filter::ag, class_filter::lc, class_filter::rc,
                   class_filter::bc}) {
      if (to_string(f) == s) {
        return f;
      }
    }
    return std::nullopt;
  }

  inline bool requires_left_commutative(class_filter f) {
    return f == class_filter::lc || f == class_filter::bc;
  }

  inline bool requires_right_commutative(class_filter f) {
    return f == class_filter::rc || f == class_filter::bc;
  }

  /// Left invertive law plus the filter's identities.
  inline bool in_class(cayley_table const& t, class_filter f) {
    return satisfies(t, identity_id::left_invertive)
           && (!requires_left_commutative(f)
               || satisfies(t, identity_id::left_commutative))
           && (!requires_right_commutative(f)
               || satisfies(t, identity_id::right_commutative));
  }

  inline constexpr std::size_t max_enumeration_order = 6;

  class unsupported_order_error : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  struct enumeration_task {
    std::size_t  order               = 3;
    class_filter filter              = class_filter::ag;
    bool         include_associative = false;
    bool         emit_representatives = false;
    std::size_t  worker_count        = 1;
    // Progress file; completed subtrees listed there are skipped on resume.
    std::optional<std::filesystem::path> checkpoint;
  };

  struct enumeration_result {
    std::size_t               order       = 0;
    class_filter              filter      = class_filter::ag;
    std::uint64_t             class_count = 0;
    std::uint64_t             raw_completed = 0;
    std::chrono::duration<double> elapsed{0};
    std::size_t               subtrees         = 0;
    std::size_t               subtrees_resumed = 0;
  };

  /// Called once per isomorphism class with its canonical table. Calls
  /// are serialized but arrive in no particular order.
  using representative_sink = std::function<void(cayley_table const&)>;

  /// Thrown when the sink throws; carries the counts gathered so far.
  class enumeration_aborted : public std::runtime_error {
   public:
    enumeration_aborted(std::string const& what, enumeration_result partial)
        : std::runtime_error(what), partial_(partial) {}

    [[nodiscard]] enumeration_result const& partial() const noexcept {
      return partial_;
    }

   private:
    enumeration_result partial_;
  };

  namespace detail {

    inline constexpr element unset = 0xFF;

    // A non-identity relabeling, stored as: for each row-major position p
    // of the image, the cell of the source it is read from; and the
    // forward map applied to the value found there.
    struct relabeling {
      std::array<std::uint8_t, max_order * max_order> source{};
      std::array<element, max_order>                  forward{};
    };

    class search {
     public:
      search(std::size_t n, class_filter f, bool include_associative)
          : n_(n),
            cells_(n * n),
            lc_(requires_left_commutative(f)),
            rc_(requires_right_commutative(f)),
            include_associative_(include_associative) {
        table_.fill(unset);
        std::array<element, max_order> inv{};
        std::iota(inv.begin(), inv.begin() + n, element{0});
        while (std::next_permutation(inv.begin(), inv.begin() + n)) {
          relabeling r;
          for (std::size_t i = 0; i < n; ++i) {
            r.forward[inv[i]] = static_cast<element>(i);
          }
          for (std::size_t p = 0; p < cells_; ++p) {
            r.source[p]
                = static_cast<std::uint8_t>(inv[p / n] * n + inv[p % n]);
          }
          relabelings_.push_back(r);
        }
      }

      [[nodiscard]] std::size_t cells() const noexcept { return cells_; }

      void load_prefix(std::span<element const> prefix) {
        table_.fill(unset);
        std::copy(prefix.begin(), prefix.end(), table_.begin());
      }

      // Appends every viable prefix of the given length below the current
      // prefix of length `filled`.
      void collect_prefixes(std::size_t filled, std::size_t depth,
                            std::vector<std::vector<element>>& out) {
        if (filled == depth) {
          out.emplace_back(table_.begin(), table_.begin() + depth);
          return;
        }
        for (element v = 0; v < n_; ++v) {
          table_[filled] = v;
          if (viable(filled)) {
            collect_prefixes(filled + 1, depth, out);
          }
        }
        table_[filled] = unset;
      }

      // Depth-first completion of the loaded prefix of length `filled`.
      template <typename OnLeaf>
      void run(std::size_t filled, OnLeaf&& on_leaf) {
        if (filled == cells_) {
          return;
        }
        for (element v = 0; v < n_; ++v) {
          table_[filled] = v;
          if (!identities_ok(filled)) {
            continue;
          }
          if (filled + 1 == cells_) {
            ++raw_completed_;
            if (lex_least(filled + 1)
                && (include_associative_ || !associative())) {
              on_leaf(current());
            }
          } else if (lex_least(filled + 1)) {
            run(filled + 1, on_leaf);
          }
        }
        table_[filled] = unset;
      }

      [[nodiscard]] std::uint64_t raw_completed() const noexcept {
        return raw_completed_;
      }

      void reset_counters() noexcept { raw_completed_ = 0; }

     private:
      [[nodiscard]] element at(std::size_t x, std::size_t y) const noexcept {
        return table_[x * n_ + y];
      }

      [[nodiscard]] cayley_table current() const {
        return cayley_table(n_, std::span<element const>(table_.data(),
                                                          cells_));
      }

      bool viable(std::size_t k) {
        return identities_ok(k) && lex_least(k + 1)
               && (k + 1 < cells_ || include_associative_ || !associative());
      }

      // Checks every identity instance in which the newly assigned cell k
      // is read and whose other cells are all assigned. Each identity used
      // here is invariant under swapping two of its variables, so it is
      // enough to consider the cell in two of its four read positions.
      [[nodiscard]] bool identities_ok(std::size_t k) const noexcept {
        std::size_t const a = k / n_;
        std::size_t const b = k % n_;
        element const     v = table_[k];
        // (xy)z = (zy)x with (x, y) = (a, b).
        for (std::size_t z = 0; z < n_; ++z) {
          element lhs = at(v, z);
          element zb  = at(z, b);
          if (lhs == unset || zb == unset) {
            continue;
          }
          element rhs = at(zb, a);
          if (rhs != unset && lhs != rhs) {
            return false;
          }
        }
        // (xy)z = (zy)x with xy = a, z = b.
        for (std::size_t c = 0; c <= k; ++c) {
          if (table_[c] != a) {
            continue;
          }
          std::size_t x  = c / n_;
          std::size_t y  = c % n_;
          element     by = at(b, y);
          if (by == unset) {
            continue;
          }
          element rhs = at(by, x);
          if (rhs != unset && rhs != v) {
            return false;
          }
        }
        if (lc_) {
          // (xy)z = (yx)z with (x, y) = (a, b).
          element ba = at(b, a);
          if (ba != unset) {
            for (std::size_t z = 0; z < n_; ++z) {
              element lhs = at(v, z);
              element rhs = at(ba, z);
              if (lhs != unset && rhs != unset && lhs != rhs) {
                return false;
              }
            }
          }
          // (xy)z = (yx)z with xy = a, z = b.
          for (std::size_t c = 0; c <= k; ++c) {
            if (table_[c] != a) {
              continue;
            }
            element yx = at(c % n_, c / n_);
            if (yx == unset) {
              continue;
            }
            element rhs = at(yx, b);
            if (rhs != unset && rhs != v) {
              return false;
            }
          }
        }
        if (rc_) {
          // x(yz) = x(zy) with (y, z) = (a, b).
          element ba = at(b, a);
          if (ba != unset) {
            for (std::size_t x = 0; x < n_; ++x) {
              element lhs = at(x, v);
              element rhs = at(x, ba);
              if (lhs != unset && rhs != unset && lhs != rhs) {
                return false;
              }
            }
          }
          // x(yz) = x(zy) with x = a, yz = b.
          for (std::size_t c = 0; c <= k; ++c) {
            if (table_[c] != b) {
              continue;
            }
            element zy = at(c % n_, c / n_);
            if (zy == unset) {
              continue;
            }
            element rhs = at(a, zy);
            if (rhs != unset && rhs != v) {
              return false;
            }
          }
        }
        return true;
      }

      // False if some relabeling of the first `filled` cells is already
      // known to be lexicographically smaller than the table itself.
      [[nodiscard]] bool lex_least(std::size_t filled) const noexcept {
        for (auto const& r : relabelings_) {
          for (std::size_t p = 0; p < filled; ++p) {
            std::size_t s = r.source[p];
            if (s >= filled) {
              break;
            }
            element image = r.forward[table_[s]];
            if (image != table_[p]) {
              if (image < table_[p]) {
                return false;
              }
              break;
            }
          }
        }
        return true;
      }

      [[nodiscard]] bool associative() const noexcept {
        for (std::size_t x = 0; x < n_; ++x) {
          for (std::size_t y = 0; y < n_; ++y) {
            element xy = at(x, y);
            for (std::size_t z = 0; z < n_; ++z) {
              if (at(xy, z) != at(x, at(y, z))) {
                return false;
              }
            }
          }
        }
        return true;
      }

      std::size_t                                n_;
      std::size_t                                cells_;
      bool                                       lc_;
      bool                                       rc_;
      bool                                       include_associative_;
      std::array<element, max_order * max_order> table_{};
      std::vector<relabeling>                    relabelings_;
      std::uint64_t                              raw_completed_ = 0;
    };

    struct checkpoint_state {
      std::size_t split_depth = 0;
      std::size_t subtrees    = 0;
      // subtree index -> (classes, raw completed tables)
      std::map<std::size_t, std::pair<std::uint64_t, std::uint64_t>> done;
    };

    inline std::string checkpoint_header(enumeration_task const& task) {
      std::ostringstream os;
      os << "order=" << task.order << " class=" << to_string(task.filter)
         << " include_associative=" << (task.include_associative ? 1 : 0);
      return os.str();
    }

    inline std::optional<checkpoint_state>
    read_checkpoint(std::filesystem::path const& path,
                    enumeration_task const&      task) {
      std::ifstream in(path);
      if (!in) {
        return std::nullopt;
      }
      std::string line;
      std::getline(in, line);
      if (line != "# aglab enumerate checkpoint") {
        throw std::runtime_error("checkpoint " + path.string()
                                 + ": unrecognized header");
      }
      std::getline(in, line);
      if (line != checkpoint_header(task)) {
        throw std::runtime_error("checkpoint " + path.string()
                                 + " belongs to a different task: " + line);
      }
      checkpoint_state st;
      std::getline(in, line);
      if (std::sscanf(line.c_str(), "split_depth=%zu subtrees=%zu",
                      &st.split_depth, &st.subtrees)
          != 2) {
        throw std::runtime_error("checkpoint " + path.string()
                                 + ": malformed split line");
      }
      while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string        tag;
        std::size_t        index = 0;
        std::uint64_t      count = 0;
        std::uint64_t      raw   = 0;
        // A torn final line from an interrupted run is ignored.
        if (ls >> tag >> index >> count >> raw && tag == "done") {
          st.done[index] = {count, raw};
        }
      }
      return st;
    }

  }  // namespace detail

  /// Counts isomorphism classes; see the file comment for the method.
  inline enumeration_result enumerate(enumeration_task const&    task,
                                      representative_sink const& sink = {}) {
    using clock = std::chrono::steady_clock;
    auto const start = clock::now();
    if (task.order < 1 || task.order > max_enumeration_order) {
      throw unsupported_order_error(
          "enumerate: order " + std::to_string(task.order)
          + " unsupported (supported: 1 to 6)");
    }
    if (task.worker_count == 0) {
      throw std::invalid_argument("enumerate: worker count must be positive");
    }

    enumeration_result result;
    result.order  = task.order;
    result.filter = task.filter;

    detail::search root(task.order, task.filter, task.include_associative);

    std::optional<detail::checkpoint_state> resumed;
    if (task.checkpoint) {
      resumed = detail::read_checkpoint(*task.checkpoint, task);
    }

    // Split the tree into independent subtrees at a fixed depth.
    // TODO: refine the first few prefixes deeper; the all-zero prefix
    // carries most of the work at order 5 and limits parallel speedup.
    std::size_t const wanted
        = task.checkpoint ? std::max<std::size_t>(8 * task.worker_count, 1024)
                          : 8 * task.worker_count;
    std::vector<std::vector<element>> prefixes;
    std::size_t                       depth = 0;
    if (resumed) {
      depth = resumed->split_depth;
      root.collect_prefixes(0, depth, prefixes);
      if (prefixes.size() != resumed->subtrees) {
        throw std::runtime_error("checkpoint subtree count mismatch");
      }
    } else {
      for (depth = 1; depth < root.cells(); ++depth) {
        prefixes.clear();
        root.collect_prefixes(0, depth, prefixes);
        if (prefixes.size() >= wanted) {
          break;
        }
      }
      if (depth >= root.cells()) {
        depth = 0;
        prefixes.assign(1, {});
      }
    }
    result.subtrees = prefixes.size();

    std::ofstream progress;
    if (task.checkpoint) {
      bool fresh = !resumed;
      progress.open(*task.checkpoint, fresh ? std::ios::trunc : std::ios::app);
      if (!progress) {
        throw std::runtime_error("cannot write checkpoint "
                                 + task.checkpoint->string());
      }
      if (fresh) {
        progress << "# aglab enumerate checkpoint\n"
                 << detail::checkpoint_header(task) << '\n'
                 << "split_depth=" << depth << " subtrees=" << prefixes.size()
                 << '\n'
                 << std::flush;
      }
    }

    std::atomic<std::size_t>   next{0};
    std::atomic<std::uint64_t> classes{0};
    std::atomic<std::uint64_t> raw{0};
    std::atomic<bool>          stop{false};
    std::mutex                 mutex;  // guards sink, progress, failure
    std::exception_ptr         failure;

    if (resumed) {
      for (auto const& [index, counts] : resumed->done) {
        classes += counts.first;
        raw += counts.second;
      }
      result.subtrees_resumed = resumed->done.size();
    }

    auto worker = [&] {
      detail::search local(task.order, task.filter, task.include_associative);
      while (!stop.load(std::memory_order_relaxed)) {
        std::size_t i = next.fetch_add(1);
        if (i >= prefixes.size()) {
          return;
        }
        if (resumed && resumed->done.contains(i)) {
          continue;
        }
        local.load_prefix(prefixes[i]);
        local.reset_counters();
        std::uint64_t found = 0;
        try {
          local.run(prefixes[i].size(), [&](cayley_table const& t) {
            ++found;
            if (task.emit_representatives && sink) {
              std::lock_guard lock(mutex);
              sink(t);
            }
          });
        } catch (...) {
          std::lock_guard lock(mutex);
          if (!failure) {
            failure = std::current_exception();
          }
          stop = true;
          return;
        }
        classes += found;
        raw += local.raw_completed();
        if (progress.is_open()) {
          std::lock_guard lock(mutex);
          progress << "done " << i << ' ' << found << ' '
                   << local.raw_completed() << '\n'
                   << std::flush;
        }
      }
    };

    if (task.worker_count == 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (std::size_t w = 0; w < task.worker_count; ++w) {
        pool.emplace_back(worker);
      }
    }

    result.class_count   = classes;
    result.raw_completed = raw;
    result.elapsed       = clock::now() - start;
    if (failure) {
      try {
        std::rethrow_exception(failure);
      } catch (std::exception const& e) {
        throw enumeration_aborted(
            std::string("enumeration aborted by sink: ") + e.what(), result);
      } catch (...) {
        throw enumeration_aborted("enumeration aborted by sink", result);
      }
    }
    return result;
  }

  /// Independent oracle: tries all n^(n*n) tables and buckets survivors by
  /// canonical form. Only feasible for order <= 3.
  inline enumeration_result
  brute_force_enumerate(std::size_t order, class_filter filter,
                        bool                       include_associative = false,
                        std::vector<cayley_table>* representatives = nullptr) {
    using clock      = std::chrono::steady_clock;
    auto const start = clock::now();
    if (order < 1 || order > 3) {
      throw unsupported_order_error("brute_force_enumerate: order "
                                    + std::to_string(order)
                                    + " too large (maximum 3)");
    }
    std::size_t const      cells = order * order;
    std::vector<element>   entries(cells, 0);
    std::set<cayley_table> buckets;
    enumeration_result     result;
    result.order  = order;
    result.filter = filter;
    for (;;) {
      cayley_table t(order, entries);
      if (in_class(t, filter)
          && (include_associative || !satisfies(t, identity_id::associative))) {
        ++result.raw_completed;
        buckets.insert(canonical_form(t));
      }
      std::size_t i = cells;
      while (i > 0 && ++entries[i - 1] == order) {
        entries[--i] = 0;
      }
      if (i == 0) {
        break;
      }
    }
    result.class_count = buckets.size();
    if (representatives != nullptr) {
      representatives->assign(buckets.begin(), buckets.end());
    }
    result.elapsed = clock::now() - start;
    return result;
  }

}  // namespace aglab
