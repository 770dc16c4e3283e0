#pragma once

// Conformance run over the published material: every fixture claim, the
// implication suite over whole enumerated universes, and the class counts.

#include <algorithm>
#include <array>
#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aglab/enumerate.hpp"
#include "aglab/fixtures.hpp"
#include "aglab/theorems.hpp"

namespace aglab {

  struct known_erratum {
    std::string_view fixture;
    std::string_view claim;
    std::string_view summary;
  };

  /// Bump the version whenever the list changes.
  inline constexpr std::string_view known_errata_version = "1";

  inline constexpr std::array<known_erratum, 4> known_errata{{
      {"F10", "bcAg", "the order-3 Latin square is not left commutative"},
      {"F-exam-a1-a", "printedExtendedTable",
       "printed extended table disagrees with the printed source table"},
      {"F-exam-a1-b", "printedExtendedTable",
       "printed extended table disagrees with its own source block"},
      {"F13", "selfDual@caption",
       "caption and surrounding sentence disagree on self-duality"},
  }};

  inline bool is_known_erratum(std::string_view fixture, std::string_view key) {
    return std::ranges::any_of(known_errata, [&](auto const& e) {
      return e.fixture == fixture && e.claim == key;
    });
  }

  /// Published class counts of non-associative AG-groupoids, orders 3 to 6.
  inline std::optional<std::uint64_t> published_count(std::size_t  order,
                                                      class_filter f) {
    static constexpr std::array<std::array<std::uint64_t, 4>, 4> counts{{
        {8, 6, 2, 2},
        {269, 194, 52, 47},
        {31467, 22276, 1800, 1558},
        {40097003, 34845724, 170977, 150977},
    }};
    if (order < 3 || order > 6) {
      return std::nullopt;
    }
    return counts[order - 3][static_cast<std::size_t>(f)];
  }

  enum class claim_status { confirmed, discrepant };

  inline std::string_view to_string(claim_status s) {
    return s == claim_status::confirmed ? "CONFIRMED" : "DISCREPANT";
  }

  struct claim_check {
    std::string  fixture;
    std::string  key;
    std::string  description;
    std::string  citation;
    bool         claimed = true;
    bool         actual  = true;
    std::string  witness;
    claim_status status  = claim_status::confirmed;
    bool         known   = false;  // listed in known_errata
  };

  inline std::vector<claim_check> check_fixtures() {
    std::vector<claim_check> out;
    for (auto const& f : fixtures()) {
      for (auto const& c : f.claims) {
        auto e = c.evaluate(f.table);
        claim_check r{f.id,      c.key,    c.description, c.citation,
                      c.claimed, e.actual, e.witness,     {},
                      is_known_erratum(f.id, c.key)};
        r.status = e.actual == c.claimed ? claim_status::confirmed
                                         : claim_status::discrepant;
        out.push_back(std::move(r));
      }
    }
    return out;
  }

  struct theorem_refutation {
    char         label;
    cayley_table table;
  };

  struct theorem_sweep {
    std::size_t                     order  = 0;
    std::uint64_t                   tables = 0;
    std::uint64_t                   refutation_count = 0;
    std::vector<theorem_refutation> refutations;  // at most ten, sorted
  };

  /// The implication suite on every AG-groupoid of the given order up to
  /// isomorphism, associative ones included.
  inline theorem_sweep sweep_theorems(std::size_t order,
                                      std::size_t workers = 1) {
    theorem_sweep sweep;
    sweep.order = order;
    std::mutex mu;
    enumeration_task task;
    task.order                = order;
    task.filter               = class_filter::ag;
    task.include_associative  = true;
    task.emit_representatives = true;
    task.worker_count         = workers;
    enumerate(task, [&](cayley_table const& t) {
      auto outcomes = theorem_suite(t);
      std::scoped_lock lock(mu);
      ++sweep.tables;
      for (auto const& o : outcomes) {
        if (o.refuted()) {
          ++sweep.refutation_count;
          sweep.refutations.push_back({o.label, t});
        }
      }
    });
    std::ranges::sort(sweep.refutations, [](auto const& x, auto const& y) {
      return std::tie(x.label, x.table) < std::tie(y.label, y.table);
    });
    if (sweep.refutations.size() > 10) {
      sweep.refutations.resize(10);
    }
    return sweep;
  }

  struct count_check {
    std::size_t   order  = 0;
    class_filter  filter = class_filter::ag;
    std::uint64_t expected = 0;
    std::uint64_t actual   = 0;
    double        seconds  = 0;

    [[nodiscard]] bool matches() const noexcept { return expected == actual; }
  };

  struct verify_options {
    std::size_t theorem_max_order = 4;
    std::size_t count_max_order   = 5;
    std::size_t workers           = 1;
  };

  struct paper_report {
    std::string                errata_version{known_errata_version};
    std::vector<claim_check>   claims;
    std::vector<theorem_sweep> sweeps;
    std::vector<count_check>   counts;

    /// Discrepancies missing from the known-errata list.
    [[nodiscard]] std::vector<claim_check> new_discrepancies() const {
      std::vector<claim_check> out;
      for (auto const& c : claims) {
        if (c.status == claim_status::discrepant && !c.known) {
          out.push_back(c);
        }
      }
      return out;
    }

    /// Listed errata that no longer reproduce.
    [[nodiscard]] std::vector<claim_check> stale_errata() const {
      std::vector<claim_check> out;
      for (auto const& c : claims) {
        if (c.status == claim_status::confirmed && c.known) {
          out.push_back(c);
        }
      }
      return out;
    }

    [[nodiscard]] bool passed() const {
      bool ok = new_discrepancies().empty() && stale_errata().empty();
      for (auto const& s : sweeps) {
        ok = ok && s.refutation_count == 0;
      }
      for (auto const& c : counts) {
        ok = ok && c.matches();
      }
      return ok;
    }

    [[nodiscard]] int exit_code() const { return passed() ? 0 : 1; }
  };

  inline paper_report verify_paper(verify_options const& opt = {}) {
    paper_report r;
    r.claims = check_fixtures();
    for (std::size_t n = 3; n <= opt.theorem_max_order; ++n) {
      r.sweeps.push_back(sweep_theorems(n, opt.workers));
    }
    for (std::size_t n = 3; n <= opt.count_max_order; ++n) {
      for (auto f : {class_filter::ag, class_filter::lc, class_filter::rc,
                     class_filter::bc}) {
        enumeration_task task;
        task.order        = n;
        task.filter       = f;
        task.worker_count = opt.workers;
        auto res          = enumerate(task, {});
        r.counts.push_back({n, f, published_count(n, f).value_or(0),
                            res.class_count, res.elapsed.count()});
      }
    }
    return r;
  }

}  // namespace aglab
