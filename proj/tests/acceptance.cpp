// Acceptance run: prints one PASS/FAIL line per criterion.
//
//   aglab_acceptance [--criterion N]... [--slow] [--stretch]
//                    [--checkpoint-dir DIR] [--workers K]
//
// --slow extends the universe sweeps to order 5. --stretch runs the
// order-6 counts, which take hours; without it criterion 4 is skipped.

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <thread>

#include "support.hpp"

using namespace aglab;
using aglab::testing::universe;

namespace {

  using clock_type = std::chrono::steady_clock;

  struct outcome {
    enum class state { pass, fail, skip } status = state::pass;
    std::string detail;
  };

  struct settings {
    bool                  slow    = false;
    bool                  stretch = false;
    std::size_t           workers = 1;
    std::filesystem::path checkpoint_dir;
  };

  constexpr std::array all_filters{class_filter::ag, class_filter::lc,
                                   class_filter::rc, class_filter::bc};

  std::string join_counts(std::vector<std::uint64_t> const& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      out += (i == 0 ? "" : "/") + std::to_string(v[i]);
    }
    return out;
  }

  outcome count_criterion(std::size_t n, std::size_t workers, double limit,
                          std::optional<std::filesystem::path> const& ckpt_dir = {}) {
    std::vector<std::uint64_t> got;
    std::vector<std::uint64_t> want;
    double                     seconds = 0;
    for (auto f : all_filters) {
      enumeration_task task;
      task.order        = n;
      task.filter       = f;
      task.worker_count = workers;
      if (ckpt_dir) {
        task.checkpoint = *ckpt_dir / ("order" + std::to_string(n) + "-"
                                       + std::string(to_string(f)) + ".ckpt");
      }
      auto r = enumerate(task);
      got.push_back(r.class_count);
      want.push_back(*published_count(n, f));
      seconds += r.elapsed.count();
    }
    std::ostringstream os;
    os << "order " << n << " ag/lc/rc/bc = " << join_counts(got) << ", expected "
       << join_counts(want) << ", " << seconds << " s with " << workers
       << " worker(s), limit " << limit << " s";
    bool ok = got == want && seconds < limit;
    return {ok ? outcome::state::pass : outcome::state::fail, os.str()};
  }

  outcome criterion_1(settings const&) { return count_criterion(3, 1, 1.0); }

  outcome criterion_2(settings const&) { return count_criterion(4, 1, 10.0); }

  outcome criterion_3(settings const& s) {
    return count_criterion(5, std::max<std::size_t>(s.workers, 1), 600.0);
  }

  outcome criterion_4(settings const& s) {
    if (!s.stretch) {
      return {outcome::state::skip, "order 6 runs only with --stretch"};
    }
    std::filesystem::create_directories(s.checkpoint_dir);
    return count_criterion(6, s.workers, 1e9, s.checkpoint_dir);
  }

  outcome criterion_5(settings const&) {
    std::size_t compared = 0;
    for (std::size_t n = 2; n <= 3; ++n) {
      for (auto f : all_filters) {
        std::vector<cayley_table> brute;
        auto b = brute_force_enumerate(n, f, false, &brute);
        std::vector<cayley_table> fast;
        enumeration_task task;
        task.order                = n;
        task.filter               = f;
        task.emit_representatives = true;
        auto r = enumerate(task, [&](cayley_table const& t) { fast.push_back(t); });
        std::ranges::sort(brute);
        std::ranges::sort(fast);
        if (r.class_count != b.class_count || fast != brute) {
          return {outcome::state::fail,
                  "order " + std::to_string(n) + " class "
                      + std::string(to_string(f)) + ": enumerate "
                      + std::to_string(r.class_count) + ", brute force "
                      + std::to_string(b.class_count)};
        }
        ++compared;
      }
    }
    return {outcome::state::pass,
            std::to_string(compared) + " (order, class) pairs identical, "
                "representatives included"};
  }

  outcome criterion_6(settings const& s) {
    std::size_t const top = s.slow ? 5 : 4;
    std::ostringstream os;
    bool ok = true;
    for (std::size_t n = 3; n <= top; ++n) {
      auto sweep = sweep_theorems(n, s.workers);
      os << (n == 3 ? "" : "; ") << "order " << n << ": " << sweep.tables
         << " tables, " << sweep.refutation_count << " refutations";
      for (auto const& r : sweep.refutations) {
        os << " [(" << r.label << ") " << json::entries(r.table).dump() << "]";
      }
      ok = ok && sweep.refutation_count == 0;
    }
    return {ok ? outcome::state::pass : outcome::state::fail, os.str()};
  }

  outcome criterion_7(settings const&) {
    // The documented errata set; every other claim must be confirmed.
    std::set<std::pair<std::string, std::string>> const documented{
        {"F10", "bcAg"},
        {"F-exam-a1-a", "printedExtendedTable"},
        {"F-exam-a1-b", "printedExtendedTable"},
        {"F13", "selfDual@caption"},
    };
    std::size_t confirmed = 0;
    std::vector<std::string> problems;
    for (auto const& c : check_fixtures()) {
      bool expected_discrepant = documented.contains({c.fixture, c.key});
      bool discrepant          = c.status == claim_status::discrepant;
      if (discrepant && c.witness.empty()) {
        problems.push_back(c.fixture + "/" + c.key + " DISCREPANT without witness");
      } else if (discrepant != expected_discrepant) {
        problems.push_back(c.fixture + "/" + c.key + " "
                           + std::string(to_string(c.status))
                           + (c.witness.empty() ? "" : " (" + c.witness + ")"));
      } else if (!discrepant) {
        ++confirmed;
      }
    }
    if (!problems.empty()) {
      std::string d = "unexpected: ";
      for (std::size_t i = 0; i < problems.size(); ++i) {
        d += (i == 0 ? "" : "; ") + problems[i];
      }
      return {outcome::state::fail, d};
    }
    return {outcome::state::pass,
            std::to_string(confirmed) + " claims confirmed, "
                + std::to_string(documented.size())
                + " documented errata reported DISCREPANT with witnesses"};
  }

  std::string read_file(std::filesystem::path const& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  outcome criterion_8(settings const&) {
    std::size_t checked = 0;
    auto agree = [&](cayley_table const& t) {
      ++checked;
      return lc_extended_test(t).verdict == satisfies(t, identity_id::left_commutative)
             && rc_extended_test(t).verdict
                    == satisfies(t, identity_id::right_commutative);
    };
    for (auto const& f : fixtures()) {
      if (!agree(f.table)) {
        return {outcome::state::fail, "verdict mismatch on " + f.id};
      }
    }
    std::mt19937 rng(1000);
    for (int i = 0; i < 1000; ++i) {
      auto t = aglab::testing::random_table(rng, 2 + i % 4);
      if (!agree(t)) {
        return {outcome::state::fail, "verdict mismatch on\n" + format_table(t)};
      }
    }
    std::filesystem::path const golden(AGLAB_GOLDEN_DIR);
    auto g1 = render(lc_extended_test(fixture("G1").table));
    auto g2 = render(lc_extended_test(fixture("G2").table));
    if (g1 != read_file(golden / "g1_lc.txt")) {
      return {outcome::state::fail, "G1 grid differs from golden file"};
    }
    if (g2 != read_file(golden / "g2_lc.txt")) {
      return {outcome::state::fail, "G2 grid differs from golden file"};
    }
    return {outcome::state::pass,
            std::to_string(checked)
                + " tables agree with direct checks; G1 and G2 grids match"};
  }

  outcome criterion_9(settings const&) {
    auto const& F16 = fixture("F16").table;
    binary_relation listed(4);
    for (auto [a, b] : printed_rho_pairs) {
      listed.relate(static_cast<element>(a - 1), static_cast<element>(b - 1));
    }
    if (rho(F16).as_relation() != listed) {
      return {outcome::state::fail, "rho on F16 differs from the listed pairs"};
    }
    std::size_t tables = 0;
    for (std::size_t n = 1; n <= 4; ++n) {
      for (auto const& t : universe(n, class_filter::lc)) {
        if (idempotents(t).empty()) {
          continue;
        }
        ++tables;
        auto r = verify_congruence(t, rho(t));
        if (!r.is_congruence) {
          return {outcome::state::fail, "rho is not a congruence on\n" + format_table(t)};
        }
      }
    }
    for (auto id : {"F15", "F16"}) {
      if (!semilattice_check(fixture(id).table).is_semilattice()) {
        return {outcome::state::fail, std::string("semilattice check fails on ") + id};
      }
    }
    return {outcome::state::pass,
            "rho(F16) = listed 10 pairs; rho a congruence on "
                + std::to_string(tables)
                + " LC tables of order <= 4 with idempotents; F15, F16 semilattices"};
  }

  outcome criterion_10(settings const& s) {
    std::size_t const top = s.slow ? 5 : 4;
    std::size_t subsets = 0;
    std::size_t oracle_cases = 0;
    std::size_t unconditional_failures = 0;
    std::size_t lc_monoid_remark5 = 0;
    std::vector<std::string> problems;
    auto expect = [&](bool ok, std::string const& what, cayley_table const& t) {
      if (!ok && problems.size() < 5) {
        problems.push_back(what + " on " + json::entries(t).dump());
      }
    };
    for (std::size_t n = 3; n <= top; ++n) {
      for (auto const& t : universe(n)) {
        auto const S   = whole(t);
        bool const lc  = satisfies(t, identity_id::left_commutative);
        bool const rc  = satisfies(t, identity_id::right_commutative);
        bool const mon = !left_identities(t).empty();
        for (std::uint32_t m = 1; m < (1U << n); ++m) {
          element_subset A(n, m);
          auto AS = subset_product(t, A, S);
          auto SA = subset_product(t, S, A);
          ++subsets;
          expect(subset_product(t, AS, S).is_subset_of(SA), "remark 1", t);
          if (mon) {
            expect(subset_product(t, S, AS).is_subset_of(AS), "remark 2", t);
          }
          if (lc) {
            expect(subset_product(t, SA, S).is_subset_of(SA), "remark 3", t);
          }
          if (rc && mon) {
            expect(subset_product(t, S, SA).is_subset_of(AS), "remark 4", t);
            expect(subset_product(t, SA, S).is_subset_of(SA), "remark 5", t);
          }
          if (lc && mon) {
            ++lc_monoid_remark5;
            expect(subset_product(t, SA, S).is_subset_of(SA),
                   "remark 5 (LC reading)", t);
          }
        }
        for (element a = 0; a < n; ++a) {
          auto g = generated_sets(t, a);
          if (lc) {
            auto o = minimal_ideal_oracle(t, a, ideal_kind::right);
            if (g.R().contains(a)) {
              ++oracle_cases;
              expect(o == g.R(), "smallest right ideal = R(a)", t);
            }
            if (!o.is_subset_of(g.R() | element_subset::singleton(n, a))) {
              ++unconditional_failures;
            }
          }
          if (rc && mon) {
            ++oracle_cases;
            expect(minimal_ideal_oracle(t, a, ideal_kind::two_sided) == g.J,
                   "smallest ideal = J(a)", t);
          }
        }
      }
    }
    auto const& F4 = fixture("F4").table;
    element_subset A(4, {0, 1, 2});
    element_subset B(4, {0, 1, 3});
    expect(connected(F4, A, B, side::right) && connected(F4, A, B, side::left),
           "connected sets example", F4);

    std::cout << "  note: R(a) u {a} fails to contain the smallest right ideal "
                 "of an LC table in "
              << unconditional_failures << " cases (orders 3.." << top
              << "); agreement is only claimed when a lies in R(a)\n";
    if (!problems.empty()) {
      std::string d;
      for (std::size_t i = 0; i < problems.size(); ++i) {
        d += (i == 0 ? "" : "; ") + problems[i];
      }
      return {outcome::state::fail, d};
    }
    return {outcome::state::pass,
            std::to_string(subsets) + " subsets checked against remarks 1-5 (remark 5 "
                "also under LC with identity, "
                + std::to_string(lc_monoid_remark5) + " cases); "
                + std::to_string(oracle_cases)
                + " oracle agreements; F4 sets connected on both sides"};
  }

  using criterion = std::function<outcome(settings const&)>;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::vector<int> selected;
  settings         s;
  s.workers        = std::max(1U, std::thread::hardware_concurrency());
  s.checkpoint_dir = "aglab-order6-checkpoints";
  app.add_option("--criterion", selected, "Run only these criteria")
      ->check(CLI::Range(1, 10));
  app.add_flag("--slow", s.slow, "Extend universe sweeps to order 5");
  app.add_flag("--stretch", s.stretch, "Run the order-6 counts");
  app.add_option("--workers", s.workers, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--checkpoint-dir", s.checkpoint_dir, "Order-6 progress files");
  CLI11_PARSE(app, argc, argv);

  std::array<criterion, 10> const criteria{
      criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
      criterion_6, criterion_7, criterion_8, criterion_9, criterion_10};
  if (selected.empty()) {
    for (int i = 1; i <= 10; ++i) {
      selected.push_back(i);
    }
  }

  int failures = 0;
  for (int i : selected) {
    auto    start = clock_type::now();
    outcome o;
    try {
      o = criteria[static_cast<std::size_t>(i - 1)](s);
    } catch (std::exception const& e) {
      o = {outcome::state::fail, std::string("error: ") + e.what()};
    }
    std::chrono::duration<double> took = clock_type::now() - start;
    char const* label = o.status == outcome::state::pass   ? "PASS"
                        : o.status == outcome::state::skip ? "SKIP"
                                                           : "FAIL";
    std::cout << "criterion " << i << ": " << label << " - " << o.detail << " ("
              << took.count() << " s)\n"
              << std::flush;
    failures += o.status == outcome::state::fail;
  }
  return failures == 0 ? 0 : 1;
}
