#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <set>

#include <unistd.h>

#include "support.hpp"

using namespace aglab;

namespace {

  constexpr std::array all_filters{class_filter::ag, class_filter::lc,
                                   class_filter::rc, class_filter::bc};

  std::uint64_t count(std::size_t n, class_filter f, std::size_t workers = 1,
                      bool include_associative = false) {
    enumeration_task task;
    task.order               = n;
    task.filter              = f;
    task.worker_count        = workers;
    task.include_associative = include_associative;
    return enumerate(task).class_count;
  }

  std::filesystem::path temp_file(std::string const& name) {
    auto p = std::filesystem::temp_directory_path()
             / ("aglab-test-" + std::to_string(::getpid()) + "-" + name);
    std::filesystem::remove(p);
    return p;
  }

}  // namespace

TEST_CASE("class filter names", "[enumerate]") {
  for (auto f : all_filters) {
    CHECK(class_filter_from_name(to_string(f)) == f);
  }
  CHECK_FALSE(class_filter_from_name("xx"));
}

TEST_CASE("published counts at orders 3 and 4", "[enumerate]") {
  std::array<std::uint64_t, 4> const three{8, 6, 2, 2};
  std::array<std::uint64_t, 4> const four{269, 194, 52, 47};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(count(3, all_filters[i]) == three[i]);
    CHECK(count(4, all_filters[i]) == four[i]);
  }
  CHECK(count(2, class_filter::ag) == 0);
  CHECK(count(1, class_filter::ag) == 0);
  CHECK(count(1, class_filter::ag, 1, true) == 1);
}

TEST_CASE("enumerate agrees with brute force up to order 3", "[enumerate][oracle]") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto f : all_filters) {
      for (bool assoc : {false, true}) {
        INFO("n=" << n << " class=" << to_string(f) << " assoc=" << assoc);
        std::vector<cayley_table> brute;
        auto b = brute_force_enumerate(n, f, assoc, &brute);
        CHECK(count(n, f, 1, assoc) == b.class_count);
        CHECK(brute.size() == b.class_count);

        std::vector<cayley_table> fast;
        enumeration_task task;
        task.order                = n;
        task.filter               = f;
        task.include_associative  = assoc;
        task.emit_representatives = true;
        enumerate(task, [&](cayley_table const& t) { fast.push_back(t); });
        std::ranges::sort(fast);
        std::ranges::sort(brute);
        CHECK(fast == brute);
      }
    }
  }
  CHECK(brute_force_enumerate(3, class_filter::ag).class_count == 8);
  CHECK(brute_force_enumerate(3, class_filter::bc).class_count == 2);
  CHECK(brute_force_enumerate(2, class_filter::ag).class_count == 0);
  CHECK_THROWS_AS(brute_force_enumerate(4, class_filter::ag), unsupported_order_error);
}

TEST_CASE("unsupported orders and worker counts", "[enumerate]") {
  enumeration_task task;
  task.order = 7;
  CHECK_THROWS_AS(enumerate(task), unsupported_order_error);
  task.order = 0;
  CHECK_THROWS_AS(enumerate(task), unsupported_order_error);
  task.order        = 3;
  task.worker_count = 0;
  CHECK_THROWS_AS(enumerate(task), std::invalid_argument);
}

TEST_CASE("counts are monotone across classes", "[enumerate]") {
  for (std::size_t n = 3; n <= 4; ++n) {
    auto ag = count(n, class_filter::ag);
    auto lc = count(n, class_filter::lc);
    auto rc = count(n, class_filter::rc);
    auto bc = count(n, class_filter::bc);
    CHECK(bc <= std::min(lc, rc));
    CHECK(std::max(lc, rc) <= ag);
  }
}

TEST_CASE("counts do not depend on the worker count", "[enumerate]") {
  for (auto f : all_filters) {
    CHECK(count(4, f, 1) == count(4, f, 4));
  }
  CHECK(count(5, class_filter::bc, 1) == count(5, class_filter::bc, 4));
}

TEST_CASE("representatives are canonical, in class and pairwise distinct",
          "[enumerate]") {
  for (std::size_t n = 3; n <= 4; ++n) {
    for (auto f : all_filters) {
      std::vector<cayley_table> reps;
      enumeration_task task;
      task.order                = n;
      task.filter               = f;
      task.emit_representatives = true;
      task.worker_count         = 2;
      auto r = enumerate(task, [&](cayley_table const& t) { reps.push_back(t); });
      CHECK(reps.size() == r.class_count);
      CHECK(r.class_count <= r.raw_completed);
      std::set<cayley_table> distinct;
      for (auto const& t : reps) {
        CHECK(canonical_form(t) == t);
        CHECK(in_class(t, f));
        CHECK_FALSE(satisfies(t, identity_id::associative));
        distinct.insert(canonical_form(t));
      }
      CHECK(distinct.size() == reps.size());
    }
  }
}

TEST_CASE("checkpointed runs resume to the same count", "[enumerate][checkpoint]") {
  auto path = temp_file("resume.ckpt");
  enumeration_task task;
  task.order        = 4;
  task.filter       = class_filter::lc;
  task.checkpoint   = path;
  task.emit_representatives = true;

  // Abort near the end, then resume. Most classes sit in the first
  // subtree, so an early abort would leave nothing completed.
  std::size_t seen = 0;
  try {
    enumerate(task, [&](cayley_table const&) {
      if (++seen == 190) {
        throw std::runtime_error("stop");
      }
    });
    FAIL("sink failure should abort the run");
  } catch (enumeration_aborted const& e) {
    CHECK(e.partial().class_count < 194);
  }
  std::ifstream in(path);
  std::string first;
  std::getline(in, first);
  CHECK(first == "# aglab enumerate checkpoint");
  in.close();

  task.emit_representatives = false;
  auto resumed = enumerate(task);
  CHECK(resumed.class_count == 194);
  CHECK(resumed.subtrees_resumed > 0);
  CHECK(resumed.subtrees_resumed < resumed.subtrees);

  // A finished checkpoint resumes instantly with nothing left to do.
  auto again = enumerate(task);
  CHECK(again.class_count == 194);
  CHECK(again.subtrees_resumed == again.subtrees);

  // A checkpoint for another task is rejected.
  task.filter = class_filter::rc;
  CHECK_THROWS(enumerate(task));
  std::filesystem::remove(path);
}

TEST_CASE("a throwing sink aborts with partial results", "[enumerate]") {
  enumeration_task task;
  task.order                = 4;
  task.emit_representatives = true;
  task.worker_count         = 3;
  try {
    enumerate(task, [](cayley_table const&) { throw std::runtime_error("full"); });
    FAIL("expected an abort");
  } catch (enumeration_aborted const& e) {
    CHECK_THAT(e.what(), Catch::Matchers::ContainsSubstring("full"));
    CHECK(e.partial().order == 4);
    CHECK(e.partial().class_count < 269);
  }
}

TEST_CASE("published counts at order 5", "[enumerate][.slow]") {
  std::array<std::uint64_t, 4> const five{31467, 22276, 1800, 1558};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(count(5, all_filters[i]) == five[i]);
  }
}
