#include <catch_amalgamated.hpp>

#include <set>

#include "support.hpp"

using namespace aglab;

namespace {

  claim_check const& find(std::vector<claim_check> const& v, std::string_view fixture,
                          std::string_view key) {
    for (auto const& c : v) {
      if (c.fixture == fixture && c.key == key) {
        return c;
      }
    }
    FAIL("missing claim " << fixture << "/" << key);
    return v.front();
  }

}  // namespace

TEST_CASE("fixture corpus", "[verify]") {
  std::set<std::string> ids;
  for (auto const& f : fixtures()) {
    ids.insert(f.id);
    CHECK_FALSE(f.claims.empty());
    // every table survives a text round trip
    CHECK(parse_table(format_table(f.table)) == f.table);
  }
  CHECK(ids.size() == fixtures().size());
  for (int i = 1; i <= 16; ++i) {
    CHECK(ids.contains("F" + std::to_string(i)));
  }
  for (auto id : {"G1", "G2", "F-exam-a1-a", "F-exam-a1-b"}) {
    CHECK(ids.contains(id));
  }
  CHECK(fixture("F3").table == fixture("G1").table);
  CHECK(fixture("F10").table == fixture("G2").table);
  CHECK(fixture("F12").table == fixture("F5").table);
  CHECK_THROWS_AS(fixture("F99"), std::out_of_range);
}

TEST_CASE("claim outcomes and witnesses", "[verify]") {
  auto v = check_fixtures();

  CHECK(find(v, "G1", "lcAg").status == claim_status::confirmed);

  auto const& f10 = find(v, "F10", "bcAg");
  CHECK(f10.status == claim_status::discrepant);
  CHECK(f10.known);
  CHECK(f10.witness == "leftCommutative fails at (1,2,1)");

  CHECK(find(v, "F13", "selfDual@caption").status == claim_status::discrepant);
  CHECK(find(v, "F13", "selfDual@prose").status == claim_status::confirmed);
  CHECK(find(v, "F13", "t1Ag").status == claim_status::confirmed);

  CHECK(find(v, "F-exam-a1-a", "rcAg").status == claim_status::confirmed);
  CHECK(find(v, "F-exam-a1-b", "rcAg").status == claim_status::confirmed);
  CHECK(find(v, "F-exam-a1-a", "printedExtendedTable").witness
        == "line 4, field 4: rendered 2, printed 1");
  CHECK(find(v, "F-exam-a1-b", "printedExtendedTable").witness
        == "line 1, field 13: rendered 1, printed 2");

  CHECK(find(v, "F8", "paramedial").witness == "paramedial fails at (1,1,1,2)");
  CHECK(find(v, "F9", "nuclearSquare").witness == "rightNuclearSquare fails at (3,3,3)");
  CHECK(find(v, "F6", "lcAg").witness == "leftCommutative fails at (1,2,1)");
  CHECK(find(v, "F16", "rhoPairs").status == claim_status::confirmed);
  CHECK(find(v, "F4", "rightConnected").status == claim_status::confirmed);
}

TEST_CASE("F11 is not an AG-groupoid", "[verify]") {
  // Listed as a left alternative AG-groupoid; neither the table nor its
  // transpose satisfies the left invertive law.
  auto const& t = fixture("F11").table;
  auto r = check_identity(t, identity_id::left_invertive);
  CHECK_FALSE(r.holds);
  CHECK(r.counterexample == witness{2, 1, 3});
  CHECK_FALSE(satisfies(t, identity_id::left_alternative));
  CHECK_FALSE(satisfies(opposite(t), identity_id::left_invertive));
}

TEST_CASE("known errata list", "[verify]") {
  CHECK(known_errata_version == "1");
  CHECK(is_known_erratum("F10", "bcAg"));
  CHECK_FALSE(is_known_erratum("F10", "nuclearSquare"));
  for (auto const& e : known_errata) {
    bool present = false;
    for (auto const& f : fixtures()) {
      for (auto const& c : f.claims) {
        present = present || (f.id == e.fixture && c.key == e.claim);
      }
    }
    CHECK(present);
  }
}

TEST_CASE("published counts table", "[verify]") {
  CHECK(published_count(3, class_filter::ag) == 8u);
  CHECK(published_count(6, class_filter::bc) == 150977u);
  CHECK_FALSE(published_count(2, class_filter::ag));
  CHECK_FALSE(published_count(7, class_filter::ag));
}

TEST_CASE("paper report bookkeeping", "[verify]") {
  paper_report r;
  r.claims = check_fixtures();
  auto fresh = r.new_discrepancies();
  REQUIRE(fresh.size() == 1);
  CHECK(fresh.front().fixture == "F11");
  CHECK(r.stale_errata().empty());
  CHECK_FALSE(r.passed());
  CHECK(r.exit_code() == 1);

  paper_report clean;
  clean.counts.push_back({3, class_filter::ag, 8, 8, 0.0});
  CHECK(clean.passed());
  clean.counts.push_back({3, class_filter::lc, 6, 5, 0.0});
  CHECK_FALSE(clean.passed());
}

TEST_CASE("verify_paper is deterministic", "[verify]") {
  verify_options opt{3, 3, 1};
  auto a = verify_paper(opt);
  auto b = verify_paper(opt);
  auto strip = [](paper_report r) {
    auto j = aglab::json::paper(r);
    for (auto& c : j["counts"]) {
      c.erase("seconds");
    }
    return j.dump();
  };
  CHECK(strip(a) == strip(b));
  CHECK(a.sweeps.size() == 1);
  CHECK(a.sweeps[0].refutation_count == 0);
  CHECK(a.counts.size() == 4);
}
