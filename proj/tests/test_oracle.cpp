#include <set>
#include <sstream>

#include "doctest.h"

#include "arfkit/oracle.hpp"
#include "arfkit/serialize.hpp"
#include "support/convert.hpp"

using namespace arfkit;

namespace {
  NumericalSemigroup sg(std::initializer_list<value_type> gens) {
    return NumericalSemigroup::from_generators(gens);
  }
}  // namespace

TEST_CASE("arf_pattern_violation") {
  auto w = arf_pattern_violation(sg({3, 7, 11}));
  REQUIRE(w.has_value());
  CHECK(*w == std::array<value_type, 3>{7, 7, 6});
  CHECK(arf_by_pattern(sg({4, 7, 9, 10})));
  CHECK(arf_by_pattern(NumericalSemigroup()));
  CHECK_FALSE(arf_by_pattern(sg({4, 5, 6})));
}

TEST_CASE("arf_by_pattern agrees with a direct triple scan") {
  for_each_by_genus(9, [](NumericalSemigroup const& h) {
    CAPTURE(to_string(h));
    CHECK(arf_by_pattern(h) == brute::arf_pattern(brute::to_set(h)));
  });
}

TEST_CASE("tree_children") {
  auto kids = tree_children(NumericalSemigroup());
  REQUIRE(kids.size() == 1);
  CHECK(kids.front() == sg({2, 3}));

  kids = tree_children(sg({2, 3}));
  CHECK(kids == std::vector<NumericalSemigroup>{sg({3, 4, 5}), sg({2, 5})});

  // 3 and 7 are below the Frobenius number 8; only 11 can be removed
  kids = tree_children(sg({3, 7, 11}));
  REQUIRE(kids.size() == 1);
  CHECK(kids.front() == sg({3, 7}));
}

TEST_CASE("enumerate_by_genus: small cases") {
  CHECK(enumerate_by_genus(0) == std::vector<NumericalSemigroup>{
                                     NumericalSemigroup()});
  auto got = enumerate_by_genus(2);
  std::set<NumericalSemigroup> as_set(got.begin(), got.end());
  CHECK(got.size() == 4);
  CHECK(as_set
        == std::set<NumericalSemigroup>{NumericalSemigroup(), sg({2, 3}),
                                        sg({2, 5}), sg({3, 4, 5})});
  CHECK_FALSE(as_set.count(sg({3, 4})));
}

TEST_CASE("enumerate_by_genus matches gap-set filtering") {
  auto const all = enumerate_by_genus(10);
  std::set<NumericalSemigroup> distinct(all.begin(), all.end());
  CHECK(distinct.size() == all.size());

  for (int g = 0; g <= 10; ++g) {
    CAPTURE(g);
    std::set<std::vector<value_type>> expected;
    for (auto const& gaps : brute::gap_sets_of_genus(g)) {
      expected.insert(gaps);
    }
    std::set<std::vector<value_type>> got;
    for (auto const& h : all) {
      if (h.genus() == g) {
        got.insert(h.gaps());
      }
    }
    CHECK(got == expected);
  }
}

TEST_CASE("enumeration visits genus levels in order") {
  value_type last = 0;
  for_each_by_genus(8, [&](NumericalSemigroup const& h) {
    CHECK(h.genus() >= last);
    last = h.genus();
  });
  CHECK(last == 8);
}

TEST_CASE("survey") {
  std::vector<SurveyRecord> records;
  auto summary = survey({.max_genus = 0}, [&](SurveyRecord const& r) {
    records.push_back(r);
  });
  REQUIRE(records.size() == 1);
  CHECK(records[0].gens == std::vector<value_type>{1});
  CHECK(records[0].flags
        == Flags{true, true, true, true, Tristate::yes});
  CHECK(records[0].violations.empty());
  CHECK(summary.total_semigroups() == 1);

  summary = survey({.max_genus = 5});
  CHECK(summary.total_violations() == 0);
  CHECK(summary.total_semigroups() == 1 + 1 + 2 + 4 + 7 + 12);
  CHECK(summary.rows.size() == 6);

  CHECK_THROWS_AS(survey({.max_genus = -1}), InvalidInput);
  CHECK_THROWS_AS(survey({.max_genus = 2, .checks = {"no-such-check"}}),
                  InvalidInput);
}

TEST_CASE("survey output is independent of the worker count") {
  auto run = [](unsigned jobs) {
    std::ostringstream os;
    auto summary = survey({.max_genus = 9, .jobs = jobs},
                          [&](SurveyRecord const& r) {
                            os << to_json(r).dump() << '\n';
                          });
    return std::pair{os.str(), summary.rows};
  };
  auto const one  = run(1);
  auto const four = run(4);
  CHECK(one.first == four.first);
  CHECK(one.second == four.second);
}

TEST_CASE("survey check filter") {
  auto summary = survey({.max_genus = 6, .checks = {"arf-two-algorithms"}});
  CHECK(summary.total_violations() == 0);
  CHECK(summary.total_semigroups() == 1 + 1 + 2 + 4 + 7 + 12 + 23);

  std::ostringstream os;
  print_summary(os, summary);
  CHECK(os.str().find("total: 50 semigroups, 0 violations") != std::string::npos);
}
