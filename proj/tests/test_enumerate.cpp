#include "doctest.h"

#include "helpers.hpp"
#include "sgtool/construct.hpp"
#include "sgtool/enumerate.hpp"

using namespace sgtool;

TEST_CASE("counts agree with the brute-force oracle") {
  std::size_t const expected[] = {0, 1, 5, 24};
  for (std::size_t n = 1; n <= 3; ++n) {
    std::size_t labelled = 0;
    auto        iso      = oracle::count_up_to_iso(static_cast<int>(n), &labelled);
    auto        r        = enumerate_semigroups(n);
    CHECK(iso == expected[n]);
    CHECK(r.semigroups.size() == iso);
    CHECK(r.labelled_count == labelled);
  }
  auto four = enumerate_semigroups(4);
  CHECK(four.semigroups.size() == 188);
  CHECK(four.labelled_count == 3492);
}

TEST_CASE("canonical form is idempotent and an isomorphism invariant") {
  for (auto const& S : testing::up_to_order(4)) {
    auto c = canonical_form(S);
    CHECK(canonical_form(c) == c);
    CHECK(is_isomorphic(S, c));
  }
  // Output is sorted by table.
  auto const& four = testing::all_of_order(4);
  for (std::size_t i = 0; i + 1 < four.size(); ++i)
    CHECK(four[i].table() < four[i + 1].table());
}

TEST_CASE("serial and sharded enumeration agree") {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto a = enumerate_semigroups(n, 1);
    auto b = enumerate_semigroups(n, 3);
    REQUIRE(a.semigroups.size() == b.semigroups.size());
    for (std::size_t i = 0; i < a.semigroups.size(); ++i)
      CHECK(a.semigroups[i].table() == b.semigroups[i].table());
  }
}

TEST_CASE("enumeration limits") {
  CHECK_THROWS_AS(enumerate_semigroups(0), sgtool_error);
  try {
    enumerate_semigroups(6);
    FAIL("accepted");
  } catch (sgtool_error const& e) {
    CHECK(e.kind() == error_kind::order_too_large);
  }
  try {
    enumerate_semigroups(5);
    FAIL("accepted");
  } catch (sgtool_error const& e) {
    CHECK(e.kind() == error_kind::order_too_large);
  }
}

TEST_CASE("no two enumerated semigroups are isomorphic (order 3)") {
  auto const& three = testing::all_of_order(3);
  for (std::size_t i = 0; i < three.size(); ++i)
    for (std::size_t j = i + 1; j < three.size(); ++j)
      CHECK_FALSE(is_isomorphic(three[i], three[j]));
}
