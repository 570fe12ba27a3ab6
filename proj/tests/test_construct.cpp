#include "doctest.h"

#include <random>

#include "helpers.hpp"
#include "sgtool/construct.hpp"
#include "sgtool/corpus.hpp"
#include "sgtool/green.hpp"

using namespace sgtool;
namespace sm = sgtool::small;

TEST_CASE("direct product examples") {
  auto P = direct_product(sm::left_zero(2), sm::right_zero(2));
  REQUIRE(P.size() == 4);
  // (a,x)(b,y) = (a,y): indices 0 and 3 give 1.
  CHECK(P.product(0, 3) == 1);
  CHECK(is_isomorphic(direct_product(sm::cyclic_group(2), sm::cyclic_group(2)),
                      builtin_semigroup("klein")));
  CHECK_FALSE(direct_product(sm::left_zero(2), sm::null(2)).flags().local_right_identities);
}

TEST_CASE("direct product lri is the conjunction (orders <= 3)") {
  auto all = testing::up_to_order(3);
  for (auto const& S : all)
    for (auto const& T : all) {
      auto P = direct_product(S, T);
      CHECK(P.flags().local_right_identities ==
            (S.flags().local_right_identities && T.flags().local_right_identities));
    }
}

TEST_CASE("rees matrix examples") {
  auto Z2 = sm::cyclic_group(2);
  CHECK(is_isomorphic(rees_matrix(Z2, 1, 1, {1, 1, {0}}, false), Z2));

  sandwich_matrix Id{2, 2, {0, sandwich_zero, sandwich_zero, 0}};
  auto            B = rees_matrix(sm::trivial(), 2, 2, Id, true);
  CHECK(B.size() == 5);
  CHECK(is_isomorphic(B, brandt(sm::trivial(), 2)));

  auto C = rees_matrix(Z2, 2, 1, {1, 2, {0, 0}}, false);
  CHECK(green(C).num_r == 2);

  CHECK_THROWS_AS(rees_matrix(Z2, 2, 2, Id, false), sgtool_error);
}

TEST_CASE("brandt examples") {
  auto B = brandt(sm::trivial(), 2);
  CHECK(B.size() == 5);
  CHECK(B.product(0, 3) == 4);
  CHECK(B.product(1, 2) == 0);
  CHECK(is_isomorphic(brandt(sm::cyclic_group(2), 1),
                      adjoin(sm::cyclic_group(2), adjoin_kind::zero)));
  CHECK_FALSE(brandt(sm::null(2), 1).flags().inverse);
  CHECK(brandt(sm::cyclic_group(3), 2).flags().inverse);
}

TEST_CASE("Rees R-class count with a unit in every row") {
  std::mt19937 rng(11);
  for (std::size_t m = 1; m <= 4; ++m) {
    for (auto const& M : testing::all_of_order(m)) {
      auto one = M.identity();
      if (!one)
        continue;
      for (std::size_t I = 1; I <= 3; ++I)
        for (std::size_t J = 1; J <= 3; ++J) {
          sandwich_matrix P{J, I, {}};
          for (std::size_t j = 0; j < J; ++j)
            for (std::size_t i = 0; i < I; ++i)
              P.entries.push_back(rng() % 3 == 0 ? sandwich_zero
                                                 : std::int64_t(rng() % M.size()));
          for (std::size_t j = 0; j < J; ++j)
            P.entries[j * I + rng() % I] = *one;
          // |I| nonzero R-classes when M is a group; in general each row
          // index splits further by the R-classes of M.
          auto S = rees_matrix(M, I, J, P, true);
          CHECK(green(S).num_r == I * green(M).num_r + 1);
          if (M.flags().group)
            CHECK(green(S).num_r == I + 1);
        }
    }
  }
}

TEST_CASE("strong semilattice examples") {
  semilattice_diagram D{sm::chain(2), {sm::cyclic_group(2), sm::cyclic_group(2)}, {{{0, 1}, {0, 1}}}};
  auto                S = strong_semilattice(D);
  CHECK(S.size() == 4);
  CHECK(S.flags().inverse);

  semilattice_diagram C{sm::chain(2), {sm::left_zero(2), sm::left_zero(2)}, {{{0, 1}, {0, 0}}}};
  auto                T = strong_semilattice(C);
  CHECK(T.product(1, 3) == 2);

  semilattice_diagram bad = C;
  bad.homs[{0, 0}]        = {1, 0};
  try {
    strong_semilattice(bad);
    FAIL("accepted");
  } catch (sgtool_error const& e) {
    CHECK(e.kind() == error_kind::identity_violation);
  }
  semilattice_diagram nonhom{sm::chain(2), {sm::cyclic_group(2), sm::cyclic_group(2)}, {{{0, 1}, {1, 1}}}};
  CHECK_THROWS_AS(strong_semilattice(nonhom), sgtool_error);
}

TEST_CASE("u construction examples") {
  auto Z2 = sm::cyclic_group(2);
  auto U  = u_construction(Z2, Z2, {0, 1}, {0, 1});
  CHECK(U.size() == 5);
  CHECK(green(U).num_j == 3);
  CHECK(u_construction(sm::trivial(), sm::trivial(), {0}, {0}).size() == 3);
  CHECK_THROWS_AS(u_construction(Z2, Z2, {1, 0}, {0, 1}), sgtool_error);
}

namespace {
  finite_semigroup random_small(std::mt19937& rng) {
    auto n = 1 + rng() % 3;
    auto const& pool = testing::all_of_order(n);
    return pool[rng() % pool.size()];
  }
}  // namespace

TEST_CASE("constructions are associative on random inputs") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    auto S = random_small(rng), T = random_small(rng);
    CHECK_FALSE(find_nonassociative_triple(S.size() * T.size(), direct_product(S, T).table()));
    auto I = 1 + rng() % 2, J = 1 + rng() % 2;
    sandwich_matrix P{J, I, {}};
    for (std::size_t k = 0; k < I * J; ++k)
      P.entries.push_back(std::int64_t(rng() % S.size()));
    auto R = rees_matrix(S, I, J, P, false);
    CHECK_FALSE(find_nonassociative_triple(R.size(), R.table()));
    auto B = brandt(S, 1 + rng() % 2);
    CHECK_FALSE(find_nonassociative_triple(B.size(), B.table()));
  }
}

TEST_CASE("completely simple decomposition") {
  auto rb = completely_simple_decomposition(direct_product(sm::left_zero(2), sm::right_zero(2)));
  CHECK(rb.Y.size() == 1);
  CHECK(rb.components.size() == 1);

  semilattice_diagram D{sm::chain(2), {sm::cyclic_group(2), sm::cyclic_group(2)}, {{{0, 1}, {0, 1}}}};
  auto                cs = completely_simple_decomposition(strong_semilattice(D));
  CHECK(cs.Y.size() == 2);
  REQUIRE(cs.component_semigroups.size() == 2);
  CHECK(cs.component_semigroups[0].flags().group);
  CHECK(cs.component_semigroups[1].flags().group);

  CHECK_THROWS_AS(completely_simple_decomposition(brandt(sm::trivial(), 2)), sgtool_error);
}

TEST_CASE("rees coordinates") {
  auto B = brandt(sm::trivial(), 2);
  auto r = rees_coordinates(B);
  CHECK(r.group.size() == 1);
  CHECK(r.I == 2);
  CHECK(r.J == 2);
  CHECK(r.with_zero);
  int zeros = 0;
  for (auto e : r.P.entries)
    zeros += e == sandwich_zero;
  CHECK(zeros == 2);
  CHECK(is_isomorphic(rees_matrix(r.group, r.I, r.J, r.P, r.with_zero), B));

  auto l = rees_coordinates(sm::left_zero(2));
  CHECK(l.group.size() == 1);
  CHECK(l.I == 2);
  CHECK(l.J == 1);

  // The 2-chain is the trivial group with a zero adjoined, so it has Rees
  // coordinates; the 3-chain has two nonzero J-classes.
  CHECK(rees_coordinates(sm::chain(2)).I == 1);
  try {
    rees_coordinates(sm::chain(3));
    FAIL("accepted");
  } catch (sgtool_error const& e) {
    CHECK(e.kind() == error_kind::not_completely_zero_simple);
  }
}

TEST_CASE("isomorphism search") {
  auto a = sm::left_zero(2), b = sm::right_zero(2);
  CHECK_FALSE(is_isomorphic(a, b));
  for (auto const& S : testing::all_of_order(3)) {
    auto c = canonical_form(S);
    auto f = find_isomorphism(S, c);
    REQUIRE(f);
    for (std::size_t x = 0; x < S.size(); ++x)
      for (std::size_t y = 0; y < S.size(); ++y)
        CHECK((*f)[S.product(x, y)] == c.product((*f)[x], (*f)[y]));
  }
}
