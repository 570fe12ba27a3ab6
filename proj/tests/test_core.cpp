#include "doctest.h"

#include "helpers.hpp"
#include "sgtool/act.hpp"
#include "sgtool/congruence.hpp"
#include "sgtool/construct.hpp"
#include "sgtool/corpus.hpp"
#include "sgtool/green.hpp"

using namespace sgtool;
namespace sm = sgtool::small;

namespace {
  error_kind kind_of(auto&& f) {
    try {
      f();
    } catch (sgtool_error const& e) {
      return e.kind();
    }
    FAIL("no exception");
    return error_kind::parse_error;
  }
}  // namespace

TEST_CASE("validate accepts L2 and Z2") {
  auto L2 = validate_semigroup({{0, 0}, {1, 1}});
  CHECK(L2.size() == 2);
  CHECK(L2.flags().band);
  auto Z2 = validate_semigroup({{0, 1}, {1, 0}});
  CHECK(Z2.flags().group);
}

TEST_CASE("validate rejects a non-associative table with a real witness") {
  try {
    validate_semigroup({{0, 1}, {0, 0}});
    FAIL("accepted");
  } catch (sgtool_error const& e) {
    REQUIRE(e.kind() == error_kind::not_associative);
    auto w = e.witness();
    REQUIRE(w.size() == 3);
    oracle::table_t t{{0, 1}, {0, 0}};
    CHECK(t[t[w[0]][w[1]]][w[2]] != t[w[0]][t[w[1]][w[2]]]);
  }
  CHECK_FALSE(oracle::associative({{0, 1}, {0, 0}}));
}

TEST_CASE("validate rejects bad shapes and entries") {
  CHECK(kind_of([] { validate_semigroup({{0, 2}, {1, 0}}); }) == error_kind::not_closed);
  CHECK(kind_of([] { validate_semigroup({{0, -1}, {1, 0}}); }) == error_kind::not_closed);
  CHECK(kind_of([] { validate_semigroup({{0, 1}, {1}}); }) == error_kind::not_square);
}

TEST_CASE("adjoin") {
  auto Z2 = sm::cyclic_group(2);
  CHECK(adjoin(Z2, adjoin_kind::identity) == Z2);

  auto L2  = sm::left_zero(2);
  auto L21 = adjoin(L2, adjoin_kind::identity);
  REQUIRE(L21.size() == 3);
  CHECK(L21.identity() == element_type{2});

  auto L20 = adjoin(L2, adjoin_kind::zero);
  REQUIRE(L20.size() == 3);
  CHECK(L20.zero() == element_type{2});
  CHECK(adjoin(sm::null(2), adjoin_kind::zero) == sm::null(2));
}

TEST_CASE("closure") {
  CHECK(closure(sm::cyclic_group(4), {1}) == std::vector<element_type>{0, 1, 2, 3});
  CHECK(closure(sm::left_zero(2), {0}) == std::vector<element_type>{0});
  // B({1},2): (1,1) = 0, (2,2) = 3, zero = 4.
  CHECK(closure(brandt(sm::trivial(), 2), {0, 3}) == std::vector<element_type>{0, 3, 4});
  CHECK(kind_of([] { closure(sm::trivial(), {}); }) == error_kind::empty_generator_set);
}

TEST_CASE("congruence_from_pairs examples") {
  auto Z4 = sm::cyclic_group(4);
  auto c  = congruence_from_pairs(Z4, {{0, 2}}, congruence_side::two_sided);
  CHECK(c.partition == std::vector<std::size_t>{0, 1, 0, 1});

  auto Y = sm::chain(2);
  CHECK(congruence_from_pairs(Y, {{0, 1}}, congruence_side::two_sided).num_classes == 1);
  CHECK(congruence_from_pairs(Z4, {}, congruence_side::right).num_classes == 4);
}

TEST_CASE("congruence_from_pairs is the least congruence (orders <= 3)") {
  for (auto const& S : testing::up_to_order(3)) {
    auto t = testing::to_table(S);
    int  n = static_cast<int>(S.size());
    for (int side = 0; side < 3; ++side) {
      for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
          auto c   = congruence_from_pairs(S, {{element_type(a), element_type(b)}},
                                           static_cast<congruence_side>(side));
          auto rel = oracle::least_congruence(t, {{a, b}}, side);
          for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
              CHECK((c.partition[x] == c.partition[y]) == rel[x][y]);
        }
      }
    }
  }
}

TEST_CASE("quotient") {
  auto Z4 = sm::cyclic_group(4);
  auto c  = congruence_from_pairs(Z4, {{0, 2}}, congruence_side::two_sided);
  CHECK(is_isomorphic(quotient(Z4, c).semigroup, sm::cyclic_group(2)));

  auto id = congruence_from_pairs(Z4, {}, congruence_side::two_sided);
  CHECK(is_isomorphic(quotient(Z4, id).semigroup, Z4));

  auto all = congruence_from_pairs(Z4, {{0, 1}}, congruence_side::two_sided);
  CHECK(quotient(Z4, all).semigroup.size() == 1);

  // Some right congruence of a small semigroup is not a left congruence.
  bool seen = false;
  for (auto const& S : testing::up_to_order(3)) {
    for (element_type a = 0; a < S.size() && !seen; ++a)
      for (element_type b = a + 1; b < S.size() && !seen; ++b) {
        auto r = congruence_from_pairs(S, {{a, b}}, congruence_side::right);
        if (is_congruence(S, r.partition, congruence_side::two_sided))
          continue;
        seen = true;
        CHECK(kind_of([&] { quotient(S, r); }) == error_kind::not_two_sided);
      }
  }
  CHECK(seen);
}

TEST_CASE("quotient matches the brute-force class table (orders <= 3)") {
  for (auto const& S : testing::up_to_order(3)) {
    int n = static_cast<int>(S.size());
    for (int a = 0; a < n; ++a) {
      auto c = congruence_from_pairs(S, {{0, element_type(a)}}, congruence_side::two_sided);
      auto q = quotient(S, c);
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          CHECK(q.semigroup.product(q.projection[x], q.projection[y]) ==
                q.projection[S.product(x, y)]);
      CHECK(q.semigroup.size() == c.num_classes);
    }
  }
}

TEST_CASE("rees_quotient") {
  auto Y = sm::chain(2);
  auto q = rees_quotient(Y, {1});
  CHECK(q.semigroup.size() == 2);
  CHECK(q.semigroup.flags().semilattice);

  CHECK(rees_quotient(sm::cyclic_group(2), {0, 1}).semigroup.size() == 1);

  auto B = brandt(sm::trivial(), 2);
  CHECK(is_isomorphic(rees_quotient(B, {4}).semigroup, B));

  auto L2 = sm::left_zero(2);
  CHECK(kind_of([&] { rees_quotient(L2, {0}); }) == error_kind::not_an_ideal);

  for (auto const& S : testing::up_to_order(3)) {
    auto G = green(S);
    for (auto const& I : all_right_ideals(S, G)) {
      if (is_ideal(S, I))
        CHECK(rees_quotient(S, I).semigroup.size() == S.size() - I.size() + 1);
    }
  }
}

TEST_CASE("act_min_generating") {
  CHECK(act_min_generating(regular_act(sm::cyclic_group(2))).size() == 1);
  CHECK(act_min_generating(regular_act(sm::left_zero(2))) == std::vector<element_type>{0, 1});
  CHECK(act_min_generating(regular_act(sm::monogenic(3, 1))) == std::vector<element_type>{0});
}

TEST_CASE("act_min_generating regenerates and is minimum (orders <= 3)") {
  for (auto const& S : testing::up_to_order(3)) {
    auto A = regular_act(S);
    auto U = act_min_generating(A);
    auto t = testing::to_table(S);
    oracle::set_t gen;
    for (auto u : U)
      for (auto x : oracle::right_principal(t, u))
        gen.insert(x);
    CHECK(gen.size() == S.size());
    // No element of U lies in another's orbit, so none can be dropped.
    for (auto u : U)
      for (auto v : U)
        if (u != v)
          CHECK_FALSE(oracle::right_principal(t, v).count(u));
  }
}

TEST_CASE("act_rees_quotient") {
  auto A = regular_act(sm::chain(2));
  auto Q = act_rees_quotient(A, {1});
  CHECK(Q.carrier_size == 2);
  CHECK(Q.act(1, 0) == 1);

  CHECK(act_rees_quotient(A, {0, 1}).carrier_size == 1);
  CHECK(act_rees_quotient(A, {}).carrier_size == A.carrier_size);
  CHECK(kind_of([&] { act_rees_quotient(regular_act(sm::left_zero(2)), {5}); }) ==
        error_kind::invalid_parameters);
  auto Z4 = regular_act(sm::cyclic_group(4));
  CHECK(kind_of([&] { act_rees_quotient(Z4, {0}); }) == error_kind::not_a_subact);
}

TEST_CASE("make_act checks the action law") {
  auto L2 = sm::left_zero(2);
  CHECK(kind_of([&] { make_act(L2, 2, {0, 1, 0, 0}); }) == error_kind::not_an_act);
  auto A = make_act(L2, 1, {0, 0});
  CHECK(A.carrier_size == 1);
}

TEST_CASE("structure flags examples") {
  auto f = sm::right_zero(3).flags();
  CHECK(f.local_right_identities);
  CHECK(f.regular);
  CHECK(f.band);

  auto n = sm::null(2).flags();
  CHECK(n.nilpotent);
  CHECK_FALSE(n.regular);

  auto b = brandt(sm::trivial(), 2).flags();
  CHECK(b.inverse);
  CHECK_FALSE(b.completely_regular);
}

TEST_CASE("flags agree with definitions (orders <= 4)") {
  for (auto const& S : testing::up_to_order(4)) {
    auto t = testing::to_table(S);
    int  n = static_cast<int>(S.size());
    auto f = S.flags();
    CHECK(f == compute_structure_flags(S));

    bool comm = true, band = true, regular = true, lri = true, ecomm = true;
    std::vector<int> E;
    for (int a = 0; a < n; ++a) {
      if (t[a][a] == a)
        E.push_back(a);
      band = band && t[a][a] == a;
      bool reg = false, inaS = false;
      for (int x = 0; x < n; ++x) {
        comm = comm && t[a][x] == t[x][a];
        reg  = reg || t[t[a][x]][a] == a;
        inaS = inaS || t[a][x] == a;
      }
      regular = regular && reg;
      lri     = lri && inaS;
    }
    for (int e : E)
      for (int g : E)
        ecomm = ecomm && t[e][g] == t[g][e];
    CHECK(f.commutative == comm);
    CHECK(f.band == band);
    CHECK(f.regular == regular);
    CHECK(f.local_right_identities == lri);
    CHECK(f.semilattice == (band && comm));
    CHECK(f.inverse == (regular && ecomm));

    int zero = -1, one = -1;
    for (int z = 0; z < n; ++z) {
      bool isz = true, isi = true;
      for (int x = 0; x < n; ++x) {
        isz = isz && t[z][x] == z && t[x][z] == z;
        isi = isi && t[z][x] == x && t[x][z] == x;
      }
      if (isz)
        zero = z;
      if (isi)
        one = z;
    }
    CHECK(f.has_zero == (zero >= 0));
    CHECK(f.has_identity == (one >= 0));
    CHECK(f.group == (one >= 0 && E.size() == 1 && regular));

    bool nil = zero >= 0;
    for (int a = 0; a < n && nil; ++a) {
      int p = a;
      for (int k = 0; k < n; ++k)
        p = t[p][a];
      nil = p == zero;
    }
    CHECK(f.nilpotent == nil);

    // a lies in a subgroup iff some power a^k (k >= 2) equals a.
    bool cr = true;
    for (int a = 0; a < n; ++a) {
      bool in = false;
      int  p  = a;
      for (int k = 0; k < n && !in; ++k) {
        p  = t[p][a];
        in = p == a;
      }
      cr = cr && in;
    }
    CHECK(f.completely_regular == cr);
  }
}
