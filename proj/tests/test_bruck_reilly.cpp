#include "doctest.h"

#include <numeric>

#include "helpers.hpp"
#include "sgtool/bruck_reilly.hpp"
#include "sgtool/corpus.hpp"
#include "sgtool/green.hpp"

using namespace sgtool;
namespace sm = sgtool::small;

namespace {
  // 0, a, 1 with theta fixing 1 and sending a to 0.
  finite_semigroup n21() {
    return sm::null_two_with_identity();
  }
  std::vector<element_type> const collapse{0, 0, 2};

  std::vector<finite_semigroup> monoids_up_to(std::size_t n) {
    std::vector<finite_semigroup> out;
    for (auto const& S : testing::up_to_order(n))
      if (S.identity())
        out.push_back(S);
    return out;
  }
}  // namespace

TEST_CASE("triple product examples") {
  auto Z2 = sm::cyclic_group(2);
  std::vector<element_type> id{0, 1};
  CHECK(br_multiply(Z2, id, {0, 1, 0}, {0, 1, 0}) == br_triple{0, 0, 0});
  CHECK(br_multiply(Z2, id, {0, 0, 0}, {4, 1, 2}) == br_triple{4, 1, 2});
  // (1,a,2)(0,b,3): t = 2, b theta^2 = 0 here.
  CHECK(br_multiply(n21(), collapse, {1, 1, 2}, {0, 1, 3}) == br_triple{1, 0, 5});
  CHECK(br_multiply(n21(), collapse, {1, 2, 2}, {0, 2, 3}) == br_triple{1, 2, 5});
}

TEST_CASE("decision examples") {
  auto t = br_wrn_decide(sm::trivial(), {0});
  CHECK(t.value == verdict::wrn);

  auto v = br_wrn_decide(n21(), collapse);
  CHECK(v.value == verdict::not_wrn);
  CHECK(v.witness == witness_kind::loose_cycle);
  REQUIRE(v.cycle.size() == 1);
  CHECK(v.cycle[0].from == std::vector<element_type>{0, 1});
  CHECK(v.cycle[0].to == std::vector<element_type>{0, 1});
  CHECK(v.cycle[0].loose);
}

TEST_CASE("lemma witness examples") {
  auto w = br_lemma_check(n21(), collapse);
  REQUIRE(w);
  CHECK(w->ideal == std::vector<element_type>{0});
  CHECK(w->a == 1);
  CHECK_FALSE(br_lemma_check(sm::cyclic_group(2), {0, 1}));
  for (auto const& M : monoids_up_to(3)) {
    std::vector<element_type> id(M.size());
    std::iota(id.begin(), id.end(), 0);
    CHECK_FALSE(br_lemma_check(M, id));
  }
}

TEST_CASE("endomorphism checks") {
  try {
    check_monoid_endomorphism(n21(), {1, 0, 2});
    FAIL("accepted");
  } catch (sgtool_error const& e) {
    CHECK(e.kind() == error_kind::not_an_endomorphism);
    CHECK(e.witness().size() == 2);
  }
  try {
    br_wrn_decide(sm::left_zero(2), {0, 1});
    FAIL("accepted");
  } catch (sgtool_error const& e) {
    CHECK(e.kind() == error_kind::not_a_monoid);
  }
}

TEST_CASE("monoid endomorphisms are exactly the identity-fixing homomorphisms") {
  for (auto const& M : monoids_up_to(3)) {
    auto n   = M.size();
    auto one = *M.identity();
    std::size_t count = 0;
    std::vector<element_type> f(n, 0);
    while (true) {
      bool hom = f[one] == one;
      for (std::size_t a = 0; a < n && hom; ++a)
        for (std::size_t b = 0; b < n && hom; ++b)
          hom = f[M.product(a, b)] == M.product(f[a], f[b]);
      count += hom;
      std::size_t i = 0;
      while (i < n && f[i] == n - 1)
        f[i++] = 0;
      if (i == n)
        break;
      ++f[i];
    }
    CHECK(monoid_endomorphisms(M).size() == count);
  }
}

TEST_CASE("unit image gives WRN, lemma witnesses give NotWRN (monoids <= 3)") {
  for (auto const& M : monoids_up_to(3)) {
    auto G = green(M);
    auto one = *M.identity();
    for (auto const& theta : monoid_endomorphisms(M)) {
      auto v = br_wrn_decide(M, theta);
      bool units = true;
      for (auto x : theta)
        units = units && G.h[x] == G.h[one];
      if (units)
        CHECK(v.value == verdict::wrn);
      if (br_lemma_check(M, theta))
        CHECK(v.value == verdict::not_wrn);
    }
  }
}

TEST_CASE("theta powers follow the orbit") {
  std::vector<element_type> theta{1, 2, 0, 3};
  CHECK(theta_power(theta, 0, 0) == 0);
  CHECK(theta_power(theta, 0, 1) == 1);
  CHECK(theta_power(theta, 0, 3000000001ull) == 1);
  CHECK(theta_power(theta, 3, 7) == 3);
}

TEST_CASE("triple product is associative on a window") {
  for (auto const& M : monoids_up_to(3)) {
    for (auto const& theta : monoid_endomorphisms(M)) {
      std::vector<br_triple> W;
      for (std::uint64_t j = 0; j <= 2; ++j)
        for (element_type a = 0; a < M.size(); ++a)
          for (std::uint64_t k = 0; k <= 2; ++k)
            W.push_back({j, a, k});
      bool ok = true;
      for (auto const& x : W)
        for (auto const& y : W)
          for (auto const& z : W)
            ok = ok && br_multiply(M, theta, br_multiply(M, theta, x, y), z) ==
                           br_multiply(M, theta, x, br_multiply(M, theta, y, z));
      CHECK(ok);
    }
  }
}
