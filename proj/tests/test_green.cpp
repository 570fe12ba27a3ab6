#include "doctest.h"

#include "helpers.hpp"
#include "sgtool/construct.hpp"
#include "sgtool/corpus.hpp"
#include "sgtool/green.hpp"

using namespace sgtool;
namespace sm = sgtool::small;

namespace {
  // B({1},2): (1,1)=0, (1,2)=1, (2,1)=2, (2,2)=3, zero=4.
  finite_semigroup b12() {
    return brandt(sm::trivial(), 2);
  }
}  // namespace

TEST_CASE("green structure examples") {
  auto G = green(sm::cyclic_group(3));
  CHECK(G.num_r == 1);
  CHECK(G.num_l == 1);
  CHECK(G.num_h == 1);
  CHECK(G.num_d == 1);
  CHECK(G.num_j == 1);

  auto R3 = green(sm::right_zero(3));
  CHECK(R3.num_r == 1);
  CHECK(R3.num_l == 3);
  CHECK(R3.num_h == 3);

  auto B = green(b12());
  CHECK(B.num_r == 3);
  CHECK(B.num_l == 3);
  CHECK(B.num_h == 5);
  CHECK(B.num_j == 2);
  CHECK(B.r[0] == B.r[1]);
  CHECK(B.r[2] == B.r[3]);
  CHECK(B.r[0] != B.r[2]);
}

TEST_CASE("green relations agree with principal ideals (orders <= 4)") {
  for (auto const& S : testing::up_to_order(4)) {
    auto t = testing::to_table(S);
    auto G = green(S);
    int  n = static_cast<int>(S.size());
    CHECK(G.num_r == testing::count_classes(t, oracle::right_principal));
    CHECK(G.num_l == testing::count_classes(t, oracle::left_principal));
    CHECK(G.num_j == testing::count_classes(t, oracle::two_principal));
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        bool r = testing::same_class(t, oracle::right_principal, a, b);
        bool l = testing::same_class(t, oracle::left_principal, a, b);
        CHECK((G.r[a] == G.r[b]) == r);
        CHECK((G.l[a] == G.l[b]) == l);
        CHECK((G.h[a] == G.h[b]) == (r && l));
        // Finite semigroups have D = J.
        CHECK((G.d[a] == G.d[b]) == (G.j[a] == G.j[b]));
        CHECK(G.r_leq(a, b) == oracle::right_principal(t, b).count(a) > 0);
        // R is a left congruence, L a right congruence.
        for (int s = 0; s < n; ++s) {
          if (r)
            CHECK(G.r[t[s][a]] == G.r[t[s][b]]);
          if (l)
            CHECK(G.l[t[a][s]] == G.l[t[b][s]]);
        }
      }
    }
  }
}

TEST_CASE("right_ideal_generated and min_generating_set") {
  auto Z2 = sm::cyclic_group(2);
  CHECK(right_ideal_generated(Z2, {0}).elements.size() == 2);
  CHECK(right_ideal_generated(sm::left_zero(2), {0}).elements == std::vector<element_type>{0});

  auto B = b12();
  auto I = right_ideal_generated(B, {0});
  CHECK(I.elements == std::vector<element_type>{0, 1, 4});
  CHECK(I.canonical_min_gens == std::vector<element_type>{0});

  auto G = green(Z2);
  CHECK(min_generating_set(Z2, G, {0, 1}) == std::vector<element_type>{0});
  auto L2 = sm::left_zero(2);
  CHECK(min_generating_set(L2, green(L2), {0, 1}) == std::vector<element_type>{0, 1});

  CHECK_THROWS_AS(right_ideal_generated(Z2, {}), sgtool_error);
}

TEST_CASE("right ideals: unions of R-classes, minimal generators irredundant (orders <= 4)") {
  for (auto const& S : testing::up_to_order(4)) {
    auto t = testing::to_table(S);
    auto G = green(S);
    auto ideals = all_right_ideals(S, G);
    CHECK(ideals.size() == oracle::all_right_ideals(t).size());
    for (auto const& I : ideals) {
      oracle::set_t Is(I.begin(), I.end());
      for (int a = 0; a < static_cast<int>(S.size()); ++a)
        for (auto b : I)
          if (G.r[a] == G.r[b])
            CHECK(Is.count(a));
      auto gens = min_generating_set(S, G, I);
      CHECK(right_ideal_generated(S, gens).elements == I);
      for (std::size_t drop = 0; drop < gens.size(); ++drop) {
        auto fewer = gens;
        fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(drop));
        if (!fewer.empty())
          CHECK(right_ideal_generated(S, fewer).elements != I);
      }
    }
  }
}

TEST_CASE("R-class poset") {
  auto g = rpreorder_poset(sm::cyclic_group(2));
  CHECK(g.num_classes == 1);
  CHECK(g.max_antichain == 1);
  CHECK(g.longest_chain == 1);

  auto b = rpreorder_poset(b12());
  CHECK(b.max_antichain == 2);
  CHECK(b.longest_chain == 2);

  auto c = rpreorder_poset(sm::chain(3));
  CHECK(c.max_antichain == 1);
  CHECK(c.longest_chain == 3);
}

TEST_CASE("R-class poset width matches brute force (orders <= 4)") {
  for (auto const& S : testing::up_to_order(4)) {
    auto P = rpreorder_poset(S);
    auto k = P.num_classes;
    std::size_t best = 0;
    for (std::uint32_t m = 1; m < (1u << k); ++m) {
      bool ok = true;
      for (std::size_t x = 0; x < k && ok; ++x)
        for (std::size_t y = 0; y < k && ok; ++y)
          if (x != y && (m >> x & 1) && (m >> y & 1))
            ok = !P.leq[x][y];
      if (ok)
        best = std::max<std::size_t>(best, __builtin_popcount(m));
    }
    CHECK(P.max_antichain == best);
  }
}

TEST_CASE("principal series") {
  auto g = principal_series(sm::cyclic_group(3));
  REQUIRE(g.size() == 1);
  CHECK(g[0].tag == factor_tag::simple);

  auto c = principal_series(sm::chain(2));
  REQUIRE(c.size() == 2);
  CHECK(c[0].factor.size() == 1);
  CHECK(c[1].factor.size() == 2);

  auto u = principal_series(u_construction(sm::cyclic_group(2), sm::cyclic_group(2), {0, 1}, {0, 1}));
  REQUIRE(u.size() == 3);
  CHECK(u[0].factor.size() == 1);
  CHECK(u[1].tag == factor_tag::null);
  CHECK(u[2].tag == factor_tag::zero_simple);
  CHECK(u[2].j_class.size() == 2);
}

TEST_CASE("principal series length equals the J-class count (orders <= 4)") {
  for (auto const& S : testing::up_to_order(4))
    CHECK(principal_series(S).size() == green(S).num_j);
}

TEST_CASE("kernel and socle") {
  auto c = kernel_and_socle(sm::chain(3));
  CHECK(c.kernel == std::vector<element_type>{2});
  CHECK(c.minimal_right_ideals.size() == 1);

  auto l = kernel_and_socle(sm::left_zero(2));
  CHECK(l.kernel.size() == 2);
  CHECK(l.minimal_right_ideals.size() == 2);

  auto b = kernel_and_socle(b12());
  CHECK(b.kernel == std::vector<element_type>{4});
  REQUIRE(b.socle);
  CHECK(b.socle->size() == 5);
}

TEST_CASE("minimal right ideals are single R-classes (orders <= 4)") {
  for (auto const& S : testing::up_to_order(4)) {
    auto G  = green(S);
    auto ks = kernel_and_socle(S);
    for (auto const& M : ks.minimal_right_ideals) {
      for (auto a : M)
        CHECK(G.r[a] == G.r[M[0]]);
      for (auto const& N : ks.minimal_right_ideals)
        if (N != M)
          CHECK_FALSE(G.r_leq(M[0], N[0]));
    }
    if (ks.socle)
      CHECK(is_ideal(S, *ks.socle));
  }
}

TEST_CASE("relative Green") {
  auto Z4 = sm::cyclic_group(4);
  CHECK(relative_green(Z4, {0, 1, 2, 3}).green_index == 0);
  CHECK(relative_green(Z4, {0}).green_index == 3);

  auto B = b12();
  CHECK(relative_green(B, {0}).green_index == 4);
  CHECK_THROWS_AS(relative_green(B, {1}), sgtool_error);
}

TEST_CASE("relative R-classes refine R-classes (orders <= 3)") {
  for (auto const& S : testing::up_to_order(3)) {
    auto G = green(S);
    for (auto const& T : all_right_ideals(S, G)) {
      if (!is_closed_subset(S, T))
        continue;
      auto rg = relative_green(S, T);
      for (std::size_t a = 0; a < S.size(); ++a)
        for (std::size_t b = 0; b < S.size(); ++b)
          if (rg.r[a] == rg.r[b])
            CHECK(G.r[a] == G.r[b]);
    }
  }
}

TEST_CASE("subsemigroup predicates") {
  CHECK(subsemigroup_predicates(sm::cyclic_group(4), {0, 2}).right_unitary);
  CHECK(subsemigroup_predicates(b12(), {0, 4}).r_preserving);
  auto p = subsemigroup_predicates(sm::chain(2), {0});
  CHECK(p.right_unitary);
  CHECK(p.complement_ideal);
}

TEST_CASE("idempotent cover") {
  CHECK(idempotent_cover(sm::right_zero(3), {0, 1, 2}).cover.size() == 1);
  CHECK(idempotent_cover(sm::left_zero(3), {0, 1, 2}).cover.size() == 3);
  CHECK(idempotent_cover(b12(), {0, 3}).cover.size() == 2);
  CHECK_THROWS_AS(idempotent_cover(sm::cyclic_group(2), {1}), sgtool_error);
}

TEST_CASE("idempotent cover is a minimum cover (orders <= 4)") {
  for (auto const& S : testing::up_to_order(4)) {
    auto E = idempotents(S);
    auto k = E.size();
    for (std::uint32_t m = 1; m < (1u << k); ++m) {
      std::vector<element_type> U;
      for (std::size_t i = 0; i < k; ++i)
        if (m >> i & 1)
          U.push_back(E[i]);
      auto X = idempotent_cover(S, U).cover;
      for (auto u : U)
        CHECK(std::any_of(X.begin(), X.end(), [&](auto x) { return S.product(x, u) == u; }));
      std::size_t best = k;
      for (std::uint32_t c = 1; c < (1u << U.size()); ++c) {
        bool ok = true;
        for (auto u : U) {
          bool hit = false;
          for (std::size_t i = 0; i < U.size(); ++i)
            hit = hit || ((c >> i & 1) && S.product(U[i], u) == u);
          ok = ok && hit;
        }
        if (ok)
          best = std::min<std::size_t>(best, __builtin_popcount(c));
      }
      CHECK(X.size() == best);
    }
  }
}

TEST_CASE("DOT output names every class") {
  auto B   = b12();
  auto G   = green(B);
  auto dot = eggbox_dot(B, G);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(r_hasse_dot(B, G).find("->") != std::string::npos);
}
