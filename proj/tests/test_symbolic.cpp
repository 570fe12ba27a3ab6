#include "doctest.h"

#include <map>
#include <random>
#include <set>

#include "sgtool/corpus.hpp"
#include "sgtool/symbolic.hpp"

using namespace sgtool;
namespace sm = sgtool::small;

namespace {
  sym_element el(std::vector<std::int64_t> c) {
    return {std::move(c)};
  }

  std::vector<std::pair<std::string, symbolic_family>> all_families() {
    std::vector<std::pair<std::string, symbolic_family>> out;
    for (auto const& e : builtin_corpus())
      if (auto F = std::get_if<symbolic_family>(&e.value))
        out.emplace_back(e.id, *F);
    return out;
  }
}  // namespace

TEST_CASE("multiplication examples") {
  auto B = symbolic_family::bicyclic();
  CHECK(sym_multiply(B, el({1, 2}), el({3, 0})) == el({2, 0}));

  auto P   = symbolic_family::polycyclic(2);
  auto gen = *antichain_generator(P);
  CHECK(to_string(P, gen(1)) == "y^-1 x^-1 x y");
  CHECK(to_string(P, sym_multiply(P, gen(1), gen(2))) == "0");

  auto T = symbolic_family::trivial_free_product();
  CHECK(sym_multiply(T, el({0, 1}), el({1, 0})) == el({0, 1, 0}));
  CHECK(sym_multiply(T, el({1}), el({1})) == el({1}));
}

TEST_CASE("multiplication rejects foreign elements") {
  auto B = symbolic_family::bicyclic();
  CHECK_THROWS_AS(sym_multiply(B, el({1}), el({0, 0})), sgtool_error);
  CHECK_THROWS_AS(sym_r_leq(B, el({-1, 0}), el({0, 0})), sgtool_error);
}

TEST_CASE("R-order examples") {
  auto F = symbolic_family::free_semigroup(2);
  CHECK(sym_r_leq(F, el({0, 1}), el({0})));
  CHECK_FALSE(sym_r_leq(F, el({0}), el({0, 1})));

  auto B = symbolic_family::bicyclic();
  CHECK(sym_r_leq(B, el({3, 5}), el({1, 0})));
  CHECK_FALSE(sym_r_leq(B, el({1, 0}), el({3, 5})));

  auto D = symbolic_family::disjoint_monogenic_chain();
  CHECK(sym_r_leq(D, el({2, 3}), el({1, 1})));
}

TEST_CASE("bicyclic R-order matches product search (j,k,p,q <= 12)") {
  auto B = symbolic_family::bicyclic();
  for (int j = 0; j <= 12; ++j)
    for (int k = 0; k <= 12; ++k)
      for (int p = 0; p <= 12; ++p)
        for (int q = 0; q <= 12; ++q) {
          // (p,q) = (j,k)(s,t) forces s = k + p - j and t = q when p >= j;
          // search the whole window independently anyway.
          bool found = false;
          for (int s = 0; s <= 40 && !found; ++s)
            for (int t = 0; t <= 40 && !found; ++t)
              found = sym_multiply(B, el({j, k}), el({s, t})) == el({p, q});
          CHECK(sym_r_leq(B, el({p, q}), el({j, k})) == found);
        }
}

TEST_CASE("enumeration examples") {
  auto B = symbolic_family::bicyclic();
  CHECK(sym_enumerate(B, 2) ==
        std::vector<sym_element>{el({0, 0}), el({0, 1}), el({1, 0}), el({0, 2}), el({1, 1}),
                                 el({2, 0})});
  auto F = symbolic_family::free_semigroup(2);
  CHECK(sym_enumerate(F, 2) == std::vector<sym_element>{el({0}), el({1}), el({0, 0}),
                                                        el({0, 1}), el({1, 0}), el({1, 1})});
  auto T = symbolic_family::trivial_free_product();
  CHECK(sym_enumerate(T, 3) == std::vector<sym_element>{el({0}), el({1}), el({0, 1}),
                                                        el({1, 0}), el({0, 1, 0}),
                                                        el({1, 0, 1})});
}

TEST_CASE("enumeration is duplicate free and within bound") {
  for (auto const& [id, F] : all_families()) {
    CAPTURE(id);
    auto W = sym_enumerate(F, 5);
    CHECK(std::set<sym_element>(W.begin(), W.end()).size() == W.size());
    for (auto const& a : W) {
      CHECK(sym_valid(F, a));
      CHECK(sym_size(F, a) <= 5);
    }
  }
}

TEST_CASE("indecomposables") {
  std::vector<bool> both{true, true};
  auto C = fc_component_indecomposables(2, both, 4);
  std::set<std::vector<std::int64_t>> got;
  for (auto const& a : C)
    got.insert(a.code);
  CHECK(got == std::set<std::vector<std::int64_t>>{{1, 1}, {1, 2}, {2, 1}, {1, 3}, {3, 1}});

  auto N = symbolic_family::null(std::nullopt);
  auto W = sym_enumerate(N, 6);
  auto I = sym_indecomposables(N, 6);
  CHECK(I.size() + 1 == W.size());

  CHECK(sym_indecomposables(symbolic_family::bicyclic(), 6).empty());
}

TEST_CASE("associativity on random triples") {
  std::mt19937 rng(3);
  for (auto const& [id, F] : all_families()) {
    CAPTURE(id);
    auto W = sym_enumerate(F, 5);
    REQUIRE_FALSE(W.empty());
    for (int t = 0; t < 10000; ++t) {
      auto const& a = W[rng() % W.size()];
      auto const& b = W[rng() % W.size()];
      auto const& c = W[rng() % W.size()];
      auto        l = sym_multiply(F, sym_multiply(F, a, b), c);
      auto        r = sym_multiply(F, a, sym_multiply(F, b, c));
      if (l != r) {
        FAIL_CHECK(to_string(F, a) << " " << to_string(F, b) << " " << to_string(F, c));
        break;
      }
    }
  }
}

TEST_CASE("R-order agrees with product search in a window") {
  // a <= b iff a = b or a = bc for c of size at most 2B + 2.
  std::size_t const B = 3;
  for (auto const& [id, F] : all_families()) {
    CAPTURE(id);
    auto W  = sym_enumerate(F, B);
    auto W2 = sym_enumerate(F, 2 * B + 2);
    if (W2.size() > 1500)
      W2.resize(1500);
    for (auto const& a : W)
      for (auto const& b : W) {
        bool found = a == b;
        for (std::size_t i = 0; i < W2.size() && !found; ++i)
          found = sym_multiply(F, b, W2[i]) == a;
        bool leq = sym_r_leq(F, a, b);
        if (found)
          CHECK(leq);
        else
          CHECK_MESSAGE(!leq, to_string(F, a) << " <= " << to_string(F, b));
      }
  }
}

TEST_CASE("verdicts") {
  CHECK(sym_wrn_verdict(symbolic_family::free_semigroup(1)).value == verdict::wrn);
  auto f2 = sym_wrn_verdict(symbolic_family::free_semigroup(2));
  CHECK(f2.value == verdict::not_wrn);
  CHECK(f2.witness == witness_kind::antichain_generator);
  auto p2 = sym_wrn_verdict(symbolic_family::polycyclic(2));
  CHECK(p2.value == verdict::not_wrn);
  CHECK(sym_wrn_verdict(symbolic_family::polycyclic(1)).value == verdict::wrn);
  CHECK(sym_wrn_verdict(symbolic_family::growing_left_zero_chain()).value == verdict::wrn);
  CHECK(sym_wrn_verdict(symbolic_family::collapsing_left_zero_chain()).value == verdict::not_wrn);
  CHECK(sym_wrn_verdict(symbolic_family::bicyclic()).value == verdict::wrn);
  CHECK(sym_wrn_verdict(symbolic_family::null(std::nullopt)).value == verdict::not_wrn);
  CHECK(sym_wrn_verdict(symbolic_family::null(4)).value == verdict::wrn);
  CHECK(sym_wrn_verdict(symbolic_family::disjoint_monogenic_chain()).value == verdict::wrn);
}

TEST_CASE("antichain witnesses") {
  auto F = symbolic_family::free_semigroup(2);
  CHECK(antichain_witness(F, 3) ==
        std::vector<sym_element>{el({0, 1}), el({0, 0, 1}), el({0, 0, 0, 1})});
  auto P = antichain_witness(symbolic_family::polycyclic(2), 2);
  REQUIRE(P.size() == 2);
  CHECK(to_string(symbolic_family::polycyclic(2), P[1]) == "y^-2 x^-1 x y^2");
  try {
    antichain_witness(symbolic_family::bicyclic(), 2);
    FAIL("no error");
  } catch (sgtool_error const& e) {
    CHECK(e.kind() == error_kind::not_applicable);
  }
}

TEST_CASE("invalid parameters") {
  CHECK_THROWS_AS(symbolic_family::free_semigroup(0), sgtool_error);
  CHECK_THROWS_AS(symbolic_family::polycyclic(0), sgtool_error);
  CHECK_THROWS_AS(symbolic_family::bruck_reilly(sm::left_zero(2), {0, 1}), sgtool_error);
  CHECK_THROWS_AS(symbolic_family::bruck_reilly(sm::null_two_with_identity(), {1, 0, 2}),
                  sgtool_error);
}

TEST_CASE("trivial free product parts partition the normal forms") {
  auto parts = trivial_free_product_parts(20);
  REQUIRE(parts.size() == 4);
  auto W = sym_enumerate(symbolic_family::trivial_free_product(), 20);
  std::map<sym_element, int> hits;
  for (auto const& p : parts)
    for (auto const& a : p)
      ++hits[a];
  CHECK(hits.size() == W.size());
  for (auto const& a : W)
    CHECK(hits[a] == 1);
}

TEST_CASE("Z2 free product: the four parts miss exactly a and b") {
  auto F     = symbolic_family::z2_free_product_sl2();
  auto parts = z2_free_product_parts(20);
  REQUIRE(parts.size() == 4);
  // The first three parts are monoids, so they share the identity and
  // nothing else.
  std::map<sym_element, int> hits;
  for (auto const& p : parts)
    for (auto const& a : p)
      ++hits[a];
  std::set<sym_element> all;
  for (auto const& [a, k] : hits) {
    all.insert(a);
    CHECK(k == (a == el({}) ? 3 : 1));
  }
  std::set<sym_element> missing;
  for (auto const& a : sym_enumerate(F, 20))
    if (!all.count(a))
      missing.insert(a);
  CHECK(missing == std::set<sym_element>{el({0}), el({1})});

  std::set<sym_element> fixed;
  for (auto const& p : z2_free_product_cover(20))
    fixed.insert(p.begin(), p.end());
  for (auto const& a : sym_enumerate(F, 20))
    CHECK(fixed.count(a));
}

TEST_CASE("free product parts are closed as described") {
  // <ef> and <fe> are subsemigroups; (ef)^i e times (fe)^j f stays in the
  // union.
  auto T     = symbolic_family::trivial_free_product();
  auto parts = trivial_free_product_parts(12);
  std::set<sym_element> all;
  for (auto const& p : parts)
    all.insert(p.begin(), p.end());
  for (int k : {0, 1}) {
    std::set<sym_element> P(parts[k].begin(), parts[k].end());
    for (auto const& a : parts[k])
      for (auto const& b : parts[k]) {
        auto ab = sym_multiply(T, a, b);
        if (sym_size(T, ab) <= 12)
          CHECK(P.count(ab));
      }
  }
  for (auto const& a : parts[2])
    for (auto const& b : parts[3]) {
      auto ab = sym_multiply(T, a, b);
      if (sym_size(T, ab) <= 12)
        CHECK(all.count(ab));
    }
}

TEST_CASE("local right identities") {
  CHECK(sym_has_lri(symbolic_family::bicyclic()));
  CHECK_FALSE(sym_has_lri(symbolic_family::free_semigroup(2)));
  CHECK_FALSE(sym_has_lri(symbolic_family::null(std::nullopt)));
}
