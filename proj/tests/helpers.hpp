#pragma once

#include <map>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "sgtool/enumerate.hpp"
#include "sgtool/semigroup.hpp"

namespace testing {

  inline oracle::table_t to_table(sgtool::finite_semigroup const& S) {
    int             n = static_cast<int>(S.size());
    oracle::table_t t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        t[a][b] = static_cast<int>(S.product(a, b));
    return t;
  }

  // Number of distinct principal sets under the given principal-ideal map.
  template <typename F>
  std::size_t count_classes(oracle::table_t const& t, F principal) {
    std::set<oracle::set_t> seen;
    for (int a = 0; a < static_cast<int>(t.size()); ++a)
      seen.insert(principal(t, a));
    return seen.size();
  }

  // Same-class test from principal sets.
  template <typename F>
  bool same_class(oracle::table_t const& t, F principal, int a, int b) {
    return principal(t, a) == principal(t, b);
  }

  // Every semigroup of orders lo..hi, cached per order.
  inline std::vector<sgtool::finite_semigroup> const& all_of_order(std::size_t n) {
    static std::map<std::size_t, std::vector<sgtool::finite_semigroup>> cache;
    auto it = cache.find(n);
    if (it == cache.end())
      it = cache.emplace(n, sgtool::enumerate_semigroups(n).semigroups).first;
    return it->second;
  }

  inline std::vector<sgtool::finite_semigroup> up_to_order(std::size_t hi) {
    std::vector<sgtool::finite_semigroup> out;
    for (std::size_t n = 1; n <= hi; ++n)
      for (auto const& S : all_of_order(n))
        out.push_back(S);
    return out;
  }

  inline std::vector<sgtool::element_type> as_elements(oracle::set_t const& s) {
    return {s.begin(), s.end()};
  }

}  // namespace testing
