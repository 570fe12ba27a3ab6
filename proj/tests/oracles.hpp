#pragma once

// Brute-force reference implementations used only by the tests.  They
// deliberately avoid the library algorithms: everything is recomputed from
// the raw table by exhaustive search.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

  using table_t = std::vector<std::vector<int>>;
  using set_t   = std::set<int>;

  inline int mul(table_t const& t, int a, int b) {
    return t[a][b];
  }

  inline bool associative(table_t const& t) {
    int n = static_cast<int>(t.size());
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (t[t[a][b]][c] != t[a][t[b][c]])
            return false;
    return true;
  }

  // aS^1 as an explicit set.
  inline set_t right_principal(table_t const& t, int a) {
    set_t s{a};
    for (int x = 0; x < static_cast<int>(t.size()); ++x)
      s.insert(t[a][x]);
    return s;
  }

  inline set_t left_principal(table_t const& t, int a) {
    set_t s{a};
    for (int x = 0; x < static_cast<int>(t.size()); ++x)
      s.insert(t[x][a]);
    return s;
  }

  inline set_t two_principal(table_t const& t, int a) {
    set_t s{a};
    int   n = static_cast<int>(t.size());
    for (int x = 0; x < n; ++x) {
      s.insert(t[a][x]);
      s.insert(t[x][a]);
      for (int y = 0; y < n; ++y)
        s.insert(t[t[x][a]][y]);
    }
    return s;
  }

  inline bool subset(set_t const& a, set_t const& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  }

  inline bool is_right_ideal(table_t const& t, set_t const& I) {
    for (int a : I)
      for (int s = 0; s < static_cast<int>(t.size()); ++s)
        if (!I.count(t[a][s]))
          return false;
    return true;
  }

  inline bool is_ideal(table_t const& t, set_t const& I) {
    for (int a : I)
      for (int s = 0; s < static_cast<int>(t.size()); ++s)
        if (!I.count(t[a][s]) || !I.count(t[s][a]))
          return false;
    return true;
  }

  // Every nonempty right ideal by scanning all subsets.
  inline std::vector<set_t> all_right_ideals(table_t const& t) {
    int                n = static_cast<int>(t.size());
    std::vector<set_t> out;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      set_t I;
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1)
          I.insert(i);
      if (is_right_ideal(t, I))
        out.push_back(I);
    }
    return out;
  }

  // Every set partition of {0..n-1} as a class-index vector.
  inline std::vector<std::vector<int>> all_partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int>              p(n, 0);
    std::function<void(int, int)> rec = [&](int i, int k) {
      if (i == n) {
        out.push_back(p);
        return;
      }
      for (int c = 0; c <= k; ++c) {
        p[i] = c;
        rec(i + 1, std::max(k, c + 1));
      }
    };
    if (n == 0)
      return {{}};
    p[0] = 0;
    rec(1, 1);
    return out;
  }

  // side: 0 right, 1 left, 2 two-sided.
  inline bool is_congruence(table_t const& t, std::vector<int> const& p, int side) {
    int n = static_cast<int>(t.size());
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (p[a] == p[b])
          for (int s = 0; s < n; ++s) {
            if (side != 1 && p[t[a][s]] != p[t[b][s]])
              return false;
            if (side != 0 && p[t[s][a]] != p[t[s][b]])
              return false;
          }
    return true;
  }

  // Least congruence containing the pairs: the meet of every congruence
  // that contains them.  Returned as "same class" matrix.
  inline std::vector<std::vector<bool>>
  least_congruence(table_t const& t, std::vector<std::pair<int, int>> const& pairs, int side) {
    int                            n = static_cast<int>(t.size());
    std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, true));
    for (auto const& p : all_partitions(n)) {
      bool contains = true;
      for (auto [a, b] : pairs)
        contains = contains && p[a] == p[b];
      if (!contains || !is_congruence(t, p, side))
        continue;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (p[a] != p[b])
            rel[a][b] = false;
    }
    return rel;
  }

  // All tables of order n (n^(n*n) of them), filtered by associativity and
  // reduced up to isomorphism by trying every permutation.
  inline std::size_t count_up_to_iso(int n, std::size_t* labelled = nullptr) {
    int                            cells = n * n;
    std::vector<int>               flat(cells, 0);
    std::set<std::vector<int>>     canon;
    std::vector<std::vector<int>>  perms;
    std::vector<int>               perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do
      perms.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));
    std::size_t count = 0;
    while (true) {
      bool ok = true;
      for (int a = 0; a < n && ok; ++a)
        for (int b = 0; b < n && ok; ++b)
          for (int c = 0; c < n && ok; ++c)
            ok = flat[flat[a * n + b] * n + c] == flat[a * n + flat[b * n + c]];
      if (ok) {
        ++count;
        std::vector<int> best;
        for (auto const& p : perms) {
          // relabel x -> p[x]
          std::vector<int> q(cells);
          for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
              q[p[a] * n + p[b]] = p[flat[a * n + b]];
          if (best.empty() || q < best)
            best = q;
        }
        canon.insert(best);
      }
      int i = cells - 1;
      while (i >= 0 && flat[i] == n - 1)
        flat[i--] = 0;
      if (i < 0)
        break;
      ++flat[i];
    }
    if (labelled)
      *labelled = count;
    return canon.size();
  }

}  // namespace oracle
