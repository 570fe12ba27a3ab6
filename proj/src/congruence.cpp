#include "sgtool/congruence.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

namespace sgtool {

  namespace {
    struct union_find {
      std::vector<std::size_t> parent;

      explicit union_find(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
      }

      std::size_t find(std::size_t x) {
        while (parent[x] != x) {
          parent[x] = parent[parent[x]];
          x         = parent[x];
        }
        return x;
      }

      bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) {
          return false;
        }
        if (a > b) {
          std::swap(a, b);
        }
        parent[b] = a;
        return true;
      }
    };
  }  // namespace

  std::vector<std::size_t>
  normalize_partition(std::vector<std::size_t> const& p) {
    std::vector<std::size_t> out(p.size());
    std::vector<std::size_t> seen_ids;
    std::vector<std::size_t> map;
    for (std::size_t i = 0; i < p.size(); ++i) {
      auto it = std::find(seen_ids.begin(), seen_ids.end(), p[i]);
      if (it == seen_ids.end()) {
        seen_ids.push_back(p[i]);
        out[i] = seen_ids.size() - 1;
      } else {
        out[i] = static_cast<std::size_t>(it - seen_ids.begin());
      }
    }
    return out;
  }

  std::size_t count_classes(std::vector<std::size_t> const& p) {
    std::vector<std::size_t> q = p;
    std::sort(q.begin(), q.end());
    return static_cast<std::size_t>(std::unique(q.begin(), q.end())
                                    - q.begin());
  }

  bool is_congruence(finite_semigroup const&         S,
                     std::vector<std::size_t> const& p,
                     congruence_side                 side) {
    auto const n = S.size();
    for (element_type a = 0; a < n; ++a) {
      for (element_type b = a + 1; b < n; ++b) {
        if (p[a] != p[b]) {
          continue;
        }
        for (element_type s = 0; s < n; ++s) {
          if (side != congruence_side::left
              && p[S.product(a, s)] != p[S.product(b, s)]) {
            return false;
          }
          if (side != congruence_side::right
              && p[S.product(s, a)] != p[S.product(s, b)]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  congruence congruence_from_pairs(
      finite_semigroup const&                                   S,
      std::vector<std::pair<element_type, element_type>> const& pairs,
      congruence_side                                           side) {
    auto const n = S.size();
    union_find uf(n);
    // Each merged pair is queued once; translating it by every s yields
    // the pairs that must also be merged.  The queue empties exactly when
    // no further merge changes the class count.
    std::deque<std::pair<element_type, element_type>> work;
    for (auto [a, b] : pairs) {
      if (a >= n || b >= n) {
        throw sgtool_error(error_kind::invalid_parameters,
                           "pair outside the semigroup",
                           {a, b});
      }
      if (uf.unite(a, b)) {
        work.emplace_back(a, b);
      }
    }
    while (!work.empty()) {
      auto [a, b] = work.front();
      work.pop_front();
      for (element_type s = 0; s < n; ++s) {
        if (side != congruence_side::left) {
          auto x = S.product(a, s), y = S.product(b, s);
          if (uf.unite(x, y)) {
            work.emplace_back(x, y);
          }
        }
        if (side != congruence_side::right) {
          auto x = S.product(s, a), y = S.product(s, b);
          if (uf.unite(x, y)) {
            work.emplace_back(x, y);
          }
        }
      }
    }
    congruence c;
    c.side = side;
    c.partition.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      c.partition[i] = uf.find(i);
    }
    c.partition   = normalize_partition(c.partition);
    c.num_classes = count_classes(c.partition);
    return c;
  }

  quotient_result quotient(finite_semigroup const& S, congruence const& c) {
    if (c.partition.size() != S.size()
        || !is_congruence(S, c.partition, congruence_side::two_sided)) {
      throw sgtool_error(error_kind::not_two_sided,
                         "partition is not a two-sided congruence");
    }
    auto p = normalize_partition(c.partition);
    auto k = count_classes(p);
    std::vector<element_type> rep(k);
    for (std::size_t a = S.size(); a-- > 0;) {
      rep[p[a]] = static_cast<element_type>(a);
    }
    std::vector<element_type> t(k * k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        t[i * k + j] = static_cast<element_type>(p[S.product(rep[i], rep[j])]);
      }
    }
    quotient_result r{finite_semigroup::unchecked(k, std::move(t)), {}};
    r.projection.assign(p.begin(), p.end());
    return r;
  }

  quotient_result rees_quotient(finite_semigroup const&          S,
                                std::vector<element_type> const& ideal) {
    auto const n = S.size();
    auto       m = subset_mask(n, ideal);
    if (ideal.empty()) {
      throw sgtool_error(error_kind::not_an_ideal, "empty ideal");
    }
    for (auto a : ideal) {
      for (element_type s = 0; s < n; ++s) {
        if (!m[S.product(a, s)] || !m[S.product(s, a)]) {
          throw sgtool_error(error_kind::not_an_ideal,
                             "ideal not closed under multiplication by S",
                             {a, s});
        }
      }
    }
    std::vector<element_type> proj(n);
    element_type              next = 0;
    for (element_type a = 0; a < n; ++a) {
      if (!m[a]) {
        proj[a] = next++;
      }
    }
    element_type const zero = next;
    for (element_type a = 0; a < n; ++a) {
      if (m[a]) {
        proj[a] = zero;
      }
    }
    std::size_t const         k = zero + 1;
    std::vector<element_type> t(k * k, zero);
    std::vector<std::string>  labels;
    for (element_type a = 0; a < n; ++a) {
      if (m[a]) {
        continue;
      }
      for (element_type b = 0; b < n; ++b) {
        if (!m[b]) {
          t[proj[a] * k + proj[b]] = proj[S.product(a, b)];
        }
      }
      if (!S.labels().empty()) {
        labels.push_back(S.label(a));
      }
    }
    if (!labels.empty()) {
      labels.push_back("0");
    }
    return {finite_semigroup::unchecked(k, std::move(t), std::move(labels)),
            std::move(proj)};
  }

}  // namespace sgtool
