#include "sgtool/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

namespace sgtool {

  namespace {
    using table_t = std::vector<element_type>;

    std::vector<std::vector<element_type>> all_permutations(std::size_t n) {
      std::vector<std::vector<element_type>> out;
      std::vector<element_type>              p(n);
      std::iota(p.begin(), p.end(), 0);
      do {
        out.push_back(p);
      } while (std::next_permutation(p.begin(), p.end()));
      return out;
    }

    // Compares the relabelled table under p against `best` cell by cell in
    // row-major order; -1 when smaller, 0 when equal, 1 when larger.
    int compare_relabelled(std::size_t                      n,
                           table_t const&                   t,
                           std::vector<element_type> const& p,
                           std::vector<element_type> const& inv,
                           table_t const&                   best) {
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          // cell (a, b) of the relabelled table is p(t[inv a][inv b])
          auto v = p[t[inv[a] * n + inv[b]]];
          if (v != best[a * n + b]) {
            return v < best[a * n + b] ? -1 : 1;
          }
        }
      }
      return 0;
    }

    table_t relabel(std::size_t                      n,
                    table_t const&                   t,
                    std::vector<element_type> const& p) {
      table_t q(n * n);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          q[p[a] * n + p[b]] = p[t[a * n + b]];
        }
      }
      return q;
    }

    std::vector<element_type> inverse(std::vector<element_type> const& p) {
      std::vector<element_type> inv(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) {
        inv[p[i]] = static_cast<element_type>(i);
      }
      return inv;
    }

    struct searcher {
      std::size_t                              n;
      std::vector<std::vector<element_type>> const* perms;
      std::vector<std::vector<element_type>> const* inverses;
      table_t                                  t;
      std::size_t                              labelled = 0;
      std::vector<table_t>                     found;

      static constexpr element_type unset = ~element_type(0);

      element_type at(std::size_t a, std::size_t b) const {
        return t[a * n + b];
      }

      // Checks every associativity instance that reads cell (a, b), given
      // that only cells before it in row-major order are filled.
      bool consistent(std::size_t a, std::size_t b) const {
        auto v = at(a, b);
        // (a b) z = a (b z)
        for (std::size_t z = 0; z < n; ++z) {
          auto l = at(v, z), bz = at(b, z);
          if (l == unset || bz == unset) {
            continue;
          }
          auto r = at(a, bz);
          if (r != unset && l != r) {
            return false;
          }
        }
        // (x a) b = x (a b)
        for (std::size_t x = 0; x < n; ++x) {
          auto xa = at(x, a);
          if (xa == unset) {
            continue;
          }
          auto l = at(xa, b), r = at(x, v);
          if (l != unset && r != unset && l != r) {
            return false;
          }
        }
        // (x y) b = x (y b) with xy = a, and (a y) z = a (y z) with yz = b
        for (std::size_t x = 0; x < n; ++x) {
          for (std::size_t y = 0; y < n; ++y) {
            if (at(x, y) == a) {
              auto yb = at(y, b);
              if (yb != unset) {
                auto r = at(x, yb);
                if (r != unset && r != v) {
                  return false;
                }
              }
            }
            if (at(x, y) == b) {
              auto ax = at(a, x);
              if (ax != unset) {
                auto l = at(ax, y);
                if (l != unset && l != v) {
                  return false;
                }
              }
            }
          }
        }
        return true;
      }

      bool is_canonical() const {
        for (std::size_t i = 1; i < perms->size(); ++i) {
          if (compare_relabelled(n, t, (*perms)[i], (*inverses)[i], t) < 0) {
            return false;
          }
        }
        return true;
      }

      void run(std::size_t cell) {
        if (cell == n * n) {
          ++labelled;
          if (is_canonical()) {
            found.push_back(t);
          }
          return;
        }
        auto a = cell / n, b = cell % n;
        for (element_type v = 0; v < n; ++v) {
          t[cell] = v;
          if (consistent(a, b)) {
            run(cell + 1);
          }
        }
        t[cell] = unset;
      }
    };
  }  // namespace

  std::vector<element_type> canonical_table(finite_semigroup const& S) {
    auto const n     = S.size();
    auto       perms = all_permutations(n);
    table_t    best  = S.table();
    for (auto const& p : perms) {
      auto inv = inverse(p);
      if (compare_relabelled(n, S.table(), p, inv, best) < 0) {
        best = relabel(n, S.table(), p);
      }
    }
    return best;
  }

  finite_semigroup canonical_form(finite_semigroup const& S) {
    return finite_semigroup::unchecked(S.size(), canonical_table(S));
  }

  enumeration_result enumerate_semigroups(std::size_t order,
                                          std::size_t jobs,
                                          bool        allow_order_five) {
    if (order == 0) {
      throw sgtool_error(error_kind::invalid_parameters, "order must be positive");
    }
    if (order > max_enumeration_order || (order == 5 && !allow_order_five)) {
      throw sgtool_error(error_kind::order_too_large,
                         order > max_enumeration_order
                             ? "orders above 5 are not supported"
                             : "order 5 needs the explicit opt-in flag",
                         {order});
    }
    auto const n     = order;
    auto const perms = all_permutations(n);
    std::vector<std::vector<element_type>> inverses;
    for (auto const& p : perms) {
      inverses.push_back(inverse(p));
    }
    // Shards are the possible values of the first two cells.
    std::size_t const shard_cells = std::min<std::size_t>(2, n * n);
    std::size_t       shards      = 1;
    for (std::size_t i = 0; i < shard_cells; ++i) {
      shards *= n;
    }
    jobs = std::max<std::size_t>(1, std::min(jobs, shards));
    std::vector<searcher> workers(
        jobs, searcher{n, &perms, &inverses, table_t(n * n, searcher::unset), 0, {}});

    auto work = [&](std::size_t w) {
      auto& s = workers[w];
      for (std::size_t shard = w; shard < shards; shard += jobs) {
        std::fill(s.t.begin(), s.t.end(), searcher::unset);
        std::size_t code = shard;
        bool        ok   = true;
        for (std::size_t c = shard_cells; c-- > 0;) {
          s.t[c] = static_cast<element_type>(code % n);
          code /= n;
        }
        for (std::size_t c = 0; c < shard_cells && ok; ++c) {
          ok = s.consistent(c / n, c % n);
        }
        if (ok) {
          s.run(shard_cells);
        }
      }
    };
    if (jobs == 1) {
      work(0);
    } else {
      std::vector<std::thread> threads;
      for (std::size_t w = 0; w < jobs; ++w) {
        threads.emplace_back(work, w);
      }
      for (auto& th : threads) {
        th.join();
      }
    }
    enumeration_result res;
    res.order = order;
    std::vector<table_t> all;
    for (auto& s : workers) {
      res.labelled_count += s.labelled;
      all.insert(all.end(), s.found.begin(), s.found.end());
    }
    std::sort(all.begin(), all.end());
    for (auto& t : all) {
      res.semigroups.push_back(finite_semigroup::unchecked(n, std::move(t)));
    }
    return res;
  }

}  // namespace sgtool
