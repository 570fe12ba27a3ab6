#include "sgtool/construct.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <string>

#include "sgtool/green.hpp"

namespace sgtool {

  finite_semigroup direct_product(finite_semigroup const& S,
                                  finite_semigroup const& T) {
    auto const                m = S.size(), n = T.size(), N = m * n;
    std::vector<element_type> t(N * N);
    std::vector<std::string>  labels(N);
    for (element_type s1 = 0; s1 < m; ++s1) {
      for (element_type t1 = 0; t1 < n; ++t1) {
        auto x    = s1 * n + t1;
        labels[x] = "(" + S.label(s1) + "," + T.label(t1) + ")";
        for (element_type s2 = 0; s2 < m; ++s2) {
          for (element_type t2 = 0; t2 < n; ++t2) {
            t[x * N + s2 * n + t2] = static_cast<element_type>(
                S.product(s1, s2) * n + T.product(t1, t2));
          }
        }
      }
    }
    return make_semigroup(N, std::move(t), std::move(labels));
  }

  finite_semigroup rees_matrix(finite_semigroup const& S,
                               std::size_t             I,
                               std::size_t             J,
                               sandwich_matrix const&  P,
                               bool                    with_zero) {
    if (I == 0 || J == 0 || P.rows != J || P.cols != I
        || P.entries.size() != I * J) {
      throw sgtool_error(error_kind::invalid_parameters,
                         "sandwich matrix must be J x I");
    }
    auto const m = S.size();
    for (std::size_t k = 0; k < P.entries.size(); ++k) {
      auto e = P.entries[k];
      if (e == sandwich_zero) {
        if (!with_zero) {
          throw sgtool_error(error_kind::zero_entry_without_zero_mode,
                             "zero sandwich entry",
                             {k / I, k % I});
        }
      } else if (e < 0 || static_cast<std::size_t>(e) >= m) {
        throw sgtool_error(error_kind::not_closed,
                           "sandwich entry out of range",
                           {k / I, k % I});
      }
    }
    std::size_t const         base = I * m * J;
    std::size_t const         N    = base + (with_zero ? 1 : 0);
    element_type const        zero = static_cast<element_type>(base);
    std::vector<element_type> t(N * N, zero);
    std::vector<std::string>  labels(N);
    auto index = [&](std::size_t i, std::size_t s, std::size_t j) {
      return static_cast<element_type>((i * m + s) * J + j);
    };
    for (std::size_t i = 0; i < I; ++i) {
      for (element_type s = 0; s < m; ++s) {
        for (std::size_t j = 0; j < J; ++j) {
          auto x    = index(i, s, j);
          labels[x] = "(" + std::to_string(i + 1) + "," + S.label(s) + ","
                      + std::to_string(j + 1) + ")";
          for (std::size_t k = 0; k < I; ++k) {
            auto p = P.at(j, k);
            for (element_type u = 0; u < m; ++u) {
              for (std::size_t l = 0; l < J; ++l) {
                auto y = index(k, u, l);
                t[x * N + y] =
                    p == sandwich_zero
                        ? zero
                        : index(i,
                                S.product(S.product(s, static_cast<element_type>(p)), u),
                                l);
              }
            }
          }
        }
      }
    }
    if (with_zero) {
      labels[zero] = "0";
    }
    return make_semigroup(N, std::move(t), std::move(labels));
  }

  finite_semigroup brandt(finite_semigroup const& S, std::size_t I) {
    if (I == 0) {
      throw sgtool_error(error_kind::invalid_parameters, "empty index set");
    }
    auto const                m    = S.size();
    std::size_t const         base = I * m * I, N = base + 1;
    element_type const        zero = static_cast<element_type>(base);
    std::vector<element_type> t(N * N, zero);
    std::vector<std::string>  labels(N);
    auto index = [&](std::size_t i, std::size_t s, std::size_t j) {
      return static_cast<element_type>((i * m + s) * I + j);
    };
    for (std::size_t i = 0; i < I; ++i) {
      for (element_type s = 0; s < m; ++s) {
        for (std::size_t j = 0; j < I; ++j) {
          auto x    = index(i, s, j);
          labels[x] = "(" + std::to_string(i + 1) + "," + S.label(s) + ","
                      + std::to_string(j + 1) + ")";
          for (element_type u = 0; u < m; ++u) {
            for (std::size_t l = 0; l < I; ++l) {
              t[x * N + index(j, u, l)] = index(i, S.product(s, u), l);
            }
          }
        }
      }
    }
    labels[zero] = "0";
    return make_semigroup(N, std::move(t), std::move(labels));
  }

  bool is_homomorphism(finite_semigroup const&          S,
                       finite_semigroup const&          T,
                       std::vector<element_type> const& f) {
    if (f.size() != S.size()) {
      return false;
    }
    for (auto v : f) {
      if (v >= T.size()) {
        return false;
      }
    }
    for (element_type a = 0; a < S.size(); ++a) {
      for (element_type b = 0; b < S.size(); ++b) {
        if (f[S.product(a, b)] != T.product(f[a], f[b])) {
          return false;
        }
      }
    }
    return true;
  }

  namespace {
    std::vector<std::size_t> hom_failure(finite_semigroup const&          S,
                                         finite_semigroup const&          T,
                                         std::vector<element_type> const& f) {
      if (f.size() != S.size()) {
        return {S.size(), f.size()};
      }
      for (element_type a = 0; a < S.size(); ++a) {
        if (f[a] >= T.size()) {
          return {a};
        }
      }
      for (element_type a = 0; a < S.size(); ++a) {
        for (element_type b = 0; b < S.size(); ++b) {
          if (f[S.product(a, b)] != T.product(f[a], f[b])) {
            return {a, b};
          }
        }
      }
      return {};
    }
  }  // namespace

  std::vector<std::size_t> component_offsets(semilattice_diagram const& D) {
    std::vector<std::size_t> off(D.components.size() + 1, 0);
    for (std::size_t a = 0; a < D.components.size(); ++a) {
      off[a + 1] = off[a] + D.components[a].size();
    }
    return off;
  }

  finite_semigroup strong_semilattice(semilattice_diagram const& D) {
    auto const& Y = D.Y;
    auto const  k = Y.size();
    if (!Y.flags().semilattice) {
      throw sgtool_error(error_kind::not_a_semilattice,
                         "structure semigroup is not a semilattice");
    }
    if (D.components.size() != k) {
      throw sgtool_error(error_kind::invalid_parameters,
                         "one component per element of Y is required");
    }
    auto geq = [&](element_type a, element_type b) {
      return Y.product(a, b) == b;
    };
    std::vector<std::vector<std::vector<element_type>>> phi(
        k, std::vector<std::vector<element_type>>(k));
    for (element_type a = 0; a < k; ++a) {
      for (element_type b = 0; b < k; ++b) {
        if (!geq(a, b)) {
          if (D.homs.count({a, b})) {
            throw sgtool_error(error_kind::invalid_parameters,
                               "map given for incomparable pair",
                               {a, b});
          }
          continue;
        }
        auto it = D.homs.find({a, b});
        if (it == D.homs.end()) {
          if (a != b) {
            throw sgtool_error(error_kind::missing_homomorphism,
                               "no map for a >= b", {a, b});
          }
          phi[a][a].resize(D.components[a].size());
          std::iota(phi[a][a].begin(), phi[a][a].end(), 0);
          continue;
        }
        phi[a][b] = it->second;
        auto w = hom_failure(D.components[a], D.components[b], phi[a][b]);
        if (!w.empty()) {
          std::vector<std::size_t> wit{a, b};
          wit.insert(wit.end(), w.begin(), w.end());
          throw sgtool_error(error_kind::not_a_homomorphism,
                             "component map is not a homomorphism", wit);
        }
        if (a == b) {
          for (element_type x = 0; x < phi[a][a].size(); ++x) {
            if (phi[a][a][x] != x) {
              throw sgtool_error(error_kind::identity_violation,
                                 "diagonal map is not the identity",
                                 {a, x});
            }
          }
        }
      }
    }
    for (element_type a = 0; a < k; ++a) {
      for (element_type b = 0; b < k; ++b) {
        for (element_type c = 0; c < k; ++c) {
          if (!geq(a, b) || !geq(b, c)) {
            continue;
          }
          for (element_type x = 0; x < D.components[a].size(); ++x) {
            if (phi[b][c][phi[a][b][x]] != phi[a][c][x]) {
              throw sgtool_error(error_kind::composition_violation,
                                 "maps do not compose", {a, b, c, x});
            }
          }
        }
      }
    }
    auto const                off = component_offsets(D);
    auto const                N   = off[k];
    std::vector<element_type> t(N * N);
    std::vector<std::string>  labels(N);
    for (element_type a = 0; a < k; ++a) {
      for (element_type x = 0; x < D.components[a].size(); ++x) {
        auto ix    = off[a] + x;
        labels[ix] = Y.label(a) + ":" + D.components[a].label(x);
        for (element_type b = 0; b < k; ++b) {
          auto ab = Y.product(a, b);
          for (element_type y = 0; y < D.components[b].size(); ++y) {
            auto v = D.components[ab].product(phi[a][ab][x], phi[b][ab][y]);
            t[ix * N + off[b] + y] = static_cast<element_type>(off[ab] + v);
          }
        }
      }
    }
    return make_semigroup(N, std::move(t), std::move(labels));
  }

  finite_semigroup u_construction(finite_semigroup const&          S,
                                  finite_semigroup const&          T,
                                  std::vector<element_type> const& theta,
                                  std::vector<element_type> const& phi) {
    for (auto const* f : {&theta, &phi}) {
      auto w = hom_failure(S, T, *f);
      if (!w.empty()) {
        throw sgtool_error(error_kind::not_a_homomorphism,
                           f == &theta ? "theta" : "phi", w);
      }
    }
    auto const                m = S.size(), n = T.size(), N = m + n + 1;
    element_type const        zero = static_cast<element_type>(m + n);
    std::vector<element_type> t(N * N, zero);
    std::vector<std::string>  labels(N);
    for (element_type a = 0; a < m; ++a) {
      labels[a] = S.label(a);
      for (element_type b = 0; b < m; ++b) {
        t[a * N + b] = S.product(a, b);
      }
      for (element_type x = 0; x < n; ++x) {
        t[a * N + m + x]       = static_cast<element_type>(m + T.product(theta[a], x));
        t[(m + x) * N + a]     = static_cast<element_type>(m + T.product(x, phi[a]));
      }
    }
    for (element_type x = 0; x < n; ++x) {
      labels[m + x] = "x_" + T.label(x);
    }
    labels[zero] = "0";
    return make_semigroup(N, std::move(t), std::move(labels));
  }

  cs_decomposition completely_simple_decomposition(finite_semigroup const& S) {
    if (!S.flags().completely_regular) {
      for (element_type a = 0; a < S.size(); ++a) {
        if (!in_subgroup(S, a)) {
          throw sgtool_error(error_kind::not_completely_regular,
                             "element lies in no subgroup", {a});
        }
      }
    }
    auto const       G = green(S);
    cs_decomposition out;
    out.components        = classes_of(G.j);
    out.element_component = G.j;
    auto const                k = G.num_j;
    std::vector<element_type> t(k * k);
    for (std::size_t x = 0; x < k; ++x) {
      for (std::size_t y = 0; y < k; ++y) {
        t[x * k + y] = static_cast<element_type>(
            G.j[S.product(out.components[x][0], out.components[y][0])]);
      }
    }
    out.Y = make_semigroup(k, std::move(t));
    for (auto const& C : out.components) {
      auto sub = subsemigroup(S, C);
      if (green(sub).num_j != 1) {
        throw sgtool_error(error_kind::component_not_completely_simple,
                           "J-class is not simple", {C[0]});
      }
      out.component_semigroups.push_back(std::move(sub));
    }
    return out;
  }

  rees_coords rees_coordinates(finite_semigroup const& S) {
    auto const G    = green(S);
    auto const zero = S.zero();
    rees_coords out;
    std::vector<element_type> D;
    if (G.num_j == 1) {
      out.with_zero = false;
      D.resize(S.size());
      std::iota(D.begin(), D.end(), 0);
    } else if (zero && G.num_j == 2) {
      out.with_zero = true;
      for (element_type a = 0; a < S.size(); ++a) {
        if (a != *zero) {
          D.push_back(a);
        }
      }
      bool null = true;
      for (auto a : D) {
        for (auto b : D) {
          null = null && S.product(a, b) == *zero;
        }
      }
      if (null) {
        throw sgtool_error(error_kind::not_completely_zero_simple,
                           "S^2 = 0");
      }
    } else {
      throw sgtool_error(error_kind::not_completely_zero_simple,
                         "more than one nonzero J-class",
                         {G.num_j});
    }
    std::optional<element_type> e;
    for (auto a : D) {
      if (S.product(a, a) == a) {
        e = a;
        break;
      }
    }
    if (!e) {
      throw sgtool_error(error_kind::not_completely_zero_simple,
                         "no idempotent in the nonzero J-class");
    }
    std::vector<element_type> H;
    for (auto a : D) {
      if (G.h[a] == G.h[*e]) {
        H.push_back(a);
      }
    }
    out.group = subsemigroup(S, H);
    std::vector<std::size_t> rows, cols;  // R- and L-class ids in order
    for (auto a : D) {
      if (std::find(rows.begin(), rows.end(), G.r[a]) == rows.end()) {
        rows.push_back(G.r[a]);
      }
      if (std::find(cols.begin(), cols.end(), G.l[a]) == cols.end()) {
        cols.push_back(G.l[a]);
      }
    }
    out.I = rows.size();
    out.J = cols.size();
    std::vector<element_type> r(out.I), q(out.J);
    for (std::size_t i = 0; i < out.I; ++i) {
      for (auto a : D) {
        if (G.r[a] == rows[i] && G.l[a] == G.l[*e]) {
          r[i] = a;
          break;
        }
      }
    }
    for (std::size_t j = 0; j < out.J; ++j) {
      for (auto a : D) {
        if (G.r[a] == G.r[*e] && G.l[a] == cols[j]) {
          q[j] = a;
          break;
        }
      }
    }
    auto h_index = [&](element_type a) -> std::int64_t {
      auto it = std::find(H.begin(), H.end(), a);
      return it == H.end() ? sandwich_zero : it - H.begin();
    };
    out.P.rows = out.J;
    out.P.cols = out.I;
    for (std::size_t j = 0; j < out.J; ++j) {
      for (std::size_t i = 0; i < out.I; ++i) {
        out.P.entries.push_back(h_index(S.product(q[j], r[i])));
      }
    }
    auto const m = H.size();
    out.to_rees.assign(S.size(), 0);
    for (auto a : D) {
      auto i = static_cast<std::size_t>(
          std::find(rows.begin(), rows.end(), G.r[a]) - rows.begin());
      auto j = static_cast<std::size_t>(
          std::find(cols.begin(), cols.end(), G.l[a]) - cols.begin());
      bool found = false;
      for (std::size_t g = 0; g < m && !found; ++g) {
        if (S.product(S.product(r[i], H[g]), q[j]) == a) {
          out.to_rees[a] = static_cast<element_type>((i * m + g) * out.J + j);
          found          = true;
        }
      }
      if (!found) {
        throw sgtool_error(error_kind::not_completely_zero_simple,
                           "element has no Rees coordinates", {a});
      }
    }
    if (out.with_zero) {
      out.to_rees[*zero] = static_cast<element_type>(out.I * m * out.J);
    }
    auto R = rees_matrix(out.group, out.I, out.J, out.P, out.with_zero);
    for (element_type a = 0; a < S.size(); ++a) {
      for (element_type b = 0; b < S.size(); ++b) {
        if (out.to_rees[S.product(a, b)]
            != R.product(out.to_rees[a], out.to_rees[b])) {
          throw sgtool_error(error_kind::not_completely_zero_simple,
                             "coordinates do not respect products", {a, b});
        }
      }
    }
    return out;
  }

  namespace {
    using signature = std::array<std::size_t, 7>;

    std::vector<signature> element_signatures(finite_semigroup const& S) {
      auto const             n = S.size();
      std::vector<signature> sig(n);
      for (element_type a = 0; a < n; ++a) {
        // index and period of the monogenic subsemigroup
        std::vector<std::size_t> seen(n, 0);
        element_type             p = a;
        std::size_t              k = 1;
        while (!seen[p]) {
          seen[p] = k++;
          p       = S.product(p, a);
        }
        std::size_t index = seen[p], period = k - seen[p];
        std::size_t right = 0, left = 0, fixed_r = 0, fixed_l = 0, comm = 0;
        std::vector<char> rs(n, 0), ls(n, 0);
        for (element_type s = 0; s < n; ++s) {
          rs[S.product(a, s)] = 1;
          ls[S.product(s, a)] = 1;
          fixed_r += S.product(a, s) == a;
          fixed_l += S.product(s, a) == a;
          comm += S.product(a, s) == S.product(s, a);
        }
        for (element_type s = 0; s < n; ++s) {
          right += rs[s];
          left += ls[s];
        }
        sig[a] = {index, period, right, left, fixed_r, fixed_l, comm};
      }
      return sig;
    }
  }  // namespace

  std::optional<std::vector<element_type>>
  find_isomorphism(finite_semigroup const& S, finite_semigroup const& T) {
    auto const n = S.size();
    if (n != T.size()) {
      return std::nullopt;
    }
    auto sigS = element_signatures(S), sigT = element_signatures(T);
    {
      auto a = sigS, b = sigT;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (a != b) {
        return std::nullopt;
      }
    }
    // Generators of S, taking rare signatures first so that their images
    // have few candidates.
    std::vector<element_type> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) {
      auto cx = std::count(sigS.begin(), sigS.end(), sigS[x]);
      auto cy = std::count(sigS.begin(), sigS.end(), sigS[y]);
      return cx < cy;
    });
    std::vector<element_type> gens;
    std::vector<char>         covered(n, 0);
    for (auto a : order) {
      if (!covered[a]) {
        gens.push_back(a);
        for (auto c : closure(S, gens)) {
          covered[c] = 1;
        }
      }
    }

    constexpr element_type    unset = ~element_type(0);
    std::vector<element_type> f(n, unset);
    std::vector<element_type> used_by(n, unset);

    // Extends f along products with assigned generators; returns false on a
    // clash.  Writes undo information into `trail`.
    auto extend = [&](std::vector<element_type>& trail) {
      std::vector<element_type> queue;
      for (element_type a = 0; a < n; ++a) {
        if (f[a] != unset) {
          queue.push_back(a);
        }
      }
      for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        auto x = queue[qi];
        for (auto g : gens) {
          if (f[g] == unset) {
            continue;
          }
          for (int side = 0; side < 2; ++side) {
            auto xy  = side == 0 ? S.product(x, g) : S.product(g, x);
            auto img = side == 0 ? T.product(f[x], f[g]) : T.product(f[g], f[x]);
            if (f[xy] == unset) {
              if (used_by[img] != unset || sigS[xy] != sigT[img]) {
                return false;
              }
              f[xy]        = img;
              used_by[img] = xy;
              trail.push_back(xy);
              queue.push_back(xy);
            } else if (f[xy] != img) {
              return false;
            }
          }
        }
      }
      return true;
    };

    std::function<bool(std::size_t)> rec = [&](std::size_t gi) -> bool {
      if (gi == gens.size()) {
        for (element_type a = 0; a < n; ++a) {
          for (element_type b = 0; b < n; ++b) {
            if (f[S.product(a, b)] != T.product(f[a], f[b])) {
              return false;
            }
          }
        }
        return true;
      }
      auto g = gens[gi];
      if (f[g] != unset) {
        return rec(gi + 1);
      }
      for (element_type c = 0; c < n; ++c) {
        if (used_by[c] != unset || sigS[g] != sigT[c]) {
          continue;
        }
        std::vector<element_type> trail{g};
        f[g]       = c;
        used_by[c] = g;
        if (extend(trail) && rec(gi + 1)) {
          return true;
        }
        for (auto x : trail) {
          used_by[f[x]] = unset;
          f[x]          = unset;
        }
      }
      return false;
    };
    if (rec(0)) {
      return f;
    }
    return std::nullopt;
  }

}  // namespace sgtool
