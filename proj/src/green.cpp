#include "sgtool/green.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "sgtool/congruence.hpp"

namespace sgtool {

  namespace {
    // Classes of the equivalence "x reaches y and y reaches x".
    std::vector<std::size_t> mutual_classes(relation_matrix const& reach) {
      auto const               n = reach.size();
      std::vector<std::size_t> cls(n, n);
      std::size_t              next = 0;
      for (std::size_t a = 0; a < n; ++a) {
        if (cls[a] != n) {
          continue;
        }
        cls[a] = next;
        for (std::size_t b = a + 1; b < n; ++b) {
          if (cls[b] == n && reach[a][b] && reach[b][a]) {
            cls[b] = next;
          }
        }
        ++next;
      }
      return cls;
    }

    relation_matrix class_preorder(relation_matrix const&          reach,
                                   std::vector<std::size_t> const& cls,
                                   std::size_t                     k) {
      std::vector<std::size_t> rep(k);
      for (std::size_t a = cls.size(); a-- > 0;) {
        rep[cls[a]] = a;
      }
      relation_matrix leq(k, std::vector<char>(k, 0));
      for (std::size_t x = 0; x < k; ++x) {
        for (std::size_t y = 0; y < k; ++y) {
          leq[x][y] = reach[rep[y]][rep[x]];
        }
      }
      return leq;
    }

    std::vector<std::size_t> meet(std::vector<std::size_t> const& p,
                                  std::vector<std::size_t> const& q) {
      auto const               n = p.size();
      std::vector<std::size_t> out(n);
      for (std::size_t a = 0; a < n; ++a) {
        out[a] = p[a] * n + q[a];
      }
      return normalize_partition(out);
    }

    std::vector<std::size_t> join(std::vector<std::size_t> const& p,
                                  std::vector<std::size_t> const& q) {
      auto const               n = p.size();
      std::vector<std::size_t> parent(n);
      std::iota(parent.begin(), parent.end(), 0);
      std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
      };
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
          if (p[a] == p[b] || q[a] == q[b]) {
            parent[find(b)] = find(a);
          }
        }
      }
      std::vector<std::size_t> out(n);
      for (std::size_t a = 0; a < n; ++a) {
        out[a] = find(a);
      }
      return normalize_partition(out);
    }
  }  // namespace

  std::vector<std::vector<element_type>>
  classes_of(std::vector<std::size_t> const& partition) {
    std::size_t k = 0;
    for (auto c : partition) {
      k = std::max(k, c + 1);
    }
    std::vector<std::vector<element_type>> out(k);
    for (std::size_t a = 0; a < partition.size(); ++a) {
      out[partition[a]].push_back(static_cast<element_type>(a));
    }
    return out;
  }

  green_structure green(finite_semigroup const& S) {
    auto const      n = S.size();
    green_structure G;
    G.right_reach.assign(n, std::vector<char>(n, 0));
    G.left_reach.assign(n, std::vector<char>(n, 0));
    G.two_reach.assign(n, std::vector<char>(n, 0));
    for (element_type a = 0; a < n; ++a) {
      G.right_reach[a][a] = G.left_reach[a][a] = G.two_reach[a][a] = 1;
      for (element_type s = 0; s < n; ++s) {
        auto as = S.product(a, s), sa = S.product(s, a);
        G.right_reach[a][as] = 1;
        G.left_reach[a][sa]  = 1;
        G.two_reach[a][as]   = 1;
        G.two_reach[a][sa]   = 1;
        for (element_type t = 0; t < n; ++t) {
          G.two_reach[a][S.product(sa, t)] = 1;
        }
      }
    }
    G.r     = mutual_classes(G.right_reach);
    G.l     = mutual_classes(G.left_reach);
    G.j     = mutual_classes(G.two_reach);
    G.h     = meet(G.r, G.l);
    G.d     = join(G.r, G.l);
    G.num_r = count_classes(G.r);
    G.num_l = count_classes(G.l);
    G.num_h = count_classes(G.h);
    G.num_d = count_classes(G.d);
    G.num_j = count_classes(G.j);
    G.r_preorder = class_preorder(G.right_reach, G.r, G.num_r);
    G.l_preorder = class_preorder(G.left_reach, G.l, G.num_l);
    G.j_preorder = class_preorder(G.two_reach, G.j, G.num_j);
    return G;
  }

  std::vector<element_type>
  min_generating_set(finite_semigroup const&,
                     green_structure const&           G,
                     std::vector<element_type> const& I) {
    std::vector<element_type> gens;
    std::vector<char>         class_done(G.num_r, 0);
    std::vector<element_type> sorted = I;
    std::sort(sorted.begin(), sorted.end());
    for (auto a : sorted) {
      auto ca = G.r[a];
      if (class_done[ca]) {
        continue;
      }
      class_done[ca] = 1;
      bool maximal   = true;
      for (auto b : sorted) {
        if (G.r[b] != ca && G.r_leq(a, b)) {
          maximal = false;
          break;
        }
      }
      if (maximal) {
        gens.push_back(a);
      }
    }
    return gens;
  }

  right_ideal right_ideal_generated(finite_semigroup const&          S,
                                    green_structure const&           G,
                                    std::vector<element_type> const& X) {
    if (X.empty()) {
      throw sgtool_error(error_kind::empty_generator_set,
                         "right ideal needs a generator");
    }
    std::vector<char> in(S.size(), 0);
    for (auto x : X) {
      for (element_type b = 0; b < S.size(); ++b) {
        if (G.right_reach[x][b]) {
          in[b] = 1;
        }
      }
    }
    right_ideal I;
    for (element_type b = 0; b < S.size(); ++b) {
      if (in[b]) {
        I.elements.push_back(b);
      }
    }
    I.generators         = X;
    I.canonical_min_gens = min_generating_set(S, G, I.elements);
    return I;
  }

  right_ideal right_ideal_generated(finite_semigroup const&          S,
                                    std::vector<element_type> const& X) {
    return right_ideal_generated(S, green(S), X);
  }

  std::vector<std::vector<element_type>>
  all_right_ideals(finite_semigroup const&,
                   green_structure const&  G,
                   std::size_t             limit) {
    // Nonempty right ideals correspond to nonempty antichains of R-classes
    // (their maximal classes), so enumerate antichains.
    auto const                             k  = G.num_r;
    auto const                             cl = classes_of(G.r);
    std::vector<std::vector<element_type>> out;
    std::vector<std::size_t>               chosen;
    auto comparable = [&](std::size_t x, std::size_t y) {
      return G.r_preorder[x][y] || G.r_preorder[y][x];
    };
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
      for (std::size_t c = start; c < k; ++c) {
        bool ok = true;
        for (auto d : chosen) {
          if (comparable(c, d)) {
            ok = false;
            break;
          }
        }
        if (!ok) {
          continue;
        }
        chosen.push_back(c);
        std::vector<element_type> elems;
        for (std::size_t x = 0; x < k; ++x) {
          for (auto d : chosen) {
            if (G.r_preorder[x][d]) {
              elems.insert(elems.end(), cl[x].begin(), cl[x].end());
              break;
            }
          }
        }
        std::sort(elems.begin(), elems.end());
        out.push_back(std::move(elems));
        if (out.size() > limit) {
          throw sgtool_error(error_kind::unsupported,
                             "too many right ideals to enumerate");
        }
        rec(c + 1);
        chosen.pop_back();
      }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
  }

  r_poset poset_from_relation(relation_matrix const& leq) {
    auto const k = leq.size();
    r_poset    P;
    P.num_classes = k;
    P.leq         = leq;
    if (k == 0) {
      return P;
    }
    auto lt = [&](std::size_t x, std::size_t y) {
      return x != y && leq[x][y];
    };

    // Kuhn's augmenting paths on the strict comparability graph.
    std::vector<std::size_t> match_right(k, k), match_left(k, k);
    std::vector<char>        seen;
    std::function<bool(std::size_t)> augment = [&](std::size_t x) {
      for (std::size_t y = 0; y < k; ++y) {
        if (lt(x, y) && !seen[y]) {
          seen[y] = 1;
          if (match_right[y] == k || augment(match_right[y])) {
            match_right[y] = x;
            match_left[x]  = y;
            return true;
          }
        }
      }
      return false;
    };
    std::size_t matching = 0;
    for (std::size_t x = 0; x < k; ++x) {
      seen.assign(k, 0);
      if (augment(x)) {
        ++matching;
      }
    }
    P.max_antichain = k - matching;

    // Koenig: Z = vertices reachable from unmatched left vertices by
    // alternating paths; cover = (L \ Z) u (R n Z); the antichain is the
    // set of x with neither copy in the cover.
    std::vector<char> zl(k, 0), zr(k, 0);
    std::vector<std::size_t> stack;
    for (std::size_t x = 0; x < k; ++x) {
      if (match_left[x] == k) {
        zl[x] = 1;
        stack.push_back(x);
      }
    }
    while (!stack.empty()) {
      auto x = stack.back();
      stack.pop_back();
      for (std::size_t y = 0; y < k; ++y) {
        if (lt(x, y) && !zr[y] && match_left[x] != y) {
          zr[y] = 1;
          auto x2 = match_right[y];
          if (x2 != k && !zl[x2]) {
            zl[x2] = 1;
            stack.push_back(x2);
          }
        }
      }
    }
    for (std::size_t x = 0; x < k; ++x) {
      if (zl[x] && !zr[x]) {
        P.antichain.push_back(x);
      }
    }

    // Longest chain, counted in classes.
    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::vector<std::size_t> below(k, 0);
    for (std::size_t x = 0; x < k; ++x) {
      for (std::size_t y = 0; y < k; ++y) {
        below[x] += lt(y, x);
      }
    }
    std::sort(order.begin(), order.end(), [&](auto a, auto b) {
      return below[a] < below[b];
    });
    std::vector<std::size_t> best(k, 1);
    for (auto x : order) {
      for (auto y : order) {
        if (lt(y, x)) {
          best[x] = std::max(best[x], best[y] + 1);
        }
      }
      P.longest_chain = std::max(P.longest_chain, best[x]);
    }
    return P;
  }

  r_poset rpreorder_poset(finite_semigroup const& S) {
    return poset_from_relation(green(S).r_preorder);
  }

  std::string to_string(factor_tag t) {
    switch (t) {
      case factor_tag::simple: return "simple";
      case factor_tag::zero_simple: return "0-simple";
      case factor_tag::null: return "null";
    }
    return "unknown";
  }

  std::vector<principal_factor> principal_series(finite_semigroup const& S) {
    auto const G  = green(S);
    auto const cl = classes_of(G.j);
    auto const k  = G.num_j;
    // Linear extension of the J-order, bottom first.  Strictly smaller
    // classes have strictly fewer classes below them.
    std::vector<std::size_t> order(k), below(k, 0);
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t x = 0; x < k; ++x) {
      for (std::size_t y = 0; y < k; ++y) {
        below[x] += (x != y && G.j_preorder[y][x]);
      }
    }
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
      return below[a] < below[b];
    });

    std::vector<principal_factor> series;
    std::vector<element_type>     ideal;
    for (std::size_t i = 0; i < k; ++i) {
      auto const& J = cl[order[i]];
      ideal.insert(ideal.end(), J.begin(), J.end());
      std::sort(ideal.begin(), ideal.end());
      principal_factor pf{ideal, J, {}, factor_tag::simple};
      if (i == 0) {
        pf.factor = subsemigroup(S, J);
        pf.tag    = factor_tag::simple;
      } else {
        auto const m = J.size();
        std::vector<std::int64_t> pos(S.size(), -1);
        for (std::size_t t = 0; t < m; ++t) {
          pos[J[t]] = static_cast<std::int64_t>(t);
        }
        std::vector<element_type> t((m + 1) * (m + 1),
                                    static_cast<element_type>(m));
        bool                      any_inside = false;
        for (std::size_t a = 0; a < m; ++a) {
          for (std::size_t b = 0; b < m; ++b) {
            auto p = pos[S.product(J[a], J[b])];
            if (p >= 0) {
              t[a * (m + 1) + b] = static_cast<element_type>(p);
              any_inside         = true;
            }
          }
        }
        std::vector<std::string> labels;
        if (!S.labels().empty()) {
          for (auto a : J) {
            labels.push_back(S.label(a));
          }
          labels.push_back("0");
        }
        pf.factor = finite_semigroup::unchecked(m + 1, std::move(t),
                                                std::move(labels));
        pf.tag    = any_inside ? factor_tag::zero_simple : factor_tag::null;
      }
      series.push_back(std::move(pf));
    }
    return series;
  }

  kernel_socle kernel_and_socle(finite_semigroup const& S) {
    auto const   G  = green(S);
    auto const   cl = classes_of(G.r);
    kernel_socle out;
    for (std::size_t x = 0; x < G.num_j; ++x) {
      bool minimal = true;
      for (std::size_t y = 0; y < G.num_j && minimal; ++y) {
        minimal = y == x || !G.j_preorder[y][x];
      }
      if (minimal) {
        out.kernel = classes_of(G.j)[x];
        break;
      }
    }
    // In a finite semigroup every minimal R-class is a minimal right ideal.
    for (std::size_t x = 0; x < G.num_r; ++x) {
      bool minimal = true;
      for (std::size_t y = 0; y < G.num_r && minimal; ++y) {
        minimal = y == x || !G.r_preorder[y][x];
      }
      if (minimal) {
        out.minimal_right_ideals.push_back(cl[x]);
      }
    }
    if (auto z = S.zero()) {
      auto const zc = G.r[*z];
      std::vector<element_type> socle{*z};
      for (std::size_t x = 0; x < G.num_r; ++x) {
        if (x == zc) {
          continue;
        }
        bool zero_minimal = true;
        for (std::size_t y = 0; y < G.num_r && zero_minimal; ++y) {
          zero_minimal = y == x || y == zc || !G.r_preorder[y][x];
        }
        if (zero_minimal) {
          std::vector<element_type> I = cl[x];
          I.push_back(*z);
          std::sort(I.begin(), I.end());
          out.zero_minimal_right_ideals.push_back(I);
          socle.insert(socle.end(), cl[x].begin(), cl[x].end());
        }
      }
      std::sort(socle.begin(), socle.end());
      out.socle = socle;
    }
    return out;
  }

  relative_green_result relative_green(finite_semigroup const&          S,
                                       std::vector<element_type> const& T) {
    for (auto a : T) {
      for (auto b : T) {
        if (std::find(T.begin(), T.end(), S.product(a, b)) == T.end()) {
          throw sgtool_error(error_kind::not_a_subsemigroup,
                             "T is not closed", {a, b});
        }
      }
    }
    auto const      n = S.size();
    relation_matrix right(n, std::vector<char>(n, 0)),
        left(n, std::vector<char>(n, 0));
    for (element_type a = 0; a < n; ++a) {
      right[a][a] = left[a][a] = 1;
      for (auto t : T) {
        right[a][S.product(a, t)] = 1;
        left[a][S.product(t, a)]  = 1;
      }
    }
    relative_green_result out;
    out.r = mutual_classes(right);
    out.l = mutual_classes(left);
    out.h = meet(out.r, out.l);
    auto              inT = subset_mask(n, T);
    std::vector<char> counted(n, 0);
    for (element_type a = 0; a < n; ++a) {
      if (!inT[a] && !counted[out.h[a]]) {
        counted[out.h[a]] = 1;
        ++out.green_index;
      }
    }
    return out;
  }

  subsemigroup_report
  subsemigroup_predicates(finite_semigroup const&          S,
                          std::vector<element_type> const& T) {
    if (T.empty() || !is_closed_subset(S, T)) {
      throw sgtool_error(error_kind::not_a_subsemigroup, "T is not closed");
    }
    auto const          n   = S.size();
    auto                inT = subset_mask(n, T);
    subsemigroup_report rep;
    rep.right_unitary = true;
    for (auto a : T) {
      for (element_type b = 0; b < n; ++b) {
        if (inT[S.product(a, b)] && !inT[b]) {
          rep.right_unitary = false;
        }
      }
    }
    rep.r_preserving = true;
    for (auto a : T) {
      for (auto b : T) {
        bool in_s = a == b, in_t = a == b;
        for (element_type s = 0; s < n; ++s) {
          if (S.product(b, s) == a) {
            in_s = true;
            in_t = in_t || inT[s];
          }
        }
        if (in_s != in_t) {
          rep.r_preserving = false;
        }
      }
    }
    rep.complement_left_ideal = true;
    rep.complement_ideal      = true;
    for (element_type a = 0; a < n; ++a) {
      if (inT[a]) {
        continue;
      }
      for (element_type s = 0; s < n; ++s) {
        if (inT[S.product(s, a)]) {
          rep.complement_left_ideal = false;
          rep.complement_ideal      = false;
        }
        if (inT[S.product(a, s)]) {
          rep.complement_ideal = false;
        }
      }
    }
    return rep;
  }

  cover_result idempotent_cover(finite_semigroup const&          S,
                                std::vector<element_type> const& U) {
    for (auto u : U) {
      if (u >= S.size() || S.product(u, u) != u) {
        throw sgtool_error(error_kind::not_idempotents,
                           "element is not idempotent", {u});
      }
    }
    auto const                 m = U.size();
    cover_result               out;
    if (m == 0) {
      return out;
    }
    std::vector<std::uint64_t> cov(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if (S.product(U[i], U[j]) == U[j]) {
          cov[i] |= std::uint64_t(1) << (j % 64);
        }
      }
    }
    if (m <= 20) {
      std::uint64_t const        full = (std::uint64_t(1) << m) - 1;
      std::vector<std::uint32_t> uni(std::size_t(1) << m, 0);
      std::uint32_t              best = 0;
      int                        best_size = 64;
      for (std::uint32_t mask = 1; mask <= full; ++mask) {
        int low   = __builtin_ctz(mask);
        uni[mask] = uni[mask & (mask - 1)] | static_cast<std::uint32_t>(cov[low]);
        int size  = __builtin_popcount(mask);
        if (uni[mask] == full && size < best_size) {
          best      = mask;
          best_size = size;
        }
      }
      for (std::size_t i = 0; i < m; ++i) {
        if (best >> i & 1) {
          out.cover.push_back(U[i]);
        }
      }
      return out;
    }
    // Greedy: always pick the idempotent covering most of what is left.
    out.exact = false;
    std::vector<char> covered(m, 0);
    std::size_t       left = m;
    while (left > 0) {
      std::size_t best = 0, best_gain = 0;
      for (std::size_t i = 0; i < m; ++i) {
        std::size_t gain = 0;
        for (std::size_t j = 0; j < m; ++j) {
          gain += !covered[j] && S.product(U[i], U[j]) == U[j];
        }
        if (gain > best_gain) {
          best      = i;
          best_gain = gain;
        }
      }
      out.cover.push_back(U[best]);
      for (std::size_t j = 0; j < m; ++j) {
        if (!covered[j] && S.product(U[best], U[j]) == U[j]) {
          covered[j] = 1;
          --left;
        }
      }
    }
    std::sort(out.cover.begin(), out.cover.end());
    return out;
  }

  std::string eggbox_dot(finite_semigroup const& S, green_structure const& G) {
    std::ostringstream os;
    os << "digraph eggbox {\n  node [shape=plaintext];\n";
    auto const dcl = classes_of(G.d);
    for (std::size_t d = 0; d < dcl.size(); ++d) {
      std::vector<std::size_t> rows, cols;
      for (auto a : dcl[d]) {
        if (std::find(rows.begin(), rows.end(), G.r[a]) == rows.end()) {
          rows.push_back(G.r[a]);
        }
        if (std::find(cols.begin(), cols.end(), G.l[a]) == cols.end()) {
          cols.push_back(G.l[a]);
        }
      }
      os << "  D" << d << " [label=<<table border=\"1\" cellborder=\"1\" "
         << "cellspacing=\"0\">";
      for (auto r : rows) {
        os << "<tr>";
        for (auto c : cols) {
          os << "<td>";
          bool first = true;
          for (auto a : dcl[d]) {
            if (G.r[a] == r && G.l[a] == c) {
              os << (first ? "" : " ") << S.label(a)
                 << (S.product(a, a) == a ? "*" : "");
              first = false;
            }
          }
          os << "</td>";
        }
        os << "</tr>";
      }
      os << "</table>>];\n";
    }
    os << "}\n";
    return os.str();
  }

  std::string r_hasse_dot(finite_semigroup const& S, green_structure const& G) {
    std::ostringstream os;
    auto const         cl = classes_of(G.r);
    auto const         k  = G.num_r;
    os << "digraph r_classes {\n  rankdir=BT;\n";
    for (std::size_t x = 0; x < k; ++x) {
      os << "  R" << x << " [label=\"";
      for (std::size_t i = 0; i < cl[x].size(); ++i) {
        os << (i ? " " : "") << S.label(cl[x][i]);
      }
      os << "\"];\n";
    }
    // Covering pairs only.
    for (std::size_t x = 0; x < k; ++x) {
      for (std::size_t y = 0; y < k; ++y) {
        if (x == y || !G.r_preorder[x][y]) {
          continue;
        }
        bool cover = true;
        for (std::size_t z = 0; z < k && cover; ++z) {
          cover = z == x || z == y
                  || !(G.r_preorder[x][z] && G.r_preorder[z][y]);
        }
        if (cover) {
          os << "  R" << x << " -> R" << y << ";\n";
        }
      }
    }
    os << "}\n";
    return os.str();
  }

}  // namespace sgtool
