#include "sgtool/semigroup.hpp"

#include <algorithm>
#include <numeric>

namespace sgtool {

  finite_semigroup::finite_semigroup()
      : _n(0), _table(), _labels(), _cache(std::make_shared<flag_cache>()) {}

  finite_semigroup finite_semigroup::unchecked(std::size_t               n,
                                               std::vector<element_type> table,
                                               std::vector<std::string> labels) {
    finite_semigroup S;
    S._n      = n;
    S._table  = std::move(table);
    S._labels = std::move(labels);
    return S;
  }

  std::string finite_semigroup::label(element_type a) const {
    if (a < _labels.size()) {
      return _labels[a];
    }
    return std::to_string(a);
  }

  std::optional<element_type> finite_semigroup::identity() const {
    for (element_type e = 0; e < _n; ++e) {
      bool ok = true;
      for (element_type a = 0; a < _n && ok; ++a) {
        ok = product(e, a) == a && product(a, e) == a;
      }
      if (ok) {
        return e;
      }
    }
    return std::nullopt;
  }

  std::optional<element_type> finite_semigroup::zero() const {
    for (element_type z = 0; z < _n; ++z) {
      bool ok = true;
      for (element_type a = 0; a < _n && ok; ++a) {
        ok = product(z, a) == z && product(a, z) == z;
      }
      if (ok) {
        return z;
      }
    }
    return std::nullopt;
  }

  structure_flags const& finite_semigroup::flags() const {
    std::call_once(_cache->once,
                   [this] { _cache->value = compute_structure_flags(*this); });
    return _cache->value;
  }

  std::optional<std::vector<std::size_t>>
  find_nonassociative_triple(std::size_t                      n,
                             std::vector<element_type> const& t) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        std::size_t ab = t[a * n + b];
        for (std::size_t c = 0; c < n; ++c) {
          if (t[ab * n + c] != t[a * n + t[b * n + c]]) {
            return std::vector<std::size_t>{a, b, c};
          }
        }
      }
    }
    return std::nullopt;
  }

  finite_semigroup make_semigroup(std::size_t               n,
                                  std::vector<element_type> table,
                                  std::vector<std::string>  labels) {
    if (n == 0) {
      throw sgtool_error(error_kind::not_square, "empty table");
    }
    if (table.size() != n * n) {
      throw sgtool_error(error_kind::not_square,
                         "expected " + std::to_string(n * n) + " entries");
    }
    if (!labels.empty() && labels.size() != n) {
      throw sgtool_error(error_kind::parse_error, "label count mismatch");
    }
    for (std::size_t i = 0; i < table.size(); ++i) {
      if (table[i] >= n) {
        throw sgtool_error(error_kind::not_closed,
                           "entry out of range",
                           {i / n, i % n, table[i]});
      }
    }
    if (auto w = find_nonassociative_triple(n, table)) {
      throw sgtool_error(error_kind::not_associative, "(ab)c != a(bc)", *w);
    }
    return finite_semigroup::unchecked(n, std::move(table), std::move(labels));
  }

  finite_semigroup
  validate_semigroup(std::vector<std::vector<std::int64_t>> const& rows,
                     std::vector<std::string>                      labels) {
    std::size_t const n = rows.size();
    if (n == 0) {
      throw sgtool_error(error_kind::not_square, "empty table");
    }
    std::vector<element_type> flat;
    flat.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (rows[i].size() != n) {
        throw sgtool_error(error_kind::not_square, "ragged row", {i});
      }
      for (std::size_t j = 0; j < n; ++j) {
        auto v = rows[i][j];
        if (v < 0 || static_cast<std::uint64_t>(v) >= n) {
          throw sgtool_error(error_kind::not_closed,
                             "entry out of range",
                             {i, j, static_cast<std::size_t>(v < 0 ? 0 : v)});
        }
        flat.push_back(static_cast<element_type>(v));
      }
    }
    return make_semigroup(n, std::move(flat), std::move(labels));
  }

  std::vector<char> subset_mask(std::size_t                      n,
                                std::vector<element_type> const& X) {
    std::vector<char> m(n, 0);
    for (auto x : X) {
      if (x >= n) {
        throw sgtool_error(error_kind::invalid_parameters,
                           "element " + std::to_string(x) + " out of range", {x});
      }
      m[x] = 1;
    }
    return m;
  }

  bool in_subgroup(finite_semigroup const& S, element_type a) {
    auto const   n  = S.size();
    element_type a2 = S.product(a, a);
    if (a2 == a) {
      return true;
    }
    bool right = false, left = false;
    for (element_type s = 0; s < n && !(right && left); ++s) {
      right = right || S.product(a2, s) == a;
      left  = left || S.product(s, a2) == a;
    }
    return right && left;
  }

  structure_flags compute_structure_flags(finite_semigroup const& S) {
    auto const      n = S.size();
    structure_flags f;
    auto            id = S.identity();
    auto            z  = S.zero();
    f.has_identity     = id.has_value();
    f.has_zero         = z.has_value();

    f.commutative = true;
    for (element_type a = 0; a < n && f.commutative; ++a) {
      for (element_type b = a + 1; b < n && f.commutative; ++b) {
        f.commutative = S.product(a, b) == S.product(b, a);
      }
    }

    auto E = idempotents(S);
    f.band        = E.size() == n;
    f.semilattice = f.band && f.commutative;

    f.regular = true;
    for (element_type a = 0; a < n && f.regular; ++a) {
      bool found = false;
      for (element_type b = 0; b < n && !found; ++b) {
        found = S.product(S.product(a, b), a) == a;
      }
      f.regular = found;
    }

    bool idem_commute = true;
    for (auto e : E) {
      for (auto g : E) {
        if (S.product(e, g) != S.product(g, e)) {
          idem_commute = false;
        }
      }
    }
    f.inverse = f.regular && idem_commute;

    f.completely_regular = true;
    for (element_type a = 0; a < n && f.completely_regular; ++a) {
      f.completely_regular = in_subgroup(S, a);
    }

    // A group is a monoid in which every element has a two-sided inverse.
    f.group = f.has_identity;
    for (element_type a = 0; a < n && f.group; ++a) {
      bool found = false;
      for (element_type b = 0; b < n && !found; ++b) {
        found = S.product(a, b) == *id && S.product(b, a) == *id;
      }
      f.group = found;
    }

    f.nilpotent = f.has_zero;
    for (element_type a = 0; a < n && f.nilpotent; ++a) {
      element_type p = a;
      for (std::size_t k = 0; k < n && p != *z; ++k) {
        p = S.product(p, a);
      }
      f.nilpotent = p == *z;
    }

    f.local_right_identities = true;
    for (element_type a = 0; a < n && f.local_right_identities; ++a) {
      bool found = false;
      for (element_type s = 0; s < n && !found; ++s) {
        found = S.product(a, s) == a;
      }
      f.local_right_identities = found;
    }
    return f;
  }

  finite_semigroup adjoin(finite_semigroup const& S, adjoin_kind what) {
    if (what == adjoin_kind::identity ? S.identity().has_value()
                                      : S.zero().has_value()) {
      return S;
    }
    auto const                n = S.size();
    std::vector<element_type> t((n + 1) * (n + 1));
    element_type const        e = static_cast<element_type>(n);
    for (element_type a = 0; a <= n; ++a) {
      for (element_type b = 0; b <= n; ++b) {
        element_type v;
        if (a < n && b < n) {
          v = S.product(a, b);
        } else if (what == adjoin_kind::identity) {
          v = a == e ? b : a;
        } else {
          v = e;
        }
        t[a * (n + 1) + b] = v;
      }
    }
    std::vector<std::string> labels;
    if (!S.labels().empty()) {
      labels = S.labels();
      labels.push_back(what == adjoin_kind::identity ? "1" : "0");
    }
    return finite_semigroup::unchecked(n + 1, std::move(t), std::move(labels));
  }

  std::vector<element_type> closure(finite_semigroup const&          S,
                                    std::vector<element_type> const& gens) {
    if (gens.empty()) {
      throw sgtool_error(error_kind::empty_generator_set, "closure");
    }
    auto const                n  = S.size();
    std::vector<char>         in = subset_mask(n, gens);
    std::vector<element_type> found;
    for (element_type a = 0; a < n; ++a) {
      if (in[a]) {
        found.push_back(a);
      }
    }
    // Every new element is a product w*g with g a generator.
    for (std::size_t i = 0; i < found.size(); ++i) {
      for (auto g : gens) {
        element_type p = S.product(found[i], g);
        if (!in[p]) {
          in[p] = 1;
          found.push_back(p);
        }
      }
    }
    std::sort(found.begin(), found.end());
    return found;
  }

  std::vector<element_type> idempotents(finite_semigroup const& S) {
    std::vector<element_type> E;
    for (element_type a = 0; a < S.size(); ++a) {
      if (S.product(a, a) == a) {
        E.push_back(a);
      }
    }
    return E;
  }

  bool is_closed_subset(finite_semigroup const&          S,
                        std::vector<element_type> const& T) {
    auto m = subset_mask(S.size(), T);
    for (auto a : T) {
      for (auto b : T) {
        if (!m[S.product(a, b)]) {
          return false;
        }
      }
    }
    return true;
  }

  finite_semigroup subsemigroup(finite_semigroup const&          S,
                                std::vector<element_type> const& T) {
    if (T.empty()) {
      throw sgtool_error(error_kind::empty_generator_set, "subsemigroup");
    }
    std::vector<element_type> sorted = T;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<std::int64_t> index(S.size(), -1);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      index[sorted[i]] = static_cast<std::int64_t>(i);
    }
    auto const                m = sorted.size();
    std::vector<element_type> t(m * m);
    std::vector<std::string>  labels;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        auto p = S.product(sorted[i], sorted[j]);
        if (index[p] < 0) {
          throw sgtool_error(error_kind::not_a_subsemigroup,
                             "product leaves the subset",
                             {sorted[i], sorted[j]});
        }
        t[i * m + j] = static_cast<element_type>(index[p]);
      }
      if (!S.labels().empty()) {
        labels.push_back(S.label(sorted[i]));
      }
    }
    return finite_semigroup::unchecked(m, std::move(t), std::move(labels));
  }

  bool is_right_ideal(finite_semigroup const&          S,
                      std::vector<element_type> const& I) {
    auto m = subset_mask(S.size(), I);
    for (auto a : I) {
      for (element_type s = 0; s < S.size(); ++s) {
        if (!m[S.product(a, s)]) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_left_ideal(finite_semigroup const&          S,
                     std::vector<element_type> const& I) {
    auto m = subset_mask(S.size(), I);
    for (auto a : I) {
      for (element_type s = 0; s < S.size(); ++s) {
        if (!m[S.product(s, a)]) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_ideal(finite_semigroup const& S, std::vector<element_type> const& I) {
    return is_right_ideal(S, I) && is_left_ideal(S, I);
  }

}  // namespace sgtool
