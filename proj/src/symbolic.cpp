#include "sgtool/symbolic.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "sgtool/bruck_reilly.hpp"
#include "sgtool/construct.hpp"

namespace sgtool {

  namespace {
    using code_t = std::vector<std::int64_t>;

    struct family_name {
      family_kind kind;
      char const* name;
    };

    constexpr family_name family_names[] = {
        {family_kind::free_semigroup, "FreeSemigroup"},
        {family_kind::free_commutative, "FreeCommutative"},
        {family_kind::bicyclic, "Bicyclic"},
        {family_kind::polycyclic, "Polycyclic"},
        {family_kind::bruck_reilly, "BruckReilly"},
        {family_kind::null, "Null"},
        {family_kind::u_construction, "UConstruction"},
        {family_kind::trivial_free_product, "TrivialFreeProduct"},
        {family_kind::z2_free_product_sl2, "Z2FreeProductSl2"},
        {family_kind::collapsing_left_zero_chain, "CollapsingLeftZeroChain"},
        {family_kind::growing_left_zero_chain, "GrowingLeftZeroChain"},
        {family_kind::disjoint_monogenic_chain, "DisjointMonogenicChain"},
    };

    [[noreturn]] void mismatch(symbolic_family const& F) {
      throw sgtool_error(error_kind::family_mismatch,
                         "element is not a normal form of " + to_string(F.kind));
    }

    void require(symbolic_family const& F, sym_element const& a) {
      if (!sym_valid(F, a)) {
        mismatch(F);
      }
    }

    bool is_prefix(code_t const& p, code_t const& w) {
      return p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin());
    }

    bool is_suffix(code_t const& s, code_t const& w) {
      return s.size() <= w.size()
             && std::equal(s.rbegin(), s.rend(), w.rbegin());
    }

    bool alternating(code_t const& w) {
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] != 0 && w[i] != 1) {
          return false;
        }
        if (i > 0 && w[i] == w[i - 1]) {
          return false;
        }
      }
      return true;
    }

    // Polycyclic normal form u^-1 v.
    struct poly_nf {
      bool   zero = false;
      code_t u, v;
    };

    poly_nf poly_decode(code_t const& c) {
      poly_nf p;
      if (c.size() == 1 && c[0] == -1) {
        p.zero = true;
        return p;
      }
      auto lu = static_cast<std::size_t>(c[0]);
      p.u.assign(c.begin() + 1, c.begin() + 1 + lu);
      p.v.assign(c.begin() + 1 + lu, c.end());
      return p;
    }

    code_t poly_encode(poly_nf const& p) {
      if (p.zero) {
        return {-1};
      }
      code_t c{static_cast<std::int64_t>(p.u.size())};
      c.insert(c.end(), p.u.begin(), p.u.end());
      c.insert(c.end(), p.v.begin(), p.v.end());
      return c;
    }

    // All words of length exactly n over k letters, lexicographic.
    void words_of_length(std::size_t k, std::size_t n, std::vector<code_t>& out) {
      code_t w(n, 0);
      while (true) {
        out.push_back(w);
        std::size_t i = n;
        while (i > 0 && w[i - 1] == static_cast<std::int64_t>(k) - 1) {
          w[--i] = 0;
        }
        if (i == 0) {
          return;
        }
        ++w[i - 1];
      }
    }

    std::string letter(std::size_t i, char const* alphabet) {
      std::string a(alphabet);
      if (i < a.size()) {
        return std::string(1, a[i]);
      }
      return std::string(1, a[0]) + std::to_string(i + 1);
    }

    // "x^2 y" style rendering of a word.
    std::string render_word(code_t const& w, char const* alphabet, int sign = 1) {
      std::ostringstream os;
      for (std::size_t i = 0; i < w.size();) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) {
          ++j;
        }
        if (i > 0) {
          os << ' ';
        }
        os << letter(static_cast<std::size_t>(w[i]), alphabet);
        auto run = static_cast<std::int64_t>(j - i) * sign;
        if (run != 1) {
          os << '^' << run;
        }
        i = j;
      }
      return os.str();
    }
  }  // namespace

  std::string to_string(family_kind k) {
    for (auto const& f : family_names) {
      if (f.kind == k) {
        return f.name;
      }
    }
    return "Unknown";
  }

  family_kind family_kind_from_string(std::string const& s) {
    for (auto const& f : family_names) {
      if (s == f.name) {
        return f.kind;
      }
    }
    throw sgtool_error(error_kind::parse_error, "unknown family variant " + s);
  }

  symbolic_family symbolic_family::free_semigroup(std::size_t k) {
    if (k == 0) {
      throw sgtool_error(error_kind::invalid_parameters, "alphabet is empty");
    }
    symbolic_family F;
    F.kind = family_kind::free_semigroup;
    F.rank = k;
    return F;
  }

  symbolic_family symbolic_family::free_commutative(std::size_t n) {
    if (n == 0) {
      throw sgtool_error(error_kind::invalid_parameters, "rank is zero");
    }
    symbolic_family F;
    F.kind = family_kind::free_commutative;
    F.rank = n;
    return F;
  }

  symbolic_family symbolic_family::bicyclic() {
    symbolic_family F;
    F.kind = family_kind::bicyclic;
    return F;
  }

  symbolic_family symbolic_family::polycyclic(std::size_t k) {
    if (k == 0) {
      throw sgtool_error(error_kind::invalid_parameters, "alphabet is empty");
    }
    symbolic_family F;
    F.kind = family_kind::polycyclic;
    F.rank = k;
    return F;
  }

  symbolic_family symbolic_family::bruck_reilly(finite_semigroup          M,
                                                std::vector<element_type> theta) {
    check_monoid_endomorphism(M, theta);
    symbolic_family F;
    F.kind  = family_kind::bruck_reilly;
    F.base  = std::move(M);
    F.theta = std::move(theta);
    return F;
  }

  symbolic_family symbolic_family::null(std::optional<std::size_t> size) {
    symbolic_family F;
    F.kind      = family_kind::null;
    F.null_size = size;
    return F;
  }

  symbolic_family symbolic_family::u_construction(finite_semigroup          S,
                                                  finite_semigroup          T,
                                                  std::vector<element_type> theta,
                                                  std::vector<element_type> phi) {
    symbolic_family F;
    F.kind   = family_kind::u_construction;
    F.table  = sgtool::u_construction(S, T, theta, phi);
    F.base   = std::move(S);
    F.target = std::move(T);
    F.theta  = std::move(theta);
    F.phi    = std::move(phi);
    return F;
  }

  symbolic_family symbolic_family::trivial_free_product() {
    symbolic_family F;
    F.kind = family_kind::trivial_free_product;
    return F;
  }

  symbolic_family symbolic_family::z2_free_product_sl2() {
    symbolic_family F;
    F.kind = family_kind::z2_free_product_sl2;
    return F;
  }

  symbolic_family symbolic_family::collapsing_left_zero_chain() {
    symbolic_family F;
    F.kind = family_kind::collapsing_left_zero_chain;
    return F;
  }

  symbolic_family symbolic_family::growing_left_zero_chain() {
    symbolic_family F;
    F.kind = family_kind::growing_left_zero_chain;
    return F;
  }

  symbolic_family symbolic_family::disjoint_monogenic_chain() {
    symbolic_family F;
    F.kind = family_kind::disjoint_monogenic_chain;
    return F;
  }

  bool symbolic_family::is_finite() const {
    return kind == family_kind::u_construction
           || (kind == family_kind::null && null_size.has_value());
  }

  bool sym_valid(symbolic_family const& F, sym_element const& a) {
    auto const& c = a.code;
    switch (F.kind) {
      case family_kind::free_semigroup:
        return !c.empty()
               && std::all_of(c.begin(), c.end(), [&](auto x) {
                    return x >= 0 && x < static_cast<std::int64_t>(F.rank);
                  });
      case family_kind::free_commutative:
        return c.size() == F.rank
               && std::all_of(c.begin(), c.end(), [](auto x) { return x >= 0; })
               && std::any_of(c.begin(), c.end(), [](auto x) { return x > 0; });
      case family_kind::bicyclic:
        return c.size() == 2 && c[0] >= 0 && c[1] >= 0;
      case family_kind::polycyclic: {
        if (c.size() == 1 && c[0] == -1) {
          return true;
        }
        if (c.empty() || c[0] < 0
            || static_cast<std::size_t>(c[0]) + 1 > c.size()) {
          return false;
        }
        return std::all_of(c.begin() + 1, c.end(), [&](auto x) {
          return x >= 0 && x < static_cast<std::int64_t>(F.rank);
        });
      }
      case family_kind::bruck_reilly:
        return c.size() == 3 && c[0] >= 0 && c[2] >= 0 && c[1] >= 0
               && static_cast<std::size_t>(c[1]) < F.base.size();
      case family_kind::null:
        return c.size() == 1 && c[0] >= 0
               && (!F.null_size
                   || static_cast<std::size_t>(c[0]) <= *F.null_size);
      case family_kind::u_construction:
        return c.size() == 1 && c[0] >= 0
               && static_cast<std::size_t>(c[0]) < F.table.size();
      case family_kind::trivial_free_product:
        return !c.empty() && alternating(c);
      case family_kind::z2_free_product_sl2: return alternating(c);
      case family_kind::collapsing_left_zero_chain:
        return c.size() == 2 && c[0] >= 1 && (c[1] == 0 || c[1] == 1);
      case family_kind::growing_left_zero_chain:
        return c.size() == 2 && c[0] >= 1 && c[1] >= 1 && c[1] <= c[0];
      case family_kind::disjoint_monogenic_chain:
        return c.size() == 2 && c[0] >= 1 && c[1] >= 1;
    }
    return false;
  }

  std::size_t sym_size(symbolic_family const& F, sym_element const& a) {
    auto const& c = a.code;
    switch (F.kind) {
      case family_kind::free_semigroup:
      case family_kind::trivial_free_product:
      case family_kind::z2_free_product_sl2: return c.size();
      case family_kind::free_commutative:
        return static_cast<std::size_t>(std::accumulate(c.begin(), c.end(), 0ll));
      case family_kind::bicyclic: return static_cast<std::size_t>(c[0] + c[1]);
      case family_kind::polycyclic:
        return c[0] == -1 ? 0 : c.size() - 1;
      case family_kind::bruck_reilly:
        return static_cast<std::size_t>(c[0] + c[2] + 1);
      case family_kind::null:
        return static_cast<std::size_t>(c[0]);
      case family_kind::u_construction: return 1;
      case family_kind::collapsing_left_zero_chain:
      case family_kind::growing_left_zero_chain:
        return static_cast<std::size_t>(c[0]);
      case family_kind::disjoint_monogenic_chain:
        return static_cast<std::size_t>(c[0] + c[1]);
    }
    return 0;
  }

  sym_element sym_multiply(symbolic_family const& F,
                           sym_element const&     a,
                           sym_element const&     b) {
    require(F, a);
    require(F, b);
    auto const& x = a.code;
    auto const& y = b.code;
    switch (F.kind) {
      case family_kind::free_semigroup: {
        code_t w = x;
        w.insert(w.end(), y.begin(), y.end());
        return {w};
      }
      case family_kind::free_commutative: {
        code_t w(F.rank);
        for (std::size_t i = 0; i < F.rank; ++i) {
          w[i] = x[i] + y[i];
        }
        return {w};
      }
      case family_kind::bicyclic: {
        auto t = std::max(x[1], y[0]);
        return {{x[0] - x[1] + t, y[1] - y[0] + t}};
      }
      case family_kind::polycyclic: {
        auto p = poly_decode(x), q = poly_decode(y);
        if (p.zero || q.zero) {
          return {{-1}};
        }
        // v s^-1 reduces to w when v = ws, to w^-1 when s = wv, else 0.
        poly_nf r;
        if (is_suffix(q.u, p.v)) {
          r.u = p.u;
          r.v.assign(p.v.begin(), p.v.end() - static_cast<std::ptrdiff_t>(q.u.size()));
          r.v.insert(r.v.end(), q.v.begin(), q.v.end());
        } else if (is_suffix(p.v, q.u)) {
          r.u.assign(q.u.begin(), q.u.end() - static_cast<std::ptrdiff_t>(p.v.size()));
          r.u.insert(r.u.end(), p.u.begin(), p.u.end());
          r.v = q.v;
        } else {
          r.zero = true;
        }
        return {poly_encode(r)};
      }
      case family_kind::bruck_reilly: {
        auto r = br_multiply(F.base,
                             F.theta,
                             {static_cast<std::uint64_t>(x[0]),
                              static_cast<element_type>(x[1]),
                              static_cast<std::uint64_t>(x[2])},
                             {static_cast<std::uint64_t>(y[0]),
                              static_cast<element_type>(y[1]),
                              static_cast<std::uint64_t>(y[2])});
        return {{static_cast<std::int64_t>(r.j),
                 static_cast<std::int64_t>(r.a),
                 static_cast<std::int64_t>(r.k)}};
      }
      case family_kind::null: return {{0}};
      case family_kind::u_construction:
        return {{static_cast<std::int64_t>(
            F.table.product(static_cast<element_type>(x[0]),
                            static_cast<element_type>(y[0])))}};
      case family_kind::trivial_free_product: {
        code_t w = x;
        auto   start = y.begin();
        if (w.back() == y.front()) {
          ++start;  // e e = e, f f = f
        }
        w.insert(w.end(), start, y.end());
        return {w};
      }
      case family_kind::z2_free_product_sl2: {
        code_t      w = x;
        std::size_t i = 0;
        // a a = 1 cancels and exposes the next boundary; b b = b stops.
        while (!w.empty() && i < y.size() && w.back() == y[i]) {
          if (y[i] == 0) {
            w.pop_back();
            ++i;
          } else {
            ++i;
            break;
          }
        }
        w.insert(w.end(), y.begin() + static_cast<std::ptrdiff_t>(i), y.end());
        return {w};
      }
      case family_kind::collapsing_left_zero_chain:
        return x[0] < y[0] ? sym_element{{y[0], 0}} : a;
      case family_kind::growing_left_zero_chain: return x[0] < y[0] ? b : a;
      case family_kind::disjoint_monogenic_chain:
        if (x[0] < y[0]) {
          return b;
        }
        if (x[0] > y[0]) {
          return a;
        }
        return {{x[0], x[1] + y[1]}};
    }
    mismatch(F);
  }

  bool sym_r_leq(symbolic_family const& F,
                 sym_element const&     a,
                 sym_element const&     b) {
    require(F, a);
    require(F, b);
    auto const& x = a.code;
    auto const& y = b.code;
    switch (F.kind) {
      case family_kind::free_semigroup:
      case family_kind::trivial_free_product: return is_prefix(y, x);
      case family_kind::free_commutative:
        for (std::size_t i = 0; i < F.rank; ++i) {
          if (x[i] < y[i]) {
            return false;
          }
        }
        return true;
      case family_kind::bicyclic: return x[0] >= y[0];
      case family_kind::polycyclic: {
        auto p = poly_decode(x), q = poly_decode(y);
        if (p.zero) {
          return true;
        }
        if (q.zero) {
          return false;
        }
        return is_suffix(q.u, p.u);
      }
      case family_kind::bruck_reilly: {
        if (x[0] < y[0]) {
          return false;
        }
        auto base = theta_power(F.theta,
                                static_cast<element_type>(y[1]),
                                static_cast<std::uint64_t>(x[0] - y[0]));
        for (element_type m = 0; m < F.base.size(); ++m) {
          if (F.base.product(base, m) == static_cast<element_type>(x[1])) {
            return true;
          }
        }
        return false;
      }
      case family_kind::null: return x == y || x[0] == 0;
      case family_kind::u_construction: {
        auto const& T  = F.table;
        auto        xa = static_cast<element_type>(x[0]);
        auto        yb = static_cast<element_type>(y[0]);
        if (xa == yb) {
          return true;
        }
        for (element_type s = 0; s < T.size(); ++s) {
          if (T.product(yb, s) == xa) {
            return true;
          }
        }
        return false;
      }
      case family_kind::z2_free_product_sl2: {
        code_t stem = y;
        if (!stem.empty() && stem.back() == 0) {
          stem.pop_back();  // y = y'a and a is a unit
        }
        return is_prefix(stem, x);
      }
      case family_kind::collapsing_left_zero_chain:
        return x == y || (x[1] == 0 && x[0] > y[0]);
      case family_kind::growing_left_zero_chain:
        return x == y || x[0] > y[0];
      case family_kind::disjoint_monogenic_chain:
        return (x[0] == y[0] && x[1] >= y[1]) || x[0] > y[0];
    }
    mismatch(F);
  }

  std::vector<sym_element> sym_enumerate(symbolic_family const& F,
                                         std::size_t            bound) {
    std::vector<sym_element> out;
    auto const               B = static_cast<std::int64_t>(bound);
    switch (F.kind) {
      case family_kind::free_semigroup: {
        std::vector<code_t> ws;
        for (std::size_t n = 1; n <= bound; ++n) {
          words_of_length(F.rank, n, ws);
        }
        for (auto& w : ws) {
          out.push_back({w});
        }
        break;
      }
      case family_kind::free_commutative: {
        code_t v(F.rank, 0);
        std::function<void(std::size_t, std::int64_t)> rec =
            [&](std::size_t i, std::int64_t left) {
              if (i == F.rank) {
                if (left < B) {
                  out.push_back({v});
                }
                return;
              }
              for (std::int64_t e = 0; e <= left; ++e) {
                v[i] = e;
                rec(i + 1, left - e);
              }
              v[i] = 0;
            };
        rec(0, B);
        break;
      }
      case family_kind::bicyclic:
        for (std::int64_t j = 0; j <= B; ++j) {
          for (std::int64_t k = 0; j + k <= B; ++k) {
            out.push_back({{j, k}});
          }
        }
        break;
      case family_kind::polycyclic: {
        out.push_back({{-1}});
        std::vector<std::vector<code_t>> words(bound + 1);
        for (std::size_t n = 0; n <= bound; ++n) {
          words_of_length(F.rank, n, words[n]);
        }
        for (std::size_t lu = 0; lu <= bound; ++lu) {
          for (std::size_t lv = 0; lu + lv <= bound; ++lv) {
            for (auto const& u : words[lu]) {
              for (auto const& v : words[lv]) {
                out.push_back({poly_encode({false, u, v})});
              }
            }
          }
        }
        break;
      }
      case family_kind::bruck_reilly:
        for (std::int64_t j = 0; j + 1 <= B; ++j) {
          for (std::int64_t k = 0; j + k + 1 <= B; ++k) {
            for (std::int64_t a = 0; a < static_cast<std::int64_t>(F.base.size()); ++a) {
              out.push_back({{j, a, k}});
            }
          }
        }
        break;
      case family_kind::null: {
        std::int64_t top = B;
        if (F.null_size) {
          top = std::min<std::int64_t>(top, static_cast<std::int64_t>(*F.null_size));
        }
        for (std::int64_t i = 0; i <= top; ++i) {
          out.push_back({{i}});
        }
        break;
      }
      case family_kind::u_construction:
        if (bound >= 1) {
          for (std::int64_t i = 0; i < static_cast<std::int64_t>(F.table.size()); ++i) {
            out.push_back({{i}});
          }
        }
        break;
      case family_kind::trivial_free_product:
      case family_kind::z2_free_product_sl2: {
        if (F.kind == family_kind::z2_free_product_sl2) {
          out.push_back({{}});
        }
        for (std::size_t n = 1; n <= bound; ++n) {
          for (std::int64_t s = 0; s < 2; ++s) {
            code_t w(n);
            for (std::size_t i = 0; i < n; ++i) {
              w[i] = (s + static_cast<std::int64_t>(i)) % 2;
            }
            out.push_back({w});
          }
        }
        break;
      }
      case family_kind::collapsing_left_zero_chain:
        for (std::int64_t i = 1; i <= B; ++i) {
          out.push_back({{i, 0}});
          out.push_back({{i, 1}});
        }
        break;
      case family_kind::growing_left_zero_chain:
        for (std::int64_t i = 1; i <= B; ++i) {
          for (std::int64_t k = 1; k <= i; ++k) {
            out.push_back({{i, k}});
          }
        }
        break;
      case family_kind::disjoint_monogenic_chain:
        for (std::int64_t i = 1; i <= B; ++i) {
          for (std::int64_t m = 1; i + m <= B; ++m) {
            out.push_back({{i, m}});
          }
        }
        break;
    }
    std::stable_sort(out.begin(), out.end(), [&](auto const& p, auto const& q) {
      auto sp = sym_size(F, p), sq = sym_size(F, q);
      return sp != sq ? sp < sq : p.code < q.code;
    });
    return out;
  }

  std::vector<sym_element> sym_indecomposables(symbolic_family const& F,
                                               std::size_t            bound) {
    std::vector<sym_element> out;
    for (auto const& a : sym_enumerate(F, bound)) {
      bool indecomposable = false;
      auto const& c = a.code;
      switch (F.kind) {
        case family_kind::free_semigroup:
          // A product has length at least 2.
          indecomposable = c.size() == 1;
          break;
        case family_kind::free_commutative:
          indecomposable = sym_size(F, a) == 1;
          break;
        case family_kind::null:
          // Every product is 0.
          indecomposable = c[0] != 0;
          break;
        case family_kind::disjoint_monogenic_chain:
          // a_i^m = a_i^{m-1} a_i for m > 1, and a_i = a_1 a_i for i > 1.
          indecomposable = c[0] == 1 && c[1] == 1;
          break;
        case family_kind::u_construction: {
          auto const& T = F.table;
          bool        hit = false;
          for (element_type s = 0; s < T.size() && !hit; ++s) {
            for (element_type t = 0; t < T.size() && !hit; ++t) {
              hit = T.product(s, t) == static_cast<element_type>(c[0]);
            }
          }
          indecomposable = !hit;
          break;
        }
        default:
          // Monoids, and semigroups in which a = a e for some e.
          indecomposable = false;
          break;
      }
      if (indecomposable) {
        out.push_back(a);
      }
    }
    return out;
  }

  std::vector<sym_element>
  fc_component_indecomposables(std::size_t              rank,
                               std::vector<bool> const& support,
                               std::size_t              bound) {
    if (support.size() != rank
        || std::none_of(support.begin(), support.end(), [](bool b) { return b; })) {
      throw sgtool_error(error_kind::invalid_parameters, "bad support");
    }
    auto F = symbolic_family::free_commutative(rank);
    std::vector<sym_element> out;
    for (auto const& a : sym_enumerate(F, bound)) {
      bool in_component = true, has_one = false;
      for (std::size_t i = 0; i < rank; ++i) {
        in_component = in_component && ((a.code[i] > 0) == support[i]);
        has_one      = has_one || (support[i] && a.code[i] == 1);
      }
      // A sum of two members has every supported coordinate >= 2.
      if (in_component && has_one) {
        out.push_back(a);
      }
    }
    return out;
  }

  bool sym_has_lri(symbolic_family const& F) {
    switch (F.kind) {
      case family_kind::free_semigroup:
      case family_kind::free_commutative:
      case family_kind::disjoint_monogenic_chain: return false;
      case family_kind::null: return F.null_size && *F.null_size == 0;
      case family_kind::u_construction:
        return F.table.flags().local_right_identities;
      default: return true;
    }
  }

  std::optional<std::function<sym_element(std::size_t)>>
  antichain_generator(symbolic_family const& F) {
    using gen_t = std::function<sym_element(std::size_t)>;
    switch (F.kind) {
      case family_kind::free_semigroup:
        if (F.rank >= 2) {
          return gen_t([](std::size_t i) {
            code_t w(i, 0);
            w.push_back(1);
            return sym_element{w};
          });
        }
        break;
      case family_kind::polycyclic:
        if (F.rank >= 2) {
          return gen_t([](std::size_t i) {
            code_t u{0};
            u.insert(u.end(), i, 1);
            return sym_element{poly_encode({false, u, u})};
          });
        }
        break;
      case family_kind::null:
        if (!F.null_size) {
          return gen_t([](std::size_t i) {
            return sym_element{{static_cast<std::int64_t>(i)}};
          });
        }
        break;
      case family_kind::collapsing_left_zero_chain:
        return gen_t([](std::size_t i) {
          return sym_element{{static_cast<std::int64_t>(i), 1}};
        });
      default: break;
    }
    return std::nullopt;
  }

  wrn_verdict sym_wrn_verdict(symbolic_family const& F) {
    wrn_verdict v;
    auto cite = [&](char const* tag) {
      v.value    = verdict::wrn;
      v.witness  = witness_kind::theorem_citation;
      v.citation = tag;
      return v;
    };
    auto antichain = [&](char const* tag, char const* gen) {
      v.value     = verdict::not_wrn;
      v.witness   = witness_kind::antichain_generator;
      v.citation  = tag;
      v.generator = gen;
      return v;
    };
    switch (F.kind) {
      case family_kind::free_semigroup:
        if (F.rank == 1) {
          return cite("free-rank-one");
        }
        return antichain("free-rank-at-least-two", "i -> x^i y");
      case family_kind::free_commutative:
        return cite("finitely-generated-commutative");
      case family_kind::bicyclic: return cite("bicyclic-principal");
      case family_kind::polycyclic:
        if (F.rank == 1) {
          return cite("polycyclic-rank-one");
        }
        return antichain("polycyclic-rank-at-least-two",
                         "i -> y^-i x^-1 x y^i");
      case family_kind::bruck_reilly: return br_wrn_decide(F.base, F.theta);
      case family_kind::null:
        if (F.null_size) {
          return cite("finite");
        }
        return antichain("infinitely-many-indecomposables", "i -> x_i");
      case family_kind::u_construction: return cite("finite");
      case family_kind::trivial_free_product:
      case family_kind::z2_free_product_sl2:
        return cite("free-product-finite-union");
      case family_kind::collapsing_left_zero_chain:
        return antichain("structure-maps-not-eventually-surjective",
                         "i -> y_i");
      case family_kind::growing_left_zero_chain:
        return cite("growing-chain-lowest-layer-generates");
      case family_kind::disjoint_monogenic_chain:
        return cite("disjoint-chain-principal");
    }
    throw sgtool_error(error_kind::invalid_parameters, "unknown family");
  }

  std::vector<sym_element> antichain_witness(symbolic_family const& F,
                                             std::size_t            k) {
    auto gen = antichain_generator(F);
    if (!gen) {
      throw sgtool_error(error_kind::not_applicable,
                         to_string(F.kind) + " has no antichain witness");
    }
    std::vector<sym_element> out;
    for (std::size_t i = 1; i <= k; ++i) {
      out.push_back((*gen)(i));
    }
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        if (i != j && sym_r_leq(F, out[i], out[j])) {
          throw sgtool_error(error_kind::precondition_failed,
                             "witness members are comparable", {i + 1, j + 1});
        }
      }
    }
    return out;
  }

  std::string to_string(symbolic_family const& F, sym_element const& a) {
    auto const&        c = a.code;
    std::ostringstream os;
    switch (F.kind) {
      case family_kind::free_semigroup: return render_word(c, "xyzw");
      case family_kind::free_commutative: {
        code_t w;
        for (std::size_t i = 0; i < c.size(); ++i) {
          w.insert(w.end(), static_cast<std::size_t>(c[i]), static_cast<std::int64_t>(i));
        }
        return render_word(w, "abcd");
      }
      case family_kind::bicyclic:
        os << '(' << c[0] << ',' << c[1] << ')';
        return os.str();
      case family_kind::polycyclic: {
        auto p = poly_decode(c);
        if (p.zero) {
          return "0";
        }
        if (p.u.empty() && p.v.empty()) {
          return "1";
        }
        code_t ru(p.u.rbegin(), p.u.rend());
        std::string s = render_word(ru, "xyzw", -1);
        std::string t = render_word(p.v, "xyzw");
        return s.empty() ? t : t.empty() ? s : s + " " + t;
      }
      case family_kind::bruck_reilly:
        os << '(' << c[0] << ',' << F.base.label(static_cast<element_type>(c[1]))
           << ',' << c[2] << ')';
        return os.str();
      case family_kind::null:
        return c[0] == 0 ? "0" : "x_" + std::to_string(c[0]);
      case family_kind::u_construction:
        return F.table.label(static_cast<element_type>(c[0]));
      case family_kind::trivial_free_product:
      case family_kind::z2_free_product_sl2: {
        if (c.empty()) {
          return "1";
        }
        char const* letters =
            F.kind == family_kind::trivial_free_product ? "ef" : "ab";
        std::string s;
        for (auto x : c) {
          s += letters[x];
        }
        return s;
      }
      case family_kind::collapsing_left_zero_chain:
        return (c[1] == 0 ? "x_" : "y_") + std::to_string(c[0]);
      case family_kind::growing_left_zero_chain:
        os << "x_{" << c[0] << ',' << c[1] << '}';
        return os.str();
      case family_kind::disjoint_monogenic_chain:
        os << "a_" << c[0] << '^' << c[1];
        return os.str();
    }
    return "?";
  }

  namespace {
    // {g^n : n >= start} ... up to the length bound, times an optional
    // right factor.
    std::vector<sym_element> powers(symbolic_family const&     F,
                                    sym_element const&         g,
                                    std::optional<sym_element> tail,
                                    bool                       include_identity,
                                    std::size_t                bound) {
      std::vector<sym_element> out;
      std::optional<sym_element> p;  // g^n, empty meaning the identity
      if (!include_identity) {
        p = g;
      }
      while (true) {
        sym_element x = p ? *p : sym_element{{}};
        if (tail) {
          x = p ? sym_multiply(F, *p, *tail) : *tail;
        }
        if (x.code.size() > bound) {
          break;
        }
        out.push_back(x);
        p = p ? sym_multiply(F, *p, g) : g;
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
    }
  }  // namespace

  std::vector<std::vector<sym_element>>
  trivial_free_product_parts(std::size_t bound) {
    auto F  = symbolic_family::trivial_free_product();
    auto e  = sym_element{{0}}, f = sym_element{{1}};
    auto ef = sym_element{{0, 1}}, fe = sym_element{{1, 0}};
    return {powers(F, ef, std::nullopt, false, bound),
            powers(F, fe, std::nullopt, false, bound),
            powers(F, ef, e, true, bound),
            powers(F, fe, f, true, bound)};
  }

  std::vector<std::vector<sym_element>> z2_free_product_parts(std::size_t bound) {
    auto F   = symbolic_family::z2_free_product_sl2();
    auto u1  = sym_element{{0, 1}};     // ab
    auto u2  = sym_element{{1, 0}};     // ba
    auto u3  = sym_element{{1, 0, 1}};  // bab
    auto aba = sym_element{{0, 1, 0}};
    return {powers(F, u1, std::nullopt, true, bound),
            powers(F, u2, std::nullopt, true, bound),
            powers(F, u3, std::nullopt, true, bound),
            powers(F, u1, aba, true, bound)};
  }

}  // namespace sgtool

namespace sgtool {

  std::vector<std::vector<sym_element>> z2_free_product_cover(std::size_t bound) {
    auto F     = symbolic_family::z2_free_product_sl2();
    auto parts = z2_free_product_parts(bound);
    // (bab)^n never reaches b itself and no listed part holds a, so the
    // third part is widened to (ba)^n b and {1, a} is added.
    auto b   = sym_element{{1}};
    auto ba  = sym_element{{1, 0}};
    std::vector<sym_element> third;
    std::optional<sym_element> p;
    while (true) {
      auto x = p ? sym_multiply(F, *p, b) : b;
      if (x.code.size() > bound) {
        break;
      }
      third.push_back(x);
      p = p ? sym_multiply(F, *p, ba) : ba;
    }
    parts[2] = third;
    std::vector<sym_element> units{sym_element{{}}};
    if (bound >= 1) {
      units.push_back(sym_element{{0}});
    }
    parts.push_back(units);
    return parts;
  }

}  // namespace sgtool
