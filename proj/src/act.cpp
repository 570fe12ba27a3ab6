#include "sgtool/act.hpp"

#include <algorithm>

namespace sgtool {

  finite_right_act make_act(finite_semigroup          S,
                            std::size_t               carrier_size,
                            std::vector<element_type> action) {
    auto const n = S.size();
    if (carrier_size == 0 || action.size() != carrier_size * n) {
      throw sgtool_error(error_kind::not_an_act, "action has the wrong shape");
    }
    for (std::size_t i = 0; i < action.size(); ++i) {
      if (action[i] >= carrier_size) {
        throw sgtool_error(error_kind::not_closed,
                           "action entry out of range",
                           {i / n, i % n});
      }
    }
    finite_right_act A{carrier_size, std::move(S), std::move(action)};
    for (element_type a = 0; a < carrier_size; ++a) {
      for (element_type s = 0; s < n; ++s) {
        for (element_type t = 0; t < n; ++t) {
          if (A.act(a, A.semigroup.product(s, t)) != A.act(A.act(a, s), t)) {
            throw sgtool_error(
                error_kind::not_an_act, "a(st) != (as)t", {a, s, t});
          }
        }
      }
    }
    if (auto e = A.semigroup.identity()) {
      for (element_type a = 0; a < carrier_size; ++a) {
        if (A.act(a, *e) != a) {
          throw sgtool_error(error_kind::not_an_act, "a1 != a", {a});
        }
      }
    }
    return A;
  }

  finite_right_act regular_act(finite_semigroup const& S) {
    return finite_right_act{S.size(), S, S.table()};
  }

  bool is_subact(finite_right_act const& A, std::vector<element_type> const& B) {
    for (auto b : B) {
      if (b >= A.carrier_size) {
        return false;
      }
    }
    auto m = subset_mask(A.carrier_size, B);
    for (auto b : B) {
      for (element_type s = 0; s < A.semigroup.size(); ++s) {
        if (!m[A.act(b, s)]) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<element_type> act_min_generating(finite_right_act const& A) {
    auto const                     c = A.carrier_size;
    std::vector<std::vector<char>> reach(c, std::vector<char>(c, 0));
    for (element_type a = 0; a < c; ++a) {
      reach[a][a] = 1;
      for (element_type s = 0; s < A.semigroup.size(); ++s) {
        reach[a][A.act(a, s)] = 1;
      }
    }
    std::vector<element_type> gens;
    for (element_type a = 0; a < c; ++a) {
      // a is needed unless some b outside its class reaches a; take the
      // least index of each maximal class.
      bool dominated = false, earlier_twin = false;
      for (element_type b = 0; b < c && !dominated; ++b) {
        if (b != a && reach[b][a]) {
          if (reach[a][b]) {
            earlier_twin = earlier_twin || b < a;
          } else {
            dominated = true;
          }
        }
      }
      if (!dominated && !earlier_twin) {
        gens.push_back(a);
      }
    }
    return gens;
  }

  finite_right_act act_rees_quotient(finite_right_act const&          A,
                                     std::vector<element_type> const& B) {
    if (B.empty()) {
      return A;
    }
    auto m = subset_mask(A.carrier_size, B);
    for (auto b : B) {
      for (element_type s = 0; s < A.semigroup.size(); ++s) {
        if (!m[A.act(b, s)]) {
          throw sgtool_error(
              error_kind::not_a_subact, "bs leaves B", {b, s, A.act(b, s)});
        }
      }
    }
    std::vector<element_type> idx(A.carrier_size);
    element_type              next = 0;
    for (element_type a = 0; a < A.carrier_size; ++a) {
      if (!m[a]) {
        idx[a] = next++;
      }
    }
    element_type const zero = next;
    for (element_type a = 0; a < A.carrier_size; ++a) {
      if (m[a]) {
        idx[a] = zero;
      }
    }
    auto const                n = A.semigroup.size();
    std::vector<element_type> action((zero + 1) * n, zero);
    for (element_type a = 0; a < A.carrier_size; ++a) {
      if (!m[a]) {
        for (element_type s = 0; s < n; ++s) {
          action[idx[a] * n + s] = idx[A.act(a, s)];
        }
      }
    }
    return finite_right_act{zero + 1u, A.semigroup, std::move(action)};
  }

}  // namespace sgtool
