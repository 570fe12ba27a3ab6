#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sgtool/semigroup.hpp"

namespace sgtool {

  using relation_matrix = std::vector<std::vector<char>>;

  struct green_structure {
    // Element -> class index, numbered by least element.
    std::vector<std::size_t> r, l, h, d, j;
    std::size_t              num_r = 0, num_l = 0, num_h = 0, num_d = 0,
                num_j = 0;
    // leq[x][y] is true when class x lies below class y.
    relation_matrix r_preorder, l_preorder, j_preorder;
    // right_reach[a][b] is true when b lies in aS^1; similarly S^1a and
    // S^1aS^1.
    relation_matrix right_reach, left_reach, two_reach;

    bool r_leq(element_type a, element_type b) const {
      return right_reach[b][a];
    }
    bool l_leq(element_type a, element_type b) const {
      return left_reach[b][a];
    }
    bool j_leq(element_type a, element_type b) const {
      return two_reach[b][a];
    }
  };

  green_structure green(finite_semigroup const& S);

  // Groups the elements by class, each class sorted ascending.
  std::vector<std::vector<element_type>>
  classes_of(std::vector<std::size_t> const& partition);

  struct right_ideal {
    std::vector<element_type> elements;
    std::vector<element_type> generators;
    std::vector<element_type> canonical_min_gens;
  };

  right_ideal right_ideal_generated(finite_semigroup const&          S,
                                    std::vector<element_type> const& X);
  right_ideal right_ideal_generated(finite_semigroup const&          S,
                                    green_structure const&           G,
                                    std::vector<element_type> const& X);

  // Least element of each R-class maximal among the R-classes inside I.
  std::vector<element_type> min_generating_set(finite_semigroup const& S,
                                               green_structure const&  G,
                                               std::vector<element_type> const& I);

  // Every nonempty right ideal, as sorted element lists in lexicographic
  // order.  Throws unsupported if there are more than `limit`.
  std::vector<std::vector<element_type>>
  all_right_ideals(finite_semigroup const& S,
                   green_structure const&  G,
                   std::size_t             limit = 1u << 16);

  struct r_poset {
    std::size_t              num_classes = 0;
    relation_matrix          leq;
    std::size_t              max_antichain = 0;
    std::vector<std::size_t> antichain;  // class indices
    std::size_t              longest_chain = 0;
  };

  // Width by Dilworth's theorem (minimum chain cover via bipartite
  // matching), so the answer is exact at every size.
  r_poset rpreorder_poset(finite_semigroup const& S);
  r_poset poset_from_relation(relation_matrix const& leq);

  enum class factor_tag { simple, zero_simple, null };
  std::string to_string(factor_tag t);

  struct principal_factor {
    std::vector<element_type> ideal;    // I_k
    std::vector<element_type> j_class;  // I_k \ I_{k-1}
    finite_semigroup          factor;   // kernel, or J-class with 0 appended
    factor_tag                tag;
  };

  std::vector<principal_factor> principal_series(finite_semigroup const& S);

  struct kernel_socle {
    std::vector<element_type>              kernel;
    std::vector<std::vector<element_type>> minimal_right_ideals;
    std::vector<std::vector<element_type>> zero_minimal_right_ideals;
    std::optional<std::vector<element_type>> socle;
  };

  kernel_socle kernel_and_socle(finite_semigroup const& S);

  struct relative_green_result {
    std::vector<std::size_t> r, l, h;
    std::size_t              green_index = 0;
  };

  relative_green_result relative_green(finite_semigroup const&          S,
                                       std::vector<element_type> const& T);

  struct subsemigroup_report {
    bool right_unitary         = false;
    bool r_preserving          = false;
    bool complement_left_ideal = false;
    bool complement_ideal      = false;
  };

  subsemigroup_report
  subsemigroup_predicates(finite_semigroup const&          S,
                          std::vector<element_type> const& T);

  struct cover_result {
    std::vector<element_type> cover;
    bool                      exact = true;
  };

  // Smallest X in U with every u in U satisfying xu = u for some x in X.
  cover_result idempotent_cover(finite_semigroup const&          S,
                                std::vector<element_type> const& U);

  std::string eggbox_dot(finite_semigroup const& S, green_structure const& G);
  std::string r_hasse_dot(finite_semigroup const& S, green_structure const& G);

}  // namespace sgtool
