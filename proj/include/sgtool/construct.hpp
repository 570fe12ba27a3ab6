#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "sgtool/semigroup.hpp"

namespace sgtool {

  // (s, t) has index s * |T| + t.
  finite_semigroup direct_product(finite_semigroup const& S,
                                  finite_semigroup const& T);

  inline constexpr std::int64_t sandwich_zero = -1;

  // A J x I matrix over S, or over S^0 when entries may be sandwich_zero.
  struct sandwich_matrix {
    std::size_t               rows = 0;  // |J|
    std::size_t               cols = 0;  // |I|
    std::vector<std::int64_t> entries;   // row-major, p_{ji} at j * cols + i

    std::int64_t at(std::size_t j, std::size_t i) const {
      return entries[j * cols + i];
    }
  };

  // Elements (i, s, j) in lexicographic order, index (i*|S| + s)*|J| + j,
  // followed by 0 when with_zero is set.
  finite_semigroup rees_matrix(finite_semigroup const& S,
                               std::size_t             I,
                               std::size_t             J,
                               sandwich_matrix const&  P,
                               bool                    with_zero);

  // (I x S x I) u {0} with (i,s,j)(k,t,l) = (i,st,l) when j = k.
  finite_semigroup brandt(finite_semigroup const& S, std::size_t I);

  struct semilattice_diagram {
    finite_semigroup              Y;
    std::vector<finite_semigroup> components;  // indexed by elements of Y
    // homs[{alpha, beta}] for alpha >= beta maps S_alpha into S_beta.  The
    // diagonal may be omitted and then defaults to the identity.
    std::map<std::pair<element_type, element_type>, std::vector<element_type>>
        homs;
  };

  // Elements of S_alpha occupy a contiguous block, blocks ordered by alpha.
  finite_semigroup strong_semilattice(semilattice_diagram const& D);

  // First index of each component block in strong_semilattice(D).
  std::vector<std::size_t> component_offsets(semilattice_diagram const& D);

  // S, then x_t for t in T, then 0.
  finite_semigroup u_construction(finite_semigroup const&          S,
                                  finite_semigroup const&          T,
                                  std::vector<element_type> const& theta,
                                  std::vector<element_type> const& phi);

  bool is_homomorphism(finite_semigroup const&          S,
                       finite_semigroup const&          T,
                       std::vector<element_type> const& f);

  struct cs_decomposition {
    finite_semigroup                       Y;  // S/J
    std::vector<std::vector<element_type>> components;
    std::vector<finite_semigroup>          component_semigroups;
    std::vector<std::size_t>               element_component;
  };

  cs_decomposition completely_simple_decomposition(finite_semigroup const& S);

  struct rees_coords {
    finite_semigroup group;
    std::size_t      I = 0, J = 0;
    sandwich_matrix  P;
    bool             with_zero = false;
    // Element of S -> element of rees_matrix(group, I, J, P, with_zero).
    std::vector<element_type> to_rees;
  };

  rees_coords rees_coordinates(finite_semigroup const& S);

  // Image of every element of S under an isomorphism S -> T, if any.
  std::optional<std::vector<element_type>>
  find_isomorphism(finite_semigroup const& S, finite_semigroup const& T);

  inline bool is_isomorphic(finite_semigroup const& S,
                            finite_semigroup const& T) {
    return find_isomorphism(S, T).has_value();
  }

}  // namespace sgtool
