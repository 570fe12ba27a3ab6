#pragma once

#include <cstddef>
#include <vector>

#include "sgtool/semigroup.hpp"

namespace sgtool {

  // Lexicographically least row-major table over all relabellings.
  // Isomorphism only: a semigroup and its dual are kept apart.
  std::vector<element_type> canonical_table(finite_semigroup const& S);

  finite_semigroup canonical_form(finite_semigroup const& S);

  struct enumeration_result {
    std::size_t                   order = 0;
    std::vector<finite_semigroup> semigroups;  // canonical, sorted by table
    std::size_t                   labelled_count = 0;
  };

  inline constexpr std::size_t max_enumeration_order = 5;

  // All semigroups of the given order up to isomorphism.  Order 5 needs
  // allow_order_five since it runs for a while; larger orders are refused.
  // The result does not depend on `jobs`.
  enumeration_result enumerate_semigroups(std::size_t order,
                                          std::size_t jobs              = 1,
                                          bool        allow_order_five = false);

}  // namespace sgtool
