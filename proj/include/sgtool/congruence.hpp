#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "sgtool/semigroup.hpp"

namespace sgtool {

  enum class congruence_side { right, left, two_sided };

  struct congruence {
    // partition[a] is the class of a; classes are numbered by first
    // occurrence, so equal relations have equal partitions.
    std::vector<std::size_t> partition;
    std::size_t              num_classes = 0;
    congruence_side          side        = congruence_side::two_sided;
  };

  // Renumbers class ids by first occurrence.
  std::vector<std::size_t> normalize_partition(std::vector<std::size_t> const& p);

  std::size_t count_classes(std::vector<std::size_t> const& p);

  bool is_congruence(finite_semigroup const&         S,
                     std::vector<std::size_t> const& partition,
                     congruence_side                 side);

  congruence
  congruence_from_pairs(finite_semigroup const&                               S,
                        std::vector<std::pair<element_type, element_type>> const& pairs,
                        congruence_side side);

  struct quotient_result {
    finite_semigroup          semigroup;
    std::vector<element_type> projection;
  };

  quotient_result quotient(finite_semigroup const& S, congruence const& c);

  // (S \ I) u {0}; the zero is the last index and I maps onto it.
  quotient_result rees_quotient(finite_semigroup const&          S,
                                std::vector<element_type> const& ideal);

}  // namespace sgtool
