#pragma once

#include <cstddef>
#include <vector>

#include "sgtool/semigroup.hpp"

namespace sgtool {

  // A right S-act on the carrier 0..carrier_size-1.
  struct finite_right_act {
    std::size_t               carrier_size = 0;
    finite_semigroup          semigroup;
    std::vector<element_type> action;  // carrier_size x |S|, row-major

    element_type act(element_type a, element_type s) const {
      return action[static_cast<std::size_t>(a) * semigroup.size() + s];
    }
  };

  // Checks a(st) = (as)t, and a1 = a when S has an identity.
  finite_right_act make_act(finite_semigroup          S,
                            std::size_t               carrier_size,
                            std::vector<element_type> action);

  // S acting on itself by right multiplication.
  finite_right_act regular_act(finite_semigroup const& S);

  bool is_subact(finite_right_act const& A, std::vector<element_type> const& B);

  // One representative (least index) per maximal class of the reachability
  // preorder a <= b iff a in bS^1.
  std::vector<element_type> act_min_generating(finite_right_act const& A);

  // (A \ B) u {0} with 0 the last index.  An empty B returns A unchanged.
  finite_right_act act_rees_quotient(finite_right_act const&          A,
                                     std::vector<element_type> const& B);

}  // namespace sgtool
