#pragma once

#include <string>
#include <vector>

#include "sgtool/semigroup.hpp"

namespace sgtool {

  enum class verdict { wrn, not_wrn };

  enum class witness_kind {
    antichain_generator,
    ascending_chain_generator,
    loose_cycle,
    theorem_citation
  };

  std::string to_string(verdict v);
  std::string to_string(witness_kind w);

  // One step I -> I' of a cycle in the right-ideal graph of a Bruck-Reilly
  // base monoid.
  struct cycle_edge {
    std::vector<element_type> from;
    std::vector<element_type> to;
    bool                      loose = false;
  };

  struct wrn_verdict {
    verdict      value   = verdict::wrn;
    witness_kind witness = witness_kind::theorem_citation;
    // Short stable tag naming the result or rule that settles the case,
    // e.g. "finite", "free-rank-one", "loose-cycle".
    std::string citation;
    // Human readable description of the antichain / chain generator.
    std::string generator;
    std::vector<cycle_edge> cycle;
  };

}  // namespace sgtool
