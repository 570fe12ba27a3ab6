#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "sgtool/semigroup.hpp"
#include "sgtool/verdict.hpp"

namespace sgtool {

  // Throws not_a_monoid, or not_an_endomorphism with a witness pair (a, b)
  // such that (ab)theta != (a theta)(b theta).  When theta moves the
  // identity the witness is (1, 1).
  void check_monoid_endomorphism(finite_semigroup const&          M,
                                 std::vector<element_type> const& theta);

  // a theta^k, computed along the eventually periodic orbit of a.
  element_type theta_power(std::vector<element_type> const& theta,
                           element_type                     a,
                           std::uint64_t                    k);

  struct br_triple {
    std::uint64_t j = 0;
    element_type  a = 0;
    std::uint64_t k = 0;

    bool operator==(br_triple const&) const = default;
  };

  br_triple br_multiply(finite_semigroup const&          M,
                        std::vector<element_type> const& theta,
                        br_triple const&                 x,
                        br_triple const&                 y);

  // Vertices are the nonempty right ideals of M; there is an edge I -> I'
  // whenever I theta is contained in I'.  The edge is tight when
  // I' = (I theta)M and loose otherwise.
  struct br_ideal_graph {
    std::vector<std::vector<element_type>> ideals;
    std::vector<std::vector<std::size_t>>  successors;
    std::vector<std::size_t>               tight;  // index of (I theta)M

    bool loose(std::size_t u, std::size_t v) const {
      return tight[u] != v;
    }
  };

  br_ideal_graph br_build_graph(finite_semigroup const&          M,
                                std::vector<element_type> const& theta);

  // NotWRN exactly when some loose edge lies on a directed cycle.  A
  // theta-sequence breaks the finiteness condition iff it takes infinitely
  // many loose steps, and a walk in a finite graph can do so iff a loose
  // edge is on a cycle.
  wrn_verdict br_wrn_decide(finite_semigroup const&          M,
                            std::vector<element_type> const& theta);

  struct br_lemma_witness {
    std::vector<element_type> ideal;
    element_type              a = 0;
  };

  // First (I, a) with a outside I and (I u {a}) theta inside I, with right
  // ideals in lexicographic order and a ascending.
  std::optional<br_lemma_witness>
  br_lemma_check(finite_semigroup const&          M,
                 std::vector<element_type> const& theta);

  // Every endomorphism of M fixing the identity, in lexicographic order.
  std::vector<std::vector<element_type>>
  monoid_endomorphisms(finite_semigroup const& M);

}  // namespace sgtool
