#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sgtool/semigroup.hpp"
#include "sgtool/verdict.hpp"

namespace sgtool {

  enum class family_kind {
    free_semigroup,
    free_commutative,
    bicyclic,
    polycyclic,
    bruck_reilly,
    null,
    u_construction,
    trivial_free_product,
    z2_free_product_sl2,
    collapsing_left_zero_chain,
    growing_left_zero_chain,
    disjoint_monogenic_chain
  };

  std::string to_string(family_kind k);
  family_kind family_kind_from_string(std::string const& s);

  // One of the infinite (or parametrised) families, with its parameters.
  // Build instances through the named constructors, which validate.
  struct symbolic_family {
    family_kind kind = family_kind::bicyclic;
    // Alphabet size or rank.
    std::size_t rank = 0;
    // Number of nonzero elements of a null semigroup; empty means
    // countably infinite.
    std::optional<std::size_t> null_size;
    // Bruck-Reilly base (M, theta), or the U-construction data
    // (base, target, theta, phi).
    finite_semigroup          base;
    finite_semigroup          target;
    std::vector<element_type> theta;
    std::vector<element_type> phi;
    // U-construction only: the materialised table.
    finite_semigroup table;

    static symbolic_family free_semigroup(std::size_t k);
    static symbolic_family free_commutative(std::size_t n);
    static symbolic_family bicyclic();
    static symbolic_family polycyclic(std::size_t k);
    static symbolic_family bruck_reilly(finite_semigroup          M,
                                        std::vector<element_type> theta);
    static symbolic_family null(std::optional<std::size_t> size);
    static symbolic_family u_construction(finite_semigroup          S,
                                          finite_semigroup          T,
                                          std::vector<element_type> theta,
                                          std::vector<element_type> phi);
    static symbolic_family trivial_free_product();
    static symbolic_family z2_free_product_sl2();
    static symbolic_family collapsing_left_zero_chain();
    static symbolic_family growing_left_zero_chain();
    static symbolic_family disjoint_monogenic_chain();

    bool is_finite() const;
  };

  // Normal forms, all as integer vectors:
  //   free semigroup         letters, nonempty
  //   free commutative       exponent vector, nonzero
  //   bicyclic               {j, k}
  //   polycyclic             {-1} for 0, else {|u|, u..., v...} for u^-1 v
  //   Bruck-Reilly           {j, a, k}
  //   null                   {0} for 0, {i} for x_i (i >= 1)
  //   U-construction         {table index}
  //   free products          alternating letters (e=0,f=1 / a=0,b=1)
  //   collapsing chain       {i, 0} for x_i, {i, 1} for y_i
  //   growing chain          {i, k} for x_{i,k}, 1 <= k <= i
  //   disjoint chain         {i, m} for a_i^m
  struct sym_element {
    std::vector<std::int64_t> code;

    bool operator==(sym_element const&) const = default;
    auto operator<=>(sym_element const&) const = default;
  };

  bool        sym_valid(symbolic_family const& F, sym_element const& a);
  std::size_t sym_size(symbolic_family const& F, sym_element const& a);

  sym_element sym_multiply(symbolic_family const& F,
                           sym_element const&     a,
                           sym_element const&     b);

  // Decides a in bF^1.
  bool sym_r_leq(symbolic_family const& F,
                 sym_element const&     a,
                 sym_element const&     b);

  // Every element of size <= bound, ordered by (size, code).
  std::vector<sym_element> sym_enumerate(symbolic_family const& F,
                                         std::size_t            bound);

  // Elements of size <= bound that are not products of two elements.
  std::vector<sym_element> sym_indecomposables(symbolic_family const& F,
                                               std::size_t            bound);

  // Indecomposables of the subsemigroup of a free commutative semigroup
  // made of the vectors whose support is exactly `support`.
  std::vector<sym_element>
  fc_component_indecomposables(std::size_t              rank,
                               std::vector<bool> const& support,
                               std::size_t              bound);

  bool sym_has_lri(symbolic_family const& F);

  wrn_verdict sym_wrn_verdict(symbolic_family const& F);

  // i -> i-th member (i >= 1) of the antichain, for NotWRN families that
  // carry an antichain generator.
  std::optional<std::function<sym_element(std::size_t)>>
  antichain_generator(symbolic_family const& F);

  // The first k antichain members, re-verified pairwise incomparable.
  std::vector<sym_element> antichain_witness(symbolic_family const& F,
                                             std::size_t            k);

  std::string to_string(symbolic_family const& F, sym_element const& a);

  // Free-product parts, listed by their generators.  Each returns, for
  // every part, the set of its elements of length <= bound.
  std::vector<std::vector<sym_element>> trivial_free_product_parts(std::size_t bound);
  std::vector<std::vector<sym_element>> z2_free_product_parts(std::size_t bound);

  // A finite union of monogenic submonoids that does cover the Z2 free
  // product: U1, U2, {(ba)^n b}, U4 and {1, a}.
  std::vector<std::vector<sym_element>> z2_free_product_cover(std::size_t bound);

}  // namespace sgtool
