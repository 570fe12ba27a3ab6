#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "sgtool/construct.hpp"
#include "sgtool/semigroup.hpp"
#include "sgtool/symbolic.hpp"
#include "sgtool/verdict.hpp"

namespace sgtool {

  struct condition_result {
    std::string name;
    bool        holds = false;
    // Empty when the condition holds; otherwise something a single call into
    // core, green or symbolic can re-check.
    std::string               witness;
    std::vector<element_type> witness_elements;
  };

  struct theorem_report {
    std::string                   tag;
    std::vector<condition_result> conditions;
    std::optional<verdict>        overall;
    std::string                   citation;
    std::vector<std::pair<std::string, std::int64_t>> statistics;
    std::vector<std::string>                           notes;

    condition_result const* find(std::string const& name) const;
    std::optional<std::int64_t> statistic(std::string const& name) const;
  };

  using semigroup_operand = std::variant<finite_semigroup, symbolic_family>;

  // WRN of S x T from the verdicts and local right identities of the
  // factors.  The product is symmetric, so an infinite factor is moved first.
  theorem_report check_direct_product(semigroup_operand const& S,
                                      semigroup_operand const& T);

  struct lri_dp_report {
    std::size_t                            trials = 0;
    std::size_t                            regenerated = 0;
    // Right ideals (as element lists of S x T) that Z failed to regenerate.
    std::vector<std::vector<element_type>> failures;
  };

  // Replays the generating-set argument for products of semigroups with
  // local right identities on `trials` right ideals of S x T.  When S x T has
  // at most `trials` right ideals they are all used; otherwise a seeded
  // sample.
  lri_dp_report verify_prop_lri_dp(finite_semigroup const& S,
                                   finite_semigroup const& T,
                                   std::size_t             trials,
                                   std::uint64_t           seed = 1);

  // M^0(M; I, J; P) over a finite monoid M.  Index sets may be countably
  // infinite; then P is described by its pattern only.
  struct rees_input {
    finite_semigroup           M;
    std::optional<std::size_t> I, J;  // empty means countably infinite
    std::optional<sandwich_matrix> P;
    std::optional<bool>            every_row_has_unit;
    std::optional<bool>            has_zero_row;
    // Values of the nonzero entries of P, used for the ideal they generate.
    std::optional<std::vector<element_type>> entry_values;
  };

  theorem_report check_rees(rees_input const& in);

  theorem_report check_cr_strong(semilattice_diagram const& D);
  theorem_report check_cr_strong(symbolic_family const& F);

  struct regular_report {
    theorem_report                 report;
    std::size_t                    max_cover = 0;
    std::vector<element_type>      max_cover_subset;
    bool                           exact = true;
  };

  regular_report check_regular(finite_semigroup const& S,
                               std::uint64_t           seed = 1);

  struct archimedean_component {
    std::vector<element_type>   elements;
    std::optional<element_type> idempotent;
    // Maximal subgroup at the idempotent, which is the kernel of the
    // component.
    std::vector<element_type>  group_kernel;
    std::optional<std::size_t> nilpotent_quotient_size;
    bool                       quotient_nilpotent = false;
  };

  struct archimedean_decomposition_result {
    std::vector<std::size_t>           component_of;
    std::vector<archimedean_component> components;
    // Components multiply as this semilattice.
    finite_semigroup semilattice;
  };

  archimedean_decomposition_result
  archimedean_decomposition(finite_semigroup const& S);

  // Smallest generating set of a finite semigroup: indecomposables first,
  // then J-maximal elements greedily, then a subset search for anything
  // smaller when there are at most 16 candidates.
  std::vector<element_type> min_semigroup_generating_set(finite_semigroup const& S);

  theorem_report check_comm_wrn(finite_semigroup const& S);
  theorem_report check_comm_wrn(symbolic_family const& F);

  struct suite_entry {
    std::string id;
    std::string check;
    bool        pass = false;
    std::string detail;
  };

  struct suite_report {
    std::size_t              instances = 0;
    std::vector<suite_entry> entries;  // sorted by (id, check)
    std::size_t failures() const;
  };

  struct corpus_instance {
    std::string      id;
    finite_semigroup S;
  };

  // Structural replays of the finite-scale lemmas on every instance.
  suite_report verify_theorem_suite(std::vector<corpus_instance> const& corpus,
                                    std::size_t                         jobs = 1);

  // Right ideal generated by X, restricted to the window W.
  std::vector<sym_element> window_ideal(symbolic_family const&          F,
                                        std::vector<sym_element> const& X,
                                        std::vector<sym_element> const& W);

  // A single g in W generating the same windowed ideal as X, if any.
  std::optional<sym_element>
  principal_in_window(symbolic_family const&          F,
                      std::vector<sym_element> const& X,
                      std::vector<sym_element> const& W);

  // Window checks on symbolic families: associativity, soundness of the
  // R-order oracle against products, witnesses, and family specifics.
  suite_report
  verify_family_suite(std::vector<std::pair<std::string, symbolic_family>> const& families);

}  // namespace sgtool
