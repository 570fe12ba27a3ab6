#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sgtool {

  enum class error_kind {
    not_square,
    not_closed,
    not_associative,
    empty_generator_set,
    not_two_sided,
    not_an_ideal,
    not_an_act,
    not_a_subact,
    not_a_subsemigroup,
    not_idempotents,
    not_a_homomorphism,
    not_an_endomorphism,
    not_a_monoid,
    not_a_semilattice,
    missing_homomorphism,
    composition_violation,
    identity_violation,
    zero_entry_without_zero_mode,
    not_completely_regular,
    not_completely_zero_simple,
    component_not_completely_simple,
    not_regular,
    not_commutative,
    component_count_unknown,
    family_mismatch,
    invalid_parameters,
    not_applicable,
    verdict_unavailable,
    precondition_failed,
    unsupported,
    order_too_large,
    parse_error
  };

  // CamelCase name used in diagnostics, e.g. "NotAssociative".
  std::string_view to_string(error_kind kind) noexcept;

  class sgtool_error : public std::runtime_error {
   public:
    sgtool_error(error_kind                kind,
                 std::string const&        detail,
                 std::vector<std::size_t>  witness = {});

    error_kind kind() const noexcept {
      return _kind;
    }

    // Concrete data that reproduces the failure (a triple, a pair, ...).
    std::vector<std::size_t> const& witness() const noexcept {
      return _witness;
    }

   private:
    error_kind               _kind;
    std::vector<std::size_t> _witness;
  };

}  // namespace sgtool
