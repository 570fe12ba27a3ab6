#include "sgtool/error.hpp"

namespace sgtool {

  std::string_view to_string(error_kind kind) noexcept {
    switch (kind) {
      case error_kind::not_square: return "NotSquare";
      case error_kind::not_closed: return "NotClosed";
      case error_kind::not_associative: return "NotAssociative";
      case error_kind::empty_generator_set: return "EmptyGeneratorSet";
      case error_kind::not_two_sided: return "NotTwoSided";
      case error_kind::not_an_ideal: return "NotAnIdeal";
      case error_kind::not_an_act: return "NotAnAct";
      case error_kind::not_a_subact: return "NotASubact";
      case error_kind::not_a_subsemigroup: return "NotASubsemigroup";
      case error_kind::not_idempotents: return "NotIdempotents";
      case error_kind::not_a_homomorphism: return "NotAHomomorphism";
      case error_kind::not_an_endomorphism: return "NotAnEndomorphism";
      case error_kind::not_a_monoid: return "NotAMonoid";
      case error_kind::not_a_semilattice: return "NotASemilattice";
      case error_kind::missing_homomorphism: return "MissingHomomorphism";
      case error_kind::composition_violation: return "CompositionViolation";
      case error_kind::identity_violation: return "IdentityViolation";
      case error_kind::zero_entry_without_zero_mode:
        return "ZeroEntryWithoutZeroMode";
      case error_kind::not_completely_regular: return "NotCompletelyRegular";
      case error_kind::not_completely_zero_simple:
        return "NotCompletelyZeroSimple";
      case error_kind::component_not_completely_simple:
        return "ComponentNotCompletelySimple";
      case error_kind::not_regular: return "NotRegular";
      case error_kind::not_commutative: return "NotCommutative";
      case error_kind::component_count_unknown: return "ComponentCountUnknown";
      case error_kind::family_mismatch: return "FamilyMismatch";
      case error_kind::invalid_parameters: return "InvalidParameters";
      case error_kind::not_applicable: return "NotApplicable";
      case error_kind::verdict_unavailable: return "VerdictUnavailable";
      case error_kind::precondition_failed: return "PreconditionFailed";
      case error_kind::unsupported: return "Unsupported";
      case error_kind::order_too_large: return "OrderTooLarge";
      case error_kind::parse_error: return "ParseError";
    }
    return "Unknown";
  }

  namespace {
    std::string format_message(error_kind                      kind,
                               std::string const&              detail,
                               std::vector<std::size_t> const& witness) {
      std::string msg(to_string(kind));
      if (!detail.empty()) {
        msg += ": " + detail;
      }
      if (!witness.empty()) {
        msg += " [witness";
        for (auto w : witness) {
          msg += " " + std::to_string(w);
        }
        msg += "]";
      }
      return msg;
    }
  }  // namespace

  sgtool_error::sgtool_error(error_kind               kind,
                             std::string const&       detail,
                             std::vector<std::size_t> witness)
      : std::runtime_error(format_message(kind, detail, witness)),
        _kind(kind),
        _witness(std::move(witness)) {}

}  // namespace sgtool
