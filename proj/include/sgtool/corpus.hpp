#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sgtool/semigroup.hpp"
#include "sgtool/symbolic.hpp"

namespace sgtool {

  using semigroup_value = std::variant<finite_semigroup, symbolic_family>;

  struct corpus_entry {
    std::string     id;
    std::string     source;  // "builtin", a file path, or "enumerated"
    semigroup_value value;
  };

  // Named small semigroups and families.  Ids are stable across releases.
  std::vector<corpus_entry> const& builtin_corpus();

  std::optional<corpus_entry> find_builtin(std::string const& id);

  // Throws parse_error when the id is unknown or names an infinite family.
  finite_semigroup builtin_semigroup(std::string const& id);

  // Named semigroups used throughout the tests.
  namespace small {
    finite_semigroup trivial();
    finite_semigroup cyclic_group(std::size_t n);
    finite_semigroup left_zero(std::size_t n);
    finite_semigroup right_zero(std::size_t n);
    // 0 followed by n - 1 nonzero elements, every product 0.
    finite_semigroup null(std::size_t n);
    // e_0 > e_1 > ...; the product is the lower element.
    finite_semigroup chain(std::size_t n);
    // a, a^2, ..., a^(index + period - 1) with a^(index + period) = a^index.
    finite_semigroup monogenic(std::size_t index, std::size_t period);
    // Null semigroup {0, a} with an identity adjoined: 0, a, 1.
    finite_semigroup null_two_with_identity();
  }  // namespace small

}  // namespace sgtool
