#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "sgtool/error.hpp"

namespace sgtool {

  using element_type = std::uint32_t;

  struct structure_flags {
    bool commutative            = false;
    bool band                   = false;
    bool semilattice            = false;
    bool regular                = false;
    bool inverse                = false;
    bool completely_regular     = false;
    bool group                  = false;
    bool nilpotent              = false;
    bool has_zero               = false;
    bool has_identity           = false;
    bool local_right_identities = false;

    bool operator==(structure_flags const&) const = default;
  };

  // A finite semigroup given by a dense Cayley table over 0..n-1.  Instances
  // are immutable once built; the flag report is computed on first request.
  class finite_semigroup {
   public:
    finite_semigroup();

    std::size_t size() const noexcept {
      return _n;
    }

    element_type product(element_type a, element_type b) const noexcept {
      return _table[static_cast<std::size_t>(a) * _n + b];
    }

    std::vector<element_type> const& table() const noexcept {
      return _table;
    }

    std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }

    std::string label(element_type a) const;

    std::optional<element_type> identity() const;
    std::optional<element_type> zero() const;

    structure_flags const& flags() const;

    bool operator==(finite_semigroup const& that) const {
      return _n == that._n && _table == that._table;
    }

    // Builds without validation; callers must guarantee closure and
    // associativity.  Use make_semigroup for untrusted data.
    static finite_semigroup unchecked(std::size_t               n,
                                      std::vector<element_type> table,
                                      std::vector<std::string>  labels = {});

   private:
    struct flag_cache {
      std::once_flag  once;
      structure_flags value;
    };

    std::size_t                 _n;
    std::vector<element_type>   _table;
    std::vector<std::string>    _labels;
    std::shared_ptr<flag_cache> _cache;
  };

  // Returns (a, b, c) with (ab)c != a(bc), or nothing.
  std::optional<std::vector<std::size_t>>
  find_nonassociative_triple(std::size_t                      n,
                             std::vector<element_type> const& table);

  finite_semigroup
  validate_semigroup(std::vector<std::vector<std::int64_t>> const& table,
                     std::vector<std::string>                      labels = {});

  finite_semigroup make_semigroup(std::size_t               n,
                                  std::vector<element_type> table,
                                  std::vector<std::string>  labels = {});

  // Direct evaluation of every flag, bypassing the memo.
  structure_flags compute_structure_flags(finite_semigroup const& S);

  enum class adjoin_kind { identity, zero };

  finite_semigroup adjoin(finite_semigroup const& S, adjoin_kind what);

  std::vector<element_type> closure(finite_semigroup const&          S,
                                    std::vector<element_type> const& gens);

  std::vector<element_type> idempotents(finite_semigroup const& S);

  bool is_closed_subset(finite_semigroup const&          S,
                        std::vector<element_type> const& T);

  // The subsemigroup on sorted T; element i of the result is T[i].
  finite_semigroup subsemigroup(finite_semigroup const&          S,
                                std::vector<element_type> const& T);

  bool is_right_ideal(finite_semigroup const&          S,
                      std::vector<element_type> const& I);
  bool is_left_ideal(finite_semigroup const&          S,
                     std::vector<element_type> const& I);
  bool is_ideal(finite_semigroup const& S, std::vector<element_type> const& I);

  // a lies in a subgroup iff a H a^2.
  bool in_subgroup(finite_semigroup const& S, element_type a);

  // Membership mask of a subset.
  std::vector<char> subset_mask(std::size_t                      n,
                                std::vector<element_type> const& X);

}  // namespace sgtool
