#include "sgtool/corpus.hpp"

#include "sgtool/construct.hpp"

namespace sgtool {

  namespace small {
    namespace {
      template <typename F>
      finite_semigroup build(std::size_t n, F f, std::vector<std::string> labels) {
        std::vector<element_type> t(n * n);
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = 0; b < n; ++b) {
            t[a * n + b] = static_cast<element_type>(f(a, b));
          }
        }
        return make_semigroup(n, std::move(t), std::move(labels));
      }

      std::vector<std::string> letters(std::size_t n, char first) {
        std::vector<std::string> out;
        for (std::size_t i = 0; i < n; ++i) {
          out.emplace_back(1, static_cast<char>(first + i));
        }
        return out;
      }

      std::vector<std::string> numbers(std::size_t n) {
        std::vector<std::string> out;
        for (std::size_t i = 0; i < n; ++i) {
          out.push_back(std::to_string(i));
        }
        return out;
      }
    }  // namespace

    finite_semigroup trivial() {
      return build(1, [](auto, auto) { return 0; }, {"e"});
    }

    finite_semigroup cyclic_group(std::size_t n) {
      return build(n, [n](auto a, auto b) { return (a + b) % n; }, numbers(n));
    }

    finite_semigroup left_zero(std::size_t n) {
      return build(n, [](auto a, auto) { return a; }, letters(n, 'a'));
    }

    finite_semigroup right_zero(std::size_t n) {
      return build(n, [](auto, auto b) { return b; }, letters(n, 'x'));
    }

    finite_semigroup null(std::size_t n) {
      auto labels = letters(n, 'a' - 1);
      labels[0]   = "0";
      return build(n, [](auto, auto) { return 0; }, labels);
    }

    finite_semigroup chain(std::size_t n) {
      std::vector<std::string> labels;
      for (std::size_t i = 0; i < n; ++i) {
        labels.push_back("e" + std::to_string(i));
      }
      return build(n, [](auto a, auto b) { return std::max(a, b); }, labels);
    }

    finite_semigroup monogenic(std::size_t index, std::size_t period) {
      auto const n = index + period - 1;
      std::vector<std::string> labels;
      for (std::size_t i = 1; i <= n; ++i) {
        labels.push_back(i == 1 ? "a" : "a^" + std::to_string(i));
      }
      // Element i is a^(i+1).
      auto reduce = [=](std::size_t e) {
        return e <= n ? e : index + (e - index) % period;
      };
      return build(n, [=](auto a, auto b) { return reduce(a + b + 2) - 1; }, labels);
    }

    finite_semigroup null_two_with_identity() {
      return build(
          3,
          [](auto a, auto b) -> std::size_t {
            if (a == 2) {
              return b;
            }
            return b == 2 ? a : 0;
          },
          {"0", "a", "1"});
    }
  }  // namespace small

  namespace {
    std::vector<corpus_entry> make_corpus() {
      using namespace small;
      std::vector<corpus_entry> c;
      auto add = [&](std::string id, semigroup_value v) {
        c.push_back({std::move(id), "builtin", std::move(v)});
      };
      add("trivial", trivial());
      add("z2", cyclic_group(2));
      add("z3", cyclic_group(3));
      add("z4", cyclic_group(4));
      add("klein", direct_product(cyclic_group(2), cyclic_group(2)));
      add("l2", left_zero(2));
      add("l3", left_zero(3));
      add("r2", right_zero(2));
      add("r3", right_zero(3));
      add("n2", null(2));
      add("n3", null(3));
      add("chain-2", chain(2));
      add("chain-3", chain(3));
      add("c-3-1", monogenic(3, 1));
      add("c-2-2", monogenic(2, 2));
      add("n2-1", null_two_with_identity());
      add("brandt-1-2", brandt(trivial(), 2));
      add("brandt-z2-1", brandt(cyclic_group(2), 1));
      add("brandt-n2-1", brandt(null(2), 1));
      add("u-z2-id", u_construction(cyclic_group(2), cyclic_group(2), {0, 1}, {0, 1}));
      add("u-trivial", u_construction(trivial(), trivial(), {0}, {0}));
      add("l2xr2", direct_product(left_zero(2), right_zero(2)));
      add("l2xn2", direct_product(left_zero(2), null(2)));
      add("r2xr2", direct_product(right_zero(2), right_zero(2)));
      {
        sandwich_matrix P{1, 2, {0, 0}};
        add("rees-z2-2-1", rees_matrix(cyclic_group(2), 2, 1, P, false));
      }
      {
        semilattice_diagram D{chain(2), {cyclic_group(2), cyclic_group(2)}, {{{0, 1}, {0, 1}}}};
        add("clifford-z2-chain", strong_semilattice(D));
      }
      {
        semilattice_diagram D{chain(2), {left_zero(2), left_zero(2)}, {{{0, 1}, {0, 0}}}};
        add("collapse-slice", strong_semilattice(D));
      }
      add("bicyclic", symbolic_family::bicyclic());
      add("free-1", symbolic_family::free_semigroup(1));
      add("free-2", symbolic_family::free_semigroup(2));
      add("fc-1", symbolic_family::free_commutative(1));
      add("fc-2", symbolic_family::free_commutative(2));
      add("polycyclic-1", symbolic_family::polycyclic(1));
      add("polycyclic-2", symbolic_family::polycyclic(2));
      add("br-trivial", symbolic_family::bruck_reilly(trivial(), {0}));
      add("br-z2-id", symbolic_family::bruck_reilly(cyclic_group(2), {0, 1}));
      add("br-n2-collapse", symbolic_family::bruck_reilly(null_two_with_identity(), {0, 0, 2}));
      add("null-3", symbolic_family::null(3));
      add("null-inf", symbolic_family::null(std::nullopt));
      add("u-family-z2-id", symbolic_family::u_construction(cyclic_group(2), cyclic_group(2), {0, 1}, {0, 1}));
      add("tfp", symbolic_family::trivial_free_product());
      add("z2-sl2", symbolic_family::z2_free_product_sl2());
      add("collapsing-chain", symbolic_family::collapsing_left_zero_chain());
      add("growing-chain", symbolic_family::growing_left_zero_chain());
      add("disjoint-chain", symbolic_family::disjoint_monogenic_chain());
      return c;
    }
  }  // namespace

  std::vector<corpus_entry> const& builtin_corpus() {
    static std::vector<corpus_entry> const c = make_corpus();
    return c;
  }

  std::optional<corpus_entry> find_builtin(std::string const& id) {
    for (auto const& e : builtin_corpus()) {
      if (e.id == id) {
        return e;
      }
    }
    return std::nullopt;
  }

  finite_semigroup builtin_semigroup(std::string const& id) {
    auto e = find_builtin(id);
    if (!e) {
      throw sgtool_error(error_kind::parse_error, "unknown builtin " + id);
    }
    if (auto S = std::get_if<finite_semigroup>(&e->value)) {
      return *S;
    }
    auto const& F = std::get<symbolic_family>(e->value);
    if (F.kind == family_kind::u_construction) {
      return F.table;
    }
    throw sgtool_error(error_kind::parse_error, "builtin " + id + " is not finite");
  }

}  // namespace sgtool
