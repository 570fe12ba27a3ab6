// sgtool: command line front end.
//
// Exit codes: 0 ok, 1 property failure, 2 input error.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "sgtool/checkers.hpp"
#include "sgtool/corpus.hpp"
#include "sgtool/enumerate.hpp"
#include "sgtool/error.hpp"
#include "sgtool/green.hpp"
#include "sgtool/io.hpp"
#include "sgtool/symbolic.hpp"

namespace fs = std::filesystem;
using namespace sgtool;

namespace {

  constexpr int exit_ok       = 0;
  constexpr int exit_property = 1;
  constexpr int exit_input    = 2;

  void emit(std::string const& text, std::string const& out) {
    if (out.empty()) {
      std::cout << text;
      if (!text.empty() && text.back() != '\n') {
        std::cout << '\n';
      }
      return;
    }
    std::ofstream f(out);
    if (!f) {
      throw sgtool_error(error_kind::parse_error, "cannot write " + out);
    }
    f << text;
    if (!text.empty() && text.back() != '\n') {
      f << '\n';
    }
  }

  // One table row per line, which keeps golden files diffable.
  std::string cayley_text(finite_semigroup const& S) {
    auto const doc = cayley_to_json(S);
    std::ostringstream os;
    os << "{\n  \"kind\": \"cayley\",\n  \"order\": " << S.size()
       << ",\n  \"labels\": " << doc["labels"].dump() << ",\n  \"table\": [\n";
    auto const& rows = doc["table"];
    for (std::size_t i = 0; i < rows.size(); ++i) {
      os << "    " << rows[i].dump() << (i + 1 < rows.size() ? ",\n" : "\n");
    }
    os << "  ]\n}\n";
    return os.str();
  }

  std::vector<std::string> labels_of(finite_semigroup const& S,
                                     std::vector<element_type> const& X) {
    std::vector<std::string> out;
    for (auto x : X) {
      out.push_back(S.label(x));
    }
    return out;
  }

  // A file, or builtin:<id>.
  semigroup_value load_input(std::string const& path) {
    if (path.rfind("builtin:", 0) == 0) {
      auto e = find_builtin(path.substr(8));
      if (!e) {
        throw sgtool_error(error_kind::parse_error, "unknown builtin " + path.substr(8));
      }
      return e->value;
    }
    return load_document(path);
  }

  // ---------------------------------------------------------------- validate

  int cmd_validate(std::string const& path) {
    auto const v = load_input(path);
    if (auto S = std::get_if<finite_semigroup>(&v)) {
      std::cout << "valid: semigroup of order " << S->size() << '\n';
    } else {
      auto const& F = std::get<symbolic_family>(v);
      std::cout << "valid: family " << to_string(F.kind) << '\n';
    }
    return exit_ok;
  }

  finite_semigroup as_finite(semigroup_value const& v) {
    if (auto S = std::get_if<finite_semigroup>(&v)) {
      return *S;
    }
    auto const& F = std::get<symbolic_family>(v);
    if (F.kind == family_kind::u_construction) {
      return F.table;
    }
    throw sgtool_error(error_kind::unsupported,
                       "family " + to_string(F.kind) + " has no Cayley table");
  }

  // ----------------------------------------------------------------- analyze

  json analyze_family_ideals(symbolic_family const& F, std::size_t bound) {
    auto const W = sym_enumerate(F, bound);
    json       bad = json::array();
    std::size_t checked = 0;
    for (std::size_t i = 0; i < W.size(); ++i) {
      for (std::size_t j = i + 1; j < W.size(); ++j) {
        ++checked;
        if (!principal_in_window(F, {W[i], W[j]}, W) && bad.size() < 10) {
          bad.push_back({to_string(F, W[i]), to_string(F, W[j])});
        }
      }
    }
    return {{"family", to_string(F.kind)},
            {"bound", bound},
            {"window_size", W.size()},
            {"generator_sets_checked", checked},
            {"principal_only", bad.empty()},
            {"non_principal_sample", bad}};
  }

  int cmd_analyze(std::string const& path, std::string const& report,
                  std::size_t bound, std::string const& out) {
    auto const v = load_input(path);
    auto const* F = std::get_if<symbolic_family>(&v);
    if (F != nullptr && F->kind != family_kind::u_construction) {
      if (report != "ideals") {
        throw sgtool_error(error_kind::unsupported,
                           "report " + report + " needs a finite semigroup");
      }
      emit(analyze_family_ideals(*F, bound).dump(2), out);
      return exit_ok;
    }
    auto const S = as_finite(v);
    auto const G = green(S);
    if (report == "green") {
      emit(green_summary(S, G).dump(2), out);
    } else if (report == "flags") {
      emit(to_json(compute_structure_flags(S)).dump(2), out);
    } else if (report == "eggbox-dot") {
      emit(eggbox_dot(S, G), out);
    } else if (report == "hasse-dot") {
      emit(r_hasse_dot(S, G), out);
    } else if (report == "ideals") {
      json list = json::array();
      for (auto const& I : all_right_ideals(S, G)) {
        list.push_back({{"elements", labels_of(S, I)},
                        {"generators", labels_of(S, min_generating_set(S, G, I))}});
      }
      emit(json{{"right_ideals", list.size()}, {"ideals", list}}.dump(2), out);
    } else {
      throw sgtool_error(error_kind::invalid_parameters, "unknown report " + report);
    }
    return exit_ok;
  }

  // --------------------------------------------------------------- construct

  int cmd_construct(std::string const& path, std::string const& out) {
    emit(cayley_text(as_finite(load_input(path))), out);
    return exit_ok;
  }

  // -------------------------------------------------------------- decide-wrn

  int cmd_decide(std::string const& path, std::size_t sample, std::string const& out) {
    auto const v = load_input(path);
    json       doc;
    if (std::holds_alternative<finite_semigroup>(v)) {
      wrn_verdict w;
      w.citation = "finite";
      doc        = to_json(w);
    } else {
      auto const& F = std::get<symbolic_family>(v);
      doc           = to_json(sym_wrn_verdict(F));
      doc["family"] = to_string(F.kind);
      if (antichain_generator(F)) {
        json a = json::array();
        for (auto const& x : antichain_witness(F, sample)) {
          a.push_back(to_string(F, x));
        }
        doc["antichain_sample"] = a;
      }
    }
    emit(doc.dump(2), out);
    return exit_ok;
  }

  // ----------------------------------------------------------------- witness

  int cmd_witness(std::string const& path, std::size_t k, std::string const& out) {
    auto const v = load_input(path);
    auto const F = std::get_if<symbolic_family>(&v);
    if (F == nullptr || !antichain_generator(*F)) {
      std::cerr << "NotApplicable: no antichain generator for this input\n";
      return exit_property;
    }
    json a = json::array();
    for (auto const& x : antichain_witness(*F, k)) {
      a.push_back(to_string(*F, x));
    }
    emit(json{{"family", to_string(F->kind)}, {"antichain", a}}.dump(2), out);
    return exit_ok;
  }

  // --------------------------------------------------------------- enumerate

  int cmd_enumerate(std::size_t order, std::string const& up_to, std::string const& out,
                    std::size_t jobs, bool allow_five) {
    if (up_to != "iso") {
      throw sgtool_error(error_kind::invalid_parameters,
                         "only --up-to=iso is supported");
    }
    auto const r = enumerate_semigroups(order, jobs, allow_five);
    std::cout << "order " << order << ": " << r.semigroups.size()
              << " up to isomorphism, " << r.labelled_count << " labelled\n";
    if (!out.empty()) {
      fs::create_directories(out);
      for (std::size_t i = 0; i < r.semigroups.size(); ++i) {
        char name[64];
        std::snprintf(name, sizeof name, "order-%zu-%05zu.json", order, i);
        emit(cayley_text(r.semigroups[i]), (fs::path(out) / name).string());
      }
    }
    return exit_ok;
  }

  // ------------------------------------------------------------------ verify

  struct corpus {
    std::vector<corpus_instance>                          finite;
    std::vector<std::pair<std::string, symbolic_family>> families;
    std::vector<suite_entry>                              rejected;
  };

  corpus builtin_verify_corpus(std::size_t jobs) {
    corpus c;
    for (auto const& e : builtin_corpus()) {
      if (auto S = std::get_if<finite_semigroup>(&e.value)) {
        c.finite.push_back({e.id, *S});
        continue;
      }
      auto const& F = std::get<symbolic_family>(e.value);
      if (F.kind == family_kind::u_construction) {
        c.finite.push_back({e.id, F.table});
      }
      c.families.emplace_back(e.id, F);
    }
    for (std::size_t n = 1; n <= 4; ++n) {
      auto const r = enumerate_semigroups(n, jobs);
      for (std::size_t i = 0; i < r.semigroups.size(); ++i) {
        char id[32];
        std::snprintf(id, sizeof id, "enum-%zu-%04zu", n, i);
        c.finite.push_back({id, r.semigroups[i]});
      }
    }
    return c;
  }

  corpus directory_corpus(fs::path const& dir) {
    if (!fs::is_directory(dir)) {
      throw sgtool_error(error_kind::parse_error, "not a directory: " + dir.string());
    }
    std::vector<fs::path> files;
    for (auto const& f : fs::directory_iterator(dir)) {
      if (f.is_regular_file() && f.path().extension() == ".json") {
        files.push_back(f.path());
      }
    }
    std::sort(files.begin(), files.end());
    corpus c;
    for (auto const& f : files) {
      auto const id = f.filename().string();
      try {
        auto v = load_document(f);
        if (auto S = std::get_if<finite_semigroup>(&v)) {
          c.finite.push_back({id, *S});
        } else {
          c.families.emplace_back(id, std::get<symbolic_family>(v));
        }
      } catch (sgtool_error const& e) {
        c.rejected.push_back(
            {id, "validate", false, e.what()});
      }
    }
    return c;
  }

  int cmd_verify(std::string const& source, std::size_t jobs, std::string const& out) {
    auto const start = std::chrono::steady_clock::now();
    auto const c = source == "builtin" ? builtin_verify_corpus(jobs) : directory_corpus(source);

    auto rep = verify_theorem_suite(c.finite, jobs);
    auto fam = verify_family_suite(c.families);
    rep.instances += fam.instances + c.rejected.size();
    rep.entries.insert(rep.entries.end(), fam.entries.begin(), fam.entries.end());
    rep.entries.insert(rep.entries.end(), c.rejected.begin(), c.rejected.end());
    std::stable_sort(rep.entries.begin(), rep.entries.end(), [](auto const& a, auto const& b) {
      return std::tie(a.id, a.check) < std::tie(b.id, b.check);
    });
    double const secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    std::map<std::string, std::pair<std::size_t, std::size_t>> by_check;
    for (auto const& e : rep.entries) {
      auto& [pass, total] = by_check[e.check];
      pass += e.pass;
      ++total;
    }
    std::printf("%-22s %8s %8s\n", "check", "pass", "total");
    for (auto const& [check, pt] : by_check) {
      std::printf("%-22s %8zu %8zu\n", check.c_str(), pt.first, pt.second);
    }
    for (auto const& e : rep.entries) {
      if (!e.pass) {
        std::printf("FAIL %s %s: %s\n", e.id.c_str(), e.check.c_str(), e.detail.c_str());
      }
    }
    std::printf("instances %zu, checks %zu, failures %zu, %.2f s\n", rep.instances,
                rep.entries.size(), rep.failures(), secs);
    if (!out.empty()) {
      auto doc       = to_json(rep);
      doc["seconds"] = secs;
      emit(doc.dump(2), out);
    }
    return rep.failures() == 0 ? exit_ok : exit_property;
  }

  void report_error(sgtool_error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    if (!e.witness().empty()) {
      std::cerr << "witness: (";
      for (std::size_t i = 0; i < e.witness().size(); ++i) {
        std::cerr << (i ? ", " : "") << e.witness()[i];
      }
      std::cerr << ")\n";
    }
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite semigroups, symbolic families and weak right noetherianity"};
  app.require_subcommand(1);

  std::string path, out, report = "green", corpus_src = "builtin", up_to = "iso";
  std::size_t bound = 10, sample = 5, jobs = 1, order = 0;
  bool        allow_five = false;

  auto* validate = app.add_subcommand("validate", "Check a Cayley table or family document");
  validate->add_option("path", path)->required();

  auto* analyze = app.add_subcommand("analyze", "Green's relations, ideals, flags or DOT");
  analyze->add_option("path", path)->required();
  analyze->add_option("--report", report)
      ->check(CLI::IsMember({"green", "ideals", "flags", "eggbox-dot", "hasse-dot"}));
  analyze->add_option("--bound", bound, "Window size for families");
  analyze->add_option("--out", out);

  auto* construct = app.add_subcommand("construct", "Materialise a construction document");
  construct->add_option("path", path)->required();
  construct->add_option("--out", out);

  auto* decide = app.add_subcommand("decide-wrn", "Decide weak right noetherianity");
  decide->add_option("path", path)->required();
  decide->add_option("--bound", sample, "Antichain sample size");
  decide->add_option("--out", out);

  auto* witness = app.add_subcommand("witness", "First members of an infinite antichain");
  witness->add_option("path", path)->required();
  witness->add_option("--bound", sample, "Number of members");
  witness->add_option("--out", out);

  auto* enumerate = app.add_subcommand("enumerate", "All semigroups of a small order");
  enumerate->add_option("order", order)->required();
  enumerate->add_option("--up-to", up_to);
  enumerate->add_option("--out", out, "Directory for one file per semigroup");
  enumerate->add_option("--jobs", jobs);
  enumerate->add_flag("--allow-order-five", allow_five);

  auto* verify = app.add_subcommand("verify", "Run the property suites over a corpus");
  verify->add_option("--corpus", corpus_src, "Directory or \"builtin\"");
  verify->add_option("--jobs", jobs);
  verify->add_option("--out", out, "JSON report");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const rc = app.exit(e);
    return rc == 0 ? exit_ok : exit_input;
  }

  try {
    if (*validate) return cmd_validate(path);
    if (*analyze) return cmd_analyze(path, report, bound, out);
    if (*construct) return cmd_construct(path, out);
    if (*decide) return cmd_decide(path, sample, out);
    if (*witness) return cmd_witness(path, sample, out);
    if (*enumerate) return cmd_enumerate(order, up_to, out, jobs, allow_five);
    if (*verify) return cmd_verify(corpus_src, jobs, out);
  } catch (sgtool_error const& e) {
    report_error(e);
    return exit_input;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_input;
  }
  return exit_input;
}
