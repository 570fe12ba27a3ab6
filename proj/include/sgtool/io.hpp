#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"

#include "sgtool/checkers.hpp"
#include "sgtool/corpus.hpp"
#include "sgtool/green.hpp"
#include "sgtool/semigroup.hpp"
#include "sgtool/symbolic.hpp"
#include "sgtool/verdict.hpp"

namespace sgtool {

  using json = nlohmann::json;

  // Throws parse_error carrying the line and column.
  json parse_json_text(std::string const& text);
  json read_json_file(std::filesystem::path const& path);

  // {"kind":"cayley","order":n,"labels":[...],"table":[[...]]}
  json             cayley_to_json(finite_semigroup const& S);
  finite_semigroup cayley_from_json(json const& doc);

  // {"kind":"family","variant":...,"params":{...}}
  json family_to_json(symbolic_family const& F);

  // Any document: cayley, family, or a construction document
  // (product | rees | rees0 | brandt | strong_semilattice | u_construction).
  // Semigroup references inside are inline documents, "builtin:<id>", or
  // paths relative to `base`.
  semigroup_value document_from_json(json const& doc,
                                     std::filesystem::path const& base = {});
  semigroup_value load_document(std::filesystem::path const& path);

  // A reference that must resolve to a finite semigroup.
  finite_semigroup resolve_finite(json const& ref, std::filesystem::path const& base);

  json to_json(wrn_verdict const& v);
  json to_json(theorem_report const& r);
  json to_json(suite_report const& r);
  json to_json(structure_flags const& f);
  json green_summary(finite_semigroup const& S, green_structure const& G);

}  // namespace sgtool
