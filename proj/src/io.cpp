#include "sgtool/io.hpp"

#include <fstream>
#include <sstream>

#include "sgtool/construct.hpp"

namespace sgtool {

  namespace fs = std::filesystem;

  json parse_json_text(std::string const& text) {
    try {
      return json::parse(text);
    } catch (json::parse_error const& e) {
      // Recover line and column from the byte offset.
      std::size_t line = 1, col = 1;
      for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
          ++line;
          col = 1;
        } else {
          ++col;
        }
      }
      throw sgtool_error(error_kind::parse_error,
                         "line " + std::to_string(line) + ", column " +
                             std::to_string(col) + ": " + e.what(),
                         {line, col});
    }
  }

  json read_json_file(fs::path const& path) {
    std::ifstream in(path);
    if (!in) {
      throw sgtool_error(error_kind::parse_error, "cannot read " + path.string());
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json_text(ss.str());
  }

  json cayley_to_json(finite_semigroup const& S) {
    json rows = json::array();
    for (element_type a = 0; a < S.size(); ++a) {
      json row = json::array();
      for (element_type b = 0; b < S.size(); ++b) {
        row.push_back(S.product(a, b));
      }
      rows.push_back(row);
    }
    json labels = json::array();
    for (element_type a = 0; a < S.size(); ++a) {
      labels.push_back(S.label(a));
    }
    return {{"kind", "cayley"}, {"order", S.size()}, {"labels", labels}, {"table", rows}};
  }

  finite_semigroup cayley_from_json(json const& doc) {
    if (!doc.is_object() || !doc.contains("table")) {
      throw sgtool_error(error_kind::parse_error, "cayley document needs a table");
    }
    auto const& t = doc["table"];
    if (!t.is_array()) {
      throw sgtool_error(error_kind::parse_error, "table must be an array of rows");
    }
    std::vector<std::vector<std::int64_t>> rows;
    for (auto const& r : t) {
      if (!r.is_array()) {
        throw sgtool_error(error_kind::parse_error, "table row must be an array");
      }
      std::vector<std::int64_t> row;
      for (auto const& x : r) {
        if (!x.is_number_integer()) {
          throw sgtool_error(error_kind::parse_error, "table entry must be an integer");
        }
        row.push_back(x.get<std::int64_t>());
      }
      rows.push_back(std::move(row));
    }
    if (doc.contains("order")) {
      if (!doc["order"].is_number_integer() ||
          doc["order"].get<std::int64_t>() != static_cast<std::int64_t>(rows.size())) {
        throw sgtool_error(error_kind::not_square, "order does not match the table");
      }
    }
    std::vector<std::string> labels;
    if (doc.contains("labels") && !doc["labels"].is_null()) {
      for (auto const& l : doc["labels"]) {
        labels.push_back(l.is_string() ? l.get<std::string>() : l.dump());
      }
    }
    return validate_semigroup(rows, labels);
  }

  namespace {
    std::vector<element_type> index_array(json const& j, char const* what) {
      if (!j.is_array()) {
        throw sgtool_error(error_kind::parse_error, std::string(what) + " must be an array");
      }
      std::vector<element_type> out;
      for (auto const& x : j) {
        if (!x.is_number_integer() || x.get<std::int64_t>() < 0) {
          throw sgtool_error(error_kind::parse_error,
                             std::string(what) + " entries must be nonnegative integers");
        }
        out.push_back(x.get<element_type>());
      }
      return out;
    }

    std::size_t count(json const& p, std::initializer_list<char const*> keys) {
      for (auto k : keys) {
        if (p.contains(k)) {
          if (!p[k].is_number_integer() || p[k].get<std::int64_t>() < 1) {
            throw sgtool_error(error_kind::parse_error,
                               std::string(k) + " must be a positive integer");
          }
          return p[k].get<std::size_t>();
        }
      }
      throw sgtool_error(error_kind::parse_error,
                         std::string("missing parameter ") + *keys.begin());
    }

    json const& params_of(json const& doc) {
      return doc.contains("params") ? doc["params"] : doc;
    }

    json const& field(json const& p, char const* key) {
      if (!p.contains(key)) {
        throw sgtool_error(error_kind::parse_error, std::string("missing parameter ") + key);
      }
      return p[key];
    }

    symbolic_family family_from_json(json const& doc, fs::path const& base) {
      auto const  variant = family_kind_from_string(field(doc, "variant").get<std::string>());
      json const  empty   = json::object();
      json const& p       = doc.contains("params") ? doc["params"] : empty;
      switch (variant) {
        case family_kind::free_semigroup:
          return symbolic_family::free_semigroup(count(p, {"k", "rank"}));
        case family_kind::free_commutative:
          return symbolic_family::free_commutative(count(p, {"n", "rank"}));
        case family_kind::bicyclic: return symbolic_family::bicyclic();
        case family_kind::polycyclic:
          return symbolic_family::polycyclic(count(p, {"k", "rank"}));
        case family_kind::bruck_reilly:
          return symbolic_family::bruck_reilly(resolve_finite(field(p, "monoid"), base),
                                               index_array(field(p, "theta"), "theta"));
        case family_kind::null: {
          if (!p.contains("size") || p["size"].is_string()) {
            return symbolic_family::null(std::nullopt);
          }
          if (!p["size"].is_number_integer() || p["size"].get<std::int64_t>() < 0) {
            throw sgtool_error(error_kind::parse_error, "size must be a count or \"infinite\"");
          }
          return symbolic_family::null(p["size"].get<std::size_t>());
        }
        case family_kind::u_construction:
          return symbolic_family::u_construction(
              resolve_finite(field(p, "S"), base), resolve_finite(field(p, "T"), base),
              index_array(field(p, "theta"), "theta"), index_array(field(p, "phi"), "phi"));
        case family_kind::trivial_free_product: return symbolic_family::trivial_free_product();
        case family_kind::z2_free_product_sl2: return symbolic_family::z2_free_product_sl2();
        case family_kind::collapsing_left_zero_chain:
          return symbolic_family::collapsing_left_zero_chain();
        case family_kind::growing_left_zero_chain:
          return symbolic_family::growing_left_zero_chain();
        case family_kind::disjoint_monogenic_chain:
          return symbolic_family::disjoint_monogenic_chain();
      }
      throw sgtool_error(error_kind::parse_error, "unknown family variant");
    }

    sandwich_matrix matrix_from_json(json const& j, std::size_t I, std::size_t J) {
      if (!j.is_array() || j.size() != J) {
        throw sgtool_error(error_kind::invalid_parameters, "P must have |J| rows");
      }
      sandwich_matrix P{J, I, {}};
      for (auto const& row : j) {
        if (!row.is_array() || row.size() != I) {
          throw sgtool_error(error_kind::invalid_parameters, "P rows must have |I| entries");
        }
        for (auto const& x : row) {
          if (x.is_null()) {
            P.entries.push_back(sandwich_zero);
          } else if (x.is_number_integer()) {
            P.entries.push_back(x.get<std::int64_t>());
          } else {
            throw sgtool_error(error_kind::parse_error, "P entries are integers or null");
          }
        }
      }
      return P;
    }

    semigroup_value document_impl(json const& doc, fs::path const& base) {
      if (!doc.is_object()) {
        throw sgtool_error(error_kind::parse_error, "document must be an object");
      }
      auto const kind = doc.value("kind", std::string("cayley"));
      if (kind == "cayley") {
        return cayley_from_json(doc);
      }
      if (kind == "family") {
        return family_from_json(doc, base);
      }
      auto const& p = params_of(doc);
      if (kind == "product") {
        return direct_product(resolve_finite(field(p, "S"), base),
                              resolve_finite(field(p, "T"), base));
      }
      if (kind == "rees" || kind == "rees0") {
        auto const I = count(p, {"I"}), J = count(p, {"J"});
        return rees_matrix(resolve_finite(field(p, "S"), base), I, J,
                           matrix_from_json(field(p, "P"), I, J), kind == "rees0");
      }
      if (kind == "brandt") {
        return brandt(resolve_finite(field(p, "S"), base), count(p, {"I"}));
      }
      if (kind == "strong_semilattice") {
        semilattice_diagram D;
        D.Y = resolve_finite(field(p, "Y"), base);
        for (auto const& c : field(p, "components")) {
          D.components.push_back(resolve_finite(c, base));
        }
        if (p.contains("homs")) {
          for (auto const& h : p["homs"]) {
            D.homs[{field(h, "from").get<element_type>(), field(h, "to").get<element_type>()}] =
                index_array(field(h, "map"), "map");
          }
        }
        return strong_semilattice(D);
      }
      if (kind == "u_construction") {
        return u_construction(resolve_finite(field(p, "S"), base),
                              resolve_finite(field(p, "T"), base),
                              index_array(field(p, "theta"), "theta"),
                              index_array(field(p, "phi"), "phi"));
      }
      throw sgtool_error(error_kind::parse_error, "unknown document kind " + kind);
    }
  }  // namespace

  json family_to_json(symbolic_family const& F) {
    json p = json::object();
    switch (F.kind) {
      case family_kind::free_semigroup:
      case family_kind::polycyclic: p["k"] = F.rank; break;
      case family_kind::free_commutative: p["n"] = F.rank; break;
      case family_kind::bruck_reilly:
        p["monoid"] = cayley_to_json(F.base);
        p["theta"]  = F.theta;
        break;
      case family_kind::null:
        if (F.null_size) {
          p["size"] = *F.null_size;
        } else {
          p["size"] = "infinite";
        }
        break;
      case family_kind::u_construction:
        p["S"]     = cayley_to_json(F.base);
        p["T"]     = cayley_to_json(F.target);
        p["theta"] = F.theta;
        p["phi"]   = F.phi;
        break;
      default: break;
    }
    return {{"kind", "family"}, {"variant", to_string(F.kind)}, {"params", p}};
  }

  semigroup_value document_from_json(json const& doc, fs::path const& base) {
    try {
      return document_impl(doc, base);
    } catch (json::exception const& e) {
      throw sgtool_error(error_kind::parse_error, e.what());
    }
  }

  semigroup_value load_document(fs::path const& path) {
    return document_from_json(read_json_file(path), path.parent_path());
  }

  finite_semigroup resolve_finite(json const& ref, fs::path const& base) {
    semigroup_value v;
    if (ref.is_string()) {
      auto s = ref.get<std::string>();
      if (s.rfind("builtin:", 0) == 0) {
        return builtin_semigroup(s.substr(8));
      }
      fs::path p = s;
      v          = load_document(p.is_absolute() ? p : base / p);
    } else {
      v = document_from_json(ref, base);
    }
    if (auto S = std::get_if<finite_semigroup>(&v)) {
      return *S;
    }
    auto const& F = std::get<symbolic_family>(v);
    if (F.kind == family_kind::u_construction) {
      return F.table;
    }
    throw sgtool_error(error_kind::parse_error, "reference must be a finite semigroup");
  }

  json to_json(wrn_verdict const& v) {
    json j = {{"verdict", to_string(v.value)},
              {"witness", to_string(v.witness)},
              {"citation", v.citation}};
    if (!v.generator.empty()) {
      j["generator"] = v.generator;
    }
    if (!v.cycle.empty()) {
      json c = json::array();
      for (auto const& e : v.cycle) {
        c.push_back({{"from", e.from}, {"to", e.to}, {"loose", e.loose}});
      }
      j["cycle"] = c;
    }
    return j;
  }

  json to_json(theorem_report const& r) {
    json conds = json::array();
    for (auto const& c : r.conditions) {
      json x = {{"name", c.name}, {"holds", c.holds}};
      if (!c.holds) {
        x["witness"] = c.witness;
        if (!c.witness_elements.empty()) {
          x["witness_elements"] = c.witness_elements;
        }
      }
      conds.push_back(x);
    }
    json stats = json::object();
    for (auto const& [k, v] : r.statistics) {
      stats[k] = v;
    }
    json j = {{"theorem", r.tag},
              {"citation", r.citation},
              {"conditions", conds},
              {"statistics", stats},
              {"notes", r.notes}};
    j["verdict"] = r.overall ? json(to_string(*r.overall)) : json(nullptr);
    return j;
  }

  json to_json(suite_report const& r) {
    json entries = json::array();
    for (auto const& e : r.entries) {
      entries.push_back({{"id", e.id}, {"check", e.check}, {"pass", e.pass}, {"detail", e.detail}});
    }
    return {{"instances", r.instances}, {"failures", r.failures()}, {"entries", entries}};
  }

  json to_json(structure_flags const& f) {
    return {{"commutative", f.commutative},
            {"band", f.band},
            {"semilattice", f.semilattice},
            {"regular", f.regular},
            {"inverse", f.inverse},
            {"completely_regular", f.completely_regular},
            {"group", f.group},
            {"nilpotent", f.nilpotent},
            {"has_zero", f.has_zero},
            {"has_identity", f.has_identity},
            {"local_right_identities", f.local_right_identities}};
  }

  json green_summary(finite_semigroup const& S, green_structure const& G) {
    auto named = [&](std::vector<std::size_t> const& part) {
      json out = json::array();
      for (auto const& cls : classes_of(part)) {
        json c = json::array();
        for (auto a : cls) {
          c.push_back(S.label(a));
        }
        out.push_back(c);
      }
      return out;
    };
    return {{"counts", {{"R", G.num_r}, {"L", G.num_l}, {"H", G.num_h}, {"D", G.num_d}, {"J", G.num_j}}},
            {"R", named(G.r)},
            {"L", named(G.l)},
            {"H", named(G.h)},
            {"D", named(G.d)},
            {"J", named(G.j)}};
  }

}  // namespace sgtool
