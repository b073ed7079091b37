#pragma once

#include <cstddef>
#include <fstream>
#include <map>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "endok/endomorphism.hpp"
#include "endok/families.hpp"
#include "endok/quiver.hpp"
#include "endok/structure.hpp"

namespace endok {

using json = nlohmann::json;

/// Data needed to re-run a family corollary on a constructed algebra.
struct FamilyInstance {
  std::string kind;
  AlgebraPtr base;
  Subspace i, j;
  std::vector<std::vector<Subspace>> upper;
  Vec x, y;
  std::size_t n = 0;
  std::optional<MoritaContext> morita;
  std::optional<SkewGroupRing> skew;
  std::optional<BlockRing> blocks;
};

/// A parsed input document: the normalized JSON plus every object it names.
/// Objects are resolved in document order, so references point backwards.
struct Workspace {
  json document;
  Field field;
  std::string default_algebra;
  std::vector<std::string> order;
  std::map<std::string, std::string> types;
  std::map<std::string, AlgebraPtr> algebras;
  std::map<std::string, AlgElement> elements;
  std::map<std::string, Ideal> ideals;
  std::map<std::string, Bimodule> bimodules;
  std::map<std::string, Module> modules;
  std::map<std::string, ModuleHom> morphisms;
  std::map<std::string, FamilyInstance> families;

  const AlgebraPtr& algebra(const std::string& name) const { return get(algebras, name); }
  const AlgElement& element(const std::string& name) const { return get(elements, name); }
  const Ideal& ideal(const std::string& name) const { return get(ideals, name); }
  const Module& module(const std::string& name) const { return get(modules, name); }
  const ModuleHom& morphism(const std::string& name) const { return get(morphisms, name); }

  /// The algebra named by `name`, or the document default.
  const AlgebraPtr& main_algebra(const std::string& name = {}) const {
    return algebra(name.empty() ? default_algebra : name);
  }

 private:
  template <class M>
  static const typename M::mapped_type& get(const M& m, const std::string& name) {
    auto it = m.find(name);
    if (it == m.end()) throw UnresolvedReference(name);
    return it->second;
  }
};

namespace detail {

inline std::size_t line_of_offset(const std::string& text, std::size_t offset) {
  std::size_t line = 1;
  for (std::size_t k = 0; k < offset && k < text.size(); ++k)
    if (text[k] == '\n') ++line;
  return line;
}

inline std::size_t line_of_name(const std::string& text, const std::string& name) {
  std::string needle = "\"" + name + "\"";
  std::size_t at = 0;
  while ((at = text.find(needle, at)) != std::string::npos) {
    std::size_t back = text.rfind("\"name\"", at);
    if (back != std::string::npos && text.find_first_not_of(" \t\r\n:", back + 6) == at)
      return line_of_offset(text, at);
    at += needle.size();
  }
  return 0;
}

class Builder {
 public:
  Builder(Workspace& w, const std::string& text) : w_(w), text_(text) {}

  void run(json& doc) {
    if (!doc.is_object()) fail("document must be a JSON object");
    if (!doc.contains("endok") || doc["endok"] != 1) fail("missing or unsupported \"endok\" version (expected 1)");
    read_field(doc);
    if (!doc.contains("objects") || !doc["objects"].is_array()) fail("missing \"objects\" array");
    for (json& o : doc["objects"]) build(o);
    if (doc.contains("default")) {
      w_.default_algebra = str(doc, "default");
      w_.algebra(w_.default_algebra);
    } else {
      for (auto it = w_.order.rbegin(); it != w_.order.rend(); ++it)
        if (w_.types[*it] == "algebra") {
          w_.default_algebra = *it;
          break;
        }
    }
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw SchemaError(what, line_); }

  std::string str(const json& o, const char* key) const {
    if (!o.contains(key)) fail(std::string("missing field \"") + key + "\"");
    if (!o[key].is_string()) fail(std::string("field \"") + key + "\" must be a string");
    return o[key].get<std::string>();
  }

  std::size_t count(const json& o, const char* key) const {
    if (!o.contains(key)) fail(std::string("missing field \"") + key + "\"");
    if (!o[key].is_number_unsigned() && !(o[key].is_number_integer() && o[key].get<long long>() >= 0))
      fail(std::string("field \"") + key + "\" must be a nonnegative integer");
    return o[key].get<std::size_t>();
  }

  /// Reads an exact rational and rewrites the literal in canonical form.
  Scalar scalar(json& v) const {
    std::string text;
    if (v.is_number_integer()) {
      text = v.dump();
    } else if (v.is_string()) {
      text = v.get<std::string>();
    } else if (v.is_number_float()) {
      throw NonRationalLiteral(v.dump(), line_);
    } else {
      fail("expected a rational literal, got " + v.dump());
    }
    auto q = parse_rational(text);
    if (!q) throw NonRationalLiteral(text, line_);
    v = q->get_str();
    return w_.field.from(*q);
  }

  Vec vector(json& v, std::size_t n) const {
    if (!v.is_array() || v.size() != n) fail("expected a vector of length " + std::to_string(n));
    Vec out;
    for (json& x : v) out.push_back(scalar(x));
    return out;
  }

  Mat matrix(json& v, std::size_t rows, std::size_t cols) const {
    if (!v.is_array() || v.size() != rows) fail("expected a matrix with " + std::to_string(rows) + " rows");
    Mat m(w_.field, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      Vec row = vector(v[r], cols);
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
    }
    return m;
  }

  template <class M>
  const typename M::mapped_type& ref(const M& m, const json& o, const char* key) const {
    std::string name = str(o, key);
    auto it = m.find(name);
    if (it == m.end()) throw UnresolvedReference(name, line_);
    return it->second;
  }

  const AlgebraPtr& alg(const json& o, const char* key) const { return ref(w_.algebras, o, key); }

  /// Basis index given as an integer or a label.
  std::size_t basis_index(const std::vector<std::string>& labels, std::size_t n, const json& v) const {
    if (v.is_number_unsigned() || v.is_number_integer()) {
      auto k = v.get<long long>();
      if (k < 0 || static_cast<std::size_t>(k) >= n) fail("basis index out of range: " + v.dump());
      return static_cast<std::size_t>(k);
    }
    if (v.is_string()) {
      for (std::size_t k = 0; k < labels.size(); ++k)
        if (labels[k] == v.get<std::string>()) return k;
      throw UnresolvedReference(v.get<std::string>(), line_);
    }
    fail("expected a basis index or label");
  }

  Vec element_value(const AlgebraPtr& a, json& o) const {
    if (o.contains("coords")) return vector(o["coords"], a->dim());
    if (o.contains("terms")) {
      if (!o["terms"].is_object()) fail("\"terms\" must map basis labels to coefficients");
      Vec v = a->zero();
      for (auto it = o["terms"].begin(); it != o["terms"].end(); ++it) {
        std::size_t k = basis_index(a->labels(), a->dim(), json(it.key()));
        v[k] = w_.field.add(v[k], scalar(it.value()));
      }
      return v;
    }
    fail("element needs \"coords\" or \"terms\"");
  }

  Subspace subspace_ref(const AlgebraPtr& r, const json& v) const {
    if (v.is_string() && v.get<std::string>() == "R") return Subspace::full(r->field(), r->dim());
    if (!v.is_string()) fail("expected an ideal name or \"R\"");
    auto it = w_.ideals.find(v.get<std::string>());
    if (it == w_.ideals.end()) throw UnresolvedReference(v.get<std::string>(), line_);
    if (it->second.parent != r) fail("ideal '" + v.get<std::string>() + "' lives in another algebra");
    return it->second.space;
  }

  void read_field(json& doc) {
    if (!doc.contains("field")) {
      doc["field"] = "Q";
      return;
    }
    json& f = doc["field"];
    if (f.is_string() && f.get<std::string>() == "Q") {
      w_.field = Field::rationals();
    } else if (f.is_object() && f.contains("prime")) {
      w_.field = Field::prime(count(f, "prime"));
    } else {
      fail("field must be \"Q\" or {\"prime\": p}");
    }
  }

  void build(json& o) {
    if (!o.is_object()) fail("every object must be a JSON object");
    line_ = 0;
    std::string name = str(o, "name");
    line_ = line_of_name(text_, name);
    if (w_.types.count(name)) fail("duplicate name '" + name + "'");
    std::string type = str(o, "type");
    std::string kind = o.contains("kind") ? str(o, "kind") : "";
    if (type == "algebra") {
      w_.algebras[name] = build_algebra(name, kind, o);
    } else if (type == "element") {
      const AlgebraPtr& a = alg(o, "algebra");
      w_.elements[name] = {a, element_value(a, o)};
    } else if (type == "ideal") {
      w_.ideals[name] = build_ideal(kind, o);
    } else if (type == "bimodule") {
      w_.bimodules[name] = build_bimodule(kind, o);
    } else if (type == "module") {
      w_.modules[name] = build_module(name, kind, o);
    } else if (type == "morphism") {
      w_.morphisms[name] = build_morphism(kind, o);
    } else {
      fail("unknown object type '" + type + "'");
    }
    w_.types[name] = type;
    w_.order.push_back(name);
  }

  AlgebraPtr build_algebra(const std::string& name, const std::string& kind, json& o) {
    const Field& f = w_.field;
    if (kind == "ground_field") return ground_field(f);
    if (kind == "structure_constants") {
      std::size_t n = count(o, "dim");
      std::vector<std::string> labels;
      if (o.contains("labels")) {
        if (!o["labels"].is_array() || o["labels"].size() != n) fail("\"labels\" must list one label per basis element");
        for (const auto& l : o["labels"]) labels.push_back(l.get<std::string>());
      }
      std::vector<Product> table(n * n);
      if (!o.contains("products") || !o["products"].is_array()) fail("missing \"products\" array");
      for (json& p : o["products"]) {
        std::size_t i = basis_index(labels, n, p.at("left")), j = basis_index(labels, n, p.at("right"));
        Vec v = vector(p.at("value"), n);
        for (std::size_t k = 0; k < n; ++k)
          if (!is_zero(v[k])) table[i * n + j].push_back({k, v[k]});
      }
      if (!o.contains("unit")) fail("missing field \"unit\"");
      Vec unit = vector(o["unit"], n);
      return make_algebra(f, n, std::move(table), std::move(unit), std::move(labels), {"structure-constants", name, {}});
    }
    if (kind == "quiver") {
      QuiverPresentation q;
      std::map<std::string, std::size_t> vid, aid;
      for (const auto& v : o.at("vertices")) {
        vid[v.get<std::string>()] = q.vertices.size();
        q.vertices.push_back(v.get<std::string>());
      }
      auto vertex = [&](const json& a, const char* key) {
        std::string s = str(a, key);
        if (!vid.count(s)) throw UnresolvedReference(s, line_);
        return vid[s];
      };
      for (const auto& a : o.at("arrows")) {
        aid[str(a, "name")] = q.arrows.size();
        q.arrows.push_back({str(a, "name"), vertex(a, "from"), vertex(a, "to")});
      }
      if (o.contains("relations"))
        for (json& rel : o["relations"]) {
          Relation r;
          for (json& t : rel) {
            QuiverPath p;
            for (const auto& a : t.at("path")) {
              if (!aid.count(a.get<std::string>())) throw UnresolvedReference(a.get<std::string>(), line_);
              p.push_back(aid[a.get<std::string>()]);
            }
            r.push_back({scalar(t.at("coef")), p});
          }
          q.relations.push_back(std::move(r));
        }
      if (o.contains("nilpotency_bound")) q.nilpotency_bound = count(o, "nilpotency_bound");
      return path_algebra(q, f);
    }
    if (kind == "polynomial") {
      std::vector<Scalar> c;
      for (json& x : o.at("coefficients")) c.push_back(scalar(x));
      return polynomial_quotient(f, c);
    }
    if (kind == "product") {
      AlgebraPtr acc;
      for (const auto& n : o.at("factors")) {
        auto it = w_.algebras.find(n.get<std::string>());
        if (it == w_.algebras.end()) throw UnresolvedReference(n.get<std::string>(), line_);
        acc = acc ? product(*acc, *it->second) : it->second;
      }
      if (!acc) fail("product needs at least one factor");
      return acc;
    }
    if (kind == "opposite") return opposite(*alg(o, "of"));
    if (kind == "corner") {
      const AlgElement& e = ref(w_.elements, o, "element");
      return corner(*e.parent, e.coords).algebra;
    }
    if (kind == "quotient") {
      const Ideal& i = ref(w_.ideals, o, "ideal");
      return quotient(i).algebra;
    }
    if (kind == "end") return end_algebra(ref(w_.modules, o, "module")).algebra;
    if (kind == "matrix_ring") return family(name, "matrix_ring", alg(o, "of"), matrix_ring(alg(o, "of"), count(o, "n")));
    if (kind == "triangular" || kind == "morita_context") {
      MoritaContext mc = kind == "triangular" ? triangular_ring(ref(w_.bimodules, o, "bimodule"))
                                              : morita_from(o);
      FamilyInstance fi{kind, mc.m.left};
      fi.morita = mc;
      w_.families[name] = fi;
      return mc.ring.algebra;
    }
    if (kind == "trivial_extension") return trivial_extension(ref(w_.bimodules, o, "bimodule"));
    if (kind == "tiled") {
      const AlgebraPtr& r = alg(o, "of");
      Subspace j = subspace_ref(r, o.at("J"));
      std::vector<std::vector<Subspace>> up;
      for (const auto& row : o.at("upper")) {
        up.emplace_back();
        for (const auto& v : row) up.back().push_back(subspace_ref(r, v));
      }
      for (const auto& row : up)
        if (row.size() != up.size()) fail("\"upper\" must be square");
      BlockRing b = tiled_ring(r, j, up);
      FamilyInstance& fi = family_slot(name, "tiled", r, b);
      fi.j = j;
      fi.upper = up;
      fi.n = up.size();
      return b.algebra;
    }
    if (kind == "ji_zero") {
      const AlgebraPtr& r = alg(o, "of");
      Subspace i = subspace_ref(r, o.at("I")), j = subspace_ref(r, o.at("J"));
      BlockRing b = ji_zero_ring(r, i, j, count(o, "n"));
      FamilyInstance& fi = family_slot(name, "ji_zero", r, b);
      fi.i = i;
      fi.j = j;
      fi.n = b.n;
      return b.algebra;
    }
    if (kind == "checkerboard") {
      const AlgebraPtr& r = alg(o, "of");
      const AlgElement& x = ref(w_.elements, o, "x");
      const AlgElement& y = ref(w_.elements, o, "y");
      if (x.parent != r || y.parent != r) fail("checkerboard elements must lie in the base algebra");
      BlockRing b = checkerboard_ring(r, x.coords, y.coords, count(o, "n"));
      FamilyInstance& fi = family_slot(name, "checkerboard", r, b);
      fi.x = x.coords;
      fi.y = y.coords;
      fi.n = b.n;
      return b.algebra;
    }
    if (kind == "skew_group") {
      const AlgebraPtr& s = alg(o, "of");
      std::vector<Mat> g;
      for (json& m : o.at("group")) g.push_back(matrix(m, s->dim(), s->dim()));
      SkewGroupRing sg = skew_group_ring(s, g);
      FamilyInstance fi{"skew_group", s};
      fi.skew = sg;
      w_.families[name] = fi;
      return sg.algebra;
    }
    fail("unknown algebra kind '" + kind + "'");
  }

  MoritaContext morita_from(json& o) {
    const Bimodule& m = ref(w_.bimodules, o, "M");
    const Bimodule& n = ref(w_.bimodules, o, "N");
    std::vector<Vec> phi, psi;
    for (json& v : o.at("phi")) phi.push_back(vector(v, m.left->dim()));
    for (json& v : o.at("psi")) psi.push_back(vector(v, m.right->dim()));
    return morita_context(m, n, phi, psi);
  }

  FamilyInstance& family_slot(const std::string& name, const std::string& kind, const AlgebraPtr& base,
                              const BlockRing& b) {
    FamilyInstance& fi = w_.families[name];
    fi.kind = kind;
    fi.base = base;
    fi.blocks = b;
    return fi;
  }

  AlgebraPtr family(const std::string& name, const std::string& kind, const AlgebraPtr& base, const BlockRing& b) {
    FamilyInstance& fi = family_slot(name, kind, base, b);
    fi.n = b.n;
    return b.algebra;
  }

  Ideal build_ideal(const std::string& kind, json& o) {
    const AlgebraPtr& a = alg(o, "algebra");
    if (kind == "radical") return radical_ideal(a);
    if (kind == "power") {
      const Ideal& i = ref(w_.ideals, o, "ideal");
      return {a, ideal_power(*a, i.space, count(o, "exponent")), {}};
    }
    if (kind == "generated" || kind.empty()) {
      std::vector<Vec> gens;
      for (const auto& g : o.at("generators")) {
        auto it = w_.elements.find(g.get<std::string>());
        if (it == w_.elements.end()) throw UnresolvedReference(g.get<std::string>(), line_);
        if (it->second.parent != a) fail("generator '" + g.get<std::string>() + "' lives in another algebra");
        gens.push_back(it->second.coords);
      }
      std::string side = o.contains("side") ? str(o, "side") : "two";
      if (side == "two") return ideal_generated(a, gens);
      if (side == "left") return {a, left_ideal(*a, gens), gens};
      if (side == "right") return {a, right_ideal(*a, gens), gens};
      fail("side must be \"two\", \"left\" or \"right\"");
    }
    fail("unknown ideal kind '" + kind + "'");
  }

  Bimodule build_bimodule(const std::string& kind, json& o) {
    if (kind == "regular") return regular_bimodule(alg(o, "algebra"));
    if (kind == "ideal") {
      const Ideal& i = ref(w_.ideals, o, "ideal");
      return ideal_bimodule(i.parent, i.space);
    }
    if (kind == "zero") return zero_bimodule(alg(o, "left"), alg(o, "right"));
    fail("unknown bimodule kind '" + kind + "'");
  }

  Module build_module(const std::string& name, const std::string& kind, json& o) {
    if (kind == "regular") return regular_module(alg(o, "algebra")).renamed(name);
    if (kind == "left_ideal") {
      const Ideal& i = ref(w_.ideals, o, "ideal");
      return left_ideal_module(i.parent, i.space, name).module;
    }
    if (kind == "projective") {
      const AlgElement& e = ref(w_.elements, o, "element");
      return left_ideal_module(e.parent, left_ideal(*e.parent, {e.coords}), name).module;
    }
    if (kind == "socle") {
      const Module& m = ref(w_.modules, o, "module");
      return submodule(m, socle(m), name).module;
    }
    if (kind == "quotient") {
      const Ideal& i = ref(w_.ideals, o, "ideal");
      return quotient_module(regular_module(i.parent), i.space, name).module;
    }
    if (kind == "sum") {
      std::vector<Module> ms;
      for (const auto& n : o.at("summands")) {
        auto it = w_.modules.find(n.get<std::string>());
        if (it == w_.modules.end()) throw UnresolvedReference(n.get<std::string>(), line_);
        ms.push_back(it->second);
      }
      if (ms.empty()) fail("a sum needs at least one summand");
      return direct_sum(ms).module.renamed(name);
    }
    if (kind == "actions") {
      const AlgebraPtr& a = alg(o, "algebra");
      std::size_t d = count(o, "dim");
      if (!o.contains("actions") || !o["actions"].is_array() || o["actions"].size() != a->dim())
        fail("\"actions\" must give one matrix per basis element");
      std::vector<Mat> acts;
      for (json& m : o["actions"]) acts.push_back(matrix(m, d, d));
      return Module(a, d, std::move(acts), name);
    }
    fail("unknown module kind '" + kind + "'");
  }

  ModuleHom build_morphism(const std::string& kind, json& o) {
    if (kind == "socle_inclusion") {
      const Module& m = ref(w_.modules, o, "module");
      Sub s = submodule(m, socle(m), "soc");
      return make_hom(s.module, m, s.inclusion);
    }
    if (kind == "ideal_inclusion") {
      const Ideal& i = ref(w_.ideals, o, "ideal");
      Sub s = left_ideal_module(i.parent, i.space, "I");
      return make_hom(s.module, regular_module(i.parent), s.inclusion);
    }
    if (kind == "projection") {
      const Ideal& i = ref(w_.ideals, o, "ideal");
      Module r = regular_module(i.parent);
      Quo q = quotient_module(r, i.space, "R/I");
      return make_hom(r, q.module, q.projection);
    }
    if (kind == "identity") return identity_hom(ref(w_.modules, o, "module"));
    if (kind == "matrix") {
      const Module& s = ref(w_.modules, o, "source");
      const Module& t = ref(w_.modules, o, "target");
      return make_hom(s, t, matrix(o.at("matrix"), t.dim(), s.dim()));
    }
    fail("unknown morphism kind '" + kind + "'");
  }

  Workspace& w_;
  const std::string& text_;
  std::size_t line_ = 0;
};

}  // namespace detail

/// Parses a document from text.
inline Workspace parse_spec_text(const std::string& text) {
  Workspace w;
  try {
    w.document = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what(), detail::line_of_offset(text, e.byte));
  }
  detail::Builder(w, text).run(w.document);
  return w;
}

inline Workspace parse_spec(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_spec_text(ss.str());
}

/// Canonical text of a parsed document. parse(emit(w)) has the same document.
inline std::string emit_spec(const Workspace& w) { return w.document.dump(2) + "\n"; }

/// A document describing `a` by its structure constants.
inline json structure_constants_spec(const Algebra& a, const std::string& name) {
  json o = {{"name", name}, {"type", "algebra"}, {"kind", "structure_constants"}, {"dim", a.dim()}};
  o["labels"] = a.labels();
  json products = json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Vec v = a.mul_basis(i, j);
      if (is_zero(v)) continue;
      json vals = json::array();
      for (const auto& s : v) vals.push_back(to_string(s));
      products.push_back({{"left", i}, {"right", j}, {"value", vals}});
    }
  o["products"] = products;
  json unit = json::array();
  for (const auto& s : a.unit()) unit.push_back(to_string(s));
  o["unit"] = unit;
  json field = a.field().is_rationals() ? json("Q") : json{{"prime", a.field().characteristic()}};
  return {{"endok", 1}, {"field", field}, {"default", name}, {"objects", json::array({o})}};
}

}  // namespace endok
