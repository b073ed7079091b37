#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "endok/algebra.hpp"

namespace endok {

struct Arrow {
  std::string name;
  std::size_t source;
  std::size_t target;
};

/// A relation is a linear combination of paths, each path a sequence of
/// arrow indices read left to right.
using QuiverPath = std::vector<std::size_t>;
using Relation = std::vector<std::pair<Scalar, QuiverPath>>;

struct QuiverPresentation {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::vector<Relation> relations;
  std::size_t nilpotency_bound = 12;
};

namespace detail {

struct PathRec {
  std::size_t source;
  std::size_t target;
  QuiverPath arrows;  // empty for the trivial path at `source`
};

inline std::size_t codepoints(const std::string& s) {
  std::size_t n = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++n;
  return n;
}

inline std::string path_label(const QuiverPresentation& q, const PathRec& p, bool compact) {
  if (p.arrows.empty()) return "e" + q.vertices[p.source];
  std::string s;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i && !compact) s += "*";
    s += q.arrows[p.arrows[i]].name;
  }
  return s;
}

/// All paths of length <= len, by increasing length.
inline std::vector<PathRec> enumerate_paths(const QuiverPresentation& q, std::size_t len) {
  std::vector<PathRec> out;
  for (std::size_t v = 0; v < q.vertices.size(); ++v) out.push_back({v, v, {}});
  std::size_t layer_begin = 0, layer_end = out.size();
  for (std::size_t l = 1; l <= len; ++l) {
    for (std::size_t i = layer_begin; i < layer_end; ++i)
      for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        if (q.arrows[a].source != out[i].target) continue;
        PathRec p = out[i];
        p.arrows.push_back(a);
        p.target = q.arrows[a].target;
        out.push_back(std::move(p));
      }
    layer_begin = layer_end;
    layer_end = out.size();
  }
  return out;
}

}  // namespace detail

inline void validate_quiver(const QuiverPresentation& q) {
  const std::size_t nv = q.vertices.size();
  if (nv == 0) throw Error("quiver has no vertices");
  for (const auto& a : q.arrows)
    if (a.source >= nv || a.target >= nv) throw Error("arrow " + a.name + " has an unknown endpoint");
  for (const auto& rel : q.relations) {
    bool first = true;
    std::size_t src = 0, tgt = 0;
    for (const auto& [c, path] : rel) {
      if (path.size() < 2) throw Error("relations must be combinations of paths of length at least 2");
      for (std::size_t i = 0; i < path.size(); ++i) {
        if (path[i] >= q.arrows.size()) throw Error("relation uses an unknown arrow");
        if (i && q.arrows[path[i - 1]].target != q.arrows[path[i]].source)
          throw Error("relation contains a path that does not compose");
      }
      std::size_t s = q.arrows[path.front()].source, t = q.arrows[path.back()].target;
      if (first) {
        src = s;
        tgt = t;
        first = false;
      } else if (s != src || t != tgt) {
        throw Error("relation mixes paths with different endpoints");
      }
    }
  }
}

/// Path algebra of the quiver modulo the relations. Paths compose left to
/// right: p*q is "p then q", so e_i A e_j is spanned by paths from i to j.
/// The arrow ideal must become nilpotent modulo the relations within the
/// nilpotency bound.
inline AlgebraPtr path_algebra(const QuiverPresentation& q, Field field = Field::rationals()) {
  validate_quiver(q);
  bool compact = true;
  for (const auto& a : q.arrows)
    if (detail::codepoints(a.name) != 1) compact = false;

  for (std::size_t len = 1; len <= q.nilpotency_bound; ++len) {
    // Truncated path algebra kQ / (paths of length > len).
    auto paths = detail::enumerate_paths(q, len);
    const std::size_t n = paths.size();
    std::map<std::pair<std::size_t, QuiverPath>, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) index[{paths[i].source, paths[i].arrows}] = i;

    auto concat = [&](std::size_t i, std::size_t j) -> std::optional<std::size_t> {
      const auto& p = paths[i];
      const auto& r = paths[j];
      if (p.target != r.source) return std::nullopt;
      if (p.arrows.size() + r.arrows.size() > len) return std::nullopt;
      QuiverPath w = p.arrows;
      w.insert(w.end(), r.arrows.begin(), r.arrows.end());
      return index.at({p.source, w});
    };

    std::vector<Product> table(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (auto k = concat(i, j)) table[i * n + j].push_back({*k, Scalar(1)});
    Vec unit = zero_vec(n);
    for (std::size_t v = 0; v < q.vertices.size(); ++v) unit[v] = 1;
    std::vector<std::string> labels;
    for (const auto& p : paths) labels.push_back(detail::path_label(q, p, compact));
    auto big = std::make_shared<const Algebra>(field, n, std::move(table), unit, labels);

    std::vector<Vec> gens;
    for (std::size_t v = 0; v < q.vertices.size(); ++v) gens.push_back(unit_vec(n, v));
    for (std::size_t a = 0; a < q.arrows.size(); ++a)
      gens.push_back(unit_vec(n, index.at({q.arrows[a].source, QuiverPath{a}})));
    big->set_generators(gens);

    std::vector<Vec> rels;
    for (const auto& rel : q.relations) {
      Vec v = zero_vec(n);
      for (const auto& [c, path] : rel) {
        if (path.size() > len) continue;
        std::size_t k = index.at({q.arrows[path.front()].source, path});
        v[k] = field.add(v[k], field.from(c));
      }
      rels.push_back(std::move(v));
    }
    Subspace ideal = mult_closure(*big, rels, true, true);

    bool nilpotent = true;
    for (std::size_t i = 0; i < n && nilpotent; ++i)
      if (paths[i].arrows.size() == len && !ideal.contains(unit_vec(n, i))) nilpotent = false;
    if (!nilpotent) continue;

    Quotient quo = quotient(*big, ideal);
    // Vertices and arrows are never pivots (the ideal lies in the square of
    // the arrow ideal), so they survive as basis elements of the quotient.
    std::vector<std::size_t> vert_idx, arrow_idx;
    auto pos = [&](std::size_t col) {
      for (std::size_t i = 0; i < quo.columns.size(); ++i)
        if (quo.columns[i] == col) return i;
      throw Error("quiver generator was absorbed by the relations");
    };
    for (std::size_t v = 0; v < q.vertices.size(); ++v) vert_idx.push_back(pos(v));
    for (std::size_t a = 0; a < q.arrows.size(); ++a)
      arrow_idx.push_back(pos(index.at({q.arrows[a].source, QuiverPath{a}})));

    const Algebra& qa = *quo.algebra;
    std::vector<Product> tbl = qa.table();
    Provenance prov{"quiver", "", {{"vertices", vert_idx}, {"arrows", arrow_idx}}};
    auto out = std::make_shared<const Algebra>(field, qa.dim(), std::move(tbl), qa.unit(), qa.labels(),
                                               std::move(prov));
    std::vector<Vec> qgens;
    for (auto i : vert_idx) qgens.push_back(unit_vec(qa.dim(), i));
    for (auto i : arrow_idx) qgens.push_back(unit_vec(qa.dim(), i));
    out->set_generators(std::move(qgens));
    return out;
  }
  throw NotFiniteDimensional(q.nilpotency_bound);
}

/// Index of a vertex idempotent or arrow in an algebra built by path_algebra.
inline std::vector<std::size_t> provenance_block(const Algebra& a, const std::string& name) {
  for (const auto& [k, v] : a.provenance().blocks)
    if (k == name) return v;
  return {};
}

}  // namespace endok
