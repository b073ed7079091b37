#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "endok/homalg.hpp"

namespace endok {

/// Hom_A(M, N) with a canonical basis; coordinates are read off pivots.
struct HomSpace {
  Module source, target;
  Subspace flat;  ///< flattened matrices
  std::vector<Mat> basis;

  std::size_t dim() const { return basis.size(); }
  Vec coords(const Mat& h) const { return flat.coords(h.flatten()); }
  bool contains(const Mat& h) const { return flat.contains(h.flatten()); }
  Mat matrix(const Vec& c) const {
    return Mat::unflatten(source.field(), flat.from_coords(c), target.dim(), source.dim());
  }
};

inline HomSpace make_hom_space(const Module& m, const Module& n) {
  HomSpace h{m, n, {}, {}};
  std::vector<Vec> flats;
  for (const Mat& b : hom_space(m, n)) flats.push_back(b.flatten());
  h.flat = Subspace::span(m.field(), n.dim() * m.dim(), flats);
  for (const Vec& v : h.flat.basis()) h.basis.push_back(Mat::unflatten(m.field(), v, n.dim(), m.dim()));
  return h;
}

/// Matrix (in Hom coordinates) of a linear map between Hom spaces given on
/// matrices.
template <class F>
Mat hom_map(const HomSpace& from, const HomSpace& to, F f) {
  Mat m(from.source.field(), to.dim(), from.dim());
  for (std::size_t j = 0; j < from.dim(); ++j) {
    Vec c = to.coords(f(from.basis[j]));
    for (std::size_t i = 0; i < to.dim(); ++i) m(i, j) = c[i];
  }
  return m;
}

/// End_A(M) with composition read left to right: f * g = "f then g",
/// whose matrix is G F.
struct EndAlgebra {
  HomSpace hom;
  AlgebraPtr algebra;

  Mat matrix(const Vec& c) const { return hom.matrix(c); }
  Vec coords(const Mat& h) const { return hom.coords(h); }
  std::vector<Mat> generator_matrices() const {
    std::vector<Mat> out;
    for (const Vec& g : algebra->generators()) out.push_back(matrix(g));
    return out;
  }
};

inline EndAlgebra end_algebra(const Module& m) {
  if (m.dim() == 0) throw ZeroModule();
  HomSpace h = make_hom_space(m, m);
  const std::size_t d = h.dim();
  std::vector<Product> table(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vec c = h.flat.pivot_coords((h.basis[j] * h.basis[i]).flatten());
      for (std::size_t k = 0; k < d; ++k)
        if (!is_zero(c[k])) table[i * d + j].push_back({k, c[k]});
    }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < d; ++i) labels.push_back("f" + std::to_string(i));
  auto alg = make_algebra(m.field(), d, std::move(table), h.coords(Mat::identity(m.field(), m.dim())),
                          std::move(labels), {"endomorphism", m.name(), {}});
  return {std::move(h), std::move(alg)};
}

/// Endomorphisms of X factoring through add(Y): the span of all
/// composites X -> Y -> X.
inline Ideal trace_ideal_through(const EndAlgebra& ex, const Module& y) {
  const Module& x = ex.hom.source;
  require_same_parent(x, y);
  auto xy = hom_space(x, y);
  auto yx = hom_space(y, x);
  Echelon e(x.field(), ex.hom.dim());
  for (const Mat& h : xy)
    for (const Mat& g : yx) e.insert(ex.coords(g * h));
  Subspace s = Subspace::from_echelon(std::move(e));
  return {ex.algebra, s, s.basis()};
}

/// End_{C,Y}(X): End(X) modulo maps factoring through add(Y).
inline Quotient end_quotient(const EndAlgebra& ex, const Module& y) {
  return quotient(*ex.algebra, trace_ideal_through(ex, y).space);
}

/// Result of one covariance condition, with its evidence.
struct ConditionResult {
  bool holds = false;
  std::string failed;   ///< name of the failing sub-condition
  Mat witness;          ///< splitting map, in Hom coordinates
  Vec failing_vector;   ///< kernel vector, vector outside an image, or inconsistency certificate
};

/// Operators on V and W through which a ring acts; module maps V -> W
/// commute with them.
struct ActionPair {
  std::vector<Mat> on_v, on_w;
};

/// Solves for a module map s: W -> V with phi s = id_W (split
/// epimorphism phi: V -> W).
inline ConditionResult split_epi(const Mat& phi, const ActionPair& act) {
  ConditionResult r;
  const Field& f = phi.field();
  const std::size_t dv = phi.cols(), dw = phi.rows();
  if (rank(phi) < dw) {
    r.failed = "surjectivity";
    Subspace im = image(phi);
    for (std::size_t i = 0; i < dw; ++i)
      if (!im.contains(unit_vec(dw, i))) {
        r.failing_vector = unit_vec(dw, i);
        break;
      }
    return r;
  }
  // Unknown s (dv x dw), index (i, j) -> i * dw + j.
  const std::size_t n = dv * dw;
  std::vector<Vec> rows;
  std::vector<Scalar> rhs;
  for (std::size_t a = 0; a < dw; ++a)
    for (std::size_t b = 0; b < dw; ++b) {
      Vec row = zero_vec(n);
      for (std::size_t k = 0; k < dv; ++k)
        if (!is_zero(phi(a, k))) row[k * dw + b] = phi(a, k);
      rows.push_back(std::move(row));
      rhs.push_back(a == b ? Scalar(1) : Scalar(0));
    }
  for (std::size_t g = 0; g < act.on_v.size(); ++g) {
    const Mat& av = act.on_v[g];
    const Mat& aw = act.on_w[g];
    // (s aw - av s)[i][j] = 0
    for (std::size_t i = 0; i < dv; ++i)
      for (std::size_t j = 0; j < dw; ++j) {
        Vec row = zero_vec(n);
        for (std::size_t k = 0; k < dw; ++k)
          if (!is_zero(aw(k, j))) row[i * dw + k] = f.add(row[i * dw + k], aw(k, j));
        for (std::size_t k = 0; k < dv; ++k)
          if (!is_zero(av(i, k))) row[k * dw + j] = f.sub(row[k * dw + j], av(i, k));
        rows.push_back(std::move(row));
        rhs.push_back(Scalar(0));
      }
  }
  Mat a = Mat::from_rows(f, rows, n);
  Mat b(f, rhs.size(), 1);
  for (std::size_t i = 0; i < rhs.size(); ++i) b(i, 0) = rhs[i];
  LinearSolution sol = solve_linear(a, b);
  if (!sol.solvable) {
    r.failed = "module-map section";
    r.failing_vector = sol.certificate;
    return r;
  }
  Mat s = Mat::unflatten(f, sol.particular.col_vec(0), dv, dw);
  if (phi * s != Mat::identity(f, dw)) throw Error("section does not split");
  for (std::size_t g = 0; g < act.on_v.size(); ++g)
    if (s * act.on_w[g] != act.on_v[g] * s) throw Error("section is not a module map");
  r.holds = true;
  r.witness = std::move(s);
  return r;
}

/// Solves for a module map s: W -> V with s phi = id_V (split
/// monomorphism phi: V -> W).
inline ConditionResult split_mono(const Mat& phi, const ActionPair& act) {
  ConditionResult r;
  const Field& f = phi.field();
  const std::size_t dv = phi.cols(), dw = phi.rows();
  if (rank(phi) < dv) {
    r.failed = "injectivity";
    r.failing_vector = kernel_basis(phi).front();
    return r;
  }
  const std::size_t n = dv * dw;
  std::vector<Vec> rows;
  std::vector<Scalar> rhs;
  for (std::size_t a = 0; a < dv; ++a)
    for (std::size_t b = 0; b < dv; ++b) {
      Vec row = zero_vec(n);
      for (std::size_t k = 0; k < dw; ++k)
        if (!is_zero(phi(k, b))) row[a * dw + k] = phi(k, b);
      rows.push_back(std::move(row));
      rhs.push_back(a == b ? Scalar(1) : Scalar(0));
    }
  for (std::size_t g = 0; g < act.on_v.size(); ++g) {
    const Mat& av = act.on_v[g];
    const Mat& aw = act.on_w[g];
    for (std::size_t i = 0; i < dv; ++i)
      for (std::size_t j = 0; j < dw; ++j) {
        Vec row = zero_vec(n);
        for (std::size_t k = 0; k < dw; ++k)
          if (!is_zero(aw(k, j))) row[i * dw + k] = f.add(row[i * dw + k], aw(k, j));
        for (std::size_t k = 0; k < dv; ++k)
          if (!is_zero(av(i, k))) row[k * dw + j] = f.sub(row[k * dw + j], av(i, k));
        rows.push_back(std::move(row));
        rhs.push_back(Scalar(0));
      }
  }
  Mat a = Mat::from_rows(f, rows, n);
  Mat b(f, rhs.size(), 1);
  for (std::size_t i = 0; i < rhs.size(); ++i) b(i, 0) = rhs[i];
  LinearSolution sol = solve_linear(a, b);
  if (!sol.solvable) {
    r.failed = "module-map retraction";
    r.failing_vector = sol.certificate;
    return r;
  }
  Mat s = Mat::unflatten(f, sol.particular.col_vec(0), dv, dw);
  if (s * phi != Mat::identity(f, dv)) throw Error("retraction does not split");
  for (std::size_t g = 0; g < act.on_v.size(); ++g)
    if (s * act.on_w[g] != act.on_v[g] * s) throw Error("retraction is not a module map");
  r.holds = true;
  r.witness = std::move(s);
  return r;
}

/// Precomposition action of End(Z) (through its generators) on Hom(Z, -).
inline std::vector<Mat> precomposition(const HomSpace& h, const std::vector<Mat>& ends) {
  std::vector<Mat> out;
  for (const Mat& phi : ends) out.push_back(hom_map(h, h, [&](const Mat& u) { return u * phi; }));
  return out;
}

struct CovarianceReport {
  ConditionResult covariant;
  ConditionResult x_covariant;
  ConditionResult contravariant;
  ConditionResult y_contravariant;
};

/// Covariant and X-covariant conditions for lambda: Y -> X (matrix X dim x
/// Y dim).
inline std::pair<ConditionResult, ConditionResult> covariant_conditions(const Module& y, const Module& x,
                                                                        const Mat& lambda) {
  HomSpace xy = make_hom_space(x, y), xx = make_hom_space(x, x);
  HomSpace yy = make_hom_space(y, y), yx = make_hom_space(y, x);
  auto post = [&](const Mat& h) { return lambda * h; };
  Mat phi1 = hom_map(xy, xx, post);  // Hom(X, lambda)
  Mat phi2 = hom_map(yy, yx, post);  // Hom(Y, lambda)
  EndAlgebra ex{xx, nullptr}, ey{yy, nullptr};
  std::vector<Mat> endx = xx.basis, endy = yy.basis;

  ConditionResult cov;
  if (rank(phi1) < xy.dim()) {
    cov.failed = "Hom(X,lambda) injective";
    cov.failing_vector = kernel_basis(phi1).front();
  } else {
    cov = split_epi(phi2, {precomposition(yy, endy), precomposition(yx, endy)});
    if (!cov.holds) cov.failed = "Hom(Y,lambda) split epi: " + cov.failed;
  }
  ConditionResult xcov = split_mono(phi1, {precomposition(xy, endx), precomposition(xx, endx)});
  if (!xcov.holds) xcov.failed = "Hom(X,lambda) split mono: " + xcov.failed;
  return {cov, xcov};
}

/// All four covariance verdicts. The contravariant pair is obtained by
/// transporting lambda to D(lambda): DX -> DY over the opposite algebra.
inline CovarianceReport check_covariance(const Module& y, const Module& x, const Mat& lambda) {
  require_same_parent(x, y);
  if (!intertwines(y, x, lambda)) throw NotAHomomorphism();
  CovarianceReport r;
  std::tie(r.covariant, r.x_covariant) = covariant_conditions(y, x, lambda);
  AlgebraPtr op = opposite(x.algebra());
  Module dx = dual(x, op), dy = dual(y, op);
  std::tie(r.contravariant, r.y_contravariant) = covariant_conditions(dx, dy, lambda.transpose());
  for (ConditionResult* c : {&r.contravariant, &r.y_contravariant})
    if (!c->holds) c->failed = "dual " + c->failed;
  return r;
}

inline CovarianceReport check_covariance(const ModuleHom& lambda) {
  return check_covariance(lambda.source, lambda.target, lambda.matrix);
}

/// Y is a trace in X: Hom(Y, X/Y) = 0.
inline bool is_trace(const Module& x, const Subspace& y) {
  if (!is_submodule(x, y)) throw NotASubmodule();
  if (y.dim() == 0) return true;
  Sub s = submodule(x, y);
  Quo q = quotient_module(x, y);
  return hom_dim(s.module, q.module) == 0;
}

/// Y is a weak trace in X: Hom(Y, Y) -> Hom(Y, X) is an isomorphism.
inline bool is_weak_trace(const Module& x, const Subspace& y) {
  if (!is_submodule(x, y)) throw NotASubmodule();
  if (y.dim() == 0) return true;
  Sub s = submodule(x, y);
  HomSpace yy = make_hom_space(s.module, s.module), yx = make_hom_space(s.module, x);
  Mat phi = hom_map(yy, yx, [&](const Mat& u) { return s.inclusion * u; });
  return yy.dim() == yx.dim() && rank(phi) == yx.dim();
}

/// Dimension of M (x)_B N and the rank of a balanced map out of it, given
/// on M (x)_k N.
struct BalancedMap {
  std::size_t tensor_dim = 0;
  std::size_t rank = 0;
  bool injective() const { return tensor_dim == rank; }
};

inline BalancedMap balanced_map(const Module& right, const Module& left, const Mat& mu) {
  TensorResult t = tensor_over(right, left);
  for (const Vec& rel : t.relations.basis())
    if (!is_zero(mu * rel)) throw Error("map is not balanced");
  return {t.dim, rank(mu)};
}

/// Composition map Hom(X,Y) (x)_{End Y} Hom(Y,X) -> End(X).
inline BalancedMap composition_map(const Module& x, const Module& y) {
  HomSpace xy = make_hom_space(x, y), yx = make_hom_space(y, x), xx = make_hom_space(x, x);
  EndAlgebra ey = end_algebra(y);
  AlgebraPtr eyop = opposite(*ey.algebra);
  const Field& f = x.field();
  std::vector<Mat> ract, lact;
  for (std::size_t i = 0; i < ey.hom.dim(); ++i) {
    const Mat& phi = ey.hom.basis[i];
    ract.push_back(hom_map(xy, xy, [&](const Mat& h) { return phi * h; }));  // h then phi
    lact.push_back(hom_map(yx, yx, [&](const Mat& g) { return g * phi; }));  // phi then g
  }
  Module right(eyop, xy.dim(), std::move(ract), "Hom(X,Y)");
  Module left(ey.algebra, yx.dim(), std::move(lact), "Hom(Y,X)");
  Mat mu(f, xx.dim(), xy.dim() * yx.dim());
  for (std::size_t i = 0; i < xy.dim(); ++i)
    for (std::size_t j = 0; j < yx.dim(); ++j) {
      Vec c = xx.coords(yx.basis[j] * xy.basis[i]);
      for (std::size_t k = 0; k < c.size(); ++k) mu(k, i * yx.dim() + j) = c[k];
    }
  return balanced_map(right, left, mu);
}

/// Lambda = End(X (+) Y) with the two block idempotents.
struct BlockEnd {
  DirectSum sum;
  EndAlgebra end;
  Vec e_x, e_y;
};

inline BlockEnd block_end(const Module& x, const Module& y) {
  BlockEnd b{direct_sum({x, y}), {}, {}, {}};
  b.end = end_algebra(b.sum.module);
  const Field& f = x.field();
  Mat px(f, b.sum.module.dim(), b.sum.module.dim()), py = px;
  for (std::size_t i = 0; i < x.dim(); ++i) px(i, i) = 1;
  for (std::size_t i = 0; i < y.dim(); ++i) py(x.dim() + i, x.dim() + i) = 1;
  b.e_x = b.end.coords(px);
  b.e_y = b.end.coords(py);
  return b;
}

/// Checks that End(X) -> Lambda / Lambda e Lambda (f -> class of f on the
/// X block) is a surjective unital algebra map whose kernel is the
/// trace ideal through Y; it then induces End_{C,Y}(X) = Lambda/Lambda e Lambda.
inline bool quotient_identification(const BlockEnd& b, const EndAlgebra& ex, const Ideal& trace,
                                    const Subspace& ideal, std::size_t block_offset, std::size_t block_dim) {
  Quotient q = quotient(*b.end.algebra, ideal);
  const Field& f = ex.hom.source.field();
  const std::size_t zd = b.sum.module.dim();
  auto embed = [&](const Vec& c) {
    Mat m = ex.matrix(c);
    Mat z(f, zd, zd);
    z.set_block(block_offset, block_offset, m);
    (void)block_dim;
    return q.project(b.end.coords(z));
  };
  const std::size_t d = ex.algebra->dim();
  Mat map(f, q.algebra->dim(), d);
  for (std::size_t i = 0; i < d; ++i) {
    Vec c = embed(ex.algebra->basis(i));
    for (std::size_t k = 0; k < c.size(); ++k) map(k, i) = c[k];
  }
  if (rank(map) != q.algebra->dim()) return false;
  if (kernel(map) != trace.space) return false;
  if (embed(ex.algebra->unit()) != q.algebra->unit()) return false;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (embed(ex.algebra->mul_basis(i, j)) !=
          q.algebra->mul(embed(ex.algebra->basis(i)), embed(ex.algebra->basis(j))))
        return false;
  return true;
}

struct FactorizationReport {
  CovarianceReport covariance;
  std::size_t lambda_dim = 0;
  // Covariant: Lambda e_Y Lambda projective on the left, composition map injective.
  std::optional<bool> ideal_y_left_projective;
  std::optional<bool> composition_y_injective;
  // Contravariant: Lambda e_X Lambda projective on the right, dual composition injective.
  std::optional<bool> ideal_x_right_projective;
  std::optional<bool> composition_x_injective;
  // X-covariant: Lambda e_X Lambda projective on the left.
  std::optional<bool> ideal_x_left_projective;
  // Y-contravariant: Lambda e_Y Lambda projective on the right.
  std::optional<bool> ideal_y_right_projective;
  bool quotient_y_identified = false;  ///< Lambda/Lambda e_Y Lambda = End_{C,Y}(X)
  bool quotient_x_identified = false;  ///< Lambda/Lambda e_X Lambda = End_{C,X}(Y)
};

inline FactorizationReport verify_factorization_lemmas(const Module& y, const Module& x, const Mat& lambda,
                                                       const SearchOptions& opt = {}) {
  FactorizationReport r;
  r.covariance = check_covariance(y, x, lambda);
  const auto& c = r.covariance;
  if (!c.covariant.holds && !c.x_covariant.holds && !c.contravariant.holds && !c.y_contravariant.holds)
    throw HypothesisNotEstablished("lambda satisfies none of the covariance conditions");
  BlockEnd b = block_end(x, y);
  const AlgebraPtr& lam = b.end.algebra;
  r.lambda_dim = lam->dim();
  Subspace iy = ideal_generated(lam, {b.e_y}).space;
  Subspace ix = ideal_generated(lam, {b.e_x}).space;
  AlgebraPtr lamop = opposite(*lam);
  auto left_proj = [&](const Subspace& s) { return is_projective(left_ideal_module(lam, s).module, opt); };
  auto right_proj = [&](const Subspace& s) { return is_projective(left_ideal_module(lamop, s).module, opt); };
  if (c.covariant.holds) {
    r.ideal_y_left_projective = left_proj(iy);
    r.composition_y_injective = composition_map(x, y).injective();
    if (!*r.ideal_y_left_projective || !*r.composition_y_injective)
      throw SoundnessViolation("covariant morphism without projective Lambda e_Y Lambda");
  }
  if (c.contravariant.holds) {
    r.ideal_x_right_projective = right_proj(ix);
    r.composition_x_injective = composition_map(y, x).injective();
    if (!*r.ideal_x_right_projective || !*r.composition_x_injective)
      throw SoundnessViolation("contravariant morphism without projective Lambda e_X Lambda");
  }
  if (c.x_covariant.holds) {
    r.ideal_x_left_projective = left_proj(ix);
    if (!*r.ideal_x_left_projective) throw SoundnessViolation("X-covariant morphism without projective ideal");
  }
  if (c.y_contravariant.holds) {
    r.ideal_y_right_projective = right_proj(iy);
    if (!*r.ideal_y_right_projective) throw SoundnessViolation("Y-contravariant morphism without projective ideal");
  }
  EndAlgebra ex = end_algebra(x);
  r.quotient_y_identified = quotient_identification(b, ex, trace_ideal_through(ex, y), iy, 0, x.dim());
  EndAlgebra ey = end_algebra(y);
  r.quotient_x_identified = quotient_identification(b, ey, trace_ideal_through(ey, x), ix, x.dim(), y.dim());
  return r;
}

/// Both sides of the corner criterion for S e S.
struct CornerCriterion {
  bool left = false;                ///< S e S projective as a left S-module
  bool right_projective = false;    ///< e S (1-e) projective over eSe
  bool right_injective = false;     ///< (1-e)Se (x)_{eSe} eS(1-e) -> (1-e)S(1-e) injective
  bool right() const { return right_projective && right_injective; }
  bool agree() const { return left == right(); }
};

inline CornerCriterion corner_criterion(const AlgebraPtr& s, const Vec& e, const SearchOptions& opt = {}) {
  if (!s->is_idempotent(e)) throw NotIdempotent();
  CornerCriterion r;
  Subspace ses = ideal_generated(s, {e}).space;
  r.left = is_projective(left_ideal_module(s, ses).module, opt);
  if (is_zero(e)) {
    r.right_projective = r.right_injective = true;
    return r;
  }
  const Field& f = s->field();
  Vec ce = vsub(f, s->unit(), e);
  Embedded c = corner(*s, e);
  AlgebraPtr cop = opposite(*c.algebra);
  auto span_of = [&](const Vec& l, const Vec& rr) {
    std::vector<Vec> vs;
    for (std::size_t i = 0; i < s->dim(); ++i) vs.push_back(s->mul(s->mul(l, s->basis(i)), rr));
    return Subspace::span(f, s->dim(), vs);
  };
  Subspace es1 = span_of(e, ce);  // e S (1-e)
  Subspace s1e = span_of(ce, e);  // (1-e) S e
  const std::size_t cd = c.algebra->dim();
  std::vector<Mat> lact, ract;
  for (std::size_t i = 0; i < cd; ++i) {
    Vec x = c.to_parent(c.algebra->basis(i));
    Mat l(f, es1.dim(), es1.dim()), rm(f, s1e.dim(), s1e.dim());
    for (std::size_t u = 0; u < es1.dim(); ++u) {
      Vec w = es1.coords(s->mul(x, es1.basis()[u]));
      for (std::size_t t = 0; t < w.size(); ++t) l(t, u) = w[t];
    }
    for (std::size_t u = 0; u < s1e.dim(); ++u) {
      Vec w = s1e.coords(s->mul(s1e.basis()[u], x));
      for (std::size_t t = 0; t < w.size(); ++t) rm(t, u) = w[t];
    }
    lact.push_back(std::move(l));
    ract.push_back(std::move(rm));
  }
  Module left(c.algebra, es1.dim(), std::move(lact), "eS(1-e)");
  Module right(cop, s1e.dim(), std::move(ract), "(1-e)Se");
  r.right_projective = is_projective(left, opt);
  Mat mu(f, s->dim(), s1e.dim() * es1.dim());
  for (std::size_t i = 0; i < s1e.dim(); ++i)
    for (std::size_t j = 0; j < es1.dim(); ++j) {
      Vec p = s->mul(s1e.basis()[i], es1.basis()[j]);
      for (std::size_t k = 0; k < s->dim(); ++k) mu(k, i * es1.dim() + j) = p[k];
    }
  r.right_injective = balanced_map(right, left, mu).injective();
  return r;
}

}  // namespace endok
