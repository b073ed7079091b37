#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "endok/poly.hpp"
#include "endok/random.hpp"
#include "endok/structure.hpp"

namespace endok {

struct SearchOptions {
  std::size_t retries = 64;
  std::uint64_t seed = 0;
  /// Resolutions stop (UnknownBeyond) once a syzygy exceeds this dimension.
  std::size_t max_syzygy_dim = 64;
};

/// Minimal polynomial of x in a over Q, monic.
inline poly::Poly minimal_polynomial(const Algebra& a, const Vec& x) {
  std::vector<Vec> powers{a.unit()};
  Echelon e(a.field(), a.dim());
  e.insert(a.unit());
  while (true) {
    Vec next = a.mul(powers.back(), x);
    if (!e.insert(next)) {
      Mat m = Mat::from_cols(a.field(), powers, a.dim());
      Mat rhs = Mat::from_cols(a.field(), {next}, a.dim());
      LinearSolution s = solve_linear(m, rhs);
      poly::Poly mu(powers.size() + 1);
      for (std::size_t i = 0; i < powers.size(); ++i) mu[i] = -s.particular(i, 0);
      mu.back() = 1;
      return mu;
    }
    powers.push_back(std::move(next));
  }
}

inline Vec evaluate(const Algebra& a, const poly::Poly& p, const Vec& x) {
  Vec r = a.zero();
  for (std::size_t i = p.size(); i-- > 0;) {
    r = a.mul(r, x);
    vaxpy(a.field(), r, p[i], a.unit());
  }
  return r;
}

/// Nontrivial idempotent from a nonzero non-invertible element z of a
/// semisimple algebra: solve z q z = z and take z q.
inline std::optional<Vec> idempotent_from_zero_divisor(const Algebra& a, const Vec& z) {
  Mat op = a.left_mult(z) * a.right_mult(z);
  LinearSolution s = solve_linear(op, Mat::from_cols(a.field(), {z}, a.dim()));
  if (!s.solvable) return std::nullopt;
  Vec eps = a.mul(z, s.particular.col_vec(0));
  if (!a.is_idempotent(eps) || is_zero(eps) || eps == a.unit()) return std::nullopt;
  return eps;
}

/// Outcome of looking for a nontrivial idempotent in a semisimple algebra.
struct SplitResult {
  std::optional<Vec> idempotent;  ///< nontrivial idempotent, if found
  bool division = false;          ///< certified: no nontrivial idempotent exists
  std::string certificate;
};

namespace detail {

inline std::vector<Vec> candidate_elements(const Algebra& q, const SearchOptions& opt) {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < q.dim(); ++i) out.push_back(q.basis(i));
  Rng rng(opt.seed ^ (0x9e3779b97f4a7c15ULL * (q.dim() + 1)));
  for (std::size_t s = 0; s < opt.retries; ++s) {
    Vec v = q.zero();
    const long spread = 1 + static_cast<long>(s / 8);
    for (std::size_t i = 0; i < q.dim(); ++i)
      if (s < 16 ? rng.uniform(0, 2) == 0 : true) v[i] = q.field().from_int(rng.uniform(-spread, spread));
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace detail

/// Searches a semisimple algebra over Q for a nontrivial idempotent, or a
/// certificate that it is a field (dimension 1, or commutative with an
/// element whose minimal polynomial is irreducible of full degree).
inline SplitResult split_semisimple(const Algebra& q, const SearchOptions& opt) {
  SplitResult out;
  if (q.dim() == 1) {
    out.division = true;
    out.certificate = "dimension 1";
    return out;
  }
  const bool commutative = q.is_commutative();
  for (const Vec& x : detail::candidate_elements(q, opt)) {
    poly::Poly mu = minimal_polynomial(q, x);
    const int d = poly::degree(mu);
    if (d <= 1) continue;
    auto roots = poly::rational_roots(mu);
    if (!roots.roots.empty()) {
      Vec z = x;
      vaxpy(q.field(), z, -roots.roots.front(), q.unit());
      if (auto e = idempotent_from_zero_divisor(q, z)) {
        out.idempotent = std::move(e);
        return out;
      }
      continue;
    }
    auto irr = poly::is_irreducible(mu);
    if (commutative && irr && *irr && static_cast<std::size_t>(d) == q.dim()) {
      out.division = true;
      out.certificate = "field generated by an element of degree " + std::to_string(d);
      return out;
    }
  }
  throw RandomizedSearchExhausted("idempotent splitting", opt.retries);
}

/// Lifts an idempotent modulo a nilpotent ideal: x <- 3x^2 - 2x^3.
inline Vec lift_idempotent(const Algebra& a, Vec x) {
  const Field& f = a.field();
  for (std::size_t it = 0; it < 4 * a.dim() + 8; ++it) {
    Vec x2 = a.mul(x, x);
    if (x2 == x) return x;
    Vec x3 = a.mul(x2, x);
    x = vsub(f, vscale(f, f.from_int(3), x2), vscale(f, f.from_int(2), x3));
  }
  throw Error("idempotent lifting did not converge");
}

struct PrimitiveIdempotent {
  Vec element;
  std::string certificate;  ///< why the corner is local
};

/// Splits e if possible: returns (f, e - f) with f a nontrivial idempotent
/// in eAe, or nullopt with the locality certificate.
inline std::pair<std::optional<std::pair<Vec, Vec>>, std::string> split_idempotent(const Algebra& a, const Vec& e,
                                                                                  const SearchOptions& opt) {
  Embedded c = corner(a, e);
  const Subspace& r = radical(*c.algebra);
  Quotient q = quotient(*c.algebra, r);
  SplitResult s = split_semisimple(*q.algebra, opt);
  if (s.division) return {std::nullopt, s.certificate};
  Vec lifted = lift_idempotent(*c.algebra, q.lift(*s.idempotent));
  Vec f = c.to_parent(lifted);
  return {std::make_pair(f, vsub(a.field(), e, f)), {}};
}

/// Complete set of orthogonal primitive idempotents, each certified.
/// Starts from `start` when it is a complete orthogonal set.
inline std::vector<PrimitiveIdempotent> primitive_decomposition(const Algebra& a, const SearchOptions& opt = {},
                                                                std::vector<Vec> start = {}) {
  if (!a.field().is_rationals()) throw UnsupportedField("primitive decomposition");
  if (a.dim() == 0) return {};
  if (start.empty()) start.push_back(a.unit());
  std::vector<PrimitiveIdempotent> done;
  std::vector<Vec> work(start.rbegin(), start.rend());
  std::size_t steps = 0;
  while (!work.empty()) {
    Vec e = std::move(work.back());
    work.pop_back();
    SearchOptions o = opt;
    o.seed = opt.seed + steps++;
    auto [parts, cert] = split_idempotent(a, e, o);
    if (!parts) {
      done.push_back({std::move(e), cert});
    } else {
      work.push_back(std::move(parts->second));
      work.push_back(std::move(parts->first));
    }
  }
  // Post-hoc verification.
  Vec sum = a.zero();
  for (std::size_t i = 0; i < done.size(); ++i) {
    sum = a.add(sum, done[i].element);
    for (std::size_t j = 0; j < done.size(); ++j) {
      Vec p = a.mul(done[i].element, done[j].element);
      if (p != (i == j ? done[i].element : a.zero())) throw Error("decomposition is not orthogonal");
    }
  }
  if (sum != a.unit()) throw Error("decomposition does not sum to 1");
  return done;
}

inline std::vector<Vec> elements(const std::vector<PrimitiveIdempotent>& ps) {
  std::vector<Vec> out;
  for (const auto& p : ps) out.push_back(p.element);
  return out;
}

/// Starting hint for algebras built from quivers: the vertex idempotents.
inline std::vector<Vec> vertex_hint(const Algebra& a) {
  for (const auto& [k, idx] : a.provenance().blocks)
    if (k == "vertices") {
      std::vector<Vec> out;
      for (auto i : idx) out.push_back(a.basis(i));
      return out;
    }
  return {};
}

inline std::vector<PrimitiveIdempotent> primitive_idempotents(const Algebra& a, const SearchOptions& opt = {}) {
  return primitive_decomposition(a, opt, vertex_hint(a));
}

/// Center of an algebra.
inline Subspace center(const Algebra& a) {
  const Field& f = a.field();
  const std::size_t n = a.dim();
  std::vector<Vec> rows;
  for (const Vec& g : a.generators()) {
    Mat c = a.right_mult(g) - a.left_mult(g);  // z -> z g - g z
    for (std::size_t i = 0; i < n; ++i) rows.push_back(c.row_vec(i));
  }
  if (rows.empty()) return Subspace::full(f, n);
  return kernel(Mat::from_rows(f, rows, n));
}

/// Number of blocks of A / rad A, from primitive idempotents of its center.
inline std::size_t semisimple_block_count(const Algebra& a, const SearchOptions& opt = {}) {
  if (a.dim() == 0) return 0;
  Quotient q = quotient(a, radical(a));
  Embedded z = subalgebra(*q.algebra, center(*q.algebra));
  auto ps = primitive_decomposition(*z.algebra, opt);
  for (const auto& p : ps) {
    Vec e = z.to_parent(p.element);
    for (std::size_t i = 0; i < q.algebra->dim(); ++i)
      if (q.algebra->mul(e, q.algebra->basis(i)) != q.algebra->mul(q.algebra->basis(i), e))
        throw Error("block idempotent is not central");
  }
  return ps.size();
}

/// Division algebra test: radical zero, one block, and a single primitive
/// idempotent (so the unique simple module is the algebra itself).
inline bool division_ring_test(const Algebra& a, const SearchOptions& opt = {}) {
  if (a.dim() == 0) return false;
  if (radical(a).dim() != 0) return false;
  if (semisimple_block_count(a, opt) != 1) return false;
  return primitive_decomposition(a, opt).size() == 1;
}

}  // namespace endok
