#pragma once

#include <gmp.h>
#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <regex>
#include <string>
#include <string_view>
#include <vector>

#include "endok/errors.hpp"

namespace endok {

using Scalar = mpq_class;
using Vec = std::vector<Scalar>;

/// The ground field: the rationals or a prime field F_p.
/// Elements of F_p are stored as integers in [0, p).
class Field {
 public:
  enum class Kind { Rationals, Prime };

  Field() = default;

  static Field rationals() { return Field{}; }

  static Field prime(unsigned long p) {
    mpz_class z(p);
    if (p < 2 || mpz_probab_prime_p(z.get_mpz_t(), 40) == 0) throw NotPrime(p);
    Field f;
    f.kind_ = Kind::Prime;
    f.p_ = p;
    return f;
  }

  Kind kind() const { return kind_; }
  bool is_rationals() const { return kind_ == Kind::Rationals; }
  unsigned long characteristic() const { return kind_ == Kind::Rationals ? 0 : p_; }

  std::string name() const { return is_rationals() ? "Q" : "F_" + std::to_string(p_); }

  bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
  bool operator!=(const Field& o) const { return !(*this == o); }

  /// Maps an arbitrary rational into the field. Over F_p the denominator
  /// must be a unit.
  Scalar from(const mpq_class& q) const {
    if (is_rationals()) return q;
    mpz_class pz(p_);
    mpz_class num = q.get_num() % pz;
    if (num < 0) num += pz;
    mpz_class den = q.get_den() % pz;
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t()) == 0)
      throw Error("denominator is not invertible in " + name());
    mpz_class r = (num * inv) % pz;
    return Scalar(r);
  }

  Scalar from_int(long v) const { return from(mpq_class(v)); }

  Scalar zero() const { return Scalar(0); }
  Scalar one() const { return Scalar(1); }

  Scalar add(const Scalar& a, const Scalar& b) const {
    if (is_rationals()) return a + b;
    return reduce_int(a.get_num() + b.get_num());
  }
  Scalar sub(const Scalar& a, const Scalar& b) const {
    if (is_rationals()) return a - b;
    return reduce_int(a.get_num() - b.get_num());
  }
  Scalar mul(const Scalar& a, const Scalar& b) const {
    if (is_rationals()) return a * b;
    return reduce_int(a.get_num() * b.get_num());
  }
  Scalar neg(const Scalar& a) const {
    if (is_rationals()) return -a;
    return reduce_int(-a.get_num());
  }
  Scalar inv(const Scalar& a) const {
    if (sgn(a) == 0) throw Error("division by zero");
    if (is_rationals()) return 1 / a;
    return from(mpq_class(mpz_class(1), a.get_num()));
  }
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  /// a -= f * b, in place.
  void sub_mul(Scalar& a, const Scalar& f, const Scalar& b) const {
    if (is_rationals()) {
      a -= f * b;
    } else {
      a = reduce_int(a.get_num() - f.get_num() * b.get_num());
    }
  }

 private:
  Scalar reduce_int(const mpz_class& v) const {
    mpz_class pz(p_);
    mpz_class r = v % pz;
    if (r < 0) r += pz;
    return Scalar(r);
  }

  Kind kind_ = Kind::Rationals;
  unsigned long p_ = 0;
};

inline bool is_zero(const Scalar& s) { return sgn(s) == 0; }

inline bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

inline Vec zero_vec(std::size_t n) { return Vec(n, Scalar(0)); }

inline Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n, Scalar(0));
  v[i] = 1;
  return v;
}

/// Parses an exact rational literal such as "3", "-2/7". Decimal and
/// exponent notation is rejected.
inline std::optional<mpq_class> parse_rational(std::string_view text) {
  static const std::regex re(R"(^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$)");
  std::string s(text);
  std::smatch m;
  if (!std::regex_match(s, m, re)) return std::nullopt;
  mpz_class num(m[1].str()[0] == '+' ? m[1].str().substr(1) : m[1].str());
  mpz_class den(1);
  if (m[2].matched) {
    den = mpz_class(m[2].str());
    if (den == 0) return std::nullopt;
  }
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Scalar& s) { return s.get_str(); }

// Vector helpers; all of them take the field explicitly so that F_p
// reduction is applied consistently.

inline Vec vadd(const Field& f, const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.add(a[i], b[i]);
  return r;
}

inline Vec vsub(const Field& f, const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.sub(a[i], b[i]);
  return r;
}

inline Vec vscale(const Field& f, const Scalar& c, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.mul(c, a[i]);
  return r;
}

/// a += c * b, in place.
inline void vaxpy(const Field& f, Vec& a, const Scalar& c, const Vec& b) {
  if (is_zero(c)) return;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!is_zero(b[i])) a[i] = f.add(a[i], f.mul(c, b[i]));
}

inline Scalar vdot(const Field& f, const Vec& a, const Vec& b) {
  Scalar s(0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!is_zero(a[i]) && !is_zero(b[i])) s = f.add(s, f.mul(a[i], b[i]));
  return s;
}

}  // namespace endok
