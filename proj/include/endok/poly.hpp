#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "endok/field.hpp"

namespace endok::poly {

/// Univariate polynomial over Q, coefficients from degree 0 upwards, with no
/// trailing zeros. The zero polynomial is the empty vector.
using Poly = std::vector<mpq_class>;

inline void trim(Poly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

inline int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

inline Poly monic(Poly p) {
  trim(p);
  if (p.empty()) return p;
  mpq_class lc = p.back();
  for (auto& c : p) c /= lc;
  return p;
}

inline Poly sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

inline Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

/// Quotient and remainder of a by nonzero b.
inline std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  trim(a);
  if (b.empty()) throw Error("polynomial division by zero");
  if (a.size() < b.size()) return {{}, a};
  Poly q(a.size() - b.size() + 1, mpq_class(0));
  for (int i = degree(a); i >= degree(b); --i) {
    if (sgn(a[static_cast<std::size_t>(i)]) == 0) continue;
    mpq_class c = a[static_cast<std::size_t>(i)] / b.back();
    std::size_t shift = static_cast<std::size_t>(i - degree(b));
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
  }
  trim(a);
  trim(q);
  return {q, a};
}

inline Poly gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

inline Poly derivative(const Poly& p) {
  if (p.size() <= 1) return {};
  Poly d(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * static_cast<long>(i);
  trim(d);
  return d;
}

inline mpq_class evaluate(const Poly& p, const mpq_class& x) {
  mpq_class r = 0;
  for (std::size_t i = p.size(); i-- > 0;) r = r * x + p[i];
  return r;
}

/// Primitive integer polynomial proportional to p.
inline std::vector<mpz_class> integer_primitive(const Poly& p) {
  mpz_class l = 1;
  for (const auto& c : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> z(p.size());
  mpz_class g = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    mpq_class s = p[i] * l;
    z[i] = s.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z[i].get_mpz_t());
  }
  if (g != 0)
    for (auto& c : z) c /= g;
  return z;
}

namespace detail {

constexpr unsigned long kTrialDivisionLimit = 1000000;

/// Positive divisors of |n|, or nullopt when n is too large to factor by
/// trial division.
inline std::optional<std::vector<mpz_class>> divisors(mpz_class n) {
  n = abs(n);
  if (n == 0) return std::vector<mpz_class>{};
  std::vector<std::pair<mpz_class, unsigned>> factors;
  mpz_class m = n;
  for (unsigned long d = 2; mpz_class(d) * d <= m; ++d) {
    if (d > kTrialDivisionLimit) return std::nullopt;
    unsigned e = 0;
    while (m % d == 0) {
      m /= d;
      ++e;
    }
    if (e) factors.emplace_back(mpz_class(d), e);
  }
  if (m > 1) factors.emplace_back(m, 1);
  std::vector<mpz_class> out{1};
  for (auto& [pr, e] : factors) {
    std::size_t cur = out.size();
    mpz_class pw = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pw *= pr;
      for (std::size_t i = 0; i < cur; ++i) out.push_back(out[i] * pw);
    }
  }
  return out;
}

using ModPoly = std::vector<std::uint64_t>;

inline void trim(ModPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = static_cast<std::uint64_t>((static_cast<unsigned __int128>(r) * b) % p);
    b = static_cast<std::uint64_t>((static_cast<unsigned __int128>(b) * b) % p);
    e >>= 1;
  }
  return r;
}

inline ModPoly mod_rem(ModPoly a, const ModPoly& b, std::uint64_t p) {
  trim(a);
  std::uint64_t inv = pow_mod(b.back(), p - 2, p);
  while (a.size() >= b.size()) {
    std::uint64_t c = static_cast<std::uint64_t>((static_cast<unsigned __int128>(a.back()) * inv) % p);
    std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::uint64_t t = static_cast<std::uint64_t>((static_cast<unsigned __int128>(c) * b[j]) % p);
      a[shift + j] = (a[shift + j] + p - t) % p;
    }
    trim(a);
  }
  return a;
}

inline ModPoly mod_mulmod(const ModPoly& a, const ModPoly& b, const ModPoly& f, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint64_t>((r[i + j] + static_cast<unsigned __int128>(a[i]) * b[j]) % p);
  return mod_rem(r, f, p);
}

inline ModPoly mod_gcd(ModPoly a, ModPoly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    ModPoly r = mod_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// Ben-Or irreducibility test for a polynomial over F_p with nonzero
/// leading coefficient.
inline bool irreducible_mod_p(const ModPoly& f, std::uint64_t p) {
  const std::size_t n = f.size() - 1;
  ModPoly x{0, 1};
  ModPoly h = mod_rem(x, f, p);
  for (std::size_t i = 1; i <= n / 2; ++i) {
    // h <- h^p mod f
    ModPoly acc{1};
    ModPoly base = h;
    std::uint64_t e = p;
    while (e) {
      if (e & 1) acc = mod_mulmod(acc, base, f, p);
      base = mod_mulmod(base, base, f, p);
      e >>= 1;
    }
    h = acc;
    ModPoly diff = h;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    ModPoly g = mod_gcd(f, diff, p);
    if (g.size() > 1) return false;
  }
  return true;
}

}  // namespace detail

struct RootSearch {
  std::vector<mpq_class> roots;
  bool complete = true;  ///< false when coefficient sizes prevented full enumeration
};

/// Rational roots by the rational root theorem.
inline RootSearch rational_roots(const Poly& p) {
  RootSearch out;
  if (degree(p) < 1) return out;
  auto z = integer_primitive(p);
  std::size_t low = 0;
  while (low < z.size() && z[low] == 0) ++low;
  if (low > 0) out.roots.push_back(0);
  if (low + 1 >= z.size()) return out;
  auto num = detail::divisors(z[low]);
  auto den = detail::divisors(z.back());
  if (!num || !den) {
    out.complete = false;
    return out;
  }
  Poly shifted(p.begin() + static_cast<std::ptrdiff_t>(low), p.end());
  for (const auto& a : *num)
    for (const auto& b : *den)
      for (int s : {1, -1}) {
        mpq_class cand(a * s, b);
        cand.canonicalize();
        if (sgn(evaluate(shifted, cand)) == 0 &&
            std::find(out.roots.begin(), out.roots.end(), cand) == out.roots.end())
          out.roots.push_back(cand);
      }
  return out;
}

/// Irreducibility over Q: true/false when certified, nullopt otherwise.
/// Degrees 2 and 3 are decided by rational roots; higher degrees are
/// certified irreducible when the reduction modulo a small prime is.
inline std::optional<bool> is_irreducible(const Poly& p) {
  const int d = degree(p);
  if (d < 1) return false;
  if (d == 1) return true;
  if (degree(gcd(p, derivative(p))) > 0) return false;
  RootSearch rs = rational_roots(p);
  if (!rs.roots.empty()) return false;
  if (d <= 3) {
    if (rs.complete) return true;
    return std::nullopt;
  }
  auto z = integer_primitive(p);
  static const std::uint64_t primes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
                                         53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113};
  for (std::uint64_t pr : primes) {
    mpz_class lc = z.back() % static_cast<unsigned long>(pr);
    if (lc == 0) continue;
    detail::ModPoly f(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) {
      mpz_class r = z[i] % static_cast<unsigned long>(pr);
      if (r < 0) r += static_cast<unsigned long>(pr);
      f[i] = r.get_ui();
    }
    if (detail::irreducible_mod_p(f, pr)) return true;
  }
  return std::nullopt;
}

}  // namespace endok::poly
