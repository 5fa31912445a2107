#include "einstab/charpoly.hpp"

#include <cmath>
#include <cstdint>
#include <mutex>

namespace einstab::exact {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }
inline u64 addmod(u64 a, u64 b, u64 p) { u64 s = a + b; return s >= p ? s - p : s; }
inline u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

static_assert(sizeof(unsigned long) == sizeof(u64), "LP64 expected");

u64 mod_u64(const mpz_class& v, u64 p) { return mpz_fdiv_ui(v.get_mpz_t(), p); }
mpz_class to_mpz(u64 v) { return mpz_class(static_cast<unsigned long>(v)); }

// Primes just above 2^61; grown on demand.
std::vector<u64> primes_upto(std::size_t count) {
  static std::mutex mu;
  static std::vector<u64> cache;
  std::lock_guard<std::mutex> lock(mu);
  mpz_class q = mpz_class(1) << 61;
  if (!cache.empty()) q = to_mpz(cache.back());
  while (cache.size() < count) {
    mpz_nextprime(q.get_mpz_t(), q.get_mpz_t());
    cache.push_back(q.get_ui());
  }
  return {cache.begin(), cache.begin() + static_cast<std::ptrdiff_t>(count)};
}


std::vector<u64> charpoly_mod_p(std::vector<u64> H, int n, u64 p) {
  auto at = [&](int i, int j) -> u64& { return H[static_cast<std::size_t>(i) * n + j]; };
  for (int j = 0; j + 2 < n; ++j) {
    int piv = -1;
    for (int i = j + 1; i < n; ++i)
      if (at(i, j)) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != j + 1) {
      for (int k = 0; k < n; ++k) std::swap(at(piv, k), at(j + 1, k));
      for (int k = 0; k < n; ++k) std::swap(at(k, piv), at(k, j + 1));
    }
    u64 inv = powmod(at(j + 1, j), p - 2, p);
    for (int i = j + 2; i < n; ++i) {
      u64 u = mulmod(at(i, j), inv, p);
      if (!u) continue;
      for (int k = 0; k < n; ++k) at(i, k) = submod(at(i, k), mulmod(u, at(j + 1, k), p), p);
      for (int k = 0; k < n; ++k) at(k, j + 1) = addmod(at(k, j + 1), mulmod(u, at(k, i), p), p);
    }
  }
  std::vector<std::vector<u64>> P(n + 1);
  P[0] = {1};
  for (int k = 0; k < n; ++k) {
    std::vector<u64> next(k + 2, 0);
    for (int d = 0; d <= k; ++d) {
      next[d + 1] = addmod(next[d + 1], P[k][d], p);
      next[d] = submod(next[d], mulmod(at(k, k), P[k][d], p), p);
    }
    u64 t = 1;
    for (int i = k - 1; i >= 0; --i) {
      t = mulmod(t, at(i + 1, i), p);
      if (!t) break;
      u64 c = mulmod(t, at(i, k), p);
      if (!c) continue;
      for (int d = 0; d <= i; ++d) next[d] = submod(next[d], mulmod(c, P[i][d], p), p);
    }
    P[k + 1] = std::move(next);
  }
  return P[n];
}

// log2 of prod(1 + row 2-norm): bounds every coefficient of det(xI - M)
double coefficient_bits(const IntMatrix& M) {
  double bits = 0.0;
  for (const auto& row : M) {
    double s = 0.0;
    for (const auto& v : row) {
      double d = mpz_sizeinbase(v.get_mpz_t(), 2);
      s += std::exp2(2.0 * d);
    }
    bits += std::log2(1.0 + std::sqrt(s));
  }
  return bits;
}

}  // namespace

ScaledMatrix to_integer(const SymRationalMatrix& m) {
  ScaledMatrix out;
  out.scale = 1;
  std::size_t n = m.order();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      mpz_class d = m(i, j).den();
      mpz_lcm(out.scale.get_mpz_t(), out.scale.get_mpz_t(), d.get_mpz_t());
    }
  out.M.assign(n, std::vector<mpz_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.M[i][j] = m(i, j).num() * (out.scale / m(i, j).den());
  return out;
}

namespace {

Polynomial unscale(const std::vector<mpz_class>& c, const mpz_class& scale) {
  // det(xI - M/s) = s^{-n} det(s x I - M)
  int n = static_cast<int>(c.size()) - 1;
  std::vector<Rational> out(c.size());
  Rational s(scale);
  for (int k = 0; k <= n; ++k) out[k] = Rational(c[k]) * pow(s, k - n);
  return Polynomial(std::move(out));
}

}  // namespace

Polynomial char_poly(const SymRationalMatrix& m) {
  ScaledMatrix sm = to_integer(m);
  return unscale(kernels::charpoly_modular(sm.M), sm.scale);
}

Polynomial char_poly_reference(const SymRationalMatrix& m) {
  ScaledMatrix sm = to_integer(m);
  return unscale(kernels::charpoly_bareiss(sm.M), sm.scale);
}

namespace kernels {

std::vector<mpz_class> charpoly_modular(const IntMatrix& M) {
  int n = static_cast<int>(M.size());
  if (n == 0) return {mpz_class(1)};
  double bits = coefficient_bits(M) + 2.0;
  std::size_t nprimes = static_cast<std::size_t>(std::ceil(bits / 61.0)) + 1;
  std::vector<u64> ps = primes_upto(nprimes);

  std::vector<std::vector<u64>> residues(nprimes);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t t = 0; t < static_cast<std::ptrdiff_t>(nprimes); ++t) {
    u64 p = ps[t];
    std::vector<u64> H(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) H[static_cast<std::size_t>(i) * n + j] = mod_u64(M[i][j], p);
    residues[t] = charpoly_mod_p(std::move(H), n, p);
  }

  // Garner-style incremental CRT, then symmetric lift
  std::vector<mpz_class> acc(n + 1);
  mpz_class modulus = to_mpz(ps[0]);
  for (int k = 0; k <= n; ++k) acc[k] = to_mpz(residues[0][k]);
  for (std::size_t t = 1; t < nprimes; ++t) {
    mpz_class p = to_mpz(ps[t]);
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), modulus.get_mpz_t(), p.get_mpz_t());
    for (int k = 0; k <= n; ++k) {
      mpz_class r = to_mpz(residues[t][k]);
      mpz_class diff = r - acc[k];
      mpz_class h = diff * inv;
      mpz_fdiv_r(h.get_mpz_t(), h.get_mpz_t(), p.get_mpz_t());
      acc[k] += modulus * h;
    }
    modulus *= p;
  }
  mpz_class half = modulus / 2;
  for (auto& v : acc)
    if (v > half) v -= modulus;
  return acc;
}

mpz_class bareiss_determinant(IntMatrix A) {
  std::size_t n = A.size();
  if (n == 0) return 1;
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (A[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && A[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(A[piv], A[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class v = A[i][j] * A[k][k] - A[i][k] * A[k][j];
        mpz_divexact(A[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = A[k][k];
  }
  return sign * A[n - 1][n - 1];
}

std::vector<mpz_class> charpoly_bareiss(const IntMatrix& M) {
  std::size_t n = M.size();
  std::vector<Rational> ys(n + 1);
  for (std::size_t x = 0; x <= n; ++x) {
    IntMatrix A(n, std::vector<mpz_class>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) A[i][j] = (i == j ? mpz_class(static_cast<long>(x)) : mpz_class(0)) - M[i][j];
    ys[x] = Rational(bareiss_determinant(std::move(A)));
  }
  // Newton divided differences on nodes 0..n
  std::vector<Rational> dd = ys;
  for (std::size_t level = 1; level <= n; ++level)
    for (std::size_t i = n; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / Rational(static_cast<long>(level));
      if (i == level) break;
    }
  Polynomial p = Polynomial::constant(dd[n]);
  for (std::size_t i = n; i-- > 0;)
    p = p * Polynomial::x_minus(Rational(static_cast<long>(i))) + Polynomial::constant(dd[i]);
  std::vector<mpz_class> out(n + 1);
  for (std::size_t k = 0; k <= n; ++k) out[k] = p.coeff(static_cast<int>(k)).num();
  return out;
}

}  // namespace kernels
}  // namespace einstab::exact
