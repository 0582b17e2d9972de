#include "dynatomic/modular.hpp"

#include <algorithm>
#include <mutex>

namespace dynatomic {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  a %= p;
  while (e != 0) {
    if (e & 1U) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1U;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

u64 reduce(const Integer& v, u64 p) {
  return mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(p));
}

std::vector<u64> reduce(const IntPoly& q, u64 p) {
  std::vector<u64> out(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) out[i] = reduce(q[i], p);
  return out;
}

/// (a mod f) with f monic of degree n, in place; result has n entries.
void rem_monic_mod(std::vector<u64>& a, const std::vector<u64>& f, u64 p) {
  const std::size_t n = f.size() - 1;
  for (std::size_t i = a.size(); i-- > n;) {
    u64 t = a[i];
    if (t == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      u64 s = mulmod(t, f[j], p);
      std::size_t k = i - n + j;
      a[k] = a[k] >= s ? a[k] - s : a[k] + p - s;
    }
    a[i] = 0;
  }
  a.resize(n, 0);
}

/// Characteristic polynomial det(xI - M) mod p, via reduction to upper
/// Hessenberg form followed by the standard recurrence. Returns n+1
/// coefficients, lowest first.
std::vector<u64> charpoly_mod(std::vector<std::vector<u64>> h, u64 p) {
  const std::size_t n = h.size();
  auto sub = [p](u64 a, u64 b) { return a >= b ? a - b : a + p - b; };
  auto add = [p](u64 a, u64 b) {
    u64 s = a + b;
    return s >= p ? s - p : s;
  };
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h[i][m - 1] == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      std::swap(h[i], h[m]);
      for (std::size_t j = 0; j < n; ++j) std::swap(h[j][i], h[j][m]);
    }
    const u64 inv = invmod(h[m][m - 1], p);
    for (i = m + 1; i < n; ++i) {
      const u64 u = mulmod(h[i][m - 1], inv, p);
      if (u == 0) continue;
      for (std::size_t j = 0; j < n; ++j) h[i][j] = sub(h[i][j], mulmod(u, h[m][j], p));
      for (std::size_t j = 0; j < n; ++j) h[j][m] = add(h[j][m], mulmod(u, h[j][i], p));
    }
  }
  // polys[k] is the characteristic polynomial of the leading k x k block.
  std::vector<std::vector<u64>> polys(n + 1);
  polys[0] = {1};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<u64> next(k + 2, 0);
    const auto& prev = polys[k];
    for (std::size_t e = 0; e <= k; ++e) {
      next[e + 1] = add(next[e + 1], prev[e]);
      next[e] = sub(next[e], mulmod(h[k][k], prev[e], p));
    }
    u64 t = 1;
    for (std::size_t i = k; i-- > 0;) {
      t = mulmod(t, h[i + 1][i], p);
      if (t == 0) break;
      const u64 coef = mulmod(h[i][k], t, p);
      if (coef == 0) continue;
      for (std::size_t e = 0; e < polys[i].size(); ++e)
        next[e] = sub(next[e], mulmod(coef, polys[i][e], p));
    }
    polys[k + 1] = std::move(next);
  }
  return polys[n];
}

std::size_t bit_length(const Integer& v) {
  if (sgn(v) == 0) return 0;
  return mpz_sizeinbase(v.get_mpz_t(), 2);
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t modular_prime(std::size_t index) {
  static std::mutex mu;
  static std::vector<u64> primes;
  std::lock_guard lock(mu);
  u64 candidate = primes.empty() ? (u64{1} << 62) - 1 : primes.back() - 2;
  while (primes.size() <= index) {
    while (!is_prime_u64(candidate)) candidate -= 2;
    primes.push_back(candidate);
    candidate -= 2;
  }
  return primes[index];
}

Integer root_modulus_bound(const IntPoly& monic) {
  if (monic.is_zero() || monic.leading() != 1)
    throw Error("root bound needs a monic polynomial");
  const std::size_t n = monic.size() - 1;
  Integer best = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    Integer a = abs(monic[n - i]);
    if (sgn(a) == 0) continue;
    Integer r;
    mpz_root(r.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(i));
    r += 1;
    if (r > best) best = r;
  }
  return 2 * best;
}

Integer abs_value_bound(const IntPoly& g, const Integer& r) {
  Integer acc = 0;
  for (std::size_t i = g.size(); i-- > 0;) acc = acc * r + abs(g[i]);
  return acc;
}

IntPoly charpoly_resultant_modular(const IntPoly& f, const IntPoly& g,
                                   std::optional<Integer> eigen_bound) {
  if (f.is_zero() || f.leading() != 1)
    throw Error("charpoly resultant needs a monic modulus");
  const std::size_t n = f.size() - 1;
  const char xvar = 'x';
  if (n == 0) return IntPoly::constant(Integer(1), xvar);

  IntPoly g_red = rem_monic(g, f);
  Integer bound = abs_value_bound(g_red, root_modulus_bound(f));
  if (eigen_bound && *eigen_bound < bound) bound = *eigen_bound;
  // |e_k(eigenvalues)| <= C(n,k) B^k <= 2^n max(1,B)^n.
  const std::size_t coeff_bits = n + n * bit_length(bound) + 2;

  std::vector<Integer> acc(n + 1, Integer(0));
  Integer modulus = 1;
  for (std::size_t idx = 0; bit_length(modulus) <= coeff_bits; ++idx) {
    const u64 p = modular_prime(idx);
    const std::vector<u64> fp = reduce(f, p);
    std::vector<u64> col = reduce(g_red, p);
    col.resize(n, 0);
    std::vector<std::vector<u64>> m(n, std::vector<u64>(n, 0));
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < n; ++i) m[i][j] = col[i];
      if (j + 1 < n) {
        col.insert(col.begin(), 0);
        rem_monic_mod(col, fp, p);
      }
    }
    const std::vector<u64> cp = charpoly_mod(std::move(m), p);
    // Garner step: acc <- acc + modulus * ((r - acc) / modulus mod p).
    const u64 minv = invmod(reduce(modulus, p), p);
    for (std::size_t e = 0; e <= n; ++e) {
      const u64 cur = reduce(acc[e], p);
      const u64 diff = cp[e] >= cur ? cp[e] - cur : cp[e] + p - cur;
      const u64 t = mulmod(diff, minv, p);
      if (t != 0) acc[e] += modulus * Integer(static_cast<unsigned long>(t));
    }
    modulus *= Integer(static_cast<unsigned long>(p));
  }
  const Integer half = modulus / 2;
  for (auto& v : acc)
    if (v > half) v -= modulus;
  return IntPoly(std::move(acc), xvar);
}

}  // namespace dynatomic
