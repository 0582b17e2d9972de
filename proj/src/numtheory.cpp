#include "dynatomic/numtheory.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace dynatomic {

namespace {

std::vector<std::pair<std::uint64_t, int>> factor(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

}  // namespace

int mobius(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("mobius(0)");
  int sign = 1;
  for (auto [p, e] : factor(n)) {
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("euler_phi(0)");
  std::uint64_t r = n;
  for (auto [p, e] : factor(n)) r = r / p * (p - 1);
  return r;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("divisors(0)");
  std::vector<std::uint64_t> low, high;
  for (std::uint64_t k = 1; k * k <= n; ++k) {
    if (n % k != 0) continue;
    low.push_back(k);
    if (k != n / k) high.push_back(n / k);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

Integer moebius_degree(std::uint64_t d, std::uint64_t m) {
  Integer total = 0;
  for (auto k : divisors(m)) {
    int mu = mobius(m / k);
    if (mu == 0) continue;
    Integer term = pow(Integer(static_cast<unsigned long>(d)), k);
    if (mu > 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

const IntPoly& cyclotomic(std::uint64_t n) {
  static std::mutex mu;
  static std::map<std::uint64_t, IntPoly> cache;
  if (n == 0) throw std::invalid_argument("cyclotomic(0)");
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  IntPoly p = IntPoly::monomial(Integer(1), n, 'x') -
              IntPoly::constant(Integer(1), 'x');
  for (auto k : divisors(n))
    if (k != n) p = exact_div(p, cyclotomic(k));
  std::lock_guard lock(mu);
  return cache.emplace(n, std::move(p)).first->second;
}

}  // namespace dynatomic
