#include "valext/fp.hpp"

namespace valext {
namespace fp {

std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
  if (a == 0) throw std::domain_error("fp::inv: division by zero");
  // Extended Euclid on (a, p); p prime so gcd is 1.
  std::int64_t t = 0, newt = 1;
  std::uint64_t r = p, newr = a % p;
  while (newr != 0) {
    std::uint64_t q = r / newr;
    std::int64_t tmp_t = t - static_cast<std::int64_t>(q) * newt;
    t = newt;
    newt = tmp_t;
    std::uint64_t tmp_r = r - q * newr;
    r = newr;
    newr = tmp_r;
  }
  if (r != 1) throw std::domain_error("fp::inv: modulus not prime");
  return t < 0 ? static_cast<std::uint64_t>(t + static_cast<std::int64_t>(p)) : static_cast<std::uint64_t>(t);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These witnesses are a proven deterministic set for n < 2^64.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow(a % n, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 0; i < s - 1; ++i) {
      x = mul(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace fp

void check_prime(std::uint64_t p) {
  if (p >= kMaxPrime)
    throw std::invalid_argument("prime too large: p must be < 2^61 for single-word residue arithmetic");
  if (!fp::is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
}

}  // namespace valext
