#include "sympow/modarith.hpp"

#include <mutex>
#include <stdexcept>

namespace sympow::modp {

u64 pow(u64 base, u64 exp, u64 p) {
  u64 r = 1 % p;
  base %= p;
  while (exp) {
    if (exp & 1) r = mul(r, base, p);
    base = mul(base, base, p);
    exp >>= 1;
  }
  return r;
}

u64 inv(u64 a, u64 p) {
  a %= p;
  if (a == 0) throw std::domain_error("inverse of zero");
  return pow(a, p - 2, p);
}

bool is_prime(u64 n, std::mt19937_64& rng, int rounds) {
  if (n < 2) return false;
  for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (int it = 0; it < rounds; ++it) {
    u64 a = 2 + rng() % (n - 3);
    u64 x = pow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
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

u64 random_prime(std::mt19937_64& rng, int bits) {
  if (bits < 3 || bits > 62) throw std::domain_error("prime size out of range");
  const u64 lo = 1ull << (bits - 1);
  for (;;) {
    u64 c = lo + rng() % lo;
    c |= 1;
    if (is_prime(c, rng)) return c;
  }
}

std::vector<u64> prime_stream(std::size_t count) {
  static std::mutex m;
  static std::vector<u64> cache;
  static std::mt19937_64 rng(0x5e11ab1e5eedull);
  std::lock_guard<std::mutex> lock(m);
  while (cache.size() < count) {
    u64 p = random_prime(rng, 62);
    bool dup = false;
    for (u64 q : cache) dup |= (q == p);
    if (!dup) cache.push_back(p);
  }
  return std::vector<u64>(cache.begin(), cache.begin() + count);
}

}  // namespace sympow::modp
