#pragma once

// Word-size modular arithmetic for primes below 2^62, plus the deterministic
// prime stream used by the exact characteristic polynomial (CRT) pipeline.

#include <cstdint>
#include <random>
#include <vector>

namespace sympow::modp {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// All moduli are < 2^62, so a+b cannot wrap and a*b fits in 128 bits.
inline u64 add(u64 a, u64 b, u64 p) {
  u64 s = a + b;
  return s >= p ? s - p : s;
}
inline u64 sub(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
inline u64 mul(u64 a, u64 b, u64 p) {
  return static_cast<u64>(static_cast<u128>(a) * b % p);
}

u64 pow(u64 base, u64 exp, u64 p);
u64 inv(u64 a, u64 p);  // p prime, a != 0 mod p

// Miller-Rabin with `rounds` random bases (default 40).
bool is_prime(u64 n, std::mt19937_64& rng, int rounds = 40);

// Uniform prime in [2^(bits-1), 2^bits), bits <= 62.
u64 random_prime(std::mt19937_64& rng, int bits = 62);

// Fixed-seed stream of distinct 62-bit primes; result is cached and the
// first `count` entries are identical across calls and runs.
std::vector<u64> prime_stream(std::size_t count);

}  // namespace sympow::modp
