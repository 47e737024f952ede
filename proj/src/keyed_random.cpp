// Copyright 2026 The disqla Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "disqla/keyed_random.hpp"

#include <sodium.h>

#include <algorithm>
#include <array>
#include <mutex>
#include <stdexcept>

#include "disqla/errors.hpp"

namespace disqla {

namespace {

using u128 = unsigned __int128;

std::uint64_t mask(int q) {
  return q >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << q) - 1);
}

void store_le64(unsigned char* out, std::uint64_t v) {
  for (int b = 0; b < 8; ++b) out[b] = static_cast<unsigned char>(v >> (8 * b));
}

int degree(u128 p) {
  int d = -1;
  while (p != 0) {
    p >>= 1;
    ++d;
  }
  return d;
}

u128 poly_mod(u128 a, u128 b) {
  const int db = degree(b);
  for (int da = degree(a); da >= db; da = degree(a)) a ^= b << (da - db);
  return a;
}

u128 poly_gcd(u128 a, u128 b) {
  while (b != 0) {
    const u128 r = poly_mod(a, b);
    a = b;
    b = r;
  }
  return a;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t low, int q) {
  const std::uint64_t m = mask(q);
  std::uint64_t r = 0;
  for (int i = q - 1; i >= 0; --i) {
    const bool carry = ((r >> (q - 1)) & 1U) != 0;
    r = (r << 1) & m;
    if (carry) r ^= low;
    if ((b >> i) & 1U) r ^= a;
  }
  return r;
}

// x^(2^k) mod f, f = x^q + low.
std::uint64_t frobenius_power(std::uint64_t low, int q, int k) {
  std::uint64_t r = (q == 1) ? (low & 1U) : 2U;
  for (int i = 0; i < k; ++i) r = mulmod(r, r, low, q);
  return r;
}

std::uint64_t find_modulus(int q) {
  if (q == 1) return 1;
  for (int k = 1; k < q; ++k) {
    const std::uint64_t low = (std::uint64_t{1} << k) | 1U;
    if (gf2::is_irreducible(low, q)) return low;
  }
  for (int k3 = 3; k3 < q; ++k3) {
    for (int k2 = 2; k2 < k3; ++k2) {
      for (int k1 = 1; k1 < k2; ++k1) {
        const std::uint64_t low = (std::uint64_t{1} << k3) |
                                  (std::uint64_t{1} << k2) |
                                  (std::uint64_t{1} << k1) | 1U;
        if (gf2::is_irreducible(low, q)) return low;
      }
    }
  }
  throw std::logic_error("no irreducible pentanomial found");
}

}  // namespace

std::uint64_t siphash64(std::uint64_t key, std::uint64_t input) {
  static const int init = sodium_init();
  (void)init;
  unsigned char k[crypto_shorthash_siphash24_KEYBYTES];
  store_le64(k, key);
  store_le64(k + 8, ~key);
  unsigned char msg[8];
  store_le64(msg, input);
  unsigned char out[crypto_shorthash_siphash24_BYTES];
  crypto_shorthash_siphash24(out, msg, sizeof msg, k);
  std::uint64_t h = 0;
  for (int b = 7; b >= 0; --b) h = (h << 8) | out[b];
  return h;
}

namespace gf2 {

bool is_irreducible(std::uint64_t low, int q) {
  if (q < 1 || q > 64) return false;
  const std::uint64_t x = (q == 1) ? (low & 1U) : 2U;
  if (frobenius_power(low, q, q) != x) return false;
  const u128 f = (u128{1} << q) | low;
  int rest = q;
  for (int p = 2; p <= rest; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    const std::uint64_t g = frobenius_power(low, q, q / p) ^ x;
    if (degree(poly_gcd(f, g)) != 0) return false;
  }
  return true;
}

std::uint64_t modulus(int q) {
  if (q < 1 || q > 64) throw DomainError("GF(2^q) needs 1 <= q <= 64");
  static std::array<std::uint64_t, 65> table{};
  static std::once_flag once;
  std::call_once(once, [] {
    for (int d = 1; d <= 64; ++d) table[static_cast<std::size_t>(d)] = find_modulus(d);
  });
  return table[static_cast<std::size_t>(q)];
}

std::uint64_t multiply(std::uint64_t a, std::uint64_t b, int q) {
  return mulmod(a & mask(q), b & mask(q), modulus(q), q);
}

std::uint64_t coefficient(std::uint64_t key, int i, int q) {
  // Coefficient stream is domain-separated from the hash-mode inputs by
  // setting the top bit of the message.
  const std::uint64_t tag = (std::uint64_t{1} << 63) | static_cast<std::uint64_t>(i);
  return siphash64(key, tag) & mask(q);
}

}  // namespace gf2

std::uint64_t keyed_random(const RandomSource& source, std::uint64_t input,
                           int input_bits, int out_bits) {
  if (out_bits < 0 || out_bits > 64) {
    throw DomainError("keyed_random: out_bits must lie in [0, 64]");
  }
  if (out_bits == 0) return 0;
  if (source.mode == RandomMode::keyed_hash) {
    return siphash64(source.key, input) >> (64 - out_bits);
  }
  if (source.independence < 1) {
    throw ConfigError("independence parameter t must be at least 1");
  }
  const int q = std::max(std::max(input_bits, out_bits), 1);
  if (q > 64) throw DomainError("keyed_random: field width above 64 bits");
  const std::uint64_t x = input & mask(q);
  std::uint64_t acc = 0;
  for (int i = source.independence - 1; i >= 0; --i) {
    acc = gf2::multiply(acc, x, q) ^ gf2::coefficient(source.key, i, q);
  }
  return acc >> (q - out_bits);
}

}  // namespace disqla
