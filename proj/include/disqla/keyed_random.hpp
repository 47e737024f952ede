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

#ifndef DISQLA_KEYED_RANDOM_HPP
#define DISQLA_KEYED_RANDOM_HPP

#include <cstdint>
#include <string_view>

namespace disqla {

enum class RandomMode { keyed_hash, kwise_polynomial };

/// Identifier of the keyed hash, echoed into run manifests.
inline constexpr std::string_view kKeyedHashId =
    "siphash-2-4 (libsodium crypto_shorthash), key16 = le64(k) || le64(~k)";

struct RandomSource {
  std::uint64_t key = 0;
  RandomMode mode = RandomMode::keyed_hash;
  /// Independence parameter t of the polynomial family (degree t-1).
  int independence = 2;
};

/// SipHash-2-4 of the little-endian encoding of `input` under the 64-bit
/// key expanded as documented in kKeyedHashId.
std::uint64_t siphash64(std::uint64_t key, std::uint64_t input);

/// Deterministic keyed function of an `input_bits`-bit input returning an
/// `out_bits`-bit integer (out_bits <= 64).
///
/// Keyed-hash mode returns the top `out_bits` of siphash64(key, input).
/// Polynomial mode evaluates a degree-(t-1) polynomial over GF(2^q),
/// q = max(input_bits, out_bits), whose coefficients are derived from the
/// key, and returns the top `out_bits` of the field element.  Any t
/// distinct inputs then yield independent uniform outputs.
std::uint64_t keyed_random(const RandomSource& source, std::uint64_t input,
                           int input_bits, int out_bits);

namespace gf2 {

/// Low part (without the leading x^q term) of the irreducible polynomial
/// of degree q used for GF(2^q), 1 <= q <= 64.
std::uint64_t modulus(int q);

/// Product of two field elements of GF(2^q).
std::uint64_t multiply(std::uint64_t a, std::uint64_t b, int q);

/// Rabin irreducibility test for x^q + low over GF(2).
bool is_irreducible(std::uint64_t low, int q);

/// i-th key-derived polynomial coefficient, reduced to q bits.
std::uint64_t coefficient(std::uint64_t key, int i, int q);

}  // namespace gf2

}  // namespace disqla

#endif
