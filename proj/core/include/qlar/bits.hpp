#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qlar/errors.hpp"

namespace qlar {

// Canonical bit convention, shared by every module:
// variable b = package * n_layers + layer, and bit b of the integer
// encoding is (s >> b) & 1. The textual form writes bit 0 first, so the
// first character of a bitstring is the least-significant bit.
using Bitstring = std::uint64_t;

inline int bit_at(Bitstring s, int b) {
  return static_cast<int>((s >> b) & 1u);
}

inline std::vector<int> to_bits(Bitstring s, int n) {
  std::vector<int> bits(n);
  for (int b = 0; b < n; ++b) bits[b] = bit_at(s, b);
  return bits;
}

inline std::string bits_to_string(Bitstring s, int n) {
  std::string out(n, '0');
  for (int b = 0; b < n; ++b)
    if (bit_at(s, b)) out[b] = '1';
  return out;
}

inline Bitstring string_to_bits(std::string_view text) {
  if (text.size() > 63)
    throw InstanceError("bitstring longer than 63 bits: " +
                        std::to_string(text.size()));
  Bitstring s = 0;
  for (std::size_t b = 0; b < text.size(); ++b) {
    if (text[b] == '1')
      s |= Bitstring{1} << b;
    else if (text[b] != '0')
      throw InstanceError("bitstring contains a character other than 0/1");
  }
  return s;
}

// splitmix64; used to derive independent stream seeds from a base seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace qlar
