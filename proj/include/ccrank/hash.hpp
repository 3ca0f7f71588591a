#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace ccrank {

// FNV-1a over bytes, seeded by an arbitrary 64-bit basis.
constexpr std::uint64_t fnv1a64(std::string_view bytes,
                                std::uint64_t basis = 0xcbf29ce484222325ULL) {
  std::uint64_t h = basis;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// SplitMix64 finalizer; a bijection on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t combine64(std::uint64_t a, std::uint64_t b) {
  return mix64(a ^ mix64(b + 0x632be59bd9b4e019ULL));
}

/// Salted token hash used as the persisted candidate id.
constexpr std::uint64_t salted_token_hash(std::uint64_t salt, std::string_view token) {
  return mix64(fnv1a64(token, 0xcbf29ce484222325ULL ^ mix64(salt)));
}

std::string to_hex64(std::uint64_t value);
std::uint64_t from_hex64(std::string_view hex);  // throws Error(MalformedRecord)

}  // namespace ccrank
