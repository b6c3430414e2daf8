#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hhc/error.hpp"

namespace hhc {

/// base^exp, throwing ResourceLimit on overflow.
inline std::size_t checked_power(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && r > static_cast<std::size_t>(-1) / base) {
      throw Error(ErrorCode::ResourceLimit, "tuple count overflows");
    }
    r *= base;
  }
  return r;
}

/// Lexicographic rank of a tuple over {0..base-1}; the first entry is most significant.
inline std::size_t encode_tuple(std::span<const std::size_t> t, std::size_t base) {
  std::size_t r = 0;
  for (std::size_t x : t) r = r * base + x;
  return r;
}

inline void decode_tuple(std::size_t index, std::size_t base, std::span<std::size_t> out) {
  for (std::size_t i = out.size(); i-- > 0;) {
    out[i] = index % base;
    index /= base;
  }
}

inline std::vector<std::size_t> decode_tuple(std::size_t index, std::size_t base, std::size_t len) {
  std::vector<std::size_t> t(len);
  decode_tuple(index, base, t);
  return t;
}

}  // namespace hhc
