#pragma once

// Bit conventions shared by every module.
//
// Points of F_2^n are truth-table indices t in [0, 2^n): variable x_{j+1}
// (index j in {0..n-1}) is bit (n-1-j) of t, so x_1 is the most significant
// bit and x_n the least significant.  v_0 = (0,...,0), v_1 = (0,...,0,1).

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rooth {

using Point = std::uint32_t;

constexpr int kMaxVars = 24;

inline std::uint32_t table_size(int n) {
  if (n < 1 || n > kMaxVars)
    throw std::invalid_argument("n: variable count must be in [1, " +
                                std::to_string(kMaxVars) + "]");
  return std::uint32_t{1} << n;
}

inline int weight(Point x) { return std::popcount(x); }

// u . x mod 2
inline int dot(Point u, Point x) { return std::popcount(u & x) & 1; }

// component-wise product (the "star" intersection)
inline Point star(Point x, Point y) { return x & y; }

// bit of variable x_{j+1} at point t
inline int point_bit(Point t, int j, int n) { return (t >> (n - 1 - j)) & 1; }

// mask selecting the table-index bits of a set of variable indices
inline Point index_mask(const std::vector<int>& indices, int n) {
  Point m = 0;
  for (int j : indices) {
    if (j < 0 || j >= n)
      throw std::invalid_argument("indices: entry " + std::to_string(j) +
                                  " outside {0.." + std::to_string(n - 1) + "}");
    m |= Point{1} << (n - 1 - j);
  }
  return m;
}

// A bit vector (x_1..x_n for points, c_0..c_{k-2} for component selectors).
struct BitVector {
  int n = 0;
  std::vector<std::uint8_t> bits;

  BitVector() = default;
  BitVector(std::initializer_list<int> v) {
    n = static_cast<int>(v.size());
    for (int b : v) bits.push_back(static_cast<std::uint8_t>(b & 1));
  }
  static BitVector from_point(Point t, int n) {
    BitVector out;
    out.n = n;
    out.bits.resize(n);
    for (int j = 0; j < n; ++j) out.bits[j] = static_cast<std::uint8_t>(point_bit(t, j, n));
    return out;
  }
  // x_1..x_n reading -> table index
  Point to_point() const {
    Point t = 0;
    for (int j = 0; j < n; ++j)
      if (bits[j]) t |= Point{1} << (n - 1 - j);
    return t;
  }
  // c_0..c_{k-2} reading -> iota(c) = sum c_j 2^j
  std::uint32_t to_iota() const {
    std::uint32_t v = 0;
    for (int j = 0; j < n; ++j)
      if (bits[j]) v |= std::uint32_t{1} << j;
    return v;
  }
};

}  // namespace rooth
