#pragma once

// Boolean and generalized Boolean functions as truth tables, their binary
// component decomposition, derivatives and elementary symmetric polynomials.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "rooth/bits.hpp"

namespace rooth {

struct BooleanFunction {
  int n = 0;
  std::vector<std::uint8_t> table;  // 2^n entries, index = truth-table point

  BooleanFunction() = default;
  BooleanFunction(int n_, std::vector<std::uint8_t> t) : n(n_), table(std::move(t)) {
    if (table.size() != table_size(n))
      throw std::invalid_argument("table: length must be 2^n");
    for (auto v : table)
      if (v > 1) throw std::invalid_argument("table: entries must be bits");
  }
  static BooleanFunction zero(int n) {
    return BooleanFunction(n, std::vector<std::uint8_t>(table_size(n), 0));
  }
  std::uint8_t operator()(Point x) const { return table[x]; }
  bool operator==(const BooleanFunction& o) const = default;
};

struct GeneralizedBooleanFunction {
  int n = 0;
  int k = 1;  // codomain Z_{2^k}
  std::vector<std::uint8_t> values;

  GeneralizedBooleanFunction() = default;
  GeneralizedBooleanFunction(int n_, int k_, std::vector<std::uint8_t> v)
      : n(n_), k(k_), values(std::move(v)) {
    if (k < 1 || k > 8) throw std::invalid_argument("k: bit width must be in [1, 8]");
    if (values.size() != table_size(n))
      throw std::invalid_argument("values: length must be 2^n");
    for (auto x : values)
      if (x >= (1u << k))
        throw std::invalid_argument("values: entry " + std::to_string(x) +
                                    " not a residue mod 2^" + std::to_string(k));
  }
  static GeneralizedBooleanFunction zero(int n, int k) {
    return GeneralizedBooleanFunction(n, k, std::vector<std::uint8_t>(table_size(n), 0));
  }
  static GeneralizedBooleanFunction from_boolean(const BooleanFunction& f) {
    return GeneralizedBooleanFunction(f.n, 1, f.table);
  }
  std::uint8_t operator()(Point x) const { return values[x]; }
  bool operator==(const GeneralizedBooleanFunction& o) const = default;
};

// F(x) = sum_i 2^i a_i(x); returns a_0..a_{k-1}
inline std::vector<BooleanFunction> decompose_components(const GeneralizedBooleanFunction& F) {
  std::vector<BooleanFunction> out;
  out.reserve(F.k);
  for (int i = 0; i < F.k; ++i) {
    std::vector<std::uint8_t> t(F.values.size());
    for (std::size_t x = 0; x < t.size(); ++x) t[x] = (F.values[x] >> i) & 1;
    out.emplace_back(F.n, std::move(t));
  }
  return out;
}

inline GeneralizedBooleanFunction compose_components(const std::vector<BooleanFunction>& a) {
  if (a.empty()) throw std::invalid_argument("components: need at least one");
  const int n = a[0].n;
  const int k = static_cast<int>(a.size());
  std::vector<std::uint8_t> v(table_size(n), 0);
  for (int i = 0; i < k; ++i) {
    if (a[i].n != n) throw std::invalid_argument("components: mismatched variable counts");
    for (std::size_t x = 0; x < v.size(); ++x)
      v[x] = static_cast<std::uint8_t>(v[x] | (a[i].table[x] << i));
  }
  return GeneralizedBooleanFunction(n, k, std::move(v));
}

// f_c = c_0 a_0 + ... + c_{k-2} a_{k-2} + a_{k-1} over F_2
inline BooleanFunction component_function(const GeneralizedBooleanFunction& F,
                                          const BitVector& c) {
  if (c.n != F.k - 1)
    throw std::invalid_argument("c: selector length must be k-1 = " + std::to_string(F.k - 1));
  std::vector<std::uint8_t> t(F.values.size());
  for (std::size_t x = 0; x < t.size(); ++x) {
    int b = (F.values[x] >> (F.k - 1)) & 1;
    for (int j = 0; j < F.k - 1; ++j) b ^= c.bits[j] & (F.values[x] >> j);
    t[x] = static_cast<std::uint8_t>(b & 1);
  }
  return BooleanFunction(F.n, std::move(t));
}

// same selector addressed by its integer image iota(c)
inline BooleanFunction component_function(const GeneralizedBooleanFunction& F, std::uint32_t c) {
  BitVector sel;
  sel.n = F.k - 1;
  sel.bits.resize(sel.n);
  for (int j = 0; j < sel.n; ++j) sel.bits[j] = (c >> j) & 1;
  return component_function(F, sel);
}

// s_t(x) = binom(wt(x), t) mod 2, via Lucas' theorem
inline int elementary_symmetric(int t, const BitVector& x) {
  if (t < 1) throw std::invalid_argument("t: degree must be >= 1");
  int w = 0;
  for (auto b : x.bits) w += b;
  return ((w & t) == t) ? 1 : 0;
}

inline int elementary_symmetric(int t, Point x) {
  if (t < 1) throw std::invalid_argument("t: degree must be >= 1");
  const int w = weight(x);
  return ((w & t) == t) ? 1 : 0;
}

// D_a F(x) = F(x+a) - F(x) mod 2^k
inline GeneralizedBooleanFunction derivative(const GeneralizedBooleanFunction& F,
                                             const BitVector& a) {
  if (a.n != F.n) throw std::invalid_argument("a: direction length must equal n");
  const Point ap = a.to_point();
  const std::uint32_t q = 1u << F.k;
  std::vector<std::uint8_t> v(F.values.size());
  for (Point x = 0; x < v.size(); ++x)
    v[x] = static_cast<std::uint8_t>((F.values[x ^ ap] - F.values[x] + q) & (q - 1));
  return GeneralizedBooleanFunction(F.n, F.k, std::move(v));
}

// canonical bijection F_2^{k-1} -> Z_{2^{k-1}}
inline std::uint32_t iota(const BitVector& c) { return c.to_iota(); }

}  // namespace rooth
