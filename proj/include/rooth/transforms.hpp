#pragma once

// The four transforms: Walsh-Hadamard, generalized Walsh-Hadamard,
// nega-Hadamard and root-Hadamard, with fast per-coordinate butterflies,
// naive oracles, inversion, component synthesis and the shift relations.
//
// Everything is unnormalized: entry(u) = sum_x zeta^{F(x)} (-1)^{u.x} w(x),
// where w is 1, i^{wt(x)} or lambda_L(x).  Flatness then reads
// |entry|^2 = 2^n.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "rooth/gbf.hpp"
#include "rooth/root_spec.hpp"
#include "rooth/spectrum.hpp"

namespace rooth {

// ---------------------------------------------------------------------------
// plain Walsh-Hadamard of a Boolean function (integer butterfly)

inline std::vector<std::int64_t> walsh_hadamard_values(const BooleanFunction& f) {
  const std::uint32_t size = table_size(f.n);
  std::vector<std::int64_t> w(size);
  for (std::uint32_t x = 0; x < size; ++x) w[x] = f.table[x] ? -1 : 1;
  for (std::uint32_t h = 1; h < size; h <<= 1)
    for (std::uint32_t i = 0; i < size; i += h << 1)
      for (std::uint32_t j = i; j < i + h; ++j) {
        const std::int64_t a = w[j], b = w[j + h];
        w[j] = a + b;
        w[j + h] = a - b;
      }
  return w;
}

inline Spectrum walsh_hadamard(const BooleanFunction& f) {
  Spectrum S;
  S.n = f.n;
  S.k = 1;
  S.kind = TransformKind::walsh;
  S.ring_exponent = 0;
  for (auto v : walsh_hadamard_values(f)) S.entries.emplace_back(v);
  return S;
}

// O(4^n) oracle
inline std::vector<std::int64_t> walsh_hadamard_naive(const BooleanFunction& f) {
  const std::uint32_t size = table_size(f.n);
  std::vector<std::int64_t> w(size, 0);
  for (Point u = 0; u < size; ++u)
    for (Point x = 0; x < size; ++x) w[u] += ((f.table[x] ^ dot(u, x)) & 1) ? -1 : 1;
  return w;
}

// ---------------------------------------------------------------------------
// root-Hadamard transform (subsumes the generalized Walsh and nega ones)
//
// Butterfly: over coordinate j belonging to block s, the 2x2 kernel is
//   [ 1   alpha_s ]
//   [ 1  -alpha_s ] .

inline Spectrum root_hadamard(const GeneralizedBooleanFunction& F, const RootSpec& spec) {
  if (spec.n != F.n) throw std::invalid_argument("spec: dimension differs from function");
  const int M = std::max(spec.ring_exponent(), F.k);
  const std::uint32_t size = table_size(F.n);

  std::vector<CycElement> t;
  t.reserve(size);
  const int scale = M - F.k;
  for (Point x = 0; x < size; ++x)
    t.push_back(zeta_pow(M, static_cast<std::int64_t>(F.values[x]) << scale));

  // per-block alpha exponent for each coordinate
  std::vector<std::int64_t> alpha_exp(F.n, 0);
  for (const auto& b : spec.blocks)
    for (int j : b.indices) alpha_exp[j] = std::int64_t{1} << (M - b.order_exponent);

  for (int j = 0; j < F.n; ++j) {
    const std::uint32_t h = size >> (j + 1);  // stride of coordinate j
    const std::int64_t ae = alpha_exp[j];
    for (std::uint32_t i = 0; i < size; i += h << 1)
      for (std::uint32_t p = i; p < i + h; ++p) {
        CycElement hi = t[p + h].times_zeta_pow(ae);  // alpha_s * (x_j = 1 part)
        CycElement lo = t[p];
        t[p] = lo + hi;
        t[p + h] = lo - hi;
      }
  }

  Spectrum S;
  S.n = F.n;
  S.k = F.k;
  S.kind = TransformKind::root;
  S.ring_exponent = M;
  S.entries = std::move(t);
  S.spec = spec;
  return S;
}

// naive quadruple-checked sum, the oracle for the butterfly
inline Spectrum root_hadamard_naive(const GeneralizedBooleanFunction& F, const RootSpec& spec) {
  if (spec.n != F.n) throw std::invalid_argument("spec: dimension differs from function");
  const int M = std::max(spec.ring_exponent(), F.k);
  const std::uint32_t size = table_size(F.n);
  Spectrum S;
  S.n = F.n;
  S.k = F.k;
  S.kind = TransformKind::root;
  S.ring_exponent = M;
  S.spec = spec;
  const int scale = M - F.k;
  for (Point u = 0; u < size; ++u) {
    CycElement acc;
    for (Point x = 0; x < size; ++x) {
      std::int64_t e = (static_cast<std::int64_t>(F.values[x]) << scale) +
                       spec.lambda_exponent(x, M);
      if (dot(u, x)) e += std::int64_t{1} << (M - 1);  // times -1
      acc += zeta_pow(M, e);
    }
    S.entries.push_back(acc);
  }
  return S;
}

// float fallback for non-2-power orders
inline Spectrum root_hadamard_float(const GeneralizedBooleanFunction& F, const RootSpec& spec) {
  if (spec.n != F.n) throw std::invalid_argument("spec: dimension differs from function");
  const std::uint32_t size = table_size(F.n);
  Spectrum S;
  S.n = F.n;
  S.k = F.k;
  S.kind = TransformKind::root;
  S.ring_exponent = 0;
  S.spec = spec;
  S.entries_complex.resize(size);
  std::vector<std::complex<double>> t(size);
  const double q = std::ldexp(1.0, F.k);
  for (Point x = 0; x < size; ++x) {
    const double arg = 2.0 * std::numbers::pi * F.values[x] / q;
    t[x] = std::complex<double>(std::cos(arg), std::sin(arg)) * spec.lambda_complex(x);
  }
  for (std::uint32_t h = 1; h < size; h <<= 1)
    for (std::uint32_t i = 0; i < size; i += h << 1)
      for (std::uint32_t j = i; j < i + h; ++j) {
        const auto a = t[j], b = t[j + h];
        t[j] = a + b;
        t[j + h] = a - b;
      }
  S.entries_complex = std::move(t);
  return S;
}

inline Spectrum generalized_walsh(const GeneralizedBooleanFunction& F) {
  Spectrum S = root_hadamard(F, RootSpec::trivial(F.n));
  S.kind = TransformKind::generalized;
  S.spec.reset();
  return S;
}

inline Spectrum nega_hadamard(const GeneralizedBooleanFunction& F) {
  Spectrum S = root_hadamard(F, RootSpec::single_block(F.n, 4));
  S.kind = TransformKind::nega;
  S.spec.reset();
  return S;
}

// T_{L,A,f} = U^{(2)}_{L,A,f} for a plain Boolean function
inline Spectrum binary_root_transform(const BooleanFunction& f, const RootSpec& spec) {
  return root_hadamard(GeneralizedBooleanFunction::from_boolean(f), spec);
}

// ---------------------------------------------------------------------------
// inversion: zeta^{F(y)} lambda_L(y) = 2^{-n} sum_w S(w) (-1)^{y.w}

inline GeneralizedBooleanFunction invert_root_hadamard(const Spectrum& S, const RootSpec& spec) {
  if (S.is_float()) throw std::invalid_argument("spectrum: inversion requires exact entries");
  if (spec.n != S.n) throw std::invalid_argument("spec: dimension differs from spectrum");
  const std::uint32_t size = table_size(S.n);
  if (S.entries.size() != size) throw std::invalid_argument("spectrum: entry count != 2^n");
  const int M = S.ring_exponent;
  const int k = S.k;

  // inverse Walsh butterfly, then exact division by 2^n
  std::vector<CycElement> t = S.entries;
  for (std::uint32_t h = 1; h < size; h <<= 1)
    for (std::uint32_t i = 0; i < size; i += h << 1)
      for (std::uint32_t j = i; j < i + h; ++j) {
        CycElement a = t[j], b = t[j + h];
        t[j] = a + b;
        t[j + h] = a - b;
      }

  // prebuild the 2^k candidate ring values
  std::vector<CycElement> powers;
  for (std::uint32_t v = 0; v < (1u << k); ++v)
    powers.push_back(zeta_pow(M, static_cast<std::int64_t>(v) << (M - k)));

  std::vector<std::uint8_t> values(size);
  for (Point y = 0; y < size; ++y) {
    CycElement lhs;
    try {
      lhs = t[y].div_exact_pow2(S.n);
    } catch (const std::domain_error&) {
      throw std::domain_error("spectrum: not in the transform image (2^n does not divide)");
    }
    // divide out lambda_L(y): multiply by its inverse zeta^{-e}
    lhs = lhs.times_zeta_pow(-spec.lambda_exponent(y, M));
    bool found = false;
    for (std::uint32_t v = 0; v < (1u << k); ++v)
      if (lhs == powers[v]) {
        values[y] = static_cast<std::uint8_t>(v);
        found = true;
        break;
      }
    if (!found)
      throw std::domain_error("spectrum: not in the transform image (no zeta power matches "
                              "at point " + std::to_string(y) + ")");
  }
  return GeneralizedBooleanFunction(S.n, k, std::move(values));
}

// ---------------------------------------------------------------------------
// Component synthesis: assemble U_{L,A,F}(u) from the 2^{k-1} binary
// component transforms,
//   U(u) = 2^{-(k-1)} sum_{c,d} (-1)^{c.d} zeta_{2^k}^{iota(d)} T_{L,A,f_c}(u).

inline CycElement component_synthesis(const GeneralizedBooleanFunction& F, const RootSpec& spec,
                                      Point u) {
  const int M = std::max(spec.ring_exponent(), F.k);
  const std::uint32_t half = 1u << (F.k - 1);
  CycElement acc;
  for (std::uint32_t c = 0; c < half; ++c) {
    const Spectrum T = binary_root_transform(component_function(F, c), spec);
    const CycElement tu = T.entries[u].lift(M);
    for (std::uint32_t d = 0; d < half; ++d) {
      std::int64_t e = static_cast<std::int64_t>(d) << (M - F.k);
      if (weight(c & d) & 1) e += std::int64_t{1} << (M - 1);
      acc += tu.times_zeta_pow(e);
    }
  }
  return acc.div_exact_pow2(F.k - 1);
}

// ---------------------------------------------------------------------------
// Transform relationships.

// g over Z_{2^{k+1}} with g = 2F + 2^{k-1} s_1 + 2^k s_2; then the
// nega-Hadamard of F equals the generalized Walsh of g entrywise.
inline GeneralizedBooleanFunction nega_to_walsh_lift(const GeneralizedBooleanFunction& F) {
  const std::uint32_t size = table_size(F.n);
  const std::uint32_t q2 = 1u << (F.k + 1);
  std::vector<std::uint8_t> g(size);
  for (Point x = 0; x < size; ++x) {
    const std::uint32_t s1 = static_cast<std::uint32_t>(elementary_symmetric(1, x));
    const std::uint32_t s2 = static_cast<std::uint32_t>(elementary_symmetric(2, x));
    g[x] = static_cast<std::uint8_t>(
        (2u * F.values[x] + (s1 << (F.k - 1)) + (s2 << F.k)) & (q2 - 1));
  }
  return GeneralizedBooleanFunction(F.n, F.k + 1, std::move(g));
}

// h_J(x) = F(x) - sum_{s in J} 2^{k-m_s} (wt(x_{R_s}) mod 2^{m_s});
// then U_{L,A,h_J} = U_{L,A_J,F}, and with J = all blocks, = H_F.
inline GeneralizedBooleanFunction root_shift_function(const GeneralizedBooleanFunction& F,
                                                      const RootSpec& spec,
                                                      const std::vector<std::size_t>& J) {
  const std::uint32_t q = 1u << F.k;
  for (std::size_t s : J) {
    if (s >= spec.blocks.size()) throw std::invalid_argument("J: block index out of range");
    if (spec.blocks[s].order_exponent < 0 || spec.blocks[s].order_exponent > F.k)
      throw std::invalid_argument("J: block order exceeds 2^k");
  }
  std::vector<std::uint8_t> h(F.values.begin(), F.values.end());
  const std::uint32_t size = table_size(F.n);
  for (Point x = 0; x < size; ++x) {
    std::int64_t sub = 0;
    for (std::size_t s : J) {
      const auto& b = spec.blocks[s];
      const std::int64_t w = weight(x & b.mask) % b.order;
      sub += w << (F.k - b.order_exponent);
    }
    const std::int64_t r = ((F.values[x] - sub) % q + q) % q;
    h[x] = static_cast<std::uint8_t>(r);
  }
  return GeneralizedBooleanFunction(F.n, F.k, std::move(h));
}

inline std::vector<std::size_t> all_blocks(const RootSpec& spec) {
  std::vector<std::size_t> J(spec.blocks.size());
  for (std::size_t i = 0; i < J.size(); ++i) J[i] = i;
  return J;
}

}  // namespace rooth
