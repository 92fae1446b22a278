#pragma once

// Function-domain correlations: crosscorrelation, nega-crosscorrelation,
// root-crosscorrelation (both orientations), the periodic/negaperiodic
// function correlations, full profiles, and reconstruction of profiles from
// spectra via the duality identities.
//
// Orientations.  The two sum conventions in circulation are
//   definition:  sum_x zeta^{F(x+z) - G(x)} w(x, z)
//   spectral:    sum_x zeta^{F(x) - G(x+z)} w(x, z)
// For the unweighted crosscorrelation they coincide (substitute x -> x+z).
// With the root weight mu^{x . z} they differ, and only the spectral one
// satisfies the duality C(z) = lambda_L(z) 2^{-n} sum_u U_f conj(U_g)
// (-1)^{u.z}.  The definition one is what the worked autocorrelation tables
// and the nega specialization use.  Both are exposed; they are linked by
//   C_defn^A(z) = lambda_A(z)^2 * C_spectral^{conj A}(z).

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "rooth/gbf.hpp"
#include "rooth/root_spec.hpp"
#include "rooth/spectrum.hpp"
#include "rooth/transforms.hpp"

namespace rooth {

enum class Orientation { definition, spectral };

struct CorrelationProfile {
  int n = 0;
  int ring_exponent = 0;
  std::vector<CycElement> values;  // indexed by shift
};

namespace detail {

inline void check_same_shape(const GeneralizedBooleanFunction& F,
                             const GeneralizedBooleanFunction& G) {
  if (F.n != G.n || F.k != G.k)
    throw std::invalid_argument("functions: dimension or width mismatch");
}

}  // namespace detail

// C_{F,G}(z) = sum_x zeta^{F(x+z) - G(x)}
inline CycElement crosscorrelation(const GeneralizedBooleanFunction& F,
                                   const GeneralizedBooleanFunction& G, Point z) {
  detail::check_same_shape(F, G);
  const std::uint32_t size = table_size(F.n);
  CycElement acc;
  for (Point x = 0; x < size; ++x)
    acc += zeta_pow(F.k, static_cast<std::int64_t>(F.values[x ^ z]) - G.values[x]);
  return acc;
}

// C^n_{F,G}(z) = sum_x zeta^{F(x+z) - G(x)} (-1)^{x.z}
inline CycElement nega_crosscorrelation(const GeneralizedBooleanFunction& F,
                                        const GeneralizedBooleanFunction& G, Point z) {
  detail::check_same_shape(F, G);
  const int m = std::max(F.k, 1);
  const std::uint32_t size = table_size(F.n);
  CycElement acc;
  for (Point x = 0; x < size; ++x) {
    std::int64_t e = static_cast<std::int64_t>(F.values[x ^ z]) - G.values[x];
    e <<= (m - F.k);
    if (dot(x, z)) e += std::int64_t{1} << (m - 1);
    acc += zeta_pow(m, e);
  }
  return acc;
}

// C^p_{L,A,F,G}(z) with weight prod_s mu_s^{x_{R_s} . z_{R_s}}
inline CycElement root_crosscorrelation(const GeneralizedBooleanFunction& F,
                                        const GeneralizedBooleanFunction& G,
                                        const RootSpec& spec, Point z,
                                        Orientation o = Orientation::definition) {
  detail::check_same_shape(F, G);
  if (spec.n != F.n) throw std::invalid_argument("spec: dimension differs from functions");
  const int M = std::max(spec.ring_exponent(), F.k);
  const std::uint32_t size = table_size(F.n);
  CycElement acc;
  for (Point x = 0; x < size; ++x) {
    const std::int64_t diff =
        o == Orientation::definition
            ? static_cast<std::int64_t>(F.values[x ^ z]) - G.values[x]
            : static_cast<std::int64_t>(F.values[x]) - G.values[x ^ z];
    acc += zeta_pow(M, (diff << (M - F.k)) + spec.mu_exponent(x, z, M));
  }
  return acc;
}

inline CycElement root_autocorrelation(const GeneralizedBooleanFunction& F, const RootSpec& spec,
                                       Point z, Orientation o = Orientation::definition) {
  return root_crosscorrelation(F, F, spec, z, o);
}

inline CorrelationProfile root_autocorrelation_profile(const GeneralizedBooleanFunction& F,
                                                       const RootSpec& spec,
                                                       Orientation o = Orientation::definition) {
  CorrelationProfile p;
  p.n = F.n;
  p.ring_exponent = std::max(spec.ring_exponent(), F.k);
  const std::uint32_t size = table_size(F.n);
  p.values.reserve(size);
  for (Point z = 0; z < size; ++z) p.values.push_back(root_autocorrelation(F, spec, z, o));
  return p;
}

// periodic / negaperiodic function correlations (the shifted-argument forms)
inline CycElement function_periodic_correlation(const GeneralizedBooleanFunction& F,
                                                const GeneralizedBooleanFunction& G, Point u) {
  detail::check_same_shape(F, G);
  const std::uint32_t size = table_size(F.n);
  CycElement acc;
  for (Point v = 0; v < size; ++v)
    acc += zeta_pow(F.k, static_cast<std::int64_t>(F.values[v]) - G.values[v ^ u]);
  return acc;
}

inline CycElement function_negaperiodic_correlation(const GeneralizedBooleanFunction& F,
                                                    const GeneralizedBooleanFunction& G,
                                                    Point u) {
  detail::check_same_shape(F, G);
  const int m = std::max(F.k, 1);
  const std::uint32_t size = table_size(F.n);
  CycElement acc;
  for (Point v = 0; v < size; ++v) {
    std::int64_t e = static_cast<std::int64_t>(F.values[v]) - G.values[v ^ u];
    e <<= (m - F.k);
    if (dot(u, v)) e += std::int64_t{1} << (m - 1);
    acc += zeta_pow(m, e);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Profiles from spectra.  All use the unnormalized convention with an
// explicit exact division by 2^n; scales were pinned by brute-force oracles
// at n <= 3 before being hard-coded here.

enum class CorrKind { walsh, nega, root };

// walsh:  C_{f,g}(u)     = 2^{-n} sum_x H_f(x) conj(H_g(x)) (-1)^{u.x}
// nega:   C^n_{f,g}(z)   = i^{-wt(z)} 2^{-n} sum_u N_f(u) conj(N_g(u)) (-1)^{u.z}
// root:   C^p_{f,g}(z)   = lambda_L(z) 2^{-n} sum_u U_f(u) conj(U_g(u)) (-1)^{u.z}
//         (spectral orientation)
inline CorrelationProfile correlation_from_spectrum(const Spectrum& Sf, const Spectrum& Sg,
                                                    CorrKind kind) {
  if (Sf.n != Sg.n || Sf.kind != Sg.kind)
    throw std::invalid_argument("spectra: kind or dimension mismatch");
  if (Sf.is_float() || Sg.is_float())
    throw std::invalid_argument("spectra: profile reconstruction requires exact entries");
  const std::uint32_t size = table_size(Sf.n);
  const int M = std::max({Sf.ring_exponent, Sg.ring_exponent,
                          kind == CorrKind::nega ? 2 : 0});
  RootSpec spec;
  if (kind == CorrKind::root) {
    if (!Sf.spec || !Sg.spec || !(*Sf.spec == *Sg.spec))
      throw std::invalid_argument("spectra: root profiles need matching RootSpec metadata");
    spec = *Sf.spec;
  }

  // pointwise products, then one inverse Walsh butterfly
  std::vector<CycElement> t;
  t.reserve(size);
  for (Point u = 0; u < size; ++u)
    t.push_back(Sf.entries[u].lift(M) * Sg.entries[u].lift(M).conj());
  for (std::uint32_t h = 1; h < size; h <<= 1)
    for (std::uint32_t i = 0; i < size; i += h << 1)
      for (std::uint32_t j = i; j < i + h; ++j) {
        CycElement a = t[j], b = t[j + h];
        t[j] = a + b;
        t[j + h] = a - b;
      }

  CorrelationProfile p;
  p.n = Sf.n;
  p.ring_exponent = M;
  p.values.reserve(size);
  for (Point z = 0; z < size; ++z) {
    CycElement v = t[z].div_exact_pow2(Sf.n);
    switch (kind) {
      case CorrKind::walsh:
        break;
      case CorrKind::nega:
        v = v.times_zeta_pow(-static_cast<std::int64_t>(weight(z)) << (M - 2));
        break;
      case CorrKind::root:
        v = v.times_zeta_pow(spec.lambda_exponent(z, M));
        break;
    }
    p.values.push_back(std::move(v));
  }
  return p;
}

}  // namespace rooth
