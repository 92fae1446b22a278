#pragma once

// Transform output vectors and their magnitude classification (bent,
// plateaued, landscape).  All spectra are stored UNNORMALIZED: no 2^{-n/2}
// factor, so flatness means |entry|^2 = 2^n.

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rooth/cyclotomic.hpp"
#include "rooth/root_spec.hpp"

namespace rooth {

enum class TransformKind { walsh, generalized, nega, root };

inline std::string to_string(TransformKind k) {
  switch (k) {
    case TransformKind::walsh: return "walsh";
    case TransformKind::generalized: return "gwalsh";
    case TransformKind::nega: return "nega";
    case TransformKind::root: return "root";
  }
  return "?";
}

struct Spectrum {
  int n = 0;
  int k = 1;  // width of the transformed function
  TransformKind kind = TransformKind::walsh;
  int ring_exponent = 0;            // entries live in Z[zeta_{2^m}]
  std::vector<CycElement> entries;  // 2^n entries (exact mode)
  std::vector<std::complex<double>> entries_complex;  // float mode only
  std::optional<RootSpec> spec;     // present for kind == root

  bool is_float() const { return entries.empty() && !entries_complex.empty(); }
};

// Spectral classes over |entry|^2.  A landscape level (m_i, l_i) with l_i odd
// stands for the magnitude 2^{m_i/2} * l_i, i.e. |entry|^2 = 2^{m_i} * l_i^2.
struct SpectralClass {
  enum class Kind { bent, plateaued, landscape, general };
  Kind kind = Kind::general;
  int s = 0;  // plateaued parameter: nonzero |entry|^2 = 2^{n+s}
  std::vector<std::pair<int, std::int64_t>> levels;  // sorted (m_i, l_i), l_i odd
  bool zero_in_spectrum = false;
  int length = 0;  // t or t+1 when zero occurs
  std::vector<double> raw_magnitudes_sq;  // populated only for Kind::general

  std::string describe() const {
    switch (kind) {
      case Kind::bent: return "bent";
      case Kind::plateaued: return std::to_string(s) + "-plateaued";
      case Kind::landscape: {
        std::string out = "landscape{";
        for (std::size_t i = 0; i < levels.size(); ++i) {
          if (i) out += ",";
          out += "(" + std::to_string(levels[i].first) + "," +
                 std::to_string(levels[i].second) + ")";
        }
        return out + "}";
      }
      case Kind::general: return "general";
    }
    return "?";
  }
};

namespace detail {

// |entry|^2 = 2^m * l^2 with l odd, if such a factorization exists
inline std::optional<std::pair<int, std::int64_t>> level_of(std::int64_t sq) {
  int m = 0;
  while ((sq & 1) == 0) {
    sq >>= 1;
    ++m;
  }
  std::int64_t l = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(sq))));
  for (std::int64_t c = std::max<std::int64_t>(0, l - 2); c <= l + 2; ++c)
    if (c * c == sq) return std::make_pair(m, c);
  return std::nullopt;
}

inline SpectralClass classify_squares(const std::vector<std::int64_t>& sq, int n) {
  SpectralClass out;
  std::map<std::int64_t, int> values;
  for (auto v : sq) ++values[v];
  out.zero_in_spectrum = values.count(0) > 0;
  const std::int64_t flat = std::int64_t{1} << n;

  std::vector<std::int64_t> nonzero;
  for (auto& [v, cnt] : values)
    if (v != 0) nonzero.push_back(v);

  if (!out.zero_in_spectrum && nonzero.size() == 1 && nonzero[0] == flat) {
    out.kind = SpectralClass::Kind::bent;
    out.levels = {{n, 1}};
    out.length = 1;
    return out;
  }
  if (nonzero.size() == 1 && (nonzero[0] & (nonzero[0] - 1)) == 0 && nonzero[0] >= flat) {
    out.kind = SpectralClass::Kind::plateaued;
    out.s = std::bit_width(static_cast<std::uint64_t>(nonzero[0])) - 1 - n;
    out.levels = {{n + out.s, 1}};
    out.length = 1 + (out.zero_in_spectrum ? 1 : 0);
    return out;
  }
  std::vector<std::pair<int, std::int64_t>> levels;
  for (auto v : nonzero) {
    auto lv = level_of(v);
    if (!lv) {
      out.kind = SpectralClass::Kind::general;
      for (auto w : sq) out.raw_magnitudes_sq.push_back(static_cast<double>(w));
      return out;
    }
    levels.push_back(*lv);
  }
  out.kind = SpectralClass::Kind::landscape;
  out.levels = std::move(levels);
  out.length = static_cast<int>(out.levels.size()) + (out.zero_in_spectrum ? 1 : 0);
  return out;
}

}  // namespace detail

// Exact path: requires every |entry|^2 to be a rational integer; anything
// else is reported as "general" with the raw float magnitudes.
inline SpectralClass classify_spectrum(const Spectrum& S, double float_tol = 1e-6) {
  SpectralClass out;
  if (!S.is_float()) {
    std::vector<std::int64_t> sq;
    sq.reserve(S.entries.size());
    for (const auto& e : S.entries) {
      CycElement a = e.abs_sq();
      if (!a.is_rational_integer()) {
        out.kind = SpectralClass::Kind::general;
        for (const auto& f : S.entries) out.raw_magnitudes_sq.push_back(std::norm(f.to_complex()));
        return out;
      }
      sq.push_back(a.integer_value());
    }
    return detail::classify_squares(sq, S.n);
  }
  std::vector<std::int64_t> sq;
  for (const auto& e : S.entries_complex) {
    const double v = std::norm(e);
    const auto r = std::llround(v);
    if (std::abs(v - static_cast<double>(r)) > float_tol) {
      out.kind = SpectralClass::Kind::general;
      for (const auto& f : S.entries_complex) out.raw_magnitudes_sq.push_back(std::norm(f));
      return out;
    }
    sq.push_back(r);
  }
  return detail::classify_squares(sq, S.n);
}

inline bool is_flat(const Spectrum& S, double float_tol = 1e-6) {
  const double flat = std::ldexp(1.0, S.n);
  if (!S.is_float()) {
    const CycElement want(std::int64_t{1} << S.n);
    for (const auto& e : S.entries)
      if (e.abs_sq() != want) return false;
    return true;
  }
  for (const auto& e : S.entries_complex)
    if (std::abs(std::norm(e) - flat) > float_tol) return false;
  return true;
}

}  // namespace rooth
