#pragma once

// Bipolar sequences with aperiodic / periodic / negaperiodic correlations,
// the cyclic and negacyclic shift matrices, and Laurent-polynomial Golay
// certificates A(x)A(x^-1) + B(x)B(x^-1).

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace rooth {

struct BipolarSequence {
  std::vector<int> entries;  // +1 / -1

  BipolarSequence() = default;
  BipolarSequence(std::initializer_list<int> v) : entries(v) { validate(); }
  explicit BipolarSequence(std::vector<int> v) : entries(std::move(v)) { validate(); }

  // length-N sequence from the bits of `code`; bit i set -> entry i is -1
  static BipolarSequence from_code(std::uint32_t code, int N) {
    std::vector<int> e(N);
    for (int i = 0; i < N; ++i) e[i] = (code >> i) & 1 ? -1 : 1;
    return BipolarSequence(std::move(e));
  }
  std::uint32_t to_code() const {
    std::uint32_t c = 0;
    for (std::size_t i = 0; i < entries.size(); ++i)
      if (entries[i] < 0) c |= std::uint32_t{1} << i;
    return c;
  }

  int size() const { return static_cast<int>(entries.size()); }
  bool operator==(const BipolarSequence& o) const = default;

 private:
  void validate() const {
    if (entries.empty()) throw std::invalid_argument("entries: sequence must be nonempty");
    for (int v : entries)
      if (v != 1 && v != -1)
        throw std::invalid_argument("entries: values must be +1 or -1");
  }
};

enum class SeqCorrelation { aperiodic, periodic, negaperiodic };

inline void check_shift(int k, int N) {
  if (k < 0 || k >= N)
    throw std::out_of_range("shift " + std::to_string(k) + " outside [0, N-1]");
}

// cross convention: sum_i a_{i+k} b_i, the coefficient of x^k in A(x)B(x^-1)
inline std::int64_t aperiodic_crosscorr(const BipolarSequence& a, const BipolarSequence& b,
                                        int k) {
  if (a.size() != b.size()) throw std::invalid_argument("sequences: length mismatch");
  const int N = a.size();
  check_shift(k, N);
  std::int64_t s = 0;
  for (int i = 0; i + k < N; ++i) s += a.entries[i + k] * b.entries[i];
  return s;
}

inline std::int64_t aperiodic_autocorr(const BipolarSequence& a, int k) {
  return aperiodic_crosscorr(a, a, k);
}

inline std::int64_t periodic_crosscorr(const BipolarSequence& a, const BipolarSequence& b,
                                       int k) {
  if (a.size() != b.size()) throw std::invalid_argument("sequences: length mismatch");
  const int N = a.size();
  check_shift(k, N);
  std::int64_t s = 0;
  for (int i = 0; i < N; ++i) s += a.entries[(i + k) % N] * b.entries[i];
  return s;
}

inline std::int64_t periodic_autocorr(const BipolarSequence& a, int k) {
  return periodic_crosscorr(a, a, k);
}

// wrapped terms flip sign: (-1)^{floor((i+k)/N)}
inline std::int64_t negaperiodic_crosscorr(const BipolarSequence& a, const BipolarSequence& b,
                                           int k) {
  if (a.size() != b.size()) throw std::invalid_argument("sequences: length mismatch");
  const int N = a.size();
  check_shift(k, N);
  std::int64_t s = 0;
  for (int i = 0; i < N; ++i) {
    const int sign = (i + k) / N ? -1 : 1;
    s += sign * a.entries[(i + k) % N] * b.entries[i];
  }
  return s;
}

inline std::int64_t negaperiodic_autocorr(const BipolarSequence& a, int k) {
  return negaperiodic_crosscorr(a, a, k);
}

inline std::int64_t seq_crosscorr(const BipolarSequence& a, const BipolarSequence& b, int k,
                                  SeqCorrelation kind) {
  switch (kind) {
    case SeqCorrelation::aperiodic: return aperiodic_crosscorr(a, b, k);
    case SeqCorrelation::periodic: return periodic_crosscorr(a, b, k);
    case SeqCorrelation::negaperiodic: return negaperiodic_crosscorr(a, b, k);
  }
  throw std::logic_error("unreachable");
}

inline std::int64_t seq_autocorr(const BipolarSequence& a, int k, SeqCorrelation kind) {
  return seq_crosscorr(a, a, k, kind);
}

// ---------------------------------------------------------------------------
// shift-matrix route: a . (a M^k), M = U (cyclic) or V (negacyclic)

namespace detail {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

inline IntMatrix shift_matrix(int N, bool nega) {
  IntMatrix M(N, std::vector<std::int64_t>(N, 0));
  for (int i = 0; i + 1 < N; ++i) M[i][i + 1] = 1;
  M[N - 1][0] = nega ? -1 : 1;
  return M;
}

inline std::vector<std::int64_t> row_times_matrix(const std::vector<std::int64_t>& v,
                                                  const IntMatrix& M) {
  const int N = static_cast<int>(v.size());
  std::vector<std::int64_t> r(N, 0);
  for (int j = 0; j < N; ++j)
    for (int i = 0; i < N; ++i) r[j] += v[i] * M[i][j];
  return r;
}

}  // namespace detail

inline std::int64_t shift_matrix_autocorr(const BipolarSequence& a, int k, SeqCorrelation kind) {
  if (kind == SeqCorrelation::aperiodic)
    throw std::invalid_argument("kind: shift-matrix form exists for periodic and nega only");
  const int N = a.size();
  check_shift(k, N);
  const auto M = detail::shift_matrix(N, kind == SeqCorrelation::negaperiodic);
  std::vector<std::int64_t> v(a.entries.begin(), a.entries.end());
  for (int step = 0; step < k; ++step) v = detail::row_times_matrix(v, M);
  std::int64_t s = 0;
  for (int i = 0; i < N; ++i) s += a.entries[i] * v[i];
  return s;
}

// ---------------------------------------------------------------------------
// Laurent certificates

struct LaurentPoly {
  std::map<int, std::int64_t> coeffs;  // exponent -> coefficient, zeros absent

  void add(int e, std::int64_t c) {
    if (c == 0) return;
    auto it = coeffs.find(e);
    if (it == coeffs.end()) {
      coeffs[e] = c;
    } else {
      it->second += c;
      if (it->second == 0) coeffs.erase(it);
    }
  }
  bool is_constant(std::int64_t v) const {
    if (v == 0) return coeffs.empty();
    return coeffs.size() == 1 && coeffs.count(0) && coeffs.at(0) == v;
  }
  bool operator==(const LaurentPoly& o) const = default;
};

inline LaurentPoly sequence_poly_self_product(const BipolarSequence& a) {
  LaurentPoly p;  // A(x) A(x^{-1})
  const int N = a.size();
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) p.add(i - j, a.entries[i] * a.entries[j]);
  return p;
}

// A(x)A(x^-1) + B(x)B(x^-1), reduced mod x^N - 1 (periodic) or x^N + 1
// (negaperiodic) when requested; the pair is complementary of the given kind
// iff the result is the constant 2N.
inline LaurentPoly golay_poly_residue(const BipolarSequence& a, const BipolarSequence& b,
                                      SeqCorrelation kind) {
  if (a.size() != b.size()) throw std::invalid_argument("sequences: length mismatch");
  const int N = a.size();
  LaurentPoly sum = sequence_poly_self_product(a);
  for (auto [e, c] : sequence_poly_self_product(b).coeffs) sum.add(e, c);
  if (kind == SeqCorrelation::aperiodic) return sum;
  LaurentPoly red;
  for (auto [e, c] : sum.coeffs) {
    const int q = e >= 0 ? e / N : -((-e + N - 1) / N);  // floor division
    const int r = e - q * N;
    const bool odd_wrap = ((q % 2) + 2) % 2 == 1;
    if (kind == SeqCorrelation::periodic)
      red.add(r, c);
    else
      red.add(r, odd_wrap ? -c : c);  // x^N = -1
  }
  return red;
}

}  // namespace rooth
