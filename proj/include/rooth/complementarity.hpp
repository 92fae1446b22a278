#pragma once

// Complementarity predicates: Golay / P- / N-complementary sets of bipolar
// sequences, A-/P-/N-crosscomplementary pairs, LA-complementary sets of
// generalized Boolean functions, and the component-decomposition theorem
// as an executable check.

#include <cstdint>
#include <string>
#include <vector>

#include "rooth/correlations.hpp"
#include "rooth/gbf.hpp"
#include "rooth/sequences.hpp"

namespace rooth {

struct ComplementarityVerdict {
  std::string kind;
  bool holds = false;
  std::vector<std::uint32_t> witnesses;  // shifts with nonzero summed correlation

  explicit operator bool() const { return holds; }
};

// sum of autocorrelations over the set vanishes at every nonzero shift
inline ComplementarityVerdict is_complementary_set(const std::vector<BipolarSequence>& seqs,
                                                   SeqCorrelation kind) {
  if (seqs.empty()) throw std::invalid_argument("sequences: set must be nonempty");
  const int N = seqs[0].size();
  for (const auto& s : seqs)
    if (s.size() != N) throw std::invalid_argument("sequences: length mismatch");
  ComplementarityVerdict v;
  v.kind = kind == SeqCorrelation::aperiodic   ? "golay"
           : kind == SeqCorrelation::periodic ? "p-set"
                                              : "n-set";
  for (int k = 1; k < N; ++k) {
    std::int64_t sum = 0;
    for (const auto& s : seqs) sum += seq_autocorr(s, k, kind);
    if (sum != 0) v.witnesses.push_back(static_cast<std::uint32_t>(k));
  }
  v.holds = v.witnesses.empty();
  return v;
}

// every 2-subset individually complementary
inline ComplementarityVerdict is_pairwise_complementary_set(
    const std::vector<BipolarSequence>& seqs, SeqCorrelation kind) {
  if (seqs.size() < 2) throw std::invalid_argument("sequences: need at least two");
  ComplementarityVerdict v;
  v.kind = "pairwise";
  for (std::size_t i = 0; i < seqs.size(); ++i)
    for (std::size_t j = i + 1; j < seqs.size(); ++j) {
      auto sub = is_complementary_set({seqs[i], seqs[j]}, kind);
      for (auto w : sub.witnesses) v.witnesses.push_back(w);
    }
  v.holds = v.witnesses.empty();
  return v;
}

// Cross_{a1,a2}(k) + Cross_{b1,b2}(k) = 0 for k != 0
inline ComplementarityVerdict is_crosscomplementary(const BipolarSequence& a1,
                                                    const BipolarSequence& a2,
                                                    const BipolarSequence& b1,
                                                    const BipolarSequence& b2,
                                                    SeqCorrelation kind) {
  const int N = a1.size();
  if (a2.size() != N || b1.size() != N || b2.size() != N)
    throw std::invalid_argument("sequences: length mismatch");
  ComplementarityVerdict v;
  v.kind = kind == SeqCorrelation::aperiodic   ? "a-cross"
           : kind == SeqCorrelation::periodic ? "p-cross"
                                              : "n-cross";
  for (int k = 1; k < N; ++k)
    if (seq_crosscorr(a1, a2, k, kind) + seq_crosscorr(b1, b2, k, kind) != 0)
      v.witnesses.push_back(static_cast<std::uint32_t>(k));
  v.holds = v.witnesses.empty();
  return v;
}

// sum_i C^p_{L,A,F_i}(u) = 0 for all u != 0
inline ComplementarityVerdict is_la_complementary_set(
    const std::vector<GeneralizedBooleanFunction>& fs, const RootSpec& spec,
    Orientation o = Orientation::definition) {
  if (fs.empty()) throw std::invalid_argument("functions: set must be nonempty");
  for (const auto& f : fs)
    if (f.n != fs[0].n || f.k != fs[0].k)
      throw std::invalid_argument("functions: dimension or width mismatch");
  ComplementarityVerdict v;
  v.kind = "la-set";
  const std::uint32_t size = table_size(fs[0].n);
  for (Point u = 1; u < size; ++u) {
    CycElement sum;
    for (const auto& f : fs) sum += root_autocorrelation(f, spec, u, o);
    if (!sum.is_zero()) v.witnesses.push_back(u);
  }
  v.holds = v.witnesses.empty();
  return v;
}

// sum_i C^p_{L,A,f_i,g_i}(u) = 0 for all u != 0
inline ComplementarityVerdict is_la_crosscomplementary(
    const std::vector<GeneralizedBooleanFunction>& s1,
    const std::vector<GeneralizedBooleanFunction>& s2, const RootSpec& spec,
    Orientation o = Orientation::definition) {
  if (s1.size() != s2.size() || s1.empty())
    throw std::invalid_argument("tuples: sizes must match and be nonzero");
  for (std::size_t i = 0; i < s1.size(); ++i)
    if (s1[i].n != s2[i].n || s1[i].k != s2[i].k || s1[i].n != s1[0].n)
      throw std::invalid_argument("tuples: dimension or width mismatch");
  ComplementarityVerdict v;
  v.kind = "la-cross";
  const std::uint32_t size = table_size(s1[0].n);
  for (Point u = 1; u < size; ++u) {
    CycElement sum;
    for (std::size_t i = 0; i < s1.size(); ++i)
      sum += root_crosscorrelation(s1[i], s2[i], spec, u, o);
    if (!sum.is_zero()) v.witnesses.push_back(u);
  }
  v.holds = v.witnesses.empty();
  return v;
}

// The component-complementarity equivalence.  The set-level correlation sum
// decomposes exactly over the binary components:
//
//   4^{k-1} sum_f C^p_{L,A,f}(v)
//     = sum_{a,c in F_2^{k-1}} gamma_a conj(gamma_c) sum_f C^p_{L,A,f_a,f_c}(v),
//
// with gamma_c = prod_i (1 + (-1)^{c_i} zeta_{2^{k-i}}), the same weights that
// synthesize U from the component transforms.  Hence S is LA-complementary
// iff the weighted component cross-sum vanishes at every v != 0.  Requiring
// each (a, c) cross-sum to vanish individually is strictly stronger and
// fails already for pairs whose profiles cancel with opposite signs.
struct ComponentComplementarityReport {
  bool set_side = false;         // is_la_complementary_set(S)
  bool components_side = false;  // weighted component combination vanishes off 0
  bool identity_holds = false;   // the decomposition identity at every shift
  bool agree = false;
  std::vector<std::uint32_t> failing_shifts;
};

namespace detail {

// gamma_c = prod_{i=0}^{k-2} (1 + (-1)^{c_i} zeta_{2^{k-i}}), an element of
// Z[zeta_{2^k}]
inline CycElement gamma_weight(std::uint32_t c, int k) {
  CycElement g(1);
  for (int i = 0; i <= k - 2; ++i) {
    CycElement factor = CycElement(1).lift(k) +
                        ((c >> i) & 1 ? -zeta_pow(k, std::int64_t{1} << i)
                                      : zeta_pow(k, std::int64_t{1} << i));
    g = g * factor;
  }
  return g;
}

}  // namespace detail

inline ComponentComplementarityReport verify_component_complementarity(
    const std::vector<GeneralizedBooleanFunction>& fs, const RootSpec& spec,
    Orientation o = Orientation::definition) {
  if (fs.empty()) throw std::invalid_argument("functions: set must be nonempty");
  const int k = fs[0].k;
  const int n = fs[0].n;
  ComponentComplementarityReport r;
  r.set_side = is_la_complementary_set(fs, spec, o).holds;

  const std::uint32_t half = 1u << (k - 1);
  std::vector<std::vector<GeneralizedBooleanFunction>> comps(half);
  for (std::uint32_t c = 0; c < half; ++c)
    for (const auto& f : fs)
      comps[c].push_back(GeneralizedBooleanFunction::from_boolean(component_function(f, c)));

  std::vector<CycElement> weights(half * half);
  for (std::uint32_t a = 0; a < half; ++a)
    for (std::uint32_t c = 0; c < half; ++c)
      weights[a * half + c] = detail::gamma_weight(a, k) * detail::gamma_weight(c, k).conj();

  r.components_side = true;
  r.identity_holds = true;
  const std::uint32_t size = table_size(n);
  for (Point v = 0; v < size; ++v) {
    CycElement weighted;
    for (std::uint32_t a = 0; a < half; ++a)
      for (std::uint32_t c = 0; c < half; ++c) {
        CycElement cross;
        for (std::size_t i = 0; i < fs.size(); ++i)
          cross += root_crosscorrelation(comps[a][i], comps[c][i], spec, v, o);
        weighted += weights[a * half + c] * cross;
      }
    CycElement set_sum;
    for (const auto& f : fs) set_sum += root_autocorrelation(f, spec, v, o);
    // identity: 4^{k-1} * set sum == weighted component sum
    if (set_sum * CycElement(std::int64_t{1} << (2 * k - 2)) != weighted)
      r.identity_holds = false;
    if (v != 0 && !weighted.is_zero()) {
      r.components_side = false;
      r.failing_shifts.push_back(v);
    }
  }
  r.agree = r.set_side == r.components_side;
  return r;
}

// complementary <=> P-complementary and N-complementary, reported in full
struct PNEquivalenceReport {
  ComplementarityVerdict aperiodic, periodic, negaperiodic;
  bool equivalence_holds = false;
};

inline PNEquivalenceReport complementary_iff_P_and_N(const BipolarSequence& a,
                                                     const BipolarSequence& b) {
  PNEquivalenceReport r;
  r.aperiodic = is_complementary_set({a, b}, SeqCorrelation::aperiodic);
  r.periodic = is_complementary_set({a, b}, SeqCorrelation::periodic);
  r.negaperiodic = is_complementary_set({a, b}, SeqCorrelation::negaperiodic);
  r.equivalence_holds = r.aperiodic.holds == (r.periodic.holds && r.negaperiodic.holds);
  return r;
}

}  // namespace rooth
