#pragma once

// The theorem-check battery behind `verify-paper` and the acceptance suite.
// Each check is exact (cyclotomic arithmetic, zero tolerance) unless noted
// and returns a named pass/fail result with a short diagnostic.

#include <chrono>
#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rooth/anf.hpp"
#include "rooth/complementarity.hpp"
#include "rooth/correlations.hpp"
#include "rooth/gbf.hpp"
#include "rooth/search.hpp"
#include "rooth/sequences.hpp"
#include "rooth/spectrum.hpp"
#include "rooth/transforms.hpp"

namespace rooth::verify {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

// ---------------------------------------------------------------------------
// fixtures: the worked 4-variable example family

// root-bent example: a_0 + 2 a_1 over Z_4 with the two-block spec below
inline const char* kRootBentA0 = "x1*x2 + x2*x3 + x2*x4 + x1*x4 + x3*x4";
inline const char* kRootBentA1 = "x1*x2 + x1*x3 + x3*x4";

inline RootSpec example_spec() { return RootSpec(4, {{{0, 2}, 4}, {{1, 3}, 8}}); }
inline RootSpec example_spec_swapped() { return RootSpec(4, {{{0, 2}, 8}, {{1, 3}, 4}}); }

inline GeneralizedBooleanFunction example_root_bent() {
  return compose_components({boolean_from_anf_string(kRootBentA0, 4),
                             boolean_from_anf_string(kRootBentA1, 4)});
}

// the two base functions and their quadratic/cubic companion families whose
// root autocorrelation profiles are (16, -+8i at u=(0,1,0,1), 0 elsewhere)
inline const char* kBaseF = "x1 + x2 + x3 + x4";
inline const char* kBaseG = "x1*x2 + x3 + x4 + x1*x4";

inline const std::vector<std::string>& family_F() {
  static const std::vector<std::string> t = {
      "x1*x2 + x2*x3 + x1*x4 + x3*x4 + x4",
      "x1*x2 + x3 + x1*x4 + x4",
      "x1*x2 + x2*x3 + x3 + x1*x4 + x3*x4 + x4",
      "x1 + x2*x3 + x3*x4 + x4",
      "x1*x2 + x1*x4 + x1 + x2*x3 + x3*x4 + x4",
      "x1*x2 + x1*x4 + x1 + x3 + x4",
      "x1*x2 + x1*x4 + x1 + x2*x3 + x3 + x3*x4 + x4",
      "x1 + x2 + x2*x3 + x3*x4",
      "x1*x2 + x1*x4 + x1 + x2 + x2*x3 + x3*x4",
      "x1 + x2 + x2*x3 + x3 + x3*x4",
      "x1*x2 + x1*x4 + x1 + x2 + x3",
      "x1*x2 + x1*x4 + x1 + x2 + x2*x3 + x3 + x3*x4",
  };
  return t;
}

inline const std::vector<std::string>& family_G() {
  static const std::vector<std::string> t = {
      "x1*x2 + x1*x2*x3 + x2*x3 + x1*x3 + x1*x4 + x1*x3*x4",
      "x1*x2 + x1*x2*x3 + x2*x4 + x1*x3 + x1*x4 + x1*x3*x4 + x3*x4 + x4",
      "x1*x2 + x1*x2*x3 + x2*x3 + x1*x3 + x3 + x1*x4 + x1*x3*x4",
      "x1*x2 + x1*x2*x3 + x2*x4 + x1*x3 + x3 + x1*x4 + x1*x3*x4 + x3*x4 + x4",
      "x1*x2 + x1*x2*x3 + x1*x3 + x1*x3*x4 + x1*x4 + x1 + x2*x3",
      "x1*x2 + x1*x2*x3 + x1*x3 + x1*x3*x4 + x1*x4 + x1 + x2*x4 + x3*x4 + x4",
      "x1*x2 + x1*x2*x3 + x1*x3 + x1*x3*x4 + x1*x4 + x1 + x2*x3 + x3",
      "x1*x2 + x1*x2*x3 + x1*x3 + x1*x3*x4 + x1*x4 + x1 + x3 + x2*x4 + x3*x4 + x4",
      "x1*x2*x3 + x1*x3 + x1*x3*x4 + x1 + x2 + x2*x4 + x3*x4",
      "x1*x2 + x1*x2*x3 + x1*x3 + x1*x3*x4 + x1*x4 + x1 + x2 + x2*x4 + x3*x4",
      "x1*x2*x3 + x1*x3 + x1*x3*x4 + x1 + x2 + x2*x3 + x4",
      "x1*x2 + x1*x2*x3 + x1*x3 + x1*x3*x4 + x1*x4 + x1 + x2 + x2*x3 + x4",
      "x1*x2*x3 + x1*x3 + x1*x3*x4 + x1 + x2 + x3 + x2*x4 + x3*x4",
      "x1*x2 + x1*x2*x3 + x1*x3 + x1*x3*x4 + x1*x4 + x1 + x2 + x3 + x2*x4 + x3*x4",
      "x1*x2*x3 + x1*x3 + x1*x3*x4 + x1 + x2 + x2*x3 + x3 + x4",
      "x1*x2 + x1*x2*x3 + x1*x3 + x1*x3*x4 + x1*x4 + x1 + x2 + x2*x3 + x3 + x4",
  };
  return t;
}

// base + 2 * companion over Z_4
inline GeneralizedBooleanFunction family_member(const std::string& base_anf,
                                                const std::string& companion_anf) {
  return compose_components({boolean_from_anf_string(base_anf, 4),
                             boolean_from_anf_string(companion_anf, 4)});
}

// the (16, imag8 * 8i, 0, ...) profile target at u = (0,1,0,1)
inline ProfileTarget family_target(int imag8) {
  ProfileTarget t;
  t.n = 4;
  t.ring_exponent = 3;
  t.required[0] = CycElement(16);
  t.required[BitVector{0, 1, 0, 1}.to_point()] =
      CycElement(std::int64_t{imag8} * 8).lift(3).times_zeta_pow(2);  // 8i / -8i
  return t;
}

// expected profile equality against a target, exact, definition orientation
inline bool profile_matches(const GeneralizedBooleanFunction& F, const RootSpec& spec,
                            const ProfileTarget& target) {
  const std::uint32_t size = table_size(F.n);
  for (Point u = 0; u < size; ++u)
    if (root_autocorrelation(F, spec, u) != target.expected(u).lift(
            std::max(spec.ring_exponent(), F.k)))
      return false;
  return true;
}

// ---------------------------------------------------------------------------
// random instance helpers (fixed seeds; every run is identical)

namespace detail {

inline GeneralizedBooleanFunction random_function(std::mt19937& rng, int n, int k) {
  std::uniform_int_distribution<int> dist(0, (1 << k) - 1);
  std::vector<std::uint8_t> v(table_size(n));
  for (auto& x : v) x = static_cast<std::uint8_t>(dist(rng));
  return GeneralizedBooleanFunction(n, k, std::move(v));
}

// random partition of {0..n-1} with 2-power orders 2^min_exp .. 2^max_exp
inline RootSpec random_rootspec(std::mt19937& rng, int n, int max_exp, int min_exp = 0) {
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  std::shuffle(idx.begin(), idx.end(), rng);
  std::uniform_int_distribution<int> nblocks_dist(1, std::min(3, n));
  const int nblocks = nblocks_dist(rng);
  std::vector<std::vector<int>> parts(nblocks);
  for (int i = 0; i < n; ++i) parts[i % nblocks].push_back(idx[i]);
  std::uniform_int_distribution<int> exp_dist(std::min(min_exp, max_exp), max_exp);
  RootSpec spec;
  spec.n = n;
  for (auto& p : parts) {
    RootBlock b;
    b.indices = std::move(p);
    b.order = 1 << exp_dist(rng);
    spec.blocks.push_back(std::move(b));
  }
  spec.finalize();
  return spec;
}

inline BooleanFunction boolean_from_code(std::uint32_t code, int n) {
  std::vector<std::uint8_t> t(table_size(n));
  for (std::size_t x = 0; x < t.size(); ++x) t[x] = (code >> x) & 1;
  return BooleanFunction(n, std::move(t));
}

// f + s_2 over F_2
inline BooleanFunction add_s2(const BooleanFunction& f) {
  std::vector<std::uint8_t> t(f.table.size());
  for (Point x = 0; x < t.size(); ++x)
    t[x] = static_cast<std::uint8_t>(f.table[x] ^ elementary_symmetric(2, x));
  return BooleanFunction(f.n, std::move(t));
}

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

inline CheckResult finish(const std::string& name, bool passed, const std::string& detail,
                          const Timer& timer) {
  return CheckResult{name, passed, detail, timer.elapsed()};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// the checks

// |U(u)|^2 = 16 at all 16 points for the worked root-bent function; the
// swapped block/root pairing must NOT be flat
inline CheckResult check_example_root_bent() {
  detail::Timer timer;
  const auto F = example_root_bent();
  const Spectrum S = root_hadamard(F, example_spec());
  const CycElement flat(16);
  bool ok = true;
  for (const auto& e : S.entries)
    if (e.abs_sq() != flat) ok = false;
  const bool swapped_flat = is_flat(root_hadamard(F, example_spec_swapped()));
  std::string detail = ok ? "all 16 entries have |U|^2 = 16 (stated pairing)"
                          : "spectrum not flat under the stated pairing";
  if (swapped_flat) {
    ok = false;
    detail += "; swapped pairing unexpectedly flat";
  }
  return detail::finish("example-rootbent", ok, detail, timer);
}

// the +-8i autocorrelation families and their pairwise cancellation
inline CheckResult check_complementary_family() {
  detail::Timer timer;
  const RootSpec spec = example_spec();
  const auto targetF = family_target(-1);
  const auto targetG = family_target(+1);
  int bad = 0;
  std::vector<GeneralizedBooleanFunction> fs, gs;
  for (const auto& s : family_F()) {
    fs.push_back(family_member(kBaseF, s));
    if (!profile_matches(fs.back(), spec, targetF)) ++bad;
  }
  for (const auto& s : family_G()) {
    gs.push_back(family_member(kBaseG, s));
    if (!profile_matches(gs.back(), spec, targetG)) ++bad;
  }
  int bad_pairs = 0;
  for (const auto& f : fs)
    for (const auto& g : gs)
      if (!is_la_complementary_set({f, g}, spec).holds) ++bad_pairs;
  std::ostringstream os;
  os << fs.size() << "+" << gs.size() << " profiles exact, " << fs.size() * gs.size()
     << " cross pairs complementary";
  if (bad || bad_pairs) os << " (" << bad << " profile / " << bad_pairs << " pair failures)";
  return detail::finish("complementary-family", bad == 0 && bad_pairs == 0, os.str(), timer);
}

// spectral duality: C^p (spectral orientation) == profile reconstructed from
// the two spectra, and Parseval sum |U|^2 = 2^{2n}, 200 random instances
inline CheckResult check_root_duality() {
  detail::Timer timer;
  std::mt19937 rng(0xC0FFEE);
  std::uniform_int_distribution<int> n_dist(2, 5), k_dist(1, 3);
  int failures = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = n_dist(rng), k = k_dist(rng);
    const auto F = detail::random_function(rng, n, k);
    const auto G = detail::random_function(rng, n, k);
    const auto spec = detail::random_rootspec(rng, n, 3);
    const Spectrum Sf = root_hadamard(F, spec), Sg = root_hadamard(G, spec);
    const auto prof = correlation_from_spectrum(Sf, Sg, CorrKind::root);
    const std::uint32_t size = table_size(n);
    for (Point z = 0; z < size; ++z)
      if (prof.values[z] !=
          root_crosscorrelation(F, G, spec, z, Orientation::spectral).lift(prof.ring_exponent)) {
        ++failures;
        break;
      }
    CycElement parseval;
    for (const auto& e : Sf.entries) parseval += e.abs_sq();
    if (parseval != CycElement(std::int64_t{1} << (2 * n))) ++failures;
  }
  return detail::finish("root-duality", failures == 0,
                        failures ? std::to_string(failures) + " of 200 instances failed"
                                 : "200 random (F,G,spec): duality and Parseval exact",
                        timer);
}

// transform -> invert round trip, 100 random functions
inline CheckResult check_inversion_roundtrip() {
  detail::Timer timer;
  std::mt19937 rng(0xBEEF);
  std::uniform_int_distribution<int> n_dist(1, 5), k_dist(1, 3);
  int failures = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = n_dist(rng), k = k_dist(rng);
    const auto F = detail::random_function(rng, n, k);
    const auto spec = detail::random_rootspec(rng, n, 3);
    if (invert_root_hadamard(root_hadamard(F, spec), spec) != F) ++failures;
  }
  return detail::finish("inversion-roundtrip", failures == 0,
                        failures ? std::to_string(failures) + " of 100 round trips failed"
                                 : "100 random round trips exact",
                        timer);
}

// component synthesis equals the direct transform at every u
inline CheckResult check_component_synthesis() {
  detail::Timer timer;
  std::mt19937 rng(0xFACADE);
  std::uniform_int_distribution<int> n_dist(1, 4), k_dist(1, 3);
  int failures = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = n_dist(rng), k = k_dist(rng);
    const auto F = detail::random_function(rng, n, k);
    const auto spec = detail::random_rootspec(rng, n, 3);
    const Spectrum S = root_hadamard(F, spec);
    const std::uint32_t size = table_size(n);
    for (Point u = 0; u < size; ++u)
      if (component_synthesis(F, spec, u) != S.entries[u]) {
        ++failures;
        break;
      }
  }
  return detail::finish("component-synthesis", failures == 0,
                        failures ? std::to_string(failures) + " of 100 instances failed"
                                 : "synthesis == direct transform on 100 random instances",
                        timer);
}

// (i) nega == generalized Walsh of the lifted function
// (ii) shifted functions trade the lambda weight for trivial roots
inline CheckResult check_transform_relationships() {
  detail::Timer timer;
  std::mt19937 rng(0x5EED);
  std::uniform_int_distribution<int> n_dist(1, 5), k_dist(1, 3);
  int failures = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = n_dist(rng), k = k_dist(rng);
    const auto F = detail::random_function(rng, n, k);

    // part (i)
    {
      const Spectrum lhs = nega_hadamard(F);
      const Spectrum rhs = generalized_walsh(nega_to_walsh_lift(F));
      const int M = std::max(lhs.ring_exponent, rhs.ring_exponent);
      for (std::size_t u = 0; u < lhs.entries.size(); ++u)
        if (lhs.entries[u].lift(M) != rhs.entries[u].lift(M)) {
          ++failures;
          break;
        }
    }

    // part (ii): orders in {2, 4, 8} restricted by m_s <= k
    {
      const auto spec = detail::random_rootspec(rng, n, k, 1);
      const auto hK = root_shift_function(F, spec, all_blocks(spec));
      const Spectrum lhs = root_hadamard(hK, spec);
      const Spectrum rhs = generalized_walsh(F);
      const int M = std::max(lhs.ring_exponent, rhs.ring_exponent);
      for (std::size_t u = 0; u < lhs.entries.size(); ++u)
        if (lhs.entries[u].lift(M) != rhs.entries[u].lift(M)) {
          ++failures;
          break;
        }
      // random proper subset J
      std::vector<std::size_t> J;
      for (std::size_t s = 0; s < spec.blocks.size(); ++s)
        if (rng() & 1) J.push_back(s);
      const auto hJ = root_shift_function(F, spec, J);
      const Spectrum lhsJ = root_hadamard(hJ, spec);
      const Spectrum rhsJ = root_hadamard(F, spec.with_trivial_roots(J));
      const int MJ = std::max(lhsJ.ring_exponent, rhsJ.ring_exponent);
      for (std::size_t u = 0; u < lhsJ.entries.size(); ++u)
        if (lhsJ.entries[u].lift(MJ) != rhsJ.entries[u].lift(MJ)) {
          ++failures;
          break;
        }
    }
  }
  return detail::finish("transform-relationships", failures == 0,
                        failures ? std::to_string(failures) + " of 100 instances failed"
                                 : "parts (i) and (ii) entrywise exact on 100 random instances",
                        timer);
}

// Exhaustive B_4: f negabent <=> f + s_2 bent, and f negaplateaued <=>
// f + s_2 plateaued.  The parameters are tied by s' = s + (s mod 2): an
// odd-s nega spectrum cannot be matched by an integer Walsh spectrum.
inline CheckResult check_negabent_shift() {
  detail::Timer timer;
  int bent_mismatches = 0, plateau_mismatches = 0, negabent_count = 0;
  for (std::uint32_t code = 0; code < (1u << 16); ++code) {
    const auto f = detail::boolean_from_code(code, 4);
    const auto nega = nega_hadamard(GeneralizedBooleanFunction::from_boolean(f));
    const auto walsh = walsh_hadamard(detail::add_s2(f));
    const bool negabent = is_flat(nega);
    const bool bent = is_flat(walsh);
    if (negabent != bent) ++bent_mismatches;
    if (negabent) ++negabent_count;
    const auto cn = classify_spectrum(nega);
    const auto cw = classify_spectrum(walsh);
    const bool n_plat = cn.kind == SpectralClass::Kind::bent ||
                        cn.kind == SpectralClass::Kind::plateaued;
    const bool w_plat = cw.kind == SpectralClass::Kind::bent ||
                        cw.kind == SpectralClass::Kind::plateaued;
    const int n_s = cn.kind == SpectralClass::Kind::bent ? 0 : cn.s;
    const int w_s = cw.kind == SpectralClass::Kind::bent ? 0 : cw.s;
    if (n_plat != w_plat || (n_plat && w_s != n_s + (n_s & 1))) ++plateau_mismatches;
  }
  std::ostringstream os;
  os << "65536 functions: " << negabent_count << " negabent, ";
  if (bent_mismatches + plateau_mismatches == 0)
    os << "bent and plateaued equivalences exact";
  else
    os << bent_mismatches << " bent / " << plateau_mismatches << " plateaued mismatches";
  const bool ok = bent_mismatches + plateau_mismatches == 0 && negabent_count == 896;
  return detail::finish("negabent-shift", ok, os.str(), timer);
}

// butterfly == naive quadratic sum
inline CheckResult check_butterfly_oracle() {
  detail::Timer timer;
  std::mt19937 rng(0xAB1E);
  std::uniform_int_distribution<int> n_dist(1, 6), k_dist(1, 3);
  int failures = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = n_dist(rng), k = k_dist(rng);
    const auto F = detail::random_function(rng, n, k);
    const auto spec = detail::random_rootspec(rng, n, 3);
    const Spectrum fast = root_hadamard(F, spec);
    const Spectrum naive = root_hadamard_naive(F, spec);
    for (std::size_t u = 0; u < fast.entries.size(); ++u)
      if (fast.entries[u] != naive.entries[u]) {
        ++failures;
        break;
      }
  }
  return detail::finish("butterfly-oracle", failures == 0,
                        failures ? std::to_string(failures) + " of 100 instances failed"
                                 : "fast == naive on 100 random instances",
                        timer);
}

// the sequence layer: Golay pair at N=4, Laurent certificates, wrap
// identities, shift-matrix forms, and the P-and-N equivalence
inline CheckResult check_sequence_identities() {
  detail::Timer timer;
  std::ostringstream os;
  bool ok = true;

  // (a) exhaustive N=4 search contains the classic pair
  {
    const auto pairs = search_golay_pairs(4, SeqCorrelation::aperiodic);
    const BipolarSequence a{1, 1, 1, -1}, b{1, 1, -1, 1};
    bool found = false;
    for (const auto& [p, q] : pairs)
      if ((p == a && q == b) || (p == b && q == a)) found = true;
    if (!found) {
      ok = false;
      os << "classic length-4 pair missing; ";
    }
    if (!search_golay_pairs(3, SeqCorrelation::aperiodic).empty()) {
      ok = false;
      os << "unexpected length-3 pairs; ";
    }
  }

  // (b) Laurent residue == correlation verdict, all pairs, N <= 6
  for (int N = 1; N <= 6 && ok; ++N)
    for (std::uint32_t ca = 0; ca < (1u << N) && ok; ++ca)
      for (std::uint32_t cb = 0; cb < (1u << N) && ok; ++cb) {
        const auto a = BipolarSequence::from_code(ca, N);
        const auto b = BipolarSequence::from_code(cb, N);
        for (auto kind : {SeqCorrelation::aperiodic, SeqCorrelation::periodic,
                          SeqCorrelation::negaperiodic}) {
          const bool frm_poly = golay_poly_residue(a, b, kind).is_constant(2 * N);
          const bool frm_sums = is_complementary_set({a, b}, kind).holds;
          if (frm_poly != frm_sums) {
            ok = false;
            os << "Laurent/sum mismatch at N=" << N << "; ";
            break;
          }
        }
      }

  // (c) wrap identities and shift-matrix forms, random N <= 16
  {
    std::mt19937 rng(0x90DA);
    for (int trial = 0; trial < 200 && ok; ++trial) {
      const int N = 2 + static_cast<int>(rng() % 15);
      const auto a = BipolarSequence::from_code(rng() & ((1u << N) - 1), N);
      for (int k = 1; k < N; ++k) {
        const auto A_k = aperiodic_autocorr(a, k);
        const auto A_rev = aperiodic_autocorr(a, N - k);
        if (periodic_autocorr(a, k) != A_k + A_rev ||
            negaperiodic_autocorr(a, k) != A_k - A_rev ||
            shift_matrix_autocorr(a, k, SeqCorrelation::periodic) != periodic_autocorr(a, k) ||
            shift_matrix_autocorr(a, k, SeqCorrelation::negaperiodic) !=
                negaperiodic_autocorr(a, k)) {
          ok = false;
          os << "wrap/shift-matrix identity failed at N=" << N << ", k=" << k << "; ";
          break;
        }
      }
    }
  }

  // (d) complementary <=> P- and N-complementary, exhaustive N = 4
  for (std::uint32_t ca = 0; ca < 16 && ok; ++ca)
    for (std::uint32_t cb = 0; cb < 16 && ok; ++cb) {
      const auto r = complementary_iff_P_and_N(BipolarSequence::from_code(ca, 4),
                                               BipolarSequence::from_code(cb, 4));
      if (!r.equivalence_holds) {
        ok = false;
        os << "P-and-N equivalence violated; ";
      }
    }

  if (ok) os << "search, certificates, wrap identities and P/N equivalence all exact";
  return detail::finish("sequence-identities", ok, os.str(), timer);
}

// wt mod 4 = s_1 + 2 s_2 and the mod-2^k digit recursion, exhaustive
inline CheckResult check_weight_digits() {
  detail::Timer timer;
  int failures = 0;
  for (int n = 1; n <= 12; ++n) {
    const std::uint32_t size = table_size(n);
    for (Point x = 0; x < size; ++x) {
      const int w = weight(x);
      if (w % 4 != elementary_symmetric(1, x) + 2 * elementary_symmetric(2, x)) ++failures;
      for (int k = 1; k <= 4; ++k) {
        const int lhs = w % (1 << k);
        const int rhs = w % (1 << (k - 1)) + (1 << (k - 1)) * elementary_symmetric(1 << (k - 1), x);
        if (lhs != rhs) ++failures;
      }
    }
  }
  return detail::finish("weight-digits", failures == 0,
                        failures ? std::to_string(failures) + " points failed"
                                 : "exhaustive n <= 12, k <= 4 exact",
                        timer);
}

// set-level complementarity <=> gamma-weighted component crosscomplementarity,
// backed by the exact decomposition identity at every shift
inline CheckResult check_component_complementarity() {
  detail::Timer timer;
  std::mt19937 rng(0xD1CE);
  std::uniform_int_distribution<int> n_dist(1, 4), size_dist(1, 3);
  int disagreements = 0, identity_failures = 0, holds_seen = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const int n = n_dist(rng);
    const auto spec = detail::random_rootspec(rng, n, 2);
    std::vector<GeneralizedBooleanFunction> fs;
    const int count = size_dist(rng);
    for (int i = 0; i < count; ++i) fs.push_back(detail::random_function(rng, n, 2));
    const auto r = verify_component_complementarity(fs, spec);
    if (!r.agree) ++disagreements;
    if (!r.identity_holds) ++identity_failures;
    if (r.set_side) ++holds_seen;
  }
  // the worked pair: both sides must hold
  const auto f = family_member(kBaseF, family_F()[0]);
  const auto g = family_member(kBaseG, family_G()[0]);
  const auto r = verify_component_complementarity({f, g}, example_spec());
  const bool example_ok = r.agree && r.set_side && r.components_side && r.identity_holds;
  std::ostringstream os;
  if (disagreements == 0 && identity_failures == 0 && example_ok)
    os << "50 random sets agree (" << holds_seen
       << " complementary), decomposition identity exact; worked pair holds both ways";
  else
    os << disagreements << " disagreements, " << identity_failures
       << " identity failures; worked pair " << (example_ok ? "ok" : "FAILED");
  return detail::finish("component-complementarity",
                        disagreements == 0 && identity_failures == 0 && example_ok, os.str(),
                        timer);
}

// full 2^16 profile searches recover supersets of both families;
// single-threaded and parallel runs agree
inline CheckResult check_profile_search(int jobs = 0) {
  detail::Timer timer;
  const RootSpec spec = example_spec();
  std::ostringstream os;
  bool ok = true;
  std::size_t countF = 0, countG = 0;
  for (int which = 0; which < 2; ++which) {
    SearchSpace space;
    space.n = 4;
    space.k = 2;
    space.base = compose_components(
        {boolean_from_anf_string(which == 0 ? kBaseF : kBaseG, 4), BooleanFunction::zero(4)});
    space.free_component = 1;
    const auto target = family_target(which == 0 ? -1 : +1);
    const auto hits = search_profile_match(space, spec, target, jobs);
    const auto hits_serial = search_profile_match(space, spec, target, 1);
    if (hits.size() != hits_serial.size() ||
        !std::equal(hits.begin(), hits.end(), hits_serial.begin()))
      ok = false, os << "parallel/serial disagreement; ";
    const auto& family = which == 0 ? family_F() : family_G();
    const char* base = which == 0 ? kBaseF : kBaseG;
    for (const auto& s : family) {
      const auto member = family_member(base, s);
      bool present = false;
      for (const auto& h : hits)
        if (h == member) present = true;
      if (!present) ok = false, os << "family member missing from hits; ";
    }
    (which == 0 ? countF : countG) = hits.size();
  }
  if (ok)
    os << "full 2^16 searches: " << countF << " and " << countG
       << " hits, containing all 12 and 16 family members; deterministic across thread counts";
  return detail::finish("profile-search", ok, os.str(), timer);
}

// ---------------------------------------------------------------------------
// registry

inline const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {
      "example-rootbent",     "complementary-family",      "root-duality",
      "inversion-roundtrip",  "component-synthesis",       "transform-relationships",
      "negabent-shift",       "butterfly-oracle",          "sequence-identities",
      "weight-digits",        "component-complementarity", "profile-search",
  };
  return names;
}

inline CheckResult run_check(const std::string& name, int jobs = 0) {
  if (name == "example-rootbent") return check_example_root_bent();
  if (name == "complementary-family") return check_complementary_family();
  if (name == "root-duality") return check_root_duality();
  if (name == "inversion-roundtrip") return check_inversion_roundtrip();
  if (name == "component-synthesis") return check_component_synthesis();
  if (name == "transform-relationships") return check_transform_relationships();
  if (name == "negabent-shift") return check_negabent_shift();
  if (name == "butterfly-oracle") return check_butterfly_oracle();
  if (name == "sequence-identities") return check_sequence_identities();
  if (name == "weight-digits") return check_weight_digits();
  if (name == "component-complementarity") return check_component_complementarity();
  if (name == "profile-search") return check_profile_search(jobs);
  throw std::invalid_argument("unknown check: " + name);
}

inline std::vector<CheckResult> run_all_checks(int jobs = 0) {
  std::vector<CheckResult> out;
  for (const auto& name : check_names()) out.push_back(run_check(name, jobs));
  return out;
}

}  // namespace rooth::verify
