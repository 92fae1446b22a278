#include <gtest/gtest.h>

#include <random>

#include "rooth/anf.hpp"
#include "rooth/correlations.hpp"
#include "rooth/verification.hpp"

namespace rooth {
namespace {

GeneralizedBooleanFunction random_gbf(std::mt19937& rng, int n, int k) {
  std::uniform_int_distribution<int> dist(0, (1 << k) - 1);
  std::vector<std::uint8_t> v(table_size(n));
  for (auto& x : v) x = static_cast<std::uint8_t>(dist(rng));
  return GeneralizedBooleanFunction(n, k, std::move(v));
}

TEST(Cross, TrivialValues) {
  std::mt19937 rng(41);
  const auto F = random_gbf(rng, 4, 2);
  EXPECT_EQ(crosscorrelation(F, F, 0), CycElement(16));
  const auto Z = GeneralizedBooleanFunction::zero(3, 2);
  for (Point z = 0; z < 8; ++z) EXPECT_EQ(crosscorrelation(Z, Z, z), CycElement(8));
  EXPECT_THROW(crosscorrelation(F, Z, 0), std::invalid_argument);
}

// both lines of the Walsh-correlation duality, unnormalized scale
TEST(Cross, SpectralDualityBothDirections) {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const int k = 1 + static_cast<int>(rng() % 3);
    const auto F = random_gbf(rng, n, k);
    const auto G = random_gbf(rng, n, k);
    const auto Sf = generalized_walsh(F), Sg = generalized_walsh(G);
    const std::uint32_t size = table_size(n);

    // direction 1: sum_u C(u) (-1)^{u.x} == H_f(x) conj(H_g(x))
    std::vector<CycElement> C(size);
    for (Point z = 0; z < size; ++z) C[z] = crosscorrelation(F, G, z);
    for (Point x = 0; x < size; ++x) {
      CycElement acc;
      for (Point u = 0; u < size; ++u)
        acc += dot(u, x) ? -C[u] : C[u];
      EXPECT_EQ(acc, Sf.entries[x] * Sg.entries[x].conj());
    }

    // direction 2: profile reconstruction
    const auto prof = correlation_from_spectrum(Sf, Sg, CorrKind::walsh);
    for (Point z = 0; z < size; ++z) EXPECT_EQ(prof.values[z], C[z].lift(prof.ring_exponent));
  }
}

TEST(NegaCross, TrivialValues) {
  std::mt19937 rng(43);
  const auto F = random_gbf(rng, 3, 2);
  const auto G = random_gbf(rng, 3, 2);
  EXPECT_EQ(nega_crosscorrelation(F, G, 0), crosscorrelation(F, G, 0).lift(2));
  const auto Z = GeneralizedBooleanFunction::zero(2, 1);
  EXPECT_TRUE(nega_crosscorrelation(Z, Z, 0b11).is_zero());
}

// the nega duality carries prefactor i^{-wt(z)}
TEST(NegaCross, SpectralDuality) {
  std::mt19937 rng(44);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const int k = 1 + static_cast<int>(rng() % 3);
    const auto F = random_gbf(rng, n, k);
    const auto G = random_gbf(rng, n, k);
    const auto prof =
        correlation_from_spectrum(nega_hadamard(F), nega_hadamard(G), CorrKind::nega);
    for (Point z = 0; z < table_size(n); ++z)
      EXPECT_EQ(prof.values[z], nega_crosscorrelation(F, G, z).lift(prof.ring_exponent));
  }
}

TEST(RootCross, TrivialValues) {
  std::mt19937 rng(45);
  const auto F = random_gbf(rng, 4, 2);
  const auto spec = verify::example_spec();
  for (auto o : {Orientation::definition, Orientation::spectral})
    EXPECT_EQ(root_crosscorrelation(F, F, spec, 0, o), CycElement(16));

  // all orders 1: both orientations equal the plain crosscorrelation
  const auto G = random_gbf(rng, 4, 2);
  for (Point z = 0; z < 16; ++z) {
    const auto plain = crosscorrelation(F, G, z);
    EXPECT_EQ(root_crosscorrelation(F, G, RootSpec::trivial(4), z, Orientation::definition),
              plain);
    EXPECT_EQ(root_crosscorrelation(F, G, RootSpec::trivial(4), z, Orientation::spectral), plain);
  }
}

// single block of order 4, k = 1: the definition orientation IS the
// nega-crosscorrelation
TEST(RootCross, NegaSpecialization) {
  std::mt19937 rng(46);
  const auto F = random_gbf(rng, 4, 1);
  const auto G = random_gbf(rng, 4, 1);
  const auto spec = RootSpec::single_block(4, 4);
  for (Point z = 0; z < 16; ++z)
    EXPECT_EQ(root_crosscorrelation(F, G, spec, z, Orientation::definition).lift(2),
              nega_crosscorrelation(F, G, z).lift(2));
}

TEST(RootCross, WorkedAutocorrelationProfile) {
  // base + 2 * first family member: profile 16 at 0, -8i at (0,1,0,1), 0 else
  const auto F = verify::family_member(verify::kBaseF, verify::family_F()[0]);
  const auto spec = verify::example_spec();
  const auto prof = root_autocorrelation_profile(F, spec);
  const Point u5 = BitVector{0, 1, 0, 1}.to_point();
  const CycElement minus_8i = CycElement(-8).lift(3).times_zeta_pow(2);
  for (Point u = 0; u < 16; ++u) {
    if (u == 0)
      EXPECT_EQ(prof.values[u], CycElement(16));
    else if (u == u5)
      EXPECT_EQ(prof.values[u], minus_8i);
    else
      EXPECT_TRUE(prof.values[u].is_zero()) << "shift " << u;
  }
}

TEST(RootCross, SpectralOrientationMatchesProfileReconstruction) {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const int k = 1 + static_cast<int>(rng() % 3);
    const auto F = random_gbf(rng, n, k);
    const auto G = random_gbf(rng, n, k);
    const auto spec = verify::detail::random_rootspec(rng, n, 3);
    const auto prof = correlation_from_spectrum(root_hadamard(F, spec), root_hadamard(G, spec),
                                                CorrKind::root);
    for (Point z = 0; z < table_size(n); ++z)
      EXPECT_EQ(prof.values[z],
                root_crosscorrelation(F, G, spec, z, Orientation::spectral)
                    .lift(prof.ring_exponent));
  }
}

// C_defn^A(z) = lambda_A(z)^2 * C_spectral^{conj A}(z); the conjugate-spec
// sum is computed here directly as an independent oracle
TEST(RootCross, OrientationBridge) {
  std::mt19937 rng(48);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const int k = 1 + static_cast<int>(rng() % 3);
    const auto F = random_gbf(rng, n, k);
    const auto G = random_gbf(rng, n, k);
    const auto spec = verify::detail::random_rootspec(rng, n, 3);
    const int M = std::max(spec.ring_exponent(), k);
    const std::uint32_t size = table_size(n);
    for (Point z = 0; z < size; ++z) {
      // conjugated-root spectral-orientation sum
      CycElement conj_sum;
      for (Point x = 0; x < size; ++x) {
        const std::int64_t diff = static_cast<std::int64_t>(F.values[x]) - G.values[x ^ z];
        conj_sum += zeta_pow(M, (diff << (M - k)) - spec.mu_exponent(x, z, M));
      }
      const auto lhs = root_crosscorrelation(F, G, spec, z, Orientation::definition);
      const auto rhs = conj_sum.times_zeta_pow(2 * spec.lambda_exponent(z, M));
      EXPECT_EQ(lhs, rhs);
    }
  }
}

// flat spectrum <=> autocorrelation vanishes off zero, in both orientations
TEST(RootCross, FlatnessEquivalence) {
  const auto spec = verify::example_spec();
  const auto F = verify::example_root_bent();
  for (auto o : {Orientation::definition, Orientation::spectral}) {
    const auto prof = root_autocorrelation_profile(F, spec, o);
    EXPECT_EQ(prof.values[0], CycElement(16));
    for (Point u = 1; u < 16; ++u) EXPECT_TRUE(prof.values[u].is_zero());
  }
  // random non-flat functions have a nonzero off-zero shift
  std::mt19937 rng(49);
  for (int trial = 0; trial < 20; ++trial) {
    const auto G = random_gbf(rng, 4, 2);
    if (is_flat(root_hadamard(G, spec))) continue;
    for (auto o : {Orientation::definition, Orientation::spectral}) {
      bool some_nonzero = false;
      for (Point u = 1; u < 16; ++u)
        if (!root_autocorrelation(G, spec, u, o).is_zero()) some_nonzero = true;
      EXPECT_TRUE(some_nonzero);
    }
  }
}

TEST(FunctionCorrelations, SubstitutionBridges) {
  std::mt19937 rng(50);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const int k = 1 + static_cast<int>(rng() % 3);
    const auto F = random_gbf(rng, n, k);
    const auto G = random_gbf(rng, n, k);
    for (Point u = 0; u < table_size(n); ++u) {
      // periodic form equals the shifted-argument crosscorrelation
      EXPECT_EQ(function_periodic_correlation(F, G, u), crosscorrelation(F, G, u));
      // negaperiodic form picks up (-1)^{wt(u)}
      const auto lhs = function_negaperiodic_correlation(F, G, u);
      auto rhs = nega_crosscorrelation(F, G, u);
      if (weight(u) & 1) rhs = -rhs;
      EXPECT_EQ(lhs, rhs);
    }
  }
}

TEST(FunctionCorrelations, SelfAtZeroIsTableSize) {
  std::mt19937 rng(51);
  const auto F = random_gbf(rng, 4, 3);
  EXPECT_EQ(function_periodic_correlation(F, F, 0), CycElement(16));
  EXPECT_EQ(function_negaperiodic_correlation(F, F, 0), CycElement(16).lift(3));
}

// for k = 1 the XOR-shift correlation is a sum over the +-1 table; it only
// coincides with the cyclic-shift sequence correlation where XOR translation
// is an index translation
TEST(FunctionCorrelations, SequenceBridgeAtWidthOne) {
  std::mt19937 rng(52);
  const int n = 3;
  const auto F = random_gbf(rng, n, 1);
  std::vector<int> a(table_size(n));
  for (Point t = 0; t < a.size(); ++t) a[t] = F.values[t] ? -1 : 1;
  for (Point u = 0; u < table_size(n); ++u) {
    std::int64_t xor_sum = 0;
    for (Point t = 0; t < a.size(); ++t) xor_sum += a[t] * a[t ^ u];
    EXPECT_EQ(function_periodic_correlation(F, F, u), CycElement(xor_sum));
  }
  // u = 0 agrees with the cyclic shift; some u differs for a generic table
  BipolarSequence seq(a);
  EXPECT_EQ(function_periodic_correlation(F, F, 0), CycElement(periodic_autocorr(seq, 0)));
}

TEST(Profiles, MismatchedSpectraRejected) {
  std::mt19937 rng(53);
  const auto F = random_gbf(rng, 3, 2);
  const auto Sf = root_hadamard(F, RootSpec::trivial(3));
  const auto Sg = root_hadamard(F, RootSpec::single_block(3, 4));
  EXPECT_THROW(correlation_from_spectrum(Sf, Sg, CorrKind::root), std::invalid_argument);
}

}  // namespace
}  // namespace rooth
