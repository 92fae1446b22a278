#include <gtest/gtest.h>

#include <complex>
#include <random>

#include "rooth/anf.hpp"
#include "rooth/spectrum.hpp"
#include "rooth/transforms.hpp"
#include "rooth/verification.hpp"

namespace rooth {
namespace {

GeneralizedBooleanFunction random_gbf(std::mt19937& rng, int n, int k) {
  std::uniform_int_distribution<int> dist(0, (1 << k) - 1);
  std::vector<std::uint8_t> v(table_size(n));
  for (auto& x : v) x = static_cast<std::uint8_t>(dist(rng));
  return GeneralizedBooleanFunction(n, k, std::move(v));
}

TEST(Walsh, KnownSpectra) {
  EXPECT_EQ(walsh_hadamard_values(BooleanFunction::zero(2)),
            (std::vector<std::int64_t>{4, 0, 0, 0}));
  EXPECT_EQ(walsh_hadamard_values(boolean_from_anf_string("x1*x2", 2)),
            (std::vector<std::int64_t>{2, 2, 2, -2}));
}

TEST(Walsh, ButterflyEqualsNaive) {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    std::vector<std::uint8_t> t(table_size(n));
    for (auto& x : t) x = rng() & 1;
    BooleanFunction f(n, t);
    EXPECT_EQ(walsh_hadamard_values(f), walsh_hadamard_naive(f));
  }
}

TEST(GeneralizedWalsh, CoincidesWithWalshAtWidthOne) {
  std::mt19937 rng(22);
  std::vector<std::uint8_t> t(table_size(4));
  for (auto& x : t) x = rng() & 1;
  const BooleanFunction f(4, t);
  const auto S = generalized_walsh(GeneralizedBooleanFunction::from_boolean(f));
  const auto w = walsh_hadamard_values(f);
  for (std::size_t u = 0; u < w.size(); ++u)
    EXPECT_EQ(S.entries[u], CycElement(w[u]));
}

TEST(GeneralizedWalsh, ConstantOneAtWidthTwo) {
  // F == 1, k = 2, n = 1: entries 2i and 0
  const GeneralizedBooleanFunction F(1, 2, {1, 1});
  const auto S = generalized_walsh(F);
  EXPECT_EQ(S.entries[0], CycElement(2).lift(2).times_zeta_pow(1));  // 2i
  EXPECT_TRUE(S.entries[1].is_zero());
}

TEST(GeneralizedWalsh, ExactMatchesFloatOracle) {
  std::mt19937 rng(23);
  const auto F = random_gbf(rng, 4, 3);
  const auto S = generalized_walsh(F);
  for (Point u = 0; u < 16; ++u) {
    std::complex<double> acc = 0;
    for (Point x = 0; x < 16; ++x) {
      const double arg = 2.0 * std::numbers::pi * F.values[x] / 8.0 +
                         std::numbers::pi * dot(u, x);
      acc += std::complex<double>(std::cos(arg), std::sin(arg));
    }
    EXPECT_NEAR(std::abs(S.entries[u].to_complex() - acc), 0.0, 1e-9);
  }
}

TEST(Nega, TwoPointSpectrum) {
  const auto S = nega_hadamard(GeneralizedBooleanFunction::zero(1, 1));
  const CycElement one_plus_i = CycElement(1).lift(2) + zeta_pow(2, 1);
  EXPECT_EQ(S.entries[0], one_plus_i);
  EXPECT_EQ(S.entries[1], one_plus_i.conj());
}

TEST(Nega, EqualsSingleBlockOrderFourRoot) {
  std::mt19937 rng(24);
  for (int k = 1; k <= 3; ++k) {
    const auto F = random_gbf(rng, 5, k);
    const auto N = nega_hadamard(F);
    const auto R = root_hadamard(F, RootSpec::single_block(5, 4));
    ASSERT_EQ(N.entries.size(), R.entries.size());
    for (std::size_t u = 0; u < N.entries.size(); ++u) EXPECT_EQ(N.entries[u], R.entries[u]);
  }
}

TEST(Root, TrivialSpecIsGeneralizedWalsh) {
  std::mt19937 rng(25);
  const auto F = random_gbf(rng, 4, 2);
  const auto R = root_hadamard(F, RootSpec::trivial(4));
  const auto G = generalized_walsh(F);
  for (std::size_t u = 0; u < R.entries.size(); ++u) EXPECT_EQ(R.entries[u], G.entries[u]);
}

TEST(Root, WorkedExampleIsFlat) {
  const auto F = verify::example_root_bent();
  const auto S = root_hadamard(F, verify::example_spec());
  for (const auto& e : S.entries) EXPECT_EQ(e.abs_sq(), CycElement(16));
  EXPECT_TRUE(is_flat(S));
  EXPECT_FALSE(is_flat(root_hadamard(F, verify::example_spec_swapped())));
}

TEST(Root, ButterflyEqualsNaive) {
  std::mt19937 rng(26);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const int k = 1 + static_cast<int>(rng() % 3);
    const auto F = random_gbf(rng, n, k);
    const auto spec = verify::detail::random_rootspec(rng, n, 3);
    const auto fast = root_hadamard(F, spec);
    const auto naive = root_hadamard_naive(F, spec);
    for (std::size_t u = 0; u < fast.entries.size(); ++u)
      EXPECT_EQ(fast.entries[u], naive.entries[u]);
  }
}

TEST(Root, FloatPathTracksExact) {
  std::mt19937 rng(27);
  const auto F = random_gbf(rng, 4, 2);
  const auto spec = verify::example_spec();
  const auto exact = root_hadamard(F, spec);
  const auto fl = root_hadamard_float(F, spec);
  for (Point u = 0; u < 16; ++u)
    EXPECT_NEAR(std::abs(exact.entries[u].to_complex() - fl.entries_complex[u]), 0.0, 1e-9);
}

TEST(Root, FloatPathHandlesNonTwoPowerOrders) {
  // order-3 roots: exact mode refuses, float mode runs
  RootSpec spec(2, {{{0}, 3}, {{1}, 1}});
  EXPECT_FALSE(spec.all_orders_two_power());
  const GeneralizedBooleanFunction F(2, 1, {0, 1, 1, 0});
  EXPECT_THROW(root_hadamard(F, spec), std::domain_error);
  const auto S = root_hadamard_float(F, spec);
  // naive complex oracle
  for (Point u = 0; u < 4; ++u) {
    std::complex<double> acc = 0;
    for (Point x = 0; x < 4; ++x) {
      const std::complex<double> sign = F.values[x] ^ dot(u, x) ? -1.0 : 1.0;
      acc += sign * spec.lambda_complex(x);
    }
    EXPECT_NEAR(std::abs(S.entries_complex[u] - acc), 0.0, 1e-9);
  }
}

TEST(Root, DimensionMismatchRejected) {
  const auto F = GeneralizedBooleanFunction::zero(3, 1);
  EXPECT_THROW(root_hadamard(F, RootSpec::trivial(4)), std::invalid_argument);
}

TEST(BinaryRoot, MatchesDefinitionCases) {
  // f == 0, trivial spec: Walsh of zero
  const auto S0 = binary_root_transform(BooleanFunction::zero(2), RootSpec::trivial(2));
  EXPECT_EQ(S0.entries[0], CycElement(4));
  for (int u = 1; u < 4; ++u) EXPECT_TRUE(S0.entries[u].is_zero());

  // f == 0, one block of order 4, n = 1
  const auto S1 = binary_root_transform(BooleanFunction::zero(1), RootSpec::single_block(1, 4));
  EXPECT_EQ(S1.entries[0], CycElement(1).lift(2) + zeta_pow(2, 1));
  EXPECT_EQ(S1.entries[1], (CycElement(1).lift(2) + zeta_pow(2, 1)).conj());

  // random f: equals root_hadamard of the k = 1 lift
  std::mt19937 rng(28);
  std::vector<std::uint8_t> t(table_size(5));
  for (auto& x : t) x = rng() & 1;
  const BooleanFunction f(5, t);
  const auto spec = verify::detail::random_rootspec(rng, 5, 3);
  const auto A = binary_root_transform(f, spec);
  const auto B = root_hadamard(GeneralizedBooleanFunction::from_boolean(f), spec);
  for (std::size_t u = 0; u < A.entries.size(); ++u) EXPECT_EQ(A.entries[u], B.entries[u]);
}

TEST(Inversion, RoundTrips) {
  EXPECT_EQ(invert_root_hadamard(
                root_hadamard(GeneralizedBooleanFunction::zero(3, 2), RootSpec::trivial(3)),
                RootSpec::trivial(3)),
            GeneralizedBooleanFunction::zero(3, 2));
  const auto F = verify::example_root_bent();
  EXPECT_EQ(invert_root_hadamard(root_hadamard(F, verify::example_spec()),
                                 verify::example_spec()),
            F);
  std::mt19937 rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const int k = 1 + static_cast<int>(rng() % 3);
    const auto G = random_gbf(rng, n, k);
    const auto spec = verify::detail::random_rootspec(rng, n, 3);
    EXPECT_EQ(invert_root_hadamard(root_hadamard(G, spec), spec), G);
  }
}

TEST(Inversion, RejectsCorruptedSpectrum) {
  const auto F = verify::example_root_bent();
  auto S = root_hadamard(F, verify::example_spec());
  S.entries[3] += CycElement(1);
  EXPECT_THROW(invert_root_hadamard(S, verify::example_spec()), std::domain_error);
}

TEST(ComponentSynthesis, MatchesDirectTransform) {
  std::mt19937 rng(30);
  // k = 1: single component, synthesis is the binary transform itself
  {
    const auto F = random_gbf(rng, 3, 1);
    const auto spec = verify::detail::random_rootspec(rng, 3, 2);
    const auto S = root_hadamard(F, spec);
    for (Point u = 0; u < 8; ++u) EXPECT_EQ(component_synthesis(F, spec, u), S.entries[u]);
  }
  // k = 2 random
  {
    const auto F = random_gbf(rng, 3, 2);
    const auto spec = verify::detail::random_rootspec(rng, 3, 3);
    const auto S = root_hadamard(F, spec);
    for (Point u = 0; u < 8; ++u) EXPECT_EQ(component_synthesis(F, spec, u), S.entries[u]);
  }
  // worked example at u = 0
  {
    const auto F = verify::example_root_bent();
    const auto S = root_hadamard(F, verify::example_spec());
    EXPECT_EQ(component_synthesis(F, verify::example_spec(), 0), S.entries[0]);
  }
  // trivial spec: the synthesis assembles the generalized Walsh transform
  // from the plain Walsh transforms of the components
  {
    const auto F = random_gbf(rng, 3, 3);
    const auto H = generalized_walsh(F);
    for (Point u = 0; u < 8; ++u)
      EXPECT_EQ(component_synthesis(F, RootSpec::trivial(3), u), H.entries[u]);
  }
}

TEST(NegaToWalshLift, LiftedSpectraAgree) {
  // k = 1, f == 0, n = 2: g = s_1 + 2 s_2 mod 4
  {
    const auto F = GeneralizedBooleanFunction::zero(2, 1);
    const auto g = nega_to_walsh_lift(F);
    for (Point x = 0; x < 4; ++x)
      EXPECT_EQ(g.values[x], (elementary_symmetric(1, x) + 2 * elementary_symmetric(2, x)) % 4);
    const auto N = nega_hadamard(F);
    const auto H = generalized_walsh(g);
    for (Point u = 0; u < 4; ++u) EXPECT_EQ(N.entries[u], H.entries[u]);
  }
  std::mt19937 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const int k = 1 + static_cast<int>(rng() % 3);
    const auto F = random_gbf(rng, n, k);
    const auto N = nega_hadamard(F);
    const auto H = generalized_walsh(nega_to_walsh_lift(F));
    const int M = std::max(N.ring_exponent, H.ring_exponent);
    for (std::size_t u = 0; u < N.entries.size(); ++u)
      EXPECT_EQ(N.entries[u].lift(M), H.entries[u].lift(M));
  }
  // the worked example function again
  const auto F = verify::example_root_bent();
  const auto N = nega_hadamard(F);
  const auto H = generalized_walsh(nega_to_walsh_lift(F));
  for (std::size_t u = 0; u < N.entries.size(); ++u)
    EXPECT_EQ(N.entries[u].lift(3), H.entries[u].lift(3));
}

TEST(RootShift, EmptySubsetIsIdentity) {
  std::mt19937 rng(32);
  const auto F = random_gbf(rng, 4, 3);
  const auto spec = verify::example_spec();
  EXPECT_EQ(root_shift_function(F, spec, {}), F);
}

TEST(RootShift, FullSubsetReducesToGeneralizedWalsh) {
  std::mt19937 rng(33);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const int k = 3;
    const auto F = random_gbf(rng, n, k);
    const auto spec = verify::detail::random_rootspec(rng, n, k, 1);  // orders {2,4,8}
    const auto hK = root_shift_function(F, spec, all_blocks(spec));
    const auto lhs = root_hadamard(hK, spec);
    const auto rhs = generalized_walsh(F);
    const int M = std::max(lhs.ring_exponent, rhs.ring_exponent);
    for (std::size_t u = 0; u < lhs.entries.size(); ++u)
      EXPECT_EQ(lhs.entries[u].lift(M), rhs.entries[u].lift(M));
  }
}

TEST(RootShift, SingleBlockSubsetMatchesPartialSpec) {
  std::mt19937 rng(34);
  const auto spec = verify::example_spec();
  for (int trial = 0; trial < 10; ++trial) {
    const auto F = random_gbf(rng, 4, 3);
    for (std::size_t s = 0; s < spec.blocks.size(); ++s) {
      const auto hJ = root_shift_function(F, spec, {s});
      const auto lhs = root_hadamard(hJ, spec);
      const auto rhs = root_hadamard(F, spec.with_trivial_roots({s}));
      const int M = std::max(lhs.ring_exponent, rhs.ring_exponent);
      for (std::size_t u = 0; u < lhs.entries.size(); ++u)
        EXPECT_EQ(lhs.entries[u].lift(M), rhs.entries[u].lift(M));
    }
  }
}

TEST(RootShift, RejectsOrderAboveWidth) {
  const auto F = GeneralizedBooleanFunction::zero(4, 2);
  const auto spec = verify::example_spec();  // has an order-8 block, m = 3 > k = 2
  EXPECT_THROW(root_shift_function(F, spec, all_blocks(spec)), std::invalid_argument);
}

// two scalar identities underlying component synthesis: 2 z^b and the sign
// of (1 + (-1)^b z) under (-1)^{bc}
TEST(BitScalarIdentities, HoldForRandomComplexZ) {
  std::mt19937 rng(35);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  for (int trial = 0; trial < 50; ++trial) {
    const std::complex<double> z(dist(rng), dist(rng));
    for (int b = 0; b <= 1; ++b) {
      const double sb = b ? -1.0 : 1.0;
      const std::complex<double> lhs = 2.0 * (b ? z : 1.0);
      const std::complex<double> rhs = (1.0 + sb) + (1.0 - sb) * z;
      EXPECT_NEAR(std::abs(lhs - rhs), 0.0, 1e-12);
      for (int c = 0; c <= 1; ++c) {
        const std::complex<double> l2 = (1.0 + sb * z) * (b && c ? -1.0 : 1.0);
        const std::complex<double> r2 = b ? (1.0 - z) * (c ? -1.0 : 1.0) : (1.0 + z);
        EXPECT_NEAR(std::abs(l2 - r2), 0.0, 1e-12);
      }
    }
  }
}

// the double-sum inversion over F_2^{k-1} recovers the indexed function
TEST(InversionLemma, RecoversIndexedFamily) {
  std::mt19937 rng(36);
  for (int k = 1; k <= 4; ++k) {
    const std::uint32_t half = 1u << (k - 1);
    const int n = 3;
    // random complex family F_u indexed by u in F_2^{k-1}
    std::vector<std::vector<std::complex<double>>> fam(half);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (auto& f : fam) {
      f.resize(table_size(n));
      for (auto& v : f) v = {dist(rng), dist(rng)};
    }
    for (std::uint32_t c = 0; c < half; ++c)
      for (Point a = 0; a < table_size(n); ++a) {
        std::complex<double> acc = 0;
        for (std::uint32_t u = 0; u < half; ++u)
          for (std::uint32_t v = 0; v < half; ++v)
            acc += (weight((u ^ c) & v) & 1 ? -1.0 : 1.0) * fam[u][a];
        acc /= static_cast<double>(half);
        EXPECT_NEAR(std::abs(acc - fam[c][a]), 0.0, 1e-9);
      }
  }
}

TEST(Classify, KnownClasses) {
  // 2-variable bent
  EXPECT_EQ(classify_spectrum(walsh_hadamard(boolean_from_anf_string("x1*x2", 2))).kind,
            SpectralClass::Kind::bent);
  // x1x2x3: magnitudes {2, 6}, landscape levels {(2,1),(2,3)}
  const auto c = classify_spectrum(walsh_hadamard(boolean_from_anf_string("x1*x2*x3", 3)));
  EXPECT_EQ(c.kind, SpectralClass::Kind::landscape);
  EXPECT_EQ(c.levels, (std::vector<std::pair<int, std::int64_t>>{{2, 1}, {2, 3}}));
  EXPECT_FALSE(c.zero_in_spectrum);
  EXPECT_EQ(c.length, 2);
  // worked root-bent example
  EXPECT_EQ(classify_spectrum(root_hadamard(verify::example_root_bent(), verify::example_spec()))
                .kind,
            SpectralClass::Kind::bent);
}

TEST(Classify, PlateauedAndGeneral) {
  // x1x2 viewed in 3 variables: values {+-4, 0}, 1-plateaued
  const auto c = classify_spectrum(walsh_hadamard(boolean_from_anf_string("x1*x2", 3)));
  EXPECT_EQ(c.kind, SpectralClass::Kind::plateaued);
  EXPECT_EQ(c.s, 1);
  EXPECT_TRUE(c.zero_in_spectrum);
  EXPECT_EQ(c.length, 2);

  // |2 + i|^2 = 5 has no odd-square factorization: classified general
  Spectrum S;
  S.n = 1;
  S.ring_exponent = 2;
  S.entries = {CycElement(2).lift(2) + zeta_pow(2, 1), CycElement(2).lift(2) + zeta_pow(2, 1)};
  EXPECT_EQ(classify_spectrum(S).kind, SpectralClass::Kind::general);
}

TEST(Classify, FloatPathUsesTolerance) {
  Spectrum S;
  S.n = 2;
  S.entries_complex = {{2, 1e-8}, {2, 0}, {-2, 0}, {0, 2}};
  EXPECT_EQ(classify_spectrum(S).kind, SpectralClass::Kind::bent);
  S.entries_complex[0] = {2.1, 0};
  EXPECT_EQ(classify_spectrum(S).kind, SpectralClass::Kind::general);
}

// The bent and (shifted) plateaued classes transfer between the nega
// spectrum of f and the Walsh spectrum of f + s_2; the landscape property
// does not.  Two frozen 4-variable witnesses: the indicator of v_0 has nega
// magnitudes^2 {4, 20, 36} (20 = 4*5, no odd-square factorization) while
// every integer Walsh spectrum is landscape; table 0x117 is landscape on
// both sides but with unrelated levels (2,5) vs (2,7).
TEST(Classify, NegaLandscapeDoesNotTransfer) {
  auto boolean_from_code = [](std::uint32_t code) {
    std::vector<std::uint8_t> t(16);
    for (int x = 0; x < 16; ++x) t[x] = (code >> x) & 1;
    return BooleanFunction(4, t);
  };
  auto with_s2 = [](const BooleanFunction& f) {
    std::vector<std::uint8_t> t(16);
    for (Point x = 0; x < 16; ++x)
      t[x] = static_cast<std::uint8_t>(f.table[x] ^ elementary_symmetric(2, x));
    return BooleanFunction(4, t);
  };

  {
    const auto f = boolean_from_code(1);
    const auto cn = classify_spectrum(nega_hadamard(GeneralizedBooleanFunction::from_boolean(f)));
    EXPECT_EQ(cn.kind, SpectralClass::Kind::general);
    const auto cw = classify_spectrum(walsh_hadamard(with_s2(f)));
    EXPECT_NE(cw.kind, SpectralClass::Kind::general);
  }
  {
    const auto f = boolean_from_code(0x117);
    const auto cn = classify_spectrum(nega_hadamard(GeneralizedBooleanFunction::from_boolean(f)));
    const auto cw = classify_spectrum(walsh_hadamard(with_s2(f)));
    ASSERT_EQ(cn.kind, SpectralClass::Kind::landscape);
    ASSERT_EQ(cw.kind, SpectralClass::Kind::landscape);
    EXPECT_EQ(cn.levels, (std::vector<std::pair<int, std::int64_t>>{{2, 1}, {2, 5}}));
    EXPECT_EQ(cw.levels, (std::vector<std::pair<int, std::int64_t>>{{2, 1}, {2, 7}}));
  }
}

TEST(Scale, ModerateSizesStayExact) {
  std::mt19937 rng(38);
  // 16-variable Walsh butterfly satisfies Parseval
  {
    std::vector<std::uint8_t> t(table_size(16));
    for (auto& x : t) x = rng() & 1;
    std::int64_t sum = 0;
    for (auto w : walsh_hadamard_values(BooleanFunction(16, t))) sum += w * w;
    EXPECT_EQ(sum, std::int64_t{1} << 32);
  }
  // 10-variable root transform over an order-8 spec
  {
    const auto F = random_gbf(rng, 10, 2);
    const auto spec = RootSpec(10, {{{0, 2, 4, 6, 8}, 8}, {{1, 3, 5, 7, 9}, 4}});
    const auto S = root_hadamard(F, spec);
    CycElement sum;
    for (const auto& e : S.entries) sum += e.abs_sq();
    EXPECT_EQ(sum, CycElement(std::int64_t{1} << 20));
  }
}

TEST(Parseval, RootSpectraSumToTwoPowTwoN) {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const int k = 1 + static_cast<int>(rng() % 3);
    const auto F = random_gbf(rng, n, k);
    const auto spec = verify::detail::random_rootspec(rng, n, 3);
    const auto S = root_hadamard(F, spec);
    CycElement sum;
    for (const auto& e : S.entries) sum += e.abs_sq();
    EXPECT_EQ(sum, CycElement(std::int64_t{1} << (2 * n)));
  }
}

}  // namespace
}  // namespace rooth
