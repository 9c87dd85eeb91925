#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "support.hpp"
#include "wgc/binary_matrix.hpp"
#include "wgc/binary_poly.hpp"
#include "wgc/poly_matrix.hpp"

using namespace wgc;
using wgc::testing::random_matrix;
using wgc::testing::random_poly;
using wgc::testing::random_poly_matrix;

namespace {

PolyMatrix constituent_generator() {
  return PolyMatrix::from_strings({{"101", "001", "111"}, {"0111", "1", "101"}});
}

PolyMatrix constituent_check() { return PolyMatrix::from_strings({{"11001", "110111", "101111"}}); }

}  // namespace

TEST(BinaryMatrix, IdentityRank) { EXPECT_EQ(rank(BinaryMatrix::identity(3)), 3u); }

TEST(BinaryMatrix, OutOfRangeAccessThrows) {
  BinaryMatrix m(2, 3);
  EXPECT_THROW(m.get(2, 0), std::out_of_range);
  EXPECT_THROW(m.set(0, 3, true), std::out_of_range);
}

TEST(BinaryMatrix, TextRoundTrip) {
  std::mt19937_64 rng(7);
  const BinaryMatrix m = random_matrix(rng, 9, 70);
  EXPECT_EQ(BinaryMatrix::parse(m.to_string()), m);
  EXPECT_THROW(BinaryMatrix::parse("2 2\n10\n1"), std::invalid_argument);
}

TEST(BinaryMatrix, NullspaceOfIdentityIsEmpty) { EXPECT_EQ(nullspace_basis(BinaryMatrix::identity(3)).rows(), 0u); }

TEST(BinaryMatrix, RankMatchesTransposeAndNaiveElimination) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> dim(1, 64);
  std::uniform_real_distribution<double> dens(0.05, 0.7);
  for (int trial = 0; trial < 200; ++trial) {
    const BinaryMatrix m = random_matrix(rng, dim(rng), dim(rng), dens(rng));
    const std::size_t r = rank(m);
    EXPECT_EQ(r, rank(m.transpose()));
    EXPECT_EQ(r, wgc::testing::naive_rank(wgc::testing::to_bool_rows(m)));
    EXPECT_LE(r, std::min(m.rows(), m.cols()));
  }
}

TEST(BinaryMatrix, NullspaceRowsHaveZeroSyndrome) {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<std::size_t> dim(1, 70);
  for (int trial = 0; trial < 100; ++trial) {
    const BinaryMatrix m = random_matrix(rng, dim(rng), dim(rng), 0.3);
    const BinaryMatrix k = nullspace_basis(m);
    EXPECT_EQ(k.rows(), m.cols() - rank(m));
    EXPECT_TRUE((m * k.transpose()).is_zero());
    EXPECT_EQ(rank(k), k.rows());
  }
}

TEST(Gf2Span, InsertReportsDependence) {
  Gf2Span s(5);
  EXPECT_TRUE(s.insert({0b00011}));
  EXPECT_TRUE(s.insert({0b00110}));
  EXPECT_FALSE(s.insert({0b00101}));
  EXPECT_TRUE(s.contains({0b00101}));
  EXPECT_FALSE(s.contains({0b10000}));
  EXPECT_EQ(s.dimension(), 2u);
}

TEST(BinaryPoly, ZeroHasSentinelDegree) {
  EXPECT_EQ(BinaryPoly().degree(), BinaryPoly::kDegreeOfZero);
  EXPECT_EQ(BinaryPoly::parse("1000").degree(), 0);
  EXPECT_EQ(BinaryPoly::parse("1000").to_string(), "1");
  EXPECT_EQ(BinaryPoly().to_string(), "0");
}

TEST(BinaryPoly, SquareOfOnePlusD) {
  const BinaryPoly a = BinaryPoly::parse("11");
  EXPECT_EQ(poly_mul(a, a), BinaryPoly::parse("101"));
  EXPECT_TRUE(poly_mul(a, BinaryPoly()).is_zero());
}

TEST(BinaryPoly, ProductMatchesSchoolbookConvolution) {
  const std::string h1 = "11001", h3 = "101111";
  const BinaryPoly p = poly_mul(BinaryPoly::parse(h3), BinaryPoly::parse(h1));
  const auto expect = wgc::testing::convolve_bits(wgc::testing::bits_of(h3), wgc::testing::bits_of(h1));
  ASSERT_EQ(p.degree() + 1, static_cast<int>(expect.size()));
  for (std::size_t i = 0; i < expect.size(); ++i) EXPECT_EQ(p.coeff(i), expect[i] == 1) << i;
  EXPECT_EQ(p.degree(), 9);
}

TEST(BinaryPoly, RingAxiomsOnRandomInputs) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    const BinaryPoly a = random_poly(rng, 32), b = random_poly(rng, 32), c = random_poly(rng, 32);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    if (!a.is_zero() && !b.is_zero()) {
      EXPECT_EQ((a * b).degree(), a.degree() + b.degree());
    }
  }
}

TEST(BinaryPoly, WideProductsMatchConvolution) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const BinaryPoly a = random_poly(rng, 150), b = random_poly(rng, 90);
    const auto expect = wgc::testing::convolve_bits(wgc::testing::bits_of(a.to_string()),
                                                    wgc::testing::bits_of(b.to_string()));
    EXPECT_EQ((a * b).to_string(), a.is_zero() || b.is_zero() ? "0" : [&] {
      std::string s;
      for (int v : expect) s += v ? '1' : '0';
      return s;
    }());
  }
}

TEST(BinaryPoly, DivisionIdentity) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const BinaryPoly a = random_poly(rng, 40), b = random_poly(rng, 12);
    if (b.is_zero()) continue;
    const auto [q, r] = BinaryPoly::divmod(a, b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree());
    const BinaryPoly g = BinaryPoly::gcd(a, b);
    if (!g.is_zero()) {
      EXPECT_TRUE((a % g).is_zero());
      EXPECT_TRUE((b % g).is_zero());
    }
  }
  EXPECT_THROW(BinaryPoly::divmod(BinaryPoly::one(), BinaryPoly()), std::domain_error);
}

TEST(BinaryPoly, ParsesOctalShorthand) {
  // 0o13 = 001 011: first significant bit is the constant term of 1 + D^2 + D^3
  EXPECT_EQ(BinaryPoly::parse("o:13"), BinaryPoly::parse("1011"));
  EXPECT_EQ(BinaryPoly::parse("o:7"), BinaryPoly::parse("111"));
  EXPECT_THROW(BinaryPoly::parse("10x"), std::invalid_argument);
}

TEST(PolyMatrix, TextRoundTrip) {
  const PolyMatrix g = constituent_generator();
  EXPECT_EQ(PolyMatrix::parse(g.to_string()), g);
  EXPECT_EQ(g.constraint_length(), 5);
  EXPECT_EQ(g.memory(), 3);
}

TEST(RationalRank, SmallExamples) {
  EXPECT_EQ(rank_over_rational_field(constituent_check()), 1u);
  EXPECT_EQ(rank_over_rational_field(PolyMatrix::from_strings({{"1", "01"}, {"01", "001"}})), 1u);
  EXPECT_EQ(rank_over_rational_field(constituent_generator()), 2u);
}

TEST(RationalRank, ConstituentGeneratorHasNonzeroMinor) {
  const PolyMatrix g = constituent_generator();
  bool nonzero = false;
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = a + 1; b < 3; ++b)
      nonzero = nonzero || !(g(0, a) * g(1, b) + g(0, b) * g(1, a)).is_zero();
  EXPECT_TRUE(nonzero);
}

TEST(RationalRank, AgreesWithBinaryRankOfRandomEvaluations) {
  // rank over GF(2)(D) is at least the GF(2) rank of any coefficient slice at D=1
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const PolyMatrix m = random_poly_matrix(rng, 1 + rng() % 4, 1 + rng() % 5, 3);
    const std::size_t r = rank_over_rational_field(m);
    EXPECT_GE(r, rank(m.at_one()));
    EXPECT_EQ(r, rank_over_rational_field(m.transpose()));
  }
}

TEST(Tailbite, ConstantMatrixAtLengthOne) {
  const BinaryMatrix h0 = BinaryMatrix::from_rows({"111", "101"});
  EXPECT_EQ(tailbite(PolyMatrix::from_binary(h0), 1), h0);
  EXPECT_THROW(tailbite(PolyMatrix::from_binary(h0), 0), std::invalid_argument);
}

TEST(Tailbite, ShortLengthsAccumulateWrappedCoefficients) {
  // 1 + D^2 at L = 2 wraps onto the same block column and cancels
  const PolyMatrix h = PolyMatrix::from_strings({{"101"}});
  EXPECT_TRUE(tailbite(h, 2).is_zero());
  EXPECT_EQ(tailbite(h, 1), BinaryMatrix(1, 1));
  EXPECT_EQ(tailbite(h, 3), BinaryMatrix::from_rows({"101", "110", "011"}));
}

TEST(Tailbite, ReversedOrientationMirrorsDegrees) {
  const PolyMatrix g = PolyMatrix::from_strings({{"11", "01"}});
  EXPECT_EQ(tailbite(g, 3, TailbiteOrientation::kReversed), BinaryMatrix::from_rows({"111000", "001110", "100011"}));
}

TEST(Tailbite, QuasiCyclicInvariance) {
  const PolyMatrix h = constituent_check();
  for (std::size_t len : {6u, 7u, 10u}) {
    const BinaryMatrix tb = tailbite(h, len);
    const BinaryMatrix k = nullspace_basis(tb);
    ASSERT_EQ(k.rows(), 3 * len - rank(tb));
    for (std::size_t r = 0; r < k.rows(); ++r) {
      BinaryMatrix word(1, 3 * len), shifted(1, 3 * len);
      for (std::size_t c = 0; c < 3 * len; ++c) {
        word.set(0, c, k.get(r, c));
        shifted.set(0, (c + 3) % (3 * len), k.get(r, c));
      }
      EXPECT_TRUE((tb * word.transpose()).is_zero());
      EXPECT_TRUE((tb * shifted.transpose()).is_zero());
    }
  }
}

TEST(Tailbite, OrthogonalPairsStayOrthogonal) {
  const PolyMatrix g = constituent_generator(), h = constituent_check();
  ASSERT_TRUE((g * h.transpose()).is_zero());
  for (std::size_t len = 1; len <= 12; ++len) {
    const BinaryMatrix gt = tailbite(g, len, TailbiteOrientation::kReversed);
    EXPECT_TRUE((gt * tailbite(h, len).transpose()).is_zero()) << len;
    EXPECT_TRUE((tailbite(g, len) * tailbite(h, len, TailbiteOrientation::kReversed).transpose()).is_zero()) << len;
  }
}

TEST(Bivariate, ReductionAndEvaluation) {
  BivariatePoly p = BivariatePoly::term(BinaryPoly::parse("11"), 8) + BivariatePoly::term(BinaryPoly::one(), 1);
  const BivariatePoly r = p.mod_z(7);
  EXPECT_EQ(r.z_degree(), 1);
  EXPECT_EQ(r.coeff(1), BinaryPoly::parse("01"));
  EXPECT_EQ(p.at_z_one(), BinaryPoly::parse("01"));
}

TEST(MinimalKernel, ConstituentKernelIsTheCheckRow) {
  const PolyMatrix k = minimal_kernel_basis(constituent_generator());
  ASSERT_EQ(k.rows(), 1u);
  EXPECT_EQ(k, constituent_check());
}

TEST(MinimalKernel, RowsAnnihilateRandomMatrices) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + rng() % 3, cols = rows + 1 + rng() % 3;
    const PolyMatrix m = random_poly_matrix(rng, rows, cols, 3);
    const PolyMatrix k = minimal_kernel_basis(m);
    EXPECT_EQ(k.rows(), cols - rank_over_rational_field(m));
    if (k.rows() == 0) continue;
    EXPECT_TRUE((m * k.transpose()).is_zero());
    EXPECT_EQ(rank(k.high_order_coefficients()), k.rows());
    EXPECT_EQ(rank_over_rational_field(k), k.rows());
  }
}

TEST(MinimalBasic, RejectsRankDeficientInput) {
  EXPECT_THROW(minimal_basic(PolyMatrix::from_strings({{"1", "01"}, {"01", "001"}})), std::invalid_argument);
}

TEST(MinimalBasic, MinimalInputIsUnchanged) {
  EXPECT_EQ(minimal_basic(constituent_generator()), constituent_generator());
}

TEST(MinimalBasic, NonBasicSquareMatrixReducesToIdentity) {
  // det = 1 + D^2, so the row space is all of GF(2)(D)^2 and the minimal basis has nu = 0
  const PolyMatrix g = PolyMatrix::from_strings({{"11", "11"}, {"1", "01"}});
  const PolyMatrix b = minimal_basic(g);
  EXPECT_EQ(b.constraint_length(), 0);
  EXPECT_TRUE(same_rational_row_space(g, b));
}

TEST(MinimalBasic, RandomGeneratorsPreserveRowSpace) {
  std::mt19937_64 rng(31);
  int reduced = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + rng() % 3, cols = rows + 1 + rng() % 2;
    const PolyMatrix g = random_poly_matrix(rng, rows, cols, 3);
    if (rank_over_rational_field(g) != rows) continue;
    const PolyMatrix b = minimal_basic(g);
    EXPECT_LE(b.constraint_length(), g.constraint_length());
    EXPECT_TRUE(same_rational_row_space(g, b));
    EXPECT_EQ(rank(b.high_order_coefficients()), rows);
    EXPECT_EQ(minimal_basic(b), b);
    reduced += b.constraint_length() < g.constraint_length();
  }
  EXPECT_GT(reduced, 0);
}
