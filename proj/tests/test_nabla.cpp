#include <gtest/gtest.h>

#include "qtpaths/bijections.hpp"
#include "qtpaths/error.hpp"
#include "qtpaths/nabla.hpp"
#include "qtpaths/parking.hpp"

using namespace qtpaths;

TEST(Nabla, ParallelMatchesSerial) {
  for (auto [n, m] : {std::pair{4, 1}, std::pair{5, 1}, std::pair{6, 1}, std::pair{3, 2}, std::pair{4, 2}})
    EXPECT_EQ(nabla_qsym(n, m), nabla_qsym_serial(n, m)) << n << "," << m;
  EXPECT_EQ(nabla_oracle(4, 1), nabla_oracle_serial(4, 1));
}

TEST(Nabla, KnownSmallValues) {
  const auto e3 = nabla_oracle(3, 1);
  EXPECT_EQ(e3.coeff({3}).to_string(), "1");
  EXPECT_EQ(e3.coeff({2, 1}).to_string(), "q^2 + q*t + t^2 + q + t");
  EXPECT_EQ(e3.coeff({1, 1, 1}).to_string(), "q^3 + q^2*t + q*t^2 + t^3 + q*t");
  const auto e22 = nabla_oracle(2, 2);
  EXPECT_EQ(e22.coeff({2}).to_string(), "q + t");
  EXPECT_EQ(e22.coeff({1, 1}).to_string(), "q^2 + q*t + t^2");
}

TEST(Nabla, CoefficientsSymmetricAndSchurPositive) {
  for (auto [n, m] : {std::pair{5, 1}, std::pair{6, 1}, std::pair{4, 2}, std::pair{5, 2}}) {
    for (const auto& [lambda, p] : nabla_cached(n, m).coeffs) {
      ASSERT_EQ(p, p.swap_qt());
      ASSERT_FALSE(schur_decompose(p).has_negative());
    }
  }
}

TEST(Nabla, TotalMassIsParkingCount) {
  // Hilbert series at q=t=1: sum over lambda of f^lambda * coefficient(1,1)
  for (int n = 1; n <= 6; ++n) {
    std::int64_t total = 0;
    for (const auto& [lambda, p] : nabla_cached(n, 1).coeffs) total += p.eval(1, 1) * std::int64_t(syt_count(lambda));
    EXPECT_EQ(std::uint64_t(total), parking_count(n, 1));
  }
}

TEST(Nabla, QsymHasEveryMaskWithinRange) {
  const auto f = nabla_qsym(4, 1);
  EXPECT_EQ(f.n, 4);
  for (const auto& [mask, p] : f.terms) EXPECT_LT(mask, 1u << 3);
}

TEST(Nabla, LimitExceeded) {
  try {
    nabla_oracle(12, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::LimitExceeded);
  }
  // the bound is inclusive
  EXPECT_NO_THROW(nabla_qsym(7, 1, 262144));
  EXPECT_THROW(nabla_qsym(7, 1, 262143), Error);
}

TEST(Nabla, ResidualDetectsNonSymmetricInput) {
  QsymExpansion f;
  f.n = 3;
  f.terms[1] = QtPolynomial::constant(1);  // F_{1,2} alone is not symmetric
  try {
    schur_from_qsym(f);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonZeroResidual);
  }
}

TEST(Nabla, HookPartitions) {
  EXPECT_EQ(hook_partition(5, 0), (Partition{1, 1, 1, 1, 1}));
  EXPECT_EQ(hook_partition(5, 2), (Partition{3, 1, 1}));
  EXPECT_EQ(hook_partition(5, 4), (Partition{5}));
}

TEST(Nabla, SchroderGeneratingFunctions) {
  EXPECT_EQ(sch_generating(3, 1, true).to_string(), "q^2 + q*t + q");
  EXPECT_EQ(sch_generating(2, 1, false).to_string(), "q + t + 1");
  for (int n = 1; n <= 5; ++n)
    for (int d = 0; d <= n; ++d) {
      QtPolynomial direct;
      for (const auto& p : enumerate_paths(Schroder{n, d, 1})) direct.add_term(bounce(p), area(p), 1);
      EXPECT_EQ(sch_generating(n, d, false), direct);
    }
}

TEST(Nabla, AlternatingBracketsGiveHookCoefficients) {
  for (int n = 2; n <= 6; ++n)
    for (int d = 0; d < n; ++d)
      EXPECT_EQ(alternating_hook_bracket(n, 1, d), nabla_cached(n, 1).coeff(hook_partition(n, d))) << n << "," << d;
  for (int d = 0; d < 4; ++d) EXPECT_EQ(alternating_hook_bracket(4, 2, d), nabla_cached(4, 2).coeff(hook_partition(4, d)));
}

TEST(Nabla, ShuffleBracketIsSchroderGeneratingFunction) {
  for (int n = 1; n <= 6; ++n)
    for (int d = 0; d <= n; ++d) EXPECT_EQ(shuffle_bracket(n, 1, d), sch_generating(n, d, false)) << n << "," << d;
}
