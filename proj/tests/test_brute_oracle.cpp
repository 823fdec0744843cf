// Library oracle against the naive reference, plus frozen reference values.
#include <gtest/gtest.h>

#include <tuple>

#include "brute.hpp"
#include "qtpaths/nabla.hpp"
#include "qtpaths/parking.hpp"

using namespace qtpaths;

namespace {

using Terms = std::vector<std::tuple<int, int, long long>>;

brute::Poly poly(const Terms& ts) {
  brute::Poly p;
  for (auto [a, b, c] : ts) p[{a, b}] = c;
  return p;
}

brute::Poly from_library(const QtPolynomial& p) {
  brute::Poly out;
  for (const auto& [k, c] : p.terms()) out[k] = c;
  return out;
}

// Values produced once by brute::nabla and checked by hand for n <= 3.
const std::map<std::pair<int, int>, brute::Expansion>& frozen() {
  static const std::map<std::pair<int, int>, brute::Expansion> table = {
      {{2, 1}, {{{1, 1}, poly({{0, 1, 1}, {1, 0, 1}})}, {{2}, poly({{0, 0, 1}})}}},
      {{3, 1},
       {{{1, 1, 1}, poly({{0, 3, 1}, {1, 1, 1}, {1, 2, 1}, {2, 1, 1}, {3, 0, 1}})},
        {{2, 1}, poly({{0, 1, 1}, {0, 2, 1}, {1, 0, 1}, {1, 1, 1}, {2, 0, 1}})},
        {{3}, poly({{0, 0, 1}})}}},
      {{4, 1},
       {{{1, 1, 1, 1}, poly({{0, 6, 1}, {1, 3, 1}, {1, 4, 1}, {1, 5, 1}, {2, 2, 1}, {2, 3, 1}, {2, 4, 1},
                             {3, 1, 1}, {3, 2, 1}, {3, 3, 1}, {4, 1, 1}, {4, 2, 1}, {5, 1, 1}, {6, 0, 1}})},
        {{2, 1, 1}, poly({{0, 3, 1}, {0, 4, 1}, {0, 5, 1}, {1, 1, 1}, {1, 2, 2}, {1, 3, 2}, {1, 4, 1}, {2, 1, 2},
                          {2, 2, 2}, {2, 3, 1}, {3, 0, 1}, {3, 1, 2}, {3, 2, 1}, {4, 0, 1}, {4, 1, 1}, {5, 0, 1}})},
        {{2, 2}, poly({{0, 2, 1}, {0, 4, 1}, {1, 1, 1}, {1, 2, 1}, {1, 3, 1}, {2, 0, 1}, {2, 1, 1}, {2, 2, 1},
                       {3, 1, 1}, {4, 0, 1}})},
        {{3, 1}, poly({{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {1, 0, 1}, {1, 1, 1}, {1, 2, 1}, {2, 0, 1}, {2, 1, 1},
                       {3, 0, 1}})},
        {{4}, poly({{0, 0, 1}})}}},
      {{2, 2}, {{{1, 1}, poly({{0, 2, 1}, {1, 1, 1}, {2, 0, 1}})}, {{2}, poly({{0, 1, 1}, {1, 0, 1}})}}},
      {{3, 2},
       {{{1, 1, 1}, poly({{0, 6, 1}, {1, 4, 1}, {1, 5, 1}, {2, 2, 1}, {2, 3, 1}, {2, 4, 1}, {3, 2, 1}, {3, 3, 1},
                          {4, 1, 1}, {4, 2, 1}, {5, 1, 1}, {6, 0, 1}})},
        {{2, 1}, poly({{0, 4, 1}, {0, 5, 1}, {1, 2, 1}, {1, 3, 2}, {1, 4, 1}, {2, 1, 1}, {2, 2, 2}, {2, 3, 1},
                       {3, 1, 2}, {3, 2, 1}, {4, 0, 1}, {4, 1, 1}, {5, 0, 1}})},
        {{3}, poly({{0, 3, 1}, {1, 1, 1}, {1, 2, 1}, {2, 1, 1}, {3, 0, 1}})}}},
  };
  return table;
}

void expect_matches(const SchurXExpansion& lib, const brute::Expansion& ref) {
  for (const auto& [lambda, p] : ref) EXPECT_EQ(from_library(lib.coeff(lambda)), p) << "lambda size " << lambda.size();
  for (const auto& [lambda, p] : lib.coeffs)
    if (!p.is_zero()) EXPECT_TRUE(ref.count(lambda));
}

}  // namespace

TEST(BruteOracle, ReproducesFrozenValues) {
  for (const auto& [nm, ref] : frozen()) EXPECT_EQ(brute::nabla(nm.first, nm.second), ref) << nm.first << "," << nm.second;
}

TEST(BruteOracle, LibraryMatchesFrozenValues) {
  for (const auto& [nm, ref] : frozen()) expect_matches(nabla_oracle(nm.first, nm.second), ref);
}

TEST(BruteOracle, LibraryMatchesBruteLive) {
  for (auto [n, m] : {std::pair{5, 1}, std::pair{4, 2}, std::pair{3, 3}})
    expect_matches(nabla_oracle(n, m), brute::nabla(n, m));
}

TEST(BruteOracle, SmallestCasesByHand) {
  // n=2: NENE with labels 12 and 21, NNEE with 12.
  const auto e = nabla_oracle(2, 1);
  EXPECT_EQ(e.coeff({2}).to_string(), "1");
  EXPECT_EQ(e.coeff({1, 1}).to_string(), "q + t");
}

TEST(BruteOracle, DinvAndReadingWordAgreePerParkingFunction) {
  for (auto [n, m] : {std::pair{3, 1}, std::pair{4, 1}, std::pair{5, 1}, std::pair{3, 2}, std::pair{4, 2},
                      std::pair{3, 3}, std::pair{4, 3}}) {
    for (const auto& pf : enumerate_parking(n, m)) {
      const auto& w = pf.path().word();
      ASSERT_EQ(dinv_total(pf), brute::dinv(w, pf.labels(), m)) << w;
      ASSERT_EQ(reading_word(pf), brute::reading_word(w, pf.labels(), m)) << w;
      ASSERT_EQ(area(pf.path()), brute::area(w, m)) << w;
    }
  }
}

TEST(BruteOracle, ParkingCountsMatchNaiveFilter) {
  for (auto [n, m] : {std::pair{3, 1}, std::pair{4, 1}, std::pair{3, 2}, std::pair{3, 3}}) {
    std::uint64_t naive = 0;
    for (const auto& w : brute::dyck_words(n, m)) {
      std::vector<int> labels(n);
      for (int i = 0; i < n; ++i) labels[i] = i + 1;
      do naive += brute::column_increasing(w, labels);
      while (std::next_permutation(labels.begin(), labels.end()));
    }
    EXPECT_EQ(naive, parking_count(n, m));
    EXPECT_EQ(naive, enumerate_parking(n, m).size());
  }
}

TEST(BruteOracle, KostkaSmallTable) {
  EXPECT_EQ(brute::kostka({2, 1}, {1, 1, 1}), 2);
  EXPECT_EQ(brute::kostka({3, 2}, {2, 2, 1}), 2);
  EXPECT_EQ(brute::kostka({2, 2}, {3, 1}), 0);
  EXPECT_EQ(brute::kostka({4}, {2, 2}), 1);
}
