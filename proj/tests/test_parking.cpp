#include <gtest/gtest.h>

#include "qtpaths/error.hpp"
#include "qtpaths/parking.hpp"

using namespace qtpaths;

namespace {

const char* kNinePath = "NNENENNENENEEENENE";

std::vector<int> digits(const std::string& s) {
  std::vector<int> v;
  for (char c : s) v.push_back(c - '0');
  return v;
}

}  // namespace

TEST(Parking, NineCarExampleIsValid) {
  const auto pf = make_parking(Path::dyck(kNinePath), digits("183457692"));
  EXPECT_EQ(pf.n(), 9);
  EXPECT_EQ(reading_word(pf), digits("675438291"));
}

TEST(Parking, ColumnDescentCitesLowerRow) {
  try {
    make_parking(Path::dyck(kNinePath), digits("831457692"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ColumnDescent);
    EXPECT_EQ(e.index(), 1);
  }
}

TEST(Parking, BadLabels) {
  EXPECT_THROW(make_parking(Path::dyck("NENE"), {1, 1}), Error);
  EXPECT_THROW(make_parking(Path::dyck("NENE"), {1, 2, 3}), Error);
}

TEST(Parking, Counts) {
  EXPECT_EQ(enumerate_parking(2, 1).size(), 3u);
  EXPECT_EQ(enumerate_parking(3, 1).size(), 16u);
  EXPECT_EQ(enumerate_parking(2, 2).size(), 5u);
  EXPECT_EQ(parking_count(4, 1), 125u);
  EXPECT_EQ(parking_count(3, 2), 49u);
}

TEST(Parking, StaircaseReadsTopDown) {
  const auto pf = make_parking(Path::dyck("NENENE"), {1, 2, 3});
  EXPECT_EQ(reading_word(pf), (std::vector<int>{3, 2, 1}));
  EXPECT_EQ(dinv_total(pf), 3);
}

TEST(Parking, TallColumnReadsTopFirst) {
  const auto pf = make_parking(Path::dyck("NNNEEE"), {1, 2, 3});
  EXPECT_EQ(reading_word(pf), (std::vector<int>{3, 2, 1}));
  EXPECT_EQ(dinv_total(pf), 0);
}

TEST(Parking, DinvTableSumsToTotal) {
  for (const auto& pf : enumerate_parking(4, 2)) {
    const auto t = dinv(pf);
    int sum = 0;
    for (const auto& [ij, c] : t.contributions) sum += c;
    ASSERT_EQ(sum, t.total);
    ASSERT_EQ(t.total, dinv_total(pf));
    ASSERT_EQ(dinv_expanded(pf).total, t.total);
  }
}

TEST(Parking, PermutationHelpers) {
  const std::vector<int> w{3, 1, 4, 2};
  EXPECT_EQ(descents(w), (std::vector<int>{1, 3}));
  EXPECT_EQ(major_index(w), 4);
  EXPECT_EQ(inverse_permutation(w), (std::vector<int>{2, 4, 1, 3}));
  EXPECT_EQ(descent_mask(w), 0b101u);
}

TEST(Parking, ShuffleForm) {
  EXPECT_TRUE(is_shuffle_form({3, 4, 2, 1}, 1));
  EXPECT_FALSE(is_shuffle_form({4, 2, 3, 1}, 2));
  EXPECT_TRUE(is_shuffle_form({3, 2, 4, 1}, 2));
  EXPECT_TRUE(is_shuffle_form({3, 2, 1}, 0));
  EXPECT_TRUE(is_shuffle_form({1, 2, 3}, 3));
}

TEST(Parking, SchroderRoundTrip) {
  for (int n = 1; n <= 5; ++n)
    for (int d = 0; d <= n; ++d)
      for (const auto& p : enumerate_paths(Schroder{n, d, 1})) {
        const auto pf = schroder_to_parking(p);
        ASSERT_TRUE(is_shuffle_form(reading_word(pf), d)) << p.word();
        ASSERT_EQ(parking_to_schroder(pf, d), p) << p.word();
      }
}

TEST(Parking, NotShuffleForm) {
  const auto pf = make_parking(Path::dyck(kNinePath), digits("183457692"));
  try {
    parking_to_schroder(pf, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotShuffleForm);
  }
}

TEST(Parking, DinvZeroCriterionAgrees) {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= (m == 1 ? 5 : 4); ++n)
      for (const auto& pf : enumerate_parking(n, m)) ASSERT_EQ(dinv_zero_criterion(pf), dinv_total(pf) == 0);
}

TEST(Parking, AreaFromMajOnDinvZero) {
  for (int m = 1; m <= 2; ++m)
    for (const auto& pf : enumerate_parking(4, m)) {
      if (dinv_total(pf) != 0) {
        EXPECT_THROW(area_from_maj(pf), Error);
        continue;
      }
      EXPECT_EQ(area_from_maj(pf), area(pf.path()));
    }
}

TEST(Parking, DinvOneDomains) {
  EXPECT_EQ(dinv_one_domain(make_parking(Path::dyck("NNEENE"), {1, 3, 2})), DinvOneDomain::Unlabeled);
  EXPECT_EQ(dinv_one_domain(make_parking(Path::dyck("NENEEE", 2), {2, 1})), DinvOneDomain::Labeled);
  const auto generic = make_parking(Path::dyck("NNEENENE"), {1, 4, 3, 2});
  EXPECT_EQ(dinv_one_domain(generic), DinvOneDomain::Unsupported);
  try {
    dinv_one_criterion(generic);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DomainUnsupported);
  }
}

TEST(Parking, LabeledDinvOneCriterionAtHigherSlope) {
  for (int m = 2; m <= 3; ++m)
    for (int n = 1; n <= 4; ++n)
      for (const auto& pf : enumerate_parking(n, m))
        ASSERT_EQ(dinv_one_criterion(pf), dinv_total(pf) == 1) << pf.path().word();
}

TEST(Parking, CounterexampleFigures) {
  const auto long_gap = make_parking(Path::dyck("NNNEEENE"), {1, 2, 3, 4});
  EXPECT_EQ(dinv_total(long_gap), 1);
  const auto short_gaps = make_parking(Path::dyck("NNENENEE"), {1, 2, 4, 3});
  EXPECT_EQ(dinv_total(short_gaps), 2);
  EXPECT_TRUE(dinv_one_two_bullets(short_gaps));
  const auto generic = make_parking(Path::dyck("NNEENENE"), {1, 4, 3, 2});
  EXPECT_EQ(reading_word(generic), (std::vector<int>{4, 2, 3, 1}));
  EXPECT_EQ(dinv_total(generic), 4);
}
