// Randomized properties at sizes beyond the exhaustive sweeps.
#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "brute.hpp"
#include "qtpaths/bijections.hpp"
#include "qtpaths/parking.hpp"
#include "qtpaths/qtpoly.hpp"

using namespace qtpaths;

namespace {

std::string random_dyck(std::mt19937& rng, int n, int m) {
  std::string w = std::string(n, 'N') + std::string(m * n, 'E');
  while (true) {
    std::shuffle(w.begin(), w.end(), rng);
    if (is_valid_word(w, Dyck{n, m})) return w;
  }
}

// Random permutation, then sorted inside each column.
std::vector<int> random_labels(std::mt19937& rng, const std::string& w) {
  const int n = static_cast<int>(std::count(w.begin(), w.end(), 'N'));
  std::vector<int> labels(n);
  std::iota(labels.begin(), labels.end(), 1);
  std::shuffle(labels.begin(), labels.end(), rng);
  int row = 0;
  for (std::size_t i = 0; i < w.size();) {
    if (w[i] != 'N') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < w.size() && w[j] == 'N') ++j;
    std::sort(labels.begin() + row, labels.begin() + row + int(j - i));
    row += int(j - i);
    i = j;
  }
  return labels;
}

std::string random_ne_d(std::mt19937& rng, int n) {
  std::string w;
  for (int i = 0; i < n; ++i) w += (rng() & 1) ? "NE" : "D";
  return w;
}

Tableau random_syt(std::mt19937& rng, int n) {
  std::vector<std::vector<int>> rows;
  for (int v = 1; v <= n; ++v) {
    std::vector<std::size_t> addable;
    for (std::size_t r = 0; r <= rows.size(); ++r) {
      const std::size_t len = r < rows.size() ? rows[r].size() : 0;
      if (r == 0 || rows[r - 1].size() > len) addable.push_back(r);
    }
    const std::size_t r = addable[rng() % addable.size()];
    if (r == rows.size()) rows.emplace_back();
    rows[r].push_back(v);
  }
  return Tableau(rows);
}

QtPolynomial random_poly(std::mt19937& rng) {
  QtPolynomial p;
  for (int i = 0; i < 6; ++i) p.add_term(int(rng() % 5), int(rng() % 5), int(rng() % 7) - 3);
  return p;
}

}  // namespace

TEST(Property, StatisticsAgreeWithNaiveOnLargePaths) {
  std::mt19937 rng(20261018);
  for (int trial = 0; trial < 400; ++trial) {
    const int m = 1 + trial % 3;
    const int n = 4 + trial % 7;
    const auto w = random_dyck(rng, n, m);
    const auto labels = random_labels(rng, w);
    const auto pf = make_parking(Path::dyck(w, m), labels);
    ASSERT_EQ(area(pf.path()), brute::area(w, m)) << w;
    ASSERT_EQ(dinv_total(pf), brute::dinv(w, labels, m)) << w;
    ASSERT_EQ(dinv_expanded(pf).total, dinv_total(pf)) << w;
    ASSERT_EQ(reading_word(pf), brute::reading_word(w, labels, m)) << w;
  }
}

TEST(Property, ReadingWordIsPermutation) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 10;
    const auto w = random_dyck(rng, n, 1);
    auto rw = reading_word(make_parking(Path::dyck(w), random_labels(rng, w)));
    std::sort(rw.begin(), rw.end());
    for (int i = 0; i < n; ++i) ASSERT_EQ(rw[i], i + 1);
  }
}

TEST(Property, PolynomialRingLaws) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    ASSERT_EQ((a + b) * c, a * c + b * c);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(a.swap_qt().swap_qt(), a);
    ASSERT_EQ((a * b).eval(2, -3), a.eval(2, -3) * b.eval(2, -3));
    const auto sym = a + a.swap_qt();
    ASSERT_EQ(schur_decompose(sym).reconstruct(), sym);
  }
}

TEST(Property, ConjugationInvolutionOnRandomTableaux) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + trial % 14;
    const auto t = random_syt(rng, n);
    ASSERT_EQ(conjugate(conjugate(t)), t);
    ASSERT_EQ(descent_data(t).maj + descent_data(conjugate(t)).maj, n * (n - 1) / 2);
  }
}

TEST(Property, HookMapsOnLargeHooks) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 10 + trial % 6;
    const int d = 1 + int(rng() % (n - 1));
    std::vector<int> pool(n - 1);
    std::iota(pool.begin(), pool.end(), 1);
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<int> des(pool.begin(), pool.begin() + (n - d));
    std::sort(des.begin(), des.end());
    const auto t = hook_from_descents(n, d, des);
    const auto dd = descent_data(t);
    ASSERT_EQ(map_R(map_M(t)), t);
    ASSERT_EQ(bounce(map_M(t)), dd.maj);
    ASSERT_EQ(map_T(map_S(t)), t);
    ASSERT_EQ(bounce(map_S(t)), dd.maj - dd.des);
    const int i = int(rng() % (n - d));
    const auto back = map_Q_inverse(map_Q(t, i));
    ASSERT_EQ(back.tableau, t);
    ASSERT_EQ(back.index, i);
  }
}

TEST(Property, ChainLadderOnLongWords) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = Path::schroder(random_ne_d(rng, 8 + trial % 8));
    const auto c = phi(g);
    const int b = bounce(g);
    ASSERT_EQ(int(c.steps.size()), b + 1);
    for (std::size_t i = 0; i < c.steps.size(); ++i) {
      ASSERT_EQ(area(c.steps[i]) + bounce(c.steps[i]), b);
      ASSERT_EQ(omega(c.steps[i]), c.steps[b - i]);
    }
    ASSERT_EQ(bounce(g), area(theta(g)) + (g.n() - g.diagonals()) * (g.n() - g.diagonals() - 1) / 2);
  }
}

TEST(Property, SchroderParkingRoundTripOnLargeWords) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 6 + trial % 6;
    const int d = int(rng() % (n + 1));
    std::string w = std::string(n - d, 'N') + std::string(n - d, 'E') + std::string(d, 'D');
    do std::shuffle(w.begin(), w.end(), rng);
    while (!is_valid_word(w, Schroder{n, d, 1}));
    const auto p = Path::schroder(w);
    const auto pf = schroder_to_parking(p);
    ASSERT_EQ(parking_to_schroder(pf, d), p);
    ASSERT_EQ(area(pf.path()), area(p));  // D -> NE keeps every row area
  }
}
