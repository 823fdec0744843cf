#include "qtpaths/nabla.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <mutex>
#include <numeric>

#include "qtpaths/error.hpp"
#include "qtpaths/parking.hpp"
#include "qtpaths/path.hpp"

namespace qtpaths {
namespace {

struct PathContext {
  std::vector<int> areas;
  std::vector<int> order;  // rows in reading order
  int area = 0;
};

PathContext context_for(const Path& p) {
  PathContext c;
  c.areas = row_areas(p);
  c.area = std::accumulate(c.areas.begin(), c.areas.end(), 0);
  c.order.resize(c.areas.size());
  std::iota(c.order.begin(), c.order.end(), 0);
  std::sort(c.order.begin(), c.order.end(), [&](int i, int j) {
    if (c.areas[i] != c.areas[j]) return c.areas[i] > c.areas[j];
    return i > j;
  });
  return c;
}

void check_limit(int n, int m, std::uint64_t limit) {
  if (n < 1 || m < 1) throw Error(ErrorCode::OutOfRange, "need n >= 1 and m >= 1");
  const std::uint64_t count = parking_count(n, m);
  if (count > limit)
    throw Error(ErrorCode::LimitExceeded, "oracle would visit " + std::to_string(count) +
                                              " parking functions (limit " + std::to_string(limit) + ")");
}

// Adds every labeling of one path into acc (indexed by descent mask).
void accumulate_path(const Path& p, int m, std::vector<QtPolynomial>& acc) {
  const PathContext c = context_for(p);
  const int n = p.n();
  std::vector<int> read(n), pos(n);
  for_each_labeling(p, [&](const std::vector<int>& w) {
    // read^{-1}: position in the reading word of each value
    for (int r = 0; r < n; ++r) pos[w[c.order[r]] - 1] = r;
    std::uint32_t mask = 0;
    for (int v = 0; v + 1 < n; ++v)
      if (pos[v] > pos[v + 1]) mask |= 1u << v;
    acc[mask].add_term(dinv_total(c.areas, w, m), c.area, 1);
  });
}

QsymExpansion to_qsym(int n, std::vector<QtPolynomial>&& acc) {
  QsymExpansion f;
  f.n = n;
  for (std::uint32_t mask = 0; mask < acc.size(); ++mask)
    if (!acc[mask].is_zero()) f.terms.emplace(mask, std::move(acc[mask]));
  return f;
}

std::uint32_t composition_mask(const Partition& lambda) {
  std::uint32_t mask = 0;
  int s = 0;
  for (std::size_t i = 0; i + 1 < lambda.size(); ++i) {
    s += lambda[i];
    mask |= 1u << (s - 1);
  }
  return mask;
}

}  // namespace

QtPolynomial SchurXExpansion::coeff(const Partition& lambda) const {
  auto it = coeffs.find(lambda);
  return it == coeffs.end() ? QtPolynomial{} : it->second;
}

QsymExpansion nabla_qsym_serial(int n, int m, std::uint64_t limit) {
  check_limit(n, m, limit);
  std::vector<QtPolynomial> acc(std::size_t{1} << (n - 1));
  for (const auto& p : enumerate_paths(Dyck{n, m})) accumulate_path(p, m, acc);
  return to_qsym(n, std::move(acc));
}

QsymExpansion nabla_qsym(int n, int m, std::uint64_t limit) {
  check_limit(n, m, limit);
  const auto paths = enumerate_paths(Dyck{n, m});
  const std::size_t width = std::size_t{1} << (n - 1);
  std::vector<std::vector<QtPolynomial>> partial;
#pragma omp parallel
  {
#pragma omp single
    partial.assign(omp_get_num_threads(), std::vector<QtPolynomial>(width));
    auto& mine = partial[omp_get_thread_num()];
#pragma omp for schedule(dynamic, 4)
    for (std::size_t i = 0; i < paths.size(); ++i) accumulate_path(paths[i], m, mine);
  }
  std::vector<QtPolynomial> acc(width);
  for (auto& part : partial)
    for (std::size_t mask = 0; mask < width; ++mask) acc[mask] += part[mask];
  return to_qsym(n, std::move(acc));
}

SchurXExpansion schur_from_qsym(const QsymExpansion& f) {
  const int n = f.n;
  std::map<std::uint32_t, QtPolynomial> rest = f.terms;
  SchurXExpansion out;
  out.n = n;
  for (const auto& lambda : partitions(n)) {
    auto it = rest.find(composition_mask(lambda));
    if (it == rest.end()) continue;
    const QtPolynomial c = it->second;
    std::map<std::uint32_t, std::int64_t> fan;
    for (const auto& t : enumerate_syt(lambda)) ++fan[descent_mask(t)];
    for (const auto& [mask, mult] : fan) {
      auto& slot = rest[mask];
      slot -= c * mult;
      if (slot.is_zero()) rest.erase(mask);
    }
    out.coeffs.emplace(lambda, c);
  }
  if (!rest.empty()) {
    throw Error(ErrorCode::NonZeroResidual, "fundamental expansion is not Schur-expandable (residual at mask " +
                                                std::to_string(rest.begin()->first) + ")");
  }
  return out;
}

SchurXExpansion nabla_oracle(int n, int m, std::uint64_t limit) { return schur_from_qsym(nabla_qsym(n, m, limit)); }

SchurXExpansion nabla_oracle_serial(int n, int m, std::uint64_t limit) {
  return schur_from_qsym(nabla_qsym_serial(n, m, limit));
}

const SchurXExpansion& nabla_cached(int n, int m) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, SchurXExpansion> memo;
  {
    std::lock_guard lock(mu);
    auto it = memo.find({n, m});
    if (it != memo.end()) return it->second;
  }
  SchurXExpansion e = nabla_oracle(n, m, kVerifyNablaLimit);
  std::lock_guard lock(mu);
  return memo.emplace(std::pair{n, m}, std::move(e)).first->second;
}

Partition hook_partition(int n, int d) {
  if (d < 0 || d > n - 1) throw Error(ErrorCode::OutOfRange, "hook index needs 0 <= d <= n-1");
  return hook_shape(n, d + 1);
}

QtPolynomial sch_generating(int n, int d, bool ending_ne) {
  QtPolynomial g;
  for (const auto& p : enumerate_paths(Schroder{n, d, 1})) {
    const auto& w = p.word();
    if (ending_ne && !(w.size() >= 2 && w.compare(w.size() - 2, 2, "NE") == 0)) continue;
    g.add_term(bounce(p), area(p), 1);
  }
  return g;
}

QtPolynomial sch_generating_top_north(int n, int d) {
  QtPolynomial g;
  for (const auto& p : enumerate_schroder_top_north(n, d)) g.add_term(bounce(p), area(p), 1);
  return g;
}

QtPolynomial shuffle_bracket(int n, int m, int k) {
  if (k < 0 || k > n) throw Error(ErrorCode::OutOfRange, "need 0 <= k <= n");
  QtPolynomial g;
  for (const auto& p : enumerate_paths(Dyck{n, m})) {
    const PathContext c = context_for(p);
    std::vector<char> bottom(n, 1);
    for (int r = 1; r < n; ++r) {
      // rows r-1 and r share a column when the N steps are adjacent
      std::size_t seen = 0, k1 = 0;
      for (; k1 < p.word().size(); ++k1)
        if (p.word()[k1] == 'N' && ++seen == static_cast<std::size_t>(r)) break;
      bottom[r] = !(k1 + 1 < p.word().size() && p.word()[k1 + 1] == 'N');
    }
    std::vector<int> w(n);
    for (std::uint32_t big = 0; big < (1u << n); ++big) {
      if (std::popcount(big) != k) continue;
      int next_big = n - k + 1, next_small = n - k;
      for (int r : c.order) w[r] = (big >> r) & 1u ? next_big++ : next_small--;
      bool ok = true;
      for (int r = 1; r < n && ok; ++r)
        if (!bottom[r] && w[r - 1] > w[r]) ok = false;
      if (ok) g.add_term(dinv_total(c.areas, w, m), c.area, 1);
    }
  }
  return g;
}

QtPolynomial alternating_hook_bracket(int n, int m, int d) {
  if (d < 0 || d > n - 1) throw Error(ErrorCode::OutOfRange, "need 0 <= d <= n-1");
  QtPolynomial g;
  for (int k = d + 1; k <= n; ++k) {
    QtPolynomial term = shuffle_bracket(n, m, k);
    if ((k - d - 1) % 2 == 0) g += term;
    else g -= term;
  }
  return g;
}

}  // namespace qtpaths
