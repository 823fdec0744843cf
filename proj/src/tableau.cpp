#include "qtpaths/tableau.hpp"

#include <algorithm>
#include <functional>

#include "qtpaths/error.hpp"

namespace qtpaths {

int partition_size(const Partition& p) {
  int s = 0;
  for (int v : p) s += v;
  return s;
}

Partition conjugate(const Partition& p) {
  Partition c;
  if (p.empty()) return c;
  for (int j = 0; j < p.front(); ++j) {
    int len = 0;
    for (int v : p)
      if (v > j) ++len;
    c.push_back(len);
  }
  return c;
}

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int rest, int max_part) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(rest, max_part); k >= 1; --k) {
      cur.push_back(k);
      rec(rest - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

bool is_hook(const Partition& p) {
  for (std::size_t i = 1; i < p.size(); ++i)
    if (p[i] != 1) return false;
  return !p.empty();
}

Partition hook_shape(int n, int d) {
  if (d < 1 || d > n) throw Error(ErrorCode::BadShape, "hook needs 1 <= d <= n");
  Partition p{d};
  for (int i = 0; i < n - d; ++i) p.push_back(1);
  return p;
}

std::uint64_t syt_count(const Partition& shape) {
  const int n = partition_size(shape);
  const Partition conj = conjugate(shape);
  if (n > 30) throw Error(ErrorCode::LimitExceeded, "hook-length formula limited to n <= 30");
  unsigned __int128 num = 1, den = 1;
  for (int k = 2; k <= n; ++k) num *= k;
  for (std::size_t i = 0; i < shape.size(); ++i)
    for (int j = 0; j < shape[i]; ++j) den *= shape[i] - j - 1 + conj[j] - static_cast<int>(i);
  return static_cast<std::uint64_t>(num / den);
}

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].empty()) throw Error(ErrorCode::BadShape, "empty row");
    if (i > 0 && rows_[i].size() > rows_[i - 1].size())
      throw Error(ErrorCode::BadShape, "row lengths must weakly decrease upward");
    size_ += static_cast<int>(rows_[i].size());
  }
  row_of_.assign(size_ + 1, -1);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      int v = rows_[i][j];
      if (v < 1 || v > size_ || row_of_[v] != -1) throw Error(ErrorCode::BadShape, "entries must be 1..n once each");
      row_of_[v] = static_cast<int>(i);
      if (j > 0 && rows_[i][j - 1] >= v) throw Error(ErrorCode::BadShape, "rows must increase");
      if (i > 0 && rows_[i - 1][j] >= v) throw Error(ErrorCode::BadShape, "columns must increase upward");
    }
  }
}

Partition Tableau::shape() const {
  Partition p;
  for (const auto& r : rows_) p.push_back(static_cast<int>(r.size()));
  return p;
}

std::vector<Tableau> enumerate_syt(const Partition& shape, std::uint64_t limit) {
  const std::uint64_t expected = syt_count(shape);
  if (expected > limit)
    throw Error(ErrorCode::LimitExceeded, "SYT count " + std::to_string(expected) + " exceeds limit");
  const int n = partition_size(shape);
  std::vector<std::vector<int>> rows(shape.size());
  std::vector<std::vector<std::vector<int>>> raw;
  // Place 1..n in turn; trying rows bottom-first gives lexicographic order on
  // the entry->row sequence.
  std::function<void(int)> rec = [&](int k) {
    if (k > n) {
      raw.push_back(rows);
      return;
    }
    for (std::size_t r = 0; r < shape.size(); ++r) {
      if (static_cast<int>(rows[r].size()) < shape[r] && (r == 0 || rows[r - 1].size() > rows[r].size())) {
        rows[r].push_back(k);
        rec(k + 1);
        rows[r].pop_back();
      }
    }
  };
  rec(1);
  std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) {
    std::vector<int> fa, fb;
    for (const auto& r : a) fa.insert(fa.end(), r.begin(), r.end());
    for (const auto& r : b) fb.insert(fb.end(), r.begin(), r.end());
    return fa < fb;
  });
  std::vector<Tableau> out;
  out.reserve(raw.size());
  for (auto& r : raw) out.emplace_back(std::move(r));
  return out;
}

DescentData descent_data(const Tableau& t) {
  DescentData d;
  for (int i = 1; i < t.size(); ++i) {
    if (t.row_of(i + 1) > t.row_of(i)) {
      d.set.push_back(i);
      d.maj += i;
    }
  }
  d.des = static_cast<int>(d.set.size());
  return d;
}

std::uint32_t descent_mask(const Tableau& t) {
  std::uint32_t mask = 0;
  for (int i = 1; i < t.size(); ++i)
    if (t.row_of(i + 1) > t.row_of(i)) mask |= 1u << (i - 1);
  return mask;
}

Tableau conjugate(const Tableau& t) {
  const auto& rows = t.rows();
  std::vector<std::vector<int>> out;
  if (rows.empty()) return Tableau();
  for (std::size_t j = 0; j < rows[0].size(); ++j) {
    std::vector<int> col;
    for (const auto& r : rows)
      if (j < r.size()) col.push_back(r[j]);
    out.push_back(std::move(col));
  }
  return Tableau(std::move(out));
}

Tableau hook_from_descents(int n, int d, const std::vector<int>& descents) {
  if (d < 1 || d > n) throw Error(ErrorCode::BadShape, "hook needs 1 <= d <= n");
  std::vector<int> ds = descents;
  std::sort(ds.begin(), ds.end());
  ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
  if (static_cast<int>(ds.size()) != n - d || ds.size() != descents.size())
    throw Error(ErrorCode::BadCardinality, "hook (d,1^{n-d}) needs exactly n-d distinct descents");
  for (int i : ds)
    if (i < 1 || i >= n) throw Error(ErrorCode::BadCardinality, "descents must lie in 1..n-1");
  std::vector<char> in_column(n + 1, 0);
  for (int i : ds) in_column[i + 1] = 1;
  std::vector<std::vector<int>> rows(1, std::vector<int>{1});
  for (int v = 2; v <= n; ++v) {
    if (in_column[v]) rows.push_back({v});
    else rows[0].push_back(v);
  }
  return Tableau(std::move(rows));
}

}  // namespace qtpaths
