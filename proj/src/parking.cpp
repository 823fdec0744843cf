#include "qtpaths/parking.hpp"

#include <algorithm>
#include <numeric>

#include "qtpaths/error.hpp"

namespace qtpaths {
namespace {

// Row index (0-based) where each maximal N-run starts, and its length.
std::vector<std::pair<int, int>> north_runs(std::string_view word) {
  std::vector<std::pair<int, int>> runs;
  int row = 0;
  bool in_run = false;
  for (char ch : word) {
    if (ch == 'N') {
      if (!in_run) runs.push_back({row, 0});
      ++runs.back().second;
      in_run = true;
      ++row;
    } else {
      in_run = false;
      if (ch == 'D') ++row;
    }
  }
  return runs;
}

// column_start[i] is true when row i is the bottom of its column.
std::vector<char> column_bottoms(std::string_view word, int n) {
  std::vector<char> bottom(n, 1);
  for (auto [start, len] : north_runs(word))
    for (int r = start + 1; r < start + len; ++r) bottom[r] = 0;
  return bottom;
}

bool is_permutation_of_1n(const std::vector<int>& w) {
  std::vector<char> seen(w.size() + 1, 0);
  for (int v : w) {
    if (v < 1 || v > static_cast<int>(w.size()) || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

int binom2(int n) { return n * (n - 1) / 2; }

}  // namespace

ParkingFunction::ParkingFunction(Path path, std::vector<int> labels)
    : path_(std::move(path)), labels_(std::move(labels)) {}

ParkingFunction make_parking(const Path& path, std::vector<int> labels) {
  if (!std::holds_alternative<Dyck>(path.kind()))
    throw Error(ErrorCode::PreconditionFailed, "parking functions live on Dyck paths");
  const int n = path.n();
  if (static_cast<int>(labels.size()) != n || !is_permutation_of_1n(labels))
    throw Error(ErrorCode::BadLabels, "labels must be a permutation of 1..n");
  auto bottom = column_bottoms(path.word(), n);
  for (int r = 1; r < n; ++r) {
    if (!bottom[r] && labels[r - 1] > labels[r]) {
      throw Error(ErrorCode::ColumnDescent,
                  "rows " + std::to_string(r) + " and " + std::to_string(r + 1) + " carry " +
                      std::to_string(labels[r - 1]) + std::to_string(labels[r]),
                  r);
    }
  }
  return ParkingFunction(path, std::move(labels));
}

std::uint64_t parking_count(int n, int m) {
  if (n <= 0) return 1;
  unsigned __int128 v = 1;
  for (int i = 0; i < n - 1; ++i) {
    v *= static_cast<unsigned>(m * n + 1);
    if (v > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(v);
}

void for_each_labeling(const Path& dyck_path, const std::function<void(const std::vector<int>&)>& f) {
  const int n = dyck_path.n();
  auto bottom = column_bottoms(dyck_path.word(), n);
  std::vector<int> labels(n, 0);
  std::vector<char> used(n + 1, 0);
  auto rec = [&](auto&& self, int row) -> void {
    if (row == n) {
      f(labels);
      return;
    }
    int lo = bottom[row] ? 1 : labels[row - 1] + 1;
    for (int v = lo; v <= n; ++v) {
      if (used[v]) continue;
      used[v] = 1;
      labels[row] = v;
      self(self, row + 1);
      used[v] = 0;
    }
  };
  rec(rec, 0);
}

std::vector<ParkingFunction> enumerate_parking(int n, int m, std::uint64_t limit) {
  const std::uint64_t expected = parking_count(n, m);
  if (expected > limit)
    throw Error(ErrorCode::LimitExceeded, "enumeration would produce " + std::to_string(expected) +
                                              " parking functions (limit " + std::to_string(limit) + ")");
  std::vector<ParkingFunction> out;
  out.reserve(expected);
  for (const auto& p : enumerate_paths(Dyck{n, m})) {
    for_each_labeling(p, [&](const std::vector<int>& w) { out.emplace_back(p, w); });
  }
  return out;
}

std::vector<int> reading_word(const ParkingFunction& pf) {
  auto a = row_areas(pf.path());
  const int n = pf.n();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    if (a[i] != a[j]) return a[i] > a[j];
    return i > j;
  });
  std::vector<int> read;
  read.reserve(n);
  for (int i : order) read.push_back(pf.labels()[i]);
  return read;
}

int dinv_total(const std::vector<int>& a, const std::vector<int>& w, int m) {
  const int n = static_cast<int>(w.size());
  int total = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (w[i] < w[j]) total += std::max(0, m - std::abs(a[i] - a[j]));
      else total += std::max(0, m - std::abs(a[j] - a[i] + 1));
    }
  }
  return total;
}

DinvTable dinv(const ParkingFunction& pf) {
  auto a = row_areas(pf.path());
  const auto& w = pf.labels();
  const int n = pf.n(), m = pf.m();
  DinvTable t;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      int c = w[i] < w[j] ? std::max(0, m - std::abs(a[i] - a[j])) : std::max(0, m - std::abs(a[j] - a[i] + 1));
      if (c != 0) t.contributions[{i + 1, j + 1}] = c;
      t.total += c;
    }
  }
  return t;
}

DinvTable dinv_expanded(const ParkingFunction& pf) {
  const int m = pf.m(), n = pf.n();
  std::string big;
  std::vector<int> owner;  // original row of each expanded row
  int row = 0;
  for (char ch : pf.path().word()) {
    if (ch == 'N') {
      for (int t = 0; t < m; ++t) {
        big.push_back('N');
        owner.push_back(row);
      }
      ++row;
    } else {
      big.push_back(ch);
    }
  }
  auto a = row_areas(Path::parse(big, Dyck{m * n, 1}));
  const auto& w = pf.labels();
  DinvTable t;
  const int rows = m * n;
  for (int u = 0; u < rows; ++u) {
    for (int v = u + 1; v < rows; ++v) {
      int i = owner[u], j = owner[v];
      if (i == j) continue;
      bool hit = (w[i] < w[j] && a[u] == a[v]) || (w[i] > w[j] && a[u] == a[v] + 1);
      if (hit) {
        ++t.contributions[{i + 1, j + 1}];
        ++t.total;
      }
    }
  }
  return t;
}

std::vector<int> descents(const std::vector<int>& w) {
  std::vector<int> d;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) d.push_back(static_cast<int>(i + 1));
  return d;
}

int major_index(const std::vector<int>& w) {
  int s = 0;
  for (int i : descents(w)) s += i;
  return s;
}

std::vector<int> inverse_permutation(const std::vector<int>& w) {
  std::vector<int> inv(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) inv[w[i] - 1] = static_cast<int>(i + 1);
  return inv;
}

std::uint32_t descent_mask(const std::vector<int>& w) {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) mask |= 1u << i;
  return mask;
}

bool is_shuffle_form(const std::vector<int>& read, int d) {
  const int n = static_cast<int>(read.size());
  if (d < 0 || d > n) return false;
  int next_big = n - d + 1, next_small = n - d;
  for (int v : read) {
    if (v > n - d) {
      if (v != next_big) return false;
      ++next_big;
    } else {
      if (v != next_small) return false;
      --next_small;
    }
  }
  return true;
}

std::optional<int> shuffle_degree(const ParkingFunction& pf) {
  auto read = reading_word(pf);
  for (int d = 0; d <= pf.n(); ++d)
    if (is_shuffle_form(read, d)) return d;
  return std::nullopt;
}

ParkingFunction schroder_to_parking(const Path& p) {
  const int n = p.n(), d = p.diagonals(), m = p.m();
  std::string word;
  std::vector<char> from_diag;
  for (char ch : p.word()) {
    if (ch == 'D') {
      word += "NE";
      from_diag.push_back(1);
    } else {
      word.push_back(ch);
      if (ch == 'N') from_diag.push_back(0);
    }
  }
  Path dy = Path::parse(word, Dyck{n, m});
  auto a = row_areas(dy);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    if (a[i] != a[j]) return a[i] > a[j];
    return i > j;
  });
  std::vector<int> labels(n);
  int next_big = n - d + 1, next_small = n - d;
  for (int i : order) labels[i] = from_diag[i] ? next_big++ : next_small--;
  return make_parking(dy, std::move(labels));
}

Path parking_to_schroder(const ParkingFunction& pf, int d) {
  const int n = pf.n();
  if (!is_shuffle_form(reading_word(pf), d))
    throw Error(ErrorCode::NotShuffleForm, "reading word is not a shuffle with " + std::to_string(d) + " big labels");
  std::string out;
  const auto& word = pf.path().word();
  int row = 0;
  for (std::size_t k = 0; k < word.size(); ++k) {
    char ch = word[k];
    if (ch == 'N') {
      if (pf.labels()[row] > n - d) {
        if (k + 1 >= word.size() || word[k + 1] != 'E')
          throw Error(ErrorCode::NotShuffleForm, "big label not followed by an east step", row + 1);
        out.push_back('D');
        ++k;
      } else {
        out.push_back('N');
      }
      ++row;
    } else {
      out.push_back(ch);
    }
  }
  return Path::parse(out, Schroder{n, d, pf.m()});
}

bool dinv_zero_criterion(const ParkingFunction& pf) {
  const auto& word = pf.path().word();
  const auto& w = pf.labels();
  const int n = pf.n();
  // all east runs before the final one have length at most 1
  auto end = word.find_last_not_of('E');
  if (end != std::string::npos && word.substr(0, end + 1).find("EE") != std::string::npos) return false;
  // lines carrying an east step, other than n, are the descents of w
  std::vector<int> lines;
  int row = 0;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (word[k] == 'N') {
      ++row;
      if (k + 1 < word.size() && word[k + 1] == 'E' && row != n) lines.push_back(row);
    }
  }
  if (lines != descents(w)) return false;
  auto read = reading_word(pf);
  return std::equal(read.begin(), read.end(), w.rbegin());
}

DinvOneDomain dinv_one_domain(const ParkingFunction& pf) {
  auto read = reading_word(pf);
  const bool decreasing = std::is_sorted(read.rbegin(), read.rend());
  if (decreasing) return DinvOneDomain::Unlabeled;
  if (pf.m() >= 2) return DinvOneDomain::Labeled;
  if (shuffle_degree(pf)) return DinvOneDomain::SchroderForm;
  return DinvOneDomain::Unsupported;
}

bool dinv_one_two_bullets(const ParkingFunction& pf) {
  auto gaps = north_gaps(pf.path().word());
  const int des = static_cast<int>(descents(pf.labels()).size());
  const int cols = column_count(pf.path());
  const bool all_small = std::all_of(gaps.begin(), gaps.end(), [](int p) { return p <= 1; });
  if (all_small && cols == des + 2) return true;
  const auto twos = std::count(gaps.begin(), gaps.end(), 2);
  const bool rest_small = std::all_of(gaps.begin(), gaps.end(), [](int p) { return p <= 2; });
  return twos == 1 && rest_small && cols == des + 1;
}

bool dinv_one_schroder_criterion(const ParkingFunction& pf, int d) {
  if (dinv_one_two_bullets(pf)) return true;
  const int n = pf.n();
  if (n < 2) return false;
  auto gaps = north_gaps(pf.path().word());
  const auto& w = pf.labels();
  auto big = [&](int v) { return v > n - d; };
  if (gaps.back() <= 2) return false;
  for (std::size_t i = 0; i + 1 < gaps.size(); ++i)
    if (gaps[i] > 1) return false;
  if (!big(w[n - 1])) return false;
  const int des = static_cast<int>(descents(w).size());
  const int cols = column_count(pf.path());
  return big(w[n - 2]) ? cols == des + 1 : cols == des + 2;
}

bool dinv_one_criterion(const ParkingFunction& pf) {
  switch (dinv_one_domain(pf)) {
    case DinvOneDomain::Labeled:
    case DinvOneDomain::Unlabeled:
      return dinv_one_two_bullets(pf);
    case DinvOneDomain::SchroderForm:
      return dinv_one_schroder_criterion(pf, *shuffle_degree(pf));
    case DinvOneDomain::Unsupported:
      break;
  }
  throw Error(ErrorCode::DomainUnsupported, "m=1 labels outside the shuffle form have no dinv=1 criterion");
}

int area_from_maj(const ParkingFunction& pf) {
  if (dinv_total(pf) != 0) throw Error(ErrorCode::PreconditionFailed, "area formula needs dinv = 0");
  const auto& w = pf.labels();
  const int n = pf.n();
  return pf.m() * binom2(n) - static_cast<int>(descents(w).size()) * n + major_index(w);
}

}  // namespace qtpaths
