#include "qtpaths/path.hpp"

#include <map>
#include <tuple>

#include "qtpaths/error.hpp"

namespace qtpaths {
namespace {

struct Counts {
  int n_north = 0;
  int n_east = 0;
  int n_diag = 0;
  int m = 1;
  bool diagonal_check = true;
};

Counts counts_for(const PathKind& kind) {
  Counts c;
  if (const auto* r = std::get_if<Rect>(&kind)) {
    if (r->n < 0 || r->k < 0 || r->k > r->n) throw Error(ErrorCode::OutOfRange, "rect needs 0 <= k <= n");
    c.n_north = r->n - r->k;
    c.n_east = r->k;
    c.diagonal_check = false;
  } else if (const auto* dy = std::get_if<Dyck>(&kind)) {
    if (dy->n < 0 || dy->m < 1) throw Error(ErrorCode::OutOfRange, "dyck needs n >= 0, m >= 1");
    c.n_north = dy->n;
    c.n_east = dy->m * dy->n;
    c.m = dy->m;
  } else {
    const auto& s = std::get<Schroder>(kind);
    if (s.n < 0 || s.m < 1 || s.d < 0 || s.d > s.n || s.d > s.m * s.n)
      throw Error(ErrorCode::OutOfRange, "schroder needs 0 <= d <= n, m >= 1");
    c.n_north = s.n - s.d;
    c.n_east = s.m * s.n - s.d;
    c.n_diag = s.d;
    c.m = s.m;
  }
  return c;
}

void step(char c, int& x, int& y) {
  if (c == 'N') {
    ++y;
  } else if (c == 'E') {
    ++x;
  } else {
    ++x;
    ++y;
  }
}

void enumerate_rec(const Counts& c, std::string& cur, int rn, int re, int rd, int x, int y,
                   const PathKind& kind, std::vector<Path>& out) {
  if (rn == 0 && re == 0 && rd == 0) {
    out.push_back(Path::parse(cur, kind));
    return;
  }
  if (rd > 0) {
    cur.push_back('D');
    enumerate_rec(c, cur, rn, re, rd - 1, x + 1, y + 1, kind, out);
    cur.pop_back();
  }
  if (re > 0 && (!c.diagonal_check || c.m * y >= x + 1)) {
    cur.push_back('E');
    enumerate_rec(c, cur, rn, re - 1, rd, x + 1, y, kind, out);
    cur.pop_back();
  }
  if (rn > 0) {
    cur.push_back('N');
    enumerate_rec(c, cur, rn - 1, re, rd, x, y + 1, kind, out);
    cur.pop_back();
  }
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  return s < a ? UINT64_MAX : s;
}

}  // namespace

int Path::n() const {
  return std::visit([](const auto& k) { return k.n; }, kind_);
}

int Path::m() const {
  if (const auto* dy = std::get_if<Dyck>(&kind_)) return dy->m;
  if (const auto* s = std::get_if<Schroder>(&kind_)) return s->m;
  return 1;
}

int Path::diagonals() const {
  if (const auto* s = std::get_if<Schroder>(&kind_)) return s->d;
  return 0;
}

void validate_word(std::string_view word, const PathKind& kind) {
  const Counts c = counts_for(kind);
  int nn = 0, ne = 0, nd = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    char ch = word[i];
    if (ch == 'N') {
      ++nn;
    } else if (ch == 'E') {
      ++ne;
    } else if (ch == 'D') {
      ++nd;
    } else {
      throw Error(ErrorCode::BadLetter, std::string("unexpected letter '") + ch + "'", static_cast<long>(i));
    }
  }
  if (nn != c.n_north || ne != c.n_east || nd != c.n_diag) {
    throw Error(ErrorCode::WrongStepCounts,
                "expected N=" + std::to_string(c.n_north) + " E=" + std::to_string(c.n_east) +
                    " D=" + std::to_string(c.n_diag) + ", got N=" + std::to_string(nn) +
                    " E=" + std::to_string(ne) + " D=" + std::to_string(nd));
  }
  if (!c.diagonal_check) return;
  int x = 0, y = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    step(word[i], x, y);
    if (c.m * y < x) {
      throw Error(ErrorCode::PrefixBelowDiagonal,
                  "prefix of length " + std::to_string(i + 1) + " ends below the diagonal",
                  static_cast<long>(i + 1));
    }
  }
}

bool is_valid_word(std::string_view word, const PathKind& kind) {
  try {
    validate_word(word, kind);
    return true;
  } catch (const Error&) {
    return false;
  }
}

Path Path::parse(std::string_view text, const PathKind& kind) {
  validate_word(text, kind);
  return Path(std::string(text), kind);
}

Path Path::schroder(std::string_view text, int m) {
  int nn = 0, nd = 0;
  for (char ch : text) {
    if (ch == 'N') ++nn;
    if (ch == 'D') ++nd;
  }
  return parse(text, Schroder{nn + nd, nd, m});
}

Path Path::dyck(std::string_view text, int m) {
  int nn = 0;
  for (char ch : text)
    if (ch == 'N') ++nn;
  return parse(text, Dyck{nn, m});
}

Path parse_path(std::string_view text, const PathKind& kind) { return Path::parse(text, kind); }

std::uint64_t count_paths(const PathKind& kind) {
  const Counts c = counts_for(kind);
  // ways[(n,e,d)] = completions from a prefix with these letter counts
  std::map<std::tuple<int, int, int>, std::uint64_t> memo;
  auto rec = [&](auto&& self, int un, int ue, int ud) -> std::uint64_t {
    if (un == c.n_north && ue == c.n_east && ud == c.n_diag) return 1;
    auto key = std::make_tuple(un, ue, ud);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const int x = ue + ud, y = un + ud;
    std::uint64_t total = 0;
    if (ud < c.n_diag) total = sat_add(total, self(self, un, ue, ud + 1));
    if (ue < c.n_east && (!c.diagonal_check || c.m * y >= x + 1)) total = sat_add(total, self(self, un, ue + 1, ud));
    if (un < c.n_north) total = sat_add(total, self(self, un + 1, ue, ud));
    memo[key] = total;
    return total;
  };
  return rec(rec, 0, 0, 0);
}

std::vector<Path> enumerate_paths(const PathKind& kind, std::uint64_t limit) {
  const std::uint64_t expected = count_paths(kind);
  if (expected > limit) {
    throw Error(ErrorCode::LimitExceeded,
                "enumeration would produce " + std::to_string(expected) + " paths (limit " +
                    std::to_string(limit) + ")");
  }
  const Counts c = counts_for(kind);
  std::vector<Path> out;
  out.reserve(expected);
  std::string cur;
  enumerate_rec(c, cur, c.n_north, c.n_east, c.n_diag, 0, 0, kind, out);
  return out;
}

std::vector<Path> enumerate_schroder_tilde(int n, int d) {
  std::vector<Path> out;
  for (auto& p : enumerate_paths(Schroder{n, d, 1})) {
    const auto& w = p.word();
    if (w.size() >= 2 && w.compare(w.size() - 2, 2, "NE") == 0) out.push_back(std::move(p));
  }
  return out;
}

std::vector<Path> enumerate_schroder_top_north(int n, int d) {
  std::vector<Path> out;
  for (auto& p : enumerate_paths(Schroder{n, d, 1})) {
    const auto& w = p.word();
    auto pos = w.find_last_not_of('E');
    if (pos != std::string::npos && w[pos] == 'N' && pos + 1 < w.size()) out.push_back(std::move(p));
  }
  return out;
}

std::vector<int> row_areas(const Path& p) {
  std::vector<int> rows;
  const int m = p.m();
  int x = 0, y = 0;
  for (char ch : p.word()) {
    if (ch != 'E') rows.push_back(m * y - x);
    step(ch, x, y);
  }
  return rows;
}

int area(const Path& p) {
  if (p.is_rect()) {
    int y = 0, total = 0;
    for (char ch : p.word()) {
      if (ch == 'N') ++y;
      else total += y;
    }
    return total;
  }
  int total = 0;
  for (int a : row_areas(p)) total += a;
  return total;
}

TouchDecomposition touch(const Path& p) {
  TouchDecomposition t;
  const int m = p.m();
  int x = 0, y = 0, rows = 0;
  std::string cur;
  for (char ch : p.word()) {
    cur.push_back(ch);
    if (ch != 'E') ++rows;
    step(ch, x, y);
    if (m * y == x) {
      t.factors.push_back(cur);
      t.sizes.push_back(rows);
      cur.clear();
      rows = 0;
    }
  }
  return t;
}

namespace {

// Bounce path of an m=1 Dyck word: heights y_0=0 < y_1 < ... < y_k = n.
std::vector<int> bounce_heights(std::string_view g) {
  std::vector<int> north_before_east;  // #N before the (x+1)-th E
  int nn = 0;
  for (char ch : g) {
    if (ch == 'N') ++nn;
    else if (ch == 'E') north_before_east.push_back(nn);
  }
  std::vector<int> heights{0};
  while (heights.back() < nn) heights.push_back(north_before_east[heights.back()]);
  return heights;
}

}  // namespace

BounceData bounce_dyck(const Path& p) {
  if (p.m() != 1 || p.diagonals() != 0 || p.is_rect())
    throw Error(ErrorCode::PreconditionFailed, "bounce_dyck needs an m=1 Dyck word");
  const int n = p.n();
  BounceData b;
  auto h = bounce_heights(p.word());
  for (auto it = h.rbegin(); it != h.rend(); ++it) b.bounce_vector.push_back(n - *it);
  int sum = 0;
  for (int v : b.bounce_vector) sum += v;
  b.bounce = n == 0 ? 0 : sum - n;
  for (std::size_t j = 0; j + 1 < h.size(); ++j) b.peaks.push_back({h[j], h[j + 1]});
  return b;
}

BounceData bounce_data(const Path& p) {
  if (p.m() != 1 || p.is_rect())
    throw Error(ErrorCode::PreconditionFailed, "bounce needs an m=1 Schroder word");
  BounceData g = bounce_dyck(gamma(p));
  BounceData b;
  b.bounce_vector = g.bounce_vector;
  // A peak of the gamma path starting at x sits at the start of its (x+1)-th E;
  // locate the same E inside p.
  std::vector<char> is_peak_east;
  for (const auto& pk : g.peaks) {
    if (static_cast<std::size_t>(pk.x) >= is_peak_east.size()) is_peak_east.resize(pk.x + 1, 0);
    is_peak_east[pk.x] = 1;
  }
  std::vector<int> diag_bottoms;
  int x = 0, y = 0, east_index = 0;
  for (char ch : p.word()) {
    if (ch == 'E') {
      if (static_cast<std::size_t>(east_index) < is_peak_east.size() && is_peak_east[east_index])
        b.peaks.push_back({x, y});
      ++east_index;
    } else if (ch == 'D') {
      diag_bottoms.push_back(y);
    }
    step(ch, x, y);
  }
  for (const auto& pk : b.peaks)
    for (int bottom : diag_bottoms)
      if (bottom >= pk.y) ++b.numph;
  b.bounce = g.bounce + b.numph;
  return b;
}

std::vector<Point> peaks(const Path& p) { return bounce_data(p).peaks; }
int numph(const Path& p) { return bounce_data(p).numph; }
int bounce_schroder(const Path& p) { return bounce_data(p).bounce; }

Path gamma(const Path& p) {
  std::string w;
  for (char ch : p.word())
    if (ch != 'D') w.push_back(ch);
  return Path::parse(w, Dyck{p.n() - p.diagonals(), p.m()});
}

int column_count(const Path& p) {
  const auto& w = p.word();
  int count = 0;
  std::size_t i = 0;
  while (i < w.size()) {
    if (w[i] != 'N') {
      ++i;
      continue;
    }
    while (i < w.size() && w[i] == 'N') ++i;
    if (i < w.size() && w[i] == 'E') {
      ++count;
      while (i < w.size() && w[i] == 'E') ++i;
    }
  }
  return count;
}

std::vector<int> north_gaps(std::string_view word) {
  std::vector<int> gaps;
  int run = -1;  // -1 until the first N is seen
  for (char ch : word) {
    if (ch == 'N') {
      if (run >= 0) gaps.push_back(run);
      run = 0;
    } else if (ch == 'E' && run >= 0) {
      ++run;
    }
  }
  return gaps;
}

}  // namespace qtpaths
