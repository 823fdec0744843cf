#include "qtpaths/bijections.hpp"

#include <algorithm>
#include <set>

#include "qtpaths/error.hpp"
#include "qtpaths/nabla.hpp"
#include "qtpaths/parking.hpp"

namespace qtpaths {
namespace {

bool is_m1_schroder(const Path& g) {
  if (g.is_rect() || g.m() != 1) return false;
  return true;
}

void require_schroder(const Path& g) {
  if (!is_m1_schroder(g)) throw Error(ErrorCode::NotSchroder, "expected an m=1 Schroder word");
}

bool ends_top_north(const std::string& w) {
  auto k = w.find_last_not_of('E');
  return k != std::string::npos && w[k] == 'N' && k + 1 < w.size();
}

void require_area_one(const Path& g) {
  if (!is_m1_schroder(g) || area(g) != 1 || !ends_top_north(g.word()))
    throw Error(ErrorCode::NotAreaOne, "expected an area-one Schroder word ending N E^+");
}

std::string join(const std::vector<std::string>& f) {
  std::string s;
  for (const auto& x : f) s += x;
  return s;
}

int north_count(const std::string& w) { return static_cast<int>(std::count(w.begin(), w.end(), 'N')); }

void require_hook(const Tableau& t) {
  if (t.size() == 0 || !is_hook(t.shape())) throw Error(ErrorCode::BadShape, "expected a hook-shaped tableau");
}

bool contains(const std::vector<int>& s, int v) { return std::find(s.begin(), s.end(), v) != s.end(); }

std::size_t block_index(const std::vector<std::string>& t) {
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t[i] == "NNEE" || t[i] == "NDE") return i;
  throw Error(ErrorCode::NotAreaOne, "no NNEE or NDE factor");
}

}  // namespace

bool is_ne_d_word(std::string_view w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 'D') continue;
    if (w[i] == 'N' && i + 1 < w.size() && w[i + 1] == 'E') {
      ++i;
      continue;
    }
    return false;
  }
  return true;
}

std::vector<Path> ne_d_words(int n, int d) {
  std::vector<Path> out;
  for (const auto& p : enumerate_paths(Schroder{n, d, 1}))
    if (is_ne_d_word(p.word())) out.push_back(p);
  return out;
}

PhiChain phi(const Path& g) {
  require_schroder(g);
  PhiChain c{g, {g}};
  std::string w = g.word();
  while (true) {
    long idx = -1;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i] == 'E' && w[i + 1] != 'E') idx = static_cast<long>(i);
    if (idx < 0) break;
    std::swap(w[idx], w[idx + 1]);
    c.steps.push_back(Path::parse(w, g.kind()));
  }
  return c;
}

Path phi_tilde(const Path& g) {
  auto c = phi(g);
  if (c.steps.size() < 2) throw Error(ErrorCode::EmptyChain, "no east step can move in " + g.word());
  return c.steps[1];
}

Path chain_start(const Path& g) {
  require_schroder(g);
  std::string s;
  for (char ch : g.word()) {
    if (ch == 'N') s += "NE";
    else if (ch == 'D') s += 'D';
  }
  Path start = Path::parse(s, g.kind());
  for (const auto& p : phi(start).steps)
    if (p == g) return start;
  throw Error(ErrorCode::NotInImage, g.word() + " is not on the chain of " + s);
}

Path omega(const Path& g) {
  auto c = phi(chain_start(g));
  const std::size_t b = c.steps.size() - 1;
  for (std::size_t i = 0; i <= b; ++i)
    if (c.steps[i] == g) return c.steps[b - i];
  throw Error(ErrorCode::NotInImage, g.word());  // unreachable
}

Path theta(const Path& g) {
  if (!is_m1_schroder(g) || !is_ne_d_word(g.word()))
    throw Error(ErrorCode::NotAreaZeroForm, "theta needs a word in {NE,D}*");
  std::string r;
  for (char ch : g.word()) {
    if (ch == 'N') r += 'N';
    else if (ch == 'D') r += 'E';
  }
  return Path::parse(r, Rect{g.n(), g.diagonals()});
}

Path map_M(const Tableau& t) {
  require_hook(t);
  const int n = t.size();
  const auto des = descent_data(t).set;
  std::vector<std::string> f(n);
  f[n - 1] = "NE";
  for (int i = 1; i < n; ++i) f[n - i - 1] = contains(des, i) ? "NE" : "D";
  return Path::schroder(join(f));
}

Tableau map_R(const Path& g) {
  const auto& w = g.word();
  if (!is_m1_schroder(g) || !is_ne_d_word(w) || w.size() < 2 || w.compare(w.size() - 2, 2, "NE") != 0)
    throw Error(ErrorCode::NotAreaZeroForm, "R needs a word in {NE,D}*NE");
  const auto t = touch(g).factors;
  const int n = static_cast<int>(t.size());
  std::vector<int> des;
  for (int i = 1; i <= n - 1; ++i)
    if (t[i - 1] == "NE") des.push_back(n - i);
  return hook_from_descents(n, g.diagonals() + 1, des);
}

Path map_S(const Tableau& t) {
  require_hook(t);
  const int n = t.size();
  const auto des = descent_data(t).set;
  if (des.empty()) throw Error(ErrorCode::BadShape, "S needs a hook with at least one descent");
  const int mx = des.back();
  std::vector<std::string> f(n - 1);
  for (int i = 1; i < n; ++i) {
    std::string v;
    if (i == mx) v = contains(des, 1) ? "NNEE" : "NDE";
    else if (i == 1 || contains(des, i)) v = "NE";
    else v = "D";
    f[n - i - 1] = v;
  }
  return Path::schroder(join(f));
}

namespace {
std::optional<Tableau> try_T(const Path& g) {
  if (!is_m1_schroder(g) || g.n() < 2 || area(g) != 1) return std::nullopt;
  const auto t = touch(g).factors;
  const int n = g.n();
  std::set<int> des;
  for (std::size_t i = 1; i <= t.size(); ++i)
    if (t[i - 1][0] == 'N') des.insert(n - static_cast<int>(i));
  const auto& w = g.word();
  auto lead = w.find_first_not_of('D');
  if (lead != std::string::npos && w.compare(lead, 3, "NDE") == 0) des.erase(1);
  std::vector<int> dv(des.begin(), des.end());
  if (dv.empty() || dv.front() < 1) return std::nullopt;
  try {
    Tableau tab = hook_from_descents(n, n - static_cast<int>(dv.size()), dv);
    if (map_S(tab) == g) return tab;
  } catch (const Error&) {
  }
  return std::nullopt;
}
}  // namespace

bool in_V(const Path& g) { return try_T(g).has_value(); }

Tableau map_T(const Path& g) {
  auto t = try_T(g);
  if (!t) throw Error(ErrorCode::NotInV, g.word() + " is not in the image of S");
  return *t;
}

Path map_Pi(const Path& g) {
  require_area_one(g);
  if (north_count(g.word()) == 2) return g;
  auto t = touch(g).factors;
  const std::size_t b = block_index(t);
  std::optional<std::size_t> c;
  for (std::size_t j = b + 1; j < t.size(); ++j)
    if (t[j] == "NE") {
      c = j;
      break;
    }
  std::size_t j;
  if (c && (t[b] == "NNEE" || *c != t.size() - 1)) {
    j = *c;
  } else {
    j = 0;
    while (t[j] != "NE") ++j;
  }
  std::swap(t[b], t[j]);
  return Path::schroder(join(t));
}

Path map_Q(const Tableau& t, int i) {
  require_hook(t);
  const int n = t.size(), d = t.shape()[0];
  if (i < 0 || i > n - d - 1) throw Error(ErrorCode::IndexOutOfOrbit, "index must lie in 0..n-d-1", i);
  Path g = map_S(t);
  for (int k = 0; k < i; ++k) g = map_Pi(g);
  return g;
}

HookPathPair map_Q_inverse(const Path& g) {
  require_area_one(g);
  const int n = g.n(), d = g.diagonals() + 1;
  const int len = n - d;
  Path x = g;
  for (int j = 0; j < len; ++j) {
    if (auto t = try_T(x)) return {*t, (len - j) % len};
    x = map_Pi(x);
  }
  throw Error(ErrorCode::NotInImage, g.word() + " has no S-image in its orbit");
}

std::vector<Path> area_one_top_north(int n, int d) {
  std::vector<Path> out;
  for (const auto& p : enumerate_schroder_top_north(n, d))
    if (area(p) == 1) out.push_back(p);
  return out;
}

const char* to_string(OverUnder c) {
  switch (c) {
    case OverUnder::Over: return "over";
    case OverUnder::Under: return "under";
    case OverUnder::Exceptional: return "exceptional";
  }
  return "?";
}

OverUnder over_under_classify(const Path& g) {
  require_area_one(g);
  const auto t = touch(g).factors;
  const std::size_t b = block_index(t);
  if (t[b] == "NDE") return OverUnder::Under;
  for (std::size_t i = 0; i < b; ++i)
    if (t[i] == "NE") return OverUnder::Over;
  if (t.size() >= b + 3) {
    if (t[t.size() - 2] == "NE" && t.back() == "NE") return OverUnder::Over;
    if (t[t.size() - 2] == "D" && t.back() == "NE") return OverUnder::Under;
  }
  return OverUnder::Exceptional;
}

std::vector<Path> over_set(int n, int d) {
  std::vector<Path> out;
  for (const auto& p : area_one_top_north(n, d))
    if (over_under_classify(p) == OverUnder::Over) out.push_back(p);
  return out;
}

std::vector<Path> under_set(int n, int d) {
  std::vector<Path> out;
  for (const auto& p : area_one_top_north(n, d))
    if (over_under_classify(p) == OverUnder::Under) out.push_back(p);
  return out;
}

Path map_rho(const Path& g) {
  if (!is_m1_schroder(g) || area(g) != 1 || !ends_top_north(g.word()) ||
      over_under_classify(g) != OverUnder::Over)
    throw Error(ErrorCode::NotOver, g.word() + " is not in the over set");
  auto t = touch(g).factors;
  const std::size_t b = block_index(t);
  std::optional<std::size_t> last_ne;
  for (std::size_t i = 0; i < b; ++i)
    if (t[i] == "NE") last_ne = i;
  if (last_ne) {
    t[*last_ne] = "NDE";
    t[b] = "NE";
  } else {
    t[t.size() - 2] = "D";
  }
  return Path::schroder(join(t));
}

Path map_rho_inverse(const Path& g) {
  auto fail = [&] { return Error(ErrorCode::NotInImage, g.word() + " is not in the under set"); };
  if (!is_m1_schroder(g) || area(g) != 1 || !ends_top_north(g.word()) ||
      over_under_classify(g) != OverUnder::Under)
    throw fail();
  auto t = touch(g).factors;
  const std::size_t b = block_index(t);
  if (t[b] == "NDE") {
    std::size_t c = b + 1;
    while (c < t.size() && t[c] == "D") ++c;
    if (c == t.size() || t[c] != "NE") throw fail();
    t[b] = "NE";
    t[c] = "NNEE";
  } else {
    if (t.size() < 2 || t[t.size() - 2] != "D") throw fail();
    t[t.size() - 2] = "NE";
  }
  Path r = Path::schroder(join(t));
  if (over_under_classify(r) != OverUnder::Over || !(map_rho(r) == g)) throw fail();
  return r;
}

HkForms h_k(int n, int k) {
  if (k < 0 || k > n - 3) throw Error(ErrorCode::OutOfRange, "h_k needs 0 <= k <= n-3");
  HkForms h;
  for (const auto& p : over_set(n, k)) h.path.add_term(bounce(p), 0, 1);
  for (const auto& t : enumerate_syt(hook_shape(n, k + 1))) {
    const auto dd = descent_data(t);
    const bool has1 = contains(dd.set, 1), has2 = contains(dd.set, 2);
    if (has1 && has2) h.tableau_a.add_term(dd.maj - dd.des, 0, 1);
    if (has1)
      for (int i = 2; i <= n - k - 2; ++i) h.tableau_a.add_term(dd.maj - i, 0, 1);
  }
  for (const auto& t : enumerate_syt(hook_shape(n, k + 2))) {
    const auto dd = descent_data(t);
    const bool has1 = contains(dd.set, 1), has2 = contains(dd.set, 2);
    if (has1 && !has2) h.tableau_b.add_term(dd.maj - dd.des, 0, 1);
    if (!has1)
      for (int i = 2; i <= n - k - 2; ++i) h.tableau_b.add_term(dd.maj - i, 0, 1);
  }
  if (parking_count(n, 1) <= kDefaultNablaLimit) {
    const auto& oracle = nabla_cached(n, 1);
    QtPolynomial def;
    for (int d = 0; d <= k; ++d) {
      const auto e = restrict(schur_decompose(oracle.coeff(hook_partition(n, d))), Restriction::PureHooks);
      const std::int64_t sign = (k - d) % 2 == 0 ? 1 : -1;
      for (const auto& [ab, c] : e.coeffs) def.add_term(ab.first + 1 + d - k, 0, sign * c);
    }
    h.definition = def;
  }
  return h;
}

}  // namespace qtpaths
