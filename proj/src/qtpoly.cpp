#include "qtpaths/qtpoly.hpp"

#include <sstream>
#include <vector>

#include "qtpaths/error.hpp"

namespace qtpaths {

QtPolynomial QtPolynomial::constant(std::int64_t c) { return monomial(0, 0, c); }

QtPolynomial QtPolynomial::monomial(int qe, int te, std::int64_t c) {
  QtPolynomial p;
  p.add_term(qe, te, c);
  return p;
}

std::int64_t QtPolynomial::coeff(int qe, int te) const {
  auto it = terms_.find({qe, te});
  return it == terms_.end() ? 0 : it->second;
}

void QtPolynomial::add_term(int qe, int te, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({qe, te}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

QtPolynomial& QtPolynomial::operator+=(const QtPolynomial& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

QtPolynomial& QtPolynomial::operator-=(const QtPolynomial& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
  return *this;
}

QtPolynomial& QtPolynomial::operator*=(std::int64_t c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

QtPolynomial operator*(const QtPolynomial& a, const QtPolynomial& b) {
  QtPolynomial r;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return r;
}

QtPolynomial QtPolynomial::eval_q0() const {
  QtPolynomial r;
  for (const auto& [k, c] : terms_)
    if (k.first == 0) r.add_term(0, k.second, c);
  return r;
}

QtPolynomial QtPolynomial::eval_t0() const {
  QtPolynomial r;
  for (const auto& [k, c] : terms_)
    if (k.second == 0) r.add_term(k.first, 0, c);
  return r;
}

QtPolynomial QtPolynomial::swap_qt() const {
  QtPolynomial r;
  for (const auto& [k, c] : terms_) r.add_term(k.second, k.first, c);
  return r;
}

std::int64_t QtPolynomial::eval(std::int64_t q, std::int64_t t) const {
  std::int64_t s = 0;
  for (const auto& [k, c] : terms_) {
    std::int64_t v = c;
    for (int i = 0; i < k.first; ++i) v *= q;
    for (int i = 0; i < k.second; ++i) v *= t;
    s += v;
  }
  return s;
}

QtPolynomial QtPolynomial::shifted(int dq, int dt) const {
  QtPolynomial r;
  for (const auto& [k, c] : terms_) r.add_term(k.first + dq, k.second + dt, c);
  return r;
}

bool QtPolynomial::has_negative() const {
  for (const auto& [k, c] : terms_)
    if (c < 0) return true;
  return false;
}

namespace {
void append_monomial(std::ostringstream& os, int qe, int te) {
  bool first = true;
  auto var = [&](const char* name, int e) {
    if (e == 0) return;
    if (!first) os << '*';
    os << name;
    if (e > 1) os << '^' << e;
    first = false;
  };
  var("q", qe);
  var("t", te);
}
}  // namespace

std::string QtPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto [qe, te] = it->first;
    std::int64_t c = it->second;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    std::int64_t a = c < 0 ? -c : c;
    if (qe == 0 && te == 0) {
      os << a;
    } else {
      if (a != 1) os << a << '*';
      append_monomial(os, qe, te);
    }
    first = false;
  }
  return os.str();
}

QtPolynomial gaussian_binomial(int n, int k) {
  if (k < 0 || k > n) throw Error(ErrorCode::OutOfRange, "gaussian binomial needs 0 <= k <= n");
  // Pascal recurrence [n,k] = [n-1,k-1] + q^k [n-1,k]
  std::vector<QtPolynomial> prev{QtPolynomial::constant(1)};
  for (int i = 1; i <= n; ++i) {
    std::vector<QtPolynomial> cur(i + 1);
    for (int j = 0; j <= i; ++j) {
      if (j > 0) cur[j] += prev[j - 1];
      if (j < i) cur[j] += prev[j].shifted(j, 0);
    }
    prev = std::move(cur);
  }
  return prev[k];
}

QtPolynomial schur_qt(int a, int b) {
  if (b < 0 || a < b) throw Error(ErrorCode::BadShape, "s_{a,b} needs a >= b >= 0");
  QtPolynomial p;
  for (int i = 0; i <= a - b; ++i) p.add_term(b + i, a - i, 1);
  return p;
}

QtPolynomial SchurQtExpansion::reconstruct() const {
  QtPolynomial p;
  for (const auto& [ab, c] : coeffs) p += schur_qt(ab.first, ab.second) * c;
  return p;
}

bool SchurQtExpansion::has_negative() const {
  for (const auto& [ab, c] : coeffs)
    if (c < 0) return true;
  return false;
}

std::string SchurQtExpansion::to_string() const {
  if (coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    auto [a, b] = it->first;
    std::int64_t c = it->second;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    std::int64_t v = c < 0 ? -c : c;
    if (v != 1) os << v << '*';
    os << "s[" << a;
    if (b > 0) os << ',' << b;
    os << ']';
    first = false;
  }
  return os.str();
}

SchurQtExpansion schur_decompose(const QtPolynomial& p) {
  if (!(p == p.swap_qt())) throw Error(ErrorCode::NotSymmetric, "polynomial is not symmetric in q and t");
  SchurQtExpansion e;
  for (const auto& [k, c] : p.terms()) {
    auto [a, b] = k;
    if (a < b) continue;
    std::int64_t v = c - (b > 0 ? p.coeff(a + 1, b - 1) : 0);
    if (v != 0) e.coeffs[{a, b}] = v;
  }
  // Monomials q^a t^b with a >= b that are absent from p can still carry a
  // coefficient through the q^{a+1} t^{b-1} term.
  for (const auto& [k, c] : p.terms()) {
    auto [a1, b1] = k;
    int a = a1 - 1, b = b1 + 1;
    if (a >= b && p.coeff(a, b) == 0) e.coeffs[{a, b}] = -c;
  }
  return e;
}

SchurQtExpansion restrict(const SchurQtExpansion& e, Restriction which) {
  SchurQtExpansion r;
  for (const auto& [ab, c] : e.coeffs) {
    auto [a, b] = ab;
    bool keep = false;
    switch (which) {
      case Restriction::OnePart: keep = b == 0; break;
      case Restriction::Hooks: keep = b <= 1; break;
      case Restriction::PureHooks: keep = b == 1 && a >= 1; break;
    }
    if (keep) r.coeffs[ab] = c;
  }
  return r;
}

SchurQtExpansion operator-(const SchurQtExpansion& a, const SchurQtExpansion& b) {
  SchurQtExpansion r = a;
  for (const auto& [ab, c] : b.coeffs) {
    auto& v = r.coeffs[ab];
    v -= c;
    if (v == 0) r.coeffs.erase(ab);
  }
  return r;
}

}  // namespace qtpaths
