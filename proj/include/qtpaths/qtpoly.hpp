#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

namespace qtpaths {

// Canonical monomial order: total degree, then q-exponent.
struct MonomialLess {
  bool operator()(const std::pair<int, int>& a, const std::pair<int, int>& b) const {
    const int da = a.first + a.second, db = b.first + b.second;
    if (da != db) return da < db;
    return a.first < b.first;
  }
};

// Sparse integer polynomial in q and t. Keys are (q-exponent, t-exponent);
// zero coefficients are never stored.
class QtPolynomial {
 public:
  using Terms = std::map<std::pair<int, int>, std::int64_t, MonomialLess>;

  QtPolynomial() = default;
  static QtPolynomial constant(std::int64_t c);
  static QtPolynomial monomial(int qe, int te, std::int64_t c = 1);

  const Terms& terms() const { return terms_; }
  std::int64_t coeff(int qe, int te) const;
  bool is_zero() const { return terms_.empty(); }
  void add_term(int qe, int te, std::int64_t c);

  QtPolynomial& operator+=(const QtPolynomial& o);
  QtPolynomial& operator-=(const QtPolynomial& o);
  QtPolynomial& operator*=(std::int64_t c);
  friend QtPolynomial operator+(QtPolynomial a, const QtPolynomial& b) { return a += b; }
  friend QtPolynomial operator-(QtPolynomial a, const QtPolynomial& b) { return a -= b; }
  friend QtPolynomial operator*(const QtPolynomial& a, const QtPolynomial& b);
  friend QtPolynomial operator*(QtPolynomial a, std::int64_t c) { return a *= c; }
  bool operator==(const QtPolynomial& o) const { return terms_ == o.terms_; }

  QtPolynomial eval_q0() const;
  QtPolynomial eval_t0() const;
  QtPolynomial swap_qt() const;
  std::int64_t eval(std::int64_t q, std::int64_t t) const;
  // Multiply by q^dq t^dt (exponents may go negative only transiently).
  QtPolynomial shifted(int dq, int dt) const;
  bool has_negative() const;

  // "q^2*t + 3*q + 1" style, highest monomial first; "0" when empty.
  std::string to_string() const;

 private:
  Terms terms_;
};

QtPolynomial gaussian_binomial(int n, int k);

// (qt)^b (q^{a-b} + q^{a-b-1} t + ... + t^{a-b}); BadShape when a < b.
QtPolynomial schur_qt(int a, int b);

// Coefficients c_{a,b} in the basis s_{a,b}(q,t), keys (a,b) with a >= b >= 0.
struct SchurQtExpansion {
  std::map<std::pair<int, int>, std::int64_t> coeffs;

  QtPolynomial reconstruct() const;
  bool has_negative() const;
  bool operator==(const SchurQtExpansion&) const = default;
  std::string to_string() const;
};

// Triangular inversion; NotSymmetric if p != swap_qt(p). Negative
// coefficients are returned as they come.
SchurQtExpansion schur_decompose(const QtPolynomial& p);

enum class Restriction { OnePart, Hooks, PureHooks };
SchurQtExpansion restrict(const SchurQtExpansion& e, Restriction which);

SchurQtExpansion operator-(const SchurQtExpansion& a, const SchurQtExpansion& b);

}  // namespace qtpaths
