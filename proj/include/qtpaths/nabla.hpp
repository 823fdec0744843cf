#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "qtpaths/qtpoly.hpp"
#include "qtpaths/tableau.hpp"

namespace qtpaths {

// Fundamental quasisymmetric expansion. A composition of n is stored as its
// partial-sum set S in {1..n-1}, as a bitmask (bit i-1 <=> i in S).
struct QsymExpansion {
  int n = 0;
  std::map<std::uint32_t, QtPolynomial> terms;
  bool operator==(const QsymExpansion&) const = default;
};

struct PartitionLess {
  bool operator()(const Partition& a, const Partition& b) const { return a > b; }
};

// Coefficients of s_lambda(X); keys iterate lexicographically decreasing.
struct SchurXExpansion {
  int n = 0;
  std::map<Partition, QtPolynomial, PartitionLess> coeffs;

  QtPolynomial coeff(const Partition& lambda) const;
  bool operator==(const SchurXExpansion&) const = default;
};

// Default cap on the number of parking functions an oracle run may visit.
inline constexpr std::uint64_t kDefaultNablaLimit = 300'000;

// Sum over (n, mn)-parking functions of q^dinv t^area F_{Des(read^{-1})}.
QsymExpansion nabla_qsym(int n, int m, std::uint64_t limit = kDefaultNablaLimit);
QsymExpansion nabla_qsym_serial(int n, int m, std::uint64_t limit = kDefaultNablaLimit);

// Unitriangular solve against the SYT descent matrix; NonZeroResidual if the
// input is not symmetric.
SchurXExpansion schur_from_qsym(const QsymExpansion& f);

// <nabla^m e_n, s_lambda> for every lambda |- n.
SchurXExpansion nabla_oracle(int n, int m, std::uint64_t limit = kDefaultNablaLimit);
SchurXExpansion nabla_oracle_serial(int n, int m, std::uint64_t limit = kDefaultNablaLimit);
// Cap used by the verification memo; (6,2) alone visits 13^5 objects.
inline constexpr std::uint64_t kVerifyNablaLimit = 2'000'000;

// Process-wide memo around nabla_oracle; thread-safe.
const SchurXExpansion& nabla_cached(int n, int m);

// (d+1, 1^{n-d-1}) for 0 <= d <= n-1.
Partition hook_partition(int n, int d);

// Sum of q^bounce t^area over Schroder(n,d,1), optionally only words ending NE.
QtPolynomial sch_generating(int n, int d, bool ending_ne);
// Same sum over words whose last non-E letter is N.
QtPolynomial sch_generating_top_north(int n, int d);

// Sum of q^dinv t^area over (n, mn)-parking functions whose reading word is a
// shuffle of n-k+1..n (increasing) with n-k..1 (decreasing).
QtPolynomial shuffle_bracket(int n, int m, int k);

// Sum_{k=d+1}^{n} (-1)^{k-d-1} shuffle_bracket(n, m, k).
QtPolynomial alternating_hook_bracket(int n, int m, int d);

}  // namespace qtpaths
