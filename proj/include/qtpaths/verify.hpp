#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qtpaths/io.hpp"

namespace qtpaths {

// Fail: an implementation or theorem-level mismatch.
// Discrepancy: a documented boundary case where a printed formula and the
// computed objects disagree; reported, never asserted.
enum class Status { Pass, Fail, Discrepancy };
const char* to_string(Status s);

struct Report {
  std::string identity;
  Json parameters = Json::object();
  Status status = Status::Pass;
  Json lhs;
  Json rhs;
  Json witness;     // first counterexample, when any
  Json difference;  // lhs - rhs, when both are polynomials or expansions
  std::string note;
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
};

Json to_json(const Report& r);

// Residual, symmetry and Schur positivity of the oracle.
std::vector<Report> verify_oracle(int n, int m);
// Hook coefficients against the tableau formula, hooks only.
std::vector<Report> verify_theorem1_eq1(int n);
// One-part restrictions for every partition.
std::vector<Report> verify_theorem1_eq2(int n, int m);
// Hook restriction of <nabla^m e_n, e_n>.
std::vector<Report> verify_theorem1_eq3(int n, int m);
// One-part formulas through theta and the chain sums.
std::vector<Report> verify_prop47(int n);
// Structural dinv = 0 / dinv = 1 criteria and the supporting claims.
std::vector<Report> verify_dinv_criteria(int n, int m);
// The three fixed counterexample parking functions.
std::vector<Report> verify_dinv_figures();
// q = 0 and t = 0 specializations of the oracle.
std::vector<Report> verify_specializations(int n, int m);
std::vector<Report> verify_equidistribution(int n, int d);
// The tableau formula for non-hook partitions (reported only).
std::vector<Report> verify_conjecture71(int n);
std::vector<Report> verify_section8(int n);
// Raw path sums against oracle hook coefficients, plus the alternating sum.
std::vector<Report> verify_hook_identity(int n);
std::vector<Report> verify_bijections(int n);

std::vector<std::string> suite_names();
// Runs a named suite at size n (and m where it applies). OutOfRange for an
// unknown name.
std::vector<Report> run_suite(const std::string& name, int n, int m);

}  // namespace qtpaths
