#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qtpaths/path.hpp"
#include "qtpaths/qtpoly.hpp"
#include "qtpaths/tableau.hpp"

namespace qtpaths {

// Words over the two factors NE and D.
bool is_ne_d_word(std::string_view word);
// All of {NE,D}^n with exactly d factors D, canonical order.
std::vector<Path> ne_d_words(int n, int d);

struct PhiChain {
  Path start;
  std::vector<Path> steps;  // steps[0] == start
};

// Slides the rightmost E with a non-E successor one place right until no such
// E remains. NotSchroder unless the input is an m=1 Schroder word.
PhiChain phi(const Path& g);
// Second element of the chain; EmptyChain when nothing moves.
Path phi_tilde(const Path& g);
// The {NE,D} word whose chain contains g; NotInImage otherwise.
Path chain_start(const Path& g);
// Reflects g inside its chain: gamma_i -> gamma_{B-i}.
Path omega(const Path& g);

// NE -> N, D -> E; NotAreaZeroForm unless g is in {NE,D}*.
Path theta(const Path& g);

// Hook tableau (d,1^{n-d}) -> word in {NE,D}^{n-1}NE with d-1 factors D.
Path map_M(const Tableau& t);
Tableau map_R(const Path& g);

// Hook tableau (d,1^{n-d}), n-d >= 1 -> area-one word with d-1 diagonals.
Path map_S(const Tableau& t);
// Inverse of map_S on its image; NotInV elsewhere.
Tableau map_T(const Path& g);
bool in_V(const Path& g);

// Factor rewrite on area-one words ending N E^+; NotAreaOne otherwise.
Path map_Pi(const Path& g);

struct HookPathPair {
  Tableau tableau;
  int index = 0;
};
// Pi^i(S(t)); IndexOutOfOrbit unless 0 <= i <= n-d-1.
Path map_Q(const Tableau& t, int i);
HookPathPair map_Q_inverse(const Path& g);

// Area-one Schroder(n,d,1) words whose last non-E letter is N.
std::vector<Path> area_one_top_north(int n, int d);

enum class OverUnder { Over, Under, Exceptional };
const char* to_string(OverUnder c);
OverUnder over_under_classify(const Path& g);
std::vector<Path> over_set(int n, int d);
std::vector<Path> under_set(int n, int d);

// over(n,d) -> under(n,d+1); NotOver outside the domain.
Path map_rho(const Path& g);
// NotInImage outside under(n,d+1).
Path map_rho_inverse(const Path& g);

struct HkForms {
  QtPolynomial path;        // sum of q^bounce over over(n,k)
  QtPolynomial tableau_a;   // tableaux of shape (k+1,1^{n-k-1})
  QtPolynomial tableau_b;   // tableaux of shape (k+2,1^{n-k-2})
  std::optional<QtPolynomial> definition;  // from oracle pure-hook coefficients
};
// OutOfRange unless 0 <= k <= n-3. The definition form is filled when the
// m=1 oracle at n fits the default limit.
HkForms h_k(int n, int k);

}  // namespace qtpaths
