#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace qtpaths {

// Grid descriptors. Letters: N=(0,1), E=(1,0), D=(1,1).
struct Rect {
  int n = 0;  // word length
  int k = 0;  // number of E letters
  bool operator==(const Rect&) const = default;
};
struct Dyck {
  int n = 0;
  int m = 1;
  bool operator==(const Dyck&) const = default;
};
struct Schroder {
  int n = 0;
  int d = 0;
  int m = 1;
  bool operator==(const Schroder&) const = default;
};
using PathKind = std::variant<Rect, Dyck, Schroder>;

struct Point {
  int x = 0;
  int y = 0;
  bool operator==(const Point&) const = default;
};

// A validated word together with its grid.
class Path {
 public:
  Path() = default;

  static Path parse(std::string_view text, const PathKind& kind);
  // Infer (n, d) from the letter counts; m defaults to 1.
  static Path schroder(std::string_view text, int m = 1);
  static Path dyck(std::string_view text, int m = 1);

  const std::string& word() const { return word_; }
  const PathKind& kind() const { return kind_; }
  // Number of rows (Dyck/Schroder) or word length (Rect).
  int n() const;
  int m() const;
  int diagonals() const;
  bool is_rect() const { return std::holds_alternative<Rect>(kind_); }

  bool operator==(const Path& o) const { return word_ == o.word_ && kind_ == o.kind_; }

 private:
  Path(std::string word, PathKind kind) : word_(std::move(word)), kind_(kind) {}
  std::string word_;
  PathKind kind_{Dyck{}};
};

Path parse_path(std::string_view text, const PathKind& kind);

// Throws WrongStepCounts / PrefixBelowDiagonal / BadLetter.
void validate_word(std::string_view word, const PathKind& kind);
bool is_valid_word(std::string_view word, const PathKind& kind);

// Exact number of words of the given kind, computed without enumerating.
std::uint64_t count_paths(const PathKind& kind);

inline constexpr std::uint64_t kDefaultEnumerationLimit = 5'000'000;

// All words in lexicographic order with D < E < N.
std::vector<Path> enumerate_paths(const PathKind& kind,
                                  std::uint64_t limit = kDefaultEnumerationLimit);
// Schroder(n,d,1) words ending in the two letters NE.
std::vector<Path> enumerate_schroder_tilde(int n, int d);
// Schroder(n,d,1) words whose last non-E letter is N (suffix N E^+).
std::vector<Path> enumerate_schroder_top_north(int n, int d);

int area(const Path& p);
// Per-row contributions m*y - x at the start of each N or D step.
std::vector<int> row_areas(const Path& p);

struct TouchDecomposition {
  std::vector<std::string> factors;
  std::vector<int> sizes;  // rows per factor
};
TouchDecomposition touch(const Path& p);

struct BounceData {
  std::vector<int> bounce_vector;
  int bounce = 0;
  std::vector<Point> peaks;
  int numph = 0;
};
BounceData bounce_dyck(const Path& p);
// Full bounce data for an m=1 Schroder word (Dyck words allowed).
BounceData bounce_data(const Path& p);

std::vector<Point> peaks(const Path& p);
int numph(const Path& p);
int bounce_schroder(const Path& p);
inline int bounce(const Path& p) { return bounce_schroder(p); }

Path gamma(const Path& p);
int column_count(const Path& p);

// Number of E letters between consecutive N letters (the p of N E^p N).
std::vector<int> north_gaps(std::string_view word);

}  // namespace qtpaths
