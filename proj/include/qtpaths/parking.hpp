#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qtpaths/path.hpp"

namespace qtpaths {

// A Dyck(n,m) path with labels w_1..w_n written on the rows, bottom to top.
class ParkingFunction {
 public:
  ParkingFunction() = default;
  ParkingFunction(Path path, std::vector<int> labels);

  const Path& path() const { return path_; }
  const std::vector<int>& labels() const { return labels_; }
  int n() const { return path_.n(); }
  int m() const { return path_.m(); }

  bool operator==(const ParkingFunction& o) const { return path_ == o.path_ && labels_ == o.labels_; }

 private:
  Path path_;
  std::vector<int> labels_;
};

// Throws BadLabels (not a permutation) or ColumnDescent (index = lower row, 1-based).
ParkingFunction make_parking(const Path& path, std::vector<int> labels);

inline constexpr std::uint64_t kDefaultParkingLimit = 5'000'000;

// (mn+1)^{n-1}
std::uint64_t parking_count(int n, int m);

// Calls f(labels) for every column-increasing labeling of a Dyck path, in
// lexicographic order of the label vector.
void for_each_labeling(const Path& dyck_path, const std::function<void(const std::vector<int>&)>& f);

// Paths in canonical order, labelings lexicographic within a path.
std::vector<ParkingFunction> enumerate_parking(int n, int m, std::uint64_t limit = kDefaultParkingLimit);

std::vector<int> reading_word(const ParkingFunction& pf);

struct DinvTable {
  std::map<std::pair<int, int>, int> contributions;  // (i,j), 1-based rows, i<j, nonzero only
  int total = 0;
};
DinvTable dinv(const ParkingFunction& pf);
DinvTable dinv_expanded(const ParkingFunction& pf);
// Total only, without building the table.
int dinv_total(const std::vector<int>& row_areas, const std::vector<int>& labels, int m);
inline int dinv_total(const ParkingFunction& pf) {
  return dinv_total(row_areas(pf.path()), pf.labels(), pf.m());
}

// Permutation helpers on one-line notation (values 1..n).
std::vector<int> descents(const std::vector<int>& w);
int major_index(const std::vector<int>& w);
std::vector<int> inverse_permutation(const std::vector<int>& w);
std::uint32_t descent_mask(const std::vector<int>& w);

// read in {n-d+1..n increasing} shuffle {n-d..1 decreasing}
bool is_shuffle_form(const std::vector<int>& read, int d);
// Smallest d for which the reading word is a shuffle, if any.
std::optional<int> shuffle_degree(const ParkingFunction& pf);

ParkingFunction schroder_to_parking(const Path& p);
Path parking_to_schroder(const ParkingFunction& pf, int d);

bool dinv_zero_criterion(const ParkingFunction& pf);

enum class DinvOneDomain { Labeled, SchroderForm, Unlabeled, Unsupported };
DinvOneDomain dinv_one_domain(const ParkingFunction& pf);
// Dispatches on dinv_one_domain; throws DomainUnsupported for generic m=1 labels.
bool dinv_one_criterion(const ParkingFunction& pf);
// The two-bullet form (labels arbitrary).
bool dinv_one_two_bullets(const ParkingFunction& pf);
// The three-bullet m=1 form for a parking function read with d big labels.
bool dinv_one_schroder_criterion(const ParkingFunction& pf, int d);

// m*C(n,2) - des(w)*n + maj(w); PreconditionFailed unless dinv is 0.
int area_from_maj(const ParkingFunction& pf);

}  // namespace qtpaths
