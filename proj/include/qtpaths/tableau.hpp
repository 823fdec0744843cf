#pragma once

#include <cstdint>
#include <vector>

namespace qtpaths {

// Weakly decreasing positive parts.
using Partition = std::vector<int>;

int partition_size(const Partition& p);
Partition conjugate(const Partition& p);
// All partitions of n, lexicographically decreasing: (n), (n-1,1), ...
std::vector<Partition> partitions(int n);
bool is_hook(const Partition& p);
// Shape (d, 1^{n-d}); d >= 1.
Partition hook_shape(int n, int d);
// Hook-length formula.
std::uint64_t syt_count(const Partition& shape);

// French convention: rows()[0] is the bottom row.
class Tableau {
 public:
  Tableau() = default;
  // Throws BadShape when rows do not form a standard filling.
  explicit Tableau(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  Partition shape() const;
  int size() const { return size_; }
  // Row index (0 = bottom) holding entry v.
  int row_of(int v) const { return row_of_[v]; }

  bool operator==(const Tableau& o) const { return rows_ == o.rows_; }

 private:
  std::vector<std::vector<int>> rows_;
  std::vector<int> row_of_;  // indexed by entry
  int size_ = 0;
};

struct DescentData {
  std::vector<int> set;  // increasing
  int des = 0;
  int maj = 0;
};

inline constexpr std::uint64_t kDefaultTableauLimit = 2'000'000;

// Canonical order: lexicographic on the bottom-up row reading.
std::vector<Tableau> enumerate_syt(const Partition& shape,
                                   std::uint64_t limit = kDefaultTableauLimit);
DescentData descent_data(const Tableau& t);
Tableau conjugate(const Tableau& t);
// The unique tableau of shape (d, 1^{n-d}) with descent set D.
Tableau hook_from_descents(int n, int d, const std::vector<int>& descents);

// Descent set as a bitmask: bit i-1 set iff i is a descent.
std::uint32_t descent_mask(const Tableau& t);

}  // namespace qtpaths
