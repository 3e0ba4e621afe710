#ifndef SEVERI_PARTITIONS_HPP
#define SEVERI_PARTITIONS_HPP

#include <functional>
#include <stdexcept>
#include <vector>

namespace severi {

constexpr int kMaxPartitionSize = 12;

// Partition of {0, ..., n-1} into nonempty blocks. Blocks are ordered by
// their smallest element and sorted internally.
struct SetPartition {
  std::vector<std::vector<int>> blocks;

  int block_count() const { return static_cast<int>(blocks.size()); }
  // Block membership as bit masks, in block order.
  std::vector<unsigned> masks() const;
  bool operator==(const SetPartition&) const = default;
};

class PartitionGuardExceeded : public std::invalid_argument {
 public:
  explicit PartitionGuardExceeded(int n);
};

// Visits all Bell(n) partitions once each, in restricted-growth-string order.
// Throws PartitionGuardExceeded when n > kMaxPartitionSize.
void for_each_set_partition(int n, const std::function<void(const SetPartition&)>& visit);
std::vector<SetPartition> set_partitions(int n);

// Same enumeration reduced to block masks; cached per n.
const std::vector<std::vector<unsigned>>& partition_masks(int n);

}  // namespace severi

#endif  // SEVERI_PARTITIONS_HPP
