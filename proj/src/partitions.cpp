#include "severi/partitions.hpp"

#include <map>
#include <mutex>
#include <string>

namespace severi {

std::vector<unsigned> SetPartition::masks() const {
  std::vector<unsigned> result;
  result.reserve(blocks.size());
  for (const std::vector<int>& block : blocks) {
    unsigned mask = 0;
    for (int element : block) mask |= 1u << element;
    result.push_back(mask);
  }
  return result;
}

PartitionGuardExceeded::PartitionGuardExceeded(int n)
    : std::invalid_argument("set partitions of " + std::to_string(n) + " elements exceed the guard of " +
                            std::to_string(kMaxPartitionSize)) {}

namespace {

void extend(int n, std::vector<int>& growth, int blocks, const std::function<void(const SetPartition&)>& visit) {
  const int next = static_cast<int>(growth.size());
  if (next == n) {
    SetPartition partition;
    partition.blocks.resize(static_cast<std::size_t>(blocks));
    for (int element = 0; element < n; ++element) {
      partition.blocks[static_cast<std::size_t>(growth[static_cast<std::size_t>(element)])].push_back(element);
    }
    visit(partition);
    return;
  }
  for (int block = 0; block <= blocks; ++block) {
    growth.push_back(block);
    extend(n, growth, block == blocks ? blocks + 1 : blocks, visit);
    growth.pop_back();
  }
}

}  // namespace

void for_each_set_partition(int n, const std::function<void(const SetPartition&)>& visit) {
  if (n < 0) throw std::invalid_argument("set size must be nonnegative");
  if (n > kMaxPartitionSize) throw PartitionGuardExceeded(n);
  std::vector<int> growth;
  extend(n, growth, 0, visit);
}

std::vector<SetPartition> set_partitions(int n) {
  std::vector<SetPartition> result;
  for_each_set_partition(n, [&result](const SetPartition& partition) { result.push_back(partition); });
  return result;
}

const std::vector<std::vector<unsigned>>& partition_masks(int n) {
  static std::mutex mutex;
  static std::map<int, std::vector<std::vector<unsigned>>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto found = cache.find(n);
  if (found != cache.end()) return found->second;
  std::vector<std::vector<unsigned>> masks;
  for_each_set_partition(n, [&masks](const SetPartition& partition) { masks.push_back(partition.masks()); });
  return cache.emplace(n, std::move(masks)).first->second;
}

}  // namespace severi
