#include "redwords/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace redwords {

int Partition::boxes() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

int Partition::part(int i) const {
  if (i < 1 || i > static_cast<int>(parts.size())) return 0;
  return parts[i - 1];
}

std::string Partition::to_string() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out << ",";
    out << parts[i];
  }
  out << ")";
  return out.str();
}

Partition make_partition(std::vector<int> parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1])
      throw std::invalid_argument("partition parts must be non-increasing");
  }
  return Partition{std::move(parts)};
}

bool partition_leq(const Partition& a, const Partition& b) {
  const int rows = static_cast<int>(std::max(a.parts.size(), b.parts.size()));
  for (int i = 1; i <= rows; ++i)
    if (a.part(i) > b.part(i)) return false;
  return true;
}

bool partition_cover(const Partition& a, const Partition& b) {
  return partition_leq(a, b) && b.boxes() == a.boxes() + 1;
}

}  // namespace redwords
