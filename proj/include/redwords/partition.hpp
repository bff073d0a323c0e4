#ifndef REDWORDS_PARTITION_HPP
#define REDWORDS_PARTITION_HPP

#include <compare>
#include <string>
#include <vector>

namespace redwords {

// Integer partition: non-increasing positive parts. The empty partition has
// no parts. Comparison is lexicographic on the part list.
struct Partition {
  std::vector<int> parts;

  int boxes() const;            // |lambda|
  int part(int i) const;        // 1-indexed, 0 past the last part
  std::string to_string() const;  // "(3,2)", "()" when empty

  friend bool operator==(const Partition& a, const Partition& b) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) = default;
};

// Validates non-increasing positive parts (zeros are dropped from the tail).
Partition make_partition(std::vector<int> parts);

// Containment of Young diagrams: a_i <= b_i for every row.
bool partition_leq(const Partition& a, const Partition& b);

// Single-box cover in Young's lattice: a is contained in b and |b| = |a| + 1.
bool partition_cover(const Partition& a, const Partition& b);

}  // namespace redwords

#endif
