#ifndef CHERN_PARTITION_HPP
#define CHERN_PARTITION_HPP

#include <string>
#include <vector>

namespace chern {

/// Integer partition: a non-increasing list of positive parts.
class Partition {
  public:
    Partition() = default;
    /// Parts may be given in any order; zeros are dropped, the rest sorted.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const;
    int size() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int part(int i) const { return parts_[static_cast<size_t>(i)]; }
    bool contains(int value) const;

    Partition conjugate() const;

    /// Multiset union of parts, e.g. (2,1) * (3,1) = (3,2,1,1).
    Partition merged(const Partition& other) const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }

    /// "m1,m2,..." ; the empty partition prints as "-".
    std::string str() const;
    /// Chern-monomial rendering, e.g. (3,1,1) -> "c1^2*c3".
    std::string monomial_str(const std::string& letter = "c") const;

  private:
    std::vector<int> parts_;  // non-increasing, all positive
};

/// Canonical order: descending-lexicographic on the part vectors, so for
/// n = 4 the order is (4), (3,1), (2,2), (2,1,1), (1,1,1,1). Used for every
/// serialized table and as the map comparator.
struct PartitionOrder {
    bool operator()(const Partition& a, const Partition& b) const;
};

/// All partitions of n with parts <= max_part, in canonical order.
/// partitions_of(0) is { empty }.
std::vector<Partition> partitions_of(int n, int max_part = -1);

/// Number of partitions of n.
long partition_count(int n);

/// Parse "m1,m2,..." (order arbitrary).
Partition parse_partition(const std::string& text);

}  // namespace chern

#endif
