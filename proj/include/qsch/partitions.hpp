#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qsch {

class PartitionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Weakly decreasing positive parts. The empty partition has no parts.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    int weight() const noexcept { return weight_; }
    bool empty() const noexcept { return parts_.empty(); }
    // i-th part, 0-based, zero past the end.
    int part(int i) const noexcept { return i < length() ? parts_[i] : 0; }
    // m_i(lambda) for i >= 1.
    int multiplicity(int i) const;
    Partition conjugate() const;
    bool fits_box(int rows, int cols) const;

    std::string to_string() const;
    static Partition parse(std::string_view text);

    // Graded, then lexicographic on the part vector.
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);
    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

// Strictly decreasing parts drawn from {1..ambient}.
class StrictPartition {
public:
    StrictPartition() = default;
    StrictPartition(std::vector<int> parts, int ambient);

    const std::vector<int>& parts() const noexcept { return p_.parts(); }
    int ambient() const noexcept { return ambient_; }
    int length() const noexcept { return p_.length(); }
    int weight() const noexcept { return p_.weight(); }
    bool empty() const noexcept { return p_.empty(); }
    bool contains(int part) const;
    const Partition& as_partition() const noexcept { return p_; }

    std::string to_string() const { return p_.to_string(); }
    // Throws PartitionError naming the violated constraint.
    static StrictPartition parse(std::string_view text, int ambient);

    friend std::strong_ordering operator<=>(const StrictPartition& a, const StrictPartition& b);
    friend bool operator==(const StrictPartition& a, const StrictPartition& b) = default;

private:
    Partition p_;
    int ambient_ = 0;
};

// All 2^n elements of D(n), graded then lexicographic.
const std::vector<StrictPartition>& enumerate_D(int n);
// Partitions with at most `rows` parts, each at most `cols`.
std::vector<Partition> enumerate_R(int rows, int cols);
std::vector<Partition> enumerate_R(int rows, int cols, int weight);
// Partitions of `weight` with all parts at most `max_part` (any length).
std::vector<Partition> partitions_of(int weight, int max_part);

StrictPartition complement(const StrictPartition& lambda, int n);
StrictPartition rho(int n);

int bound_a(const StrictPartition& nu, int n);
Partition pad_og(const StrictPartition& nu, int m, int n);
int bound_b(const StrictPartition& nu, bool odd_degree, int n);
Partition pad_lg(const StrictPartition& nu, int m, bool odd_degree, int n);

}  // namespace qsch
