#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace splitq {

// Integer partition: weakly decreasing positive parts.  Zero parts are never
// stored; the empty partition is legal.  Immutable value type.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<unsigned> parts);

    // "6,5,5,4,2"
    static Partition parse(const std::string& s);

    const std::vector<unsigned>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    std::size_t num_parts() const { return parts_.size(); }
    unsigned size() const;  // sum of parts

    // 1-based part access; parts beyond the length read as 0.
    unsigned part_or_zero(std::size_t j) const {
        return j >= 1 && j <= parts_.size() ? parts_[j - 1] : 0;
    }

    Partition conjugate() const;
    unsigned multiplicity(unsigned i) const;  // number of parts equal to i
    std::uint64_t sum_of_squares() const;     // <lambda, lambda>

    std::string to_string() const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return !(*this == o); }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

private:
    std::vector<unsigned> parts_;
};

// All partitions of n (n = 0 gives the empty partition), parts in decreasing
// order, streamed in lexicographically decreasing part order.
void for_each_partition(unsigned n, const std::function<void(const Partition&)>& fn);
std::vector<Partition> partitions_of(unsigned n);

}  // namespace splitq
