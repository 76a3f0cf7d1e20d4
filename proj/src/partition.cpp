#include "splitq/partition.hpp"

#include <algorithm>
#include <stdexcept>

#include "splitq/errors.hpp"
#include "splitq/text.hpp"

namespace splitq {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] == 0) throw std::invalid_argument("partition parts must be positive");
        if (i && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

Partition Partition::parse(const std::string& s) {
    std::vector<unsigned> parts;
    for (const auto& piece : detail::split_trim(s, ',')) {
        std::uint64_t v = detail::parse_u64(piece);
        if (v == 0 || v > 1u << 20) throw parse_error("partition part out of range: " + piece);
        parts.push_back(static_cast<unsigned>(v));
    }
    if (parts.empty()) throw parse_error("empty partition text");
    try {
        return Partition(std::move(parts));
    } catch (const std::invalid_argument& e) {
        throw parse_error(e.what());
    }
}

unsigned Partition::size() const {
    unsigned s = 0;
    for (unsigned p : parts_) s += p;
    return s;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<unsigned> conj(parts_[0], 0);
    for (unsigned p : parts_)
        for (unsigned i = 0; i < p; ++i) ++conj[i];
    return Partition(std::move(conj));
}

unsigned Partition::multiplicity(unsigned i) const {
    unsigned m = 0;
    for (unsigned p : parts_) m += (p == i);
    return m;
}

std::uint64_t Partition::sum_of_squares() const {
    std::uint64_t s = 0;
    for (unsigned p : parts_) s += static_cast<std::uint64_t>(p) * p;
    return s;
}

std::string Partition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out;
}

namespace {

void rec_partitions(unsigned remaining, unsigned max_part, std::vector<unsigned>& acc,
                    const std::function<void(const Partition&)>& fn) {
    if (remaining == 0) {
        fn(Partition(acc));
        return;
    }
    for (unsigned p = std::min(remaining, max_part); p >= 1; --p) {
        acc.push_back(p);
        rec_partitions(remaining - p, p, acc, fn);
        acc.pop_back();
    }
}

}  // namespace

void for_each_partition(unsigned n, const std::function<void(const Partition&)>& fn) {
    std::vector<unsigned> acc;
    rec_partitions(n, n == 0 ? 1 : n, acc, fn);
}

std::vector<Partition> partitions_of(unsigned n) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

}  // namespace splitq
