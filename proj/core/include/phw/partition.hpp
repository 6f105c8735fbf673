#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "phw/bigcount.hpp"

namespace phw {

/* An integer partition: weakly decreasing positive parts with cached sum.
 * Immutable value type — every operation returns a fresh Partition.
 * The empty partition (n = 0) is a first-class value. */
class Partition {
public:
    Partition() = default;

    // Validates weak decrease and positivity; throws std::invalid_argument.
    explicit Partition(std::vector<std::uint32_t> parts);

    const std::vector<std::uint32_t>& parts() const { return parts_; }
    std::uint64_t size() const { return size_; }       // n = Σ parts
    std::size_t length() const { return parts_.size(); } // ℓ(λ)
    bool empty() const { return parts_.empty(); }

    // 0-based row access; rows past the end have length 0.
    std::uint32_t part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    // Lexicographic order on the part sequences ((2,2) > (2,1,1) > (1,1,1,1)).
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

private:
    std::vector<std::uint32_t> parts_;
    std::uint64_t size_ = 0;
};

// Text round-trip: "[4,2,1]" (whitespace tolerated), "[]" for the empty partition.
Partition parse_partition(std::string_view text);
std::string to_text(const Partition& p);

/* p(n) by the pentagonal-number recurrence. Exact in 64 bits for n ≤ 416;
 * throws std::overflow_error beyond. */
std::uint64_t partition_count(unsigned n);

/* Streams every partition of n exactly once, in lexicographic descending
 * order: (n), (n−1,1), …, (1^n). The order is part of the contract (golden
 * tests and deterministic range-splitting rely on it). */
class PartitionStream {
public:
    explicit PartitionStream(std::uint64_t n);
    std::optional<Partition> next();

private:
    std::uint64_t n_;
    std::vector<std::uint32_t> cur_;
    bool done_ = false;
    bool first_ = true;
};

// Visits partitions of n in stream order.
void for_each_partition(std::uint64_t n, const std::function<void(const Partition&)>& fn);

/* Deterministic range-splitting for parallel map-reduce: worker `offset` of
 * `stride` visits the partitions whose stream index ≡ offset (mod stride).
 * Combining the per-worker results in offset order is reduction-order
 * independent only if the combine is associative-commutative (bigint sums are). */
void for_each_partition_strided(std::uint64_t n, unsigned stride, unsigned offset,
                                const std::function<void(const Partition&)>& fn);

// λ′ with λ′_j = #{i : λ_i ≥ j}; an involution.
Partition conjugate(const Partition& p);

// One hook length per box, row-major: η(i,j) = λ_i − j + λ′_j − i + 1.
std::vector<std::uint32_t> hook_lengths(const Partition& p);

// f_λ = n! / Π hooks, exact. f_∅ = 1.
BigCount dim_syt(const Partition& p);

// log f_λ via lgamma minus summed log-hooks; ~1e-12 relative at n ≤ 200.
double log_dim_syt(const Partition& p);

// C_λ = Σ_i λ_i(λ_i − 2i + 1)/2; satisfies C_{λ′} = −C_λ.
std::int64_t content_sum(const Partition& p);

// (λ⁺, λ⁻): parts > threshold and parts ≤ threshold, in original order.
std::pair<Partition, Partition> split_big_small(const Partition& p, std::uint32_t threshold);

// All ν obtained from μ by adding one box (μ ↗ ν); count = #distinct parts + 1.
std::vector<Partition> add_box_shapes(const Partition& mu);

// All μ obtained from λ by removing one box (μ ↗ λ); requires |λ| ≥ 1.
std::vector<Partition> remove_box_shapes(const Partition& lambda);

} // namespace phw
