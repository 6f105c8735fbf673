#pragma once

#include <cstdint>
#include <functional>

#include "phw/measures.hpp"
#include "phw/partition.hpp"
#include "phw/rng.hpp"

namespace phw {

struct ChainConfig {
    std::uint64_t steps = 0;  // total proposal steps
    std::uint64_t burnin = 0; // steps before the first emission
    std::uint64_t thin = 1;   // emit every thin-th post-burn-in step
    std::uint64_t seed = 0;

    enum class Init { RowPlusStaircase, Given };
    Init init = Init::RowPlusStaircase;
    Partition initial; // used when init == Given

    void validate() const {
        if (burnin > steps)
            throw std::invalid_argument("chain config: burnin > steps");
        if (thin == 0)
            throw std::invalid_argument("chain config: thin must be >= 1");
    }
};

struct MhSample {
    std::uint64_t step;   // 1-based step index at emission
    Partition state;
    std::int64_t content; // C_λ of the state
    double logw;          // 2·log f_λ + ℓ·log|C_λ| (unnormalised log-weight)
};

struct MhResult {
    std::uint64_t proposals = 0;
    std::uint64_t accepts = 0; // includes self-proposals
    std::uint64_t emitted = 0;
    Partition final_state;
    std::int64_t final_content = 0;
    double final_logw = 0.0;
};

/* Warm start for high-genus targets: first part L₀ = round(2ℓ/log n) atop a
 * near-staircase bulk of the remaining n − L₀ boxes. */
Partition warm_start_partition(std::uint32_t n, std::uint32_t ell);

/* Metropolis–Hastings chain on partitions of n targeting the spec's measure.
 *
 * Proposal: pick a removable corner of λ uniformly, then an addable corner of
 * the intermediate (n−1)-box shape uniformly, and move the box there. For
 * ν ≠ λ the intermediate shape is shared by the forward and reverse moves, so
 * the Hastings correction collapses to R(λ)/R(ν), R = #removable corners.
 * Self-proposals are accepted outright. Proposals with C ≤ 0 (positive half)
 * or C = 0 (full, ℓ > 0) are rejected, implementing the conditioned support.
 *
 * Δlog f is computed from the hooks of the two affected rows and columns
 * only; C is maintained incrementally. Fully deterministic given cfg.seed. */
MhResult mh_sample(const MeasureSpec& spec, const ChainConfig& cfg,
                   const std::function<void(const MhSample&)>& sink);

} // namespace phw
