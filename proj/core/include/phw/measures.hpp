#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>

#include "phw/bigcount.hpp"
#include "phw/hurwitz.hpp"
#include "phw/partition.hpp"

namespace phw {

enum class MeasureVariant { Full, PositiveHalf };

/* Target measure: λ weighted by f_λ²·C_λ^ℓ, normalised by n!·H_{n,ℓ}.
 * ℓ must be even (odd ℓ has no probability interpretation). The positive
 * half conditions on C_λ > 0, doubling the full-measure mass there. */
struct MeasureSpec {
    std::uint32_t n = 1;
    std::uint32_t ell = 0;
    MeasureVariant variant = MeasureVariant::Full;

    void validate() const {
        if (n < 1)
            throw std::invalid_argument("measure requires n >= 1");
        if (ell % 2 != 0)
            throw std::invalid_argument("measure requires even ell");
        if (variant == MeasureVariant::PositiveHalf && ell == 0)
            throw std::invalid_argument("positive-half measure requires ell > 0");
    }
};

class UndefinedMeasureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/* Exact probabilities for every partition of n. The full table carries all
 * partitions (including zero-mass ones); the positive-half table carries
 * exactly the C_λ > 0 support. Probabilities sum to exactly 1. */
struct ExactMeasureTable {
    MeasureSpec spec;
    std::map<Partition, Rational> entries;

    Rational total() const {
        Rational t(0);
        for (const auto& [p, prob] : entries)
            t += prob;
        return t;
    }

    Rational probability(const Partition& p) const {
        auto it = entries.find(p);
        return it == entries.end() ? Rational(0) : it->second;
    }
};

ExactMeasureTable exact_measure(MeasureSpec spec, HurwitzOptions opts = {});

} // namespace phw
