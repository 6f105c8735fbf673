#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

#include "phw/bigcount.hpp"
#include "phw/partition.hpp"

namespace phw {

struct HurwitzQuery {
    std::uint32_t n = 1;   // group degree / vertex count
    std::uint32_t ell = 0; // number of transpositions / edges
};

/* Enumeration over partitions of n is refused when p(n) exceeds the budget.
 * Default budget 2·10⁶ (reached just above n = 62); override via the
 * PHW_BUDGET environment variable or an explicit HurwitzOptions::budget. */
class BudgetError : public std::runtime_error {
public:
    BudgetError(std::uint32_t n, std::uint64_t budget);
    std::uint32_t n;
    std::uint64_t budget;
};

std::uint64_t enumeration_budget(); // env override or the 2·10⁶ default
void check_enumeration_budget(std::uint32_t n, std::uint64_t budget);

struct HurwitzOptions {
    unsigned threads = 1;     // Frobenius map-reduce workers
    std::uint64_t budget = 0; // 0 → enumeration_budget()
};

// Λ-restriction for partial partition functions Z_n(Λ).
class RestrictedPredicate {
public:
    static RestrictedPredicate all();
    static RestrictedPredicate first_part_equals(std::uint32_t L);
    static RestrictedPredicate first_part_in(std::uint32_t lo, std::uint32_t hi);
    static RestrictedPredicate custom(std::function<bool(const Partition&)> filter);

    bool matches(const Partition& p) const;

private:
    enum class Kind { All, FirstPartEquals, FirstPartInRange, Custom };
    Kind kind_ = Kind::All;
    std::uint32_t lo_ = 0, hi_ = 0;
    std::function<bool(const Partition&)> filter_;
};

/* H_{n,ℓ} = (1/n!)·Σ_{λ⊢n} f_λ²·C_λ^ℓ, exact. The division by n! is checked
 * for exactness and the result is a non-negative integer; odd ℓ gives 0. */
BigCount hurwitz_number(HurwitzQuery q, HurwitzOptions opts = {});

/* Independent oracle: dynamic programming over all n! group elements,
 * convolving the transposition step ℓ times and reading off the count at the
 * identity. Counts tuples directly (no representation theory), so it
 * cross-checks the Frobenius pipeline. Refuses n > 7. */
BigCount hurwitz_number_bruteforce(HurwitzQuery q);

// Z_n(Λ) = (1/n!)·Σ_{λ∈Λ} f_λ²·C_λ^ℓ as an exact rational.
Rational restricted_Z(HurwitzQuery q, const RestrictedPredicate& pred, HurwitzOptions opts = {});

/* log of the explicit factor in the high-genus growth estimate:
 * 2ℓ·log(ℓ/log n) + (log 2 − 2)·ℓ. Comparison-report material only; the
 * dropped o(n) exponent dominates at desk sizes. */
double asymptotic_log_estimate(HurwitzQuery q);

// H_{n,ℓ} / C(n,2)^ℓ in lowest terms: the transposition walk's return probability.
Rational return_probability(HurwitzQuery q, HurwitzOptions opts = {});

} // namespace phw
