#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace phw {

// Arbitrary-precision signed integer: exact container for SYT counts f_λ,
// content-sum powers C_λ^ℓ and Frobenius numerators. No rounding, ever.
using BigCount = mpz_class;

// Exact rational, kept in lowest terms by GMP's canonicalisation.
using Rational = mpq_class;

inline BigCount factorial_big(std::uint64_t n) {
    BigCount r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline BigCount pow_big(const BigCount& base, std::uint64_t e) {
    BigCount r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

inline std::string to_decimal(const BigCount& v) { return v.get_str(); }

inline std::string to_decimal(const Rational& v) {
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

} // namespace phw
