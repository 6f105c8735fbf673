#pragma once

#include <cstdint>
#include <vector>

#include "phw/bigcount.hpp"
#include "phw/partition.hpp"

namespace phw {

/* Rescaled profile ψ_λ: the Young-diagram boundary in Russian coordinates,
 * scaled by 1/√n in both directions. Internally the boundary is stored
 * exactly, as integer corners (X, Y) of the unrescaled path: slopes
 * alternate −1/+1, the path equals |X| outside [−ℓ(λ), λ₁], and each box
 * contributes unrescaled area 2 — hence ∫(ψ−|x|)dx = 2 when n = |λ|.
 *
 * The normalisation size n may exceed |λ|: profiling λ̃ = λ minus its first
 * part against the original √n scaling is exactly that use. */
class Profile {
public:
    struct Corner {
        std::int64_t x, y;
    };

    // pre: |λ| ≤ n. n = 0 is allowed only for the empty partition.
    Profile(const Partition& lambda, std::uint64_t n);

    std::uint64_t norm() const { return norm_; }
    double scale() const; // 1/√n
    const Partition& source() const { return source_; }
    // Slope-change corners of the unrescaled boundary, x ascending; empty for λ = ∅.
    const std::vector<Corner>& corners() const { return corners_; }

    // ψ(x) in rescaled coordinates; equals |x| outside the support.
    double psi(double x) const;

    // ∫(ψ(x) − |x|)dx, exact: equals 2|λ|/n.
    Rational area_above_axis() const;

    // ∫x·(ψ(x) − |x|)dx scaled by n^{3/2}/2, exact: equals C_λ. The n^{3/2}
    // factor cancels against the unrescaled moment, so no radicals appear.
    Rational content_moment_half() const;

    // 1-Lipschitz check of the stored path (defensive; true by construction).
    bool is_one_lipschitz() const;

private:
    Partition source_;
    std::uint64_t norm_ = 0;
    std::vector<Corner> corners_;
};

// Factory matching the operation name; default normalisation n = |λ|.
Profile rescaled_profile(const Partition& lambda);
Profile rescaled_profile(const Partition& lambda, std::uint64_t n);

} // namespace phw
