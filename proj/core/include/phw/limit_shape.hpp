#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "phw/bigcount.hpp"
#include "phw/partition.hpp"
#include "phw/profile.hpp"

namespace phw {

/* The VKLS curve: (2/π)(x·arcsin(x/2) + √(4−x²)) on [−2, 2], |x| outside.
 * Even, continuous at ±2 (both branches give 2), 1-Lipschitz. */
double omega(double x);

/* A piecewise-linear shape in rescaled Russian coordinates: vertices with
 * ascending x, ψ(x) = |x| outside the vertex range. Generalises Profile to
 * non-±1 slopes so smooth-curve interpolants can flow through the same
 * analysis code. */
struct PolylineShape {
    std::vector<std::pair<double, double>> pts;

    double eval(double x) const;

    static PolylineShape from_profile(const Profile& profile);
    // Ω sampled at `segments`+1 uniform points of [−2, 2].
    static PolylineShape omega_interpolant(std::size_t segments);
};

/* sup_x |ψ − Ω|, computed exactly up to bracketing tolerance: the candidate
 * set is the segment mesh (profile corners plus the kinks of Ω and |x|) and
 * one golden-section maximisation per segment — never a naive grid.
 * With exclude_first_part the profile is rebuilt from λ̃ = (λ₂, λ₃, …)
 * keeping the original √n scaling. */
double sup_distance(const Profile& psi, bool exclude_first_part = false);
double sup_distance(const PolylineShape& psi);

/* C_λ recovered from the profile: (n^{3/2}/2)·∫x(ψ_λ−|x|)dx, exact.
 * The module's convention-anchoring identity: equals content_sum(λ). */
Rational content_from_profile(const Partition& lambda);

struct QuadratureOptions {
    double abs_tol = 1e-4;
    int max_depth = 32;
};

class QuadratureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/* Hook energy I(ψ) = ∫₀^∞ ∫₀^{φ(u)} log η(u,v) dv du, where φ is the
 * row-length function of ψ in French coordinates and η(u,v) the rescaled
 * hook. The inner integral is evaluated in closed form on each linear piece
 * (the boundary log-singularity integrates exactly via t·log t → 0); the
 * outer integral is adaptive Simpson split at the row-function breakpoints.
 * Throws QuadratureError with diagnostics when the tolerance is unreachable.
 *
 * Anchors: I(Ω) = −1/2, and log(f_λ²/n!) + n(1 + 2I(ψ_λ)) = O(√n·log n). */
double hook_integral(const PolylineShape& psi, QuadratureOptions opts = {});
double hook_integral(const Partition& lambda, QuadratureOptions opts = {});

struct ShapeStats {
    double lambda1_ratio;  // λ₁·log n / (2ℓ)
    double lambda2_scaled; // λ₂/√n
    double length_scaled;  // ℓ(λ)/√n
    double sup_dist_bulk;  // sup|ψ_λ̃ − Ω| at √n scaling
};

// pre: |λ| = n, λ nonempty, ℓ ≥ 1.
ShapeStats shape_stats(const Partition& lambda, std::uint64_t n, std::uint64_t ell);

} // namespace phw
