#pragma once

#include <cstdint>
#include <vector>

#include "phw/partition.hpp"
#include "phw/rng.hpp"

namespace phw {

// A permutation of [n] as the image sequence σ(1), …, σ(n), 1-based values.
using Permutation = std::vector<std::uint32_t>;

// Throws std::invalid_argument unless σ is a bijection on [n].
void validate_permutation(const Permutation& sigma);

struct RskResult {
    std::vector<std::vector<std::uint32_t>> p; // insertion tableau
    std::vector<std::vector<std::uint32_t>> q; // recording tableau
    Partition shape() const;
};

// Standard row insertion; P and Q are standard Young tableaux of equal shape.
RskResult rsk(const Permutation& sigma);

// Shape of rsk(σ) without building Q (the sampler's fast path).
Partition rsk_shape(const Permutation& sigma);

// Fisher–Yates with the deterministic bounded-int mapping of Rng.
Permutation random_permutation(std::uint64_t n, Rng& rng);

enum class PlancherelMethod { Rsk, Growth };

/* One exact Plancherel(n) draw. Rsk: shape of a uniform permutation under
 * row insertion. Growth: Markov growth from ∅, stepping μ → ν (one box
 * added) with probability f_ν / (|ν|·f_μ). */
Partition plancherel_sample(std::uint64_t n, Rng& rng, PlancherelMethod method);

} // namespace phw
