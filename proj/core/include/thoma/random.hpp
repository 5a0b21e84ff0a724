#pragma once

#include <cstdint>
#include <random>

#include "thoma/cocycle.hpp"
#include "thoma/permutation.hpp"

namespace thoma {

using Rng = std::mt19937_64;

/// Uniform permutation of the window {1..w} (plain) or {1+..w+, 1-..w-}
/// (signed), by Fisher-Yates.
Permutation random_permutation(Rng& rng, std::uint32_t window, Regime regime = Regime::plain);

/// Uniform over the window, independently per component of the pair's shape.
GroupElement random_element(Rng& rng, const PairSpec& pair, std::uint32_t window);

/// Uniform element of the subgroup K restricted to the window: a diagonal
/// (sigma, sigma[, sigma]) for A/D; a permutation of the pairs (j+, j-),
/// each optionally flipped, for B; the same without flips for C.
GroupElement random_subgroup_element(Rng& rng, const PairSpec& pair, std::uint32_t window);

}  // namespace thoma
