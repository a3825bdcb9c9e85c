#pragma once

#include "fpalg/poly.hpp"

#include <random>

namespace fpalg {

/// Deterministic random polynomials for property checks: a handful of terms
/// with small exact coefficients drawn from a fixed palette. Seeding the
/// engine pins the whole sequence, so expected values can be frozen.
Poly random_poly(std::mt19937& rng, unsigned generator_count,
                 unsigned max_degree, unsigned max_terms = 4);

/// A random coefficient from the palette (+-1, +-2, +-1/2, +-3/4, i, -i,
/// 1 + i, 1/2 - i, ...). Never zero.
Scalar random_scalar(std::mt19937& rng);

} // namespace fpalg
