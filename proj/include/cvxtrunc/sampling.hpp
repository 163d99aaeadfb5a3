#pragma once

#include <vector>

#include "cvxtrunc/vec.hpp"

namespace cvxtrunc {

/// Deterministic low-discrepancy sample of cfg.count unit vectors in the
/// given dimension. Dimension 1 alternates +1/-1, dimensions 2 and 3 use
/// golden-angle / Fibonacci constructions rotated by a seed-derived offset,
/// higher dimensions use seeded normalized Gaussians.
std::vector<Vec> sample_unit_sphere(int dim, const SampleConfig& cfg);

/// cfg.count unit vectors within Euclidean distance `radius` of the unit
/// vector `center` (0 < radius <= 2; radius 2 covers the whole sphere).
std::vector<Vec> refine_directions(const Vec& center, double radius, const SampleConfig& cfg);

}  // namespace cvxtrunc
