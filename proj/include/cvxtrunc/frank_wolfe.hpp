#pragma once

#include <functional>

#include "cvxtrunc/vec.hpp"

namespace cvxtrunc {

struct ProjectionResult {
    Vec point;
    double dist = 0.0;
    double gap = 0.0;  // Frank-Wolfe duality gap on ||target - y||^2 at exit
    int iterations = 0;
};

/// Minimizes ||target - y||^2 over the convex hull reachable through a linear
/// minimization oracle (argmin of g^T y over the feasible set). Away steps
/// over the active atom set give linear convergence on polytopes, so the
/// returned point is an essentially exact projection at desk scale.
ProjectionResult project_with_oracle(const Vec& target,
                                     const std::function<Vec(const Vec&)>& linear_min_oracle,
                                     double gap_tol, int max_iterations = 4000);

}  // namespace cvxtrunc
