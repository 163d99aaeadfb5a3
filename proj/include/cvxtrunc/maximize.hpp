#pragma once

#include <functional>

#include "cvxtrunc/vec.hpp"

namespace cvxtrunc {

struct BoxMaxResult {
    Vec argmax;
    double value = 0.0;
};

/// Derivative-free maximization over an axis-aligned box in dimension 1-3 by
/// iterated grid-shrink search. For a continuous concave objective the result
/// is within tol.eps_geometry of the true maximum; the dense first grid also
/// copes with mildly multimodal boundary parametrizations.
BoxMaxResult maximize_over_box(const std::function<double(const Vec&)>& f, const Vec& lower,
                               const Vec& upper, const Tolerance& tol);

struct LineMinResult {
    double arg = 0.0;
    double value = 0.0;
};

/// Convenience wrapper: 1D minimization on [lo, hi] via the same engine.
LineMinResult minimize_1d(const std::function<double(double)>& f, double lo, double hi,
                          const Tolerance& tol);

}  // namespace cvxtrunc
