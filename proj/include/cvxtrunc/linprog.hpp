#pragma once

#include "cvxtrunc/support_value.hpp"
#include "cvxtrunc/vec.hpp"

namespace cvxtrunc {

/// maximize objective^T x subject to constraint_matrix x <= rhs, x free.
struct LinearProgram {
    Vec objective;
    Matrix constraint_matrix;
    Vec rhs;

    LinearProgram(Vec objective, Matrix constraint_matrix, Vec rhs);

    int num_vars() const { return static_cast<int>(objective.size()); }
    int num_rows() const { return static_cast<int>(rhs.size()); }
};

struct LpOutcome {
    enum class Status { Optimal, Unbounded, Infeasible };
    Status status = Status::Infeasible;
    Vec point;           // Optimal: argmax; Unbounded: a feasible point
    double value = 0.0;  // Optimal only
    Vec ray;             // Unbounded only, unit norm, A ray <= eps, objective^T ray > 0
};

/// Dense two-phase simplex with Bland's pivot rule. Deterministic: identical
/// inputs produce identical pivot sequences and outcomes.
LpOutcome solve(const LinearProgram& lp, const Tolerance& tol);

/// sigma_C(d) for C = {x : Ax <= b}. Throws EmptySetError when C is empty.
SupportValue support_h_polyhedron(const Matrix& A, const Vec& b, const Vec& d,
                                  const Tolerance& tol);

/// Membership of y in the polar of the cone {x : Ax <= 0}, decided by the
/// box-bounded LP max{y^T x : Ax <= 0, |x|_inf <= 1}.
bool cone_polar_membership_h(const Matrix& A, const Vec& y, const Tolerance& tol);

}  // namespace cvxtrunc
