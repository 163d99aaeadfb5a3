#include "cvxtrunc/linprog.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace cvxtrunc {

LinearProgram::LinearProgram(Vec objective_, Matrix constraint_matrix_, Vec rhs_)
    : objective(std::move(objective_)),
      constraint_matrix(std::move(constraint_matrix_)),
      rhs(std::move(rhs_)) {
    check_vector(objective, "LinearProgram objective");
    if (constraint_matrix.size() != rhs.size())
        throw DimensionMismatch("LinearProgram: row count does not match rhs length");
    for (const Vec& row : constraint_matrix) {
        if (row.size() != objective.size())
            throw DimensionMismatch("LinearProgram: row length does not match objective");
        if (!all_finite(row))
            throw std::invalid_argument("LinearProgram: matrix entries must be finite");
    }
    if (!all_finite(rhs)) throw std::invalid_argument("LinearProgram: rhs must be finite");
}

namespace {

// Tableau simplex over the split form x = u - v, u, v >= 0, with slack and
// artificial columns. Bland's rule throughout (smallest improving column,
// smallest basic variable on ratio ties) for determinism and termination.
struct Simplex {
    int m, cols;  // constraint rows, variable columns (excl. rhs)
    int art_start;
    std::vector<Vec> T;  // m rows of length cols+1
    std::vector<int> basis;
    double eps;

    void pivot(int r, int c, Vec& z_row) {
        const double piv = T[r][c];
        for (double& x : T[r]) x /= piv;
        for (int i = 0; i < m; ++i) {
            if (i == r) continue;
            const double f = T[i][c];
            if (std::abs(f) < 1e-300) continue;
            for (int j = 0; j <= cols; ++j) T[i][j] -= f * T[r][j];
            T[i][c] = 0.0;
        }
        const double fz = z_row[c];
        if (std::abs(fz) > 1e-300) {
            for (int j = 0; j <= cols; ++j) z_row[j] -= fz * T[r][j];
            z_row[c] = 0.0;
        }
        basis[r] = c;
    }

    // returns entering column of the unbounded direction, or -1 when optimal
    int run(Vec& z_row, int max_col) {
        for (;;) {
            int enter = -1;
            for (int j = 0; j < max_col; ++j) {
                if (z_row[j] > eps) {
                    enter = j;
                    break;
                }
            }
            if (enter < 0) return -1;
            int leave = -1;
            double best_ratio = std::numeric_limits<double>::infinity();
            for (int i = 0; i < m; ++i) {
                if (T[i][enter] > eps) {
                    const double ratio = T[i][cols] / T[i][enter];
                    if (ratio < best_ratio - 1e-15 ||
                        (std::abs(ratio - best_ratio) <= 1e-15 &&
                         (leave < 0 || basis[i] < basis[leave]))) {
                        best_ratio = ratio;
                        leave = i;
                    }
                }
            }
            if (leave < 0) return enter;
            pivot(leave, enter, z_row);
        }
    }
};

}  // namespace

LpOutcome solve(const LinearProgram& lp, const Tolerance& tol) {
    tol.validate();
    const int n = lp.num_vars();
    const int m = lp.num_rows();

    if (m == 0) {
        // no constraints: optimal at the origin iff the objective is zero
        bool zero = true;
        for (double c : lp.objective)
            if (std::abs(c) > tol.eps_feasibility) zero = false;
        LpOutcome out;
        if (zero) {
            out.status = LpOutcome::Status::Optimal;
            out.point = zeros(n);
            out.value = 0.0;
        } else {
            out.status = LpOutcome::Status::Unbounded;
            out.point = zeros(n);
            out.ray = scaled(lp.objective, 1.0 / euclidean_norm(lp.objective));
        }
        return out;
    }

    int n_art = 0;
    for (double bi : lp.rhs)
        if (bi < 0.0) ++n_art;

    Simplex s;
    s.m = m;
    s.art_start = 2 * n + m;
    s.cols = 2 * n + m + n_art;
    s.eps = tol.eps_feasibility;
    s.T.assign(m, Vec(s.cols + 1, 0.0));
    s.basis.assign(m, -1);

    int art = s.art_start;
    for (int i = 0; i < m; ++i) {
        const double sign = lp.rhs[i] < 0.0 ? -1.0 : 1.0;
        for (int j = 0; j < n; ++j) {
            s.T[i][j] = sign * lp.constraint_matrix[i][j];
            s.T[i][n + j] = -sign * lp.constraint_matrix[i][j];
        }
        s.T[i][2 * n + i] = sign;
        s.T[i][s.cols] = sign * lp.rhs[i];
        if (sign < 0.0) {
            s.T[i][art] = 1.0;
            s.basis[i] = art++;
        } else {
            s.basis[i] = 2 * n + i;
        }
    }

    if (n_art > 0) {
        // phase 1: maximize -(sum of artificials)
        Vec z1(s.cols + 1, 0.0);
        for (int j = s.art_start; j < s.cols; ++j) z1[j] = -1.0;
        for (int i = 0; i < m; ++i) {
            if (s.basis[i] >= s.art_start) {
                for (int j = 0; j <= s.cols; ++j) z1[j] += s.T[i][j];
                z1[s.basis[i]] = 0.0;
            }
        }
        s.run(z1, s.cols);
        double infeas = 0.0;
        for (int i = 0; i < m; ++i)
            if (s.basis[i] >= s.art_start) infeas += s.T[i][s.cols];
        if (infeas > tol.eps_feasibility) {
            LpOutcome out;
            out.status = LpOutcome::Status::Infeasible;
            return out;
        }
        // drive remaining artificials out of the basis where possible
        for (int i = 0; i < m; ++i) {
            if (s.basis[i] < s.art_start) continue;
            for (int j = 0; j < s.art_start; ++j) {
                if (std::abs(s.T[i][j]) > tol.eps_feasibility) {
                    Vec dummy(s.cols + 1, 0.0);
                    s.pivot(i, j, dummy);
                    break;
                }
            }
        }
    }

    // phase 2 objective over the split variables
    Vec z(s.cols + 1, 0.0);
    for (int j = 0; j < n; ++j) {
        z[j] = lp.objective[j];
        z[n + j] = -lp.objective[j];
    }
    for (int i = 0; i < m; ++i) {
        const int b = s.basis[i];
        double cb = 0.0;
        if (b < n)
            cb = lp.objective[b];
        else if (b < 2 * n)
            cb = -lp.objective[b - n];
        if (cb != 0.0) {
            for (int j = 0; j <= s.cols; ++j) z[j] -= cb * s.T[i][j];
            z[b] = 0.0;
        }
    }

    const int unbounded_col = s.run(z, s.art_start);

    Vec split(s.cols, 0.0);
    for (int i = 0; i < m; ++i)
        if (s.basis[i] < s.cols) split[s.basis[i]] = s.T[i][s.cols];
    Vec point(n);
    for (int j = 0; j < n; ++j) point[j] = split[j] - split[n + j];

    LpOutcome out;
    out.point = point;
    if (unbounded_col < 0) {
        out.status = LpOutcome::Status::Optimal;
        out.value = dot(lp.objective, point);
        return out;
    }

    // improving direction: entering column grows, basics move by -column
    Vec delta(s.cols, 0.0);
    delta[unbounded_col] = 1.0;
    for (int i = 0; i < m; ++i)
        if (s.basis[i] < s.cols) delta[s.basis[i]] = -s.T[i][unbounded_col];
    Vec ray(n);
    for (int j = 0; j < n; ++j) ray[j] = delta[j] - delta[n + j];
    const double rn = euclidean_norm(ray);
    out.status = LpOutcome::Status::Unbounded;
    out.ray = rn > 0.0 ? scaled(ray, 1.0 / rn) : ray;
    return out;
}

SupportValue support_h_polyhedron(const Matrix& A, const Vec& b, const Vec& d,
                                  const Tolerance& tol) {
    LinearProgram lp(d, A, b);
    const LpOutcome out = solve(lp, tol);
    switch (out.status) {
        case LpOutcome::Status::Optimal:
            return SupportValue::finite(out.value);
        case LpOutcome::Status::Unbounded:
            return SupportValue::plus_infinity();
        default:
            throw EmptySetError("support_h_polyhedron: the polyhedron is empty");
    }
}

bool cone_polar_membership_h(const Matrix& A, const Vec& y, const Tolerance& tol) {
    check_vector(y, "cone_polar_membership_h direction");
    const int n = static_cast<int>(y.size());
    Matrix rows = A;
    Vec rhs(A.size(), 0.0);
    for (int j = 0; j < n; ++j) {
        Vec up = zeros(n), dn = zeros(n);
        up[j] = 1.0;
        dn[j] = -1.0;
        rows.push_back(up);
        rows.push_back(dn);
        rhs.push_back(1.0);
        rhs.push_back(1.0);
    }
    const LpOutcome out = solve(LinearProgram(y, rows, rhs), tol);
    if (out.status != LpOutcome::Status::Optimal)
        throw std::logic_error("cone_polar_membership_h: box-bounded LP must be solvable");
    return out.value <= tol.eps_feasibility;
}

}  // namespace cvxtrunc
