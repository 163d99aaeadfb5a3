#include "cvxtrunc/frank_wolfe.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace cvxtrunc {

namespace {

int find_atom(const std::vector<Vec>& atoms, const Vec& a) {
    for (std::size_t i = 0; i < atoms.size(); ++i)
        if (atoms[i] == a) return static_cast<int>(i);
    return -1;
}

}  // namespace

ProjectionResult project_with_oracle(const Vec& target,
                                     const std::function<Vec(const Vec&)>& lmo,
                                     double gap_tol, int max_iterations) {
    const std::size_t n = target.size();

    std::vector<Vec> atoms;
    std::vector<double> weights;
    Vec y = lmo(scaled(target, -2.0));
    atoms.push_back(y);
    weights.push_back(1.0);

    ProjectionResult res;
    Vec grad(n), dir(n);
    for (int it = 0; it < max_iterations; ++it) {
        res.iterations = it + 1;
        for (std::size_t i = 0; i < n; ++i) grad[i] = 2.0 * (y[i] - target[i]);

        const Vec s = lmo(grad);
        double fw_gap = 0.0;
        for (std::size_t i = 0; i < n; ++i) fw_gap -= grad[i] * (s[i] - y[i]);
        res.gap = fw_gap;
        if (fw_gap <= gap_tol) break;

        // worst active atom for the away step
        int away = 0;
        double away_score = -std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < atoms.size(); ++i) {
            const double sc = dot(grad, atoms[i]);
            if (sc > away_score) {
                away_score = sc;
                away = static_cast<int>(i);
            }
        }
        const double away_gap = away_score - dot(grad, y);

        bool fw_step = fw_gap >= away_gap;
        double gamma_max;
        if (fw_step) {
            for (std::size_t i = 0; i < n; ++i) dir[i] = s[i] - y[i];
            gamma_max = 1.0;
        } else {
            for (std::size_t i = 0; i < n; ++i) dir[i] = y[i] - atoms[away][i];
            const double w = weights[away];
            if (w >= 1.0 - 1e-15) {
                // single-atom active set: the away direction is void
                for (std::size_t i = 0; i < n; ++i) dir[i] = s[i] - y[i];
                fw_step = true;
                gamma_max = 1.0;
            } else {
                gamma_max = w / (1.0 - w);
            }
        }

        const double dd = dot(dir, dir);
        if (dd <= 1e-300) break;
        double gamma = -dot(grad, dir) / (2.0 * dd);
        gamma = std::clamp(gamma, 0.0, gamma_max);
        if (gamma <= 0.0) break;

        for (std::size_t i = 0; i < n; ++i) y[i] += gamma * dir[i];
        if (fw_step) {
            for (double& w : weights) w *= 1.0 - gamma;
            const int k = find_atom(atoms, s);
            if (k >= 0) {
                weights[k] += gamma;
            } else {
                atoms.push_back(s);
                weights.push_back(gamma);
            }
        } else {
            for (double& w : weights) w *= 1.0 + gamma;
            weights[away] -= gamma;
        }

        // drop dead atoms
        for (std::size_t i = atoms.size(); i-- > 0;) {
            if (weights[i] < 1e-14) {
                atoms.erase(atoms.begin() + static_cast<long>(i));
                weights.erase(weights.begin() + static_cast<long>(i));
            }
        }
    }

    res.point = y;
    res.dist = distance(target, y);
    return res;
}

}  // namespace cvxtrunc
