#include "cvxtrunc/maximize.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace cvxtrunc {

namespace {

// grid points per axis: a dense first pass, then cheaper shrink rounds
int first_grid(int dim) { return dim == 1 ? 65 : (dim == 2 ? 25 : 11); }
int later_grid(int dim) { return dim == 1 ? 25 : (dim == 2 ? 11 : 7); }

}  // namespace

BoxMaxResult maximize_over_box(const std::function<double(const Vec&)>& f, const Vec& lower,
                               const Vec& upper, const Tolerance& tol) {
    check_vector(lower, "maximize_over_box lower");
    check_vector(upper, "maximize_over_box upper");
    if (lower.size() != upper.size())
        throw DimensionMismatch("maximize_over_box: lower/upper dimensions differ");
    const int dim = static_cast<int>(lower.size());
    if (dim > 3)
        throw std::invalid_argument("maximize_over_box: dimension > 3 is not supported");
    for (int i = 0; i < dim; ++i)
        if (lower[i] > upper[i])
            throw std::invalid_argument("maximize_over_box: lower > upper");

    Vec lo = lower, hi = upper;
    Vec best_x = lo;
    double best_v = -std::numeric_limits<double>::infinity();

    double width0 = 0.0;
    for (int i = 0; i < dim; ++i) width0 = std::max(width0, hi[i] - lo[i]);
    const double stop_width = std::max(1e-13, 1e-11 * std::max(1.0, width0));

    for (int round = 0; round < tol.max_refinement_rounds; ++round) {
        const int k = round == 0 ? first_grid(dim) : later_grid(dim);
        std::array<int, 3> idx{0, 0, 0};
        std::array<int, 3> counts{1, 1, 1};
        for (int i = 0; i < dim; ++i) counts[i] = (hi[i] - lo[i]) > 0.0 ? k : 1;

        Vec round_best_x = best_x;
        double round_best_v = -std::numeric_limits<double>::infinity();
        Vec x(dim);
        for (;;) {
            for (int i = 0; i < dim; ++i) {
                x[i] = counts[i] == 1
                           ? lo[i]
                           : lo[i] + (hi[i] - lo[i]) * idx[i] / (counts[i] - 1);
            }
            const double v = f(x);
            if (v > round_best_v) {
                round_best_v = v;
                round_best_x = x;
            }
            int d = 0;
            while (d < dim && ++idx[d] == counts[d]) idx[d++] = 0;
            if (d == dim) break;
        }
        if (round_best_v > best_v) {
            best_v = round_best_v;
            best_x = round_best_x;
        }

        // shrink around the incumbent, staying inside the original box
        double width = 0.0;
        for (int i = 0; i < dim; ++i) {
            const double spacing = counts[i] == 1 ? 0.0 : (hi[i] - lo[i]) / (counts[i] - 1);
            const double half = 1.6 * spacing;
            lo[i] = std::max(lower[i], best_x[i] - half);
            hi[i] = std::min(upper[i], best_x[i] + half);
            width = std::max(width, hi[i] - lo[i]);
        }
        if (width < stop_width) break;
    }
    return BoxMaxResult{best_x, best_v};
}

LineMinResult minimize_1d(const std::function<double(double)>& f, double lo, double hi,
                          const Tolerance& tol) {
    const auto res = maximize_over_box([&f](const Vec& x) { return -f(x[0]); }, Vec{lo},
                                       Vec{hi}, tol);
    return LineMinResult{res.argmax[0], -res.value};
}

}  // namespace cvxtrunc
