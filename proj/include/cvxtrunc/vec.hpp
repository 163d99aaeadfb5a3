#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cvxtrunc {

/// Dense vector; the dimension is the length. The library targets desk-scale
/// problems (analytic sets in dimension 1-3, small polyhedra in any small n).
using Vec = std::vector<double>;
/// Dense row-major matrix.
using Matrix = std::vector<Vec>;

struct DimensionMismatch : std::runtime_error {
    explicit DimensionMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct EmptySetError : std::runtime_error {
    explicit EmptySetError(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Numeric thresholds shared across the library. eps_feasibility gates LP
/// pivots and sign tests, eps_geometry is the target accuracy of geometric
/// queries, eps_classify is the coarser threshold used for verdicts.
/// Invariant: 0 < eps_feasibility <= eps_geometry <= eps_classify.
struct Tolerance {
    double eps_feasibility = 1e-9;
    double eps_geometry = 1e-6;
    double eps_classify = 1e-4;
    int max_refinement_rounds = 40;

    void validate() const {
        if (!(eps_feasibility > 0.0 && eps_geometry > 0.0 && eps_classify > 0.0))
            throw std::invalid_argument("tolerance: all epsilons must be strictly positive");
        if (!(eps_feasibility <= eps_geometry && eps_geometry <= eps_classify))
            throw std::invalid_argument(
                "tolerance: expected eps_feasibility <= eps_geometry <= eps_classify");
        if (max_refinement_rounds < 1)
            throw std::invalid_argument("tolerance: max_refinement_rounds must be positive");
    }
};

/// Parameters for deterministic direction sampling. The same seed always
/// reproduces the same samples.
struct SampleConfig {
    std::uint64_t seed = 0;
    int count = 256;
    int refinement_rounds = 3;

    void validate() const {
        if (count < 1) throw std::invalid_argument("sample config: count must be >= 1");
        if (refinement_rounds < 0)
            throw std::invalid_argument("sample config: refinement_rounds must be >= 0");
    }
};

inline double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double euclidean_norm(const Vec& v) { return std::sqrt(dot(v, v)); }

inline double distance(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

inline Vec add(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec scaled(const Vec& a, double t) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = t * a[i];
    return r;
}

inline Vec zeros(std::size_t n) { return Vec(n, 0.0); }

inline bool all_finite(const Vec& v) {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

/// Validates the basic vector invariants: dimension >= 1, all entries finite.
inline void check_vector(const Vec& v, const char* what = "vector") {
    if (v.empty()) throw std::invalid_argument(std::string(what) + ": dimension must be >= 1");
    if (!all_finite(v))
        throw std::invalid_argument(std::string(what) + ": entries must be finite");
}

inline void require_dimension(const Vec& v, std::size_t dim, const char* context) {
    if (v.size() != dim)
        throw DimensionMismatch(std::string(context) + ": expected dimension " +
                                std::to_string(dim) + ", got " + std::to_string(v.size()));
}

}  // namespace cvxtrunc
