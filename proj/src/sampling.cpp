#include "cvxtrunc/sampling.hpp"

#include <cmath>
#include <random>

namespace cvxtrunc {

namespace {

constexpr double kPi = 3.14159265358979323846;
// fractional part of the golden ratio, used as the rotation increment
constexpr double kGolden = 0.61803398874989484820;

double seed_offset(std::uint64_t seed) {
    // splitmix64 scramble, mapped into [0, 1)
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    z = z ^ (z >> 31);
    return static_cast<double>(z >> 11) * 0x1.0p-53;
}

double frac(double x) { return x - std::floor(x); }

// deterministic uniform in [0,1) from a mt19937_64 draw
double unit_uniform(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

Vec gaussian_direction(int dim, std::mt19937_64& gen) {
    Vec v(dim);
    for (;;) {
        for (int i = 0; i < dim; i += 2) {
            // Box-Muller, hand rolled so the stream is implementation independent
            double u1 = unit_uniform(gen);
            while (u1 <= 1e-300) u1 = unit_uniform(gen);
            const double u2 = unit_uniform(gen);
            const double r = std::sqrt(-2.0 * std::log(u1));
            v[i] = r * std::cos(2.0 * kPi * u2);
            if (i + 1 < dim) v[i + 1] = r * std::sin(2.0 * kPi * u2);
        }
        const double n = euclidean_norm(v);
        if (n > 1e-12) {
            for (double& x : v) x /= n;
            return v;
        }
    }
}

// Householder-style rotation taking e_n (north pole) to `center`.
Vec rotate_pole_to(const Vec& center, const Vec& p) {
    const int n = static_cast<int>(center.size());
    Vec pole = zeros(n);
    pole[n - 1] = 1.0;
    Vec w = sub(pole, center);
    const double wn = euclidean_norm(w);
    if (wn < 1e-14) return p;
    for (double& x : w) x /= wn;
    // reflect across the hyperplane orthogonal to w: maps pole -> center
    const double c = 2.0 * dot(w, p);
    Vec r(p);
    for (int i = 0; i < n; ++i) r[i] -= c * w[i];
    return r;
}

}  // namespace

std::vector<Vec> sample_unit_sphere(int dim, const SampleConfig& cfg) {
    cfg.validate();
    if (dim < 1) throw std::invalid_argument("sample_unit_sphere: dim must be >= 1");
    std::vector<Vec> out;
    out.reserve(static_cast<std::size_t>(cfg.count));

    if (dim == 1) {
        for (int i = 0; i < cfg.count; ++i) out.push_back(Vec{i % 2 == 0 ? 1.0 : -1.0});
        return out;
    }

    if (dim == 2) {
        const double rot = seed_offset(cfg.seed);
        for (int i = 0; i < cfg.count; ++i) {
            const double theta = 2.0 * kPi * frac((i + 0.5) * kGolden + rot);
            out.push_back(Vec{std::cos(theta), std::sin(theta)});
        }
        return out;
    }

    if (dim == 3) {
        // Fibonacci sphere with a seed-derived rotation about the z axis
        const double rot = seed_offset(cfg.seed);
        for (int i = 0; i < cfg.count; ++i) {
            const double z = 1.0 - 2.0 * (i + 0.5) / cfg.count;
            const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
            const double theta = 2.0 * kPi * frac(i * kGolden + rot);
            out.push_back(Vec{rho * std::cos(theta), rho * std::sin(theta), z});
        }
        return out;
    }

    std::mt19937_64 gen(cfg.seed);
    for (int i = 0; i < cfg.count; ++i) out.push_back(gaussian_direction(dim, gen));
    return out;
}

std::vector<Vec> refine_directions(const Vec& center, double radius, const SampleConfig& cfg) {
    cfg.validate();
    check_vector(center, "refine_directions center");
    const int dim = static_cast<int>(center.size());
    if (!(radius > 0.0 && radius <= 2.0))
        throw std::invalid_argument("refine_directions: radius must satisfy 0 < radius <= 2");
    const double cn = euclidean_norm(center);
    if (std::abs(cn - 1.0) > 1e-6)
        throw std::invalid_argument("refine_directions: center must have unit norm");

    std::vector<Vec> out;
    out.reserve(static_cast<std::size_t>(cfg.count));

    if (dim == 1) {
        for (int i = 0; i < cfg.count; ++i) out.push_back(center);
        return out;
    }

    if (dim == 2) {
        // chord length 2 sin(beta/2) <= radius
        const double beta = 2.0 * std::asin(std::min(1.0, radius / 2.0));
        const double base = std::atan2(center[1], center[0]);
        const double rot = seed_offset(cfg.seed);
        for (int i = 0; i < cfg.count; ++i) {
            const double t = 2.0 * frac((i + 0.5) * kGolden + rot) - 1.0;
            const double theta = base + t * beta;
            out.push_back(Vec{std::cos(theta), std::sin(theta)});
        }
        return out;
    }

    if (dim == 3) {
        // Fibonacci points on the polar cap of chordal radius `radius`,
        // rotated so the cap center lands on `center`.
        const double zmin = 1.0 - std::min(2.0, radius * radius / 2.0);
        const double rot = seed_offset(cfg.seed);
        for (int i = 0; i < cfg.count; ++i) {
            const double z = 1.0 - (i + 0.5) / cfg.count * (1.0 - zmin);
            const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
            const double theta = 2.0 * kPi * frac(i * kGolden + rot);
            Vec p{rho * std::cos(theta), rho * std::sin(theta), z};
            Vec r = rotate_pole_to(center, p);
            const double n = euclidean_norm(r);
            for (double& x : r) x /= n;
            out.push_back(std::move(r));
        }
        return out;
    }

    std::mt19937_64 gen(cfg.seed);
    for (int i = 0; i < cfg.count; ++i) {
        Vec s = gaussian_direction(dim, gen);
        // slide from s toward center until the chord constraint holds
        double alpha = 1.0;
        Vec v = s;
        for (int k = 0; k < 60; ++k) {
            Vec cand(dim);
            for (int j = 0; j < dim; ++j) cand[j] = center[j] + alpha * (s[j] - center[j]);
            const double n = euclidean_norm(cand);
            if (n > 1e-12) {
                for (double& x : cand) x /= n;
                if (distance(cand, center) <= radius) {
                    v = cand;
                    break;
                }
            }
            alpha *= 0.5;
            v = center;
        }
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace cvxtrunc
