#pragma once

// Shared helpers for the unit tests: seeded samplers and reference
// implementations written directly from the definitions.

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "medilog/medilog.hpp"

namespace medilog::testing {

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : gen_(seed) {}

    double unit() { return std::uniform_real_distribution<double>(0.0, 1.0)(gen_); }
    double range(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }
    std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(gen_); }
    bool coin() { return index(2) == 1; }
    Degree degree() { return Degree(unit()); }
    MediativePair pair() { return {unit(), unit()}; }

    std::mt19937_64& engine() { return gen_; }

private:
    std::mt19937_64 gen_;
};

// Mediative evaluation straight from the definitions, in long double.
inline double reference_m(double mu, double nu) {
    const long double m = mu, n = nu;
    const long double pi = std::max(0.0L, 1.0L - m - n);
    const long double zeta = std::max(0.0L, m + n - 1.0L);
    const long double w2 = pi + zeta / 2.0L;
    return static_cast<double>((1.0L - w2) * m + w2 * (1.0L - n));
}

inline double brute_force_min(const IntervalPair& box, int n) {
    double best = 2.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double mu = box.mu.lo + (box.mu.hi - box.mu.lo) * i / (n - 1);
            const double nu = box.nu.lo + (box.nu.hi - box.nu.lo) * j / (n - 1);
            best = std::min(best, reference_m(mu, nu));
        }
    return best;
}

inline double brute_force_max(const IntervalPair& box, int n) {
    double best = -1.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double mu = box.mu.lo + (box.mu.hi - box.mu.lo) * i / (n - 1);
            const double nu = box.nu.lo + (box.nu.hi - box.nu.lo) * j / (n - 1);
            best = std::max(best, reference_m(mu, nu));
        }
    return best;
}

inline IntervalPair random_box(Sampler& s) {
    double a = s.unit(), b = s.unit(), c = s.unit(), d = s.unit();
    return IntervalPair(std::min(a, b), std::max(a, b), std::min(c, d), std::max(c, d));
}

// Random FOU sampled at `n` grid points (breakpoints at every grid node).
inline IT2Set random_fou(Sampler& s, std::size_t n) {
    std::vector<PiecewiseLinear::Point> lo, up;
    for (std::size_t i = 0; i < n; ++i) {
        const double x = static_cast<double>(i) / static_cast<double>(n - 1);
        const double u = s.unit();
        const double l = u * s.unit();
        lo.push_back({x, l});
        up.push_back({x, u});
    }
    return IT2Set(PiecewiseLinear(lo), PiecewiseLinear(up));
}

// Centroid bounds by scanning every single-switch embedded set.
inline Interval single_switch_oracle(const IT2Set& set, std::size_t n) {
    std::vector<double> x(n), l(n), u(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = static_cast<double>(i) / static_cast<double>(n - 1);
        l[i] = set.lower()(x[i]);
        u[i] = set.upper()(x[i]);
    }
    double lo = 2.0, hi = -1.0;
    for (std::size_t k = 0; k <= n; ++k) {
        for (int upper_first = 0; upper_first < 2; ++upper_first) {
            long double num = 0, den = 0;
            for (std::size_t i = 0; i < n; ++i) {
                const bool left = i < k;
                const double w = (left == static_cast<bool>(upper_first)) ? u[i] : l[i];
                num += x[i] * w;
                den += w;
            }
            if (den <= 0) continue;
            const double c = static_cast<double>(num / den);
            if (upper_first) lo = std::min(lo, c);
            else hi = std::max(hi, c);
        }
    }
    return {lo, hi};
}

using C = std::complex<double>;

// Random d x d complex matrix with entries uniform in the unit square.
inline ComplexMatrix random_matrix(Sampler& s, std::size_t d) {
    ComplexMatrix m(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m(i, j) = C(s.range(-1, 1), s.range(-1, 1));
    return m;
}

inline ComplexMatrix random_hermitian(Sampler& s, std::size_t d) {
    const auto a = random_matrix(s, d);
    return 0.5 * (a + a.adjoint());
}

// B B^dagger scaled by its trace: PSD with spectrum in [0, scale].
inline ComplexMatrix random_psd(Sampler& s, std::size_t d, double scale) {
    const auto b = random_matrix(s, d);
    auto p = b * b.adjoint();
    return (scale / p.trace().real()) * p;
}

inline QuantumTriple random_triple(Sampler& s, std::size_t d) {
    return QuantumTriple(DensityOperator(random_psd(s, d, 1.0)), Effect(random_psd(s, d, s.unit())),
                         Effect(random_psd(s, d, s.unit())));
}

}  // namespace medilog::testing
