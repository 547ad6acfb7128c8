#pragma once

// Quantum mediative semantics over small finite-dimensional Hilbert spaces.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "medilog/mediative.hpp"

namespace medilog {

using Complex = std::complex<double>;

inline constexpr std::size_t kMinDimension = 2;
inline constexpr std::size_t kMaxDimension = 16;
inline constexpr double kHermitianTolerance = 1e-10;
inline constexpr double kSpectralTolerance = 1e-10;

/// Dense square complex matrix, row-major.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}
    ComplexMatrix(std::size_t dim, std::vector<Complex> data) : dim_(dim), data_(std::move(data)) {
        if (data_.size() != dim_ * dim_) throw DimensionMismatch("matrix data does not match dimension");
    }

    static ComplexMatrix identity(std::size_t dim) {
        ComplexMatrix m(dim);
        for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
        return m;
    }

    static ComplexMatrix diagonal(const std::vector<double>& d) {
        ComplexMatrix m(d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    std::size_t dim() const noexcept { return dim_; }
    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
        same_dim(a, b);
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
        return a;
    }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
        same_dim(a, b);
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
        return a;
    }
    friend ComplexMatrix operator*(double s, ComplexMatrix a) {
        for (auto& x : a.data_) x *= s;
        return a;
    }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
        same_dim(a, b);
        ComplexMatrix c(a.dim_);
        for (std::size_t i = 0; i < a.dim_; ++i)
            for (std::size_t k = 0; k < a.dim_; ++k) {
                const Complex aik = a(i, k);
                for (std::size_t j = 0; j < a.dim_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    Complex trace() const {
        Complex t = 0.0;
        for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
        return t;
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& x : data_) m = std::max(m, std::abs(x));
        return m;
    }

    ComplexMatrix adjoint() const {
        ComplexMatrix h(dim_);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j) h(i, j) = std::conj((*this)(j, i));
        return h;
    }

private:
    static void same_dim(const ComplexMatrix& a, const ComplexMatrix& b) {
        if (a.dim_ != b.dim_) {
            throw DimensionMismatch("dimensions " + std::to_string(a.dim_) + " and " + std::to_string(b.dim_));
        }
    }

    std::size_t dim_ = 0;
    std::vector<Complex> data_;
};

/// Self-adjoint matrix of dimension 2..16, validated on construction.
class HermitianMatrix {
public:
    explicit HermitianMatrix(ComplexMatrix m) : m_(std::move(m)) {
        if (m_.dim() < kMinDimension || m_.dim() > kMaxDimension) {
            throw DimensionMismatch("dimension must be in [2, 16], got " + std::to_string(m_.dim()));
        }
        for (std::size_t i = 0; i < m_.dim(); ++i)
            for (std::size_t j = i; j < m_.dim(); ++j) {
                if (std::abs(m_(i, j) - std::conj(m_(j, i))) > kHermitianTolerance) {
                    throw NotHermitian("entry (" + std::to_string(i) + "," + std::to_string(j) +
                                       ") is not the conjugate of its transpose");
                }
            }
        // Symmetrize so downstream arithmetic sees an exactly Hermitian matrix.
        for (std::size_t i = 0; i < m_.dim(); ++i) {
            m_(i, i) = m_(i, i).real();
            for (std::size_t j = i + 1; j < m_.dim(); ++j) {
                const Complex avg = 0.5 * (m_(i, j) + std::conj(m_(j, i)));
                m_(i, j) = avg;
                m_(j, i) = std::conj(avg);
            }
        }
    }

    std::size_t dim() const noexcept { return m_.dim(); }
    const ComplexMatrix& matrix() const noexcept { return m_; }

private:
    ComplexMatrix m_;
};

inline constexpr int kJacobiMaxSweeps = 100;

/// Eigenvalues (ascending) by cyclic complex Jacobi rotations. Each
/// rotation first removes the phase of the pivot, then applies a real
/// Givens rotation zeroing it.
inline std::vector<double> hermitian_eigenvalues(const HermitianMatrix& h) {
    ComplexMatrix a = h.matrix();
    const std::size_t n = a.dim();
    auto off_norm = [&] {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) s += std::norm(a(i, j));
        return std::sqrt(s);
    };
    int sweep = 0;
    while (off_norm() >= 1e-12) {
        if (++sweep > kJacobiMaxSweeps) throw NoConvergence("Jacobi did not converge in 100 sweeps");
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double g = std::abs(apq);
                if (g < 1e-300) continue;
                const Complex phase = apq / g;  // a_pq = g * phase
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double theta = (aqq - app) / (2.0 * g);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                // J = D R with D = diag(1, conj(phase)) on (p,q) and
                // R = [[c, s], [-s, c]]; A <- J^H A J.
                const Complex jpp = c;
                const Complex jpq = s;
                const Complex jqp = -s * std::conj(phase);
                const Complex jqq = c * std::conj(phase);
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex akp = a(k, p);
                    const Complex akq = a(k, q);
                    a(k, p) = akp * jpp + akq * jqp;
                    a(k, q) = akp * jpq + akq * jqq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex apk = a(p, k);
                    const Complex aqk = a(q, k);
                    a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
                    a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
            }
    }
    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = a(i, i).real();
    std::sort(ev.begin(), ev.end());
    return ev;
}

/// 0 <= E <= I in the Loewner order.
class Effect {
public:
    explicit Effect(HermitianMatrix m) : m_(std::move(m)) {
        const auto ev = hermitian_eigenvalues(m_);
        if (ev.front() < -kSpectralTolerance || ev.back() > 1.0 + kSpectralTolerance) {
            throw DomainError("not an effect: spectrum [" + std::to_string(ev.front()) + ", " +
                              std::to_string(ev.back()) + "] outside [0,1]");
        }
    }
    explicit Effect(ComplexMatrix m) : Effect(HermitianMatrix(std::move(m))) {}

    std::size_t dim() const noexcept { return m_.dim(); }
    const ComplexMatrix& matrix() const noexcept { return m_.matrix(); }

private:
    HermitianMatrix m_;
};

/// Positive semidefinite, unit trace.
class DensityOperator {
public:
    explicit DensityOperator(HermitianMatrix m) : m_(std::move(m)) {
        const auto ev = hermitian_eigenvalues(m_);
        if (ev.front() < -kSpectralTolerance) throw DomainError("density operator is not positive semidefinite");
        if (std::abs(m_.matrix().trace().real() - 1.0) > kSpectralTolerance) {
            throw DomainError("density operator trace is not 1");
        }
    }
    explicit DensityOperator(ComplexMatrix m) : DensityOperator(HermitianMatrix(std::move(m))) {}

    /// |i><i|
    static DensityOperator basis_state(std::size_t dim, std::size_t i) {
        ComplexMatrix m(dim);
        m(i, i) = 1.0;
        return DensityOperator(std::move(m));
    }

    static DensityOperator maximally_mixed(std::size_t dim) {
        return DensityOperator(1.0 / static_cast<double>(dim) * ComplexMatrix::identity(dim));
    }

    std::size_t dim() const noexcept { return m_.dim(); }
    const ComplexMatrix& matrix() const noexcept { return m_.matrix(); }

private:
    HermitianMatrix m_;
};

/// State plus positive and negative evidence effects. The effects need not
/// be complementary.
struct QuantumTriple {
    DensityOperator rho;
    Effect e_plus;
    Effect e_minus;

    QuantumTriple(DensityOperator r, Effect ep, Effect em)
        : rho(std::move(r)), e_plus(std::move(ep)), e_minus(std::move(em)) {
        if (rho.dim() != e_plus.dim() || rho.dim() != e_minus.dim()) {
            throw DimensionMismatch("state and effects must share a dimension");
        }
    }
};

/// Re Tr(rho E), clamped into [0,1].
inline Degree born(const DensityOperator& rho, const Effect& e) {
    if (rho.dim() != e.dim()) throw DimensionMismatch("state and effect dimensions differ");
    const Complex t = (rho.matrix() * e.matrix()).trace();
    if (std::abs(t.imag()) > kSpectralTolerance) throw NonRealTrace("Tr(rho E) has imaginary part");
    return Degree(t.real());
}

struct QuantumChannels {
    double mu;
    double nu;
    double pi;
    double zeta;

    MediativePair pair() const { return {mu, nu}; }
};

inline QuantumChannels quantum_channels(const QuantumTriple& t) {
    const MediativePair p(born(t.rho, t.e_plus), born(t.rho, t.e_minus));
    return {p.mu, p.nu, hesitation(p), contradiction(p)};
}

/// w1 E+ + w2 (I - E-), with state-dependent weights.
inline Effect mediative_effect(const QuantumTriple& t) {
    const auto ch = quantum_channels(t);
    const auto w = MediativeWeights::from(ch.pi, ch.zeta);
    const auto id = ComplexMatrix::identity(t.rho.dim());
    return Effect(w.w1 * t.e_plus.matrix() + w.w2 * (id - t.e_minus.matrix()));
}

inline Degree quantum_degree(const QuantumTriple& t) { return born(t.rho, mediative_effect(t)); }

/// Qubit encoding: rho = |0><0|, E+ = diag(mu, 0), E- = diag(nu, 0).
inline QuantumTriple diag_encode(Degree mu, Degree nu) {
    return {DensityOperator::basis_state(2, 0), Effect(ComplexMatrix::diagonal({mu, 0.0})),
            Effect(ComplexMatrix::diagonal({nu, 0.0}))};
}

inline bool is_classical(const QuantumTriple& t, double tol = 1e-10) {
    auto commutes = [tol](const ComplexMatrix& a, const ComplexMatrix& b) {
        return (a * b - b * a).max_abs() < tol;
    };
    const auto& r = t.rho.matrix();
    const auto& p = t.e_plus.matrix();
    const auto& m = t.e_minus.matrix();
    return commutes(r, p) && commutes(r, m) && commutes(p, m);
}

/// Identifier of the generator behind simulate_shots, recorded in reports.
inline constexpr const char* kShotRngAlgorithm = "mt19937_64/u53";

namespace detail {

// Uniform in [0,1) from the top 53 bits; unlike
// std::uniform_real_distribution this is identical on every standard library.
inline double uniform53(std::mt19937_64& g) { return static_cast<double>(g() >> 11) * 0x1.0p-53; }

}  // namespace detail

struct ShotEstimate {
    double estimate;
    std::uint64_t successes;
    std::uint64_t shots;
};

/// Samples n outcomes of the two-outcome measurement {M_p, I - M_p}.
/// The exact degree is used as the Bernoulli parameter.
inline ShotEstimate simulate_shots(const QuantumTriple& t, std::uint64_t n, std::uint64_t seed) {
    if (n == 0) throw DomainError("shot count must be at least 1");
    const double p = quantum_degree(t);
    std::mt19937_64 gen(seed);
    std::uint64_t hits = 0;
    for (std::uint64_t k = 0; k < n; ++k) {
        if (detail::uniform53(gen) < p) ++hits;
    }
    return {static_cast<double>(hits) / static_cast<double>(n), hits, n};
}

/// Two-sided Hoeffding half-width sqrt(ln(2/delta) / (2n)).
inline double hoeffding_margin(std::uint64_t n, double delta) {
    if (n == 0) throw DomainError("shot count must be at least 1");
    if (!(delta > 0.0 && delta < 1.0)) throw DomainError("delta must be in (0,1)");
    return std::sqrt(std::log(2.0 / delta) / (2.0 * static_cast<double>(n)));
}

}  // namespace medilog
