#ifndef DRGSPEC_SPECTRUM_HPP
#define DRGSPEC_SPECTRUM_HPP

#include "drgspec/errors.hpp"
#include "drgspec/sym_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace drgspec {

/// All eigenvalues of a symmetric matrix, ascending, with multiplicity.
struct SpectrumRaw {
    std::vector<double> values;

    double spectral_radius() const
    {
        double r = 0.0;
        for (double v : values)
            r = std::max(r, std::abs(v));
        return r;
    }
};

struct JacobiOptions {
    double relative_off_tolerance = 1e-12;
    int max_sweeps = 100;
};

/// Eigenvalues by cyclic Jacobi rotations.
///
/// Sweeps over every (p, q), p < q, annihilating a_pq, until the
/// off-diagonal Frobenius norm is at most relative_off_tolerance times the
/// Frobenius norm of the input. Only the diagonal is needed at the end, so
/// no eigenvectors are accumulated. Throws ConvergenceError past max_sweeps.
inline SpectrumRaw eigenvalues_sym(const SymMatrix& m, JacobiOptions opts = {})
{
    const std::size_t n = m.order();
    std::vector<double> a(m.data().begin(), m.data().end());
    const double target = opts.relative_off_tolerance * m.frobenius_norm();

    auto off_norm = [&] {
        double s = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q)
                s += a[p * n + q] * a[p * n + q];
        return std::sqrt(2.0 * s);
    };

    int sweep = 0;
    for (double off = off_norm(); off > target; off = off_norm()) {
        if (sweep++ == opts.max_sweeps)
            throw ConvergenceError("Jacobi eigensolver did not converge in " + std::to_string(opts.max_sweeps) +
                                   " sweeps (off-diagonal norm " + std::to_string(off) + ")");
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a[p * n + q];
                if (apq == 0.0)
                    continue;
                const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                double t;
                if (std::abs(theta) > 1e150)
                    t = 0.5 / theta;
                else
                    t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                for (std::size_t k = 0; k < n; ++k) {
                    if (k == p || k == q)
                        continue;
                    const double akp = a[k * n + p];
                    const double akq = a[k * n + q];
                    const double np = c * akp - s * akq;
                    const double nq = s * akp + c * akq;
                    a[k * n + p] = a[p * n + k] = np;
                    a[k * n + q] = a[q * n + k] = nq;
                }
                a[p * n + p] -= t * apq;
                a[q * n + q] += t * apq;
                a[p * n + q] = a[q * n + p] = 0.0;
            }
        }
    }

    SpectrumRaw out;
    out.values.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        out.values[i] = a[i * n + i];
    std::sort(out.values.begin(), out.values.end());
    return out;
}

/// Distinct Laplacian eigenvalues 0 = θ_0 < θ_1 < ... < θ_d with
/// multiplicities m_i.
struct DistinctSpectrum {
    std::vector<double> thetas;
    std::vector<std::size_t> mults;
    /// Absolute merge threshold actually used (tol * max(1, radius)).
    double merge_threshold = 0.0;
    /// Smallest θ_{i+1} - θ_i; +inf when d = 0. Compare with merge_threshold
    /// to judge how close the clustering came to changing d.
    double min_gap = std::numeric_limits<double>::infinity();

    std::size_t d() const noexcept { return thetas.size() - 1; }

    std::size_t order() const noexcept
    {
        std::size_t n = 0;
        for (auto m : mults)
            n += m;
        return n;
    }
};

/// Greedy left-to-right clustering of an ascending spectrum.
///
/// A value joins the current cluster when it lies within
/// tol * max(1, spectral radius) of the previous value; each cluster is
/// replaced by the mean of its members. θ_0 is then validated as the simple
/// zero eigenvalue of a connected graph's Laplacian and stored as exactly 0.
inline DistinctSpectrum cluster_spectrum(const SpectrumRaw& raw, double tol)
{
    if (!(tol > 0.0))
        throw std::invalid_argument("clustering tolerance must be positive");
    if (raw.values.empty())
        throw std::invalid_argument("empty spectrum");

    DistinctSpectrum s;
    s.merge_threshold = tol * std::max(1.0, raw.spectral_radius());
    const double thr = s.merge_threshold;

    if (raw.values.front() < -thr)
        throw InternalError("negative Laplacian eigenvalue " + std::to_string(raw.values.front()));

    double sum = raw.values[0];
    std::size_t count = 1;
    for (std::size_t k = 1; k < raw.values.size(); ++k) {
        if (raw.values[k] - raw.values[k - 1] <= thr) {
            sum += raw.values[k];
            ++count;
            continue;
        }
        s.thetas.push_back(sum / static_cast<double>(count));
        s.mults.push_back(count);
        sum = raw.values[k];
        count = 1;
    }
    s.thetas.push_back(sum / static_cast<double>(count));
    s.mults.push_back(count);

    if (std::abs(s.thetas[0]) > thr)
        throw InternalError("smallest Laplacian eigenvalue " + std::to_string(s.thetas[0]) + " is not zero");
    if (s.mults[0] != 1)
        throw DisconnectedError("zero Laplacian eigenvalue has multiplicity " + std::to_string(s.mults[0]) +
                                "; the graph is disconnected");
    s.thetas[0] = 0.0;

    for (std::size_t i = 0; i + 1 < s.thetas.size(); ++i)
        s.min_gap = std::min(s.min_gap, s.thetas[i + 1] - s.thetas[i]);
    return s;
}

/// φ_i = ∏_{j≠i} (θ_i − θ_j). Signs alternate as (−1)^{d−i}.
inline std::vector<double> phi_products(std::span<const double> thetas)
{
    std::vector<double> phis(thetas.size(), 1.0);
    for (std::size_t i = 0; i < thetas.size(); ++i)
        for (std::size_t j = 0; j < thetas.size(); ++j)
            if (j != i)
                phis[i] *= thetas[i] - thetas[j];
    return phis;
}

inline std::vector<double> phi_products(const DistinctSpectrum& s) { return phi_products(s.thetas); }

/// Spectral projector F_i = (1/φ_i) ∏_{j≠i} (L − θ_j I), formed by matrix
/// products without any eigenvectors.
inline SymMatrix idempotent(const SymMatrix& laplacian, const DistinctSpectrum& s, std::size_t i)
{
    if (i > s.d())
        throw std::out_of_range("idempotent index " + std::to_string(i) + " exceeds d = " + std::to_string(s.d()));
    const auto phis = phi_products(s);
    SymMatrix f = SymMatrix::identity(laplacian.order());
    for (std::size_t j = 0; j <= s.d(); ++j) {
        if (j == i)
            continue;
        SymMatrix shifted = laplacian;
        shifted.add_diagonal(-s.thetas[j]);
        f = commuting_product(f, shifted);
    }
    f *= 1.0 / phis[i];
    return f;
}

} // namespace drgspec

#endif // DRGSPEC_SPECTRUM_HPP
