#ifndef DRGSPEC_ORTHOPOLY_HPP
#define DRGSPEC_ORTHOPOLY_HPP

#include "drgspec/errors.hpp"
#include "drgspec/polynomial.hpp"
#include "drgspec/spectrum.hpp"
#include "drgspec/sym_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace drgspec {

/// Discrete measure putting mass m_i / n on θ_i. This is the measure behind
/// <p, q> = (1/n) tr(p(L) q(L)) = (1/n) Σ m_i p(θ_i) q(θ_i).
class SpectralMeasure {
public:
    SpectralMeasure(std::vector<double> thetas, std::vector<std::size_t> mults)
        : thetas_(std::move(thetas)), mults_(std::move(mults))
    {
        if (thetas_.empty() || thetas_.size() != mults_.size())
            throw std::invalid_argument("measure needs matching, nonempty node and multiplicity lists");
        if (thetas_[0] != 0.0)
            throw std::invalid_argument("first node of a Laplacian measure must be exactly 0");
        for (std::size_t i = 0; i < thetas_.size(); ++i) {
            if (mults_[i] == 0)
                throw std::invalid_argument("multiplicities must be positive");
            if (i > 0 && !(thetas_[i] > thetas_[i - 1]))
                throw std::invalid_argument("nodes must be strictly ascending");
            n_ += mults_[i];
        }
    }

    explicit SpectralMeasure(const DistinctSpectrum& s) : SpectralMeasure(s.thetas, s.mults) {}

    std::size_t d() const noexcept { return thetas_.size() - 1; }
    std::size_t order() const noexcept { return n_; }
    const std::vector<double>& thetas() const noexcept { return thetas_; }
    const std::vector<std::size_t>& mults() const noexcept { return mults_; }
    double weight(std::size_t i) const noexcept { return static_cast<double>(mults_[i]) / static_cast<double>(n_); }

    /// Σ w_i f_i g_i for functions given by their values on the nodes.
    double dot(std::span<const double> f, std::span<const double> g) const noexcept
    {
        double s = 0.0;
        for (std::size_t i = 0; i < thetas_.size(); ++i)
            s += weight(i) * f[i] * g[i];
        return s;
    }

    std::vector<double> values(const Polynomial& p) const
    {
        std::vector<double> v(thetas_.size());
        for (std::size_t i = 0; i < thetas_.size(); ++i)
            v[i] = p(thetas_[i]);
        return v;
    }

private:
    std::vector<double> thetas_;
    std::vector<std::size_t> mults_;
    std::size_t n_ = 0;
};

/// <p, q> under the measure. Only meaningful as an inner product on
/// polynomials of degree <= d; beyond that the form is degenerate.
inline double inner_product(const Polynomial& p, const Polynomial& q, const SpectralMeasure& mu)
{
    return mu.dot(mu.values(p), mu.values(q));
}

/// H = (n / φ_0) ∏_{i=1..d} (x − θ_i); H(L) = J and H(0) = n.
inline Polynomial hoffman_polynomial(const SpectralMeasure& mu)
{
    const auto& th = mu.thetas();
    const double phi0 = phi_products(th)[0];
    Polynomial h = Polynomial::constant(static_cast<double>(mu.order()) / phi0);
    for (std::size_t i = 1; i < th.size(); ++i)
        h = h * Polynomial({-th[i], 1.0});
    return h;
}

/// Laplacian predistance polynomials r_0..r_d and the coefficients of
///
///     x r_i = β_{i-1} r_{i-1} + α_i r_i + γ_{i+1} r_{i+1},
///
/// with β_{-1} = γ_{d+1} = 0. `beta` holds β_0..β_{d-1} and `gamma` holds
/// γ_1..γ_d; use beta_at / gamma_at for the boundary-padded view.
struct PredistanceSystem {
    std::vector<Polynomial> polys;
    std::vector<double> alpha;
    std::vector<double> beta;
    std::vector<double> gamma;
    /// node_values[i][j] = r_i(θ_j)
    std::vector<std::vector<double>> node_values;

    std::size_t d() const noexcept { return polys.size() - 1; }
    double beta_at(std::size_t i) const noexcept { return i < beta.size() ? beta[i] : 0.0; }
    double gamma_at(std::size_t i) const noexcept { return i == 0 || i > gamma.size() ? 0.0 : gamma[i - 1]; }
};

/// Builds the predistance system by the Stieltjes procedure.
///
/// Monic orthogonal q_i are generated by
///     q_{i+1} = (x - a_i) q_i - b_i q_{i-1},
///     a_i = <x q_i, q_i> / |q_i|^2,  b_i = |q_i|^2 / |q_{i-1}|^2,
/// tracked both as coefficient vectors and as values on the nodes (inner
/// products use the node values). Each q_i is rescaled to
/// r_i = (q_i(0) / |q_i|^2) q_i so that |r_i|^2 = r_i(0). The r-basis
/// recurrence coefficients are the projections of x r_i onto r_{i-1}, r_i,
/// r_{i+1}.
///
/// The result is verified before it is returned: every r_i evaluated from
/// its coefficients must satisfy |<r_i, r_j>| <= 1e-8 (i != j),
/// |‖r_i‖² − r_i(0)| <= 1e-8 max(1, r_i(0)) and r_i(0) > 0; the recurrence
/// must close on the coefficients (i < d) with α_i + β_i + γ_i = 0 and
/// β_i, γ_i < 0; and Σ r_i must equal the Hoffman polynomial, all to 1e-8.
/// Otherwise, or if some q_i(0) is zero or wrongly signed, NumericalBreakdown
/// is thrown. In practice this happens only above d = 10.
inline constexpr double kPredistanceTolerance = 1e-8;

inline PredistanceSystem predistance_system(const SpectralMeasure& mu)
{
    const std::size_t d = mu.d();
    const auto& th = mu.thetas();
    const std::size_t nodes = d + 1;

    std::vector<Polynomial> q{Polynomial::constant(1.0)};
    std::vector<std::vector<double>> qv{std::vector<double>(nodes, 1.0)};
    std::vector<double> norms{mu.dot(qv[0], qv[0])};

    auto times_x = [&](const std::vector<double>& f) {
        std::vector<double> g(nodes);
        for (std::size_t j = 0; j < nodes; ++j)
            g[j] = th[j] * f[j];
        return g;
    };

    for (std::size_t i = 0; i < d; ++i) {
        const double a = mu.dot(times_x(qv[i]), qv[i]) / norms[i];
        const double b = i == 0 ? 0.0 : norms[i] / norms[i - 1];

        Polynomial next = q[i].shifted() - a * q[i];
        std::vector<double> nv(nodes);
        for (std::size_t j = 0; j < nodes; ++j)
            nv[j] = (th[j] - a) * qv[i][j];
        if (i > 0) {
            next -= b * q[i - 1];
            for (std::size_t j = 0; j < nodes; ++j)
                nv[j] -= b * qv[i - 1][j];
        }
        // Plain Stieltjes drifts once i approaches the number of nodes;
        // two Gram-Schmidt passes against every earlier q restore
        // orthogonality. The same combination is applied to the coefficients.
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t k = 0; k <= i; ++k) {
                const double h = mu.dot(nv, qv[k]) / norms[k];
                for (std::size_t j = 0; j < nodes; ++j)
                    nv[j] -= h * qv[k][j];
                next -= h * q[k];
            }
        }
        q.push_back(std::move(next));
        norms.push_back(mu.dot(nv, nv));
        qv.push_back(std::move(nv));
    }

    // On d + 1 nodes the last monic orthogonal polynomial is known in closed
    // form, q_d(θ_j) = 1 / (w_j φ_j Σ_k 1 / (w_k φ_k²)), free of the
    // cancellation the recurrence suffers in its final step.
    if (d > 0) {
        const auto phis = phi_products(th);
        double s = 0.0;
        for (std::size_t k = 0; k < nodes; ++k)
            s += 1.0 / (mu.weight(k) * phis[k] * phis[k]);
        for (std::size_t j = 0; j < nodes; ++j)
            qv[d][j] = 1.0 / (mu.weight(j) * phis[j] * s);
        norms[d] = mu.dot(qv[d], qv[d]);
    }

    PredistanceSystem sys;
    sys.polys.reserve(nodes);
    sys.node_values.reserve(nodes);
    for (std::size_t i = 0; i <= d; ++i) {
        // θ_0 is exactly 0, so the first node value is q_i(0).
        // All zeros of q_i lie in (0, θ_d), so q_i(0) is nonzero with sign (−1)^i.
        const double at_zero = qv[i][0];
        const bool expect_negative = i % 2 == 1;
        if (at_zero == 0.0 || (at_zero < 0.0) != expect_negative)
            throw NumericalBreakdown("predistance polynomial q_" + std::to_string(i) +
                                " has a vanishing or wrongly signed value at 0; the spectrum is likely misclustered");
        const double c = at_zero / norms[i];
        sys.polys.push_back(c * q[i]);
        std::vector<double> rv = qv[i];
        for (double& v : rv)
            v *= c;
        sys.node_values.push_back(std::move(rv));
    }

    const auto& rv = sys.node_values;
    std::vector<double> rnorm(nodes);
    for (std::size_t i = 0; i <= d; ++i)
        rnorm[i] = mu.dot(rv[i], rv[i]);
    for (std::size_t i = 0; i <= d; ++i) {
        const auto xr = times_x(rv[i]);
        sys.alpha.push_back(mu.dot(xr, rv[i]) / rnorm[i]);
        if (i > 0)
            sys.beta.push_back(mu.dot(xr, rv[i - 1]) / rnorm[i - 1]);
        if (i < d)
            sys.gamma.push_back(mu.dot(xr, rv[i + 1]) / rnorm[i + 1]);
    }

    // The node values are accurate, but the coefficient vectors can carry
    // cancellation far beyond double precision. Refuse rather than return
    // polynomials that are not orthogonal when evaluated.
    for (std::size_t i = 0; i <= d; ++i) {
        const auto vi = mu.values(sys.polys[i]);
        const double at_zero = sys.polys[i](0.0);
        const double norm = mu.dot(vi, vi);
        if (!(at_zero > 0.0) || !(std::abs(norm - at_zero) <= kPredistanceTolerance * std::max(1.0, at_zero)))
            throw NumericalBreakdown("predistance polynomial r_" + std::to_string(i) +
                                     " lost its normalization in double precision (d = " + std::to_string(d) + ")");
        for (std::size_t j = 0; j < i; ++j) {
            const double ip = mu.dot(vi, mu.values(sys.polys[j]));
            if (!(std::abs(ip) <= kPredistanceTolerance))
                throw NumericalBreakdown("predistance polynomials r_" + std::to_string(j) + " and r_" +
                                         std::to_string(i) + " are not orthogonal in double precision (d = " +
                                         std::to_string(d) + ")");
        }
    }

    // The remaining identities, on the coefficients as returned.
    auto refuse = [&](const std::string& what) {
        throw NumericalBreakdown(what + " fails in double precision (d = " + std::to_string(d) + ")");
    };
    Polynomial sum;
    for (std::size_t i = 0; i <= d; ++i) {
        sum += sys.polys[i];
        if (!(std::abs(sys.alpha[i] + sys.beta_at(i) + sys.gamma_at(i)) <= kPredistanceTolerance))
            refuse("recurrence row sum at i = " + std::to_string(i));
        if (i == d)
            break;
        if (!(sys.beta[i] < 0.0 && sys.gamma[i] < 0.0))
            refuse("recurrence sign pattern at i = " + std::to_string(i));
        Polynomial defect = sys.polys[i].shifted() - sys.alpha[i] * sys.polys[i] - sys.gamma[i] * sys.polys[i + 1];
        if (i > 0)
            defect -= sys.beta[i - 1] * sys.polys[i - 1];
        if (!(max_abs_coeff_diff(defect, Polynomial()) <= kPredistanceTolerance))
            refuse("three-term recurrence at i = " + std::to_string(i));
    }
    if (!(max_abs_coeff_diff(hoffman_polynomial(mu), sum) <= kPredistanceTolerance))
        refuse("H = r_0 + ... + r_d");
    return sys;
}

/// r_d(0) = n (Σ_i φ_0² / (m_i φ_i²))⁻¹, from the spectrum alone.
inline double spectral_excess_closed_form(const SpectralMeasure& mu, std::span<const double> phis)
{
    double s = 0.0;
    for (std::size_t i = 0; i < phis.size(); ++i) {
        const double ratio = phis[0] / phis[i];
        s += ratio * ratio / static_cast<double>(mu.mults()[i]);
    }
    return static_cast<double>(mu.order()) / s;
}

inline double spectral_excess_closed_form(const SpectralMeasure& mu)
{
    return spectral_excess_closed_form(mu, phi_products(mu.thetas()));
}

/// r_0(M), ..., r_d(M) by the matrix form of the three-term recurrence:
///     r_{i+1}(M) = ((M − α_i I) r_i(M) − β_{i−1} r_{i−1}(M)) / γ_{i+1}.
inline std::vector<SymMatrix> eval_matrix_all(const PredistanceSystem& sys, const SymMatrix& m)
{
    std::vector<SymMatrix> out;
    out.push_back(SymMatrix::identity(m.order()));
    for (std::size_t i = 0; i < sys.d(); ++i) {
        SymMatrix next = commuting_product(m, out[i]);
        next -= sys.alpha[i] * out[i];
        if (i > 0)
            next -= sys.beta[i - 1] * out[i - 1];
        next *= 1.0 / sys.gamma[i];
        out.push_back(std::move(next));
    }
    return out;
}

} // namespace drgspec

#endif // DRGSPEC_ORTHOPOLY_HPP
