#ifndef DRGSPEC_POLYNOMIAL_HPP
#define DRGSPEC_POLYNOMIAL_HPP

#include "drgspec/sym_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

namespace drgspec {

/// Dense real polynomial, coefficients in ascending degree. Exact trailing
/// zeros are trimmed, so the zero polynomial has no coefficients and
/// degree() == -1.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<double> coeffs) : c_(coeffs) { trim(); }
    explicit Polynomial(std::vector<double> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial constant(double v) { return Polynomial({v}); }
    static Polynomial x() { return Polynomial({0.0, 1.0}); }

    const std::vector<double>& coeffs() const noexcept { return c_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }

    /// Coefficient of x^k, zero past the degree.
    double operator[](std::size_t k) const noexcept { return k < c_.size() ? c_[k] : 0.0; }

    /// Horner evaluation.
    double operator()(double x) const noexcept
    {
        double acc = 0.0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    }

    Polynomial& operator+=(const Polynomial& o)
    {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size(), 0.0);
        for (std::size_t k = 0; k < o.c_.size(); ++k)
            c_[k] += o.c_[k];
        trim();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o)
    {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size(), 0.0);
        for (std::size_t k = 0; k < o.c_.size(); ++k)
            c_[k] -= o.c_[k];
        trim();
        return *this;
    }

    Polynomial& operator*=(double s)
    {
        for (double& v : c_)
            v *= s;
        trim();
        return *this;
    }

    /// Multiplies by x.
    Polynomial shifted() const
    {
        if (is_zero())
            return {};
        std::vector<double> out(c_.size() + 1, 0.0);
        std::copy(c_.begin(), c_.end(), out.begin() + 1);
        return Polynomial(std::move(out));
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(double s, Polynomial a) { return a *= s; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<double> out(a.c_.size() + b.c_.size() - 1, 0.0);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                out[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(out));
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void trim()
    {
        while (!c_.empty() && c_.back() == 0.0)
            c_.pop_back();
    }

    std::vector<double> c_;
};

inline double eval_scalar(const Polynomial& p, double x) { return p(x); }

/// p(M) by matrix Horner. The result is symmetrized.
inline SymMatrix eval_matrix(const Polynomial& p, const SymMatrix& m)
{
    const std::size_t n = m.order();
    SymMatrix acc(n);
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = commuting_product(acc, m);
        acc.add_diagonal(*it);
    }
    return acc;
}

/// max_k |a_k - b_k| over the union of supports.
inline double max_abs_coeff_diff(const Polynomial& a, const Polynomial& b)
{
    const std::size_t len = std::max(a.coeffs().size(), b.coeffs().size());
    double m = 0.0;
    for (std::size_t k = 0; k < len; ++k)
        m = std::max(m, std::abs(a[k] - b[k]));
    return m;
}

/// p(a + b x).
inline Polynomial compose_affine(const Polynomial& p, double a, double b)
{
    const Polynomial inner({a, b});
    Polynomial acc;
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = acc * inner + Polynomial::constant(*it);
    return acc;
}

} // namespace drgspec

#endif // DRGSPEC_POLYNOMIAL_HPP
