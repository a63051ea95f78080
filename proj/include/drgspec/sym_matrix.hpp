#ifndef DRGSPEC_SYM_MATRIX_HPP
#define DRGSPEC_SYM_MATRIX_HPP

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace drgspec {

/// Dense real symmetric matrix, row-major. Symmetry is maintained by every
/// mutator: set() writes both triangles.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(std::size_t order) : order_(order), data_(order * order, 0.0) {}

    static SymMatrix identity(std::size_t order)
    {
        SymMatrix m(order);
        for (std::size_t i = 0; i < order; ++i)
            m.data_[i * order + i] = 1.0;
        return m;
    }

    static SymMatrix filled(std::size_t order, double value)
    {
        SymMatrix m(order);
        std::fill(m.data_.begin(), m.data_.end(), value);
        return m;
    }

    /// Builds from a full square buffer that is symmetric up to rounding;
    /// the result is (B + B^T) / 2.
    static SymMatrix symmetrized(std::size_t order, std::span<const double> buffer)
    {
        assert(buffer.size() == order * order);
        SymMatrix m(order);
        for (std::size_t i = 0; i < order; ++i) {
            m.data_[i * order + i] = buffer[i * order + i];
            for (std::size_t j = i + 1; j < order; ++j) {
                const double v = 0.5 * (buffer[i * order + j] + buffer[j * order + i]);
                m.data_[i * order + j] = v;
                m.data_[j * order + i] = v;
            }
        }
        return m;
    }

    std::size_t order() const noexcept { return order_; }

    double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * order_ + j]; }

    void set(std::size_t i, std::size_t j, double v) noexcept
    {
        data_[i * order_ + j] = v;
        data_[j * order_ + i] = v;
    }

    std::span<const double> data() const noexcept { return data_; }

    double trace() const noexcept
    {
        double t = 0.0;
        for (std::size_t i = 0; i < order_; ++i)
            t += data_[i * order_ + i];
        return t;
    }

    double frobenius_norm() const noexcept
    {
        double s = 0.0;
        for (double v : data_)
            s += v * v;
        return std::sqrt(s);
    }

    SymMatrix& operator+=(const SymMatrix& o)
    {
        assert(o.order_ == order_);
        for (std::size_t k = 0; k < data_.size(); ++k)
            data_[k] += o.data_[k];
        return *this;
    }

    SymMatrix& operator-=(const SymMatrix& o)
    {
        assert(o.order_ == order_);
        for (std::size_t k = 0; k < data_.size(); ++k)
            data_[k] -= o.data_[k];
        return *this;
    }

    SymMatrix& operator*=(double s) noexcept
    {
        for (double& v : data_)
            v *= s;
        return *this;
    }

    /// Adds s to every diagonal entry.
    SymMatrix& add_diagonal(double s) noexcept
    {
        for (std::size_t i = 0; i < order_; ++i)
            data_[i * order_ + i] += s;
        return *this;
    }

    friend SymMatrix operator+(SymMatrix a, const SymMatrix& b) { return a += b; }
    friend SymMatrix operator-(SymMatrix a, const SymMatrix& b) { return a -= b; }
    friend SymMatrix operator*(double s, SymMatrix a) { return a *= s; }

    friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

private:
    std::size_t order_ = 0;
    std::vector<double> data_;
};

/// Product of two commuting symmetric matrices (e.g. two polynomials in the
/// same matrix). The raw product is symmetrized; for non-commuting inputs
/// this is not A*B.
inline SymMatrix commuting_product(const SymMatrix& a, const SymMatrix& b)
{
    assert(a.order() == b.order());
    const std::size_t n = a.order();
    const auto ad = a.data();
    const auto bd = b.data();
    std::vector<double> out(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const double aik = ad[i * n + k];
            if (aik == 0.0)
                continue;
            const double* brow = &bd[k * n];
            double* orow = &out[i * n];
            for (std::size_t j = 0; j < n; ++j)
                orow[j] += aik * brow[j];
        }
    }
    return SymMatrix::symmetrized(n, out);
}

/// Largest absolute entry of a - b.
inline double max_abs_diff(const SymMatrix& a, const SymMatrix& b)
{
    assert(a.order() == b.order());
    double m = 0.0;
    const auto ad = a.data();
    const auto bd = b.data();
    for (std::size_t k = 0; k < ad.size(); ++k)
        m = std::max(m, std::abs(ad[k] - bd[k]));
    return m;
}

} // namespace drgspec

#endif // DRGSPEC_SYM_MATRIX_HPP
