#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace nhrmt {

using cd = std::complex<double>;
inline constexpr cd I_unit{0.0, 1.0};

struct ContractViolation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NumericalFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Dense row-major complex matrix.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cd> data)
        : r_(rows), c_(cols), a_(std::move(data))
    {
        if (a_.size() != r_ * c_)
            throw ContractViolation("entry count does not match shape");
        for (const auto& z : a_)
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
                throw ContractViolation("non-finite matrix entry");
    }
    ComplexMatrix(std::initializer_list<std::initializer_list<cd>> rows)
    {
        r_ = rows.size();
        c_ = r_ ? rows.begin()->size() : 0;
        a_.reserve(r_ * c_);
        for (const auto& row : rows) {
            if (row.size() != c_)
                throw ContractViolation("ragged initializer");
            a_.insert(a_.end(), row.begin(), row.end());
        }
    }

    static ComplexMatrix identity(std::size_t n)
    {
        ComplexMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1.0;
        return m;
    }
    static ComplexMatrix zeros(std::size_t r, std::size_t c) { return ComplexMatrix(r, c); }

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    std::size_t size() const { return a_.size(); }
    bool square() const { return r_ == c_; }

    cd& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const cd& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
    cd* data() { return a_.data(); }
    const cd* data() const { return a_.data(); }
    const std::vector<cd>& values() const { return a_; }

    ComplexMatrix& operator+=(const ComplexMatrix& o)
    {
        same_shape(o);
        for (std::size_t k = 0; k < a_.size(); ++k)
            a_[k] += o.a_[k];
        return *this;
    }
    ComplexMatrix& operator-=(const ComplexMatrix& o)
    {
        same_shape(o);
        for (std::size_t k = 0; k < a_.size(); ++k)
            a_[k] -= o.a_[k];
        return *this;
    }
    ComplexMatrix& operator*=(cd s)
    {
        for (auto& z : a_)
            z *= s;
        return *this;
    }

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator-(ComplexMatrix a) { return a *= -1.0; }
    friend ComplexMatrix operator*(cd s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(ComplexMatrix a, cd s) { return a *= s; }
    friend bool operator==(const ComplexMatrix& a, const ComplexMatrix& b)
    {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
    }

private:
    void same_shape(const ComplexMatrix& o) const
    {
        if (o.r_ != r_ || o.c_ != c_)
            throw ContractViolation("shape mismatch");
    }

    std::size_t r_ = 0, c_ = 0;
    std::vector<cd> a_;
};

inline ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b)
{
    if (a.cols() != b.rows())
        throw ContractViolation("multiply: inner dimensions differ (" + std::to_string(a.cols()) +
                                " vs " + std::to_string(b.rows()) + ")");
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const cd aik = a(i, k);
            if (aik == cd{})
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out(i, j) += aik * b(k, j);
        }
    for (const auto& z : out.values())
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw NumericalFailure("multiply: non-finite result");
    return out;
}

inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) { return multiply(a, b); }

inline ComplexMatrix transpose(const ComplexMatrix& a)
{
    ComplexMatrix t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            t(j, i) = a(i, j);
    return t;
}

inline ComplexMatrix conjugate(const ComplexMatrix& a)
{
    ComplexMatrix t(a.rows(), a.cols());
    for (std::size_t k = 0; k < a.size(); ++k)
        t.data()[k] = std::conj(a.data()[k]);
    return t;
}

inline ComplexMatrix adjoint(const ComplexMatrix& a)
{
    ComplexMatrix t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            t(j, i) = std::conj(a(i, j));
    return t;
}

inline ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) { return a * b - b * a; }

// Re tr(A^dagger B)
inline double inner(const ComplexMatrix& a, const ComplexMatrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ContractViolation("inner: shape mismatch");
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k)
        s += a.data()[k].real() * b.data()[k].real() + a.data()[k].imag() * b.data()[k].imag();
    return s;
}

inline double frobenius(const ComplexMatrix& a) { return std::sqrt(inner(a, a)); }

inline double max_abs(const ComplexMatrix& a)
{
    double m = 0.0;
    for (const auto& z : a.values())
        m = std::max(m, std::abs(z));
    return m;
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) { return max_abs(a - b); }

inline cd trace(const ComplexMatrix& a)
{
    cd t{};
    for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i)
        t += a(i, i);
    return t;
}

inline ComplexMatrix block(const ComplexMatrix& a, std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc)
{
    if (r0 + nr > a.rows() || c0 + nc > a.cols())
        throw ContractViolation("block out of range");
    ComplexMatrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j)
            b(i, j) = a(r0 + i, c0 + j);
    return b;
}

inline void set_block(ComplexMatrix& a, std::size_t r0, std::size_t c0, const ComplexMatrix& b)
{
    if (r0 + b.rows() > a.rows() || c0 + b.cols() > a.cols())
        throw ContractViolation("set_block out of range");
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            a(r0 + i, c0 + j) = b(i, j);
}

inline ComplexMatrix block_diag(const std::vector<ComplexMatrix>& parts)
{
    std::size_t r = 0, c = 0;
    for (const auto& p : parts) {
        r += p.rows();
        c += p.cols();
    }
    ComplexMatrix m(r, c);
    r = c = 0;
    for (const auto& p : parts) {
        set_block(m, r, c, p);
        r += p.rows();
        c += p.cols();
    }
    return m;
}

// [[a, b], [c, d]] from four equal square blocks
inline ComplexMatrix from_blocks(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c,
                                 const ComplexMatrix& d)
{
    const std::size_t n = a.rows();
    ComplexMatrix m(2 * n, 2 * n);
    set_block(m, 0, 0, a);
    set_block(m, 0, n, b);
    set_block(m, n, 0, c);
    set_block(m, n, n, d);
    return m;
}

inline bool is_unitary(const ComplexMatrix& u, double tol = 1e-10)
{
    if (!u.square())
        return false;
    return max_abs_diff(u * adjoint(u), ComplexMatrix::identity(u.rows())) <= tol;
}

} // namespace nhrmt
