#pragma once

#include <array>
#include <cmath>

#include "matrix.hpp"

namespace nhrmt {

// q0 + q1 e1 + q2 e2 + q3 e3 with complex coefficients.
struct Quaternion {
    cd q0{}, q1{}, q2{}, q3{};

    static Quaternion one() { return {1.0, 0.0, 0.0, 0.0}; }
    static Quaternion e1() { return {0.0, 1.0, 0.0, 0.0}; }
    static Quaternion e2() { return {0.0, 0.0, 1.0, 0.0}; }
    static Quaternion e3() { return {0.0, 0.0, 0.0, 1.0}; }

    bool is_real(double tol = 0.0) const
    {
        return std::abs(q0.imag()) <= tol && std::abs(q1.imag()) <= tol && std::abs(q2.imag()) <= tol &&
               std::abs(q3.imag()) <= tol;
    }

    friend Quaternion operator+(const Quaternion& a, const Quaternion& b)
    {
        return {a.q0 + b.q0, a.q1 + b.q1, a.q2 + b.q2, a.q3 + b.q3};
    }
    friend Quaternion operator-(const Quaternion& a, const Quaternion& b)
    {
        return {a.q0 - b.q0, a.q1 - b.q1, a.q2 - b.q2, a.q3 - b.q3};
    }
    friend Quaternion operator*(cd s, const Quaternion& a) { return {s * a.q0, s * a.q1, s * a.q2, s * a.q3}; }
    friend bool operator==(const Quaternion&, const Quaternion&) = default;
};

// e1 e2 = e3, e2 e3 = e1, e3 e1 = e2; coefficients are not conjugated.
inline Quaternion quat_multiply(const Quaternion& a, const Quaternion& b)
{
    return {
        a.q0 * b.q0 - a.q1 * b.q1 - a.q2 * b.q2 - a.q3 * b.q3,
        a.q0 * b.q1 + a.q1 * b.q0 + a.q2 * b.q3 - a.q3 * b.q2,
        a.q0 * b.q2 + a.q2 * b.q0 + a.q3 * b.q1 - a.q1 * b.q3,
        a.q0 * b.q3 + a.q3 * b.q0 + a.q1 * b.q2 - a.q2 * b.q1,
    };
}

inline Quaternion operator*(const Quaternion& a, const Quaternion& b) { return quat_multiply(a, b); }

inline Quaternion dual(const Quaternion& q) { return {q.q0, -q.q1, -q.q2, -q.q3}; }
inline Quaternion conj(const Quaternion& q)
{
    return {std::conj(q.q0), std::conj(q.q1), std::conj(q.q2), std::conj(q.q3)};
}
inline Quaternion herm_conj(const Quaternion& q) { return dual(conj(q)); }

inline double distance(const Quaternion& a, const Quaternion& b)
{
    return std::abs(a.q0 - b.q0) + std::abs(a.q1 - b.q1) + std::abs(a.q2 - b.q2) + std::abs(a.q3 - b.q3);
}

// 1 -> I, e1 -> -i sigma_2, e2 -> -i sigma_1, e3 -> i sigma_3.
inline ComplexMatrix embed_2x2(const Quaternion& q)
{
    const cd i = I_unit;
    return ComplexMatrix{{q.q0 + i * q.q3, -q.q1 - i * q.q2}, {q.q1 - i * q.q2, q.q0 - i * q.q3}};
}

inline Quaternion extract_2x2(const ComplexMatrix& m)
{
    if (m.rows() != 2 || m.cols() != 2)
        throw ContractViolation("extract_2x2: need a 2x2 matrix");
    const cd i = I_unit;
    return {
        0.5 * (m(0, 0) + m(1, 1)),
        0.5 * (m(1, 0) - m(0, 1)),
        0.5 * i * (m(0, 1) + m(1, 0)),
        -0.5 * i * (m(0, 0) - m(1, 1)),
    };
}

// blockdiag(e1, e1, ...), the 2n x 2n embedding of e1 times the identity.
inline ComplexMatrix e1_blocks(std::size_t n2)
{
    if (n2 % 2)
        throw ContractViolation("e1_blocks: odd dimension");
    ComplexMatrix e(n2, n2);
    for (std::size_t k = 0; k < n2; k += 2) {
        e(k, k + 1) = -1.0;
        e(k + 1, k) = 1.0;
    }
    return e;
}

class QuaternionMatrix {
public:
    explicit QuaternionMatrix(std::size_t n) : n_(n), q_(n * n) {}

    std::size_t n() const { return n_; }
    Quaternion& operator()(std::size_t i, std::size_t j) { return q_[i * n_ + j]; }
    const Quaternion& operator()(std::size_t i, std::size_t j) const { return q_[i * n_ + j]; }

    bool is_real(double tol = 0.0) const
    {
        for (const auto& q : q_)
            if (!q.is_real(tol))
                return false;
        return true;
    }

    static QuaternionMatrix from_complex(const ComplexMatrix& m)
    {
        if (!m.square() || m.rows() % 2)
            throw ContractViolation("quaternion matrix needs an even square matrix");
        QuaternionMatrix out(m.rows() / 2);
        for (std::size_t i = 0; i < out.n_; ++i)
            for (std::size_t j = 0; j < out.n_; ++j)
                out(i, j) = extract_2x2(block(m, 2 * i, 2 * j, 2, 2));
        return out;
    }

    ComplexMatrix to_complex() const
    {
        ComplexMatrix m(2 * n_, 2 * n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                set_block(m, 2 * i, 2 * j, embed_2x2((*this)(i, j)));
        return m;
    }

    // (A-bar)_{ij} = dual(A_{ji})
    QuaternionMatrix dual() const
    {
        QuaternionMatrix out(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                out(i, j) = nhrmt::dual((*this)(j, i));
        return out;
    }

private:
    std::size_t n_;
    std::vector<Quaternion> q_;
};

// Matrix-level dual of an embedded quaternion matrix: -E m^T E with E = e1_blocks.
inline ComplexMatrix matrix_dual(const ComplexMatrix& m)
{
    const ComplexMatrix e = e1_blocks(m.rows());
    return -(e * transpose(m) * e);
}

inline bool is_quaternion_real(const ComplexMatrix& m, double tol = 1e-10)
{
    if (!m.square() || m.rows() % 2)
        throw ContractViolation("is_quaternion_real: dimension must be even");
    const double scale = max_abs(m);
    if (scale == 0.0)
        return true;
    for (std::size_t i = 0; i < m.rows(); i += 2)
        for (std::size_t j = 0; j < m.cols(); j += 2) {
            const cd z = m(i, j), w = m(i, j + 1);
            if (std::abs(m(i + 1, j) + std::conj(w)) > tol * scale ||
                std::abs(m(i + 1, j + 1) - std::conj(z)) > tol * scale)
                return false;
        }
    return true;
}

} // namespace nhrmt
