#pragma once

#include <cmath>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "matrix.hpp"

namespace nhrmt {

// Real-linear map on n x n complex matrices (real dimension 2n^2).
struct RealLinearMap {
    std::size_t n = 0;
    std::function<ComplexMatrix(const ComplexMatrix&)> fn;

    std::size_t dim() const { return 2 * n * n; }
    ComplexMatrix operator()(const ComplexMatrix& h) const { return fn(h); }
};

// Ordering: [Re a00, Im a00, Re a01, ...]; the Euclidean dot product is Re tr(A^dagger B).
inline Eigen::VectorXd realify(const ComplexMatrix& m)
{
    Eigen::VectorXd v(2 * m.size());
    for (std::size_t k = 0; k < m.size(); ++k) {
        v[2 * k] = m.data()[k].real();
        v[2 * k + 1] = m.data()[k].imag();
    }
    return v;
}

inline ComplexMatrix unrealify(const Eigen::Ref<const Eigen::VectorXd>& v, std::size_t n)
{
    ComplexMatrix m(n, n);
    for (std::size_t k = 0; k < n * n; ++k)
        m.data()[k] = cd(v[2 * k], v[2 * k + 1]);
    return m;
}

inline ComplexMatrix random_matrix(std::size_t n, std::mt19937_64& rng)
{
    std::normal_distribution<double> g;
    ComplexMatrix m(n, n);
    for (std::size_t k = 0; k < m.size(); ++k)
        m.data()[k] = cd(g(rng), g(rng));
    return m;
}

inline Eigen::MatrixXd to_real_matrix(const RealLinearMap& f)
{
    const std::size_t d = f.dim();
    Eigen::MatrixXd M(d, d);
    Eigen::VectorXd e = Eigen::VectorXd::Zero(d);
    for (std::size_t j = 0; j < d; ++j) {
        e[j] = 1.0;
        M.col(j) = realify(f(unrealify(e, f.n)));
        e[j] = 0.0;
    }
    return M;
}

inline bool passes_linearity_probe(const RealLinearMap& f, unsigned trials = 3)
{
    std::mt19937_64 rng(0x5eed1234u);
    std::normal_distribution<double> g;
    for (unsigned t = 0; t < trials; ++t) {
        const ComplexMatrix x = random_matrix(f.n, rng), y = random_matrix(f.n, rng);
        const double a = g(rng), b = g(rng);
        const ComplexMatrix fx = f(x), fy = f(y);
        const ComplexMatrix lhs = f(a * x + b * y);
        const ComplexMatrix rhs = a * fx + b * fy;
        const double scale = std::abs(a) * frobenius(fx) + std::abs(b) * frobenius(fy) + 1e-300;
        if (frobenius(lhs - rhs) > 1e-12 * scale)
            return false;
    }
    return true;
}

class SubspaceBasis {
public:
    SubspaceBasis() = default;
    SubspaceBasis(std::size_t ambient_n, std::vector<ComplexMatrix> vectors)
        : n_(ambient_n), v_(std::move(vectors))
    {
        for (const auto& b : v_)
            if (b.rows() != n_ || b.cols() != n_)
                throw ContractViolation("basis vector has the wrong shape");
    }

    std::size_t ambient_n() const { return n_; }
    std::size_t real_dim() const { return v_.size(); }
    bool empty() const { return v_.empty(); }
    const std::vector<ComplexMatrix>& vectors() const { return v_; }
    const ComplexMatrix& operator[](std::size_t i) const { return v_[i]; }
    auto begin() const { return v_.begin(); }
    auto end() const { return v_.end(); }

    ComplexMatrix project(const ComplexMatrix& h) const
    {
        ComplexMatrix p(n_, n_);
        for (const auto& b : v_)
            p += inner(b, h) * b;
        return p;
    }
    double residual(const ComplexMatrix& h) const { return frobenius(h - project(h)); }

    double orthonormality_error() const
    {
        double e = 0.0;
        for (std::size_t i = 0; i < v_.size(); ++i)
            for (std::size_t j = 0; j <= i; ++j)
                e = std::max(e, std::abs(inner(v_[i], v_[j]) - (i == j ? 1.0 : 0.0)));
        return e;
    }

private:
    std::size_t n_ = 0;
    std::vector<ComplexMatrix> v_;
};

// Modified Gram-Schmidt with one re-orthogonalization pass.
inline SubspaceBasis orthonormalize(const std::vector<ComplexMatrix>& vectors)
{
    if (vectors.empty())
        return {};
    const std::size_t n = vectors.front().rows();
    std::vector<ComplexMatrix> out;
    for (const auto& v0 : vectors) {
        if (v0.rows() != n || v0.cols() != n)
            throw ContractViolation("orthonormalize: mixed ambient sizes");
        const double n0 = frobenius(v0);
        if (n0 == 0.0)
            continue;
        ComplexMatrix v = v0;
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& q : out)
                v -= inner(q, v) * q;
        const double nv = frobenius(v);
        if (nv < 1e-9 * n0)
            continue;
        v *= 1.0 / nv;
        out.push_back(std::move(v));
    }
    return SubspaceBasis(n, std::move(out));
}

inline SubspaceBasis kernel_of_real_matrix(const Eigen::MatrixXd& M, std::size_t n, double rel_tol = 1e-9)
{
    const Eigen::Index d = M.cols();
    std::vector<ComplexMatrix> out;
    if (M.rows() == 0) {
        for (Eigen::Index j = 0; j < d; ++j) {
            Eigen::VectorXd e = Eigen::VectorXd::Zero(d);
            e[j] = 1.0;
            out.push_back(unrealify(e, n));
        }
        return SubspaceBasis(n, std::move(out));
    }
    Eigen::MatrixXd R;
    if (M.rows() > d) {
        Eigen::HouseholderQR<Eigen::MatrixXd> qr(M);
        R = qr.matrixQR().topRows(d).triangularView<Eigen::Upper>();
    } else {
        R = M;
    }
    Eigen::JacobiSVD<Eigen::MatrixXd, Eigen::NoQRPreconditioner> svd(R, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double smax = sv.size() ? sv[0] : 0.0;
    Eigen::Index rank = 0;
    for (Eigen::Index k = 0; k < sv.size(); ++k)
        if (sv[k] > rel_tol * smax && smax > 0.0)
            ++rank;
    const Eigen::MatrixXd& V = svd.matrixV();
    for (Eigen::Index j = rank; j < d; ++j)
        out.push_back(unrealify(V.col(j), n));
    return SubspaceBasis(n, std::move(out));
}

// Joint kernel of several maps on the same space.
inline SubspaceBasis kernel_basis(const std::vector<RealLinearMap>& maps, std::size_t n)
{
    std::vector<Eigen::MatrixXd> blocks;
    Eigen::Index rows = 0;
    for (const auto& f : maps) {
        if (f.n != n)
            throw ContractViolation("kernel_basis: map acts on a different ambient size");
        if (!passes_linearity_probe(f))
            throw ContractViolation("kernel_basis: map failed the linearity probe");
        blocks.push_back(to_real_matrix(f));
        rows += blocks.back().rows();
    }
    Eigen::MatrixXd M(rows, static_cast<Eigen::Index>(2 * n * n));
    Eigen::Index r = 0;
    for (const auto& b : blocks) {
        M.middleRows(r, b.rows()) = b;
        r += b.rows();
    }
    return kernel_of_real_matrix(M, n);
}

inline SubspaceBasis kernel_basis(const RealLinearMap& map) { return kernel_basis({map}, map.n); }

inline double span_distance(const SubspaceBasis& a, const SubspaceBasis& b)
{
    double r = 0.0;
    for (const auto& v : a)
        r = std::max(r, b.residual(v));
    for (const auto& v : b)
        r = std::max(r, a.residual(v));
    return r;
}

inline bool spans_equal(const SubspaceBasis& a, const SubspaceBasis& b, double tol = 1e-9)
{
    return a.ambient_n() == b.ambient_n() && a.real_dim() == b.real_dim() && span_distance(a, b) <= tol;
}

inline bool mutually_orthogonal(const SubspaceBasis& a, const SubspaceBasis& b, double tol = 1e-9)
{
    for (const auto& x : a)
        for (const auto& y : b)
            if (std::abs(inner(x, y)) > tol)
                return false;
    return true;
}

} // namespace nhrmt
