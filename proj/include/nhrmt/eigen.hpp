#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "matrix.hpp"

namespace nhrmt {

namespace detail {

inline double cabs1(cd z) { return std::abs(z.real()) + std::abs(z.imag()); }

// Diagonal similarity by powers of two so row and column norms are comparable.
inline void balance(ComplexMatrix& a)
{
    const std::size_t n = a.rows();
    const double radix = 2.0, sqrdx = radix * radix;
    bool done = false;
    while (!done) {
        done = true;
        for (std::size_t i = 0; i < n; ++i) {
            double c = 0.0, r = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i)
                    continue;
                c += cabs1(a(j, i));
                r += cabs1(a(i, j));
            }
            if (c == 0.0 || r == 0.0)
                continue;
            double g = r / radix, f = 1.0;
            const double s = c + r;
            while (c < g) {
                f *= radix;
                c *= sqrdx;
            }
            g = r * radix;
            while (c >= g) {
                f /= radix;
                c /= sqrdx;
            }
            if ((c + r) / f < 0.95 * s) {
                done = false;
                for (std::size_t j = 0; j < n; ++j)
                    a(i, j) /= f;
                for (std::size_t j = 0; j < n; ++j)
                    a(j, i) *= f;
            }
        }
    }
}

inline void hessenberg(ComplexMatrix& a)
{
    const std::size_t n = a.rows();
    if (n < 3)
        return;
    std::vector<cd> v(n);
    for (std::size_t k = 0; k + 2 < n; ++k) {
        double xnorm = 0.0;
        for (std::size_t i = k + 1; i < n; ++i)
            xnorm += std::norm(a(i, k));
        xnorm = std::sqrt(xnorm);
        if (xnorm == 0.0)
            continue;
        const cd x0 = a(k + 1, k);
        const cd phase = std::abs(x0) > 0.0 ? x0 / std::abs(x0) : cd{1.0};
        const cd alpha = -phase * xnorm;
        for (std::size_t i = k + 1; i < n; ++i)
            v[i] = a(i, k);
        v[k + 1] -= alpha;
        double vnorm = 0.0;
        for (std::size_t i = k + 1; i < n; ++i)
            vnorm += std::norm(v[i]);
        vnorm = std::sqrt(vnorm);
        if (vnorm == 0.0)
            continue;
        for (std::size_t i = k + 1; i < n; ++i)
            v[i] /= vnorm;
        // a <- (I - 2vv^dagger) a
        for (std::size_t j = k; j < n; ++j) {
            cd s{};
            for (std::size_t i = k + 1; i < n; ++i)
                s += std::conj(v[i]) * a(i, j);
            s *= 2.0;
            for (std::size_t i = k + 1; i < n; ++i)
                a(i, j) -= v[i] * s;
        }
        // a <- a (I - 2vv^dagger)
        for (std::size_t i = 0; i < n; ++i) {
            cd s{};
            for (std::size_t j = k + 1; j < n; ++j)
                s += a(i, j) * v[j];
            s *= 2.0;
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) -= s * std::conj(v[j]);
        }
        a(k + 1, k) = alpha;
        for (std::size_t i = k + 2; i < n; ++i)
            a(i, k) = 0.0;
    }
}

struct Givens {
    double c = 1.0;
    cd s{};
    cd r{};
};

inline Givens givens(cd f, cd g)
{
    Givens G;
    if (g == cd{}) {
        G.r = f;
        return G;
    }
    if (f == cd{}) {
        const double ag = std::abs(g);
        G.c = 0.0;
        G.s = std::conj(g) / ag;
        G.r = ag;
        return G;
    }
    const double af = std::abs(f), nrm = std::hypot(af, std::abs(g));
    const cd ph = f / af;
    G.c = af / nrm;
    G.s = ph * std::conj(g) / nrm;
    G.r = ph * nrm;
    return G;
}

inline void eig2(cd a, cd b, cd c, cd d, cd& l1, cd& l2)
{
    const cd m = 0.5 * (a + d);
    const cd h = 0.5 * (a - d);
    const cd disc = std::sqrt(h * h + b * c);
    l1 = m + disc;
    l2 = m - disc;
}

} // namespace detail

// Eigenvalues of a general complex matrix, with multiplicity.
inline std::vector<cd> eigenvalues_general(const ComplexMatrix& input)
{
    using namespace detail;
    if (!input.square())
        throw ContractViolation("eigenvalues_general: matrix must be square");
    const std::size_t n = input.rows();
    if (n > 4096)
        throw ContractViolation("eigenvalues_general: n > 4096");
    for (const auto& z : input.values())
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw ContractViolation("eigenvalues_general: non-finite entry");
    std::vector<cd> ev(n);
    if (n == 0)
        return ev;

    ComplexMatrix H = input;
    balance(H);
    hessenberg(H);

    const double ulp = std::numeric_limits<double>::epsilon();
    double hnorm = 0.0;
    for (const auto& z : H.values())
        hnorm = std::max(hnorm, cabs1(z));
    const std::size_t itmax = 30 * std::max<std::size_t>(10, n);

    std::ptrdiff_t ihi = static_cast<std::ptrdiff_t>(n) - 1;
    while (ihi >= 0) {
        std::size_t its = 0;
        for (;;) {
            std::ptrdiff_t l = ihi;
            for (; l > 0; --l) {
                double s = cabs1(H(l - 1, l - 1)) + cabs1(H(l, l));
                if (s == 0.0)
                    s = hnorm;
                if (cabs1(H(l, l - 1)) <= ulp * s) {
                    H(l, l - 1) = 0.0;
                    break;
                }
            }
            if (l == ihi) {
                ev[ihi] = H(ihi, ihi);
                ihi -= 1;
                break;
            }
            if (l == ihi - 1) {
                eig2(H(l, l), H(l, ihi), H(ihi, l), H(ihi, ihi), ev[l], ev[ihi]);
                ihi -= 2;
                break;
            }
            if (its >= itmax)
                throw NumericalFailure("eigenvalues_general: QR iteration stalled at index " + std::to_string(ihi));

            cd mu;
            if (its == 10) {
                mu = H(l, l) + 0.75 * std::abs(H(l + 1, l).real());
            } else if (its == 20) {
                mu = H(ihi, ihi) + 0.75 * std::abs(H(ihi, ihi - 1).real());
            } else {
                cd l1, l2;
                eig2(H(ihi - 1, ihi - 1), H(ihi - 1, ihi), H(ihi, ihi - 1), H(ihi, ihi), l1, l2);
                mu = std::abs(l1 - H(ihi, ihi)) < std::abs(l2 - H(ihi, ihi)) ? l1 : l2;
            }
            ++its;

            for (std::ptrdiff_t k = l; k < ihi; ++k) {
                Givens G;
                if (k == l) {
                    G = givens(H(l, l) - mu, H(l + 1, l));
                } else {
                    G = givens(H(k, k - 1), H(k + 1, k - 1));
                    H(k, k - 1) = G.r;
                    H(k + 1, k - 1) = 0.0;
                }
                for (std::ptrdiff_t j = k; j <= ihi; ++j) {
                    const cd x = H(k, j), y = H(k + 1, j);
                    H(k, j) = G.c * x + G.s * y;
                    H(k + 1, j) = -std::conj(G.s) * x + G.c * y;
                }
                const std::ptrdiff_t rmax = std::min(k + 2, ihi);
                for (std::ptrdiff_t i = l; i <= rmax; ++i) {
                    const cd x = H(i, k), y = H(i, k + 1);
                    H(i, k) = G.c * x + std::conj(G.s) * y;
                    H(i, k + 1) = -G.s * x + G.c * y;
                }
            }
        }
    }

    cd sum{};
    for (const auto& z : ev) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw NumericalFailure("eigenvalues_general: non-finite eigenvalue");
        sum += z;
    }
    const double tol = 1e-8 * static_cast<double>(n) * frobenius(input);
    if (std::abs(sum - trace(input)) > tol)
        throw NumericalFailure("eigenvalues_general: eigenvalue sum disagrees with trace");
    return ev;
}

} // namespace nhrmt
