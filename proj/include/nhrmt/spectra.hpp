#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "cartan.hpp"
#include "eigen.hpp"
#include "random.hpp"
#include "subspace.hpp"
#include "symmetry.hpp"

namespace nhrmt {

// h = sum x_i B_i with x_i ~ N(0, sigma^2), or the projection of an ambient Gaussian.
class GaussianSampler {
public:
    GaussianSampler(SubspaceBasis basis, double sigma, std::uint64_t seed)
        : n_(basis.ambient_n()), basis_(std::move(basis)), sigma_(sigma), seed_(seed)
    {
        if (basis_.empty())
            throw ContractViolation("sampler: empty basis");
        check_sigma();
    }

    // Same law as the basis form when the projector is orthogonal.
    GaussianSampler(RealLinearMap projector, double sigma, std::uint64_t seed)
        : n_(projector.n), projector_(std::move(projector)), sigma_(sigma), seed_(seed)
    {
        check_sigma();
    }

    std::size_t n() const { return n_; }
    double sigma() const { return sigma_; }
    std::uint64_t seed() const { return seed_; }

    ComplexMatrix sample(std::uint64_t index) const
    {
        CounterRng rng(seed_, index);
        std::normal_distribution<double> g;
        if (projector_) {
            ComplexMatrix a(n_, n_);
            for (std::size_t k = 0; k < a.size(); ++k) {
                const double re = g(rng), im = g(rng);
                a.data()[k] = sigma_ * cd(re, im);
            }
            return (*projector_)(a);
        }
        ComplexMatrix h(n_, n_);
        for (const auto& b : basis_)
            h += (sigma_ * g(rng)) * b;
        return h;
    }

private:
    void check_sigma() const
    {
        if (!(sigma_ >= 0.0) || !std::isfinite(sigma_))
            throw ContractViolation("sampler: sigma must be non-negative");
    }

    std::size_t n_;
    SubspaceBasis basis_;
    std::optional<RealLinearMap> projector_;
    double sigma_;
    std::uint64_t seed_;
};

// Basis sampling for small N, the projector beyond.
inline GaussianSampler make_sampler(const EnsembleSpec& spec, double sigma, std::uint64_t seed,
                                    std::size_t basis_limit = 16)
{
    if (spec.n() <= basis_limit)
        return GaussianSampler(solve_P(spec), sigma, seed);
    return GaussianSampler(projector_P(spec), sigma, seed);
}

namespace detail {

inline ComplexMatrix lu_det_input(const ComplexMatrix& h, cd& det)
{
    ComplexMatrix a = h;
    const std::size_t n = a.rows();
    det = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(a(i, k)) > std::abs(a(piv, k)))
                piv = i;
        if (a(piv, k) == cd{}) {
            det = 0.0;
            return a;
        }
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a(k, j), a(piv, j));
            det = -det;
        }
        det *= a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const cd f = a(i, k) / a(k, k);
            for (std::size_t j = k; j < n; ++j)
                a(i, j) -= f * a(k, j);
        }
    }
    return a;
}

} // namespace detail

inline cd determinant(const ComplexMatrix& h)
{
    cd det;
    detail::lu_det_input(h, det);
    return det;
}

// Eigenvalues with trace and determinant consistency checks.
inline std::vector<cd> spectrum(const ComplexMatrix& h)
{
    std::vector<cd> ev = eigenvalues_general(h);
    const std::size_t n = ev.size();
    if (n == 0 || n > 256)
        return ev;
    double big = 0.0, small = std::numeric_limits<double>::infinity();
    for (const auto& z : ev) {
        big = std::max(big, std::abs(z));
        small = std::min(small, std::abs(z));
    }
    // the product test is only meaningful when no eigenvalue is tiny relative to the rest
    if (big > 0.0 && small >= 1e-4 * big) {
        const cd det = determinant(h);
        double log_prod = 0.0, arg_prod = 0.0;
        for (const auto& z : ev) {
            log_prod += std::log(std::abs(z));
            arg_prod += std::arg(z);
        }
        const double dlog = std::abs(log_prod - std::log(std::abs(det)));
        const double darg = std::abs(std::remainder(arg_prod - std::arg(det), 2.0 * std::numbers::pi));
        if (dlog > 1e-6 * n || darg > 1e-6 * n)
            throw NumericalFailure("spectrum: eigenvalue product disagrees with the determinant");
    }
    return ev;
}

// Minimum-cost perfect assignment (rows to columns) of a square cost matrix.
inline std::vector<std::size_t> hungarian(const std::vector<std::vector<double>>& cost)
{
    const std::size_t n = cost.size();
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> u(n + 1), v(n + 1);
    std::vector<std::size_t> p(n + 1), way(n + 1);
    for (std::size_t i = 1; i <= n; ++i) {
        p[0] = i;
        std::size_t j0 = 0;
        std::vector<double> minv(n + 1, inf);
        std::vector<char> used(n + 1, 0);
        do {
            used[j0] = 1;
            const std::size_t i0 = p[j0];
            double delta = inf;
            std::size_t j1 = 0;
            for (std::size_t j = 1; j <= n; ++j)
                if (!used[j]) {
                    const double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                    if (cur < minv[j]) {
                        minv[j] = cur;
                        way[j] = j0;
                    }
                    if (minv[j] < delta) {
                        delta = minv[j];
                        j1 = j;
                    }
                }
            for (std::size_t j = 0; j <= n; ++j)
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const std::size_t j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0);
    }
    std::vector<std::size_t> assign(n);
    for (std::size_t j = 1; j <= n; ++j)
        assign[p[j] - 1] = j - 1;
    return assign;
}

// Largest distance in a pairing of two equal-size multisets: greedy first, Hungarian if that is not good enough.
inline double pairing_distance(const std::vector<cd>& a, const std::vector<cd>& b, double tol)
{
    if (a.size() != b.size())
        throw ContractViolation("pairing: multisets differ in size");
    const std::size_t n = a.size();
    std::vector<char> used(n, 0);
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t best = n;
        double bd = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < n; ++j)
            if (!used[j] && std::abs(a[i] - b[j]) < bd) {
                bd = std::abs(a[i] - b[j]);
                best = j;
            }
        used[best] = 1;
        worst = std::max(worst, bd);
    }
    if (worst <= tol)
        return worst;
    std::vector<std::vector<double>> cost(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            cost[i][j] = std::abs(a[i] - b[j]);
    const auto assign = hungarian(cost);
    double h = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        h = std::max(h, cost[i][assign[i]]);
    return std::min(worst, h);
}

struct SymmetryCheck {
    char kind;
    std::string closure;
    double distance = 0.0;
    bool pass = false;
};

inline std::vector<SymmetryCheck> spectral_symmetry_check(const EnsembleSpec& spec, const std::vector<cd>& ev,
                                                          double rel_tol = 1e-7)
{
    if (ev.size() != spec.n())
        throw ContractViolation("spectral_symmetry_check: eigenvalue count differs from n");
    double scale = 1.0;
    for (const auto& z : ev)
        scale = std::max(scale, std::abs(z));
    const double tol = rel_tol * scale;
    std::vector<SymmetryCheck> out;
    for (const auto& op : spec.ops()) {
        std::vector<cd> img(ev.size());
        SymmetryCheck c{kind_char(op.kind), ""};
        for (std::size_t i = 0; i < ev.size(); ++i) {
            switch (op.kind) {
            case SymmetryKind::P: img[i] = -ev[i]; break;
            case SymmetryKind::C: img[i] = double(op.epsilon) * ev[i]; break;
            case SymmetryKind::Q:
            case SymmetryKind::K: img[i] = std::conj(ev[i]); break;
            }
        }
        switch (op.kind) {
        case SymmetryKind::P: c.closure = "lambda -> -lambda"; break;
        case SymmetryKind::C: c.closure = op.epsilon > 0 ? "lambda -> lambda" : "lambda -> -lambda"; break;
        default: c.closure = "lambda -> conj(lambda)"; break;
        }
        c.distance = pairing_distance(ev, img, tol);
        c.pass = c.distance <= tol;
        out.push_back(c);
    }
    return out;
}

struct Histogram {
    double lo = 0.0, width = 1.0;
    std::vector<std::size_t> counts;
};

struct SpectrumSummary {
    std::size_t samples = 0, eigenvalues = 0, real_count = 0;
    double support = 0.0;
    Histogram radial, real_axis;
    std::vector<double> spacings;
};

inline Histogram histogram(const std::vector<double>& xs, double lo, double hi, std::size_t bins)
{
    Histogram h{lo, (hi - lo) / double(bins), std::vector<std::size_t>(bins, 0)};
    if (!(h.width > 0.0))
        h.width = 1.0;
    for (double x : xs) {
        auto k = static_cast<std::ptrdiff_t>(std::floor((x - lo) / h.width));
        k = std::clamp<std::ptrdiff_t>(k, 0, static_cast<std::ptrdiff_t>(bins) - 1);
        h.counts[static_cast<std::size_t>(k)] += 1;
    }
    return h;
}

// Radial and real-part histograms (support / 64 bins by default) and nearest-neighbour spacings.
inline SpectrumSummary summarize(const std::vector<std::vector<cd>>& samples, std::size_t bins = 64)
{
    if (samples.empty())
        throw ContractViolation("summarize: no samples");
    SpectrumSummary s;
    s.samples = samples.size();
    std::vector<double> radii, reals;
    for (const auto& ev : samples)
        for (const auto& z : ev) {
            s.support = std::max(s.support, std::abs(z));
            radii.push_back(std::abs(z));
            reals.push_back(z.real());
        }
    s.eigenvalues = radii.size();
    const double tol = 1e-9 * std::max(1.0, s.support);
    for (const auto& ev : samples) {
        for (std::size_t i = 0; i < ev.size(); ++i) {
            if (std::abs(ev[i].imag()) <= tol)
                ++s.real_count;
            double d = std::numeric_limits<double>::infinity();
            for (std::size_t j = 0; j < ev.size(); ++j)
                if (j != i)
                    d = std::min(d, std::abs(ev[i] - ev[j]));
            if (std::isfinite(d))
                s.spacings.push_back(d);
        }
    }
    const double top = s.support > 0.0 ? s.support : 1.0;
    s.radial = histogram(radii, 0.0, top, bins);
    s.real_axis = histogram(reals, -top, top, bins);
    return s;
}

struct SampleResult {
    std::vector<cd> eigenvalues;
    std::vector<SymmetryCheck> checks;
};

// Samples [0, count) spread over workers; results are indexed by sample, so the output is worker-independent.
inline std::vector<SampleResult> run_campaign(const EnsembleSpec& spec, const GaussianSampler& sampler,
                                              std::size_t count, unsigned workers = 0)
{
    std::vector<SampleResult> out(count);
    if (workers == 0)
        workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(count, 1)));
    std::vector<std::exception_ptr> errors(workers);
    auto work = [&](unsigned w) {
        try {
            for (std::size_t i = w; i < count; i += workers) {
                const ComplexMatrix h = sampler.sample(i);
                out[i].eigenvalues = spectrum(h);
                out[i].checks = spectral_symmetry_check(spec, out[i].eigenvalues);
            }
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(work, w);
        for (auto& t : pool)
            t.join();
    }
    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return out;
}

} // namespace nhrmt
