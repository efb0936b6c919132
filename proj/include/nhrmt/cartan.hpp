#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "catalog.hpp"
#include "subspace.hpp"
#include "symmetry.hpp"

namespace nhrmt {

// P is the joint eigenspace of the involutions with eigenvalues p_eigenvalue(op).
inline SubspaceBasis solve_P(const EnsembleSpec& spec)
{
    std::vector<RealLinearMap> maps;
    for (const auto& op : spec.ops()) {
        const RealLinearMap tau = involution(op);
        const double t = p_eigenvalue(op);
        maps.push_back({spec.n(), [tau, t](const ComplexMatrix& h) { return tau(h) - t * h; }});
    }
    return kernel_basis(maps, spec.n());
}

// K is the joint fixed set.
inline SubspaceBasis solve_K(const EnsembleSpec& spec)
{
    std::vector<RealLinearMap> maps;
    for (const auto& op : spec.ops()) {
        const RealLinearMap tau = involution(op);
        maps.push_back({spec.n(), [tau](const ComplexMatrix& h) { return tau(h) - h; }});
    }
    return kernel_basis(maps, spec.n());
}

// Orthogonal projector onto P: prod (1 + t_j tau_j) / 2.
inline RealLinearMap projector_P(const EnsembleSpec& spec)
{
    std::vector<std::pair<RealLinearMap, double>> parts;
    for (const auto& op : spec.ops())
        parts.emplace_back(involution(op), double(p_eigenvalue(op)));
    return {spec.n(), [parts](const ComplexMatrix& h) {
                ComplexMatrix x = h;
                for (const auto& [tau, t] : parts)
                    x = 0.5 * (x + t * tau(x));
                return x;
            }};
}

// Realified orthonormal basis as columns, for fast projections.
class RealFrame {
public:
    explicit RealFrame(const SubspaceBasis& b) : n_(b.ambient_n())
    {
        M_.resize(static_cast<Eigen::Index>(2 * n_ * n_), static_cast<Eigen::Index>(b.real_dim()));
        for (std::size_t j = 0; j < b.real_dim(); ++j)
            M_.col(static_cast<Eigen::Index>(j)) = realify(b[j]);
    }
    double residual(const ComplexMatrix& h) const
    {
        const Eigen::VectorXd v = realify(h);
        if (M_.cols() == 0)
            return v.norm();
        return (v - M_ * (M_.transpose() * v)).norm();
    }
    Eigen::VectorXd coords(const ComplexMatrix& h) const { return M_.transpose() * realify(h); }

private:
    std::size_t n_;
    Eigen::MatrixXd M_;
};

struct SymmetricPair {
    EnsembleSpec spec;
    SubspaceBasis p_basis, k_basis;
    // max residuals of [K,K] in K, [K,P] in P, [P,P] in K
    std::array<double, 3> residuals{0.0, 0.0, 0.0};
    // every involution fixes P, so P and K coincide
    bool fixed_set_case = false;
    // [P,P] lies in P + iP
    bool group_type = false;
};

inline double bracket_residual(const SubspaceBasis& a, const SubspaceBasis& b, const SubspaceBasis& target)
{
    const RealFrame f(target);
    double r = 0.0;
    for (std::size_t i = 0; i < a.real_dim(); ++i)
        for (std::size_t j = 0; j < b.real_dim(); ++j)
            r = std::max(r, f.residual(commutator(a[i], b[j])));
    return r;
}

inline SubspaceBasis weyl_dual(const SubspaceBasis& basis)
{
    std::vector<ComplexMatrix> v;
    for (const auto& b : basis)
        v.push_back(I_unit * b);
    return SubspaceBasis(basis.ambient_n(), std::move(v));
}

inline SubspaceBasis span_union(const SubspaceBasis& a, const SubspaceBasis& b)
{
    std::vector<ComplexMatrix> v(a.begin(), a.end());
    v.insert(v.end(), b.begin(), b.end());
    if (v.empty())
        return SubspaceBasis(a.ambient_n(), {});
    return orthonormalize(v);
}

struct PairReport {
    std::array<double, 3> residuals{};
    double orthogonality = 0.0;
    bool orthogonality_checked = true;
    bool pass = false;
};

inline PairReport verify_symmetric_pair(const SymmetricPair& pair, double tol = 1e-9)
{
    PairReport r;
    r.residuals[0] = bracket_residual(pair.k_basis, pair.k_basis, pair.k_basis);
    r.residuals[1] = bracket_residual(pair.k_basis, pair.p_basis, pair.p_basis);
    r.residuals[2] = bracket_residual(pair.p_basis, pair.p_basis, pair.k_basis);
    r.orthogonality_checked = !pair.fixed_set_case;
    if (r.orthogonality_checked)
        for (const auto& x : pair.p_basis)
            for (const auto& y : pair.k_basis)
                r.orthogonality = std::max(r.orthogonality, std::abs(inner(x, y)));
    r.pass = r.residuals[0] <= tol && r.residuals[1] <= tol && r.residuals[2] <= tol && r.orthogonality <= tol;
    return r;
}

inline SymmetricPair solve(const EnsembleSpec& spec)
{
    SymmetricPair pair{spec, solve_P(spec), solve_K(spec)};
    pair.fixed_set_case = true;
    for (const auto& op : spec.ops())
        if (p_eigenvalue(op) != 1)
            pair.fixed_set_case = false;
    pair.residuals = verify_symmetric_pair(pair).residuals;
    pair.group_type = bracket_residual(pair.p_basis, pair.p_basis, span_union(pair.p_basis, weyl_dual(pair.p_basis))) <= 1e-9;
    return pair;
}

struct StructureReport {
    bool pass = false;
    std::size_t dim = 0, expected_dim = 0;
    std::optional<std::string> failure;
};

inline StructureReport structure_report(const SubspaceBasis& basis, const StructurePredicate& pred,
                                        std::size_t half_size, double tol = 1e-10)
{
    StructureReport r;
    r.dim = basis.real_dim();
    r.expected_dim = pred.param_count(half_size);
    for (const auto& v : basis) {
        const ComplexMatrix w = pred.times_i ? ComplexMatrix(I_unit * v) : v;
        if (auto f = check_form(pred, w, tol)) {
            r.failure = *f;
            break;
        }
    }
    if (!r.failure && r.dim != r.expected_dim)
        r.failure = "dimension " + std::to_string(r.dim) + " differs from parameter count " +
                    std::to_string(r.expected_dim);
    r.pass = !r.failure.has_value();
    return r;
}

struct KillingResult {
    SubspaceBasis basis;
    Eigen::MatrixXd killing, trace_form, gram;
};

// Killing form g_ij = tr(ad_i ad_j) on an orthonormalized basis of K + P.
inline KillingResult killing_form(const SubspaceBasis& k, const SubspaceBasis& p)
{
    KillingResult out;
    out.basis = span_union(k, p);
    const auto& b = out.basis;
    const Eigen::Index m = static_cast<Eigen::Index>(b.real_dim());
    const RealFrame frame(b);
    std::vector<Eigen::MatrixXd> ad(m, Eigen::MatrixXd(m, m));
    for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index s = 0; s < m; ++s) {
            const ComplexMatrix br = commutator(b[i], b[s]);
            if (frame.residual(br) > 1e-8)
                throw ContractViolation("killing_form: bracket of basis elements " + std::to_string(i) + " and " +
                                        std::to_string(s) + " leaves the span");
            ad[i].col(s) = frame.coords(br);
        }
    out.killing.resize(m, m);
    out.trace_form.resize(m, m);
    out.gram.resize(m, m);
    for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = 0; j < m; ++j) {
            out.killing(i, j) = (ad[i] * ad[j]).trace();
            out.trace_form(i, j) = trace(b[i] * b[j]).real();
            out.gram(i, j) = inner(b[i], b[j]);
        }
    return out;
}

// Solve an entry and check both block forms.
struct EntryCheck {
    SymmetricPair pair;
    PairReport pair_report;
    StructureReport p_structure, k_structure;
    bool pass() const { return pair_report.pass && p_structure.pass && k_structure.pass; }
};

inline EntryCheck check_entry(const CatalogEntry& e, std::size_t half_size)
{
    SymmetricPair pair = solve(e.build(half_size));
    PairReport rep = verify_symmetric_pair(pair);
    StructureReport ps = structure_report(pair.p_basis, e.p_form, half_size);
    StructureReport ks = structure_report(pair.k_basis, e.k_form, half_size);
    return {std::move(pair), rep, ps, ks};
}

} // namespace nhrmt
