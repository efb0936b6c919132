#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "matrix.hpp"
#include "quaternion.hpp"
#include "subspace.hpp"

namespace nhrmt {

enum class SymmetryKind { P, C, Q, K };

inline char kind_char(SymmetryKind k) { return "PCQK"[static_cast<int>(k)]; }

inline SymmetryKind kind_from_char(char c)
{
    switch (c) {
    case 'P': return SymmetryKind::P;
    case 'C': return SymmetryKind::C;
    case 'Q': return SymmetryKind::Q;
    case 'K': return SymmetryKind::K;
    }
    throw ContractViolation(std::string("unknown symmetry kind '") + c + "'");
}

struct SymmetryOp {
    SymmetryKind kind;
    ComplexMatrix matrix;
    int epsilon = 1; // only used for C
};

struct SignTable {
    std::optional<int> eps_cp, eps_pq, eps_cq;
    std::optional<int> k_p_sign, k_q_sign, k_c_sign;
    std::optional<int> c_sym, k_sym;

    friend bool operator==(const SignTable&, const SignTable&) = default;
};

namespace detail {

// +1 if a == b, -1 if a == -b, nothing otherwise.
inline std::optional<int> relative_sign(const ComplexMatrix& a, const ComplexMatrix& b, double tol = 1e-10)
{
    if (max_abs_diff(a, b) <= tol)
        return 1;
    if (max_abs(a + b) <= tol)
        return -1;
    return std::nullopt;
}

} // namespace detail

// Unitarity and order-two checks; fills c_sym / k_sym.
inline SignTable validate(const SymmetryOp& op)
{
    const auto& m = op.matrix;
    const std::string who = std::string(1, kind_char(op.kind));
    if (!m.square())
        throw ContractViolation(who + ": matrix must be square");
    if (op.kind == SymmetryKind::Q && m.rows() > 0 && max_abs(m + transpose(m)) <= 1e-10)
        throw ContractViolation("Q: an antisymmetric q is excluded (q^-1 q^dagger must be +1)");
    if (!is_unitary(m))
        throw ContractViolation(who + ": matrix is not unitary");
    SignTable t;
    const auto id = ComplexMatrix::identity(m.rows());
    switch (op.kind) {
    case SymmetryKind::P:
        if (max_abs_diff(m * m, id) > 1e-10)
            throw ContractViolation("P: p^2 must be 1");
        break;
    case SymmetryKind::Q:
        if (max_abs_diff(m, adjoint(m)) > 1e-10 || max_abs_diff(m * m, id) > 1e-10)
            throw ContractViolation("Q: q must satisfy q = q^dagger and q^2 = 1");
        break;
    case SymmetryKind::C: {
        if (op.epsilon != 1 && op.epsilon != -1)
            throw ContractViolation("C: epsilon must be +1 or -1");
        auto s = detail::relative_sign(transpose(m), m);
        if (!s)
            throw ContractViolation("C: c must be symmetric or antisymmetric");
        t.c_sym = *s;
        break;
    }
    case SymmetryKind::K: {
        auto s = detail::relative_sign(transpose(m), m);
        if (!s)
            throw ContractViolation("K: k must be symmetric or antisymmetric");
        t.k_sym = *s;
        break;
    }
    }
    return t;
}

class EnsembleSpec {
public:
    EnsembleSpec(std::size_t n, std::vector<SymmetryOp> ops);

    std::size_t n() const { return n_; }
    const std::vector<SymmetryOp>& ops() const { return ops_; }
    const SignTable& signs() const { return signs_; }

    const SymmetryOp* find(SymmetryKind k) const
    {
        for (const auto& op : ops_)
            if (op.kind == k)
                return &op;
        return nullptr;
    }
    bool has(SymmetryKind k) const { return find(k) != nullptr; }

    // Present kinds in table order: P, Q, C, K.
    std::string kinds() const
    {
        std::string s;
        for (auto k : {SymmetryKind::P, SymmetryKind::Q, SymmetryKind::C, SymmetryKind::K})
            if (has(k))
                s += kind_char(k);
        return s;
    }

private:
    std::size_t n_;
    std::vector<SymmetryOp> ops_;
    SignTable signs_;
};

// Signs of c = e p c p^T, q = e p q p^dagger, q = e c q* c^dagger and the three K relations.
inline SignTable check_commutativity(const EnsembleSpec& spec)
{
    SignTable t;
    const auto* p = spec.find(SymmetryKind::P);
    const auto* c = spec.find(SymmetryKind::C);
    const auto* q = spec.find(SymmetryKind::Q);
    const auto* k = spec.find(SymmetryKind::K);
    auto need = [](std::optional<int> s, const char* rel) {
        if (!s)
            throw ContractViolation(std::string("symmetries do not commute: ") + rel + " fails for both signs");
        return *s;
    };
    if (c && p)
        t.eps_cp = need(detail::relative_sign(c->matrix, p->matrix * c->matrix * transpose(p->matrix)),
                        "c = +-p c p^T");
    if (q && p)
        t.eps_pq = need(detail::relative_sign(q->matrix, p->matrix * q->matrix * adjoint(p->matrix)),
                        "q = +-p q p^dagger");
    if (c && q)
        t.eps_cq = need(detail::relative_sign(q->matrix, c->matrix * conjugate(q->matrix) * adjoint(c->matrix)),
                        "q = +-c q* c^dagger");
    if (k && p)
        t.k_p_sign = need(detail::relative_sign(p->matrix, k->matrix * conjugate(p->matrix) * adjoint(k->matrix)),
                          "p = +-k p* k^dagger");
    if (k && q)
        t.k_q_sign = need(detail::relative_sign(q->matrix, k->matrix * conjugate(q->matrix) * adjoint(k->matrix)),
                          "q = +-k q* k^dagger");
    if (k && c)
        t.k_c_sign = need(detail::relative_sign(c->matrix, k->matrix * conjugate(c->matrix) * transpose(k->matrix)),
                          "c = +-k c* k^T");
    return t;
}

inline EnsembleSpec::EnsembleSpec(std::size_t n, std::vector<SymmetryOp> ops) : n_(n), ops_(std::move(ops))
{
    if (n_ == 0 || n_ % 2)
        throw ContractViolation("ensemble dimension must be even and positive");
    std::string seen;
    SignTable own;
    for (const auto& op : ops_) {
        const char kc = kind_char(op.kind);
        if (seen.find(kc) != std::string::npos)
            throw ContractViolation(std::string("two symmetries of kind ") + kc);
        seen += kc;
        if (op.matrix.rows() != n_ || op.matrix.cols() != n_)
            throw ContractViolation(std::string(1, kc) + ": matrix size differs from n");
        const SignTable t = validate(op);
        if (t.c_sym)
            own.c_sym = t.c_sym;
        if (t.k_sym)
            own.k_sym = t.k_sym;
    }
    signs_ = check_commutativity(*this);
    signs_.c_sym = own.c_sym;
    signs_.k_sym = own.k_sym;
}

// tau_P = p h p^-1, tau_C = -c h^T c^-1, tau_Q = -q h^dagger q^-1, tau_K = k h* k^-1.
inline RealLinearMap involution(const SymmetryOp& op)
{
    const ComplexMatrix m = op.matrix;
    const ComplexMatrix mi = adjoint(m);
    RealLinearMap f;
    f.n = m.rows();
    switch (op.kind) {
    case SymmetryKind::P:
        f.fn = [m, mi](const ComplexMatrix& h) { return m * h * mi; };
        break;
    case SymmetryKind::C:
        f.fn = [m, mi](const ComplexMatrix& h) { return -(m * transpose(h) * mi); };
        break;
    case SymmetryKind::Q:
        f.fn = [m, mi](const ComplexMatrix& h) { return -(m * adjoint(h) * mi); };
        break;
    case SymmetryKind::K:
        f.fn = [m, mi](const ComplexMatrix& h) { return m * conjugate(h) * mi; };
        break;
    }
    return f;
}

// Eigenvalue of tau on P: -1 for P and Q, -epsilon for C, +1 for K.
inline int p_eigenvalue(const SymmetryOp& op)
{
    switch (op.kind) {
    case SymmetryKind::P:
    case SymmetryKind::Q: return -1;
    case SymmetryKind::C: return -op.epsilon;
    case SymmetryKind::K: return 1;
    }
    return 1;
}

inline EnsembleSpec unitary_transport(const EnsembleSpec& spec, const ComplexMatrix& u)
{
    if (u.rows() != spec.n() || !is_unitary(u))
        throw ContractViolation("unitary_transport: u must be a unitary of size n");
    const ComplexMatrix ud = adjoint(u), ut = transpose(u);
    std::vector<SymmetryOp> ops;
    for (const auto& op : spec.ops()) {
        SymmetryOp t = op;
        if (op.kind == SymmetryKind::P || op.kind == SymmetryKind::Q)
            t.matrix = u * op.matrix * ud;
        else
            t.matrix = u * op.matrix * ut;
        ops.push_back(std::move(t));
    }
    return EnsembleSpec(spec.n(), std::move(ops));
}

// Matrices used by the catalog tables. b is the half-size.
namespace forms {

inline ComplexMatrix I(std::size_t n) { return ComplexMatrix::identity(n); }
inline ComplexMatrix Z(std::size_t n) { return ComplexMatrix(n, n); }
// diag(1, -1)
inline ComplexMatrix diag_pm(std::size_t b) { return block_diag({I(b), -I(b)}); }
// [[0, 1], [s, 0]]
inline ComplexMatrix offdiag(std::size_t b, int s) { return from_blocks(Z(b), I(b), double(s) * I(b), Z(b)); }
inline ComplexMatrix offdiag_sym(std::size_t b) { return offdiag(b, 1); }
inline ComplexMatrix offdiag_antisym(std::size_t b) { return offdiag(b, -1); }

} // namespace forms

// Named forms at ambient size n.
inline ComplexMatrix named_form(const std::string& name, std::size_t n)
{
    using namespace forms;
    auto need = [&](std::size_t unit) {
        if (n == 0 || n % unit)
            throw ContractViolation("form '" + name + "' needs n divisible by " + std::to_string(unit));
    };
    if (name == "identity")
        return I(n);
    if (name == "diag_pm") {
        need(2);
        return diag_pm(n / 2);
    }
    if (name == "offdiag_sym") {
        need(2);
        return offdiag_sym(n / 2);
    }
    if (name == "offdiag_antisym") {
        need(2);
        return offdiag_antisym(n / 2);
    }
    if (name == "e1_blocks") {
        need(2);
        return e1_blocks(n);
    }
    if (name == "diag_pm_nested") {
        need(4);
        return block_diag({diag_pm(n / 4), diag_pm(n / 4)});
    }
    if (name == "offdiag_sym_nested") {
        need(4);
        return block_diag({offdiag_sym(n / 4), offdiag_sym(n / 4)});
    }
    if (name == "offdiag_antisym_nested") {
        need(4);
        return block_diag({offdiag_antisym(n / 4), offdiag_antisym(n / 4)});
    }
    if (name == "cross_antisym") {
        need(4);
        const auto j = offdiag_antisym(n / 4);
        return from_blocks(Z(n / 2), j, j, Z(n / 2));
    }
    throw ContractViolation("unknown named form '" + name + "'");
}

inline const std::vector<std::string>& named_form_list()
{
    static const std::vector<std::string> names{
        "identity",       "diag_pm",            "offdiag_sym",           "offdiag_antisym", "e1_blocks",
        "diag_pm_nested", "offdiag_sym_nested", "offdiag_antisym_nested", "cross_antisym"};
    return names;
}

} // namespace nhrmt
