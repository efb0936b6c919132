#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cartan.hpp"
#include "catalog.hpp"
#include "eigen.hpp"
#include "symmetry.hpp"

namespace nhrmt {

// Conjugation-invariant data. Equal fingerprints are necessary, not sufficient, for unitary equivalence.
struct Fingerprint {
    std::size_t n = 0;
    std::string kinds;
    std::optional<int> epsilon_c;
    SignTable signs;
    // (#(+1), #(-1)) eigenvalues of p and q
    std::optional<std::pair<int, int>> p_signature, q_signature;
    std::size_t dim_p = 0, dim_k = 0;

    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;

    std::string str() const
    {
        auto sg = [](const std::optional<int>& s) { return s ? std::string(*s > 0 ? "+" : "-") : std::string("."); };
        auto sig = [](const std::optional<std::pair<int, int>>& s) {
            return s ? "(" + std::to_string(s->first) + "," + std::to_string(s->second) + ")" : std::string(".");
        };
        std::ostringstream os;
        os << "n=" << n << " kinds=" << (kinds.empty() ? "-" : kinds) << " eps_c=" << sg(epsilon_c)
           << " c_sym=" << sg(signs.c_sym) << " k_sym=" << sg(signs.k_sym) << " eps_cp=" << sg(signs.eps_cp)
           << " eps_pq=" << sg(signs.eps_pq) << " eps_cq=" << sg(signs.eps_cq) << " k_p=" << sg(signs.k_p_sign)
           << " k_q=" << sg(signs.k_q_sign) << " k_c=" << sg(signs.k_c_sign) << " sig_p=" << sig(p_signature)
           << " sig_q=" << sig(q_signature) << " dimP=" << dim_p << " dimK=" << dim_k;
        return os.str();
    }
};

namespace detail {

inline std::pair<int, int> involution_signature(const ComplexMatrix& m)
{
    int plus = 0, minus = 0;
    for (const cd& z : eigenvalues_general(m))
        (z.real() > 0 ? plus : minus) += 1;
    return {plus, minus};
}

} // namespace detail

inline Fingerprint fingerprint(const EnsembleSpec& spec)
{
    Fingerprint f;
    f.n = spec.n();
    f.kinds = spec.kinds();
    f.signs = spec.signs();
    if (const auto* c = spec.find(SymmetryKind::C))
        f.epsilon_c = c->epsilon;
    if (const auto* p = spec.find(SymmetryKind::P))
        f.p_signature = detail::involution_signature(p->matrix);
    if (const auto* q = spec.find(SymmetryKind::Q))
        f.q_signature = detail::involution_signature(q->matrix);
    f.dim_p = solve_P(spec).real_dim();
    f.dim_k = solve_K(spec).real_dim();
    return f;
}

// The epsilon_c-dual partner shares everything except epsilon_c and dim P.
inline Fingerprint dual_key(Fingerprint f)
{
    f.epsilon_c.reset();
    f.dim_p = 0;
    return f;
}

struct Classification {
    Fingerprint fp;
    std::vector<const CatalogEntry*> matches, dual_links;
};

inline Classification classify(const EnsembleSpec& spec)
{
    Classification out{fingerprint(spec), {}, {}};
    const Fingerprint key = dual_key(out.fp);
    for (const auto& e : catalog()) {
        if (spec.n() % e.unit)
            continue;
        const Fingerprint g = fingerprint(e.build(spec.n() / e.unit));
        if (g == out.fp)
            out.matches.push_back(&e);
        else if (g.epsilon_c && dual_key(g) == key)
            out.dual_links.push_back(&e);
    }
    return out;
}

} // namespace nhrmt
