#pragma once

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cartan.hpp"
#include "catalog.hpp"
#include "spectra.hpp"

namespace nhrmt {

enum class RootFamily { A, B, C, D, BC };
enum class RootClass { Ordinary, Short, Long };

inline RootFamily family_from_string(const std::string& s)
{
    if (s == "A") return RootFamily::A;
    if (s == "B") return RootFamily::B;
    if (s == "C") return RootFamily::C;
    if (s == "D") return RootFamily::D;
    if (s == "BC") return RootFamily::BC;
    throw ContractViolation("unknown root family '" + s + "'");
}

// Linear functional q -> sum_i coeff[i] q_i.
struct Root {
    std::vector<int> coeff;
    RootClass cls;

    double eval(const std::vector<double>& q) const
    {
        double s = 0.0;
        for (std::size_t i = 0; i < coeff.size(); ++i)
            s += coeff[i] * q[i];
        return s;
    }
};

struct Multiplicities {
    int m_o = 0, m_l = 0, m_s = 0;
    friend bool operator==(const Multiplicities&, const Multiplicities&) = default;
};

struct RootSystemData {
    RootFamily family;
    // Lie rank; A_r acts on r + 1 coordinates, the others on r
    std::size_t rank = 0;
    std::size_t coords = 0;
    std::vector<Root> positive_roots;
    Multiplicities mult;

    int multiplicity(const Root& a) const
    {
        switch (a.cls) {
        case RootClass::Ordinary: return mult.m_o;
        case RootClass::Short: return mult.m_s;
        case RootClass::Long: return mult.m_l;
        }
        return 0;
    }
    std::size_t count(RootClass c) const
    {
        std::size_t k = 0;
        for (const auto& a : positive_roots)
            k += a.cls == c;
        return k;
    }
};

inline RootSystemData restricted_positive_roots(RootFamily family, std::size_t rank, Multiplicities m = {})
{
    if (rank == 0)
        throw ContractViolation("rank must be at least 1");
    RootSystemData d{family, rank, family == RootFamily::A ? rank + 1 : rank, {}, m};
    const std::size_t n = d.coords;
    auto unit = [n](std::size_t i, int a, std::size_t j, int b) {
        std::vector<int> c(n, 0);
        c[i] += a;
        if (b)
            c[j] += b;
        return c;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            d.positive_roots.push_back({unit(i, 1, j, -1), RootClass::Ordinary});
            if (family != RootFamily::A)
                d.positive_roots.push_back({unit(i, 1, j, 1), RootClass::Ordinary});
        }
    if (family == RootFamily::B || family == RootFamily::BC)
        for (std::size_t i = 0; i < n; ++i)
            d.positive_roots.push_back({unit(i, 1, i, 0), RootClass::Short});
    if (family == RootFamily::C || family == RootFamily::BC)
        for (std::size_t i = 0; i < n; ++i)
            d.positive_roots.push_back({unit(i, 2, i, 0), RootClass::Long});
    return d;
}

enum class Curvature { Zero, Positive, Negative };

struct JacobianValue {
    double value = 0.0;
    double log_value = 0.0; // -inf when value is zero
};

// J0 = prod |q.a|^m, J+ = prod |sin(q.a)|^m, J- = prod |sinh(q.a)|^m.
inline JacobianValue jacobian(Curvature curv, const std::vector<double>& q, const RootSystemData& d)
{
    if (q.size() != d.coords)
        throw ContractViolation("jacobian: q has " + std::to_string(q.size()) + " coordinates, expected " +
                                std::to_string(d.coords));
    double lg = 0.0;
    for (const auto& a : d.positive_roots) {
        const int m = d.multiplicity(a);
        if (m == 0)
            continue;
        const double x = a.eval(q);
        double f = 0.0;
        switch (curv) {
        case Curvature::Zero: f = x; break;
        case Curvature::Positive: f = std::sin(x); break;
        case Curvature::Negative: f = std::sinh(x); break;
        }
        lg += m * std::log(std::abs(f));
    }
    return {std::exp(lg), lg};
}

inline Multiplicities multiplicities_from_beta(int beta, int nu)
{
    if (beta != 1 && beta != 2 && beta != 4)
        throw ContractViolation("beta must be 1, 2 or 4");
    if (nu < 0)
        throw ContractViolation("nu must be non-negative");
    return {beta, beta - 1, beta * nu};
}

struct CartanClassRecord {
    std::string root_space;
    std::string label;
    std::string compact, noncompact;
    int m_o = 0, m_l = 0;
    // m_s = ms_nu * nu + ms_const
    int ms_nu = 0, ms_const = 0;
    std::string x_plus, x_zero, x_minus;

    Multiplicities multiplicities(int nu = 0) const { return {m_o, m_l, ms_nu * nu + ms_const}; }
    std::string ms_text() const
    {
        if (ms_nu == 0)
            return std::to_string(ms_const);
        return (ms_nu == 1 ? std::string() : std::to_string(ms_nu)) + "nu";
    }
    // Family of the restricted roots; nu > 0 selects the first alternative of a two-way entry.
    RootFamily family(int nu = 0) const
    {
        const auto slash = root_space.find(" / ");
        std::string s = slash == std::string::npos ? root_space : root_space.substr(nu > 0 ? 0 : slash + 3);
        return family_from_string(s.substr(0, s.find('_')));
    }
};

inline const std::vector<CartanClassRecord>& table0()
{
    static const std::vector<CartanClassRecord> rows{
        {"A_{N-1}", "A", "SU(N)", "SL(N,C)/SU(N)", 2, 0, 0, 0, "C+_{2,0,0}", "G0_{2,0,0}", "T-_{2,0,0}"},
        {"A_{N-1}", "AI", "SU(N)/SO(N)", "SL(N,R)/SO(N)", 1, 0, 0, 0, "C+_{1,0,0}", "G0_{1,0,0}", "T-_{1,0,0}"},
        {"A_{N-1}", "AII", "SU(2N)/USp(2N)", "SU*(2N)/USp(2N)", 4, 0, 0, 0, "C+_{4,0,0}", "G0_{4,0,0}",
         "T-_{4,0,0}"},
        {"BC_q (p>q) / C_q (p=q)", "AIII", "SU(p+q)/SU(p)xSU(q)xU(1)", "SU(p,q)/SU(p)xSU(q)xU(1)", 2, 1, 2, 0,
         "S+_{2,1,0}", "chi0_{2,1,2nu}", "T-_{2,1,0}"},
        {"B_N", "B", "SO(2N+1)", "SO(2N+1,C)/SO(2N+1)", 2, 0, 0, 2, "", "P0_{2,0,2}", ""},
        {"C_N", "C", "USp(2N)", "Sp(2N,C)/USp(2N)", 2, 2, 0, 0, "B+_{2,2,0}", "B0_{2,2,0}", "T-_{2,2,0}"},
        {"C_N", "CI", "USp(2N)/SU(N)xU(1)", "Sp(2N,R)/SU(N)xU(1)", 1, 1, 0, 0, "B+_{1,1,0}", "B0_{1,1,0}",
         "T-_{1,1,0}"},
        {"BC_q (p>q) / C_q (p=q)", "CII", "USp(2p+2q)/USp(2p)xUSp(2q)", "USp(2p,2q)/USp(2p)xUSp(2q)", 4, 3, 4, 0,
         "", "chi0_{4,3,4nu}", "T-_{4,3,0}"},
        {"D_N", "D", "SO(2N)", "SO(2N,C)/SO(2N)", 2, 0, 0, 0, "B+_{2,0,0}", "B0_{2,0,0}", "T-_{2,0,0}"},
        {"C_N", "DIII-e", "SO(4N)/SU(2N)xU(1)", "SO*(4N)/SU(2N)xU(1)", 4, 1, 0, 0, "B+_{4,1,0}", "B0_{4,1,0}",
         "T-_{4,1,0}"},
        {"BC_N", "DIII-o", "SO(4N+2)/SU(2N+1)xU(1)", "SO*(4N+2)/SU(2N+1)xU(1)", 4, 1, 0, 4, "", "P0_{4,1,4}",
         "T-_{4,1,4}"},
        {"B_q (p>q) / D_q (p=q)", "BDI", "SO(p+q)/SO(p)xSO(q)", "SO(p,q)/SO(p)xSO(q)", 1, 0, 1, 0, "",
         "chi0_{1,0,nu}", "T-_{1,0,0}"},
    };
    return rows;
}

inline const CartanClassRecord& table0_lookup(const std::string& label)
{
    for (const auto& r : table0())
        if (r.label == label)
            return r;
    throw ContractViolation("unknown Cartan class '" + label + "'");
}

inline const char* table0_header()
{
    return "root_space\tclass\tcompact\tnoncompact\tm_o\tm_l\tm_s\tx_plus\tx_zero\tx_minus";
}

inline std::string serialize_table0(const std::vector<CartanClassRecord>& rows)
{
    auto cell = [](const std::string& s) { return s.empty() ? std::string("-") : s; };
    std::ostringstream os;
    os << "# nhrmt cartan classes v1\n" << table0_header() << '\n';
    for (const auto& r : rows)
        os << r.root_space << '\t' << r.label << '\t' << r.compact << '\t' << r.noncompact << '\t' << r.m_o << '\t'
           << r.m_l << '\t' << r.ms_text() << '\t' << cell(r.x_plus) << '\t' << cell(r.x_zero) << '\t'
           << cell(r.x_minus) << '\n';
    return os.str();
}

inline std::vector<CartanClassRecord> parse_table0(const std::string& text)
{
    std::vector<CartanClassRecord> rows;
    std::istringstream is(text);
    std::string line;
    bool header = false;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        if (!header) {
            if (line != table0_header())
                throw ContractViolation("class table: unexpected header");
            header = true;
            continue;
        }
        std::vector<std::string> f;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, '\t'))
            f.push_back(cell == "-" ? std::string() : cell);
        if (f.size() != 10)
            throw ContractViolation("class table: expected 10 fields in '" + line + "'");
        CartanClassRecord r{f[0], f[1], f[2], f[3], std::stoi(f[4]), std::stoi(f[5]), 0, 0, f[7], f[8], f[9]};
        const auto nu = f[6].find("nu");
        if (nu == std::string::npos) {
            r.ms_const = std::stoi(f[6]);
        } else {
            r.ms_nu = nu == 0 ? 1 : std::stoi(f[6].substr(0, nu));
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

inline std::vector<CartanClassRecord> load_table0(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ContractViolation("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_table0(ss.str());
}

struct NanotubeObservables {
    double mean_log_dg = 0.0, xi = 0.0, var_ratio = 0.0;
};

// s: length in units of the mean free path l; the result xi carries the units of l.
inline NanotubeObservables nanotube_observables(double s, double l, double gamma, double m_l, double m_s)
{
    const double m = m_l + m_s / 2.0;
    if (!(gamma > 0.0))
        throw ContractViolation("gamma must be positive");
    if (m == 0.0)
        throw ContractViolation("m_l + m_s/2 vanishes: xi and the variance ratio are undefined");
    return {-(2.0 * s / gamma) * m, l * gamma / m, 2.0 / m};
}

struct GapBin {
    double lo = 0.0, hi = 0.0;
    std::size_t count = 0;
    double expected = 0.0;
    double ratio = 0.0; // count / expected
};

struct McJacobianReport {
    int beta = 0;
    std::size_t samples = 0;
    double slope = 0.0;
    double chi2 = 0.0;
    std::size_t dof = 0;
    // worst |ratio - 1| over bins with at least 500 counts
    double max_ratio_deviation = 0.0;
    // gaps below 0.05 sigma, observed and predicted by the class law
    std::size_t near_diagonal = 0;
    double near_diagonal_expected = 0.0;
    std::vector<GapBin> bins;
};

// N = 2 eigenvalue gaps of a hermitean-type entry: the gap law is s^beta exp(-s^2 / (4 sigma^2)).
inline McJacobianReport mc_jacobian_check(const CatalogEntry& entry, std::size_t n_samples, std::uint64_t seed = 1,
                                          double sigma = 1.0)
{
    if (entry.unit != 2)
        throw ContractViolation("mc_jacobian_check: entry cannot be built at N = 2");
    if (!entry.expected_class)
        throw ContractViolation("mc_jacobian_check: entry has no Cartan class");
    const EnsembleSpec spec = entry.build(1);
    const SubspaceBasis p = solve_P(spec);
    for (const auto& b : p)
        if (max_abs_diff(b, adjoint(b)) > 1e-10)
            throw ContractViolation("mc_jacobian_check: entry " + entry.id + " does not have a real spectrum");
    McJacobianReport rep;
    rep.beta = table0_lookup(*entry.expected_class).m_o;
    rep.samples = n_samples;
    const GaussianSampler sampler(p, sigma, seed);

    std::vector<double> gaps(n_samples);
    for (std::size_t i = 0; i < n_samples; ++i) {
        const auto ev = eigenvalues_general(sampler.sample(i));
        gaps[i] = std::abs(ev[0].real() - ev[1].real());
    }

    const double s_lo = 0.2 * sigma, s_hi = 2.5 * sigma;
    const std::size_t nb = 12;
    const double r = std::pow(s_hi / s_lo, 1.0 / nb);
    for (std::size_t k = 0; k < nb; ++k)
        rep.bins.push_back({s_lo * std::pow(r, double(k)), s_lo * std::pow(r, double(k + 1))});
    for (double s : gaps) {
        if (s < 0.05 * sigma)
            ++rep.near_diagonal;
        if (s < s_lo || s >= s_hi)
            continue;
        const auto k = static_cast<std::size_t>(std::log(s / s_lo) / std::log(r));
        rep.bins[std::min(k, nb - 1)].count += 1;
    }

    // log-log slope of density / gaussian factor, weighted by counts
    double sw = 0, sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& b : rep.bins) {
        if (b.count < 50)
            continue;
        const double c = std::sqrt(b.lo * b.hi);
        const double dens = double(b.count) / (b.hi - b.lo);
        const double x = std::log(c), y = std::log(dens) + c * c / (4.0 * sigma * sigma);
        const double w = double(b.count);
        sw += w;
        sx += w * x;
        sy += w * y;
        sxx += w * x * x;
        sxy += w * x * y;
    }
    rep.slope = (sw * sxy - sx * sy) / (sw * sxx - sx * sx);

    // model counts for the class exponent, normalized on the binned range
    auto law = [&](double s) { return std::pow(s, rep.beta) * std::exp(-s * s / (4.0 * sigma * sigma)); };
    auto integral = [&](double a, double b) {
        const int m = 64;
        double acc = 0.0;
        for (int i = 0; i < m; ++i)
            acc += law(a + (b - a) * (i + 0.5) / m);
        return acc * (b - a) / m;
    };
    double total = 0.0, mass = 0.0;
    for (auto& b : rep.bins) {
        b.expected = integral(b.lo, b.hi);
        mass += b.expected;
        total += double(b.count);
    }
    for (auto& b : rep.bins) {
        b.expected *= total / mass;
        b.ratio = b.expected > 0 ? double(b.count) / b.expected : 0.0;
        if (b.expected > 0) {
            rep.chi2 += (double(b.count) - b.expected) * (double(b.count) - b.expected) / b.expected;
            ++rep.dof;
        }
        if (b.count >= 500)
            rep.max_ratio_deviation = std::max(rep.max_ratio_deviation, std::abs(b.ratio - 1.0));
    }
    if (rep.dof)
        --rep.dof;
    rep.near_diagonal_expected = integral(0.0, 0.05 * sigma) * total / mass;
    return rep;
}

} // namespace nhrmt
