#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "nhrmt/roots.hpp"

using namespace nhrmt;

namespace {

std::vector<std::vector<int>> coeffs(const RootSystemData& d)
{
    std::vector<std::vector<int>> out;
    for (const auto& a : d.positive_roots)
        out.push_back(a.coeff);
    return out;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::vector<double> random_q(std::mt19937_64& rng, std::size_t n)
{
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> q(n);
    for (auto& x : q)
        x = u(rng);
    return q;
}

} // namespace

TEST(Roots, A2)
{
    const RootSystemData d = restricted_positive_roots(RootFamily::A, 2);
    EXPECT_EQ(d.coords, 3u);
    EXPECT_EQ(coeffs(d), (std::vector<std::vector<int>>{{1, -1, 0}, {1, 0, -1}, {0, 1, -1}}));
}

TEST(Roots, C1)
{
    const RootSystemData d = restricted_positive_roots(RootFamily::C, 1);
    ASSERT_EQ(d.positive_roots.size(), 1u);
    EXPECT_EQ(d.positive_roots[0].coeff, std::vector<int>{2});
    EXPECT_EQ(d.positive_roots[0].cls, RootClass::Long);
}

TEST(Roots, BC2)
{
    const RootSystemData d = restricted_positive_roots(RootFamily::BC, 2);
    EXPECT_EQ(d.count(RootClass::Ordinary), 2u);
    EXPECT_EQ(d.count(RootClass::Short), 2u);
    EXPECT_EQ(d.count(RootClass::Long), 2u);
}

TEST(Roots, CountsFollowClosedForms)
{
    for (std::size_t r = 1; r <= 6; ++r) {
        EXPECT_EQ(restricted_positive_roots(RootFamily::A, r).positive_roots.size(), r * (r + 1) / 2);
        EXPECT_EQ(restricted_positive_roots(RootFamily::D, r).positive_roots.size(), r * (r - 1));
        EXPECT_EQ(restricted_positive_roots(RootFamily::B, r).positive_roots.size(), r * r);
        EXPECT_EQ(restricted_positive_roots(RootFamily::C, r).positive_roots.size(), r * r);
        EXPECT_EQ(restricted_positive_roots(RootFamily::BC, r).positive_roots.size(), r * (r + 1));
    }
    EXPECT_THROW(restricted_positive_roots(RootFamily::A, 0), ContractViolation);
    EXPECT_THROW(family_from_string("E"), ContractViolation);
}

TEST(Jacobian, VandermondeSquared)
{
    const RootSystemData d = restricted_positive_roots(RootFamily::A, 1, {2, 0, 0});
    const JacobianValue j = jacobian(Curvature::Zero, {1.5, -0.5}, d);
    EXPECT_NEAR(j.value, 4.0, 1e-12);
    EXPECT_NEAR(j.log_value, std::log(4.0), 1e-12);
    EXPECT_NEAR(jacobian(Curvature::Zero, {1.0, 0.0}, d).value, 1.0, 1e-15);
}

TEST(Jacobian, EqualCoordinatesVanish)
{
    const RootSystemData d = restricted_positive_roots(RootFamily::D, 3, {1, 0, 0});
    const JacobianValue j = jacobian(Curvature::Zero, {0.3, 0.3, -1.0}, d);
    EXPECT_EQ(j.value, 0.0);
    EXPECT_TRUE(std::isinf(j.log_value) && j.log_value < 0);
}

TEST(Jacobian, NegativeCurvatureC1)
{
    const RootSystemData d = restricted_positive_roots(RootFamily::C, 1, {0, 2, 0});
    for (double t : {0.1, 0.5, 1.3})
        EXPECT_NEAR(jacobian(Curvature::Negative, {t}, d).value, std::pow(std::sinh(2.0 * t), 2), 1e-12);
    EXPECT_NEAR(jacobian(Curvature::Negative, {0.5}, d).value, 1.3810978455418157, 1e-12);
    EXPECT_NEAR(jacobian(Curvature::Positive, {0.5}, d).value, std::pow(std::sin(1.0), 2), 1e-12);
}

TEST(Jacobian, WrongLengthRejected)
{
    EXPECT_THROW(jacobian(Curvature::Zero, {1.0}, restricted_positive_roots(RootFamily::A, 1)), ContractViolation);
}

TEST(Jacobian, Homogeneity)
{
    std::mt19937_64 rng(1);
    const Multiplicities m{2, 3, 1};
    for (auto f : {RootFamily::A, RootFamily::B, RootFamily::C, RootFamily::D, RootFamily::BC}) {
        const RootSystemData d = restricted_positive_roots(f, 3, m);
        int deg = 0;
        for (const auto& a : d.positive_roots)
            deg += d.multiplicity(a);
        const auto q = random_q(rng, d.coords);
        std::vector<double> tq = q;
        const double t = 1.7;
        for (auto& x : tq)
            x *= t;
        EXPECT_NEAR(jacobian(Curvature::Zero, tq, d).log_value,
                    jacobian(Curvature::Zero, q, d).log_value + deg * std::log(t), 1e-10);
    }
}

TEST(Jacobian, CurvedFormsApproachFlatNearOrigin)
{
    std::mt19937_64 rng(2);
    for (auto f : {RootFamily::A, RootFamily::BC, RootFamily::D}) {
        const RootSystemData d = restricted_positive_roots(f, 2, {1, 2, 2});
        const auto q = random_q(rng, d.coords);
        double prev_p = 1e300, prev_m = 1e300;
        for (double eps : {1e-1, 1e-2, 1e-3}) {
            std::vector<double> s = q;
            for (auto& x : s)
                x *= eps;
            const double j0 = jacobian(Curvature::Zero, s, d).value;
            const double dp = std::abs(jacobian(Curvature::Positive, s, d).value / j0 - 1.0);
            const double dm = std::abs(jacobian(Curvature::Negative, s, d).value / j0 - 1.0);
            EXPECT_LT(dp, prev_p);
            EXPECT_LT(dm, prev_m);
            prev_p = dp;
            prev_m = dm;
        }
        EXPECT_LT(prev_p, 1e-4);
        EXPECT_LT(prev_m, 1e-4);
    }
}

TEST(Jacobian, PermutationInvariance)
{
    std::mt19937_64 rng(3);
    for (auto f : {RootFamily::A, RootFamily::B, RootFamily::C, RootFamily::D, RootFamily::BC}) {
        const RootSystemData d = restricted_positive_roots(f, 3, {2, 1, 3});
        auto q = random_q(rng, d.coords);
        const double ref = jacobian(Curvature::Positive, q, d).value;
        for (int t = 0; t < 5; ++t) {
            std::shuffle(q.begin(), q.end(), rng);
            EXPECT_NEAR(jacobian(Curvature::Positive, q, d).value, ref, 1e-12 * std::max(1.0, ref));
        }
    }
}

TEST(Jacobian, LogDomainAtLargeRank)
{
    const RootSystemData d = restricted_positive_roots(RootFamily::A, 40, {4, 0, 0});
    std::vector<double> q(d.coords);
    for (std::size_t i = 0; i < q.size(); ++i)
        q[i] = 10.0 * double(i);
    const JacobianValue j = jacobian(Curvature::Zero, q, d);
    EXPECT_TRUE(std::isfinite(j.log_value));
    EXPECT_GT(j.log_value, 700.0);
}

TEST(Multiplicities, FromBeta)
{
    EXPECT_EQ(multiplicities_from_beta(2, 0), (Multiplicities{2, 1, 0}));
    EXPECT_EQ(multiplicities_from_beta(1, 0), (Multiplicities{1, 0, 0}));
    EXPECT_EQ(multiplicities_from_beta(4, 1), (Multiplicities{4, 3, 4}));
    EXPECT_THROW(multiplicities_from_beta(3, 0), ContractViolation);
}

TEST(Multiplicities, AgreeWithChiralRows)
{
    const std::vector<std::pair<std::string, int>> rows{{"BDI", 1}, {"AIII", 2}, {"CII", 4}};
    for (const auto& [label, beta] : rows)
        for (int nu = 0; nu <= 3; ++nu)
            EXPECT_EQ(multiplicities_from_beta(beta, nu), table0_lookup(label).multiplicities(nu)) << label;
    EXPECT_EQ(multiplicities_from_beta(1, 0), table0_lookup("AI").multiplicities());
}

TEST(Table0, Lookup)
{
    EXPECT_EQ(table0_lookup("AII").multiplicities(), (Multiplicities{4, 0, 0}));
    EXPECT_EQ(table0_lookup("DIII-e").multiplicities(), (Multiplicities{4, 1, 0}));
    const auto& bdi = table0_lookup("BDI");
    EXPECT_EQ(bdi.multiplicities(5), (Multiplicities{1, 0, 5}));
    EXPECT_EQ(bdi.ms_text(), "nu");
    EXPECT_EQ(bdi.noncompact, "SO(p,q)/SO(p)xSO(q)");
    EXPECT_EQ(table0_lookup("AIII").family(0), RootFamily::C);
    EXPECT_EQ(table0_lookup("AIII").family(2), RootFamily::BC);
    EXPECT_THROW(table0_lookup("E7"), ContractViolation);
    EXPECT_EQ(table0().size(), 12u);
}

TEST(Table0, DataFileRoundTrip)
{
    const std::string text = read_file(NHRMT_CLASS_TABLE);
    EXPECT_EQ(text, serialize_table0(table0()));
    const auto rows = load_table0(NHRMT_CLASS_TABLE);
    ASSERT_EQ(rows.size(), table0().size());
    EXPECT_EQ(serialize_table0(rows), text);
    for (const auto& r : rows) {
        const auto& ref = table0_lookup(r.label);
        EXPECT_EQ(r.multiplicities(3), ref.multiplicities(3)) << r.label;
        EXPECT_EQ(r.x_minus, ref.x_minus) << r.label;
    }
    EXPECT_THROW(parse_table0("bad header\n"), ContractViolation);
    EXPECT_THROW(load_table0("/nonexistent/table.tsv"), ContractViolation);
}

TEST(Nanotube, Examples)
{
    EXPECT_NEAR(nanotube_observables(1.0, 1.0, 1.0, 1.0, 4.0).var_ratio, 2.0 / 3.0, 1e-15);
    EXPECT_EQ(nanotube_observables(0.0, 2.0, 1.5, 1.0, 4.0).mean_log_dg, 0.0);
    const NanotubeObservables o = nanotube_observables(1.0, 1.0, 3.0, 1.0, 4.0);
    EXPECT_NEAR(o.mean_log_dg, -2.0, 1e-15);
    EXPECT_NEAR(o.xi, 1.0, 1e-15);
    EXPECT_THROW(nanotube_observables(1.0, 1.0, 1.0, 0.0, 0.0), ContractViolation);
    EXPECT_THROW(nanotube_observables(1.0, 1.0, 0.0, 1.0, 0.0), ContractViolation);
}

TEST(McJacobian, RepulsionExponents)
{
    const McJacobianReport a = mc_jacobian_check(find_entry("5"), 40000, 3);
    EXPECT_EQ(a.beta, 2);
    EXPECT_NEAR(a.slope, 2.0, 0.2);
    EXPECT_LT(a.max_ratio_deviation, 0.1);
    const McJacobianReport b = mc_jacobian_check(find_entry("17/+"), 40000, 3);
    EXPECT_EQ(b.beta, 1);
    EXPECT_NEAR(b.slope, 1.0, 0.2);
    EXPECT_LT(b.max_ratio_deviation, 0.1);
    // near-zero gaps are rare in proportion to the class law
    EXPECT_LT(double(a.near_diagonal), 10.0 + 3.0 * a.near_diagonal_expected);
    EXPECT_LT(a.near_diagonal, b.near_diagonal);
}

TEST(McJacobian, RejectsNonRealSpectra)
{
    EXPECT_THROW(mc_jacobian_check(find_entry("2"), 10), ContractViolation);
    EXPECT_THROW(mc_jacobian_check(find_entry("1"), 10), ContractViolation);
    EXPECT_THROW(mc_jacobian_check(find_entry("23/+"), 10), ContractViolation);
}
