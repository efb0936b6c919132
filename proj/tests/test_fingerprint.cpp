#include <gtest/gtest.h>

#include <algorithm>

#include "nhrmt/fingerprint.hpp"
#include "test_util.hpp"

using namespace nhrmt;

namespace {

Fingerprint fp(const std::string& id, std::size_t h = 2) { return fingerprint(find_entry(id).build(h)); }

std::vector<std::string> ids(const std::vector<const CatalogEntry*>& es)
{
    std::vector<std::string> out;
    for (const auto* e : es)
        out.push_back(e->id);
    return out;
}

bool contains(const std::vector<std::string>& v, const std::string& s) { return std::find(v.begin(), v.end(), s) != v.end(); }

} // namespace

TEST(Fingerprint, Entry19EquivalentForms)
{
    for (const char* s : {"+", "-"}) {
        const std::string sign(s);
        const Fingerprint base = fp("19/" + sign);
        EXPECT_EQ(fp("19'/" + sign), base) << sign;
        EXPECT_EQ(fp("19" + sign), base) << sign;
        EXPECT_EQ(fp("19'" + sign), base) << sign;
    }
}

TEST(Fingerprint, Entry21EquivalentForms)
{
    for (const char* v : {"21a", "21b"})
        for (const char* s : {"+", "-"}) {
            const std::string row(v), sign(s);
            EXPECT_EQ(fp(row + "/" + sign), fp(row + sign)) << row << sign;
        }
}

TEST(Fingerprint, DistinctPairs)
{
    EXPECT_NE(fp("24/+"), fp("25/+"));
    EXPECT_NE(fp("24/-"), fp("25/-"));
    const Fingerprint a = fp("29/+"), b = fp("30/+");
    EXPECT_NE(a, b);
    EXPECT_NE(a.signs.c_sym, b.signs.c_sym);
    EXPECT_EQ(fp("27/+").signs.c_sym, 1);
    EXPECT_EQ(fp("28/+").signs.c_sym, -1);
}

TEST(Fingerprint, EpsilonDualsShareDualKey)
{
    const Fingerprint a = fp("24/+"), b = fp("24/-");
    EXPECT_NE(a, b);
    EXPECT_EQ(dual_key(a), dual_key(b));
    EXPECT_EQ(a.dim_k, b.dim_k);
}

TEST(Fingerprint, InvariantUnderTransport)
{
    std::mt19937_64 rng(1);
    for (const auto& e : catalog()) {
        const EnsembleSpec s = e.build(1);
        const EnsembleSpec t = unitary_transport(s, testutil::random_unitary(s.n(), rng));
        EXPECT_EQ(fingerprint(t), fingerprint(s)) << e.id;
    }
}

TEST(Fingerprint, Signatures)
{
    const Fingerprint f = fp("12/-", 3);
    ASSERT_TRUE(f.p_signature && f.q_signature);
    EXPECT_EQ(*f.p_signature, std::make_pair(3, 3));
    EXPECT_EQ(*f.q_signature, std::make_pair(3, 3));
    EXPECT_EQ(*fp("12/+", 3).q_signature, std::make_pair(6, 0));
    EXPECT_NE(fp("1").str(), fp("2").str());
}

TEST(Classify, PrimedEntry19MatchesEntry19)
{
    const Classification c = classify(find_entry("19'/+").build(2));
    const auto m = ids(c.matches);
    EXPECT_TRUE(contains(m, "19/+"));
    EXPECT_TRUE(contains(m, "19'/+"));
    EXPECT_FALSE(contains(m, "19/-"));
}

TEST(Classify, Entry24DualLink)
{
    const Classification c = classify(find_entry("24/+").build(2));
    EXPECT_EQ(ids(c.matches), std::vector<std::string>{"24/+"});
    ASSERT_EQ(c.dual_links.size(), 1u);
    EXPECT_EQ(c.dual_links[0]->id, "24/-");
    EXPECT_EQ(*c.matches[0]->expected_class + " / " + *c.dual_links[0]->expected_class, "CI / DIII");
}

TEST(Classify, TransportedEntry13)
{
    std::mt19937_64 rng(2);
    const EnsembleSpec s = find_entry("13").build(2);
    const Classification c = classify(unitary_transport(s, testutil::random_unitary(4, rng)));
    EXPECT_TRUE(contains(ids(c.matches), "13"));
}
