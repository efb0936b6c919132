#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"
#include "nhrmt/cartan.hpp"
#include "nhrmt/catalog.hpp"

using namespace nhrmt;

TEST(Catalog, Entry1HasNoSymmetries)
{
    const auto& e = find_entry("1");
    EXPECT_TRUE(e.ops.empty());
    EXPECT_EQ(e.expected_class, "Gin2");
}

TEST(Catalog, Entry8IsSingleK)
{
    const auto& e = find_entry("8");
    ASSERT_EQ(e.ops.size(), 1u);
    EXPECT_EQ(e.ops[0].kind, 'K');
    EXPECT_EQ(e.build(2).find(SymmetryKind::K)->matrix, e1_blocks(4));
    EXPECT_EQ(e.expected_class, "Gin4");
}

TEST(Catalog, Entry22IsAllIdentityPQC)
{
    for (const char* id : {"22/+", "22/-"}) {
        const auto& e = find_entry(id);
        EXPECT_EQ(e.kinds(), "PQC");
        const EnsembleSpec s = e.build(2);
        EXPECT_EQ(s.find(SymmetryKind::Q)->matrix, ComplexMatrix::identity(4));
        EXPECT_EQ(s.find(SymmetryKind::C)->matrix, ComplexMatrix::identity(4));
        EXPECT_EQ(e.expected_class, "BDI");
    }
}

TEST(Catalog, CoversEveryRowAndVariant)
{
    std::set<std::string> rows, ids;
    for (const auto& e : catalog()) {
        rows.insert(e.row());
        EXPECT_TRUE(ids.insert(e.id).second) << "duplicate id " << e.id;
    }
    for (int r = 1; r <= 30; ++r)
        EXPECT_TRUE(rows.count(std::to_string(r))) << r;
    for (const char* id : {"18a", "18b/+", "18b/-", "20a", "20b", "21a/+", "21b/-", "19'/+", "19+", "19-", "19'+",
                           "19'-", "21a+", "21a-", "21b+", "21b-"})
        EXPECT_TRUE(ids.count(id)) << id;
    EXPECT_EQ(catalog().size(), fixtures::catalog_dims().size());
}

TEST(Catalog, ExpectedClassLabels)
{
    const std::set<std::string> allowed{"A",  "Gin1", "Gin2", "Gin4", "AI", "AII", "AIII",
                                        "BDI", "CI",  "CII",  "C",    "D",  "DIII"};
    for (const auto& e : catalog())
        if (e.expected_class) {
            EXPECT_TRUE(allowed.count(*e.expected_class)) << e.id;
        }
    EXPECT_EQ(find_entry("5").expected_class, "A");
    EXPECT_EQ(find_entry("17/+").expected_class, "AI");
    EXPECT_EQ(find_entry("24/+").expected_class, "CI");
    EXPECT_EQ(find_entry("24/-").expected_class, "DIII");
}

TEST(Catalog, FindEntry)
{
    EXPECT_EQ(find_entry("3").id, "3/+");
    EXPECT_EQ(find_entry("19'-").id, "19'-");
    EXPECT_THROW(find_entry("31"), ContractViolation);
}

TEST(Catalog, EquivalentForms)
{
    EXPECT_TRUE(find_entry("19'/+").equivalent_form());
    EXPECT_TRUE(find_entry("21b-").equivalent_form());
    EXPECT_FALSE(find_entry("19/+").equivalent_form());
    EXPECT_FALSE(find_entry("21a/+").equivalent_form());
}

TEST(Catalog, ForgottenEntriesAreFlagged)
{
    for (const auto& e : catalog()) {
        const bool flagged = std::find(e.flags.begin(), e.flags.end(), "unverified-against-prior-work") != e.flags.end();
        EXPECT_EQ(flagged, e.row() == "29" || e.row() == "30") << e.id;
    }
}

TEST(Catalog, KindsFilterPQC)
{
    std::set<std::string> rows;
    for (const auto& e : catalog())
        if (e.kinds() == "PQC")
            rows.insert(e.row());
    EXPECT_EQ(rows, (std::set<std::string>{"22", "23", "24", "25", "26", "27", "28", "29", "30"}));
}

TEST(Catalog, BuildersValidAtHalfSizesOneToFour)
{
    for (const auto& e : catalog())
        for (std::size_t h = 1; h <= 4; ++h)
            EXPECT_NO_THROW(e.build(h)) << e.id << " h=" << h;
    EXPECT_THROW(find_entry("2").build(0), ContractViolation);
}

TEST(Catalog, DimensionsMatchFixtures)
{
    for (const auto& e : catalog()) {
        const auto it = fixtures::catalog_dims().find(e.id);
        ASSERT_NE(it, fixtures::catalog_dims().end()) << e.id;
        for (std::size_t h = 1; h <= 3; ++h) {
            const EnsembleSpec s = e.build(h);
            EXPECT_EQ(solve_P(s).real_dim(), it->second[h - 1].first) << e.id << " h=" << h;
            EXPECT_EQ(solve_K(s).real_dim(), it->second[h - 1].second) << e.id << " h=" << h;
            EXPECT_EQ(e.p_form.param_count(h), it->second[h - 1].first) << e.id << " h=" << h;
            EXPECT_EQ(e.k_form.param_count(h), it->second[h - 1].second) << e.id << " h=" << h;
        }
    }
}

TEST(Catalog, StructureReportsPass)
{
    for (const auto& e : catalog())
        for (std::size_t h = 1; h <= 3; ++h) {
            const EntryCheck c = check_entry(e, h);
            EXPECT_TRUE(c.p_structure.pass) << e.id << " h=" << h << " " << c.p_structure.failure.value_or("");
            EXPECT_TRUE(c.k_structure.pass) << e.id << " h=" << h << " " << c.k_structure.failure.value_or("");
        }
}

TEST(CheckForm, DetectsViolations)
{
    const StructurePredicate& p9 = find_entry("9/+").p_form;
    ComplexMatrix a{{0.0, 0.0, 1.0, cd(0.0, 2.0)}, {0.0, 0.0, 3.0, 4.0}, {1.0, 3.0, 0.0, 0.0}, {cd(0.0, 2.0), 4.0, 0.0, 0.0}};
    EXPECT_FALSE(check_form(p9, a));
    a(2, 0) = -1.0;
    EXPECT_TRUE(check_form(p9, a));
    a(2, 0) = 1.0;
    a(0, 0) = 0.5;
    EXPECT_TRUE(check_form(p9, a));
}
