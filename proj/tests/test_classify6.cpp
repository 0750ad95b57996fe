#include <map>
#include <set>

#include <gtest/gtest.h>

#include "lattice6/classify6.hpp"
#include "lattice6/equivalence.hpp"
#include "lattice6/errors.hpp"

using namespace lattice6;

namespace {

const Classification& full() {
    static const Classification c = classify_all(4);
    return c;
}

const CaseReport& report(char name) {
    for (const auto& r : full().reports)
        if (r.name == name) return r;
    throw std::runtime_error("no report");
}

std::set<std::vector<Int>> accepted(const CaseReport& r, const std::string& sub) {
    auto it = r.accepted.find(sub);
    if (it == r.accepted.end()) return {};
    return {it->second.begin(), it->second.end()};
}

bool has_reason(const CaseReport& r, const std::string& text) {
    for (const auto& [reason, n] : r.rejection_counts)
        if (reason.find(text) != std::string::npos && n > 0) return true;
    return false;
}

}  // namespace

TEST(CaseA, TwoClasses) {
    auto r = run_case_a();
    EXPECT_EQ(r.classes_found.size(), 2u);
    EXPECT_TRUE(has_reason(r, "midpoint of p2p6 is integer"));
    EXPECT_EQ(r.counters.count("A case 5 classes"), 0u);
    EXPECT_EQ(r.counters["(q,a) surviving the (2,1) lemma"], 1u);
}

TEST(CaseB, Subcases) {
    auto r = run_case_b();
    EXPECT_EQ(r.classes_found.size(), 15u);
    EXPECT_EQ(r.counters["B(1,1) classes"], 10u);
    EXPECT_EQ(r.counters["B(1,3) region options"], 44u);
    EXPECT_EQ(accepted(r, "B(1,3)"), (std::set<std::vector<Int>>{{1, 2}, {1, 5}, {1, 8}}));
    EXPECT_EQ(accepted(r, "B(3,3)"), (std::set<std::vector<Int>>{{0, 0}, {0, 3}}));
    EXPECT_TRUE(has_reason(r, "fails the (3,1) congruence"));
}

TEST(CaseC, Subcases) {
    auto r = run_case_c();
    EXPECT_EQ(r.classes_found.size(), 6u);
    EXPECT_TRUE(has_reason(r, "T3456 is not empty"));
    EXPECT_EQ(accepted(r, "C vertices"), (std::set<std::vector<Int>>{{1, 1}}));
    EXPECT_EQ(r.counters["C interior embeddings"], 192u);
}

TEST(CaseD, RejectsTheThreeOneCircuit) {
    auto r = run_case_d();
    EXPECT_EQ(r.classes_found.size(), 2u);
    EXPECT_TRUE(has_reason(r, "contains a (3,1) circuit"));
}

TEST(CaseE, TwoClasses) {
    auto r = run_case_e();
    EXPECT_EQ(r.classes_found.size(), 2u);
    EXPECT_LE(r.counters["E embeddings"], 192u);
}

TEST(CaseF, OneCollinearityEach) {
    auto r = run_case_f();
    ASSERT_EQ(r.classes_found.size(), 17u);
    for (const auto& c : r.classes_found) {
        int triples = 0;
        for (const auto& sc : circuits(c.representative)) triples += sc.support_size() == 3;
        EXPECT_EQ(triples, 1) << c.id;
        EXPECT_EQ(coplanarity_class(c.representative), CoplanarityClass::C21);
    }
}

TEST(CaseGH, Counts) {
    EXPECT_EQ(report('G').classes_found.size(), 20u);
    EXPECT_EQ(report('H').classes_found.size(), 12u);
    for (const auto& c : report('G').classes_found) EXPECT_EQ(interior_points(c.representative).size(), 1u);
    for (const auto& c : report('H').classes_found) EXPECT_EQ(interior_points(c.representative).size(), 2u);
}

TEST(ClassifyAll, ReproducesTheTables) {
    const auto& r = full();
    for (const auto& p : r.problems) ADD_FAILURE() << p;
    ASSERT_EQ(r.classes.size(), 76u);
    std::map<Int, int> widths;
    int dps = 0;
    std::map<char, int> per_case;
    for (const auto& c : r.classes) {
        ++widths[c.width];
        dps += c.dps;
        ++per_case[c.id[0]];
        const auto& row = load_tables().by_id(c.id);
        EXPECT_TRUE(are_equivalent(c.representative, row.representative).has_value()) << c.id;
        EXPECT_EQ(c.om_label, row.om_label) << c.id;
        EXPECT_EQ(case_of(c.representative), c.id[0]) << c.id;
    }
    EXPECT_EQ(widths, (std::map<Int, int>{{2, 74}, {3, 2}}));
    EXPECT_EQ(dps, 45);
    EXPECT_EQ(per_case, (std::map<char, int>{{'A', 2}, {'B', 15}, {'C', 6}, {'D', 2}, {'E', 2}, {'F', 17}, {'G', 20}, {'H', 12}}));
    for (std::size_t i = 0; i < r.classes.size(); ++i)
        for (std::size_t j = i + 1; j < r.classes.size(); ++j)
            ASSERT_FALSE(are_equivalent(r.classes[i].representative, r.classes[j].representative).has_value())
                << r.classes[i].id << " " << r.classes[j].id;
}

TEST(ClassifyAll, DeterministicAcrossJobCounts) {
    auto one = classify_all(1);
    EXPECT_EQ(classes_to_json(one.classes), classes_to_json(full().classes));
}

TEST(Classify, SubsetsAndBadLetters) {
    auto r = classify("FA");
    EXPECT_EQ(r.classes.size(), 19u);
    EXPECT_TRUE(r.problems.empty());
    EXPECT_EQ(r.classes.front().id, "A.1");
    EXPECT_THROW(classify("Z"), Error);
}

TEST(Serialization, JsonRoundTrip) {
    const auto& classes = full().classes;
    auto back = classes_from_json(classes_to_json(classes));
    ASSERT_EQ(back.size(), classes.size());
    for (std::size_t i = 0; i < back.size(); ++i) {
        const auto& a = back[i];
        const auto& row = load_tables().by_id(a.id);
        EXPECT_EQ(a.representative, classes[i].representative);
        EXPECT_EQ(a.om_label, row.om_label);
        EXPECT_EQ(a.width, row.width);
        EXPECT_EQ(a.dps, row.dps);
        EXPECT_EQ(width_along(a.representative, a.functional), a.width);
        EXPECT_EQ(canonical_key(a.representative), canonical_key(row.representative));
        EXPECT_EQ(gcd_all(a.volume_vector), gcd_all(row.volume_vector));
    }
    EXPECT_THROW(classes_from_json("[{\"id\": 1}]"), ParseError);
}

TEST(Serialization, Csv) {
    auto csv = classes_to_csv(full().classes);
    EXPECT_EQ(csv.rfind("om_label,id,volume_vector,width,functional,dps,representative\n", 0), 0u);
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 77);
    EXPECT_NE(csv.find("\n6.1,H.12,"), std::string::npos);
}

TEST(CaseOf, TableRows) {
    for (const auto& row : load_tables().classes) EXPECT_EQ(case_of(row.representative), row.id[0]) << row.id;
    EXPECT_EQ(case_of(PointConfig{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), '-');
}

TEST(TableClassOf, FindsMappedRows) {
    const auto& row = load_tables().by_id("E.2");
    auto m = AffineMap::make({{{1, 2, 0}, {0, 1, 0}, {0, 0, 1}}}, {3, -1, 2});
    const auto* got = table_class_of(row.representative.mapped(m));
    ASSERT_NE(got, nullptr);
    EXPECT_EQ(got->id, "E.2");
    EXPECT_EQ(table_class_of(PointConfig{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}}), nullptr);
}
