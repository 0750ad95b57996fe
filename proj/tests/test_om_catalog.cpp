#include <map>
#include <random>
#include <set>
#include <tuple>

#include <gtest/gtest.h>

#include "lattice6/errors.hpp"
#include "lattice6/om_catalog.hpp"
#include "lattice6/tables.hpp"
#include "support.hpp"

using namespace lattice6;

namespace {

using CellKey = std::tuple<CoplanarityClass, int, int>;

OMStatistics direct_stats(const PointConfig& c) {
    return {static_cast<int>(vertices(c).size()), static_cast<int>(interior_points(c).size()), coplanarity_class(c), is_dps(c)};
}

}  // namespace

TEST(OMCatalog, CountsAndUniform) {
    const auto& oms = enumerate_oms();
    ASSERT_EQ(oms.size(), 55u);
    int uniform = 0, five = 0;
    std::set<std::string> keys, ids;
    for (const auto& r : oms) {
        uniform += r.uniform;
        five += r.stats.coplanarity == CoplanarityClass::FiveCoplanar;
        keys.insert(r.key);
        ids.insert(r.id);
        EXPECT_EQ(r.n_circuits, static_cast<int>(r.circuits.size())) << r.id;
        EXPECT_EQ(circuit_key(r.circuits), r.key) << r.id;
        EXPECT_EQ(om_statistics(r), r.stats) << r.id;
    }
    EXPECT_EQ(uniform, 4);
    EXPECT_EQ(five, 11);
    EXPECT_EQ(keys.size(), 55u);
    EXPECT_EQ(ids.size(), 55u);
}

TEST(OMCatalog, DualsGiveTheRecordCircuits) {
    for (const auto& r : enumerate_oms()) EXPECT_EQ(circuit_key(dual_circuits(r.dual)), r.key) << r.id;
}

TEST(OMCatalog, CellCountsMatchTheTable) {
    std::map<CellKey, int> want, want_dps, got, got_dps;
    for (const auto& cell : load_tables().om_cells) {
        CellKey k{cell.coplanarity, cell.vertices, cell.interior};
        want[k] += static_cast<int>(cell.labels.size());
        want_dps[k] += static_cast<int>(cell.dps_labels.size());
    }
    for (const auto& r : enumerate_oms()) {
        CellKey k{r.stats.coplanarity, r.stats.vertex_count, r.stats.interior_count};
        ++got[k];
        got_dps[k] += r.stats.dps;
    }
    EXPECT_EQ(got, want);
    EXPECT_EQ(got_dps, want_dps);
}

TEST(OMCatalog, TableRepresentativesRealize22Records) {
    std::set<const OMRecord*> seen;
    for (const auto& row : load_tables().classes) {
        auto m = match_om(row.representative);
        ASSERT_NE(m.record, nullptr);
        seen.insert(m.record);
        EXPECT_EQ(m.record->stats, direct_stats(row.representative)) << row.id;
        EXPECT_EQ(table_label(*m.record), row.om_label) << row.id;
        EXPECT_TRUE(m.record->realized_by_width_gt1);
    }
    EXPECT_EQ(seen.size(), 22u);
    int flagged = 0;
    for (const auto& r : enumerate_oms()) flagged += r.realized_by_width_gt1;
    EXPECT_EQ(flagged, 22);
}

TEST(OMCatalog, StatisticsExamples) {
    const auto& b = load_tables();
    auto stats = [&](const char* id) { return match_om(b.by_id(id).representative).record->stats; };
    EXPECT_EQ(stats("G.7"), (OMStatistics{5, 1, CoplanarityClass::None, true}));
    for (int i = 1; i <= 12; ++i)
        EXPECT_EQ(stats(("H." + std::to_string(i)).c_str()), (OMStatistics{4, 2, CoplanarityClass::None, true}));
    EXPECT_EQ(stats("A.1"), (OMStatistics{4, 0, CoplanarityClass::FiveCoplanar, false}));
    auto f1 = stats("F.1");
    EXPECT_EQ(f1.coplanarity, CoplanarityClass::C21);
    EXPECT_EQ(f1.vertex_count, 4);
    EXPECT_EQ(f1.interior_count, 2);
}

TEST(OMCatalog, EveryRecordHasATableLabel) {
    std::set<std::string> labels;
    for (const auto& r : enumerate_oms()) {
        auto l = table_label(r);
        EXPECT_FALSE(l.empty()) << r.id;
        labels.insert(l);
    }
    EXPECT_EQ(labels.size(), 55u);
}

TEST(OMCatalog, MatchIsInvariant) {
    std::mt19937 rng(71);
    for (const auto& row : load_tables().classes) {
        auto img = row.representative.mapped(oracle::random_unimodular(rng)).permuted(oracle::random_permutation(rng, 6));
        auto a = match_om(row.representative), m = match_om(img);
        EXPECT_EQ(a.record, m.record) << row.id;
        // the relabeling really maps the circuits onto the record's
        std::vector<SignedCircuit> relabeled;
        for (const auto& sc : circuits(img)) {
            SignedCircuit t;
            for (int e : sc.positive) t.positive.push_back(m.relabeling[static_cast<std::size_t>(e)]);
            for (int e : sc.negative) t.negative.push_back(m.relabeling[static_cast<std::size_t>(e)]);
            std::sort(t.positive.begin(), t.positive.end());
            std::sort(t.negative.begin(), t.negative.end());
            relabeled.push_back(t);
        }
        EXPECT_EQ(circuit_key(relabeled), m.record->key) << row.id;
    }
}

TEST(OMCatalog, RandomSizeSixConfigurationsAreCovered) {
    std::mt19937 rng(72);
    std::uniform_int_distribution<Int> d(-2, 2);
    int tested = 0;
    std::set<const OMRecord*> seen;
    for (int attempt = 0; attempt < 200000 && tested < 400; ++attempt) {
        std::vector<IntVec3> pts;
        while (pts.size() < 6) {
            IntVec3 p{d(rng), d(rng), d(rng)};
            if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
        }
        PointConfig c(pts);
        if (!is_full_dimensional(c) || size(c) != 6) continue;
        ++tested;
        auto m = match_om(c);
        ASSERT_NE(m.record, nullptr);
        EXPECT_EQ(m.record->stats, direct_stats(c)) << format_points(c);
        seen.insert(m.record);
    }
    EXPECT_EQ(tested, 400);
    EXPECT_GT(seen.size(), 10u);
}

TEST(OMCatalog, RequiresSixPoints) {
    PointConfig c{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
    EXPECT_THROW(match_om(c), Error);
}
