#include <filesystem>
#include <fstream>
#include <random>

#include <gtest/gtest.h>

#include "lattice6/errors.hpp"
#include "lattice6/polytope.hpp"
#include "lattice6/tables.hpp"
#include "support.hpp"

using namespace lattice6;

TEST(PointConfig, RejectsDuplicatesAndLargeCoordinates) {
    EXPECT_THROW(PointConfig({{0, 0, 0}, {0, 0, 0}}), InvalidConfig);
    EXPECT_THROW(PointConfig({{0, 0, 0}, {kCoordinateBound + 1, 0, 0}}), InvalidConfig);
    PointConfig c{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}};
    EXPECT_EQ(c.without(1), (PointConfig{{0, 0, 0}, {0, 1, 0}}));
    std::vector<int> perm{2, 0, 1};
    EXPECT_EQ(c.permuted(perm), (PointConfig{{0, 1, 0}, {0, 0, 0}, {1, 0, 0}}));
    EXPECT_THROW(delete_point(c, 3), IndexOutOfRange);
}

TEST(AffineRank, Examples) {
    EXPECT_EQ(affine_rank(PointConfig{{1, 1, 1}}), 0);
    EXPECT_EQ(affine_rank(PointConfig{{0, 0, 0}, {1, 1, 1}, {2, 2, 2}}), 1);
    EXPECT_EQ(affine_rank(PointConfig{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}}), 2);
    EXPECT_TRUE(is_full_dimensional(PointConfig{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
}

TEST(LatticePoints, Examples) {
    PointConfig cube{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}};
    EXPECT_EQ(size(cube), 8u);
    EXPECT_EQ(vertices(cube).size(), 8u);
    EXPECT_TRUE(interior_points(cube).empty());
    EXPECT_EQ(normalized_volume(cube), 6);
    PointConfig oct{{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
    EXPECT_EQ(size(oct), 7u);
    EXPECT_EQ(interior_points(oct), (std::vector<IntVec3>{{0, 0, 0}}));
    EXPECT_EQ(normalized_volume(oct), 8);
    PointConfig long_edge{{0, 0, 0}, {2, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    EXPECT_EQ(size(long_edge), 5u);
    IntVec3 extra;
    ASSERT_TRUE(find_extra_lattice_point(long_edge, extra));
    EXPECT_EQ(extra, (IntVec3{1, 0, 0}));
    EXPECT_FALSE(find_extra_lattice_point(PointConfig{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, extra));
}

TEST(LatticePoints, MatchCaratheodoryOracle) {
    std::mt19937 rng(21);
    std::uniform_int_distribution<Int> d(-3, 3);
    std::uniform_int_distribution<int> n(4, 7);
    int tested = 0;
    while (tested < 300) {
        std::vector<IntVec3> pts;
        int k = n(rng);
        while (static_cast<int>(pts.size()) < k) {
            IntVec3 p{d(rng), d(rng), d(rng)};
            if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
        }
        PointConfig c(pts);
        if (!is_full_dimensional(c)) continue;
        ++tested;
        ASSERT_EQ(lattice_points(c), oracle::lattice_points_oracle(pts));
    }
}

TEST(LatticePoints, TableRepresentativesHaveSizeSix) {
    for (const auto& row : load_tables().classes) {
        EXPECT_EQ(size(row.representative), 6u) << row.id;
        EXPECT_EQ(lattice_points(row.representative).size(), oracle::lattice_points_oracle(row.representative.points()).size());
    }
}

TEST(NormalizedVolume, SumOfTetrahedraForSimplices) {
    std::mt19937 rng(22);
    std::uniform_int_distribution<Int> d(-5, 5);
    for (int k = 0; k < 200; ++k) {
        IntVec3 a{d(rng), d(rng), d(rng)}, b{d(rng), d(rng), d(rng)}, c{d(rng), d(rng), d(rng)}, e{d(rng), d(rng), d(rng)};
        Int v = det4(a, b, c, e);
        if (v == 0) continue;
        std::vector<IntVec3> pts{a, b, c, e};
        std::sort(pts.begin(), pts.end());
        if (std::adjacent_find(pts.begin(), pts.end()) != pts.end()) continue;
        EXPECT_EQ(normalized_volume(PointConfig(pts)), v < 0 ? -v : v);
    }
}

TEST(NormalizedVolume, TwoConesFromAnInteriorPoint) {
    // volume of a bipyramid = sum of the two tetrahedra sharing the middle triangle
    PointConfig bip{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}};
    Int expected = std::abs(det4({0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1})) + std::abs(det4({1, 1, 1}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}));
    EXPECT_EQ(normalized_volume(bip), expected);
}

TEST(Facets, UnitTetrahedron) {
    PointConfig t{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    auto f = hull_facets(t);
    ASSERT_EQ(f.size(), 4u);
    for (const auto& facet : f) {
        EXPECT_EQ(facet.on.size(), 3u);
        for (const auto& p : t) EXPECT_GE(dot(facet.normal, p), facet.offset);
        EXPECT_TRUE(is_primitive(facet.normal));
    }
}

TEST(Facets, InteriorPointsOfSignature41Rows) {
    for (const auto& row : load_tables().size5) {
        if (row.kind != "fixed" || row.signature != std::pair{4, 1}) continue;
        PointConfig c(row.representative);
        EXPECT_EQ(interior_points(c).size(), 1u);
        EXPECT_EQ(vertices(c).size(), 4u);
    }
}

TEST(PointsFile, ParseAndFormat) {
    auto c = parse_points("# unit tetrahedron\n0 0 0\n\n1 0 0\n 0 1 0 \n0 0 1\n");
    EXPECT_EQ(c.size(), 4u);
    EXPECT_EQ(parse_points(format_points(c)), c);
}

TEST(PointsFile, ErrorsCarryLineNumbers) {
    try {
        parse_points("0 0 0\n1 0\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2u);
    }
    try {
        parse_points("0 0 0\n1 0 0\n0 0 x\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
    }
    EXPECT_THROW(parse_points("0 0 0\n1 0 0 7\n"), ParseError);
    EXPECT_THROW(read_points_file("/nonexistent/points.txt"), Error);
}

TEST(PointsFile, ReadsFromDisk) {
    auto path = std::filesystem::temp_directory_path() / "lattice6_polytope_test.txt";
    {
        std::ofstream f(path);
        f << "0 0 0\n1 0 0\n0 1 0\n0 0 1\n";
    }
    EXPECT_EQ(read_points_file(path).size(), 4u);
    std::filesystem::remove(path);
}
