// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

#include "lattice6/classify6.hpp"
#include "lattice6/empty_tetra.hpp"
#include "lattice6/equivalence.hpp"
#include "lattice6/size5.hpp"
#include "lattice6/width1.hpp"
#include "support.hpp"

using namespace lattice6;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    void require(bool ok, const std::string& what) {
        if (!ok) {
            if (!pass) detail << "; ";
            else detail.str("");
            pass = false;
            detail << what;
        }
    }
};

int jobs() {
    if (const char* env = std::getenv("LATTICE6_JOBS")) {
        int j = std::atoi(env);
        if (j > 0) return j;
    }
    return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

const Classification& classification() {
    static const Classification c = classify_all(jobs());
    return c;
}

std::set<Int> orbit(Int p, Int q) {
    std::set<Int> out{((p % q) + q) % q};
    for (bool grew = true; grew;) {
        grew = false;
        for (Int x : std::set<Int>(out)) {
            grew |= out.insert((q - x) % q).second;
            for (Int y = 0; y < q; ++y)
                if ((x * y) % q == 1 % q) grew |= out.insert(y).second;
        }
    }
    return out;
}

void criterion1(Outcome& o) {
    const auto& r = classification();
    o.require(r.problems.empty(), std::to_string(r.problems.size()) + " problems");
    std::map<Int, int> widths;
    std::map<char, int> per_case;
    int dps = 0, inequivalent = 0;
    for (const auto& c : r.classes) {
        ++widths[c.width];
        ++per_case[c.id[0]];
        dps += c.dps;
        if (!are_equivalent(c.representative, load_tables().by_id(c.id).representative)) ++inequivalent;
    }
    o.require(r.classes.size() == 76, std::to_string(r.classes.size()) + " classes");
    o.require(widths == std::map<Int, int>{{2, 74}, {3, 2}}, "width histogram");
    o.require(dps == 45, std::to_string(dps) + " dps");
    o.require(per_case == std::map<char, int>{{'A', 2}, {'B', 15}, {'C', 6}, {'D', 2}, {'E', 2}, {'F', 17}, {'G', 20}, {'H', 12}},
              "per-case counts");
    o.require(inequivalent == 0, std::to_string(inequivalent) + " classes not equivalent to their row");
    if (o.pass) o.detail << "76 classes, widths {2: 74, 3: 2}, 45 dps, (2,15,6,2,2,17,20,12)";
}

void criterion2(Outcome& o) {
    auto rep = validate_tables(load_tables());
    o.require(rep.ok(), std::to_string(rep.mismatches.size()) + " mismatches");
    std::map<std::string, Int> gcds;
    for (const auto& c : load_tables().classes)
        if (Int g = gcd_all(volume_vector6(c.representative)); g != 1) gcds[c.id] = g;
    o.require(gcds == std::map<std::string, Int>{{"A.1", 2}, {"A.2", 2}, {"B.14", 3}, {"B.15", 3}, {"C.3", 3}}, "gcd exceptions");
    if (o.pass) o.detail << rep.rows_checked << " rows, 0 mismatches, " << rep.notes.size() << " notes";
}

void criterion3(Outcome& o) {
    const auto& oms = enumerate_oms();
    int uniform = 0;
    for (const auto& r : oms) uniform += r.uniform;
    o.require(oms.size() == 55, std::to_string(oms.size()) + " records");
    o.require(uniform == 4, std::to_string(uniform) + " uniform");
    using Key = std::tuple<CoplanarityClass, int, int>;
    std::map<Key, int> want, got;
    for (const auto& cell : load_tables().om_cells) want[{cell.coplanarity, cell.vertices, cell.interior}] += static_cast<int>(cell.labels.size());
    for (const auto& r : oms) ++got[{r.stats.coplanarity, r.stats.vertex_count, r.stats.interior_count}];
    o.require(want == got, "om cell counts");
    std::set<const OMRecord*> realized;
    for (const auto& c : load_tables().classes) realized.insert(match_om(c.representative).record);
    o.require(realized.size() == 22, std::to_string(realized.size()) + " realized records");
    if (o.pass) o.detail << "55 records, 4 uniform, " << want.size() << " cells match, 22 realized";
}

void criterion4(Outcome& o) {
    for (const char* id : {"C.3", "H.12"}) {
        const auto& rep = load_tables().by_id(id).representative;
        auto w = width(rep);
        o.require(w.width == 3, std::string(id) + " width " + std::to_string(w.width));
        o.require(width_along(rep, w.functional) == 3, std::string(id) + " witness");
        auto cands = width_candidates(rep, 2);
        for (const auto& f : cands) o.require(width_along(rep, f) > 2, std::string(id) + " candidate " + to_string(f));
        if (o.pass)
            o.detail << (std::string(id) == "C.3" ? "" : "; ") << id << " width 3 along " << format_functional(w.functional) << ", "
                     << cands.size() << " candidates at W=2 fail";
    }
}

void criterion5(Outcome& o) {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<Int> d(-4, 4);
    int tested = 0, empty = 0, bad = 0;
    auto check = [&](const PointConfig& t) {
        bool oracle = oracle::lattice_points_oracle(t.points()).size() == 4;
        if (is_empty_tetrahedron(t) != oracle) ++bad;
        auto wt = white_type(t);
        if (wt.has_value() != oracle) ++bad;
        if (wt) {
            ++empty;
            Int q = normalized_volume(t);
            if (wt->q != q || *orbit(wt->p, q).begin() != wt->p) ++bad;
            if (!are_equivalent(t, white_tetrahedron(wt->p, wt->q))) ++bad;
        }
        ++tested;
    };
    while (tested < 10000) {
        IntVec3 p[4];
        for (auto& v : p) v = {d(rng), d(rng), d(rng)};
        if (det4(p[0], p[1], p[2], p[3]) == 0) continue;
        check(PointConfig{p[0], p[1], p[2], p[3]});
    }
    int orbit_bad = 0;
    for (Int q = 1; q <= 12; ++q)
        for (Int p = 0; p < q; ++p) {
            auto t = white_tetrahedron(p, q);
            check(t);
            if (std::gcd(p, q) == 1) {
                auto wt = white_type(t);
                if (!wt || wt->p != *orbit(p, q).begin()) ++orbit_bad;
            }
        }
    o.require(bad == 0, std::to_string(bad) + " disagreements");
    o.require(orbit_bad == 0, std::to_string(orbit_bad) + " orbit mismatches");
    if (o.pass) o.detail << tested << " tetrahedra, " << empty << " empty, 0 disagreements";
}

void criterion6(Outcome& o) {
    std::mt19937 rng(6);
    int rows = 0;
    for (const auto& r : size5_fixed_rows()) {
        ++rows;
        o.require(classify5(r.representative).representative == r.representative, r.describe());
        auto img = r.representative.mapped(oracle::random_unimodular(rng)).permuted(oracle::random_permutation(rng, 5));
        o.require(classify5(img).representative == r.representative, r.describe() + " (mapped)");
    }
    int n31 = 0, n21 = 0;
    for (Int a = -6; a <= 6; ++a)
        for (Int b = -6; b <= 6; ++b, ++n31) {
            PointConfig c{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {-1, -1, 0}, {a, b, 3}};
            bool direct = oracle::lattice_points_oracle(c.points()).size() == 5;
            o.require(lemma31_admissible(a, b) == direct, "(3,1) lemma at " + std::to_string(a) + "," + std::to_string(b));
        }
    for (Int q = 1; q <= 5; ++q)
        for (Int a = -q; a <= q; ++a)
            for (Int b = -q; b <= q; ++b, ++n21) {
                PointConfig c{{0, 0, 0}, {0, 1, 0}, {0, -1, 0}, {1, 0, 0}, {a, b, q}};
                bool direct = oracle::lattice_points_oracle(c.points()).size() == 5;
                o.require(lemma21_admissible(a, b, q) == direct, "(2,1) lemma at " + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(q));
            }
    if (o.pass) o.detail << rows << " fixed rows, " << n31 << " + " << n21 << " lemma cases agree";
}

void criterion7(Outcome& o) {
    o.require(no_octahedron_check(8), "octahedral record realized");
    const auto* spec = [] {
        for (const auto& f : load_tables().width1_families)
            if (f.id == "3+3/6.4") return &f;
        return static_cast<const Width1FamilySpec*>(nullptr);
    }();
    o.require(spec != nullptr, "no 6.4 family");
    if (!spec) return;
    auto c = width1_family(spec->id, spec->sample);
    o.require(size(c) == 6, "size");
    o.require(width(c).width == 1, "width");
    o.require(interior_points(c).empty(), "not hollow");
    o.require(vertices(c).size() == 6, "not hexavertex");
    if (o.pass) o.detail << "no_octahedron_check(8) true; 6.4 member with parameters (" << spec->sample[0] << "," << spec->sample[1] << ","
                         << spec->sample[2] << "," << spec->sample[3] << ") is size 6, width 1, hollow, 6 vertices";
}

void criterion8(Outcome& o) {
    std::mt19937 rng(8);
    const auto& rows = load_tables().classes;
    std::uniform_int_distribution<std::size_t> pick(0, rows.size() - 1);
    for (int k = 0; k < 200; ++k) {
        const auto& row = rows[pick(rng)];
        const auto& rep = row.representative;
        auto m = oracle::random_unimodular(rng, 8);
        auto perm = oracle::random_permutation(rng, 6);
        auto mapped = rep.mapped(m);
        auto img = mapped.permuted(perm);
        std::string tag = row.id + " #" + std::to_string(k);
        o.require(size(img) == size(rep), tag + " size");
        o.require(width(img).width == width(rep).width, tag + " width");
        o.require(is_dps(img) == is_dps(rep), tag + " dps");
        o.require(coplanarity_class(img) == coplanarity_class(rep), tag + " coplanarity");
        o.require(circuits(img).size() == circuits(rep).size(), tag + " circuits");
        o.require(canonical_key(img) == canonical_key(rep), tag + " key");
        auto a = volume_vector6(rep), b = volume_vector6(mapped);
        bool scaled = true;
        for (std::size_t i = 0; i < 15; ++i) scaled &= b[i] == m.determinant * a[i];
        o.require(scaled, tag + " volume vector");
    }
    if (o.pass) o.detail << "200 triples preserve all invariants";
}

void criterion9(Outcome& o) {
    std::vector<int> got;
    for (const auto& row : load_tables().result2) {
        if (row.polytopes == 0 && row.shape == "any") continue;
        int n = 0;
        for (const auto& c : classification().classes) {
            const auto& rc = c.representative;
            if (static_cast<int>(vertices(rc).size()) == row.vertices && static_cast<int>(interior_points(rc).size()) == row.interior &&
                (row.shape == "any" || hull_shape(rc) == row.shape))
                ++n;
        }
        got.push_back(n);
    }
    o.require(got == std::vector<int>{23, 11, 2, 3, 35, 1, 1}, "histogram");
    o.detail << (o.pass ? "" : " got ") << "(";
    for (std::size_t i = 0; i < got.size(); ++i) o.detail << (i ? "," : "") << got[i];
    o.detail << ")";
}

}  // namespace

int main() {
    std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
        {"classification reproduction", criterion1}, {"table validation", criterion2}, {"oriented matroid catalog", criterion3},
        {"width-3 rows", criterion4},                 {"empty tetrahedra", criterion5}, {"size-5 suite", criterion6},
        {"no octahedron", criterion7},                {"invariance", criterion8},       {"result2 histogram", criterion9}};
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        auto t0 = std::chrono::steady_clock::now();
        try {
            criteria[i].second(o);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        failed += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << ": " << o.detail.str() << " ["
                  << std::fixed << std::setprecision(2) << s << "s]\n";
    }
    return failed ? 1 : 0;
}
