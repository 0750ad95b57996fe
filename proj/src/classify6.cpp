#include "lattice6/classify6.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <optional>
#include <regex>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "lattice6/empty_tetra.hpp"
#include "lattice6/equivalence.hpp"
#include "lattice6/errors.hpp"
#include "lattice6/size5.hpp"

namespace lattice6 {

namespace {

int side_of(const PointConfig& c, const std::vector<int>& plane, int e) {
    Int d = det4(c[static_cast<std::size_t>(plane[0])], c[static_cast<std::size_t>(plane[1])],
                 c[static_cast<std::size_t>(plane[2])], c[static_cast<std::size_t>(e)]);
    return d > 0 ? 1 : d < 0 ? -1 : 0;
}

// Three affinely independent points of a coplanar support.
std::vector<int> spanning_triple(const PointConfig& c, const std::vector<int>& support) {
    for (std::size_t a = 0; a < support.size(); ++a)
        for (std::size_t b = a + 1; b < support.size(); ++b)
            for (std::size_t d = b + 1; d < support.size(); ++d) {
                IntVec3 u = c[static_cast<std::size_t>(support[b])] - c[static_cast<std::size_t>(support[a])];
                IntVec3 v = c[static_cast<std::size_t>(support[d])] - c[static_cast<std::size_t>(support[a])];
                if (cross(u, v) != IntVec3{0, 0, 0}) return {support[a], support[b], support[d]};
            }
    return {};
}

// Some circuit of the given signature leaves the other two points on opposite sides.
bool splits_rest(const PointConfig& c, const std::vector<SignedCircuit>& circs, std::pair<int, int> sig) {
    for (const auto& sc : circs) {
        if (sc.signature() != sig) continue;
        std::vector<int> support = sc.positive;
        support.insert(support.end(), sc.negative.begin(), sc.negative.end());
        auto plane = spanning_triple(c, support);
        std::vector<int> rest;
        for (int e = 0; e < 6; ++e)
            if (sc.sign_of(e) == 0) rest.push_back(e);
        if (rest.size() == 2 && side_of(c, plane, rest[0]) * side_of(c, plane, rest[1]) < 0) return true;
    }
    return false;
}

}  // namespace

char case_of(const PointConfig& c) {
    if (c.size() != 6 || !is_full_dimensional(c)) return '-';
    switch (coplanarity_class(c)) {
        case CoplanarityClass::FiveCoplanar: return 'A';
        case CoplanarityClass::C31: return splits_rest(c, circuits(c), {3, 1}) ? 'B' : 'C';
        case CoplanarityClass::C22: return splits_rest(c, circuits(c), {2, 2}) ? 'D' : 'E';
        case CoplanarityClass::C21: return 'F';
        case CoplanarityClass::None: {
            auto n = interior_points(c).size();
            return n == 1 ? 'G' : n == 2 ? 'H' : '-';
        }
    }
    return '-';
}

namespace {

std::string point_list(const PointConfig& c) {
    std::string s;
    for (const auto& p : c) s += (s.empty() ? "" : " ") + to_string(p);
    return s;
}

std::string params_text(const std::vector<Int>& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s + ")";
}

// A piece of a triangulation: all points but one ("P^i"), or a tetrahedron ("Tijkl"), 1-based.
struct Piece {
    std::vector<int> indices;  // 0-based
    std::string name;
};

Piece minus(int i) {
    Piece p;
    for (int k = 0; k < 6; ++k)
        if (k != i - 1) p.indices.push_back(k);
    p.name = "P^" + std::to_string(i);
    return p;
}

Piece tetra(int a, int b, int c, int d) {
    return {{a - 1, b - 1, c - 1, d - 1}, "T" + std::to_string(a) + std::to_string(b) + std::to_string(c) + std::to_string(d)};
}

Int piece_volume(const PointConfig& c, const Piece& p) {
    PointConfig sub = c.subset(p.indices);
    if (!is_full_dimensional(sub)) return 0;
    return normalized_volume(sub);
}

// Among the candidate triangulations, the first whose volumes add up to vol(P); then the first
// piece with extra lattice points, or "" when all pieces are clean.
std::optional<std::string> certify(const PointConfig& c, const std::vector<std::vector<Piece>>& options) {
    Int total = normalized_volume(c);
    for (const auto& pieces : options) {
        Int sum = 0;
        for (const auto& p : pieces) sum += piece_volume(c, p);
        if (sum != total) continue;
        for (const auto& p : pieces) {
            PointConfig sub = c.subset(p.indices);
            bool clean = p.indices.size() == 4 ? is_empty_tetrahedron(sub) : size(sub) == sub.size();
            if (!clean) return p.name + (p.indices.size() == 4 ? " is not empty" : " has extra lattice points");
        }
        return std::string();
    }
    return std::nullopt;  // no listed triangulation applies
}

const std::vector<std::pair<std::string, std::string>>& table_keys() {
    static const std::vector<std::pair<std::string, std::string>> keys = [] {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& row : load_tables().classes) out.emplace_back(row.id, canonical_key(row.representative));
        return out;
    }();
    return keys;
}

const PolytopeClass* table_row_for(const PointConfig& c, const std::string& key) {
    const auto& b = load_tables();
    for (const auto& [id, k] : table_keys()) {
        if (k != key) continue;
        const auto& row = b.by_id(id);
        if (key_is_certain(key) || are_equivalent(c, row.representative)) return &row;
    }
    return nullptr;
}

}  // namespace

const PolytopeClass* table_class_of(const PointConfig& c) {
    if (c.size() != 6 || !is_full_dimensional(c)) return nullptr;
    return table_row_for(c, canonical_key(c));
}

namespace {

// Deduplicating sink for accepted configurations of one case.
class Collector {
public:
    Collector(CaseReport& rep, std::vector<std::string>* problems) : rep_(rep), problems_(problems) {}

    void reject(const std::string& candidate, const std::string& reason) {
        rep_.rejected.push_back({candidate, reason});
        static const std::regex point(R"( ?\(-?\d+,-?\d+,-?\d+\))");
        ++rep_.rejection_counts[std::regex_replace(reason, point, "")];
    }

    // Standard filters; returns true when c is a new class.
    bool offer(const PointConfig& c, const std::string& subcase, const std::vector<Int>& params) {
        ++rep_.candidates_examined;
        std::string tag = subcase + " " + (params.empty() ? point_list(c) : params_text(params));
        IntVec3 extra;
        if (find_extra_lattice_point(c, extra)) {
            reject(tag, "extra lattice point " + to_string(extra));
            return false;
        }
        if (width(c).width <= 1) {
            reject(tag, "width one");
            return false;
        }
        char k = case_of(c);
        if (k != rep_.name) {
            reject(tag, std::string("belongs to case ") + k);
            return false;
        }
        return add(c, subcase, params);
    }

    bool add(const PointConfig& c, const std::string& subcase, const std::vector<Int>& params) {
        std::string key = canonical_key(c);
        for (std::size_t i = 0; i < keys_.size(); ++i)
            if (keys_[i] == key && (key_is_certain(key) || are_equivalent(c, rep_.classes_found[i].representative))) {
                ++rep_.counters["duplicates"];
                return false;
            }
        keys_.push_back(key);
        PolytopeClass pc;
        pc.representative = c;
        pc.volume_vector = volume_vector6(c);
        auto w = width(c);
        pc.width = w.width;
        pc.functional = w.functional;
        pc.dps = is_dps(c);
        pc.om_label = table_label(*match_om(c).record);
        if (const PolytopeClass* row = table_row_for(c, key)) {
            pc.id = row->id;
            if (row->om_label != pc.om_label && problems_)
                problems_->push_back(row->id + ": oriented matroid " + pc.om_label + ", table says " + row->om_label);
        } else {
            pc.id = std::string(1, rep_.name) + ".?";
            if (problems_) problems_->push_back(std::string("case ") + rep_.name + ": class " + point_list(c) + " is not in the tables");
        }
        rep_.classes_found.push_back(pc);
        rep_.accepted[subcase].push_back(params);
        ++rep_.counters[subcase + " classes"];
        return true;
    }

private:
    CaseReport& rep_;
    std::vector<std::string>* problems_;
    std::vector<std::string> keys_;
};

PointConfig config6(std::initializer_list<IntVec3> pts) { return PointConfig(pts); }

const IntVec3 O{0, 0, 0}, E1{1, 0, 0}, E2{0, 1, 0}, M12{-1, -1, 0}, E12{1, 1, 0};

void sort_classes(std::vector<PolytopeClass>& v) {
    auto num = [](const std::string& id) {
        auto dot = id.find('.');
        try {
            return std::stoi(id.substr(dot + 1));
        } catch (...) {
            return 1000;
        }
    };
    std::stable_sort(v.begin(), v.end(), [&](const auto& a, const auto& b) {
        return std::pair{a.id[0], num(a.id)} < std::pair{b.id[0], num(b.id)};
    });
}

CaseReport run_a(std::vector<std::string>* problems) {
    CaseReport rep;
    rep.name = 'A';
    Collector col(rep, problems);
    // Both P^2 and P^4 are (2,1)-type size-five polytopes: a == 1 and -a == 1 modulo q.
    std::vector<std::pair<Int, Int>> qa;
    for (Int q = 2; q <= 12; ++q)
        for (Int a = 0; a < q; ++a)
            if (lemma21_admissible(a, 1, q) && lemma21_admissible(-a, 1, q)) qa.emplace_back(q, a);
    rep.counters["(q,a) surviving the (2,1) lemma"] = qa.size();
    const std::pair<int, std::pair<Int, Int>> shapes[] = {{1, {0, 0}}, {2, {1, 1}}, {5, {0, -1}}};
    for (const auto& [shape, cd] : shapes) {
        std::string sub = "A case " + std::to_string(shape);
        for (auto [q, a] : qa)
            for (Int b = 0; b < q; ++b) {
                PointConfig c = config6({O, {1, cd.first, 0}, E2, {-1, cd.second, 0}, {0, 2, 0}, {a, b, q}});
                std::vector<Int> params{a, b, q};
                std::set<IntVec3> own(c.begin(), c.end());
                std::string why;
                for (int i = 0; i < 6 && why.empty(); ++i)
                    for (int j = i + 1; j < 6 && why.empty(); ++j) {
                        IntVec3 s = c[static_cast<std::size_t>(i)] + c[static_cast<std::size_t>(j)];
                        if (s[0] % 2 || s[1] % 2 || s[2] % 2) continue;
                        IntVec3 mid{s[0] / 2, s[1] / 2, s[2] / 2};
                        if (!own.count(mid))
                            why = "midpoint of p" + std::to_string(i + 1) + "p" + std::to_string(j + 1) + " is integer";
                    }
                if (!why.empty()) {
                    ++rep.candidates_examined;
                    col.reject(sub + " " + params_text(params), why);
                    continue;
                }
                col.offer(c, sub, params);
            }
    }
    return rep;
}

const std::vector<std::vector<Piece>> kOppositeTriangulations = {
    {minus(5), minus(6)},
    {minus(5), minus(6), tetra(2, 3, 5, 6)},
    {minus(5), minus(6), tetra(2, 3, 5, 6), tetra(3, 4, 5, 6)},
};

void certify_and_offer(Collector& col, CaseReport& rep, const PointConfig& c, const std::string& sub,
                       const std::vector<Int>& params, const std::vector<std::vector<Piece>>& options,
                       std::vector<std::string>* problems) {
    auto cert = certify(c, options);
    std::string tag = sub + " " + params_text(params);
    bool clean = size(c) == 6;
    if (!cert) {
        IntVec3 extra;
        if (find_extra_lattice_point(c, extra)) {
            ++rep.candidates_examined;
            col.reject(tag, "extra lattice point " + to_string(extra));
        } else {
            ++rep.counters[sub + " checked by direct count"];
            col.offer(c, sub, params);
        }
        return;
    }
    if (cert->empty() != clean && problems) problems->push_back(tag + ": triangulation certificate disagrees with the lattice point count");
    if (!cert->empty()) {
        ++rep.candidates_examined;
        col.reject(tag, *cert);
        return;
    }
    col.offer(c, sub, params);
}

CaseReport run_b(std::vector<std::string>* problems) {
    CaseReport rep;
    rep.name = 'B';
    Collector col(rep, problems);
    const Int R = 20;
    // both at distance one: midpoint (a/2, b/2) with 0 <= x <= y, x < 1, y < 3x + 2
    for (Int a = -R; a <= R; ++a)
        for (Int b = -R; b <= R; ++b) {
            if (!(0 <= a && a <= b && a < 2 && b < 3 * a + 4)) continue;
            ++rep.counters["B(1,1) region options"];
            PointConfig c = config6({O, E1, E2, M12, {0, 0, 1}, {a, b, -1}});
            certify_and_offer(col, rep, c, "B(1,1)", {a, b}, kOppositeTriangulations, problems);
        }
    // distances one and three: intersection (a/4, b/4) in the same region
    for (Int a = -R; a <= R; ++a)
        for (Int b = -R; b <= R; ++b) {
            if (!(0 <= a && a <= b && a < 4 && b < 3 * a + 8)) continue;
            ++rep.counters["B(1,3) region options"];
            std::string tag = "B(1,3) " + params_text({a, b});
            if (!lemma31_admissible(a, b)) {
                col.reject(tag, "fails the (3,1) congruence");
                continue;
            }
            Int g[] = {a, b, 4};
            if (gcd_all(g) != 1) {
                col.reject(tag, "edge p5p6 is not primitive");
                continue;
            }
            ++rep.counters["B(1,3) admissible options"];
            PointConfig c = config6({O, E1, E2, M12, {0, 0, 1}, {a, b, -3}});
            certify_and_offer(col, rep, c, "B(1,3)", {a, b}, kOppositeTriangulations, problems);
        }
    // both at distance three: intersection (a'/2, b'/2) with a' = a + 1, b' = b + 2
    for (Int ap = -R; ap <= R; ++ap)
        for (Int bp = -R; bp <= R; ++bp) {
            bool region = ap >= 0 && bp >= 0 && ((ap < 2 && bp < 3 * ap + 4) || (bp < 2 && ap < 3 * bp + 4));
            if (!region) continue;
            ++rep.counters["B(3,3) region options"];
            Int a = ap - 1, b = bp - 2;
            std::string tag = "B(3,3) " + params_text({ap, bp});
            if (!lemma31_admissible(a, b)) {
                col.reject(tag, "fails the (3,1) congruence");
                continue;
            }
            ++rep.counters["B(3,3) admissible options"];
            Int g[] = {a - 1, b - 2, 6};
            if (gcd_all(g) % 3 == 0) {
                col.reject(tag, "edge p5p6 has lattice points at heights +-1");
                continue;
            }
            PointConfig c = config6({O, E1, E2, M12, {1, 2, 3}, {a, b, -3}});
            certify_and_offer(col, rep, c, "B(3,3)", {ap, bp}, kOppositeTriangulations, problems);
        }
    return rep;
}

// Ordered vertex lists (4! each) of the signature-(4,1) polytopes, with the interior point.
struct Embedding {
    std::size_t row;
    std::array<IntVec3, 4> v;
    IntVec3 interior;
};

std::vector<Embedding> embeddings41() {
    std::vector<Embedding> out;
    auto rows = catalog41();
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const auto& rep = rows[r].representative;
        auto inner = interior_points(rep);
        if (inner.size() != 1) throw CorruptData("signature (4,1) row without a unique interior point");
        std::vector<IntVec3> verts;
        for (const auto& p : rep)
            if (p != inner[0]) verts.push_back(p);
        for (const auto& perm : permutations(4))
            out.push_back({r, {verts[perm[0]], verts[perm[1]], verts[perm[2]], verts[perm[3]]}, inner[0]});
    }
    return out;
}

CaseReport run_c(std::vector<std::string>* problems) {
    CaseReport rep;
    rep.name = 'C';
    Collector col(rep, problems);
    // p5 on an edge p_i p6
    const std::vector<std::vector<Piece>> edge_options = {
        {minus(6), tetra(3, 4, 5, 6)},
        {minus(6), tetra(2, 3, 5, 6), tetra(2, 4, 5, 6), tetra(3, 4, 5, 6)},
    };
    for (IntVec3 p5 : {IntVec3{0, 0, 1}, IntVec3{1, 2, 3}})
        for (IntVec3 from : {E1, O}) {
            IntVec3 p6 = 2 * p5 - from;
            PointConfig c = config6({O, E1, E2, M12, p5, p6});
            certify_and_offer(col, rep, c, "C edge", {p5[0], p5[1], p5[2], p6[0], p6[1], p6[2]}, edge_options, problems);
        }
    // p5 interior to T1236: (4,1)-extension with p4 = 3 p1 - p2 - p3
    const std::vector<std::vector<Piece>> interior_options = {{minus(4), tetra(1, 2, 4, 6), tetra(1, 3, 4, 6)}};
    for (const auto& e : embeddings41()) {
        ++rep.counters["C interior embeddings"];
        const auto& [p1, p2, p3, p6] = e.v;
        IntVec3 p4 = 3 * p1 - p2 - p3;
        std::vector<Int> params{static_cast<Int>(e.row)};
        std::string tag = "C interior row " + std::to_string(e.row + 1) + " " + to_string(p1) + to_string(p2) + to_string(p3);
        PointConfig c({p1, p2, p3, p4, e.interior, p6});
        const OMRecord* om = match_om(c).record;
        if (table_label(*om) != "5.4") {
            ++rep.candidates_examined;
            col.reject(tag, "oriented matroid is not 5.4");
            continue;
        }
        Int v = det4(p1, p2, p3, e.interior);
        if (v < 0) v = -v;
        if (v != 1 && v != 3) {
            ++rep.candidates_examined;
            col.reject(tag, "T1235 has volume " + std::to_string(v));
            continue;
        }
        certify_and_offer(col, rep, c, "C interior", params, interior_options, problems);
    }
    // both p5 and p6 vertices: p6 = (1,2,3), p5 = (a,b,1) with a >= 1/3, b >= 2/3
    const std::vector<std::vector<Piece>> vertex_options = {{minus(5), tetra(2, 3, 5, 6)}};
    for (Int a = -20; a <= 20; ++a)
        for (Int b = -20; b <= 20; ++b) {
            if (3 * a < 1 || 3 * b < 2) continue;
            ++rep.counters["C vertices region options"];
            PointConfig c = config6({O, E1, E2, M12, {a, b, 1}, {1, 2, 3}});
            std::string tag = "C vertices " + params_text({a, b});
            std::string slice;
            for (const auto& q : lattice_points(c))
                if (q[2] == 1 && q != c[4]) {
                    slice = "lattice point " + to_string(q) + " at z=1";
                    break;
                }
            if (!slice.empty()) {
                ++rep.candidates_examined;
                col.reject(tag, slice);
                continue;
            }
            certify_and_offer(col, rep, c, "C vertices", {a, b}, vertex_options, problems);
        }
    return rep;
}

CaseReport run_d(std::vector<std::string>* problems) {
    CaseReport rep;
    rep.name = 'D';
    Collector col(rep, problems);
    for (Int a = -20; a <= 20; ++a)
        for (Int b = -20; b <= 20; ++b) {
            // 1/2 <= x <= y and (x < 1 or y < x + 1), x = a/2, y = b/2
            if (!(1 <= a && a <= b && (a < 2 || b < a + 2))) continue;
            ++rep.counters["D region options"];
            PointConfig c = config6({O, E1, E2, E12, {0, 0, 1}, {a, b, -1}});
            std::string tag = "D " + params_text({a, b});
            std::string slice;
            for (const auto& q : lattice_points(c))
                if (q[2] == 0 && q != O && q != E1 && q != E2 && q != E12) {
                    slice = "lattice point " + to_string(q) + " at z=0";
                    break;
                }
            ++rep.candidates_examined;
            if (!slice.empty()) {
                col.reject(tag, slice);
                continue;
            }
            if (width(c).width == 1) {
                col.reject(tag, "width one");
                continue;
            }
            if (coplanarity_class(c) == CoplanarityClass::C31) {
                col.reject(tag, "contains a (3,1) circuit");
                continue;
            }
            --rep.candidates_examined;
            col.offer(c, "D", {a, b});
        }
    return rep;
}

CaseReport run_e(std::vector<std::string>* problems) {
    CaseReport rep;
    rep.name = 'E';
    Collector col(rep, problems);
    const std::vector<std::vector<Piece>> options = {{minus(4), tetra(2, 3, 4, 6)}};
    for (const auto& e : embeddings41()) {
        ++rep.counters["E embeddings"];
        const auto& [p1, p2, p3, p6] = e.v;
        IntVec3 p4 = p2 + p3 - p1;
        PointConfig c({p1, p2, p3, p4, e.interior, p6});
        certify_and_offer(col, rep, c, "E", {static_cast<Int>(e.row)}, options, problems);
    }
    return rep;
}

CaseReport run_f(std::vector<std::string>* problems) {
    CaseReport rep;
    rep.name = 'F';
    Collector col(rep, problems);
    auto rows = catalog41();
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const auto& q = rows[r].representative;
        IntVec3 inner = interior_points(q).at(0);
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 5; ++j) {
                if (i == j) continue;
                IntVec3 r1 = q[i], r2 = q[j];
                std::string sub = r1 == inner ? "F 4.21" : r2 == inner ? "F 4.22" : "F 4.11";
                std::vector<IntVec3> pts(q.begin(), q.end());
                pts.push_back(2 * r2 - r1);
                if (std::find(q.begin(), q.end(), pts.back()) != q.end()) continue;
                ++rep.counters[sub + " extensions"];
                col.offer(PointConfig(pts), sub, {static_cast<Int>(r), static_cast<Int>(i), static_cast<Int>(j)});
            }
    }
    return rep;
}

// Circuit (pos, neg) on 1-based labels present in circs under the relabeling lab (config index -> label).
bool has_circuit(const std::vector<SignedCircuit>& circs, const std::vector<int>& lab, std::set<int> pos, std::set<int> neg) {
    for (const auto& sc : circs) {
        std::set<int> p, n;
        for (int e : sc.positive) p.insert(lab[static_cast<std::size_t>(e)]);
        for (int e : sc.negative) n.insert(lab[static_cast<std::size_t>(e)]);
        if ((p == pos && n == neg) || (p == neg && n == pos)) return true;
    }
    return false;
}

// Reorders c so that its labels follow the conventions of the gluing triangulations.
std::optional<PointConfig> glue_labeling(const PointConfig& c, bool two_interior) {
    auto circs = circuits(c);
    std::vector<bool> sig41(6);
    for (int i = 0; i < 6; ++i) {
        PointConfig sub = c.without(static_cast<std::size_t>(i));
        sig41[static_cast<std::size_t>(i)] = signature5(sub) == std::pair{4, 1};
    }
    auto inner_of = [&](int drop) {
        PointConfig sub = c.without(static_cast<std::size_t>(drop));
        auto in = interior_points(sub);
        for (int k = 0; k < 6; ++k)
            if (k != drop && in.size() == 1 && c[static_cast<std::size_t>(k)] == in[0]) return k;
        return -1;
    };
    for (const auto& perm : permutations(6)) {
        // perm[label-1] = configuration index
        std::vector<int> lab(6);
        for (int l = 0; l < 6; ++l) lab[static_cast<std::size_t>(perm[static_cast<std::size_t>(l)])] = l + 1;
        int i5 = perm[4], i6 = perm[5];
        if (!sig41[static_cast<std::size_t>(i5)] || !sig41[static_cast<std::size_t>(i6)]) continue;
        if (two_interior) {
            if (inner_of(i6) != perm[0] || inner_of(i5) != perm[3]) continue;
            if (!has_circuit(circs, lab, {1, 2, 6}, {4, 5}) || !has_circuit(circs, lab, {3, 4, 5}, {1, 6})) continue;
        } else {
            if (inner_of(i5) != perm[0] || inner_of(i6) != perm[0]) continue;
            if (!has_circuit(circs, lab, {2, 3, 6}, {4, 5}) || !has_circuit(circs, lab, {1, 2, 6}, {4, 5})) continue;
        }
        return c.permuted(perm);
    }
    return std::nullopt;
}

template <class Fn>
void parallel_for(std::size_t n, int jobs, Fn&& fn) {
    if (jobs <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next++) < n;) fn(i);
        });
    for (auto& t : pool) t.join();
}

std::pair<CaseReport, CaseReport> run_gh(int jobs, std::vector<std::string>* problems) {
    CaseReport g, h;
    g.name = 'G';
    h.name = 'H';
    Collector cg(g, problems), ch(h, problems);
    auto rows = catalog41();
    struct Glue {
        std::size_t q1, q2;
        int drop1, drop2;  // omitted vertex positions in the vertex lists
        std::vector<int> match;
    };
    struct Outcome {
        bool unimodular = false;
        bool coincide = false;
        std::optional<PointConfig> config;
        std::string reject;
        std::string tag;
    };
    std::vector<std::vector<IntVec3>> verts(rows.size());
    std::vector<IntVec3> inner(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        inner[r] = interior_points(rows[r].representative).at(0);
        for (const auto& p : rows[r].representative)
            if (p != inner[r]) verts[r].push_back(p);
    }
    std::vector<Glue> glues;
    for (std::size_t q1 = 0; q1 < rows.size(); ++q1)
        for (std::size_t q2 = 0; q2 < rows.size(); ++q2)
            for (int d1 = 0; d1 < 4; ++d1)
                for (int d2 = 0; d2 < 4; ++d2)
                    for (const auto& m : permutations(4)) glues.push_back({q1, q2, d1, d2, m});
    std::vector<Outcome> out(glues.size());
    parallel_for(glues.size(), jobs, [&](std::size_t gi) {
        const Glue& gl = glues[gi];
        auto tet = [&](std::size_t r, int drop) {
            std::array<IntVec3, 4> t;
            int k = 0;
            for (int v = 0; v < 4; ++v)
                if (v != drop) t[static_cast<std::size_t>(k++)] = verts[r][static_cast<std::size_t>(v)];
            t[3] = inner[r];
            return t;
        };
        auto t1 = tet(gl.q1, gl.drop1), t2 = tet(gl.q2, gl.drop2);
        std::array<IntVec3, 4> dst;
        for (int k = 0; k < 4; ++k) dst[static_cast<std::size_t>(k)] = t1[static_cast<std::size_t>(gl.match[static_cast<std::size_t>(k)])];
        auto rm = solve_affine(t2, dst);
        Outcome& o = out[gi];
        if (!rm.integral()) return;
        AffineMap m = rm.to_integer();
        if (!m.unimodular()) return;
        o.unimodular = true;
        o.coincide = gl.match[3] == 3;
        IntVec3 extra = m.apply(verts[gl.q2][static_cast<std::size_t>(gl.drop2)]);
        std::vector<IntVec3> pts(rows[gl.q1].representative.begin(), rows[gl.q1].representative.end());
        o.tag = std::string(o.coincide ? "G" : "H") + " rows " + std::to_string(gl.q1 + 1) + "," + std::to_string(gl.q2 + 1);
        if (std::find(pts.begin(), pts.end(), extra) != pts.end()) {
            o.reject = "glued point coincides with a vertex";
            return;
        }
        pts.push_back(extra);
        PointConfig c(pts);
        if (!is_full_dimensional(c)) {
            o.reject = "flat";
            return;
        }
        IntVec3 e;
        if (find_extra_lattice_point(c, e)) {
            o.reject = "extra lattice point " + to_string(e);
            return;
        }
        char k = case_of(c);
        if (k != (o.coincide ? 'G' : 'H')) {
            o.reject = std::string("belongs to case ") + k;
            return;
        }
        o.config = c;
    });
    const std::vector<std::vector<Piece>> g_options = {{minus(5), tetra(2, 3, 5, 6)}};
    const std::vector<std::vector<Piece>> h_options = {
        {minus(6), tetra(2, 3, 4, 6), tetra(2, 4, 5, 6), tetra(3, 4, 5, 6)}};
    for (std::size_t gi = 0; gi < glues.size(); ++gi) {
        const Outcome& o = out[gi];
        if (!o.unimodular) continue;
        CaseReport& rep = o.coincide ? g : h;
        Collector& col = o.coincide ? cg : ch;
        ++rep.counters["unimodular gluings"];
        if (!o.config) {
            ++rep.candidates_examined;
            col.reject(o.tag, o.reject);
            continue;
        }
        auto labeled = glue_labeling(*o.config, !o.coincide);
        if (!labeled) {
            ++rep.candidates_examined;
            col.reject(o.tag, "labeling conventions cannot be met");
            if (problems) problems->push_back(o.tag + ": labeling conventions cannot be met");
            continue;
        }
        certify_and_offer(col, rep, *labeled, std::string(1, rep.name), {}, o.coincide ? g_options : h_options, problems);
    }
    return {std::move(g), std::move(h)};
}

void finish(CaseReport& rep) { sort_classes(rep.classes_found); }

}  // namespace

CaseReport run_case_a() { auto r = run_a(nullptr); finish(r); return r; }
CaseReport run_case_b() { auto r = run_b(nullptr); finish(r); return r; }
CaseReport run_case_c() { auto r = run_c(nullptr); finish(r); return r; }
CaseReport run_case_d() { auto r = run_d(nullptr); finish(r); return r; }
CaseReport run_case_e() { auto r = run_e(nullptr); finish(r); return r; }
CaseReport run_case_f() { auto r = run_f(nullptr); finish(r); return r; }
std::pair<CaseReport, CaseReport> run_case_gh(int jobs) {
    auto r = run_gh(jobs, nullptr);
    finish(r.first);
    finish(r.second);
    return r;
}

Classification classify(const std::string& cases, int jobs) {
    Classification out;
    for (char k : cases)
        if (std::string("ABCDEFGH").find(k) == std::string::npos) throw Error(std::string("unknown case '") + k + "'");
    auto want = [&](char k) { return cases.find(k) != std::string::npos; };
    std::vector<std::string>* pr = &out.problems;
    if (want('A')) out.reports.push_back(run_a(pr));
    if (want('B')) out.reports.push_back(run_b(pr));
    if (want('C')) out.reports.push_back(run_c(pr));
    if (want('D')) out.reports.push_back(run_d(pr));
    if (want('E')) out.reports.push_back(run_e(pr));
    if (want('F')) out.reports.push_back(run_f(pr));
    if (want('G') || want('H')) {
        auto [g, h] = run_gh(jobs, pr);
        if (want('G')) out.reports.push_back(std::move(g));
        if (want('H')) out.reports.push_back(std::move(h));
    }
    const auto& tables = load_tables();
    std::map<std::string, std::string> seen;  // id -> case
    for (auto& rep : out.reports) {
        finish(rep);
        std::size_t expected = 0;
        for (const auto& row : tables.classes)
            if (row.id[0] == rep.name) ++expected;
        if (rep.classes_found.size() != expected)
            out.problems.push_back(std::string("case ") + rep.name + ": " + std::to_string(rep.classes_found.size()) +
                                   " classes, the tables list " + std::to_string(expected));
        for (const auto& c : rep.classes_found) {
            if (c.id[0] != rep.name)
                out.problems.push_back(std::string("case ") + rep.name + " produced " + c.id);
            if (!seen.emplace(c.id, std::string(1, rep.name)).second)
                out.problems.push_back(c.id + " produced twice");
            if (c.id.find('?') == std::string::npos) {
                const auto& row = tables.by_id(c.id);
                if (c.width != row.width) out.problems.push_back(c.id + ": width " + std::to_string(c.width));
                if (c.dps != row.dps) out.problems.push_back(c.id + ": dps flag differs");
            }
            out.classes.push_back(c);
        }
    }
    // global uniqueness across cases
    std::map<std::string, std::vector<std::size_t>> by_key;
    for (std::size_t i = 0; i < out.classes.size(); ++i) by_key[canonical_key(out.classes[i].representative)].push_back(i);
    for (const auto& [key, idx] : by_key)
        for (std::size_t x = 0; x < idx.size(); ++x)
            for (std::size_t y = x + 1; y < idx.size(); ++y)
                if (key_is_certain(key) || are_equivalent(out.classes[idx[x]].representative, out.classes[idx[y]].representative))
                    out.problems.push_back(out.classes[idx[x]].id + " and " + out.classes[idx[y]].id + " are equivalent");
    sort_classes(out.classes);
    return out;
}

std::string classes_to_json(const std::vector<PolytopeClass>& classes) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : classes) {
        nlohmann::json rep = nlohmann::json::array();
        for (const auto& p : c.representative) rep.push_back({p[0], p[1], p[2]});
        arr.push_back({{"id", c.id},
                       {"om_label", c.om_label},
                       {"volume_vector", std::vector<Int>(c.volume_vector.begin(), c.volume_vector.end())},
                       {"width", c.width},
                       {"functional", {c.functional[0], c.functional[1], c.functional[2]}},
                       {"representative", rep},
                       {"dps", c.dps}});
    }
    return arr.dump(1) + "\n";
}

std::vector<PolytopeClass> classes_from_json(const std::string& text) {
    std::vector<PolytopeClass> out;
    try {
        for (const auto& r : nlohmann::json::parse(text)) {
            PolytopeClass c;
            c.id = r.at("id").get<std::string>();
            c.om_label = r.at("om_label").get<std::string>();
            auto vv = r.at("volume_vector").get<std::vector<Int>>();
            if (vv.size() != 15) throw ParseError(0, "volume vector must have 15 entries");
            std::copy(vv.begin(), vv.end(), c.volume_vector.begin());
            c.width = r.at("width").get<Int>();
            auto f = r.at("functional").get<std::vector<Int>>();
            if (f.size() != 3) throw ParseError(0, "functional must have 3 entries");
            c.functional = {f[0], f[1], f[2]};
            std::vector<IntVec3> pts;
            for (const auto& p : r.at("representative")) pts.push_back({p.at(0).get<Int>(), p.at(1).get<Int>(), p.at(2).get<Int>()});
            c.representative = PointConfig(pts);
            c.dps = r.at("dps").get<bool>();
            out.push_back(std::move(c));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(0, e.what());
    }
    return out;
}

std::string classes_to_csv(const std::vector<PolytopeClass>& classes) {
    std::ostringstream os;
    os << "om_label,id,volume_vector,width,functional,dps,representative\n";
    for (const auto& c : classes) {
        os << c.om_label << ',' << c.id << ",\"";
        for (std::size_t i = 0; i < 15; ++i) os << (i ? " " : "") << c.volume_vector[i];
        os << "\"," << c.width << ',' << format_functional(c.functional) << ',' << (c.dps ? "yes" : "no") << ",\"";
        os << point_list(c.representative) << "\"\n";
    }
    return os.str();
}

}  // namespace lattice6
