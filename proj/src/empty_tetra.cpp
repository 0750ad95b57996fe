#include "lattice6/empty_tetra.hpp"

#include <numeric>

#include "lattice6/errors.hpp"

namespace lattice6 {

PointConfig white_tetrahedron(Int p, Int q) {
    return PointConfig{{0, 0, 0}, {1, 0, 0}, {0, 0, 1}, {p, q, 1}};
}

namespace {

// Opposite edge pairs of a tetrahedron abcd, as index quadruples (edge1, edge2).
constexpr int kOpposite[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};

// A primitive functional constant on both edges whose values on them differ by exactly one,
// returned with the edge pair that realizes it.
bool unit_functional(const std::array<IntVec3, 4>& v, IntVec3& f, int& pair) {
    for (int k = 0; k < 3; ++k) {
        const int* e = kOpposite[k];
        IntVec3 g = primitive_part(cross(v[e[1]] - v[e[0]], v[e[3]] - v[e[2]]));
        Int gap = dot(g, v[e[2]]) - dot(g, v[e[0]]);
        if (gap == 1 || gap == -1) {
            f = gap == 1 ? g : -1 * g;
            pair = k;
            return true;
        }
    }
    return false;
}

std::array<IntVec3, 4> checked_vertices(const PointConfig& t) {
    if (t.size() != 4) throw WrongSize(4, t.size());
    if (det4(t[0], t[1], t[2], t[3]) == 0) throw NotFullDimensional();
    return {t[0], t[1], t[2], t[3]};
}

bool edges_primitive(const std::array<IntVec3, 4>& v) {
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (!is_primitive(v[j] - v[i])) return false;
    return true;
}

Int inverse_mod(Int p, Int q) {
    Int r0 = q, r1 = ((p % q) + q) % q, s0 = 0, s1 = 1;
    while (r1 != 0) {
        Int t = r0 / r1;
        Int r2 = r0 - t * r1, s2 = s0 - t * s1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    if (r0 != 1) throw BadParameters("p is not invertible modulo q");
    return ((s0 % q) + q) % q;
}

}  // namespace

bool is_empty_tetrahedron(const PointConfig& t) {
    auto v = checked_vertices(t);
    if (!edges_primitive(v)) return false;
    IntVec3 f;
    int pair;
    return unit_functional(v, f, pair);
}

bool is_empty_tetrahedron(const IntVec3& a, const IntVec3& b, const IntVec3& c, const IntVec3& d) {
    return is_empty_tetrahedron(PointConfig{a, b, c, d});
}

Int canonical_p(Int p, Int q) {
    if (q < 1) throw BadParameters("q must be positive");
    if (q == 1) return 0;
    if (q == 2) return 1;
    p = ((p % q) + q) % q;
    if (std::gcd(p, q) != 1) throw BadParameters("gcd(p, q) must be 1");
    Int inv = inverse_mod(p, q);
    return std::min({p, q - p, inv, q - inv});
}

bool types_equivalent(const WhiteType& a, const WhiteType& b) {
    return a.q == b.q && canonical_p(a.p, a.q) == canonical_p(b.p, b.q);
}

std::optional<WhiteType> white_type(const PointConfig& t) {
    auto v = checked_vertices(t);
    if (!edges_primitive(v)) return std::nullopt;
    IntVec3 f;
    int pair;
    if (!unit_functional(v, f, pair)) return std::nullopt;
    const int* e = kOpposite[pair];
    const IntVec3& a = v[e[0]];
    IntVec3 u = v[e[1]] - a;     // f(u) = 0
    IntVec3 w = v[e[2]] - a;     // f(w) = 1
    IntVec3 vv;
    if (!solve_two_forms(f, cross(w, u), vv)) throw Error("no lattice basis through the edge");
    // (u, vv, w) is a positive lattice basis; d - c = alpha u + beta vv.
    IntVec3 diff = v[e[3]] - v[e[2]];
    Int det = det3(u, vv, w);
    Int alpha = det3(diff, vv, w) / det;
    Int beta = det3(u, diff, w) / det;
    Int q = beta < 0 ? -beta : beta;
    if (q == 0) throw Error("flat tetrahedron in normal form");
    return WhiteType{canonical_p(alpha, q), q};
}

}  // namespace lattice6
