#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "lattice6/exact_linalg.hpp"
#include "lattice6/polytope.hpp"

namespace lattice6::oracle {

// Product of random elementary matrices, a random sign flip, and a small translation.
inline AffineMap random_unimodular(std::mt19937& rng, int steps = 6) {
    IntMatrix3 m{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    std::uniform_int_distribution<int> idx(0, 2), coef(-2, 2), coin(0, 1), shift(-3, 3);
    for (int s = 0; s < steps; ++s) {
        int i = idx(rng), j = idx(rng);
        if (i == j) continue;
        int k = coef(rng);
        for (int c = 0; c < 3; ++c) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] += k * m[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)];
    }
    if (coin(rng))
        for (auto& x : m[0]) x = -x;
    return AffineMap::make(m, {shift(rng), shift(rng), shift(rng)});
}

inline std::vector<int> random_permutation(std::mt19937& rng, int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

// Whether x lies in conv(pts): by Caratheodory, in some simplex spanned by points of pts.
inline bool in_hull_oracle(const std::vector<IntVec3>& pts, const IntVec3& x) {
    const std::size_t n = pts.size();
    auto same_side = [](Int d, Int e) { return d == 0 || e == 0 || (d > 0) == (e > 0); };
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c)
                for (std::size_t d = c + 1; d < n; ++d) {
                    const IntVec3 &p = pts[a], &q = pts[b], &r = pts[c], &s = pts[d];
                    Int full = det4(p, q, r, s);
                    if (full == 0) continue;
                    Int d0 = det4(x, q, r, s), d1 = det4(p, x, r, s), d2 = det4(p, q, x, s), d3 = det4(p, q, r, x);
                    if (same_side(full, d0) && same_side(full, d1) && same_side(full, d2) && same_side(full, d3)) return true;
                }
    return false;
}

// Lattice points of conv(pts) by scanning the bounding box with the oracle above.
inline std::vector<IntVec3> lattice_points_oracle(const std::vector<IntVec3>& pts) {
    IntVec3 lo = pts[0], hi = pts[0];
    for (const auto& p : pts)
        for (int k = 0; k < 3; ++k) {
            lo[static_cast<std::size_t>(k)] = std::min(lo[static_cast<std::size_t>(k)], p[static_cast<std::size_t>(k)]);
            hi[static_cast<std::size_t>(k)] = std::max(hi[static_cast<std::size_t>(k)], p[static_cast<std::size_t>(k)]);
        }
    std::vector<IntVec3> out;
    for (Int x = lo[0]; x <= hi[0]; ++x)
        for (Int y = lo[1]; y <= hi[1]; ++y)
            for (Int z = lo[2]; z <= hi[2]; ++z)
                if (in_hull_oracle(pts, {x, y, z})) out.push_back({x, y, z});
    return out;
}

// Brute-force lattice width over all functionals in [-r, r]^3.
inline Int box_width(const PointConfig& c, Int r) {
    Int best = -1;
    for (Int a = -r; a <= r; ++a)
        for (Int b = -r; b <= r; ++b)
            for (Int d = -r; d <= r; ++d) {
                if (a == 0 && b == 0 && d == 0) continue;
                Int lo = 0, hi = 0;
                bool first = true;
                for (const auto& p : c) {
                    Int v = a * p[0] + b * p[1] + d * p[2];
                    if (first || v < lo) lo = v;
                    if (first || v > hi) hi = v;
                    first = false;
                }
                if (best < 0 || hi - lo < best) best = hi - lo;
            }
    return best;
}

}  // namespace lattice6::oracle
