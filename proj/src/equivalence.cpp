#include "lattice6/equivalence.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <numeric>

#include "lattice6/errors.hpp"
#include "lattice6/invariants.hpp"

namespace lattice6 {

const std::vector<std::vector<int>>& permutations(int n) {
    static std::array<std::vector<std::vector<int>>, 7> cache;
    static std::once_flag flags[7];
    if (n < 0 || n > 6) throw Error("permutations: n must be in 0..6");
    std::call_once(flags[n], [n] {
        std::vector<int> p(static_cast<std::size_t>(n));
        std::iota(p.begin(), p.end(), 0);
        do cache[static_cast<std::size_t>(n)].push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
    });
    return cache[static_cast<std::size_t>(n)];
}

namespace {

std::vector<Int> sorted_abs(std::vector<Int> v) {
    for (auto& x : v) x = x < 0 ? -x : x;
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<Int> negated(std::vector<Int> v) {
    for (auto& x : v) x = -x;
    return v;
}

void check_pair(const PointConfig& a, const PointConfig& b) {
    if (a.size() != b.size()) throw WrongSize(a.size(), b.size());
    if (a.size() < 4 || a.size() > 6) throw WrongSize("equivalence needs 4 to 6 points");
    if (!is_full_dimensional(a) || !is_full_dimensional(b)) throw NotFullDimensional();
}

}  // namespace

std::optional<EquivalenceWitness> are_equivalent(const PointConfig& a, const PointConfig& b) {
    check_pair(a, b);
    const int n = static_cast<int>(a.size());
    auto va = volume_vector(a);
    if (sorted_abs(va) != sorted_abs(volume_vector(b))) return std::nullopt;
    auto va_neg = negated(va);

    // first independent quadruple of a
    std::array<int, 4> quad{};
    bool found = false;
    for (int i = 0; i < n && !found; ++i)
        for (int j = i + 1; j < n && !found; ++j)
            for (int k = j + 1; k < n && !found; ++k)
                for (int l = k + 1; l < n && !found; ++l)
                    if (det4(a[i], a[j], a[k], a[l]) != 0) {
                        quad = {i, j, k, l};
                        found = true;
                    }
    std::array<IntVec3, 4> src;
    for (int t = 0; t < 4; ++t) src[t] = a[static_cast<std::size_t>(quad[t])];

    for (const auto& perm : permutations(n)) {
        PointConfig bp = b.permuted(perm);
        auto vb = volume_vector(bp);
        if (vb != va && vb != va_neg) continue;
        std::array<IntVec3, 4> dst;
        for (int t = 0; t < 4; ++t) dst[t] = bp[static_cast<std::size_t>(quad[t])];
        auto rm = solve_affine(src, dst);
        if (!rm.integral()) continue;
        AffineMap m = rm.to_integer();
        if (!m.unimodular()) continue;
        bool all = true;
        for (int i = 0; i < n && all; ++i)
            if (m.apply(a[static_cast<std::size_t>(i)]) != bp[static_cast<std::size_t>(i)]) all = false;
        if (all) return EquivalenceWitness{perm, m};
    }
    return std::nullopt;
}

namespace {

// For each permutation and each lexicographic 4-subset: index of the sorted base subset and
// the sign of the sorting permutation.
struct KeyTable {
    std::vector<std::array<std::pair<int, int>, 15>> rows;
    std::array<std::array<int, 4>, 15> subsets{};
};

const KeyTable& key_table() {
    static const KeyTable table = [] {
        KeyTable t;
        int s = 0;
        for (int a = 0; a < 6; ++a)
            for (int b = a + 1; b < 6; ++b)
                for (int c = b + 1; c < 6; ++c)
                    for (int d = c + 1; d < 6; ++d) t.subsets[static_cast<std::size_t>(s++)] = {a, b, c, d};
        auto index_of = [&](std::array<int, 4> q) {
            for (int k = 0; k < 15; ++k)
                if (t.subsets[static_cast<std::size_t>(k)] == q) return k;
            return -1;
        };
        for (const auto& perm : permutations(6)) {
            std::array<std::pair<int, int>, 15> row;
            for (int k = 0; k < 15; ++k) {
                std::array<int, 4> q;
                for (int r = 0; r < 4; ++r) q[static_cast<std::size_t>(r)] = perm[static_cast<std::size_t>(t.subsets[static_cast<std::size_t>(k)][static_cast<std::size_t>(r)])];
                int inversions = 0;
                for (int x = 0; x < 4; ++x)
                    for (int y = x + 1; y < 4; ++y)
                        if (q[static_cast<std::size_t>(x)] > q[static_cast<std::size_t>(y)]) ++inversions;
                std::sort(q.begin(), q.end());
                row[static_cast<std::size_t>(k)] = {index_of(q), inversions % 2 ? -1 : 1};
            }
            t.rows.push_back(row);
        }
        return t;
    }();
    return table;
}

}  // namespace

std::string canonical_key(const PointConfig& c) {
    if (c.size() != 6) throw WrongSize(6, c.size());
    if (!is_full_dimensional(c)) throw NotFullDimensional();
    auto base = volume_vector(c);
    const auto& table = key_table();
    std::array<Int, 15> best{};
    bool have = false;
    for (const auto& row : table.rows) {
        std::array<Int, 15> v, w;
        for (std::size_t k = 0; k < 15; ++k) {
            v[k] = row[k].second * base[static_cast<std::size_t>(row[k].first)];
            w[k] = -v[k];
        }
        const auto& m = std::min(v, w);
        if (!have || m < best) best = m;
        have = true;
    }
    std::string key;
    for (std::size_t k = 0; k < 15; ++k) {
        if (k) key += ',';
        key += std::to_string(best[k]);
    }
    Int g = gcd_all(best);
    if (g > 1) key += "/" + std::to_string(g);
    return key;
}

bool key_is_certain(const std::string& key) { return key.find('/') == std::string::npos; }

}  // namespace lattice6
