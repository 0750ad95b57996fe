#include "lattice6/width1.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <numeric>
#include <thread>

#include "lattice6/errors.hpp"

namespace lattice6 {

namespace {

using Params = std::span<const Int>;
using Pt2 = std::array<Int, 2>;

struct Family {
    std::size_t n_params;
    std::function<bool(Params)> ok;
    // Points at z = 0 and at z = 1.
    std::function<std::pair<std::vector<Pt2>, std::vector<Pt2>>(Params)> build;
};

bool coprime(Int a, Int b) { return std::gcd(a, b) == 1; }

Family fixed(std::vector<Pt2> z0, std::vector<Pt2> z1) {
    return {0, [](Params) { return true; }, [z0, z1](Params) { return std::pair{z0, z1}; }};
}

const std::map<std::string, Family>& families() {
    static const std::map<std::string, Family> table = [] {
        std::map<std::string, Family> f;
        const std::vector<Pt2> origin{{0, 0}};
        f["5+1/3.2"] = fixed({{0, 0}, {1, 0}, {0, 1}, {-1, 0}, {0, 2}}, origin);
        f["5+1/3.3"] = fixed({{0, 0}, {1, 0}, {0, 1}, {-1, 0}, {0, -1}}, origin);
        f["5+1/4.1"] = fixed({{0, 0}, {1, 0}, {0, 1}, {0, 2}, {0, 3}}, origin);
        f["5+1/4.3"] = fixed({{0, 0}, {1, 0}, {0, 1}, {1, 1}, {0, 2}}, origin);
        f["5+1/4.4"] = fixed({{0, 0}, {1, 0}, {0, 1}, {-1, -1}, {0, 2}}, origin);
        f["5+1/4.5"] = fixed({{0, 0}, {1, 0}, {0, 1}, {-1, -1}, {1, 1}}, origin);

        const std::vector<Pt2> skew{{0, 0}, {1, 0}, {0, 1}, {-1, -1}};
        const std::vector<Pt2> square{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
        const std::vector<Pt2> kite{{0, 0}, {1, 0}, {0, 1}, {-1, 0}};
        const std::vector<Pt2> row{{0, 0}, {0, 1}, {0, 2}, {0, 3}};
        auto seg = [](Int a, Int b) { return std::vector<Pt2>{{0, 0}, {a, b}}; };
        auto ab_family = [&](std::vector<Pt2> base, std::function<bool(Int, Int)> ok, bool swap) {
            return Family{2, [ok](Params p) { return ok(p[0], p[1]); },
                          [base, seg, swap](Params p) {
                              return std::pair{base, swap ? seg(p[1], p[0]) : seg(p[0], p[1])};
                          }};
        };
        auto b_lt_a = [](Int a, Int b) { return 0 < b && b < a && coprime(a, b); };
        f["4+2/4.16"] = fixed(skew, seg(1, 0));
        // (1,1) would repeat 4.16 up to symmetry; (2,1) is the direction the 5.6 family leaves out
        f["4+2/4.7"] = fixed(skew, seg(2, 1));
        f["4+2/5.6"] = ab_family(skew, [](Int a, Int b) { return 0 < b && b < a && coprime(a, b) && 2 * b != a; }, false);
        f["4+2/3.4"] = fixed(square, seg(0, 1));
        f["4+2/4.14"] = fixed(square, seg(1, 1));
        f["4+2/5.8"] = ab_family(square, b_lt_a, false);
        f["4+2/3.10"] = fixed(kite, seg(0, 1));
        f["4+2/4.3"] = fixed(kite, seg(1, 0));
        f["4+2/3.5"] = fixed(kite, seg(1, 1));
        f["4+2/4.15"] = ab_family(kite, b_lt_a, false);
        f["4+2/4.9"] = ab_family(kite, b_lt_a, true);
        f["4+2/4.1"] = ab_family(row, [](Int a, Int b) { return 0 <= b && b < a && coprime(a, b); }, false);

        const std::vector<Pt2> tri{{0, 0}, {1, 0}, {0, 1}};
        f["3+3/2.1"] = {2, [](Params p) { return 0 <= p[1] && p[1] < p[0] && coprime(p[0], p[1]); },
                        [](Params p) {
                            return std::pair{std::vector<Pt2>{{0, 0}, {1, 0}, {-1, 0}},
                                             std::vector<Pt2>{{0, 0}, {p[1], p[0]}, {-p[1], -p[0]}}};
                        }};
        f["3+3/4.3"] = fixed(tri, {{0, 0}, {1, 0}, {-1, 0}});
        f["3+3/4.15"] = {2, [](Params p) { return 0 < p[1] && p[1] <= p[0] && coprime(p[0], p[1]); },
                         [tri](Params p) {
                             return std::pair{tri, std::vector<Pt2>{{0, 0}, {p[0], p[1]}, {-p[0], -p[1]}}};
                         }};
        f["3+3/3.4"] = fixed(tri, {{0, 0}, {1, 0}, {0, 1}});
        f["3+3/3.12"] = fixed(tri, {{1, 0}, {0, 1}, {1, 1}});
        f["3+3/4.14"] = fixed(tri, {{0, 0}, {0, 1}, {1, 1}});
        f["3+3/5.8"] = {1, [](Params p) { return p[0] > 1; },
                        [tri](Params p) { return std::pair{tri, std::vector<Pt2>{{0, 0}, {0, 1}, {1, p[0]}}}; }};
        f["3+3/5.15"] = {1, [](Params p) { return p[0] > 3; },
                         [tri](Params p) { return std::pair{tri, std::vector<Pt2>{{0, 0}, {0, 1}, {-1, p[0]}}}; }};
        f["3+3/6.4"] = {4,
                        [](Params p) {
                            Int a = p[0], b = p[1], c = p[2], d = p[3];
                            Int det = a * d - b * c;
                            return (det == 1 || det == -1) && a > 0 && b > 0 && c > 0 && d > 0 && c + d > a + b;
                        },
                        [tri](Params p) {
                            return std::pair{tri, std::vector<Pt2>{{0, 0}, {p[0], p[1]}, {p[2], p[3]}}};
                        }};
        return f;
    }();
    return table;
}

const Family& family(const std::string& id) {
    auto it = families().find(id);
    if (it == families().end()) throw BadParameters("unknown width-one family '" + id + "'");
    return it->second;
}

}  // namespace

std::vector<std::string> width1_family_ids() {
    std::vector<std::string> ids;
    for (const auto& [id, f] : families()) ids.push_back(id);
    return ids;
}

std::size_t width1_param_count(const std::string& id) { return family(id).n_params; }

bool width1_params_ok(const std::string& id, std::span<const Int> params) {
    const auto& f = family(id);
    return params.size() == f.n_params && f.ok(params);
}

PointConfig width1_family(const std::string& id, std::span<const Int> params) {
    const auto& f = family(id);
    if (params.size() != f.n_params)
        throw BadParameters(id + " takes " + std::to_string(f.n_params) + " parameters");
    if (!f.ok(params)) throw BadParameters("parameters outside the constraints of " + id);
    auto [z0, z1] = f.build(params);
    std::vector<IntVec3> pts;
    for (const auto& p : z0) pts.push_back({p[0], p[1], 0});
    for (const auto& p : z1) pts.push_back({p[0], p[1], 1});
    return PointConfig(pts);
}

std::vector<std::vector<Int>> width1_sample_params(const std::string& id, std::size_t count, Int bound) {
    const auto& f = family(id);
    std::vector<Int> p(f.n_params, 0);
    if (f.n_params == 0) return count > 0 ? std::vector<std::vector<Int>>{{}} : std::vector<std::vector<Int>>{};
    // every admissible tuple in [0, bound]^n, smallest sum first
    std::vector<std::vector<Int>> all;
    while (true) {
        if (f.ok(p)) all.push_back(p);
        std::size_t k = 0;
        while (k < p.size() && p[k] == bound) p[k++] = 0;
        if (k == p.size()) break;
        ++p[k];
    }
    auto sum = [](const std::vector<Int>& v) { return std::accumulate(v.begin(), v.end(), Int{0}); };
    std::stable_sort(all.begin(), all.end(), [&](const auto& x, const auto& y) {
        return std::pair{sum(x), x} < std::pair{sum(y), y};
    });
    if (all.size() > count) all.resize(count);
    return all;
}

const OMRecord& octahedral_record() {
    static const OMRecord* rec = [] {
        // the printed constraints also admit members with parallel edges, which are not 6.4
        std::vector<Int> hollow{1, 2, 2, 3};
        const OMRecord* realized = match_om(width1_family("3+3/6.4", hollow)).record;
        const OMRecord* found = nullptr;
        for (const auto& r : enumerate_oms()) {
            if (!r.uniform || &r == realized) continue;
            if (r.stats.vertex_count == 6 && r.stats.interior_count == 0) {
                if (found) throw Error("more than one candidate octahedral record");
                found = &r;
            }
        }
        if (!found) throw Error("no octahedral record in the catalog");
        return found;
    }();
    return *rec;
}

bool no_octahedron_check(int bound) {
    if (bound < 2) throw BadParameters("bound must be at least 2");
    const std::string target = octahedral_record().key;
    const Int b = bound;
    auto parallel_to_t = [](Int x, Int y) { return x == 0 || y == 0 || x + y == 0; };
    std::vector<Pt2> box;
    for (Int x = -b; x <= b; ++x)
        for (Int y = -b; y <= b; ++y) box.push_back({x, y});

    std::atomic<bool> hit{false};
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; !hit && (i = next++) < box.size();) {
            const Pt2 q1 = box[i];
            for (std::size_t j = i + 1; j < box.size(); ++j) {
                const Pt2 q2 = box[j];
                Int ex = q2[0] - q1[0], ey = q2[1] - q1[1];
                if (parallel_to_t(ex, ey) || std::gcd(ex, ey) != 1) continue;
                for (std::size_t k = j + 1; k < box.size(); ++k) {
                    const Pt2 q3 = box[k];
                    Int fx = q3[0] - q1[0], fy = q3[1] - q1[1];
                    Int det = ex * fy - ey * fx;
                    if (det != 1 && det != -1) continue;
                    if (parallel_to_t(fx, fy) || parallel_to_t(q3[0] - q2[0], q3[1] - q2[1])) continue;
                    PointConfig c{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {q1[0], q1[1], 1}, {q2[0], q2[1], 1}, {q3[0], q3[1], 1}};
                    if (size(c) != 6) continue;
                    auto vv = volume_vector(c);
                    if (std::find(vv.begin(), vv.end(), Int{0}) != vv.end()) continue;  // not uniform
                    if (circuit_key(circuits(c)) == target) hit = true;
                }
            }
        }
    };
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return !hit;
}

}  // namespace lattice6
