#include "lattice6/om_catalog.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "lattice6/equivalence.hpp"
#include "lattice6/errors.hpp"
#include "lattice6/tables.hpp"

namespace lattice6 {

namespace {

using Signs = std::array<int, 6>;

Signs to_signs(const SignedCircuit& c) {
    Signs s{};
    for (int e : c.positive) s[static_cast<std::size_t>(e)] = 1;
    for (int e : c.negative) s[static_cast<std::size_t>(e)] = -1;
    return s;
}

SignedCircuit from_signs(const Signs& s) {
    int first = 0;
    for (int x : s)
        if (x != 0) {
            first = x;
            break;
        }
    SignedCircuit c;
    for (int e = 0; e < 6; ++e) {
        int v = s[static_cast<std::size_t>(e)] * first;
        if (v > 0) c.positive.push_back(e);
        if (v < 0) c.negative.push_back(e);
    }
    return c;
}

// Base-3 code, most significant digit first, of the larger of s and -s.
int code_of(const Signs& s) {
    int a = 0, b = 0;
    for (int x : s) {
        a = a * 3 + (x + 1);
        b = b * 3 + (1 - x);
    }
    return std::max(a, b);
}

std::vector<int> best_codes(const std::vector<Signs>& circs, std::vector<int>* best_perm) {
    std::vector<int> best;
    for (const auto& perm : permutations(6)) {
        std::vector<int> codes;
        codes.reserve(circs.size());
        for (const auto& c : circs) {
            Signs d{};
            for (std::size_t i = 0; i < 6; ++i) d[static_cast<std::size_t>(perm[i])] = c[i];
            codes.push_back(code_of(d));
        }
        std::sort(codes.begin(), codes.end());
        if (best.empty() || codes < best) {
            best = codes;
            if (best_perm) *best_perm = perm;
        }
    }
    return best;
}

Signs decode(int code) {
    Signs s{};
    for (int i = 5; i >= 0; --i) {
        s[static_cast<std::size_t>(i)] = code % 3 - 1;
        code /= 3;
    }
    return s;
}

std::string encode_key(const std::vector<int>& codes) {
    std::string k;
    for (int c : codes) {
        if (!k.empty()) k += ' ';
        Signs s = decode(c);
        for (int x : s) k += x > 0 ? '+' : x < 0 ? '-' : '0';
    }
    return k;
}

bool orthogonal(const Signs& x, const Signs& y) {
    bool pos = false, neg = false, any = false;
    for (std::size_t i = 0; i < 6; ++i) {
        int p = x[i] * y[i];
        if (p > 0) pos = true;
        if (p < 0) neg = true;
        if (p != 0) any = true;
    }
    return !any || (pos && neg);
}

}  // namespace

std::vector<Rank2Dual> enumerate_rank2_duals() {
    std::vector<Rank2Dual> out;
    for (int n_lines = 2; n_lines <= 6; ++n_lines)
        for (int loops = 0; loops <= 6; ++loops) {
            std::vector<std::pair<int, int>> acc;
            auto rec = [&](auto&& self, int i, int left) -> void {
                if (i == n_lines) {
                    if (left != 0) return;
                    Rank2Dual d{loops, acc};
                    auto circs = dual_circuits(d);
                    bool cyclic = std::all_of(circs.begin(), circs.end(),
                                              [](const SignedCircuit& c) { return !c.negative.empty(); });
                    if (cyclic) out.push_back(d);
                    return;
                }
                for (int pc = 0; pc <= 3; ++pc)
                    for (int nc = 0; nc <= 3; ++nc) {
                        if (pc + nc == 0 || pc + nc + loops > 3 || pc + nc > left) continue;
                        acc.emplace_back(pc, nc);
                        self(self, i + 1, left - pc - nc);
                        acc.pop_back();
                    }
            };
            rec(rec, 0, 6 - loops);
        }
    return out;
}

std::vector<SignedCircuit> dual_circuits(const Rank2Dual& d) {
    // element -> (line, ray sign), loops last
    std::vector<std::pair<int, int>> where;
    for (int k = 0; k < static_cast<int>(d.lines.size()); ++k) {
        for (int i = 0; i < d.lines[static_cast<std::size_t>(k)].first; ++i) where.emplace_back(k, 1);
        for (int i = 0; i < d.lines[static_cast<std::size_t>(k)].second; ++i) where.emplace_back(k, -1);
    }
    for (int i = 0; i < d.loops; ++i) where.emplace_back(-1, 0);
    std::vector<SignedCircuit> out;
    for (int k = 0; k < static_cast<int>(d.lines.size()); ++k) {
        Signs s{};
        for (std::size_t e = 0; e < where.size() && e < 6; ++e) {
            auto [line, ray] = where[e];
            if (line < 0 || line == k) continue;
            s[e] = ray * (line > k ? 1 : -1);
        }
        out.push_back(from_signs(s));
    }
    return out;
}

std::string circuit_key(const std::vector<SignedCircuit>& circuits, std::vector<int>* perm) {
    std::vector<Signs> s;
    for (const auto& c : circuits) s.push_back(to_signs(c));
    return encode_key(best_codes(s, perm));
}

OMStatistics om_statistics(const std::vector<SignedCircuit>& circuits) {
    std::vector<Signs> all;
    for (const auto& c : circuits) {
        Signs s = to_signs(c);
        all.push_back(s);
        for (auto& x : s) x = -x;
        all.push_back(s);
    }
    // covectors: sign vectors orthogonal to every circuit
    std::vector<Signs> covectors;
    for (int code = 0; code < 729; ++code) {
        Signs v = decode(code);
        if (v == Signs{}) continue;
        if (std::all_of(all.begin(), all.end(), [&](const Signs& c) { return orthogonal(v, c); }))
            covectors.push_back(v);
    }
    auto support = [](const Signs& v) {
        unsigned m = 0;
        for (std::size_t i = 0; i < 6; ++i)
            if (v[i]) m |= 1u << i;
        return m;
    };
    std::vector<Signs> facets;
    for (const auto& v : covectors) {
        unsigned sv = support(v);
        bool minimal = std::none_of(covectors.begin(), covectors.end(), [&](const Signs& w) {
            unsigned sw = support(w);
            return sw != sv && (sw & sv) == sw;
        });
        if (minimal && std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; })) facets.push_back(v);
    }
    OMStatistics st;
    std::set<int> non_vertices;
    for (const auto& c : all)
        for (int e = 0; e < 6; ++e) {
            if (c[static_cast<std::size_t>(e)] != 1) continue;
            bool alone = true;
            for (int f = 0; f < 6; ++f)
                if (f != e && c[static_cast<std::size_t>(f)] > 0) alone = false;
            if (alone) non_vertices.insert(e);
        }
    st.vertex_count = 6 - static_cast<int>(non_vertices.size());
    for (int e = 0; e < 6; ++e)
        if (std::all_of(facets.begin(), facets.end(), [&](const Signs& f) { return f[static_cast<std::size_t>(e)] != 0; }))
            ++st.interior_count;
    st.coplanarity = coplanarity_class(circuits, 6);
    st.dps = true;
    for (const auto& c : circuits) {
        auto sig = c.signature();
        if (sig == std::pair{2, 1} || sig == std::pair{2, 2}) st.dps = false;
    }
    return st;
}

const std::vector<OMRecord>& enumerate_oms() {
    static const std::vector<OMRecord> records = [] {
        std::map<std::pair<int, std::vector<int>>, OMRecord> found;
        for (const auto& d : enumerate_rank2_duals()) {
            auto circs = dual_circuits(d);
            std::vector<Signs> s;
            for (const auto& c : circs) s.push_back(to_signs(c));
            auto codes = best_codes(s, nullptr);
            auto slot = std::pair{static_cast<int>(codes.size()), codes};
            if (found.count(slot)) continue;
            OMRecord r;
            r.n_circuits = static_cast<int>(codes.size());
            for (int code : codes) r.circuits.push_back(from_signs(decode(code)));
            std::sort(r.circuits.begin(), r.circuits.end());
            r.key = encode_key(codes);
            r.stats = om_statistics(r.circuits);
            r.uniform = std::all_of(r.circuits.begin(), r.circuits.end(),
                                    [](const SignedCircuit& c) { return c.support_size() == 5; });
            r.dual = d;
            found.emplace(slot, std::move(r));
        }
        std::vector<OMRecord> out;
        std::map<int, int> next;
        for (auto& [slot, r] : found) {
            r.sub_index = ++next[r.n_circuits];
            r.id = std::to_string(r.n_circuits) + "." + std::to_string(r.sub_index);
            out.push_back(std::move(r));
        }
        std::map<std::string, std::size_t> by_key;
        for (std::size_t i = 0; i < out.size(); ++i) by_key[out[i].key] = i;
        for (const auto& cls : load_tables().classes) {
            auto it = by_key.find(circuit_key(circuits(cls.representative)));
            if (it != by_key.end()) out[it->second].realized_by_width_gt1 = true;
        }
        return out;
    }();
    return records;
}

OMMatch match_om(const PointConfig& c) {
    if (c.size() != 6) throw WrongSize(6, c.size());
    std::vector<int> perm;
    auto key = circuit_key(circuits(c), &perm);
    for (const auto& r : enumerate_oms())
        if (r.key == key) return {&r, perm};
    throw NoMatch("circuits of " + format_points(c) + " are not in the catalog");
}

}  // namespace lattice6
