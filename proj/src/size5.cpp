#include "lattice6/size5.hpp"

#include <algorithm>
#include <numeric>

#include "lattice6/equivalence.hpp"
#include "lattice6/errors.hpp"
#include "lattice6/tables.hpp"

namespace lattice6 {

std::string Size5Class::describe() const {
    std::string s = "(" + std::to_string(signature.first) + "," + std::to_string(signature.second) + ")";
    if (parameters) {
        const char* names = signature == std::pair{2, 1} ? "pq" : "ab";
        s += std::string(" ") + names[0] + "=" + std::to_string(parameters->first) + " " + names[1] + "=" +
             std::to_string(parameters->second);
    }
    s += " w=(";
    for (std::size_t i = 0; i < 5; ++i) s += (i ? "," : "") + std::to_string(volume_vector[i]);
    return s + ") width " + std::to_string(width);
}

namespace {

Size5Class make_row(std::pair<int, int> sig, std::optional<std::pair<Int, Int>> params, int w, PointConfig rep) {
    Size5Class row;
    row.signature = sig;
    row.parameters = params;
    row.width = w;
    row.volume_vector = volume_vector5(rep);
    row.representative = std::move(rep);
    return row;
}

std::vector<Int> sorted_abs(const VolumeVector5& v) {
    std::vector<Int> out(v.begin(), v.end());
    for (auto& x : out) x = x < 0 ? -x : x;
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

const std::vector<Size5Class>& size5_fixed_rows() {
    static const std::vector<Size5Class> rows = [] {
        std::vector<Size5Class> out;
        for (const auto& e : load_tables().size5) {
            if (e.kind != "fixed") continue;
            auto row = make_row(e.signature, std::nullopt, e.width, PointConfig(e.representative));
            std::vector<Int> vv(row.volume_vector.begin(), row.volume_vector.end()), neg;
            for (Int x : vv) neg.push_back(-x);
            // rows may be printed with the opposite orientation
            if (vv != e.volume_vector && neg != e.volume_vector)
                throw CorruptData("size-5 row volume vector does not match its representative");
            out.push_back(std::move(row));
        }
        return out;
    }();
    return rows;
}

Size5Class size5_row_21(Int p, Int q) {
    if (q < 1 || p < 0 || 2 * p > q || std::gcd(p, q) != 1)
        throw BadParameters("(2,1) row needs 0 <= p <= q/2 and gcd(p,q) = 1");
    return make_row({2, 1}, std::pair{p, q}, 1, PointConfig{{0, 0, 0}, {1, 0, 0}, {0, 0, 1}, {-1, 0, 0}, {p, q, 1}});
}

Size5Class size5_row_32(Int a, Int b) {
    if (a <= 0 || a > b || std::gcd(a, b) != 1) throw BadParameters("(3,2) row needs 0 < a <= b and gcd(a,b) = 1");
    return make_row({3, 2}, std::pair{a, b}, 1, PointConfig{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {a, b, 1}});
}

Size5Class classify5(const PointConfig& c) {
    if (c.size() != 5) throw WrongSize(5, c.size());
    if (!is_full_dimensional(c)) throw NotFullDimensional();
    if (size(c) != 5) throw NotSize5();
    auto sig = signature5(c);
    auto mags = sorted_abs(volume_vector5(c));
    auto matches = [&](const Size5Class& row) {
        return row.signature == sig && sorted_abs(row.volume_vector) == mags &&
               are_equivalent(c, row.representative).has_value();
    };
    if (sig == std::pair{2, 1}) {
        Int q = mags.back() / 2;
        for (Int p = 0; 2 * p <= q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            auto row = size5_row_21(p, q);
            if (matches(row)) return row;
        }
    } else if (sig == std::pair{3, 2}) {
        Int total = mags.back();
        for (Int a = 1; 2 * a <= total; ++a) {
            Int b = total - a;
            if (std::gcd(a, b) != 1) continue;
            auto row = size5_row_32(a, b);
            if (matches(row)) return row;
        }
    } else {
        for (const auto& row : size5_fixed_rows())
            if (matches(row)) return row;
    }
    throw NoMatch("no size-5 row matches " + format_points(c));
}

bool lemma31_admissible(Int a, Int b) {
    Int am = ((a % 3) + 3) % 3, bm = (((-b) % 3) + 3) % 3;
    return am == bm && am != 0;
}

bool lemma21_admissible(Int a, Int b, Int q) {
    if (q < 1) throw BadParameters("q must be positive");
    return ((a - 1) % q + q) % q == 0 && std::gcd(b, q) == 1;
}

std::vector<Size5Class> catalog41() {
    std::vector<Size5Class> out;
    for (const auto& row : size5_fixed_rows())
        if (row.signature == std::pair{4, 1}) out.push_back(row);
    return out;
}

}  // namespace lattice6
