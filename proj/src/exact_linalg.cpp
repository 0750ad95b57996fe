#include "lattice6/exact_linalg.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>

#include "lattice6/errors.hpp"

namespace lattice6 {

IntVec3 cross(const IntVec3& a, const IntVec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

namespace {

Wide det3w(const IntVec3& a, const IntVec3& b, const IntVec3& c) {
    Wide a0 = a[0], a1 = a[1], a2 = a[2];
    return a0 * (Wide(b[1]) * c[2] - Wide(b[2]) * c[1]) - a1 * (Wide(b[0]) * c[2] - Wide(b[2]) * c[0]) +
           a2 * (Wide(b[0]) * c[1] - Wide(b[1]) * c[0]);
}

}  // namespace

Int det3(const IntVec3& a, const IntVec3& b, const IntVec3& c) { return static_cast<Int>(det3w(a, b, c)); }

Int det4(const IntVec3& p1, const IntVec3& p2, const IntVec3& p3, const IntVec3& p4) {
    return static_cast<Int>(det3w(p2 - p1, p3 - p1, p4 - p1));
}

Int gcd_all(std::span<const Int> values) {
    Int g = 0;
    for (Int v : values) g = std::gcd(g, v);
    return g;
}

bool is_primitive(const IntVec3& v) { return gcd_all(v) == 1; }

IntVec3 primitive_part(const IntVec3& v) {
    Int g = gcd_all(v);
    if (g == 0) return v;
    return {v[0] / g, v[1] / g, v[2] / g};
}

Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

Int ceil_div(Int a, Int b) { return -floor_div(-a, b); }

AffineMap AffineMap::identity() { return make({{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}, {0, 0, 0}); }

AffineMap AffineMap::make(const IntMatrix3& m, const IntVec3& t) {
    AffineMap a;
    a.matrix = m;
    a.translation = t;
    a.determinant = det3({m[0][0], m[1][0], m[2][0]}, {m[0][1], m[1][1], m[2][1]}, {m[0][2], m[1][2], m[2][2]});
    return a;
}

IntVec3 AffineMap::apply(const IntVec3& p) const {
    IntVec3 r = translation;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[i] += matrix[i][j] * p[j];
    return r;
}

AffineMap AffineMap::compose(const AffineMap& inner) const {
    IntMatrix3 m{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) m[i][j] += matrix[i][k] * inner.matrix[k][j];
    return make(m, apply(inner.translation));
}

std::array<Rational, 3> RationalAffineMap::apply(const IntVec3& p) const {
    std::array<Rational, 3> r = translation;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[i] += matrix[i][j] * p[j];
    return r;
}

Rational RationalAffineMap::determinant() const {
    const auto& m = matrix;
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

bool RationalAffineMap::integral() const {
    for (const auto& row : matrix)
        for (const auto& x : row)
            if (x.denominator() != 1) return false;
    for (const auto& x : translation)
        if (x.denominator() != 1) return false;
    return true;
}

AffineMap RationalAffineMap::to_integer() const {
    IntMatrix3 m{};
    IntVec3 t{};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) m[i][j] = matrix[i][j].numerator();
        t[i] = translation[i].numerator();
    }
    return AffineMap::make(m, t);
}

std::string RationalAffineMap::to_string() const {
    std::ostringstream os;
    auto put = [&](const Rational& r) {
        os << r.numerator();
        if (r.denominator() != 1) os << '/' << r.denominator();
    };
    for (int i = 0; i < 3; ++i) {
        os << '[';
        for (int j = 0; j < 3; ++j) {
            if (j) os << ' ';
            put(matrix[i][j]);
        }
        os << " | ";
        put(translation[i]);
        os << "]";
        if (i < 2) os << ' ';
    }
    return os.str();
}

RationalAffineMap solve_affine(std::span<const IntVec3, 4> src, std::span<const IntVec3, 4> dst) {
    // M S = D with S, D the difference-vector matrices (columns); M = D adj(S) / det(S).
    IntVec3 s[3], d[3];
    for (int k = 0; k < 3; ++k) {
        s[k] = src[k + 1] - src[0];
        d[k] = dst[k + 1] - dst[0];
    }
    Int det = det3(s[0], s[1], s[2]);
    if (det == 0) throw DegenerateSource();
    // adj(S)[k][i]: inverse rows are cross products of the other columns.
    IntVec3 inv_rows[3] = {cross(s[1], s[2]), cross(s[2], s[0]), cross(s[0], s[1])};
    RationalAffineMap m;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            Int num = 0;
            for (int k = 0; k < 3; ++k) num += d[k][i] * inv_rows[k][j];
            m.matrix[i][j] = Rational(num, det);
        }
    }
    for (int i = 0; i < 3; ++i) {
        Rational t(dst[0][i]);
        for (int j = 0; j < 3; ++j) t -= m.matrix[i][j] * src[0][j];
        m.translation[i] = t;
    }
    return m;
}

Wide small_det(const Wide* m, int n) {
    if (n == 0) return 1;
    if (n == 1) return m[0];
    if (n == 2) return m[0] * m[3] - m[1] * m[2];
    Wide total = 0;
    Wide minor[16];
    for (int c = 0; c < n; ++c) {
        if (m[c] == 0) continue;
        int idx = 0;
        for (int r = 1; r < n; ++r)
            for (int cc = 0; cc < n; ++cc)
                if (cc != c) minor[idx++] = m[r * n + cc];
        Wide sub = small_det(minor, n - 1);
        total += (c % 2 ? -1 : 1) * m[c] * sub;
    }
    return total;
}

namespace {

// Extended gcd: returns g = gcd(a,b) >= 0 with a*x + b*y = g.
Int ext_gcd(Int a, Int b, Int& x, Int& y) {
    Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    x = old_s;
    y = old_t;
    return old_r;
}

// Column operation on the pair (i, j) of a 2x3 system with its transform U, making
// entry row[j] zero and row[i] the gcd.
void combine_columns(Int a[2][3], Int u[3][3], int row, int i, int j) {
    Int x, y;
    Int p = a[row][i], q = a[row][j];
    if (q == 0) return;
    Int g = ext_gcd(p, q, x, y);
    Int pg = p / g, qg = q / g;
    // New column i = x*col_i + y*col_j, new column j = -qg*col_i + pg*col_j (det 1).
    for (int r = 0; r < 2; ++r) {
        Int ci = a[r][i], cj = a[r][j];
        a[r][i] = x * ci + y * cj;
        a[r][j] = -qg * ci + pg * cj;
    }
    for (int r = 0; r < 3; ++r) {
        Int ci = u[r][i], cj = u[r][j];
        u[r][i] = x * ci + y * cj;
        u[r][j] = -qg * ci + pg * cj;
    }
}

}  // namespace

bool solve_two_forms(const IntVec3& f, const IntVec3& g, IntVec3& x) {
    Int a[2][3] = {{f[0], f[1], f[2]}, {g[0], g[1], g[2]}};
    Int u[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    combine_columns(a, u, 0, 0, 1);
    combine_columns(a, u, 0, 0, 2);
    combine_columns(a, u, 1, 1, 2);
    // Now a = [[h00,0,0],[h10,h11,0]]; find y with a y = (0,1).
    Int y[3] = {0, 0, 0};
    if (a[0][0] != 0) {
        if (a[1][1] != 1 && a[1][1] != -1) return false;
        y[1] = a[1][1];
    } else {
        Int s, t;
        Int gg = ext_gcd(a[1][0], a[1][1], s, t);
        if (gg != 1) return false;
        y[0] = s;
        y[1] = t;
    }
    for (int r = 0; r < 3; ++r) x[r] = u[r][0] * y[0] + u[r][1] * y[1] + u[r][2] * y[2];
    return dot(f, x) == 0 && dot(g, x) == 1;
}

std::string to_string(const IntVec3& v) {
    return "(" + std::to_string(v[0]) + "," + std::to_string(v[1]) + "," + std::to_string(v[2]) + ")";
}

}  // namespace lattice6
