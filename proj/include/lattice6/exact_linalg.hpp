#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>

#include <boost/rational.hpp>

namespace lattice6 {

using Int = std::int64_t;
using Wide = __int128;
using IntVec3 = std::array<Int, 3>;
using Rational = boost::rational<Int>;

// Coordinates beyond this bound are rejected so 128-bit determinants cannot overflow.
inline constexpr Int kCoordinateBound = 10000;

inline IntVec3 operator+(const IntVec3& a, const IntVec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
inline IntVec3 operator-(const IntVec3& a, const IntVec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
inline IntVec3 operator*(Int k, const IntVec3& a) { return {k * a[0], k * a[1], k * a[2]}; }
inline Int dot(const IntVec3& a, const IntVec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
IntVec3 cross(const IntVec3& a, const IntVec3& b);

Int det3(const IntVec3& a, const IntVec3& b, const IntVec3& c);

// Signed normalized volume: determinant of the 4x4 matrix with a top row of ones and
// columns p1..p4. Computed in 128 bits; exact for |coordinates| <= kCoordinateBound.
Int det4(const IntVec3& p1, const IntVec3& p2, const IntVec3& p3, const IntVec3& p4);

Int gcd_all(std::span<const Int> values);
bool is_primitive(const IntVec3& v);
// v divided by the gcd of its entries; the zero vector is returned unchanged.
IntVec3 primitive_part(const IntVec3& v);

// Integer division rounding toward -inf / +inf.
Int floor_div(Int a, Int b);
Int ceil_div(Int a, Int b);

using IntMatrix3 = std::array<std::array<Int, 3>, 3>;

struct AffineMap {
    IntMatrix3 matrix{};
    IntVec3 translation{};
    Int determinant = 0;

    static AffineMap identity();
    // Builds the map and caches its determinant.
    static AffineMap make(const IntMatrix3& m, const IntVec3& t);

    IntVec3 apply(const IntVec3& p) const;
    bool unimodular() const { return determinant == 1 || determinant == -1; }
    AffineMap compose(const AffineMap& inner) const;  // this o inner
};

struct RationalAffineMap {
    std::array<std::array<Rational, 3>, 3> matrix;
    std::array<Rational, 3> translation;

    std::array<Rational, 3> apply(const IntVec3& p) const;
    Rational determinant() const;
    bool integral() const;
    // Requires integral().
    AffineMap to_integer() const;
    std::string to_string() const;
};

// The unique affine map sending src[i] to dst[i]. Throws DegenerateSource if det4(src) == 0.
RationalAffineMap solve_affine(std::span<const IntVec3, 4> src, std::span<const IntVec3, 4> dst);

// Determinant of a square integer matrix of order <= 4 (row-major, n*n entries).
Wide small_det(const Wide* m, int n);

// A vector x with f.x == 0 and g.x == 1, if one exists. Used to complete lattice bases.
bool solve_two_forms(const IntVec3& f, const IntVec3& g, IntVec3& x);

std::string to_string(const IntVec3& v);

}  // namespace lattice6
