#pragma once

#include <optional>

#include "lattice6/polytope.hpp"

namespace lattice6 {

struct WhiteType {
    Int p = 0;
    Int q = 1;
    friend bool operator==(const WhiteType&, const WhiteType&) = default;
};

// conv{(0,0,0), (1,0,0), (0,0,1), (p,q,1)}.
PointConfig white_tetrahedron(Int p, Int q);

// Primitive edges plus width one along a functional constant on two opposite edges.
// Throws NotFullDimensional for a flat tetrahedron and WrongSize unless 4 points.
bool is_empty_tetrahedron(const PointConfig& t);
bool is_empty_tetrahedron(const IntVec3& a, const IntVec3& b, const IntVec3& c, const IntVec3& d);

// Canonical (p, q) of an empty tetrahedron, nullopt when not empty.
std::optional<WhiteType> white_type(const PointConfig& t);

// min{p, q-p, p^-1, q-p^-1} mod q; q = 1 gives 0 and q = 2 gives 1.
Int canonical_p(Int p, Int q);
bool types_equivalent(const WhiteType& a, const WhiteType& b);

}  // namespace lattice6
