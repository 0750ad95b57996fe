#pragma once

#include <span>
#include <string>
#include <vector>

#include "lattice6/om_catalog.hpp"

namespace lattice6 {

// Size-6, width-1 configurations: five points at z=0 and one at z=1, four and two, or
// three and three. Family ids look like "4+2/5.6".
std::vector<std::string> width1_family_ids();
std::size_t width1_param_count(const std::string& id);
bool width1_params_ok(const std::string& id, std::span<const Int> params);
// Throws BadParameters for an unknown id or parameters outside the constraints.
PointConfig width1_family(const std::string& id, std::span<const Int> params);
// Up to count admissible parameter tuples with entries bounded by bound, in a fixed order.
std::vector<std::vector<Int>> width1_sample_params(const std::string& id, std::size_t count, Int bound = 30);

// Pairs of unimodular triangles at z=0 and z=1 without parallel edges and of size 6 never
// realize the octahedral oriented matroid. The z=0 triangle is normalized to
// (0,0),(1,0),(0,1); the z=1 triangle ranges over [-bound, bound]^2.
bool no_octahedron_check(int bound);
// The uniform hollow record realized by no lattice polytope of size 6.
const OMRecord& octahedral_record();

}  // namespace lattice6
