#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "lattice6/polytope.hpp"

namespace lattice6 {

using VolumeVector6 = std::array<Int, 15>;
using VolumeVector5 = std::array<Int, 5>;

// All C(n,4) determinants over 4-subsets in lexicographic order.
std::vector<Int> volume_vector(const PointConfig& c);
VolumeVector6 volume_vector6(const PointConfig& c);
// (w2345, -w1345, w1245, -w1235, w1234); the entries sum to zero.
VolumeVector5 volume_vector5(const PointConfig& c);
// (positives, negatives) of volume_vector5, larger count first.
std::pair<int, int> signature5(const PointConfig& c);

struct WidthResult {
    Int width = 0;
    IntVec3 functional{};  // primitive; first nonzero coefficient positive
};

// Exact lattice width. Among minimizing functionals the lexicographically smallest
// (after sign normalization) is returned.
WidthResult width(const PointConfig& c);
// max - min of f over the points.
Int width_along(const PointConfig& c, const IntVec3& f);
// Every nonzero integer functional f with |f.d_k| <= w on the difference vectors of the
// chosen independent quadruple. Any functional of width <= w is in this list.
std::vector<IntVec3> width_candidates(const PointConfig& c, Int w);

// All pairwise sums a+b of lattice points of conv(c), a == b allowed, are distinct.
bool is_dps(const PointConfig& c);

struct SignedCircuit {
    std::vector<int> positive;  // 0-based indices, sorted
    std::vector<int> negative;

    std::size_t support_size() const { return positive.size() + negative.size(); }
    // (i, j) with i >= j.
    std::pair<int, int> signature() const;
    int sign_of(int e) const;
    friend auto operator<=>(const SignedCircuit&, const SignedCircuit&) = default;
};

// Minimal affinely dependent subsets with the signs of their dependence, the smallest
// support index positive. Sorted.
std::vector<SignedCircuit> circuits(const PointConfig& c);

enum class CoplanarityClass { FiveCoplanar, C31, C22, C21, None };
std::string to_string(CoplanarityClass k);
CoplanarityClass coplanarity_class_from_string(const std::string& s);
CoplanarityClass coplanarity_class(const PointConfig& c);
// Same precedence, decided from a circuit list of six elements.
CoplanarityClass coplanarity_class(const std::vector<SignedCircuit>& circs, int n);

// "x-z", "x-2y", "2x+y-3z"; "0" for the zero functional.
std::string format_functional(const IntVec3& f);
IntVec3 parse_functional(const std::string& s);

}  // namespace lattice6
