#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lattice6/polytope.hpp"

namespace lattice6 {

// map(a[i]) == b[permutation[i]] for every i.
struct EquivalenceWitness {
    std::vector<int> permutation;
    AffineMap map;
};

// Unimodular (det +-1) equivalence of two configurations of the same size n <= 6.
// Permutations are tried in lexicographic order; the first witness is returned.
std::optional<EquivalenceWitness> are_equivalent(const PointConfig& a, const PointConfig& b);

// Lexicographically minimal volume vector over all relabelings and both signs. When the
// vector is not primitive a "/g" suffix is appended and equal keys do not imply equivalence.
std::string canonical_key(const PointConfig& c);
bool key_is_certain(const std::string& key);

// All permutations of {0..n-1} in lexicographic order (cached for n <= 6).
const std::vector<std::vector<int>>& permutations(int n);

}  // namespace lattice6
