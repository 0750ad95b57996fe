#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lattice6/invariants.hpp"

namespace lattice6 {

// One row of the size-5 classification.
struct Size5Class {
    std::pair<int, int> signature;
    // (p,q) for signature (2,1), (a,b) for signature (3,2).
    std::optional<std::pair<Int, Int>> parameters;
    VolumeVector5 volume_vector{};
    int width = 0;
    PointConfig representative;

    std::string describe() const;
};

// The non-parametric rows: (2,2), two (3,1) rows, the eight (4,1) rows.
const std::vector<Size5Class>& size5_fixed_rows();
// Parametric rows; throw BadParameters outside the constraints.
Size5Class size5_row_21(Int p, Int q);
Size5Class size5_row_32(Int a, Int b);

// The row equivalent to c. Throws NotSize5 when conv(c) has extra lattice points.
Size5Class classify5(const PointConfig& c);

// a == -b == +-1 (mod 3).
bool lemma31_admissible(Int a, Int b);
// a == 1 (mod q) and gcd(b, q) == 1.
bool lemma21_admissible(Int a, Int b, Int q);

// The eight signature (4,1) rows.
std::vector<Size5Class> catalog41();

}  // namespace lattice6
