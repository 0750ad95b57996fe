#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lattice6/invariants.hpp"

namespace lattice6 {

// A rank-2 vector configuration dual to six affine points: lines in angular order, each
// with its count of elements on the positive and negative ray, plus loops at the origin.
struct Rank2Dual {
    int loops = 0;
    std::vector<std::pair<int, int>> lines;
};

struct OMStatistics {
    int vertex_count = 0;
    int interior_count = 0;
    CoplanarityClass coplanarity = CoplanarityClass::None;
    bool dps = false;
    friend bool operator==(const OMStatistics&, const OMStatistics&) = default;
};

struct OMRecord {
    std::string id;  // "N.M": N circuits, M our own sub-index (not the printed labels)
    int n_circuits = 0;
    int sub_index = 0;
    std::vector<SignedCircuit> circuits;  // in canonical labeling
    std::string key;
    OMStatistics stats;
    bool uniform = false;
    bool realized_by_width_gt1 = false;
    Rank2Dual dual;
};

// Rank-2 duals satisfying the line-size and totally-cyclic constraints.
std::vector<Rank2Dual> enumerate_rank2_duals();
// Primal circuits of a dual, elements numbered in line order then loops.
std::vector<SignedCircuit> dual_circuits(const Rank2Dual& d);

// The 55 acyclic oriented matroids of six points in rank 4 without parallel elements,
// sorted by (N, key). Computed once.
const std::vector<OMRecord>& enumerate_oms();

OMStatistics om_statistics(const std::vector<SignedCircuit>& circuits);
inline OMStatistics om_statistics(const OMRecord& r) { return om_statistics(r.circuits); }

// Canonical circuit key of a six-element circuit list; perm receives a relabeling
// (element i -> perm[i]) that realizes it.
std::string circuit_key(const std::vector<SignedCircuit>& circuits, std::vector<int>* perm = nullptr);

struct OMMatch {
    const OMRecord* record = nullptr;
    std::vector<int> relabeling;  // configuration index i -> record element relabeling[i]
};
// Throws NoMatch if the circuits of c are not in the catalog.
OMMatch match_om(const PointConfig& c);

}  // namespace lattice6
