#pragma once

#include <filesystem>
#include <initializer_list>
#include <string>
#include <vector>

#include "lattice6/exact_linalg.hpp"

namespace lattice6 {

// Ordered list of pairwise distinct lattice points with bounded coordinates.
class PointConfig {
public:
    PointConfig() = default;
    PointConfig(std::vector<IntVec3> points);  // NOLINT: implicit on purpose
    PointConfig(std::initializer_list<IntVec3> points);

    std::size_t size() const { return pts_.size(); }
    const IntVec3& operator[](std::size_t i) const { return pts_[i]; }
    const std::vector<IntVec3>& points() const { return pts_; }
    auto begin() const { return pts_.begin(); }
    auto end() const { return pts_.end(); }

    // Point i removed, order preserved.
    PointConfig without(std::size_t i) const;
    // Points permuted so that result[k] = (*this)[perm[k]].
    PointConfig permuted(std::span<const int> perm) const;
    PointConfig subset(std::span<const int> indices) const;
    PointConfig mapped(const AffineMap& m) const;

    friend bool operator==(const PointConfig&, const PointConfig&) = default;

private:
    std::vector<IntVec3> pts_;
};

PointConfig delete_point(const PointConfig& config, std::size_t i);

// Dimension of the affine span (0..3).
int affine_rank(std::span<const IntVec3> pts);
inline int affine_rank(const PointConfig& c) { return affine_rank(std::span<const IntVec3>(c.points())); }
bool is_full_dimensional(const PointConfig& c);

// Supporting half-space normal.x >= offset with primitive inward normal.
struct Facet {
    IntVec3 normal;
    Int offset;
    std::vector<int> on;  // indices of configuration points on the facet

    friend bool operator==(const Facet& a, const Facet& b) { return a.normal == b.normal && a.offset == b.offset; }
};

std::vector<Facet> hull_facets(const PointConfig& c);

// Every lattice point of conv(c), sorted lexicographically.
std::vector<IntVec3> lattice_points(const PointConfig& c);
std::size_t size(const PointConfig& c);
std::vector<IntVec3> vertices(const PointConfig& c);
std::vector<int> vertex_indices(const PointConfig& c);
// Lattice points strictly inside every facet inequality.
std::vector<IntVec3> interior_points(const PointConfig& c);

// Normalized volume of conv(c): a unimodular tetrahedron has volume 1.
Int normalized_volume(const PointConfig& c);

// First lattice point of conv(c) that is not one of c's points, if any.
bool find_extra_lattice_point(const PointConfig& c, IntVec3& extra);

// Points file: one "x y z" per line; blank lines and lines starting with '#' are skipped.
PointConfig parse_points(const std::string& text);
PointConfig read_points_file(const std::filesystem::path& path);
std::string format_points(const PointConfig& c);

}  // namespace lattice6
