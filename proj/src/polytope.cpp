#include "lattice6/polytope.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "lattice6/errors.hpp"

namespace lattice6 {

namespace {

void validate(const std::vector<IntVec3>& pts) {
    for (const auto& p : pts)
        for (Int x : p)
            if (x > kCoordinateBound || x < -kCoordinateBound)
                throw InvalidConfig("coordinate out of range in " + to_string(p));
    std::vector<IntVec3> sorted = pts;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InvalidConfig("duplicate point " + to_string(*std::adjacent_find(sorted.begin(), sorted.end())));
}

}  // namespace

PointConfig::PointConfig(std::vector<IntVec3> points) : pts_(std::move(points)) { validate(pts_); }

PointConfig::PointConfig(std::initializer_list<IntVec3> points) : pts_(points) { validate(pts_); }

PointConfig PointConfig::without(std::size_t i) const {
    if (i >= pts_.size()) throw IndexOutOfRange(i, pts_.size());
    std::vector<IntVec3> r = pts_;
    r.erase(r.begin() + static_cast<std::ptrdiff_t>(i));
    return PointConfig(std::move(r));
}

PointConfig PointConfig::permuted(std::span<const int> perm) const {
    if (perm.size() != pts_.size()) throw WrongSize(pts_.size(), perm.size());
    std::vector<IntVec3> r(pts_.size());
    for (std::size_t k = 0; k < perm.size(); ++k) r[k] = pts_.at(static_cast<std::size_t>(perm[k]));
    return PointConfig(std::move(r));
}

PointConfig PointConfig::subset(std::span<const int> indices) const {
    std::vector<IntVec3> r;
    for (int i : indices) {
        if (i < 0 || static_cast<std::size_t>(i) >= pts_.size()) throw IndexOutOfRange(static_cast<std::size_t>(i), pts_.size());
        r.push_back(pts_[static_cast<std::size_t>(i)]);
    }
    return PointConfig(std::move(r));
}

PointConfig PointConfig::mapped(const AffineMap& m) const {
    std::vector<IntVec3> r;
    r.reserve(pts_.size());
    for (const auto& p : pts_) r.push_back(m.apply(p));
    return PointConfig(std::move(r));
}

PointConfig delete_point(const PointConfig& config, std::size_t i) { return config.without(i); }

int affine_rank(std::span<const IntVec3> pts) {
    if (pts.empty()) return -1;
    std::vector<IntVec3> d;
    for (std::size_t i = 1; i < pts.size(); ++i) d.push_back(pts[i] - pts[0]);
    const std::size_t m = d.size();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            for (std::size_t k = j + 1; k < m; ++k)
                if (det3(d[i], d[j], d[k]) != 0) return 3;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (cross(d[i], d[j]) != IntVec3{0, 0, 0}) return 2;
    for (const auto& v : d)
        if (v != IntVec3{0, 0, 0}) return 1;
    return 0;
}

bool is_full_dimensional(const PointConfig& c) { return affine_rank(c) == 3; }

std::vector<Facet> hull_facets(const PointConfig& c) {
    const auto& p = c.points();
    const int n = static_cast<int>(p.size());
    if (n < 4 || !is_full_dimensional(c)) throw NotFullDimensional();
    std::vector<Facet> facets;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                IntVec3 nrm = cross(p[j] - p[i], p[k] - p[i]);
                if (nrm == IntVec3{0, 0, 0}) continue;
                nrm = primitive_part(nrm);
                Int off = dot(nrm, p[i]);
                bool any_pos = false, any_neg = false;
                for (int m = 0; m < n; ++m) {
                    Int v = dot(nrm, p[m]) - off;
                    if (v > 0) any_pos = true;
                    if (v < 0) any_neg = true;
                }
                if (any_pos && any_neg) continue;
                if (any_neg) {
                    nrm = -1 * nrm;
                    off = -off;
                }
                Facet f{nrm, off, {}};
                if (std::find(facets.begin(), facets.end(), f) != facets.end()) continue;
                for (int m = 0; m < n; ++m)
                    if (dot(nrm, p[m]) == off) f.on.push_back(m);
                facets.push_back(std::move(f));
            }
    return facets;
}

namespace {

template <class Visit>
void scan_lattice_points(const PointConfig& c, const std::vector<Facet>& facets, Visit&& visit) {
    IntVec3 lo = c[0], hi = c[0];
    for (const auto& q : c)
        for (int k = 0; k < 3; ++k) {
            lo[k] = std::min(lo[k], q[k]);
            hi[k] = std::max(hi[k], q[k]);
        }
    for (Int x = lo[0]; x <= hi[0]; ++x)
        for (Int y = lo[1]; y <= hi[1]; ++y) {
            Int zlo = lo[2], zhi = hi[2];
            for (const auto& f : facets) {
                Int rest = f.offset - f.normal[0] * x - f.normal[1] * y;
                Int nz = f.normal[2];
                if (nz > 0) {
                    zlo = std::max(zlo, ceil_div(rest, nz));
                } else if (nz < 0) {
                    zhi = std::min(zhi, floor_div(rest, nz));
                } else if (rest > 0) {
                    zlo = 1;
                    zhi = 0;
                }
                if (zlo > zhi) break;
            }
            for (Int z = zlo; z <= zhi; ++z)
                if (!visit(IntVec3{x, y, z})) return;
        }
}

}  // namespace

std::vector<IntVec3> lattice_points(const PointConfig& c) {
    auto facets = hull_facets(c);
    std::vector<IntVec3> out;
    scan_lattice_points(c, facets, [&](const IntVec3& q) {
        out.push_back(q);
        return true;
    });
    return out;  // scan order is already lexicographic
}

std::size_t size(const PointConfig& c) { return lattice_points(c).size(); }

bool find_extra_lattice_point(const PointConfig& c, IntVec3& extra) {
    auto facets = hull_facets(c);
    std::set<IntVec3> own(c.begin(), c.end());
    bool found = false;
    scan_lattice_points(c, facets, [&](const IntVec3& q) {
        if (own.count(q)) return true;
        extra = q;
        found = true;
        return false;
    });
    return found;
}

std::vector<int> vertex_indices(const PointConfig& c) {
    auto facets = hull_facets(c);
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(c.size()); ++i) {
        std::vector<IntVec3> normals;
        for (const auto& f : facets)
            if (std::find(f.on.begin(), f.on.end(), i) != f.on.end()) normals.push_back(f.normal);
        bool vertex = false;
        for (std::size_t a = 0; a < normals.size() && !vertex; ++a)
            for (std::size_t b = a + 1; b < normals.size() && !vertex; ++b)
                for (std::size_t d = b + 1; d < normals.size() && !vertex; ++d)
                    if (det3(normals[a], normals[b], normals[d]) != 0) vertex = true;
        if (vertex) out.push_back(i);
    }
    return out;
}

std::vector<IntVec3> vertices(const PointConfig& c) {
    std::vector<IntVec3> out;
    for (int i : vertex_indices(c)) out.push_back(c[static_cast<std::size_t>(i)]);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<IntVec3> interior_points(const PointConfig& c) {
    auto facets = hull_facets(c);
    std::vector<IntVec3> out;
    scan_lattice_points(c, facets, [&](const IntVec3& q) {
        bool strict = true;
        for (const auto& f : facets)
            if (dot(f.normal, q) == f.offset) strict = false;
        if (strict) out.push_back(q);
        return true;
    });
    return out;
}

Int normalized_volume(const PointConfig& c) {
    auto facets = hull_facets(c);
    auto vi = vertex_indices(c);
    const IntVec3& apex = c[0];
    Int total = 0;
    for (const auto& f : facets) {
        std::vector<IntVec3> poly;
        for (int i : f.on)
            if (std::find(vi.begin(), vi.end(), i) != vi.end()) poly.push_back(c[static_cast<std::size_t>(i)]);
        // angular order around poly[0], which is a vertex of the facet polygon
        const IntVec3 base = poly[0];
        std::sort(poly.begin() + 1, poly.end(), [&](const IntVec3& a, const IntVec3& b) {
            return dot(cross(a - base, b - base), f.normal) > 0;
        });
        for (std::size_t k = 1; k + 1 < poly.size(); ++k) {
            Int v = det4(apex, base, poly[k], poly[k + 1]);
            total += v < 0 ? -v : v;
        }
    }
    return total;
}

PointConfig parse_points(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    std::vector<IntVec3> pts;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        IntVec3 p{};
        for (int k = 0; k < 3; ++k) {
            long long v;
            if (!(ls >> v)) throw ParseError(lineno, "expected three integers");
            p[k] = v;
        }
        std::string rest;
        if (ls >> rest) throw ParseError(lineno, "unexpected trailing text '" + rest + "'");
        pts.push_back(p);
    }
    if (pts.empty()) throw ParseError(lineno, "no points");
    try {
        return PointConfig(std::move(pts));
    } catch (const InvalidConfig& e) {
        throw ParseError(lineno, e.what());
    }
}

PointConfig read_points_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_points(ss.str());
}

std::string format_points(const PointConfig& c) {
    std::string out;
    for (const auto& p : c)
        out += std::to_string(p[0]) + " " + std::to_string(p[1]) + " " + std::to_string(p[2]) + "\n";
    return out;
}

}  // namespace lattice6
