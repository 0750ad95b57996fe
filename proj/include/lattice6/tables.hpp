#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lattice6/invariants.hpp"
#include "lattice6/om_catalog.hpp"

namespace lattice6 {

// One row of the size-6, width > 1 classification.
struct PolytopeClass {
    std::string id;        // "A.1" .. "H.12"
    std::string om_label;  // label as printed in the tables, without the dps star
    VolumeVector6 volume_vector{};
    Int width = 0;
    IntVec3 functional{};
    PointConfig representative;
    bool dps = false;
};

struct Size5Entry {
    std::pair<int, int> signature;
    std::string kind;  // "fixed", "pq" or "ab"
    std::vector<Int> volume_vector;  // fixed rows only
    int width = 0;
    std::vector<IntVec3> representative;  // fixed rows only
    std::string pattern;                  // parametric rows only
};

struct OMCell {
    CoplanarityClass coplanarity;
    int vertices = 0;
    int interior = 0;
    std::vector<std::string> labels;
    std::vector<std::string> dps_labels;
};

struct Result1Row {
    CoplanarityClass coplanarity;
    std::optional<int> interior;
    int polytopes = 0, dps = 0, oms_realized = 0, oms_total = 0;
};

struct Result2Row {
    int vertices = 0, interior = 0;
    std::string shape;
    int polytopes = 0, dps = 0, oms_realized = 0, oms_total = 0;
};

struct Width1FamilySpec {
    std::string id, table, om_label;
    std::vector<std::string> params;
    std::string constraint;
    std::vector<Int> sample;
};

// Where a printed OM label is realized: a class row, a width-one family member, or only
// its om cell.
struct LabelSource {
    std::string source;  // "class", "width1", "cell"
    std::string id;
    std::string family;
    std::vector<Int> params;
};

struct TableBundle {
    int version = 0;
    std::string checksum;
    std::vector<PolytopeClass> classes;
    std::vector<Size5Entry> size5;
    std::vector<OMCell> om_cells;
    std::vector<Result1Row> result1;
    std::vector<Result2Row> result2;
    std::vector<Width1FamilySpec> width1_families;
    std::map<std::string, LabelSource> om_label_map;

    const PolytopeClass& by_id(const std::string& id) const;
    const OMCell* cell_of(const std::string& label) const;
};

const std::string& embedded_tables_json();
// Throws CorruptData on schema or checksum failure.
TableBundle parse_tables(const std::string& json_text);
// The embedded bundle, parsed once.
const TableBundle& load_tables();

// Printed label -> catalog record.
struct LabelResolution {
    std::map<std::string, const OMRecord*> record;
    std::map<std::string, std::string> method;  // "witness", "cell", "cell+order"
    std::vector<std::string> ambiguities;
    std::vector<std::string> conflicts;
};
LabelResolution resolve_om_labels(const TableBundle& b);
const LabelResolution& om_labels();
// Printed label of a catalog record, or "" if unresolved.
std::string table_label(const OMRecord& r);

struct ValidationReport {
    std::vector<std::string> mismatches;
    std::vector<std::string> notes;
    int rows_checked = 0;
    int orientation_flips = 0;  // rows printed with the globally negated volume vector
    bool ok() const { return mismatches.empty(); }
};
ValidationReport validate_tables(const TableBundle& b);

// "tetrahedron", "quadrangular pyramid", "triangular bipyramid" or "other" (six or more vertices).
std::string hull_shape(const PointConfig& c);

}  // namespace lattice6
