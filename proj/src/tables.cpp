#include "lattice6/tables.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "lattice6/equivalence.hpp"
#include "lattice6/errors.hpp"
#include "lattice6/width1.hpp"

namespace lattice6 {

// Defined in the generated resource file.
extern const char* const kEmbeddedTablesJson;

const std::string& embedded_tables_json() {
    static const std::string text(kEmbeddedTablesJson);
    return text;
}

const PolytopeClass& TableBundle::by_id(const std::string& id) const {
    for (const auto& c : classes)
        if (c.id == id) return c;
    throw Error("no table row '" + id + "'");
}

const OMCell* TableBundle::cell_of(const std::string& label) const {
    for (const auto& cell : om_cells)
        if (std::find(cell.labels.begin(), cell.labels.end(), label) != cell.labels.end()) return &cell;
    return nullptr;
}

namespace {

using nlohmann::json;

std::string fnv1a64(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::vector<IntVec3> points_of(const json& j) {
    std::vector<IntVec3> out;
    for (const auto& p : j) out.push_back({p.at(0).get<Int>(), p.at(1).get<Int>(), p.at(2).get<Int>()});
    return out;
}

}  // namespace

TableBundle parse_tables(const std::string& text) {
    TableBundle b;
    try {
        json doc = json::parse(text);
        if (doc.at("format") != "lattice6-tables") throw CorruptData("unexpected table format");
        b.version = doc.at("version").get<int>();
        b.checksum = doc.at("checksum").get<std::string>();
        const json& t = doc.at("tables");
        if (fnv1a64(t.dump()) != b.checksum) throw CorruptData("table checksum mismatch");

        for (const auto& r : t.at("classes")) {
            PolytopeClass c;
            c.id = r.at("id").get<std::string>();
            c.om_label = r.at("om_label").get<std::string>();
            c.dps = r.at("dps").get<bool>();
            auto vv = r.at("volume_vector").get<std::vector<Int>>();
            if (vv.size() != 15) throw CorruptData(c.id + ": volume vector must have 15 entries");
            std::copy(vv.begin(), vv.end(), c.volume_vector.begin());
            c.width = r.at("width").get<Int>();
            c.functional = parse_functional(r.at("functional").get<std::string>());
            auto pts = points_of(r.at("representative"));
            if (pts.size() != 6) throw CorruptData(c.id + ": representative must have 6 points");
            c.representative = PointConfig(pts);
            b.classes.push_back(std::move(c));
        }
        for (const auto& r : t.at("size5")) {
            Size5Entry e;
            auto sig = r.at("signature").get<std::vector<int>>();
            e.signature = {sig.at(0), sig.at(1)};
            e.kind = r.at("kind").get<std::string>();
            e.width = r.at("width").get<int>();
            if (e.kind == "fixed") {
                e.volume_vector = r.at("volume_vector").get<std::vector<Int>>();
                e.representative = points_of(r.at("representative"));
            } else {
                e.pattern = r.at("representative_pattern").get<std::string>();
            }
            b.size5.push_back(std::move(e));
        }
        for (const auto& r : t.at("om_cells")) {
            OMCell cell;
            cell.coplanarity = coplanarity_class_from_string(r.at("coplanarity").get<std::string>());
            cell.vertices = r.at("vertices").get<int>();
            cell.interior = r.at("interior").get<int>();
            cell.labels = r.at("labels").get<std::vector<std::string>>();
            cell.dps_labels = r.at("dps").get<std::vector<std::string>>();
            b.om_cells.push_back(std::move(cell));
        }
        for (const auto& r : t.at("result1")) {
            Result1Row row;
            row.coplanarity = coplanarity_class_from_string(r.at("coplanarity").get<std::string>());
            if (!r.at("interior").is_null()) row.interior = r.at("interior").get<int>();
            row.polytopes = r.at("polytopes").get<int>();
            row.dps = r.at("dps").get<int>();
            row.oms_realized = r.at("oms_realized").get<int>();
            row.oms_total = r.at("oms_total").get<int>();
            b.result1.push_back(row);
        }
        for (const auto& r : t.at("result2")) {
            Result2Row row;
            row.vertices = r.at("vertices").get<int>();
            row.interior = r.at("interior").get<int>();
            row.shape = r.at("shape").get<std::string>();
            row.polytopes = r.at("polytopes").get<int>();
            row.dps = r.at("dps").get<int>();
            row.oms_realized = r.at("oms_realized").get<int>();
            row.oms_total = r.at("oms_total").get<int>();
            b.result2.push_back(row);
        }
        for (const auto& r : t.at("width1_families")) {
            Width1FamilySpec s;
            s.id = r.at("id").get<std::string>();
            s.table = r.at("table").get<std::string>();
            s.om_label = r.at("om_label").get<std::string>();
            s.params = r.at("params").get<std::vector<std::string>>();
            s.constraint = r.at("constraint").get<std::string>();
            s.sample = r.at("sample").get<std::vector<Int>>();
            b.width1_families.push_back(std::move(s));
        }
        for (const auto& [label, r] : t.at("om_label_map").items()) {
            LabelSource s;
            s.source = r.at("source").get<std::string>();
            if (s.source == "class") s.id = r.at("id").get<std::string>();
            else if (s.source == "width1") {
                s.family = r.at("family").get<std::string>();
                s.params = r.at("params").get<std::vector<Int>>();
            } else if (s.source != "cell") throw CorruptData("unknown label source '" + s.source + "'");
            b.om_label_map[label] = std::move(s);
        }
    } catch (const CorruptData&) {
        throw;
    } catch (const std::exception& e) {
        throw CorruptData(std::string("table data: ") + e.what());
    }
    if (b.classes.size() != 76) throw CorruptData("expected 76 class rows");
    return b;
}

const TableBundle& load_tables() {
    static const TableBundle bundle = parse_tables(embedded_tables_json());
    return bundle;
}

namespace {

int label_prefix(const std::string& label) { return std::stoi(label.substr(0, label.find('.'))); }
int label_suffix(const std::string& label) { return std::stoi(label.substr(label.find('.') + 1)); }

bool cell_has(const OMCell& cell, const OMRecord& r, const std::string& label) {
    bool dps = std::find(cell.dps_labels.begin(), cell.dps_labels.end(), label) != cell.dps_labels.end();
    return r.stats.coplanarity == cell.coplanarity && r.stats.vertex_count == cell.vertices &&
           r.stats.interior_count == cell.interior && r.stats.dps == dps && r.n_circuits == label_prefix(label);
}

}  // namespace

LabelResolution resolve_om_labels(const TableBundle& b) {
    LabelResolution res;
    auto witness_record = [&](const LabelSource& s) -> const OMRecord* {
        if (s.source == "class") return match_om(b.by_id(s.id).representative).record;
        return match_om(width1_family(s.family, s.params)).record;
    };
    std::set<const OMRecord*> taken;
    for (const auto& [label, src] : b.om_label_map) {
        if (src.source == "cell") continue;
        const OMRecord* r = witness_record(src);
        res.record[label] = r;
        res.method[label] = "witness";
        if (!taken.insert(r).second) res.conflicts.push_back(label + ": record " + r->id + " already claimed");
        const OMCell* cell = b.cell_of(label);
        if (!cell) res.conflicts.push_back(label + ": not in any om cell");
        else if (!cell_has(*cell, *r, label))
            res.conflicts.push_back(label + ": record " + r->id + " statistics differ from its om cell");
    }
    // every class row and every width-one family sample must agree with the witness labels
    for (const auto& c : b.classes) {
        auto it = res.record.find(c.om_label);
        const OMRecord* r = match_om(c.representative).record;
        if (it == res.record.end()) res.conflicts.push_back(c.id + ": label " + c.om_label + " has no witness");
        else if (it->second != r) res.conflicts.push_back(c.id + ": label " + c.om_label + " realizes " + r->id);
    }
    for (const auto& f : b.width1_families) {
        const OMRecord* r = match_om(width1_family(f.id, f.sample)).record;
        auto it = res.record.find(f.om_label);
        if (it == res.record.end() || it->second != r)
            res.conflicts.push_back(f.id + ": sample realizes " + r->id);
    }
    // remaining labels: decided by cell, circuit count and dps; ties broken by sub-index order
    std::map<std::tuple<const OMCell*, int, bool>, std::vector<std::string>> groups;
    for (const auto& [label, src] : b.om_label_map) {
        if (src.source != "cell") continue;
        const OMCell* cell = b.cell_of(label);
        if (!cell) {
            res.conflicts.push_back(label + ": not in any om cell");
            continue;
        }
        bool dps = std::find(cell->dps_labels.begin(), cell->dps_labels.end(), label) != cell->dps_labels.end();
        groups[{cell, label_prefix(label), dps}].push_back(label);
    }
    for (auto& [key, labels] : groups) {
        const OMCell* cell = std::get<0>(key);
        std::vector<const OMRecord*> cands;
        for (const auto& r : enumerate_oms())
            if (!taken.count(&r) && cell_has(*cell, r, labels.front())) cands.push_back(&r);
        std::sort(labels.begin(), labels.end(),
                  [](const auto& x, const auto& y) { return label_suffix(x) < label_suffix(y); });
        if (cands.size() != labels.size()) {
            std::string msg = "labels";
            for (const auto& l : labels) msg += " " + l;
            res.conflicts.push_back(msg + ": " + std::to_string(cands.size()) + " candidate records");
            continue;
        }
        for (std::size_t i = 0; i < labels.size(); ++i) {
            res.record[labels[i]] = cands[i];
            res.method[labels[i]] = labels.size() == 1 ? "cell" : "cell+order";
            taken.insert(cands[i]);
        }
        if (labels.size() > 1) {
            std::string msg;
            for (std::size_t i = 0; i < labels.size(); ++i)
                msg += (i ? ", " : "") + labels[i] + " -> " + cands[i]->id;
            res.ambiguities.push_back(msg + " (indistinguishable by statistics; assigned in order)");
        }
    }
    return res;
}

const LabelResolution& om_labels() {
    static const LabelResolution res = resolve_om_labels(load_tables());
    return res;
}

std::string table_label(const OMRecord& r) {
    for (const auto& [label, rec] : om_labels().record)
        if (rec == &r) return label;
    return "";
}

std::string hull_shape(const PointConfig& c) {
    auto vi = vertex_indices(c);
    switch (vi.size()) {
        case 4: return "tetrahedron";
        case 5: {
            for (const auto& f : hull_facets(c)) {
                int on = 0;
                for (int i : f.on)
                    if (std::find(vi.begin(), vi.end(), i) != vi.end()) ++on;
                if (on == 4) return "quadrangular pyramid";
            }
            return "triangular bipyramid";
        }
        default: return "other";
    }
}

namespace {

Int expected_gcd(const std::string& id) {
    static const std::map<std::string, Int> exceptions{{"A.1", 2}, {"A.2", 2}, {"B.14", 3}, {"B.15", 3}, {"C.3", 3}};
    auto it = exceptions.find(id);
    return it == exceptions.end() ? 1 : it->second;
}

}  // namespace

ValidationReport validate_tables(const TableBundle& b) {
    ValidationReport rep;
    auto bad = [&](const std::string& id, const std::string& what) { rep.mismatches.push_back(id + ": " + what); };
    std::map<std::string, const OMRecord*> label_record;
    for (const auto& c : b.classes) {
        ++rep.rows_checked;
        const auto& rc = c.representative;
        if (size(rc) != 6) bad(c.id, "size " + std::to_string(size(rc)));
        auto vv = volume_vector6(rc);
        VolumeVector6 neg;
        for (std::size_t i = 0; i < 15; ++i) neg[i] = -c.volume_vector[i];
        if (vv == neg && vv != c.volume_vector) ++rep.orientation_flips;
        else if (vv != c.volume_vector) bad(c.id, "volume vector");
        auto w = width(rc);
        if (w.width != c.width) bad(c.id, "width " + std::to_string(w.width));
        // a few printed functionals do not attain the width on the printed coordinates
        if (Int wf = width_along(rc, c.functional); wf != c.width)
            rep.notes.push_back(c.id + ": printed functional " + format_functional(c.functional) + " gives " +
                                std::to_string(wf) + ", width is " + std::to_string(c.width));
        if (is_dps(rc) != c.dps) bad(c.id, "dps");
        Int g = gcd_all(vv);
        if (g != expected_gcd(c.id)) bad(c.id, "volume vector gcd " + std::to_string(g));
        const OMRecord* r = match_om(rc).record;
        auto [it, fresh] = label_record.emplace(c.om_label, r);
        if (!fresh && it->second != r) bad(c.id, "shares label " + c.om_label + " with a different oriented matroid");
        const OMCell* cell = b.cell_of(c.om_label);
        if (!cell) bad(c.id, "label " + c.om_label + " not in the om table");
        else if (cell->vertices != r->stats.vertex_count || cell->interior != r->stats.interior_count ||
                 cell->coplanarity != r->stats.coplanarity)
            bad(c.id, "statistics differ from the om cell of " + c.om_label);
    }
    if (rep.orientation_flips)
        rep.notes.push_back(std::to_string(rep.orientation_flips) + " rows print the negated volume vector");

    // result1: per coplanarity class
    const auto& oms = enumerate_oms();
    for (const auto& row : b.result1) {
        int polys = 0, dps = 0, total = 0;
        std::set<std::string> labels;
        for (const auto& c : b.classes) {
            if (coplanarity_class(c.representative) != row.coplanarity) continue;
            if (row.interior && static_cast<int>(interior_points(c.representative).size()) != *row.interior) continue;
            ++polys;
            dps += c.dps;
            labels.insert(c.om_label);
        }
        for (const auto& r : oms)
            if (r.stats.coplanarity == row.coplanarity && (!row.interior || r.stats.interior_count == *row.interior))
                ++total;
        std::string tag = "result1 " + to_string(row.coplanarity) + (row.interior ? " i=" + std::to_string(*row.interior) : "");
        if (polys != row.polytopes) bad(tag, "polytopes " + std::to_string(polys));
        if (dps != row.dps) bad(tag, "dps " + std::to_string(dps));
        if (static_cast<int>(labels.size()) != row.oms_realized) bad(tag, "realized oms " + std::to_string(labels.size()));
        if (total != row.oms_total)
            rep.notes.push_back(tag + ": printed total " + std::to_string(row.oms_total) + ", the om table has " +
                                std::to_string(total));
    }
    // result2: per vertex/interior/shape
    for (const auto& row : b.result2) {
        int polys = 0, dps = 0;
        std::set<std::string> labels;
        for (const auto& c : b.classes) {
            const auto& rc = c.representative;
            if (static_cast<int>(vertices(rc).size()) != row.vertices) continue;
            if (static_cast<int>(interior_points(rc).size()) != row.interior) continue;
            if (row.shape != "any" && hull_shape(rc) != row.shape) continue;
            ++polys;
            dps += c.dps;
            labels.insert(c.om_label);
        }
        std::string tag = "result2 v=" + std::to_string(row.vertices) + " i=" + std::to_string(row.interior) + " " + row.shape;
        if (polys != row.polytopes) bad(tag, "polytopes " + std::to_string(polys));
        if (dps != row.dps) bad(tag, "dps " + std::to_string(dps));
        if (static_cast<int>(labels.size()) != row.oms_realized) bad(tag, "realized oms " + std::to_string(labels.size()));
    }
    // om cells: sizes
    for (const auto& cell : b.om_cells) {
        int n = 0;
        for (const auto& r : oms)
            if (r.stats.coplanarity == cell.coplanarity && r.stats.vertex_count == cell.vertices &&
                r.stats.interior_count == cell.interior)
                ++n;
        if (n != static_cast<int>(cell.labels.size()))
            bad("om cell " + to_string(cell.coplanarity) + " v=" + std::to_string(cell.vertices) + " i=" +
                    std::to_string(cell.interior),
                std::to_string(n) + " records for " + std::to_string(cell.labels.size()) + " labels");
    }
    return rep;
}

}  // namespace lattice6
