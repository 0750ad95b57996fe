#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lattice6/classify6.hpp"
#include "lattice6/empty_tetra.hpp"
#include "lattice6/equivalence.hpp"
#include "lattice6/errors.hpp"
#include "lattice6/size5.hpp"

using namespace lattice6;

namespace {

constexpr int kOk = 0, kFail = 1, kUsage = 2;

std::string points_inline(const std::vector<IntVec3>& pts) {
    std::string s;
    for (const auto& p : pts) s += (s.empty() ? "" : " ") + to_string(p);
    return s.empty() ? "none" : s;
}

template <class V>
std::string ints(const V& v) {
    std::string s = "(";
    bool first = true;
    for (auto x : v) {
        s += (first ? "" : ",") + std::to_string(x);
        first = false;
    }
    return s + ")";
}

int cmd_analyze(const std::string& path) {
    PointConfig c = read_points_file(path);
    if (c.size() < 4 || c.size() > 8) throw InvalidConfig("analyze takes 4 to 8 points");
    if (!is_full_dimensional(c)) throw NotFullDimensional();
    auto sz = size(c);
    auto w = width(c);
    std::cout << "points: " << c.size() << "\n";
    std::cout << "size: " << sz << "\n";
    std::cout << "vertices: " << points_inline(vertices(c)) << "\n";
    std::cout << "interior: " << points_inline(interior_points(c)) << "\n";
    std::cout << "width: " << w.width << " along " << format_functional(w.functional) << "\n";
    std::cout << "dps: " << (is_dps(c) ? "yes" : "no") << "\n";
    if (c.size() == 5) {
        std::cout << "volume vector: " << ints(volume_vector5(c)) << "\n";
        auto sig = signature5(c);
        std::cout << "signature: (" << sig.first << "," << sig.second << ")\n";
    } else {
        std::cout << "volume vector: " << ints(volume_vector(c)) << "\n";
    }
    if (c.size() >= 5) std::cout << "coplanarity: " << to_string(coplanarity_class(c)) << "\n";
    if (c.size() == 4) {
        if (auto t = white_type(c)) std::cout << "size 4, width " << w.width << ", White type (" << t->p << "," << t->q << ")\n";
        else std::cout << "not an empty tetrahedron\n";
    } else if (c.size() == 5 && sz == 5) {
        std::cout << "size-5 row: " << classify5(c).describe() << "\n";
    } else if (c.size() == 6) {
        auto m = match_om(c);
        std::string label = table_label(*m.record);
        std::cout << "oriented matroid: " << m.record->id << (label.empty() ? "" : " (table label " + label + ")") << "\n";
        const PolytopeClass* row = sz == 6 && w.width > 1 ? table_class_of(c) : nullptr;
        if (row)
            std::cout << "class " << row->id << ", width " << row->width << ", functional "
                      << format_functional(row->functional) << ", " << (row->dps ? "dps" : "non-dps") << "\n";
        else
            std::cout << "not in classification (width 1 or size != 6)\n";
    }
    return kOk;
}

int cmd_classify(const std::string& which, const std::string& out, const std::string& format, int jobs, bool verbose) {
    std::string cases = which == "all" ? "ABCDEFGH" : which;
    auto res = classify(cases, jobs);
    for (const auto& rep : res.reports) {
        std::cout << "case " << rep.name << ": " << rep.classes_found.size() << " classes, " << rep.candidates_examined
                  << " candidates examined\n";
        if (verbose) {
            for (const auto& [k, n] : rep.counters) std::cout << "  " << k << ": " << n << "\n";
            for (const auto& [k, n] : rep.rejection_counts) std::cout << "  rejected, " << k << ": " << n << "\n";
        }
    }
    std::map<Int, int> hist;
    int dps = 0;
    for (const auto& c : res.classes) {
        ++hist[c.width];
        dps += c.dps;
    }
    std::cout << res.classes.size() << " classes (";
    bool first = true;
    for (const auto& [w, n] : hist) {
        std::cout << (first ? "" : ", ") << n << " width-" << w;
        first = false;
    }
    std::cout << "), " << dps << " dps\n";
    if (!out.empty()) {
        std::ofstream f(out);
        if (!f) throw Error("cannot write " + out);
        f << (format == "csv" ? classes_to_csv(res.classes) : classes_to_json(res.classes));
    }
    for (const auto& p : res.problems) std::cout << "problem: " << p << "\n";
    return res.problems.empty() ? kOk : kFail;
}

int cmd_equiv(const std::string& a_path, const std::string& b_path) {
    PointConfig a = read_points_file(a_path), b = read_points_file(b_path);
    if (a.size() != b.size()) throw WrongSize(a.size(), b.size());
    auto w = are_equivalent(a, b);
    if (!w) {
        std::cout << "inequivalent\n";
        return kFail;
    }
    std::cout << "equivalent\npermutation:";
    for (int i : w->permutation) std::cout << ' ' << i + 1;
    std::cout << "\nmatrix:\n";
    for (const auto& row : w->map.matrix) std::cout << "  " << row[0] << ' ' << row[1] << ' ' << row[2] << "\n";
    std::cout << "translation: " << to_string(w->map.translation) << "\ndeterminant: " << w->map.determinant << "\n";
    return kOk;
}

std::string circuit_text(const SignedCircuit& sc) {
    std::string s = "(";
    for (int e : sc.positive) s += std::to_string(e + 1);
    s += ",";
    for (int e : sc.negative) s += std::to_string(e + 1);
    return s + ")";
}

int cmd_catalog(const std::string& what, const std::string& format) {
    if (what == "oms") {
        const auto& oms = enumerate_oms();
        if (format == "json") {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& r : oms) {
                nlohmann::json circs = nlohmann::json::array();
                for (const auto& sc : r.circuits) circs.push_back({{"positive", sc.positive}, {"negative", sc.negative}});
                arr.push_back({{"id", r.id},
                               {"label", table_label(r)},
                               {"circuits", circs},
                               {"vertices", r.stats.vertex_count},
                               {"interior", r.stats.interior_count},
                               {"coplanarity", to_string(r.stats.coplanarity)},
                               {"dps", r.stats.dps},
                               {"uniform", r.uniform},
                               {"realized_by_width_gt1", r.realized_by_width_gt1}});
            }
            std::cout << arr.dump(1) << "\n";
        } else {
            for (const auto& r : oms) {
                std::cout << r.id << " label " << (table_label(r).empty() ? "-" : table_label(r)) << " v" << r.stats.vertex_count
                          << " i" << r.stats.interior_count << " " << to_string(r.stats.coplanarity)
                          << (r.stats.dps ? " dps" : "") << (r.uniform ? " uniform" : "")
                          << (r.realized_by_width_gt1 ? " realized" : "") << " circuits";
                for (const auto& sc : r.circuits) std::cout << ' ' << circuit_text(sc);
                std::cout << "\n";
            }
            std::cout << oms.size() << " oriented matroids\n";
        }
    } else if (what == "classes") {
        const auto& rows = load_tables().classes;
        if (format == "json") std::cout << classes_to_json(rows);
        else if (format == "csv") std::cout << classes_to_csv(rows);
        else {
            for (const auto& r : rows)
                std::cout << r.id << " om " << r.om_label << " width " << r.width << " " << format_functional(r.functional)
                          << (r.dps ? " dps" : "") << " vv " << ints(r.volume_vector) << "\n";
            std::cout << rows.size() << " classes\n";
        }
    } else if (what == "size5") {
        for (const auto& e : load_tables().size5) {
            std::cout << "(" << e.signature.first << "," << e.signature.second << ") width " << e.width << " ";
            if (e.kind == "fixed") std::cout << "vv " << ints(e.volume_vector) << " rep " << points_inline(e.representative);
            else std::cout << "rep " << e.pattern;
            std::cout << "\n";
        }
        std::cout << size5_fixed_rows().size() << " fixed rows, 2 parametric rows\n";
    } else {
        throw CLI::ValidationError("--what", "must be oms, classes or size5");
    }
    return kOk;
}

int cmd_validate() {
    auto rep = validate_tables(load_tables());
    std::cout << rep.rows_checked << " rows checked, " << rep.mismatches.size() << " mismatches\n";
    for (const auto& m : rep.mismatches) std::cout << "mismatch: " << m << "\n";
    for (const auto& n : rep.notes) std::cout << "note: " << n << "\n";
    for (const auto& a : om_labels().ambiguities) std::cout << "ambiguous: " << a << "\n";
    for (const auto& c : om_labels().conflicts) std::cout << "conflict: " << c << "\n";
    return rep.ok() && om_labels().conflicts.empty() ? kOk : kFail;
}

int default_jobs() {
    if (const char* env = std::getenv("LATTICE6_JOBS")) {
        try {
            int j = std::stoi(env);
            if (j > 0) return j;
        } catch (...) {
        }
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lattice 3-polytopes of size six: analysis, classification and catalogs"};
    app.require_subcommand(1);
    app.fallthrough();
    int jobs = default_jobs();
    bool verbose = false;
    app.add_option("--jobs,-j", jobs, "worker threads (default LATTICE6_JOBS or 1)")->check(CLI::PositiveNumber);
    app.add_flag("--verbose,-v", verbose, "print per-subcase counters");

    std::string file_a, file_b;
    auto* analyze = app.add_subcommand("analyze", "invariants of a points file");
    analyze->add_option("file", file_a, "points file")->required();

    std::string which = "all", out, format = "json";
    auto* cls = app.add_subcommand("classify", "run the case analysis and compare with the tables");
    cls->add_option("--case", which, "A..H, any combination, or all")->check([](const std::string& s) {
        if (s == "all") return std::string();
        if (s.empty() || s.find_first_not_of("ABCDEFGH") != std::string::npos) return std::string("letters A..H or all");
        return std::string();
    });
    cls->add_option("--out", out, "export path");
    cls->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    auto* eq = app.add_subcommand("equiv", "unimodular equivalence of two points files");
    eq->add_option("a", file_a)->required();
    eq->add_option("b", file_b)->required();

    std::string what = "oms", cat_format = "text";
    auto* cat = app.add_subcommand("catalog", "dump a catalog");
    cat->add_option("--what", what, "oms, classes or size5")->check(CLI::IsMember({"oms", "classes", "size5"}));
    cat->add_option("--format", cat_format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));

    auto* val = app.add_subcommand("validate", "recompute every derivable table column");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }
    try {
        if (*analyze) return cmd_analyze(file_a);
        if (*cls) return cmd_classify(which, out, format, jobs, verbose);
        if (*eq) return cmd_equiv(file_a, file_b);
        if (*cat) return cmd_catalog(what, cat_format);
        if (*val) return cmd_validate();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
