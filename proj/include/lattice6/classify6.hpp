#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lattice6/tables.hpp"

namespace lattice6 {

// Case letter of a size-6 configuration: A five coplanar; B/C a (3,1) coplanarity with the
// other two points on opposite / the same side; D/E likewise for (2,2); F a (2,1)
// collinearity only; G/H no coplanarity with one / two interior points. '-' otherwise.
char case_of(const PointConfig& c);

// The table row equivalent to c, or nullptr.
const PolytopeClass* table_class_of(const PointConfig& c);

struct Rejection {
    std::string candidate;
    std::string reason;
};

struct CaseReport {
    char name = '?';
    std::size_t candidates_examined = 0;
    std::vector<PolytopeClass> classes_found;
    std::vector<Rejection> rejected;
    std::map<std::string, std::size_t> rejection_counts;
    // Subcase bookkeeping, e.g. "B(1,3) raw options" -> 44.
    std::map<std::string, std::size_t> counters;
    // Accepted parameter tuples per subcase, e.g. "B(1,3)" -> {(1,8),(1,2),(1,5)}.
    std::map<std::string, std::vector<std::vector<Int>>> accepted;
};

CaseReport run_case_a();
CaseReport run_case_b();
CaseReport run_case_c();
CaseReport run_case_d();
CaseReport run_case_e();
CaseReport run_case_f();
std::pair<CaseReport, CaseReport> run_case_gh(int jobs = 1);

struct Classification {
    std::vector<PolytopeClass> classes;  // sorted by case, then table number
    std::vector<CaseReport> reports;
    std::vector<std::string> problems;   // anything that did not match the tables
};

// cases: any subset of "ABCDEFGH".
Classification classify(const std::string& cases, int jobs = 1);
inline Classification classify_all(int jobs = 1) { return classify("ABCDEFGH", jobs); }

std::string classes_to_json(const std::vector<PolytopeClass>& classes);
std::vector<PolytopeClass> classes_from_json(const std::string& text);
std::string classes_to_csv(const std::vector<PolytopeClass>& classes);

}  // namespace lattice6
