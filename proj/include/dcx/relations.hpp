#pragma once

#include "dcx/generators.hpp"

namespace dcx {

/// One upper-triangle cell of the class-relation table.
///   symbol: '=' same, '<' row properly inside column, '>' row properly contains,
///           '^' incomparable with every separable function in the intersection,
///           'v' incomparable without
///   star marks cells first established here; label names the intersection,
///   ">=X" labels are one-sided. Labels naming translation-invariant classes are
///   verified in windowed semantics and rendered with a [w] mark.
struct RelationCell {
    ClassId row;
    ClassId col;
    char symbol = '=';
    bool star = false;
    std::string label;
    std::vector<std::string> row_not_col; // catalog ids: in row class, not in column class
    std::vector<std::string> col_not_row;
};

const std::vector<RelationCell>& relation_table();

/// Table-shaped ASCII report of relation_table(); compared byte-wise to the golden file.
std::string table_text();

struct SuiteResult {
    std::string name;
    int checks = 0;
    int failures = 0;
    std::vector<std::string> messages;

    bool ok() const { return failures == 0; }
    void pass() { ++checks; }
    void fail(std::string msg) {
        ++checks;
        ++failures;
        if (messages.size() < 25) messages.push_back(std::move(msg));
    }
    void expect(bool cond, const std::string& msg) {
        if (cond)
            pass();
        else
            fail(msg);
    }
};

/// classify_all on every catalog entry, cached (several suites share it).
const std::map<std::string, ClassReport>& catalog_reports();

SuiteResult catalog_fidelity_suite();
SuiteResult equivalence_suite(int trials, std::uint64_t seed);
SuiteResult dtransform_duality_suite(int trials, std::uint64_t seed);
SuiteResult descriptions_roundtrip_suite(int trials, std::uint64_t seed);
SuiteResult rank_theorem_suite(int trials, std::uint64_t seed);
SuiteResult mconvex_mm_dim3_suite(int trials, std::uint64_t seed);
SuiteResult intersection_exhaustive_n2_suite();
SuiteResult intersection_random_suite(int trials, std::uint64_t seed);
SuiteResult argmin_preservation_suite(const std::string& cls, int trials, std::uint64_t seed);
SuiteResult inclusion_suite(int trials, std::uint64_t seed);
SuiteResult table_evidence_suite();

/// All suites a `suite --name all` run executes, in order.
std::vector<SuiteResult> run_suite(const std::string& name, int trials, std::uint64_t seed);

} // namespace dcx
