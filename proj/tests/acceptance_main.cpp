// Acceptance runner: one pass/fail line per criterion, nonzero exit on any failure.
// argv[1] names the golden relation-table file.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "dcx/relations.hpp"

using namespace dcx;

namespace {

int g_failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void report(int criterion, const std::string& what, bool ok, double secs, double budget,
            const std::vector<std::string>& messages = {}) {
    bool in_budget = budget <= 0 || secs <= budget;
    bool pass = ok && in_budget;
    if (!pass) ++g_failures;
    std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << criterion << ": " << what << "  ["
              << secs << " s" << (budget > 0 ? " / budget " + std::to_string(int(budget)) + " s" : "")
              << "]\n";
    if (!ok)
        for (const auto& m : messages) std::cout << "      " << m << "\n";
    if (ok && !in_budget) std::cout << "      (budget exceeded)\n";
}

void run_suites(int criterion, const std::string& what, double budget,
                std::vector<SuiteResult> suites) {
    Timer t;
    bool ok = true;
    std::vector<std::string> messages;
    for (auto& s : suites) {
        ok = ok && s.ok();
        for (auto& m : s.messages) messages.push_back(s.name + ": " + m);
    }
    report(criterion, what, ok, t.seconds(), budget, messages);
}

} // namespace

int main(int argc, char** argv) {
    std::cout << "discrete convexity acceptance suite\n";

    { // 1. catalog fidelity
        Timer t;
        SuiteResult s = catalog_fidelity_suite();
        report(1, "catalog fidelity on " + std::to_string(catalog_ids().size()) +
                      " transcribed examples",
               s.ok(), t.seconds(), 60, s.messages);
    }
    { // 2. L-natural characterization equivalence
        Timer t;
        SuiteResult s = equivalence_suite(500, 20220701);
        report(2, "variants (a)-(f) agree on 500 seeded functions and the catalog", s.ok(),
               t.seconds(), 120, s.messages);
    }
    { // 3. D-transform duality
        Timer t;
        SuiteResult s = dtransform_duality_suite(300, 20220702);
        report(3, "multimodularity equals transformed L-natural convexity on 300 functions",
               s.ok(), t.seconds(), 0, s.messages);
    }
    { // 4. description round-trips
        Timer t;
        SuiteResult s = descriptions_roundtrip_suite(200, 20220703);
        report(4, "build-extract identity for 200 L-natural and 200 multimodular sets", s.ok(),
               t.seconds(), 0, s.messages);
    }
    { // 5. interval-rank theorem
        Timer t;
        SuiteResult s = rank_theorem_suite(200, 20220704);
        report(5, "200 interval-rank polymatroids are M-natural and multimodular, round-trip, "
                  "and the run-decomposition lemma holds up to n=6",
               s.ok(), t.seconds(), 180, s.messages);
    }
    { // 6. dimension-3 proposition and the 4-dimensional counterexample
        Timer t;
        SuiteResult s = mconvex_mm_dim3_suite(100, 20220705);
        report(6, "100 M-convex sets in Z^3 are multimodular; the 4-dim extension is not", s.ok(),
               t.seconds(), 0, s.messages);
    }
    { // 7. exhaustive n=2 intersections
        Timer t;
        SuiteResult s = intersection_exhaustive_n2_suite();
        report(7, "all 511 subsets of [0,2]^2: mm&Lnat => box, Lnat&Mnat => box, Mnat <=> mm",
               s.ok(), t.seconds(), 60, s.messages);
    }
    { // 8. randomized n=3 intersections
        Timer t;
        SuiteResult s = intersection_random_suite(200, 20220706);
        report(8, "200 randomized composite-certificate intersection trials at n=3", s.ok(),
               t.seconds(), 0, s.messages);
    }
    { // 9. argmin preservation
        Timer t;
        bool ok = true;
        std::vector<std::string> messages;
        for (const std::string& cls : {"sep", "Lnat", "Mnat", "mm", "M"}) {
            SuiteResult s = argmin_preservation_suite(cls, 100, 20220707);
            ok = ok && s.ok();
            for (auto& m : s.messages) messages.push_back(m);
        }
        report(9, "argmin of tilted functions stays in class (100 trials per class)", ok,
               t.seconds(), 0, messages);
    }
    { // 10. golden table
        Timer t;
        bool ok = false;
        std::vector<std::string> messages;
        if (argc < 2) {
            messages.push_back("no golden file argument");
        } else {
            std::ifstream in(argv[1]);
            if (!in) {
                messages.push_back(std::string("cannot open golden file ") + argv[1]);
            } else {
                std::stringstream buf;
                buf << in.rdbuf();
                std::string got = table_text();
                ok = buf.str() == got;
                if (!ok) messages.push_back("table text differs from the golden transcription");
            }
        }
        SuiteResult ev = table_evidence_suite();
        for (auto& m : ev.messages) messages.push_back(m);
        report(10, "relation table matches the golden transcription byte for byte, with evidence",
               ok && ev.ok(), t.seconds(), 0, messages);
    }

    std::cout << (g_failures == 0 ? "ALL CRITERIA PASS\n"
                                  : std::to_string(g_failures) + " criteria FAILED\n");
    return g_failures == 0 ? 0 : 1;
}
