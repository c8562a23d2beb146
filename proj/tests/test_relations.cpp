#include <doctest.h>

#include "dcx/relations.hpp"

using namespace dcx;

namespace {
const RelationCell& cell_at(ClassId row, ClassId col) {
    for (const auto& c : relation_table())
        if (c.row == row && c.col == col) return c;
    throw std::runtime_error("cell not found");
}
} // namespace

TEST_CASE("table cells match the transcription") {
    CHECK(relation_table().size() == 13 + 78); // diagonal plus upper triangle

    const RelationCell& a = cell_at(ClassId::Lnat, ClassId::Mnat);
    CHECK(a.symbol == '^');
    CHECK(a.label == "sep");
    CHECK_FALSE(a.star);

    const RelationCell& b = cell_at(ClassId::L, ClassId::M);
    CHECK(b.symbol == 'v');
    CHECK(b.label == "none");

    const RelationCell& c = cell_at(ClassId::Mnat, ClassId::Mm);
    CHECK(c.symbol == '^');
    CHECK(c.star);
    CHECK(c.label == ">sep");

    const RelationCell& d = cell_at(ClassId::L2, ClassId::Gdmc);
    CHECK(d.symbol == 'v');
    CHECK(d.star);
    CHECK(d.label == ">=L");

    const RelationCell& e = cell_at(ClassId::M2, ClassId::Mnat);
    CHECK(e.symbol == 'v');
    CHECK(e.star);
    CHECK(e.label == "M");

    const RelationCell& g = cell_at(ClassId::Gdmc, ClassId::Ddmc);
    CHECK(g.symbol == '^');
    CHECK_FALSE(g.star);
    CHECK(g.label == ">=Lnat");
}

TEST_CASE("table text is stable and complete") {
    std::string t = table_text();
    CHECK(t.find("sep") != std::string::npos);
    CHECK(t.find("ddmc") != std::string::npos);
    CHECK(t.find("^* >sep") != std::string::npos);
    CHECK(t.find("v none[w]") != std::string::npos);
    CHECK(t == table_text()); // byte-stable
}

TEST_CASE("catalog fidelity") {
    SuiteResult r = catalog_fidelity_suite();
    for (const auto& m : r.messages) MESSAGE(m);
    CHECK(r.ok());
}

TEST_CASE("table evidence re-confirms") {
    SuiteResult r = table_evidence_suite();
    for (const auto& m : r.messages) MESSAGE(m);
    CHECK(r.ok());
}

TEST_CASE("short randomized suites") {
    for (auto suite : {equivalence_suite(10, 555), dtransform_duality_suite(10, 556),
                       descriptions_roundtrip_suite(6, 557), rank_theorem_suite(6, 558),
                       mconvex_mm_dim3_suite(6, 559), intersection_random_suite(4, 560),
                       inclusion_suite(4, 561)}) {
        for (const auto& m : suite.messages) MESSAGE(suite.name, ": ", m);
        CHECK(suite.ok());
    }
    for (const std::string& cls : {"sep", "Lnat", "Mnat", "mm", "M", "L"}) {
        SuiteResult r = argmin_preservation_suite(cls, 5, 562);
        for (const auto& m : r.messages) MESSAGE(m);
        CHECK(r.ok());
    }
}

TEST_CASE("inclusion monotonicity on random objects") {
    // no recognizer pair may violate the inclusion diagram
    int checked = 0;
    for (std::uint64_t seed = 200; seed < 230; ++seed) {
        GenSpec spec;
        spec.dim = 2 + int(seed % 2);
        spec.radius = 2;
        spec.seed = seed;
        DiscreteFunction f = seed % 3 == 0   ? gen_noise(spec)
                             : seed % 3 == 1 ? gen_lnat_function(spec)
                                             : gen_mnat_function(spec);
        CHECK_NOTHROW(classify_all(f)); // classify_all enforces the diagram internally
        ++checked;
    }
    CHECK(checked == 30);
}
