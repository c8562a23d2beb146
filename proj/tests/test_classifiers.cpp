#include <doctest.h>

#include "dcx/geometry.hpp"
#include "dcx/relations.hpp"

using namespace dcx;

namespace {

DiscreteFunction abs_sum_on_box(Coord radius) {
    std::map<Point, Rat> e;
    for (const auto& x : Box({-radius, -radius}, {radius, radius}).lattice_points()) {
        Coord a = x[0] < 0 ? -x[0] : x[0];
        Coord b = x[1] < 0 ? -x[1] : x[1];
        e[x] = Rat(a + b);
    }
    return DiscreteFunction(2, std::move(e));
}

DiscreteFunction product_on_unit_box() {
    std::map<Point, Rat> e;
    for (const auto& x : Box({0, 0}, {1, 1}).lattice_points()) e[x] = Rat(x[0] * x[1]);
    return DiscreteFunction(2, std::move(e));
}

DiscreteSet mkset(int dim, std::vector<Point> pts) {
    return DiscreteSet(dim, std::set<Point>(pts.begin(), pts.end()));
}

} // namespace

TEST_CASE("separability") {
    Verdict yes = is_separable(abs_sum_on_box(2));
    CHECK(yes.status == Status::Yes);
    REQUIRE(yes.parts.has_value());
    // the parts reproduce the function
    CHECK(yes.parts->eval({-2, 1}) == ExtVal(Rat(3)));

    Verdict no = is_separable(product_on_unit_box());
    CHECK(no.status == Status::No);
    REQUIRE(no.witness.has_value());
    CHECK(no.witness->inequality == "mixed_difference");
    CHECK(recheck_witness(product_on_unit_box(), *no.witness));

    Verdict nb = is_separable(indicator(mkset(2, {{1, 0}, {0, 1}})));
    CHECK(nb.status == Status::No);
    CHECK(nb.witness->inequality == "dom_box");
}

TEST_CASE("integral convexity") {
    CHECK(is_integrally_convex(indicator(mkset(2, Box({0, 0}, {1, 1}).lattice_points()))).status ==
          Status::Yes);
    Verdict no = is_integrally_convex(indicator(mkset(2, {{0, 0}, {2, 1}})));
    CHECK(no.status == Status::No);
    REQUIRE(no.witness.has_value());
    CHECK(recheck_witness(indicator(mkset(2, {{0, 0}, {2, 1}})), *no.witness));
    CHECK(is_integrally_convex(paper_example("fig1a").object).status == Status::Yes);

    // a non-convex value pattern on a convex domain
    std::map<Point, Rat> e;
    for (Coord t = -2; t <= 2; ++t) e[{t}] = Rat(t == 0 ? 5 : 0);
    CHECK(is_integrally_convex(DiscreteFunction(1, e)).status == Status::No);
}

TEST_CASE("submodularity") {
    CHECK(is_submodular(paper_example("l_line").object).status == Status::Yes);
    Verdict no = is_submodular(indicator(mkset(2, {{1, 0}, {0, 1}})));
    CHECK(no.status == Status::No);
    REQUIRE(no.witness.has_value());
    CHECK(no.witness->points == std::vector<Point>{{0, 1}, {1, 0}});
    GenSpec spec;
    spec.dim = 3;
    spec.radius = 2;
    spec.seed = 12;
    CHECK(is_submodular(gen_separable(spec)).status == Status::Yes);
}

TEST_CASE("L-natural variants on the catalog counterexamples") {
    DiscreteFunction l_line = paper_example("l_line").object;
    DiscreteFunction fig1b = paper_example("fig1b").object;
    for (LnatVariant v : {LnatVariant::A, LnatVariant::B, LnatVariant::C, LnatVariant::D,
                          LnatVariant::E, LnatVariant::F}) {
        CHECK(is_lnat(l_line, v).status == Status::Yes);
        CHECK(is_lnat(fig1b, v).status == Status::No);
    }
    // the classic violating pair re-evaluates as a violation
    Witness classic;
    classic.inequality = "discrete_midpoint";
    classic.points = {{1, 2, 3}, {2, 2, 2}};
    CHECK(recheck_witness(fig1b, classic));

    DiscreteSet box = mkset(2, Box({0, 0}, {2, 1}).lattice_points());
    CHECK(is_lnat(indicator(box), LnatVariant::A).status == Status::Yes);
}

TEST_CASE("L-convexity is windowed") {
    Verdict l = is_l(paper_example("l_line").object);
    CHECK(l.status == Status::YesWithinWindow);
    REQUIRE(l.slope.has_value());
    CHECK(*l.slope == Rat(0));

    CHECK(is_l(paper_example("box2").object).status == Status::No);
    CHECK(is_l(paper_example("mm_line").object).status == Status::No);

    // window too thin to contain a shift pair
    DiscreteSet single = mkset(2, {{0, 0}});
    CHECK(is_l(indicator(single, single.bounding_box())).status == Status::Unknown);
}

TEST_CASE("M-natural exchange") {
    CHECK(is_mnat(paper_example("fig1b").object).status == Status::Yes);
    Verdict no = is_mnat(indicator(mkset(2, {{0, 0}, {1, 1}})));
    CHECK(no.status == Status::No);
    REQUIRE(no.witness.has_value());
    CHECK(no.witness->points == std::vector<Point>{{1, 1}, {0, 0}});
    CHECK(no.witness->indices == std::vector<Coord>{1});
    CHECK(is_mnat(indicator(mkset(2, {{1, 0}, {0, 1}}))).status == Status::Yes);
}

TEST_CASE("M-convexity") {
    CHECK(is_m(paper_example("fig1a_smax").object).status == Status::Yes);
    CHECK(is_m(indicator(mkset(2, {{2, 0}, {1, 1}, {0, 2}}))).status == Status::Yes);
    Verdict no = is_m(paper_example("fig1a").object);
    CHECK(no.status == Status::No);
    CHECK(no.witness->inequality == "component_sum");
}

TEST_CASE("multimodularity via the transform") {
    CHECK(is_multimodular(paper_example("mm_line").object).status == Status::Yes);
    Verdict no = is_multimodular(paper_example("l_line").object);
    CHECK(no.status == Status::No);
    REQUIRE(no.witness.has_value());
    CHECK(recheck_witness(paper_example("l_line").object, *no.witness));
    CHECK(is_multimodular(paper_example("fig1a").object).status == Status::Yes);

    // direct route agrees on finite window boxes
    DiscreteFunction q = paper_example("quad_rank1").object;
    REQUIRE(multimodular_direct_applicable(q));
    CHECK(is_multimodular_direct(q).status == is_multimodular(q).status);
}

TEST_CASE("discrete midpoint classes") {
    DiscreteFunction a = paper_example("gdmc_not_ddmc").object;
    CHECK(is_global_dmc(a).status == Status::Yes);
    Verdict ddmc_no = is_directed_dmc(a);
    CHECK(ddmc_no.status == Status::No);
    CHECK(ddmc_no.witness->points == std::vector<Point>{{0, 0, 0}, {2, 1, -1}});

    DiscreteFunction b = paper_example("quad_rank1").object;
    CHECK(is_directed_dmc(b).status == Status::Yes);
    Verdict gdmc_no = is_global_dmc(b);
    CHECK(gdmc_no.status == Status::No);
    // the classic witness violates as well
    Witness classic;
    classic.inequality = "global_midpoint";
    classic.points = {{1, 0, 0}, {0, 1, 2}};
    CHECK(recheck_witness(b, classic));

    DiscreteFunction c = paper_example("quad_2sep").object;
    Witness classic2;
    classic2.inequality = "global_midpoint";
    classic2.points = {{0, 0, 0}, {2, 1, -1}};
    CHECK(recheck_witness(c, classic2));
    CHECK(is_global_dmc(c).status == Status::No);
}

TEST_CASE("certificates") {
    CatalogEntry l2nat = paper_example("l2nat_sum");
    Verdict ok = verify_certificate(l2nat.object, l2nat.certs.at(ClassId::L2nat), ClassId::L2nat);
    CHECK(ok.status == Status::Yes);

    CatalogEntry cb = paper_example("common_bases");
    CHECK(verify_certificate(cb.object, cb.certs.at(ClassId::M2), ClassId::M2).status ==
          Status::Yes);

    // wrong parts: recombination mismatch is reported distinctly
    Certificate wrong = l2nat.certs.at(ClassId::L2nat);
    wrong.part2 = indicator(mkset(3, {{0, 0, 0}, {2, 0, 0}}));
    Verdict bad = verify_certificate(l2nat.object, wrong, ClassId::L2nat);
    CHECK(bad.status == Status::No);
    CHECK(bad.witness->inequality == "recombination");

    // not-L-natural parts: component failure is reported distinctly
    Certificate badpart;
    badpart.kind = CertKind::Minkowski;
    badpart.part1 = indicator(mkset(3, {{0, 0, 0}, {1, 2, 1}}));  // midpoint gap
    badpart.part2 = indicator(mkset(3, {{0, 0, 0}}));
    DiscreteFunction target = infimal_convolution(badpart.part1, badpart.part2);
    Verdict comp = verify_certificate(target, badpart, ClassId::L2nat);
    CHECK(comp.status == Status::No);
    CHECK(comp.witness->inequality == "component_class");
}

TEST_CASE("composite search and refuters") {
    Verdict m2nat_no = refute_or_search_composite(mkset(2, {{0, 0}, {1, 1}}), ClassId::M2nat);
    CHECK(m2nat_no.status == Status::No);
    CHECK(m2nat_no.witness->inequality == "comparable_box");

    Verdict l2nat_no = refute_or_search_composite(mkset(2, {{1, 0}, {0, 1}}), ClassId::L2nat);
    CHECK(l2nat_no.status == Status::No);

    DiscreteSet box = mkset(2, Box({0, 0}, {2, 1}).lattice_points());
    CHECK(refute_or_search_composite(box, ClassId::L2nat).status == Status::Yes);
    CHECK(refute_or_search_composite(box, ClassId::M2nat).status == Status::Yes);

    // the guard produces Unknown, never a wrong answer
    DiscreteSet wide = mkset(2, {{0, 0}, {5, 5}});
    CHECK(refute_or_search_composite(wide, ClassId::L2nat, 4).status == Status::Unknown);
}

TEST_CASE("classify_all on boxes and the figure sets") {
    ClassReport box = classify_all(mkset(2, Box({0, 0}, {1, 1}).lattice_points()),
                                   Box({-1, -1}, {2, 2}));
    for (ClassId c : {ClassId::Sep, ClassId::Lnat, ClassId::Mnat, ClassId::Mm, ClassId::Gdmc,
                      ClassId::Ddmc, ClassId::L2nat, ClassId::M2nat, ClassId::Int})
        CHECK(box.at(c).status == Status::Yes);

    const ClassReport& fig1a = catalog_reports().at("fig1a");
    CHECK(fig1a.at(ClassId::Mnat).status == Status::Yes);
    CHECK(fig1a.at(ClassId::Mm).status == Status::Yes);
    CHECK(fig1a.at(ClassId::Lnat).status == Status::No);
    CHECK(fig1a.at(ClassId::Sep).status == Status::No);
    CHECK(fig1a.at(ClassId::Int).status == Status::Yes);

    const ClassReport& shat = catalog_reports().at("shat");
    CHECK(shat.at(ClassId::M).status == Status::Yes);
    CHECK(shat.at(ClassId::Lnat).status == Status::No);
    CHECK(shat.at(ClassId::Mm).status == Status::No);
}

TEST_CASE("witnesses re-evaluate on random rejections") {
    int rejected = 0;
    for (int t = 0; t < 40; ++t) {
        GenSpec spec;
        spec.dim = 2 + t % 2;
        spec.radius = 2;
        spec.seed = 7000 + std::uint64_t(t);
        DiscreteFunction f = gen_noise(spec);
        for (auto verdict : {is_lnat(f, LnatVariant::A), is_mnat(f), is_submodular(f),
                             is_global_dmc(f), is_directed_dmc(f)}) {
            if (verdict.status == Status::No && verdict.witness) {
                ++rejected;
                CHECK(recheck_witness(f, *verdict.witness));
            }
        }
    }
    CHECK(rejected > 20); // noise is almost never convex in any sense
}
