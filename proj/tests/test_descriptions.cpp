#include <doctest.h>

#include "dcx/descriptions.hpp"
#include "dcx/generators.hpp"

using namespace dcx;

namespace {
IntervalRank fig1a_rank() {
    IntervalRank r;
    r.n = 3;
    r.r[{1, 1}] = 3;
    r.r[{2, 2}] = 3;
    r.r[{3, 3}] = 3;
    r.r[{1, 2}] = 5;
    r.r[{2, 3}] = 5;
    r.r[{1, 3}] = 6;
    return r;
}
} // namespace

TEST_CASE("L-natural description extraction") {
    DiscreteSet line = paper_example("l_line").object.domain();
    LnatDescription d = extract_lnat_description(line);
    CHECK(d.triangle_closed());
    for (int i = 0; i < 3; ++i) {
        CHECK(*d.alpha[size_t(i)] == -3);
        CHECK(*d.beta[size_t(i)] == 3);
        for (int j = 0; j < 3; ++j) CHECK(*d.gamma[size_t(i)][size_t(j)] == 0);
    }
    CHECK(build_lnat_set(d, line.bounding_box()) == line);

    DiscreteSet box(2, std::set<Point>([] {
                        auto v = Box({-1, 0}, {2, 3}).lattice_points();
                        return std::set<Point>(v.begin(), v.end());
                    }()));
    LnatDescription bd = extract_lnat_description(box);
    CHECK(*bd.gamma[0][1] == 3 - (-1)); // beta_j - alpha_i at the box extremes
    CHECK(build_lnat_set(bd, box.bounding_box()) == box);

    CHECK_THROWS_AS(extract_lnat_description(DiscreteSet(2, {{1, 0}, {0, 1}})), domain_error);
}

TEST_CASE("building L-natural sets from descriptions") {
    LnatDescription d;
    d.n = 2;
    d.alpha = {0, 0};
    d.beta = {0, 0};
    d.gamma = {{std::optional<Coord>(0), std::optional<Coord>(0)},
               {std::optional<Coord>(0), std::optional<Coord>(0)}};
    DiscreteSet s = build_lnat_set(d, Box({-2, -2}, {2, 2}));
    CHECK(s.points == std::set<Point>{{0, 0}});

    d.beta = {2, 2};
    DiscreteSet diag = build_lnat_set(d, Box({-2, -2}, {3, 3}));
    CHECK(diag.points == std::set<Point>{{0, 0}, {1, 1}, {2, 2}});

    // negative cycle: gamma_12 + gamma_21 < 0
    d.gamma[0][1] = -2;
    d.gamma[1][0] = 1;
    CHECK_THROWS_AS(build_lnat_set(d, Box({-2, -2}, {3, 3})), empty_result_error);
}

TEST_CASE("interval bounds of multimodular sets") {
    IntervalBounds b = extract_interval_bounds(paper_example("fig1a").object.domain());
    CHECK(*b.bounds.at({1, 1}).second == 3);
    CHECK(*b.bounds.at({2, 2}).second == 3);
    CHECK(*b.bounds.at({3, 3}).second == 3);
    CHECK(*b.bounds.at({1, 2}).second == 5);
    CHECK(*b.bounds.at({2, 3}).second == 5);
    CHECK(*b.bounds.at({1, 3}).second == 6);
    for (const auto& [iv, ab] : b.bounds) CHECK(*ab.first == 0);
    CHECK(b.bounds.count({1, 3}) == 1); // only consecutive intervals are keyed

    IntervalBounds smax = extract_interval_bounds(paper_example("fig1b_smax").object.domain());
    CHECK(*smax.bounds.at({1, 3}).first == 6);
    CHECK(*smax.bounds.at({1, 3}).second == 6);
    CHECK(*smax.bounds.at({1, 1}).first == 1);
    CHECK(*smax.bounds.at({1, 1}).second == 3);

    IntervalBounds line = extract_interval_bounds(paper_example("mm_line").object.domain());
    CHECK(*line.bounds.at({1, 2}).first == 0);
    CHECK(*line.bounds.at({1, 2}).second == 0);
    CHECK(*line.bounds.at({2, 3}).first == 0);
    CHECK(*line.bounds.at({2, 3}).second == 0);

    CHECK_THROWS_AS(extract_interval_bounds(paper_example("fig1b").object.domain()), domain_error);

    DiscreteSet rebuilt =
        build_multimodular_set(b, paper_example("fig1a").object.domain().bounding_box());
    CHECK(rebuilt == paper_example("fig1a").object.domain());
}

TEST_CASE("interval rank validation") {
    CHECK(validate_interval_rank(fig1a_rank()).status == Status::Yes);

    IntervalRank bad = fig1a_rank();
    bad.r[{1, 3}] = 11; // exceeds 5 + 5 - 3
    Verdict v = validate_interval_rank(bad);
    CHECK(v.status == Status::No);
    CHECK(v.witness->inequality == "rank_submodular");
    CHECK(v.witness->indices == std::vector<Coord>{1, 3});

    IntervalRank zero;
    zero.n = 3;
    for (int a = 1; a <= 3; ++a)
        for (int b = a; b <= 3; ++b) zero.r[{a, b}] = 0;
    CHECK(validate_interval_rank(zero).status == Status::Yes);
}

TEST_CASE("run decomposition rho") {
    IntervalRank r = fig1a_rank();
    CHECK(rho_from_rank(r, IndexSet{1, 3}) == 6); // r(1,1) + r(3,3)
    CHECK(rho_from_rank(r, IndexSet{1, 2}) == 5); // one run
    CHECK(rho_from_rank(r, IndexSet{}) == 0);

    RankFunction rho = rank_to_rho(r);
    CHECK(validate_rank_function(rho).status == Status::Yes);
    CHECK(rho.at(IndexSet{1, 2, 3}) == 6);
}

TEST_CASE("polymatroid constructions") {
    DiscreteSet p = polymatroid_from_rank(fig1a_rank());
    CHECK(p == paper_example("fig1a").object.domain());

    RankFunction rho = rank_to_rho(fig1a_rank());
    CHECK(polymatroid_from_rho(rho) == p);

    DiscreteSet base = m_base_from_rho(rho);
    CHECK(base == paper_example("fig1a_smax").object.domain());

    RankFunction zero;
    zero.n = 3;
    zero.values.assign(8, 0);
    CHECK(polymatroid_from_rho(zero).points == std::set<Point>{{0, 0, 0}});

    IntervalRank bad = fig1a_rank();
    bad.r[{1, 2}] = -1;
    CHECK_THROWS_AS(polymatroid_from_rank(bad), domain_error);
}

TEST_CASE("transform image of the polymatroid round-trips through its description") {
    DiscreteSet t = d_transform(paper_example("fig1a").object.domain(),
                                DTransformDirection::ToLnat);
    LnatDescription d = extract_lnat_description(t); // multimodular => transform is L-natural
    CHECK(d.triangle_closed());
    CHECK(build_lnat_set(d, t.bounding_box()) == t);
}

TEST_CASE("the classic rank table fits the staged construction bounds") {
    IntervalRank r = fig1a_rank();
    CHECK(r.at(1, 2) >= std::max(r.at(1, 1), r.at(2, 2)));
    CHECK(r.at(1, 2) <= r.at(1, 1) + r.at(2, 2));
    CHECK(r.at(2, 3) >= std::max(r.at(2, 2), r.at(3, 3)));
    CHECK(r.at(2, 3) <= r.at(2, 2) + r.at(3, 3));
    CHECK(r.at(1, 3) >= std::max(r.at(1, 2), r.at(2, 3)));
    CHECK(r.at(1, 3) <= r.at(1, 2) + r.at(2, 3) - r.at(2, 2));
}

TEST_CASE("extraction round trip on generated sets") {
    for (int t = 0; t < 25; ++t) {
        GenSpec spec;
        spec.dim = 2 + t % 3;
        spec.radius = 1 + t % 3;
        spec.seed = 8000 + std::uint64_t(t);
        DiscreteSet ln = gen_lnat_set(spec);
        CHECK(build_lnat_set(extract_lnat_description(ln), ln.bounding_box()) == ln);

        DiscreteSet mm = gen_multimodular_set(spec);
        CHECK(build_multimodular_set(extract_interval_bounds(mm), mm.bounding_box()) == mm);
    }
}
