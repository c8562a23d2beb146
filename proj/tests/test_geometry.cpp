#include <doctest.h>

#include "dcx/generators.hpp"
#include "dcx/geometry.hpp"

using namespace dcx;

namespace {

bool lattice_points_match(const HPolytope& p, const DiscreteSet& s, const Box& scan) {
    for (const auto& x : scan.lattice_points())
        if (p.contains(x) != s.contains(x)) return false;
    return true;
}

std::vector<Rat> rat_vec(std::initializer_list<Rat> v) { return std::vector<Rat>(v); }

} // namespace

TEST_CASE("convex hull of a triangle") {
    DiscreteSet s(2, {{0, 0}, {1, 0}, {0, 1}});
    HPolytope p = convex_hull(s);
    // membership semantics: the lattice points of the hull are exactly conv(s) ∩ Z^2
    CHECK(lattice_points_match(p, s, Box({-2, -2}, {3, 3})));
    CHECK(p.contains(rat_vec({Rat(1, 2), Rat(1, 2)})));
    CHECK_FALSE(p.contains(rat_vec({Rat(2, 3), Rat(2, 3)})));
}

TEST_CASE("convex hull of the consecutive-bound polymatroid") {
    DiscreteSet s = paper_example("fig1a").object.domain();
    HPolytope p = convex_hull(s);
    // exactly the nine defining inequalities, nonredundant
    REQUIRE(p.facets.size() == 9);
    auto has_facet = [&](std::vector<Rat> a, Rat b) {
        for (const auto& f : p.facets)
            if (f.normal == a && f.offset == b) return true;
        return false;
    };
    for (int i = 0; i < 3; ++i) {
        std::vector<Rat> lo(3, Rat(0)), hi(3, Rat(0));
        lo[size_t(i)] = -1;
        hi[size_t(i)] = 1;
        CHECK(has_facet(lo, Rat(0)));
        CHECK(has_facet(hi, Rat(3)));
    }
    CHECK(has_facet(rat_vec({Rat(1), Rat(1), Rat(0)}), Rat(5)));
    CHECK(has_facet(rat_vec({Rat(0), Rat(1), Rat(1)}), Rat(5)));
    CHECK(has_facet(rat_vec({Rat(1), Rat(1), Rat(1)}), Rat(6)));
    // the defining inequalities are tight on the hull
    CHECK(lp_solve(rat_vec({Rat(1), Rat(1), Rat(1)}), p, LpSense::Max).value == Rat(6));
    CHECK(lp_solve(rat_vec({Rat(1), Rat(0), Rat(0)}), p, LpSense::Min).value == Rat(0));
    // every lattice point inside the scan box agrees with direct membership
    CHECK(lattice_points_match(p, s, Box({-1, -1, -1}, {4, 4, 4})));
}

TEST_CASE("hull of a singleton is an equality system") {
    DiscreteSet s(3, {{2, -1, 5}});
    HPolytope p = convex_hull(s);
    CHECK(p.facets.size() == 6); // n equality pairs
    CHECK(p.contains(Point{2, -1, 5}));
    CHECK_FALSE(p.contains(Point{2, -1, 4}));
}

TEST_CASE("lp solve") {
    DiscreteSet seg(2, {{0, 0}, {2, 1}});
    HPolytope p = convex_hull(seg);
    LpResult r = lp_solve(rat_vec({Rat(1), Rat(0)}), p, LpSense::Max);
    CHECK(r.status == LpStatus::Optimal);
    CHECK(r.value == Rat(2));
    LpResult rmin = lp_solve(rat_vec({Rat(3), Rat(-1)}), convex_hull(DiscreteSet(2, {{4, 7}})),
                             LpSense::Min);
    CHECK(rmin.value == Rat(5));
    CHECK(rmin.x == rat_vec({Rat(4), Rat(7)}));

    // infeasible system
    HPolytope empty;
    empty.dim = 1;
    empty.facets.push_back({rat_vec({Rat(1)}), Rat(0)});
    empty.facets.push_back({rat_vec({Rat(-1)}), Rat(-1)}); // x >= 1 and x <= 0
    CHECK(lp_solve(rat_vec({Rat(1)}), empty, LpSense::Max).status == LpStatus::Infeasible);
}

TEST_CASE("lp optimum equals the point-set maximum") {
    // oracle: the maximum of a linear functional over conv(S) is attained at a point of S
    for (int trial = 0; trial < 500; ++trial) {
        GenSpec spec;
        spec.dim = 1 + trial % 3;
        spec.radius = 3;
        spec.seed = 4000 + std::uint64_t(trial);
        DiscreteSet s = gen_noise(spec).domain();
        HPolytope p = convex_hull(s);
        Rng rng(500 + std::uint64_t(trial));
        std::vector<Rat> c(size_t(spec.dim));
        for (auto& v : c) v = Rat(rng.uniform(-5, 5), 1 + rng.uniform(0, 2));
        Rat best = dot(c, *s.points.begin());
        for (const auto& x : s.points) best = std::max(best, dot(c, x));
        LpResult r = lp_solve(c, p, LpSense::Max);
        REQUIRE(r.status == LpStatus::Optimal);
        CHECK(r.value == best);
    }
}

TEST_CASE("local extension values") {
    std::map<Point, Rat> sq;
    for (Coord t = -3; t <= 3; ++t) sq[{t}] = Rat(t * t);
    DiscreteFunction f(1, sq);
    CHECK(local_extension_value(f, rat_vec({Rat(2)})) == ExtVal(Rat(4)));
    CHECK(local_extension_value(f, rat_vec({Rat(1, 2)})) == ExtVal(Rat(1, 2)));
    CHECK(local_extension_value(f, rat_vec({Rat(9, 2)})).is_inf());

    // the Minkowski-sum set: midpoint (1/2, 1, 1/2) is an average of two members
    DiscreteSet s = paper_example("l2nat_sum").object.domain();
    DiscreteFunction ind = indicator(s);
    CHECK(local_extension_value(ind, rat_vec({Rat(1, 2), Rat(1), Rat(1, 2)})) == ExtVal(Rat(0)));

    // integer points reproduce the function value
    for (const auto& [x, v] : f.entries) {
        std::vector<Rat> z{Rat(x[0])};
        CHECK(local_extension_value(f, z) == ExtVal(v));
    }
}

TEST_CASE("integral neighborhood") {
    auto n1 = integral_neighborhood(rat_vec({Rat(1), Rat(1, 2)}));
    CHECK(n1.size() == 2);
    auto n2 = integral_neighborhood(rat_vec({Rat(1, 2), Rat(1, 2)}));
    CHECK(n2.size() == 4);
    NeighborhoodLP lp;
    lp.target = rat_vec({Rat(1, 2)});
    lp.generators = {{0}, {1}};
    lp.costs = {Rat(0), Rat(1)};
    CHECK(lp.solve() == ExtVal(Rat(1, 2)));
}

TEST_CASE("cell hull comparisons") {
    DiscreteSet s(2, {{0, 0}, {2, 1}});
    CellCheck c = cell_hull_equal(s, Box({0, 0}, {1, 1}));
    CHECK_FALSE(c.equal);
    REQUIRE(c.witness.size() == 2);
    // the witness lies on the segment but outside the local hull {(0,0)}
    CHECK(c.witness[1] * 2 == c.witness[0]); // y = x/2 on the segment

    DiscreteSet box(2, std::set<Point>([] {
                        auto v = Box({0, 0}, {2, 2}).lattice_points();
                        return std::set<Point>(v.begin(), v.end());
                    }()));
    CHECK(cell_hull_equal(box, Box({0, 0}, {1, 1})).equal);
    CHECK(cell_hull_equal(box, Box({1, 1}, {2, 2})).equal);

    DiscreteSet diag(2, {{0, 0}, {1, 1}});
    CHECK(cell_hull_equal(diag, Box({0, 0}, {1, 1})).equal);

    CHECK_THROWS_AS(cell_hull_equal(diag, Box({0, 0}, {2, 2})), domain_error);
}

TEST_CASE("cell check is invariant under permutation and translation") {
    Rng rng(61);
    for (int trial = 0; trial < 60; ++trial) {
        GenSpec spec;
        spec.dim = 2 + trial % 2;
        spec.radius = 2;
        spec.seed = 6000 + std::uint64_t(trial);
        DiscreteSet s = gen_noise(spec).domain();
        Box bb = s.bounding_box();
        Point lower = bb.lower;
        Point upper(lower.size());
        for (size_t i = 0; i < lower.size(); ++i) upper[i] = lower[i] + 1;
        bool base = cell_hull_equal(s, Box(lower, upper)).equal;

        // translation
        Point shift(size_t(spec.dim));
        for (auto& c : shift) c = rng.uniform(-4, 4);
        std::set<Point> moved;
        for (const auto& p : s.points) moved.insert(add(p, shift));
        CHECK(cell_hull_equal(DiscreteSet(spec.dim, moved),
                              Box(add(lower, shift), add(upper, shift)))
                  .equal == base);

        // coordinate reversal
        std::set<Point> rev;
        for (const auto& p : s.points) rev.insert(Point(p.rbegin(), p.rend()));
        CHECK(cell_hull_equal(DiscreteSet(spec.dim, rev),
                              Box(Point(lower.rbegin(), lower.rend()),
                                  Point(upper.rbegin(), upper.rend())))
                  .equal == base);
    }
}

TEST_CASE("set integral convexity check") {
    CHECK(integrally_convex_set_check(DiscreteSet(2, {{0, 0}, {1, 1}})).equal);
    CHECK_FALSE(integrally_convex_set_check(DiscreteSet(2, {{0, 0}, {2, 1}})).equal);
    CHECK(integrally_convex_set_check(paper_example("fig1a").object.domain()).equal);
    CHECK(integrally_convex_set_check(paper_example("l2nat_sum").object.domain()).equal);
}
