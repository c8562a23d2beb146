#include <doctest.h>

#include "dcx/generators.hpp"
#include "dcx/json_io.hpp"

#include <nlohmann/json.hpp>

using namespace dcx;

namespace {

DiscreteSet mkset(int dim, std::vector<Point> pts) {
    return DiscreteSet(dim, std::set<Point>(pts.begin(), pts.end()));
}

Point rand_point(Rng& rng, int dim, Coord radius) {
    Point p(static_cast<size_t>(dim), 0);
    for (auto& c : p) c = rng.uniform(-radius, radius);
    return p;
}

} // namespace

TEST_CASE("join and meet") {
    auto [j1, m1] = join_meet({1, 2}, {2, 1});
    CHECK(j1 == Point{2, 2});
    CHECK(m1 == Point{1, 1});
    auto [j2, m2] = join_meet({0, 0, 0}, {2, 1, -1});
    CHECK(j2 == Point{2, 1, 0});
    CHECK(m2 == Point{0, 0, -1});
    Point x{3, -4, 5};
    auto [j3, m3] = join_meet(x, x);
    CHECK(j3 == x);
    CHECK(m3 == x);
    CHECK_THROWS_AS(join_meet({1}, {1, 2}), dimension_mismatch);

    Rng rng(99);
    for (int t = 0; t < 500; ++t) {
        Point a = rand_point(rng, 4, 10), b = rand_point(rng, 4, 10);
        auto [jn, mt] = join_meet(a, b);
        CHECK(add(jn, mt) == add(a, b));
    }
}

TEST_CASE("midpoint roundings") {
    auto [u1, d1] = midpoint_roundings({1, 2, 3}, {2, 2, 2});
    CHECK(u1 == Point{2, 2, 3});
    CHECK(d1 == Point{1, 2, 2});
    auto [u2, d2] = midpoint_roundings({3, 0, 3}, {2, 2, 2});
    CHECK(u2 == Point{3, 1, 3});
    CHECK(d2 == Point{2, 1, 2});
    Point x{-5, 7};
    auto [u3, d3] = midpoint_roundings(x, x);
    CHECK(u3 == x);
    CHECK(d3 == x);

    Rng rng(7);
    for (int t = 0; t < 500; ++t) {
        Point a = rand_point(rng, 3, 9), b = rand_point(rng, 3, 9);
        auto [up, down] = midpoint_roundings(a, b);
        CHECK(add(up, down) == add(a, b));
        for (size_t i = 0; i < a.size(); ++i) {
            Coord diff = up[i] - down[i];
            CHECK(diff >= 0);
            CHECK(diff <= 1);
        }
    }
}

TEST_CASE("directed rounding") {
    CHECK(directed_rounding({0, 0, 0}, {2, 1, -1}) == Point{1, 0, 0});
    CHECK(directed_rounding({2, 1, -1}, {0, 0, 0}) == Point{1, 1, -1});
    Point x{4, -2};
    CHECK(directed_rounding(x, x) == x);

    Rng rng(13);
    for (int t = 0; t < 500; ++t) {
        Point a = rand_point(rng, 3, 9), b = rand_point(rng, 3, 9);
        Point ab = directed_rounding(a, b), ba = directed_rounding(b, a);
        CHECK(add(ab, ba) == add(a, b));
        for (size_t i = 0; i < a.size(); ++i) {
            Coord lo = std::min(a[i], b[i]), hi = std::max(a[i], b[i]);
            CHECK(ab[i] >= lo);
            CHECK(ab[i] <= hi);
        }
    }
}

TEST_CASE("supports") {
    auto [p1, n1] = supports({1, -1, 0});
    CHECK(p1 == IndexSet{1});
    CHECK(n1 == IndexSet{2});
    auto [p2, n2] = supports({0, 0, 0, 0});
    CHECK(p2.empty());
    CHECK(n2.empty());
    auto [p3, n3] = supports({2, 1, -1});
    CHECK(p3 == IndexSet{1, 2});
    CHECK(n3 == IndexSet{3});
}

TEST_CASE("d-transform") {
    CHECK(d_transform_point({1, 1, 1}, DTransformDirection::ToLnat) == Point{1, 2, 3});
    CHECK(d_transform_point({1, -1, 1}, DTransformDirection::ToLnat) == Point{1, 0, 1});
    Rng rng(21);
    for (int t = 0; t < 1000; ++t) {
        int dim = 1 + int(t % 5);
        Point x = rand_point(rng, dim, 20);
        CHECK(d_transform_point(d_transform_point(x, DTransformDirection::ToLnat),
                                DTransformDirection::FromLnat) == x);
    }
    // round-trip through whole objects
    for (int t = 0; t < 50; ++t) {
        GenSpec spec;
        spec.dim = 1 + t % 5;
        spec.radius = 2;
        spec.seed = 1000 + std::uint64_t(t);
        DiscreteFunction f = gen_noise(spec);
        DiscreteFunction g = d_transform(d_transform(f, DTransformDirection::ToLnat),
                                         DTransformDirection::FromLnat);
        CHECK(g.entries == f.entries);
    }
}

TEST_CASE("tilt") {
    GenSpec spec;
    spec.dim = 2;
    spec.radius = 2;
    spec.seed = 5;
    DiscreteFunction f = gen_noise(spec);
    std::vector<Rat> zero(2, Rat(0));
    CHECK(tilt(f, zero).entries == f.entries);
    std::vector<Rat> p{Rat(1, 2), Rat(-3)};
    DiscreteFunction g = tilt(tilt(f, p), {-p[0], -p[1]});
    CHECK(g.entries == f.entries);
    // tilted indicator carries -<p,x>
    DiscreteSet s = mkset(2, {{0, 0}, {1, 1}});
    DiscreteFunction ind = tilt(indicator(s), p);
    CHECK(ind.entries.at({1, 1}) == Rat(-1, 2) + Rat(3));
}

TEST_CASE("argmin") {
    // f(x) = x^2 on [-2,2]
    std::map<Point, Rat> e;
    for (Coord t = -2; t <= 2; ++t) e[{t}] = Rat(t * t);
    CHECK(argmin_set(DiscreteFunction(1, e)).points == std::set<Point>{{0}});

    DiscreteSet box = mkset(2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    DiscreteFunction t = tilt(indicator(box), {Rat(1), Rat(0)});
    CHECK(argmin_set(t).points == std::set<Point>{{1, 0}, {1, 1}});

    DiscreteFunction c = indicator(box);
    CHECK(argmin_set(c).points == box.points);

    // exact minimum against full enumeration, with rational tilts
    Rng rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        GenSpec spec;
        spec.dim = 1 + trial % 3;
        spec.radius = 3;
        spec.seed = 3000 + std::uint64_t(trial);
        DiscreteFunction f = gen_noise(spec);
        std::vector<Rat> p(size_t(spec.dim));
        for (auto& cc : p) cc = Rat(rng.uniform(-9, 9), 1 + rng.uniform(0, 2));
        DiscreteFunction tf = tilt(f, p);
        DiscreteSet am = argmin_set(tf);
        Rat best = tf.entries.begin()->second;
        for (const auto& [x, v] : tf.entries) best = std::min(best, v);
        for (const auto& [x, v] : tf.entries) {
            CHECK((v == best) == (am.contains(x)));
        }
    }
}

TEST_CASE("minkowski sum") {
    DiscreteSet s1 = mkset(3, {{0, 0, 0}, {0, 1, 1}});
    DiscreteSet s2 = mkset(3, {{0, 0, 0}, {1, 1, 0}});
    DiscreteSet sum = minkowski_sum(s1, s2);
    CHECK(sum.points == std::set<Point>{{0, 0, 0}, {0, 1, 1}, {1, 1, 0}, {1, 2, 1}});

    DiscreteSet zero = mkset(3, {{0, 0, 0}});
    CHECK(minkowski_sum(s1, zero) == s1);

    // box + box = box of summed bounds, enumerated
    DiscreteSet b1 = mkset(2, Box({0, 0}, {2, 1}).lattice_points());
    DiscreteSet b2 = mkset(2, Box({-1, 0}, {0, 2}).lattice_points());
    auto [bb, full] = box_ops(minkowski_sum(b1, b2));
    CHECK(full);
    CHECK(bb.lower == Point{-1, 0});
    CHECK(bb.upper == Point{2, 3});
}

TEST_CASE("infimal convolution") {
    DiscreteSet s1 = mkset(2, {{0, 0}, {1, 0}});
    DiscreteSet s2 = mkset(2, {{0, 0}, {0, 1}});
    DiscreteFunction conv = infimal_convolution(indicator(s1), indicator(s2));
    DiscreteFunction ind = indicator(minkowski_sum(s1, s2));
    CHECK(conv.entries == ind.entries);

    std::map<Point, Rat> sq;
    for (Coord t = -3; t <= 3; ++t) sq[{t}] = Rat(t * t);
    DiscreteFunction f(1, sq);
    DiscreteSet zero = mkset(1, {{0}});
    CHECK(infimal_convolution(f, indicator(zero)).entries == f.entries);

    DiscreteFunction ff = infimal_convolution(f, f);
    // oracle: enumerate splits of x = 2
    Rat expect = Rat(1000);
    for (Coord y = -3; y <= 3; ++y) {
        Coord z = 2 - y;
        if (z < -3 || z > 3) continue;
        expect = std::min(expect, Rat(y * y + z * z));
    }
    CHECK(expect == Rat(2));
    CHECK(ff.entries.at({2}) == expect);

    // indicator identity on random sets
    Rng rng(47);
    for (int t = 0; t < 40; ++t) {
        GenSpec sa, sb;
        sa.dim = sb.dim = 1 + t % 3;
        sa.radius = sb.radius = 2;
        sa.seed = 800 + std::uint64_t(t);
        sb.seed = 900 + std::uint64_t(t);
        DiscreteSet a = gen_noise(sa).domain(), b = gen_noise(sb).domain();
        if (a.size() > 20 || b.size() > 20) continue;
        CHECK(infimal_convolution(indicator(a), indicator(b)).entries ==
              indicator(minkowski_sum(a, b)).entries);
    }
}

TEST_CASE("pointwise sum and intersection") {
    DiscreteSet a = mkset(2, {{0, 0}, {1, 0}, {0, 1}});
    DiscreteSet b = mkset(2, {{1, 0}, {0, 1}, {1, 1}});
    CHECK(intersect(a, b).points == std::set<Point>{{1, 0}, {0, 1}});
    CHECK(intersect(a, a) == a);
    DiscreteSet c = mkset(2, {{5, 5}});
    CHECK_THROWS_AS(intersect(a, c), empty_result_error);
    CHECK_THROWS_AS(pointwise_sum(indicator(a), indicator(c)), empty_result_error);

    DiscreteFunction f = indicator(a);
    std::map<Point, Rat> zeros;
    for (const auto& p : a.points) zeros[p] = Rat(0);
    CHECK(pointwise_sum(f, DiscreteFunction(2, zeros)).entries == f.entries);
}

TEST_CASE("box ops") {
    CHECK(box_ops(mkset(2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}})).second);
    auto [bb, full] = box_ops(mkset(2, {{1, 0}, {0, 1}}));
    CHECK_FALSE(full);
    CHECK(bb.lower == Point{0, 0});
    CHECK(bb.upper == Point{1, 1});
    CHECK(box_ops(mkset(3, {{4, -1, 2}})).second);
}

TEST_CASE("M-natural to M lift") {
    DiscreteSet fig1b = paper_example("fig1b").object.domain();
    DiscreteSet lifted = mnat_to_m_lift(fig1b);
    CHECK(lifted.size() == fig1b.size());
    for (const auto& q : lifted.points) CHECK(coord_sum(q) == 0);
    DiscreteSet single = mnat_to_m_lift(mkset(2, {{3, 4}}));
    CHECK(single.points == std::set<Point>{{-7, 3, 4}});
}

TEST_CASE("JSON round trips") {
    DiscreteSet s = paper_example("fig1a").object.domain();
    nlohmann::json j = to_json(s);
    CHECK(set_from_json(j) == s);

    GenSpec spec;
    spec.dim = 3;
    spec.radius = 2;
    spec.seed = 77;
    DiscreteFunction f = gen_noise(spec);
    nlohmann::json jf = to_json(f);
    CHECK(function_from_json(jf) == f);

    CHECK_THROWS_AS(set_from_json(nlohmann::json{{"dim", 2}}), parse_error);
    CHECK_THROWS_AS(rat_from_string("1/0"), parse_error);
    CHECK(rat_from_string("-7/2") == Rat(-7, 2));
    CHECK(rat_to_string(Rat(-7, 2)) == "-7/2");
    CHECK(rat_to_string(Rat(4)) == "4");
}

TEST_CASE("dimension guard") {
    std::set<Point> pts{Point(9, 0)};
    CHECK_THROWS_AS(DiscreteSet(9, pts), scale_guard_error);
}
