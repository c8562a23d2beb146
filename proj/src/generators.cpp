#include "dcx/generators.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "dcx/descriptions.hpp"

namespace dcx {

Coord Rng::uniform(Coord lo, Coord hi) {
    if (lo > hi) throw domain_error("Rng::uniform: empty range");
    std::uint64_t span = std::uint64_t(hi - lo) + 1;
    return lo + Coord(next() % span);
}

namespace {

std::uint64_t sub_seed(const GenSpec& spec, std::uint64_t salt) {
    std::uint64_t h = spec.seed ^ (salt * 0x9e3779b97f4a7c15ull);
    h ^= std::uint64_t(spec.dim) << 32;
    h ^= std::uint64_t(spec.radius) << 16;
    h ^= std::uint64_t(spec.value_range);
    return h;
}

Box radius_box(int dim, Coord r) {
    return Box(Point(size_t(dim), -r), Point(size_t(dim), r));
}

// random convex univariate map on [lo, hi]
std::map<Coord, Rat> convex_univariate(Rng& rng, Coord lo, Coord hi, Coord vrange) {
    std::map<Coord, Rat> phi;
    Coord curvature = std::max<Coord>(1, vrange / 2);
    Rat v(rng.uniform(-vrange, vrange));
    Rat slope(rng.uniform(-vrange, vrange));
    for (Coord t = lo; t <= hi; ++t) {
        phi[t] = v;
        v += slope;
        slope += Rat(rng.uniform(0, curvature));
    }
    return phi;
}

constexpr size_t kSetSizeCap = 150;

} // namespace

DiscreteFunction gen_separable(const GenSpec& spec) {
    Rng rng(sub_seed(spec, 1));
    check_dim(spec.dim);
    std::vector<std::map<Coord, Rat>> phi(size_t(spec.dim));
    Point lo(size_t(spec.dim)), hi(size_t(spec.dim));
    for (int i = 0; i < spec.dim; ++i) {
        Coord a = rng.uniform(-spec.radius, spec.radius);
        Coord b = rng.uniform(a, spec.radius);
        lo[size_t(i)] = a;
        hi[size_t(i)] = b;
        phi[size_t(i)] = convex_univariate(rng, a, b, spec.value_range);
    }
    std::map<Point, Rat> entries;
    for (const auto& x : Box(lo, hi).lattice_points()) {
        Rat v = 0;
        for (int i = 0; i < spec.dim; ++i) v += phi[size_t(i)].at(x[size_t(i)]);
        entries[x] = v;
    }
    DiscreteFunction f(spec.dim, std::move(entries), radius_box(spec.dim, spec.radius + 1));
    if (is_separable(f).status != Status::Yes)
        throw internal_error("gen_separable produced a non-separable function");
    return f;
}

DiscreteFunction gen_linear(const GenSpec& spec) {
    Rng rng(sub_seed(spec, 2));
    std::vector<Rat> p(size_t(spec.dim));
    for (auto& c : p) c = Rat(rng.uniform(-spec.value_range, spec.value_range));
    std::map<Point, Rat> entries;
    for (const auto& x : radius_box(spec.dim, spec.radius).lattice_points())
        entries[x] = dot(p, x);
    return DiscreteFunction(spec.dim, std::move(entries), radius_box(spec.dim, spec.radius));
}

DiscreteSet gen_lnat_set(const GenSpec& spec) {
    check_dim(spec.dim);
    for (std::uint64_t attempt = 0; attempt < 200; ++attempt) {
        Rng rng(sub_seed(spec, 3 + attempt * 1000003));
        LnatDescription d;
        d.n = spec.dim;
        d.alpha.resize(size_t(spec.dim));
        d.beta.resize(size_t(spec.dim));
        d.gamma.assign(size_t(spec.dim),
                       std::vector<std::optional<Coord>>(size_t(spec.dim), std::nullopt));
        // per-coordinate extents shrink with dimension to keep the sets desk-sized
        Coord max_width = spec.dim <= 2 ? 2 * spec.radius : (spec.dim == 3 ? 4 : 3);
        for (int i = 0; i < spec.dim; ++i) {
            Coord a = rng.uniform(-spec.radius, spec.radius);
            Coord w = rng.uniform(0, std::min(max_width, spec.radius - a + spec.radius));
            d.alpha[size_t(i)] = a;
            d.beta[size_t(i)] = std::min(spec.radius, checked_add(a, w));
            d.gamma[size_t(i)][size_t(i)] = 0;
        }
        // small upper bounds keep the systems tight and the sets moderate; the
        // negative floor only enters when the radius leaves room for feasibility
        Coord gamma_lo = (spec.radius >= 2 && spec.dim <= 3) ? -1 : 0;
        for (int i = 0; i < spec.dim; ++i)
            for (int j = 0; j < spec.dim; ++j) {
                if (i == j) continue;
                d.gamma[size_t(i)][size_t(j)] = rng.uniform(gamma_lo, spec.radius);
            }
        try {
            DiscreteSet s = build_lnat_set(d, radius_box(spec.dim, spec.radius));
            if (s.size() > kSetSizeCap) continue;
            return s;
        } catch (const empty_result_error&) {
            continue;
        }
    }
    throw internal_error("gen_lnat_set: retry budget exhausted");
}

DiscreteFunction gen_lnat_function(const GenSpec& spec) {
    for (std::uint64_t attempt = 0; attempt < 8; ++attempt) {
        GenSpec sub = spec;
        sub.seed = sub_seed(spec, 5 + attempt * 17);
        DiscreteSet dom = gen_lnat_set(sub);
        Rng rng(sub_seed(spec, 6 + attempt * 17));
        // sums of convex univariate terms in x_i and in the differences x_j - x_i
        std::vector<std::map<Coord, Rat>> axis(size_t(spec.dim));
        for (int i = 0; i < spec.dim; ++i)
            axis[size_t(i)] = convex_univariate(rng, -spec.radius, spec.radius, spec.value_range);
        std::map<std::pair<int, int>, std::map<Coord, Rat>> diffs;
        for (int i = 0; i < spec.dim; ++i)
            for (int j = i + 1; j < spec.dim; ++j)
                if (rng.coin())
                    diffs[{i, j}] =
                        convex_univariate(rng, -2 * spec.radius, 2 * spec.radius, spec.value_range);
        std::map<Point, Rat> entries;
        for (const auto& x : dom.points) {
            Rat v = 0;
            for (int i = 0; i < spec.dim; ++i) v += axis[size_t(i)].at(x[size_t(i)]);
            for (const auto& [ij, psi] : diffs)
                v += psi.at(checked_sub(x[size_t(ij.second)], x[size_t(ij.first)]));
            entries[x] = v;
        }
        DiscreteFunction f(spec.dim, std::move(entries), radius_box(spec.dim, spec.radius));
        if (is_lnat(f, LnatVariant::A).status == Status::Yes) return f;
    }
    throw internal_error("gen_lnat_function: retry budget exhausted");
}

Box gen_l_window(const GenSpec& spec) { return radius_box(spec.dim, spec.radius); }

DiscreteSet gen_l_set(const GenSpec& spec) {
    check_dim(spec.dim);
    Box window = gen_l_window(spec);
    std::set<Point> pts;
    if (spec.dim == 1) {
        for (Coord t = -spec.radius; t <= spec.radius; ++t) pts.insert({t});
    } else {
        GenSpec sub = spec;
        sub.dim = spec.dim - 1;
        sub.seed = sub_seed(spec, 7);
        DiscreteSet base = gen_lnat_set(sub);
        for (Coord t = -2 * spec.radius; t <= 2 * spec.radius; ++t)
            for (const auto& y : base.points) {
                Point p(size_t(spec.dim));
                p[0] = t;
                for (int i = 1; i < spec.dim; ++i)
                    p[size_t(i)] = checked_add(y[size_t(i) - 1], t);
                if (window.contains(p)) pts.insert(std::move(p));
            }
    }
    if (pts.empty()) {
        // base had no representative inside the window; translate one class in
        GenSpec sub = spec;
        sub.seed = sub_seed(spec, 8);
        return gen_l_set(sub);
    }
    DiscreteSet s(spec.dim, std::move(pts));
    Verdict v = is_l(indicator(s, window));
    if (v.status != Status::YesWithinWindow)
        throw internal_error("gen_l_set produced a set that is not L within its window");
    return s;
}

namespace {

RankFunction gen_rank_function(const GenSpec& spec, std::uint64_t salt) {
    const int n = spec.dim;
    for (std::uint64_t attempt = 0; attempt < 64; ++attempt) {
        Rng rng(sub_seed(spec, salt + attempt * 7919));
        RankFunction rho;
        rho.n = n;
        rho.values.assign(size_t(1) << n, 0);
        for (unsigned mask = 1; mask < rho.values.size(); ++mask) {
            int pc = __builtin_popcount(mask);
            rho.values[mask] = rng.uniform(0, spec.radius * pc);
        }
        // repair by downward capping until fixpoint
        bool changed = true;
        int rounds = 0;
        while (changed && rounds++ < 300) {
            changed = false;
            for (unsigned x = 0; x < rho.values.size(); ++x)
                for (int i = 0; i < n; ++i) {
                    unsigned y = x | (1u << i);
                    if (y != x && rho.values[x] > rho.values[y]) {
                        rho.values[x] = rho.values[y]; // monotone cap
                        changed = true;
                    }
                }
            for (unsigned x = 0; x < rho.values.size(); ++x)
                for (unsigned y = x + 1; y < rho.values.size(); ++y) {
                    Coord lhs = rho.values[x] + rho.values[y];
                    Coord rhs = rho.values[x | y] + rho.values[x & y];
                    if (lhs < rhs) {
                        rho.values[x | y] = lhs - rho.values[x & y]; // submodular cap
                        if (rho.values[x | y] < 0) rho.values[x | y] = 0;
                        changed = true;
                    }
                }
        }
        if (!changed && validate_rank_function(rho).status == Status::Yes) return rho;
    }
    throw internal_error("gen_rank_function: repair failed repeatedly");
}

} // namespace

DiscreteSet gen_mnat_set(const GenSpec& spec) {
    RankFunction rho = gen_rank_function(spec, 11);
    DiscreteSet s = polymatroid_from_rho(rho);
    if (is_mnat(indicator(s)).status != Status::Yes)
        throw internal_error("gen_mnat_set produced a non-M-natural set");
    return s;
}

DiscreteSet gen_m_base(const GenSpec& spec) {
    RankFunction rho = gen_rank_function(spec, 13);
    DiscreteSet s = m_base_from_rho(rho);
    if (is_m(indicator(s)).status != Status::Yes)
        throw internal_error("gen_m_base produced a non-M-convex set");
    return s;
}

namespace {

DiscreteFunction separable_plus_indicator(const GenSpec& spec, const DiscreteSet& dom,
                                          std::uint64_t salt) {
    Rng rng(sub_seed(spec, salt));
    Box bb = dom.bounding_box();
    std::vector<std::map<Coord, Rat>> phi(size_t(spec.dim));
    for (int i = 0; i < spec.dim; ++i)
        phi[size_t(i)] = convex_univariate(rng, bb.lower[size_t(i)], bb.upper[size_t(i)],
                                           spec.value_range);
    std::map<Point, Rat> entries;
    for (const auto& x : dom.points) {
        Rat v = 0;
        for (int i = 0; i < spec.dim; ++i) v += phi[size_t(i)].at(x[size_t(i)]);
        entries[x] = v;
    }
    return DiscreteFunction(spec.dim, std::move(entries));
}

} // namespace

DiscreteFunction gen_mnat_function(const GenSpec& spec) {
    for (std::uint64_t attempt = 0; attempt < 8; ++attempt) {
        GenSpec sub = spec;
        sub.seed = sub_seed(spec, 17 + attempt);
        DiscreteSet dom = gen_mnat_set(sub);
        DiscreteFunction f = separable_plus_indicator(sub, dom, 19 + attempt);
        if (is_mnat(f).status == Status::Yes) return f;
    }
    throw internal_error("gen_mnat_function: retry budget exhausted");
}

DiscreteFunction gen_m_function(const GenSpec& spec) {
    for (std::uint64_t attempt = 0; attempt < 8; ++attempt) {
        GenSpec sub = spec;
        sub.seed = sub_seed(spec, 23 + attempt);
        DiscreteSet dom = gen_m_base(sub);
        DiscreteFunction f = separable_plus_indicator(sub, dom, 29 + attempt);
        if (is_m(f).status == Status::Yes) return f;
    }
    throw internal_error("gen_m_function: retry budget exhausted");
}

DiscreteSet gen_multimodular_set(const GenSpec& spec) {
    GenSpec sub = spec;
    sub.seed = sub_seed(spec, 31);
    DiscreteSet t = gen_lnat_set(sub);
    DiscreteSet s = d_transform(t, DTransformDirection::FromLnat);
    if (is_multimodular(indicator(s)).status != Status::Yes)
        throw internal_error("gen_multimodular_set produced a non-multimodular set");
    return s;
}

DiscreteFunction gen_multimodular_function(const GenSpec& spec) {
    GenSpec sub = spec;
    sub.seed = sub_seed(spec, 37);
    DiscreteFunction g = gen_lnat_function(sub);
    DiscreteFunction f = d_transform(g, DTransformDirection::FromLnat);
    if (is_multimodular(f).status != Status::Yes)
        throw internal_error("gen_multimodular_function produced a non-multimodular function");
    return f;
}

IntervalRank gen_interval_rank(const GenSpec& spec) {
    Rng rng(sub_seed(spec, 41));
    const int n = spec.dim;
    IntervalRank r;
    r.n = n;
    for (int a = 1; a <= n; ++a) r.r[{a, a}] = rng.uniform(0, spec.radius);
    for (int a = 1; a + 1 <= n; ++a) {
        Coord lo = std::max(r.at(a, a), r.at(a + 1, a + 1));
        Coord hi = checked_add(r.at(a, a), r.at(a + 1, a + 1));
        r.r[{a, a + 1}] = rng.uniform(lo, hi);
    }
    for (int k = 2; k < n; ++k)
        for (int a = 1; a + k <= n; ++a) {
            int b = a + k;
            Coord lo = std::max(r.at(a, b - 1), r.at(a + 1, b));
            Coord hi = checked_sub(checked_add(r.at(a, b - 1), r.at(a + 1, b)), r.at(a + 1, b - 1));
            r.r[{a, b}] = rng.uniform(lo, hi);
        }
    if (validate_interval_rank(r).status != Status::Yes)
        throw internal_error("gen_interval_rank produced an invalid table");
    return r;
}

DiscreteFunction gen_noise(const GenSpec& spec) {
    Rng rng(sub_seed(spec, 43));
    Coord count = rng.uniform(1, 24);
    std::map<Point, Rat> entries;
    for (Coord k = 0; k < count; ++k) {
        Point p(size_t(spec.dim));
        for (auto& c : p) c = rng.uniform(-spec.radius, spec.radius);
        entries[p] = Rat(rng.uniform(-spec.value_range * 4, spec.value_range * 4));
    }
    return DiscreteFunction(spec.dim, std::move(entries), radius_box(spec.dim, spec.radius));
}

bool known_generator(const std::string& tag) {
    static const std::vector<std::string> tags = {"sep",  "linear", "lnat", "lnat_set", "l_set",
                                                  "mnat", "mnat_set", "m",  "m_base",   "mm",
                                                  "mm_set", "rank",  "noise"};
    return std::find(tags.begin(), tags.end(), tag) != tags.end();
}

// ------------------------------------------------------------- catalog

namespace {

DiscreteSet set_of(int dim, std::vector<Point> pts) {
    return DiscreteSet(dim, std::set<Point>(pts.begin(), pts.end()));
}

DiscreteSet set_where(const Box& box, const std::function<bool(const Point&)>& pred) {
    std::set<Point> pts;
    for (const auto& x : box.lattice_points())
        if (pred(x)) pts.insert(x);
    return DiscreteSet(box.dim(), std::move(pts));
}

Box padded(const Box& b, Coord pad = 1) {
    Point lo = b.lower, hi = b.upper;
    for (auto& c : lo) c = checked_sub(c, pad);
    for (auto& c : hi) c = checked_add(c, pad);
    return Box(lo, hi);
}

CatalogEntry set_entry(std::string id, DiscreteSet s, bool tight_window, std::string provenance) {
    CatalogEntry e;
    e.id = std::move(id);
    e.is_set = true;
    Box w = tight_window ? s.bounding_box() : padded(s.bounding_box());
    e.object = indicator(s, w);
    e.provenance = std::move(provenance);
    return e;
}

DiscreteSet diag_line(int dim, const Point& dir, Coord radius) {
    std::set<Point> pts;
    for (Coord t = -radius; t <= radius; ++t) {
        Point p(static_cast<size_t>(dim), 0);
        for (int i = 0; i < dim; ++i) p[size_t(i)] = dir[size_t(i)] * t;
        pts.insert(std::move(p));
    }
    return DiscreteSet(dim, std::move(pts));
}

DiscreteSet fig1a_set() {
    return set_where(Box({0, 0, 0}, {3, 3, 3}), [](const Point& x) {
        return x[0] + x[1] <= 5 && x[1] + x[2] <= 5 && x[0] + x[1] + x[2] <= 6;
    });
}

DiscreteSet fig1b_set() {
    return set_where(Box({0, 0, 0}, {3, 3, 3}), [](const Point& x) {
        return x[0] + x[1] <= 5 && x[0] + x[2] <= 5 && x[1] + x[2] <= 5 &&
               x[0] + x[1] + x[2] <= 6;
    });
}

DiscreteFunction quadratic_on_box(int dim, Coord radius,
                                  const std::function<Rat(const Point&)>& q) {
    std::map<Point, Rat> entries;
    Box box(Point(size_t(dim), -radius), Point(size_t(dim), radius));
    for (const auto& x : box.lattice_points()) entries[x] = q(x);
    return DiscreteFunction(dim, std::move(entries), box);
}

Certificate minkowski_cert(const DiscreteSet& s1, const DiscreteSet& s2,
                           std::optional<Box> w1 = std::nullopt,
                           std::optional<Box> w2 = std::nullopt) {
    Certificate c;
    c.kind = CertKind::Minkowski;
    c.part1 = indicator(s1, std::move(w1));
    c.part2 = indicator(s2, std::move(w2));
    return c;
}

Certificate intersection_cert(const DiscreteSet& s1, const DiscreteSet& s2) {
    Certificate c;
    c.kind = CertKind::Intersection;
    c.part1 = indicator(s1);
    c.part2 = indicator(s2);
    return c;
}

std::vector<CatalogEntry> build_catalog() {
    using S = Status;
    std::vector<CatalogEntry> out;

    {
        CatalogEntry e = set_entry("l_line", diag_line(3, {1, 1, 1}, 3), true,
                                   "integer multiples of (1,1,1), truncated to radius 3; the "
                                   "classic translation-invariant chain");
        e.expected = {{ClassId::L, S::YesWithinWindow},
                      {ClassId::Lnat, S::Yes},
                      {ClassId::Mnat, S::No},
                      {ClassId::Mm, S::No}};
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e = set_entry("mm_line", diag_line(3, {1, -1, 1}, 3), true,
                                   "integer multiples of (1,-1,1), truncated to radius 3; cut out "
                                   "by x1+x2=0 and x2+x3=0");
        e.expected = {{ClassId::Mm, S::Yes}, {ClassId::Lnat, S::No}, {ClassId::Mnat, S::No}};
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e = set_entry("fig1a", fig1a_set(), false,
                                   "integral polymatroid with only consecutive-interval bounds "
                                   "(x_i<=3, x1+x2<=5, x2+x3<=5, x(N)<=6)");
        e.expected = {{ClassId::Mnat, S::Yes},
                      {ClassId::Mm, S::Yes},
                      {ClassId::Sep, S::No},
                      {ClassId::Lnat, S::No},
                      {ClassId::Int, S::Yes}};
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e = set_entry(
            "fig1a_smax",
            set_of(3, {{3, 0, 3}, {1, 2, 3}, {3, 2, 1}, {1, 3, 2}, {2, 3, 1}, {2, 1, 3},
                       {2, 2, 2}, {3, 1, 2}}),
            false, "maximal points of the consecutive-interval polymatroid, on x(N)=6");
        e.expected = {{ClassId::M, S::Yes},
                      {ClassId::M2, S::Yes},
                      {ClassId::Mm, S::Yes},
                      {ClassId::Gdmc, S::No},
                      {ClassId::Ddmc, S::No}};
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e = set_entry("fig1b", fig1b_set(), false,
                                   "integral polymatroid with a binding non-consecutive bound "
                                   "x1+x3<=5; M-natural but not multimodular");
        e.expected = {{ClassId::Mnat, S::Yes}, {ClassId::Mm, S::No}, {ClassId::Lnat, S::No}};
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e = set_entry("fig1b_smax",
                                   set_where(Box({1, 1, 1}, {3, 3, 3}),
                                             [](const Point& x) { return x[0] + x[1] + x[2] == 6; }),
                                   false, "maximal points 1<=x_i<=3, x(N)=6 of the previous set");
        e.expected = {{ClassId::M, S::Yes}, {ClassId::Mm, S::Yes}};
        out.push_back(std::move(e));
    }
    {
        std::set<Point> pts;
        for (const auto& x : fig1b_set().points)
            pts.insert({x[0], x[1], x[2], 6 - (x[0] + x[1] + x[2])});
        CatalogEntry e = set_entry("shat", DiscreteSet(4, std::move(pts)), false,
                                   "4-dimensional constant-sum extension x4 = 6 - x(N) of the "
                                   "non-multimodular polymatroid");
        e.expected = {{ClassId::M, S::Yes}, {ClassId::Lnat, S::No}, {ClassId::Mm, S::No}};
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e = set_entry("gdmc_not_ddmc",
                                   set_of(3, {{0, 0, 0}, {1, 1, 0}, {1, 0, -1}, {2, 1, -1}}), false,
                                   "four points whose only far pair has its plain midpoint "
                                   "roundings inside but directed roundings outside");
        e.expected = {{ClassId::Gdmc, S::Yes}, {ClassId::Ddmc, S::No}};
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e = set_entry(
            "ddmc_not_gdmc",
            set_of(3, {{0, 0, 0}, {1, 0, 0}, {1, 1, 1}, {2, 1, 1}, {1, 1, -1}, {2, 1, -1},
                       {1, 1, 0}, {2, 1, 0}}),
            false, "eight points closed under directed rounding but not plain rounding");
        e.expected = {{ClassId::Ddmc, S::Yes}, {ClassId::Gdmc, S::No}};
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.id = "quad_2sep";
        e.is_set = false;
        e.object = quadratic_on_box(3, 3, [](const Point& x) -> Rat {
            auto sq = [](Coord v) -> Rat { return Rat(v) * Rat(v); };
            return Rat(sq(x[0] - x[1]) + sq(x[0] + x[2]) + sq(x[1] + x[2]));
        });
        e.provenance = "diagonally dominant quadratic (x1-x2)^2+(x1+x3)^2+(x2+x3)^2 on the "
                       "radius-3 box";
        e.expected = {{ClassId::Ddmc, S::Yes}, {ClassId::Gdmc, S::No}};
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.id = "quad_rank1";
        e.is_set = false;
        e.object = quadratic_on_box(3, 3, [](const Point& x) -> Rat {
            Rat s(x[0] + x[1]);
            return Rat(s * s);
        });
        e.provenance = "rank-one quadratic (x1+x2)^2 on the radius-3 box";
        e.expected = {{ClassId::Ddmc, S::Yes}, {ClassId::Gdmc, S::No}};
        out.push_back(std::move(e));
    }
    {
        DiscreteSet s1 = set_of(3, {{0, 0, 0}, {0, 1, 1}});
        DiscreteSet s2 = set_of(3, {{0, 0, 0}, {1, 1, 0}});
        CatalogEntry e = set_entry("l2nat_sum", minkowski_sum(s1, s2), false,
                                   "Minkowski sum of two L-natural two-point chains; not "
                                   "discrete midpoint convex in either sense");
        e.expected = {{ClassId::L2nat, S::Yes}, {ClassId::Gdmc, S::No}, {ClassId::Ddmc, S::No}};
        e.certs[ClassId::L2nat] = minkowski_cert(s1, s2);
        out.push_back(std::move(e));
    }
    {
        Box w3 = radius_box(4, 3), w6 = radius_box(4, 6);
        DiscreteSet s = set_where(w3, [](const Point& x) {
            return x[0] + x[1] - x[2] - x[3] == 0;
        });
        DiscreteSet s1 = set_where(w6, [](const Point& x) { return x[0] == x[2] && x[1] == x[3]; });
        DiscreteSet s2 = set_where(w6, [](const Point& x) { return x[0] == x[3] && x[1] == x[2]; });
        CatalogEntry e;
        e.id = "l2_hyperplane";
        e.is_set = true;
        e.object = indicator(s, w3);
        e.provenance = "the hyperplane x1+x2-x3-x4=0 inside the radius-3 window, the Minkowski "
                       "sum of two coordinate-pairing L-convex sets";
        e.expected = {{ClassId::L2, S::YesWithinWindow},
                      {ClassId::Gdmc, S::No},
                      {ClassId::Ddmc, S::No}};
        e.certs[ClassId::L2] = minkowski_cert(s1, s2, w6, w6);
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e = set_entry("antidiag2", set_of(2, {{1, 0}, {0, 1}}), false,
                                   "the two-point antidiagonal in the plane");
        e.expected = {{ClassId::Mnat, S::Yes}, {ClassId::Mm, S::Yes},   {ClassId::Gdmc, S::Yes},
                      {ClassId::Ddmc, S::Yes}, {ClassId::Sep, S::No},   {ClassId::L2nat, S::No},
                      {ClassId::M2nat, S::Yes}};
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e = set_entry("diag2", set_of(2, {{0, 0}, {1, 1}}), false,
                                   "the two-point diagonal in the plane");
        e.expected = {{ClassId::Gdmc, S::Yes},
                      {ClassId::Ddmc, S::Yes},
                      {ClassId::Mnat, S::No},
                      {ClassId::M2nat, S::No}};
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e = set_entry("antidiag3", set_of(2, {{2, 0}, {1, 1}, {0, 2}}), false,
                                   "three points on x1+x2=2, a base set in the plane");
        e.expected = {{ClassId::M, S::Yes}, {ClassId::Gdmc, S::Yes}, {ClassId::Ddmc, S::Yes}};
        out.push_back(std::move(e));
    }
    {
        DiscreteSet t1 = set_of(4, {{1, 1, 0, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}});
        DiscreteSet t2 = set_of(4, {{1, 1, 0, 0}, {1, 0, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, 1}});
        CatalogEntry e = set_entry("common_bases", set_of(4, {{1, 1, 0, 0}, {0, 0, 1, 1}}), false,
                                   "common bases of two partition matroids on four elements");
        e.expected = {{ClassId::M2, S::Yes}, {ClassId::Gdmc, S::Yes}, {ClassId::Ddmc, S::Yes}};
        e.certs[ClassId::M2] = intersection_cert(t1, t2);
        e.certs[ClassId::M2nat] = intersection_cert(t1, t2);
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e = set_entry("box2", set_where(Box({0, 0}, {2, 1}), [](const Point&) {
                                       return true;
                                   }),
                                   false, "a plain 3-by-2 box of integers");
        e.expected = {{ClassId::Sep, S::Yes},  {ClassId::Lnat, S::Yes}, {ClassId::Mnat, S::Yes},
                      {ClassId::Mm, S::Yes},   {ClassId::Gdmc, S::Yes}, {ClassId::Ddmc, S::Yes},
                      {ClassId::Int, S::Yes},  {ClassId::L2nat, S::Yes}, {ClassId::M2nat, S::Yes},
                      {ClassId::L, S::No},     {ClassId::M, S::No},     {ClassId::L2, S::No},
                      {ClassId::M2, S::No}};
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e = set_entry("singleton3", set_of(3, {{1, 2, 3}}), false,
                                   "a single point; the only sets that are boxes with constant "
                                   "component sum");
        e.expected = {{ClassId::Sep, S::Yes}, {ClassId::Lnat, S::Yes}, {ClassId::Mnat, S::Yes},
                      {ClassId::M, S::Yes},   {ClassId::M2, S::Yes},   {ClassId::Mm, S::Yes},
                      {ClassId::L, S::No}};
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e = set_entry("lattice1", set_where(Box({-3}, {3}), [](const Point&) {
                                       return true;
                                   }),
                                   true, "the whole line at radius 3: the windowed full lattice");
        e.expected = {{ClassId::Sep, S::Yes},
                      {ClassId::L, S::YesWithinWindow},
                      {ClassId::L2, S::YesWithinWindow},
                      {ClassId::Lnat, S::Yes},
                      {ClassId::Mnat, S::Yes},
                      {ClassId::Mm, S::Yes}};
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e = set_entry("mm_step", set_of(2, {{0, 0}, {1, -1}}), false,
                                   "a two-point multimodular staircase step; M-natural in the "
                                   "plane but with no L-natural Minkowski split");
        e.expected = {{ClassId::Mm, S::Yes},
                      {ClassId::Mnat, S::Yes},
                      {ClassId::Lnat, S::No},
                      {ClassId::L2nat, S::No},
                      {ClassId::Sep, S::No}};
        out.push_back(std::move(e));
    }
    return out;
}

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = build_catalog();
    return entries;
}

} // namespace

const std::vector<std::string>& catalog_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& e : catalog()) v.push_back(e.id);
        return v;
    }();
    return ids;
}

CatalogEntry paper_example(const std::string& id) {
    for (const auto& e : catalog())
        if (e.id == id) return e;
    throw domain_error("unknown catalog id: " + id);
}

} // namespace dcx
