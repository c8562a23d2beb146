#include "dcx/relations.hpp"

#include <algorithm>
#include <sstream>

#include "dcx/descriptions.hpp"

namespace dcx {

namespace {

RelationCell cell(ClassId row, ClassId col, char sym, bool star, std::string label,
                  std::vector<std::string> rnc = {}, std::vector<std::string> cnr = {}) {
    RelationCell c;
    c.row = row;
    c.col = col;
    c.symbol = sym;
    c.star = star;
    c.label = std::move(label);
    c.row_not_col = std::move(rnc);
    c.col_not_row = std::move(cnr);
    return c;
}

std::vector<RelationCell> build_table() {
    using C = ClassId;
    std::vector<RelationCell> t;
    for (ClassId c : all_classes()) t.push_back(cell(c, c, '=', false, ""));

    // sep row
    t.push_back(cell(C::Sep, C::Int, '<', false, "", {}, {"antidiag2"}));
    t.push_back(cell(C::Sep, C::L, 'v', false, "lin", {"box2"}, {"l_line"}));
    t.push_back(cell(C::Sep, C::L2, 'v', false, "lin", {"box2"}, {"l2_hyperplane"}));
    t.push_back(cell(C::Sep, C::Lnat, '<', false, "", {}, {"l_line"}));
    t.push_back(cell(C::Sep, C::L2nat, '<', false, "", {}, {"l2nat_sum"}));
    t.push_back(cell(C::Sep, C::M, 'v', false, "point", {"box2"}, {"antidiag3"}));
    t.push_back(cell(C::Sep, C::M2, 'v', false, "point", {"box2"}, {"common_bases"}));
    t.push_back(cell(C::Sep, C::Mnat, '<', false, "", {}, {"antidiag2"}));
    t.push_back(cell(C::Sep, C::M2nat, '<', false, "", {}, {"antidiag2"}));
    t.push_back(cell(C::Sep, C::Mm, '<', false, "", {}, {"mm_line"}));
    t.push_back(cell(C::Sep, C::Gdmc, '<', false, "", {}, {"antidiag2"}));
    t.push_back(cell(C::Sep, C::Ddmc, '<', false, "", {}, {"antidiag2"}));

    // int row
    t.push_back(cell(C::Int, C::L, '>', false, "", {"box2"}, {}));
    t.push_back(cell(C::Int, C::L2, '>', false, "", {"box2"}, {}));
    t.push_back(cell(C::Int, C::Lnat, '>', false, "", {"fig1a"}, {}));
    t.push_back(cell(C::Int, C::L2nat, '>', false, "", {"mm_step"}, {}));
    t.push_back(cell(C::Int, C::M, '>', false, "", {"box2"}, {}));
    t.push_back(cell(C::Int, C::M2, '>', false, "", {"box2"}, {}));
    t.push_back(cell(C::Int, C::Mnat, '>', false, "", {"l_line"}, {}));
    t.push_back(cell(C::Int, C::M2nat, '>', false, "", {"l_line"}, {}));
    t.push_back(cell(C::Int, C::Mm, '>', false, "", {"l_line"}, {}));
    t.push_back(cell(C::Int, C::Gdmc, '>', false, "", {"fig1a_smax"}, {}));
    t.push_back(cell(C::Int, C::Ddmc, '>', false, "", {"gdmc_not_ddmc"}, {}));

    // L row
    t.push_back(cell(C::L, C::L2, '<', false, "", {}, {"l2_hyperplane"}));
    t.push_back(cell(C::L, C::Lnat, '<', false, "", {}, {"box2"}));
    t.push_back(cell(C::L, C::L2nat, '<', false, "", {}, {"box2"}));
    t.push_back(cell(C::L, C::M, 'v', false, "none", {"l_line"}, {"antidiag3"}));
    t.push_back(cell(C::L, C::M2, 'v', false, "none", {"l_line"}, {"common_bases"}));
    t.push_back(cell(C::L, C::Mnat, 'v', false, "lin", {"l_line"}, {"fig1a"}));
    t.push_back(cell(C::L, C::M2nat, 'v', false, "lin", {"l_line"}, {"fig1a"}));
    t.push_back(cell(C::L, C::Mm, 'v', false, "lin", {"l_line"}, {"mm_line"}));
    t.push_back(cell(C::L, C::Gdmc, '<', false, "", {}, {"gdmc_not_ddmc"}));
    t.push_back(cell(C::L, C::Ddmc, '<', false, "", {}, {"ddmc_not_gdmc"}));

    // L2 row
    t.push_back(cell(C::L2, C::Lnat, 'v', false, "L", {"l2_hyperplane"}, {"box2"}));
    t.push_back(cell(C::L2, C::L2nat, '<', false, "", {}, {"l2nat_sum"}));
    t.push_back(cell(C::L2, C::M, 'v', false, "none", {"l2_hyperplane"}, {"antidiag3"}));
    t.push_back(cell(C::L2, C::M2, 'v', false, "none", {"l2_hyperplane"}, {"common_bases"}));
    t.push_back(cell(C::L2, C::Mnat, 'v', false, "lin", {"l2_hyperplane"}, {"fig1a"}));
    t.push_back(cell(C::L2, C::M2nat, 'v', false, "lin", {"l2_hyperplane"}, {"fig1a"}));
    t.push_back(cell(C::L2, C::Mm, 'v', false, "lin", {"l2_hyperplane"}, {"mm_line"}));
    t.push_back(cell(C::L2, C::Gdmc, 'v', true, ">=L", {"l2_hyperplane"}, {"gdmc_not_ddmc"}));
    t.push_back(cell(C::L2, C::Ddmc, 'v', false, ">=L", {"l2_hyperplane"}, {"ddmc_not_gdmc"}));

    // Lnat row
    t.push_back(cell(C::Lnat, C::L2nat, '<', false, "", {}, {"l2nat_sum"}));
    t.push_back(cell(C::Lnat, C::M, 'v', false, "point", {"l_line"}, {"antidiag3"}));
    t.push_back(cell(C::Lnat, C::M2, 'v', false, "point", {"l_line"}, {"common_bases"}));
    t.push_back(cell(C::Lnat, C::Mnat, '^', false, "sep", {"l_line"}, {"antidiag2"}));
    t.push_back(cell(C::Lnat, C::M2nat, '^', false, "sep", {"l_line"}, {"antidiag2"}));
    t.push_back(cell(C::Lnat, C::Mm, '^', true, "sep", {"l_line"}, {"mm_line"}));
    t.push_back(cell(C::Lnat, C::Gdmc, '<', false, "", {}, {"gdmc_not_ddmc"}));
    t.push_back(cell(C::Lnat, C::Ddmc, '<', false, "", {}, {"ddmc_not_gdmc"}));

    // L2nat row
    t.push_back(cell(C::L2nat, C::M, 'v', false, "point", {"l2nat_sum"}, {"antidiag3"}));
    t.push_back(cell(C::L2nat, C::M2, 'v', false, "point", {"l2nat_sum"}, {"antidiag3"}));
    t.push_back(cell(C::L2nat, C::Mnat, '^', false, "sep", {"l2nat_sum"}, {"antidiag2"}));
    t.push_back(cell(C::L2nat, C::M2nat, '^', false, "sep", {"l2nat_sum"}, {"antidiag2"}));
    t.push_back(cell(C::L2nat, C::Mm, '^', true, "sep", {"l2nat_sum"}, {"mm_step"}));
    t.push_back(cell(C::L2nat, C::Gdmc, '^', true, ">=Lnat", {"l2nat_sum"}, {"gdmc_not_ddmc"}));
    t.push_back(cell(C::L2nat, C::Ddmc, '^', false, ">=Lnat", {"l2nat_sum"}, {"antidiag2"}));

    // M row
    t.push_back(cell(C::M, C::M2, '<', false, "", {}, {"common_bases"}));
    t.push_back(cell(C::M, C::Mnat, '<', false, "", {}, {"fig1a"}));
    t.push_back(cell(C::M, C::M2nat, '<', false, "", {}, {"fig1a"}));
    t.push_back(cell(C::M, C::Mm, 'v', true, "", {"shat"}, {"mm_line"}));
    t.push_back(cell(C::M, C::Gdmc, 'v', true, "", {"fig1a_smax"}, {"diag2"}));
    t.push_back(cell(C::M, C::Ddmc, 'v', true, "", {"fig1a_smax"}, {"diag2"}));

    // M2 row
    t.push_back(cell(C::M2, C::Mnat, 'v', true, "M", {"common_bases"}, {"fig1a"}));
    t.push_back(cell(C::M2, C::M2nat, '<', false, "", {}, {"fig1a"}));
    t.push_back(cell(C::M2, C::Mm, 'v', true, "", {"common_bases"}, {"mm_line"}));
    t.push_back(cell(C::M2, C::Gdmc, 'v', true, "", {"fig1a_smax"}, {"diag2"}));
    t.push_back(cell(C::M2, C::Ddmc, 'v', true, "", {"fig1a_smax"}, {"diag2"}));

    // Mnat row
    t.push_back(cell(C::Mnat, C::M2nat, '<', false, "", {}, {"common_bases"}));
    t.push_back(cell(C::Mnat, C::Mm, '^', true, ">sep", {"fig1b"}, {"mm_line"}));
    t.push_back(cell(C::Mnat, C::Gdmc, '^', true, ">sep", {"fig1a_smax"}, {"diag2"}));
    t.push_back(cell(C::Mnat, C::Ddmc, '^', true, ">sep", {"fig1a_smax"}, {"diag2"}));

    // M2nat row: no desk-scale refuter shows a multimodular or d.m.c. set outside M2nat,
    // so those directions carry the M2nat-side witness only
    t.push_back(cell(C::M2nat, C::Mm, '^', true, ">sep", {"fig1b"}, {}));
    t.push_back(cell(C::M2nat, C::Gdmc, '^', true, ">sep", {"fig1a_smax"}, {"diag2"}));
    t.push_back(cell(C::M2nat, C::Ddmc, '^', true, ">sep", {"fig1a_smax"}, {"diag2"}));

    // mm row
    t.push_back(cell(C::Mm, C::Gdmc, '^', true, ">sep", {"fig1a_smax"}, {"diag2"}));
    t.push_back(cell(C::Mm, C::Ddmc, '^', true, ">sep", {"fig1a_smax"}, {"diag2"}));

    // gdmc row
    t.push_back(cell(C::Gdmc, C::Ddmc, '^', false, ">=Lnat", {"gdmc_not_ddmc"}, {"ddmc_not_gdmc"}));
    return t;
}

bool windowed_label(const std::string& label) {
    return label == "lin" || label == "L" || label == ">=L" || label == "none";
}

std::string cell_text(const RelationCell& c) {
    std::string s(1, c.symbol);
    if (c.star) s += '*';
    if (!c.label.empty()) {
        s += ' ';
        s += c.label;
        if (windowed_label(c.label)) s += "[w]";
    }
    return s;
}

} // namespace

const std::vector<RelationCell>& relation_table() {
    static const std::vector<RelationCell> t = build_table();
    return t;
}

std::string table_text() {
    const auto& classes = all_classes();
    std::map<std::pair<ClassId, ClassId>, const RelationCell*> at;
    for (const auto& c : relation_table()) at[{c.row, c.col}] = &c;

    std::ostringstream os;
    os << "relations between the discrete convexity classes (upper triangle, rows vs columns)\n";
    os << "symbols: = same class, < row properly inside column, > row properly contains column,\n";
    os << "         ^ no inclusion (intersection holds every separable convex function),\n";
    os << "         v no inclusion (it does not)\n";
    os << "marks:   * cell established here first, >= one-sided intersection label,\n";
    os << "         [w] intersection verified in windowed semantics\n";
    os << "\n";
    auto pad = [](const std::string& s, size_t w) {
        std::string r = s;
        if (r.size() < w) r.append(w - r.size(), ' ');
        return r;
    };
    std::string header = pad("", 8);
    for (ClassId c : classes) header += pad(class_code(c), 10);
    while (!header.empty() && header.back() == ' ') header.pop_back();
    os << header << "\n";
    for (ClassId row : classes) {
        std::string line = pad(class_code(row), 8);
        for (ClassId col : classes) {
            auto it = at.find({row, col});
            line += pad(it == at.end() ? "" : cell_text(*it->second), 10);
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << "\n";
    }
    return os.str();
}

// ------------------------------------------------------------- suites

const std::map<std::string, ClassReport>& catalog_reports() {
    static const std::map<std::string, ClassReport> reports = [] {
        std::map<std::string, ClassReport> m;
        for (const auto& id : catalog_ids()) {
            CatalogEntry e = paper_example(id);
            m.emplace(id, e.classify());
        }
        return m;
    }();
    return reports;
}

namespace {

bool recheckable(const std::string& ineq) {
    return ineq != "decomposition_search" && ineq != "recombination" &&
           ineq != "component_class" && !ineq.empty();
}

GenSpec spec_for(const std::string& cls, int dim, Coord radius, std::uint64_t seed) {
    GenSpec s;
    s.cls = cls;
    s.dim = dim;
    s.radius = radius;
    s.value_range = 6;
    s.seed = seed;
    return s;
}

} // namespace

SuiteResult catalog_fidelity_suite() {
    SuiteResult r;
    r.name = "catalog_fidelity";
    for (const auto& id : catalog_ids()) {
        CatalogEntry e = paper_example(id);
        const ClassReport& rep = catalog_reports().at(id);
        for (const auto& [cls, want] : e.expected) {
            Status got = rep.at(cls).status;
            r.expect(got == want, id + "/" + class_code(cls) + ": expected " + status_code(want) +
                                      ", got " + status_code(got));
        }
        for (const auto& [cls, v] : rep.verdicts) {
            if (v.status != Status::No || !v.witness) continue;
            if (!recheckable(v.witness->inequality)) continue;
            r.expect(recheck_witness(e.object, *v.witness),
                     id + "/" + class_code(cls) + ": witness does not re-check");
        }
    }
    // set/function consistency spot checks (sets are classified through indicators)
    for (const std::string& id : {"fig1a", "antidiag2", "mm_line"}) {
        CatalogEntry e = paper_example(id);
        DiscreteSet s = e.object.domain();
        ClassReport direct = classify_all(indicator(s, e.object.window), e.certs);
        const ClassReport& via = catalog_reports().at(id);
        bool same = true;
        for (ClassId c : all_classes())
            if (direct.at(c).status != via.at(c).status) same = false;
        r.expect(same, id + ": set and indicator classifications differ");
    }
    return r;
}

SuiteResult equivalence_suite(int trials, std::uint64_t seed) {
    SuiteResult r;
    r.name = "lnat_variant_equivalence";
    auto check = [&](const DiscreteFunction& f, const std::string& what) {
        Status a = is_lnat(f, LnatVariant::A).status;
        for (LnatVariant v : {LnatVariant::B, LnatVariant::C, LnatVariant::D, LnatVariant::E,
                              LnatVariant::F}) {
            Status s = is_lnat(f, v).status;
            if (s != a) {
                r.fail(what + ": variant " + std::to_string(int(v)) + " says " + status_code(s) +
                       ", variant (a) says " + status_code(a));
                return;
            }
        }
        r.pass();
    };
    for (int t = 0; t < trials; ++t) {
        int dim = 1 + t % 4;
        Coord radius = 1 + t % 3;
        std::uint64_t s = seed + std::uint64_t(t) * 7771;
        switch (t % 5) {
            case 0: check(gen_lnat_function(spec_for("lnat", dim, radius, s)), "lnat fn"); break;
            case 1: {
                DiscreteSet st = gen_lnat_set(spec_for("lnat_set", dim, radius, s));
                check(indicator(st), "lnat set");
                break;
            }
            case 2: check(gen_noise(spec_for("noise", dim, radius, s)), "noise"); break;
            case 3: check(gen_separable(spec_for("sep", dim, radius, s)), "sep"); break;
            case 4:
                check(gen_multimodular_function(spec_for("mm", dim, radius, s)), "mm fn");
                break;
        }
    }
    for (const auto& id : catalog_ids()) check(paper_example(id).object, "catalog " + id);
    return r;
}

SuiteResult dtransform_duality_suite(int trials, std::uint64_t seed) {
    SuiteResult r;
    r.name = "dtransform_duality";
    auto check = [&](const DiscreteFunction& f, const std::string& what) {
        Status mm = is_multimodular(f).status;
        Status ln = is_lnat(d_transform(f, DTransformDirection::ToLnat), LnatVariant::A).status;
        r.expect(mm == ln, what + ": multimodular " + status_code(mm) + " vs transformed L-natural " +
                               status_code(ln));
        if (multimodular_direct_applicable(f)) {
            Status direct = is_multimodular_direct(f).status;
            r.expect(direct == mm, what + ": direct route " + status_code(direct) +
                                       " disagrees with transform route " + status_code(mm));
        }
    };
    for (int t = 0; t < trials; ++t) {
        int dim = 1 + t % 4;
        Coord radius = 1 + t % 2;
        std::uint64_t s = seed + std::uint64_t(t) * 3331;
        switch (t % 4) {
            case 0: check(gen_multimodular_function(spec_for("mm", dim, radius, s)), "mm fn"); break;
            case 1: check(gen_noise(spec_for("noise", dim, radius, s)), "noise"); break;
            case 2: check(gen_separable(spec_for("sep", dim, radius, s)), "sep"); break;
            case 3: {
                // dense box values so the direct route applies
                Rng rng(s);
                int d2 = 1 + t % 3;
                Box box(Point(size_t(d2), -1), Point(size_t(d2), 1));
                std::map<Point, Rat> entries;
                for (const auto& x : box.lattice_points())
                    entries[x] = Rat(rng.uniform(-8, 8));
                check(DiscreteFunction(d2, std::move(entries), box), "dense box fn");
                break;
            }
        }
    }
    for (const std::string& id : {"quad_2sep", "quad_rank1", "mm_line", "l_line", "fig1a"})
        check(paper_example(id).object, "catalog " + id);
    return r;
}

SuiteResult descriptions_roundtrip_suite(int trials, std::uint64_t seed) {
    SuiteResult r;
    r.name = "description_roundtrips";
    for (int t = 0; t < trials; ++t) {
        int dim = 2 + t % 3;
        Coord radius = 1 + t % 3;
        std::uint64_t s = seed + std::uint64_t(t) * 911;
        DiscreteSet ln = gen_lnat_set(spec_for("lnat_set", dim, radius, s));
        LnatDescription d = extract_lnat_description(ln);
        r.expect(d.triangle_closed(), "extracted description not triangle-closed");
        DiscreteSet rebuilt = build_lnat_set(d, ln.bounding_box());
        r.expect(rebuilt == ln, "L-natural description round-trip failed");

        DiscreteSet mm = gen_multimodular_set(spec_for("mm_set", dim, radius, s));
        IntervalBounds b = extract_interval_bounds(mm);
        DiscreteSet rebuilt2 = build_multimodular_set(b, mm.bounding_box());
        r.expect(rebuilt2 == mm, "multimodular interval-bound round-trip failed");
    }
    return r;
}

SuiteResult rank_theorem_suite(int trials, std::uint64_t seed) {
    SuiteResult r;
    r.name = "interval_rank_theorem";
    for (int t = 0; t < trials; ++t) {
        int dim = 2 + t % 3;
        std::uint64_t s = seed + std::uint64_t(t) * 127;
        IntervalRank rank = gen_interval_rank(spec_for("rank", dim, dim >= 4 ? 2 : 3, s));
        DiscreteSet p = polymatroid_from_rank(rank);
        r.expect(is_mnat(indicator(p)).status == Status::Yes, "rank polymatroid not M-natural");
        r.expect(is_multimodular(indicator(p)).status == Status::Yes,
                 "rank polymatroid not multimodular");
        IntervalRank back = extract_interval_rank(p);
        DiscreteSet rebuilt = polymatroid_from_rank(back);
        r.expect(rebuilt == p, "interval-rank round-trip failed");

        // the maximal elements stay M-convex and multimodular
        std::set<Point> maximal;
        for (const auto& x : p.points) {
            bool is_max = true;
            for (const auto& y : p.points)
                if (y != x && leq(x, y)) {
                    is_max = false;
                    break;
                }
            if (is_max) maximal.insert(x);
        }
        DiscreteSet pmax(p.dim, std::move(maximal));
        r.expect(is_m(indicator(pmax)).status == Status::Yes, "maximal subset not M-convex");
        r.expect(is_multimodular(indicator(pmax)).status == Status::Yes,
                 "maximal subset not multimodular");

        // the lemma (n up to 6): the run-decomposition rho is normalized and
        // submodular; its superset-minimization is a full rank function and, at
        // buildable sizes, cuts out the same polymatroid
        int lemn = 2 + t % 5;
        IntervalRank lem = gen_interval_rank(spec_for("rank", lemn, 2, s ^ 0x5a5a));
        RankFunction raw = rank_to_rho(lem);
        r.expect(validate_rank_function(raw, false).status == Status::Yes,
                 "run-decomposition rho fails normalization/submodularity");
        RankFunction mono = monotonize(raw);
        r.expect(validate_rank_function(mono, true).status == Status::Yes,
                 "monotonized run-decomposition is not a rank function");
        if (lemn <= 4)
            r.expect(polymatroid_from_rho(mono) == polymatroid_from_rank(lem),
                     "monotonized rho describes a different polymatroid");
    }
    // the reverse direction on randomly found M-natural + multimodular sets
    for (int t = 0; t < std::max(1, trials / 4); ++t) {
        DiscreteSet s = gen_mnat_set(spec_for("mnat_set", 2 + t % 3, 2, seed + 31 * t));
        if (is_multimodular(indicator(s)).status != Status::Yes) continue;
        IntervalRank back = extract_interval_rank(s);
        if (validate_interval_rank(back).status != Status::Yes) {
            r.fail("extracted rank table invalid for an M-natural multimodular set");
            continue;
        }
        r.expect(polymatroid_from_rank(back) == s,
                 "M-natural multimodular set not recovered from its interval ranks");
    }
    return r;
}

SuiteResult mconvex_mm_dim3_suite(int trials, std::uint64_t seed) {
    SuiteResult r;
    r.name = "mconvex_multimodular_dim3";
    for (int t = 0; t < trials; ++t) {
        DiscreteSet b = gen_m_base(spec_for("m_base", 3, 3, seed + std::uint64_t(t) * 53));
        r.expect(is_multimodular(indicator(b)).status == Status::Yes,
                 "an M-convex set in dimension 3 failed multimodularity");
    }
    // the 4-dimensional companion fails multimodularity, with the classic path
    CatalogEntry shat = paper_example("shat");
    const ClassReport& rep = catalog_reports().at("shat");
    r.expect(rep.at(ClassId::M).status == Status::Yes, "shat must be M-convex");
    r.expect(rep.at(ClassId::Mm).status == Status::No, "shat must not be multimodular");
    if (rep.at(ClassId::Mm).witness)
        r.expect(recheck_witness(shat.object, *rep.at(ClassId::Mm).witness),
                 "shat multimodularity witness does not re-check");
    {
        DiscreteFunction tr = d_transform(shat.object, DTransformDirection::ToLnat);
        Point y = {2, 2, 5, 6}, z = {3, 4, 6, 6};
        auto [up, down] = midpoint_roundings(y, z);
        bool classic = tr.value(y).finite() && tr.value(z).finite() &&
                       (tr.value(up).is_inf() || tr.value(down).is_inf());
        Point mapped = d_transform_point(up, DTransformDirection::FromLnat);
        r.expect(classic && mapped == Point({3, 0, 3, 0}) &&
                     shat.object.value(mapped).is_inf(),
                 "classic transform path (3,0,3,0) does not re-derive");
    }
    return r;
}

SuiteResult intersection_exhaustive_n2_suite() {
    SuiteResult r;
    r.name = "intersections_exhaustive_n2";
    Box box({0, 0}, {2, 2});
    std::vector<Point> pts = box.lattice_points();
    for (unsigned mask = 1; mask < (1u << 9); ++mask) {
        std::set<Point> s;
        for (int i = 0; i < 9; ++i)
            if (mask & (1u << i)) s.insert(pts[size_t(i)]);
        DiscreteSet set(2, std::move(s));
        DiscreteFunction f = indicator(set);
        bool lnat = is_lnat(f, LnatVariant::A).status == Status::Yes;
        bool mnat = is_mnat(f).status == Status::Yes;
        bool mm = is_multimodular(f).status == Status::Yes;
        bool box_full = box_ops(set).second;
        if (mm && lnat) r.expect(box_full, "multimodular and L-natural but not a box: mask " +
                                               std::to_string(mask));
        if (lnat && mnat) r.expect(box_full, "L-natural and M-natural but not a box: mask " +
                                                 std::to_string(mask));
        r.expect(mnat == mm, "M-natural and multimodular disagree in the plane: mask " +
                                 std::to_string(mask));
    }
    return r;
}

SuiteResult intersection_random_suite(int trials, std::uint64_t seed) {
    SuiteResult r;
    r.name = "intersections_random";
    for (int t = 0; t < trials; ++t) {
        std::uint64_t s = seed + std::uint64_t(t) * 17389;

        { // L2nat certificate objects that are multimodular must be boxes
            DiscreteSet s1 = gen_lnat_set(spec_for("lnat_set", 3, 1 + t % 2, s));
            DiscreteSet s2 = gen_lnat_set(spec_for("lnat_set", 3, 1, s ^ 0xabcd));
            DiscreteSet sum = minkowski_sum(s1, s2);
            Certificate cert;
            cert.kind = CertKind::Minkowski;
            cert.part1 = indicator(s1);
            cert.part2 = indicator(s2);
            Verdict cv = verify_certificate(indicator(sum), cert, ClassId::L2nat);
            r.expect(cv.status == Status::Yes, "construction certificate failed to verify");
            if (is_multimodular(indicator(sum)).status == Status::Yes)
                r.expect(box_ops(sum).second, "multimodular L2nat-certified set is not a box");
        }
        { // plain multimodular vs L-natural at n=3
            DiscreteSet ln = gen_lnat_set(spec_for("lnat_set", 3, 3, s ^ 0x77));
            if (is_multimodular(indicator(ln)).status == Status::Yes)
                r.expect(box_ops(ln).second, "multimodular L-natural set is not a box");
            DiscreteSet mm = gen_multimodular_set(spec_for("mm_set", 3, 3, s ^ 0x99));
            if (is_lnat(indicator(mm), LnatVariant::A).status == Status::Yes)
                r.expect(box_ops(mm).second, "L-natural multimodular set is not a box");
        }
        { // windowed L2 objects that are L-natural must be L within the window
            GenSpec base = spec_for("lnat_set", 2, 1, s ^ 0x1111);
            DiscreteSet t1 = gen_lnat_set(base);
            base.seed ^= 0x2222;
            DiscreteSet t2 = gen_lnat_set(base);
            DiscreteSet wsum = minkowski_sum(t1, t2);
            Coord R = 3;
            Box window(Point(3, -R), Point(3, R));
            std::set<Point> pts;
            for (Coord sh = -3 * R; sh <= 3 * R; ++sh)
                for (const auto& w : wsum.points) {
                    Point p{sh, checked_add(w[0], sh), checked_add(w[1], sh)};
                    if (window.contains(p)) pts.insert(std::move(p));
                }
            if (!pts.empty()) {
                DiscreteFunction obj = indicator(DiscreteSet(3, std::move(pts)), window);
                if (is_lnat(obj, LnatVariant::A).status == Status::Yes)
                    r.expect(is_l(obj).status == Status::YesWithinWindow,
                             "windowed L2 object is L-natural but not L within its window");
            }
            DiscreteSet lset = gen_l_set(spec_for("l_set", 2 + t % 3, 3, s ^ 0x3333));
            Box lwin = gen_l_window(spec_for("l_set", 2 + t % 3, 3, s ^ 0x3333));
            DiscreteFunction lf = indicator(lset, lwin);
            r.expect(is_lnat(lf, LnatVariant::A).status == Status::Yes,
                     "windowed L set is not L-natural");
            r.expect(is_l(lf).status == Status::YesWithinWindow,
                     "windowed L set is not L within its window");
        }
        { // M2 certificate objects that are M-natural must be M-convex
            DiscreteSet b1 = gen_m_base(spec_for("m_base", 3, 3, s ^ 0x4444));
            // a coordinate rotation translated back through a common point
            Point anchor = *b1.points.begin();
            std::set<Point> rotated;
            for (const auto& x : b1.points) {
                Point y{x[1], x[2], x[0]};
                rotated.insert(add(sub(y, Point{anchor[1], anchor[2], anchor[0]}), anchor));
            }
            DiscreteSet b2(3, std::move(rotated));
            if (is_m(indicator(b2)).status == Status::Yes) {
                DiscreteSet common = intersect(b1, b2);
                Certificate cert;
                cert.kind = CertKind::Intersection;
                cert.part1 = indicator(b1);
                cert.part2 = indicator(b2);
                Verdict cv = verify_certificate(indicator(common), cert, ClassId::M2);
                r.expect(cv.status == Status::Yes, "intersection certificate failed to verify");
                if (is_mnat(indicator(common)).status == Status::Yes)
                    r.expect(is_m(indicator(common)).status == Status::Yes,
                             "M-natural M2-certified set is not M-convex");
            }
            r.expect(is_mnat(indicator(b1)).status == Status::Yes, "M base set not M-natural");
        }
    }
    // no object anywhere is both L and M flavored (empty intersections)
    for (const auto& [id, rep] : catalog_reports()) {
        r.expect(!(is_positive(rep.at(ClassId::L).status) && rep.at(ClassId::M).status == Status::Yes),
                 id + " claims both L and M");
        r.expect(!(is_positive(rep.at(ClassId::L2).status) && rep.at(ClassId::M2).status == Status::Yes),
                 id + " claims both L2 and M2");
    }
    return r;
}

SuiteResult argmin_preservation_suite(const std::string& cls, int trials, std::uint64_t seed) {
    SuiteResult r;
    r.name = "argmin_preservation_" + cls;
    for (int t = 0; t < trials; ++t) {
        std::uint64_t s = seed + std::uint64_t(t) * 2609;
        int dim = 2 + t % 3;
        DiscreteFunction f;
        if (cls == "sep")
            f = gen_separable(spec_for(cls, dim, 3, s));
        else if (cls == "Lnat")
            f = gen_lnat_function(spec_for(cls, dim, 2, s));
        else if (cls == "Mnat")
            f = gen_mnat_function(spec_for(cls, dim, 3, s));
        else if (cls == "mm")
            f = gen_multimodular_function(spec_for(cls, dim, 2, s));
        else if (cls == "M")
            f = gen_m_function(spec_for(cls, dim, 3, s));
        else if (cls == "L") {
            GenSpec sp = spec_for(cls, dim, 3, s);
            f = indicator(gen_l_set(sp), gen_l_window(sp));
        } else
            throw domain_error("argmin suite: unsupported class " + cls);

        Rng rng(s ^ 0xfeed);
        std::vector<Rat> p(size_t(f.dim));
        Coord den = 1 + rng.uniform(0, 3);
        for (auto& c : p) c = Rat(rng.uniform(-3 * den, 3 * den), den);
        if (cls == "L") {
            // tilt along directions orthogonal to the all-ones line
            Rat total = 0;
            for (const auto& c : p) total += c;
            p[0] -= total;
        }
        DiscreteSet arg = argmin_set(tilt(f, p));
        Verdict v;
        if (cls == "sep") {
            v = box_ops(arg).second ? Verdict::yes() : Verdict::unknown("not a box");
        } else if (cls == "Lnat")
            v = is_lnat(indicator(arg), LnatVariant::A);
        else if (cls == "Mnat")
            v = is_mnat(indicator(arg));
        else if (cls == "mm")
            v = is_multimodular(indicator(arg));
        else if (cls == "M")
            v = is_m(indicator(arg));
        else if (cls == "L")
            v = is_l(indicator(arg, f.window));
        r.expect(is_positive(v.status),
                 cls + " trial " + std::to_string(t) + ": argmin left the class");
    }
    return r;
}

SuiteResult inclusion_suite(int trials, std::uint64_t seed) {
    SuiteResult r;
    r.name = "inclusions";
    for (int t = 0; t < trials; ++t) {
        std::uint64_t s = seed + std::uint64_t(t) * 4007;
        int dim = 1 + t % 4;
        {
            DiscreteFunction f = gen_separable(spec_for("sep", dim, 2, s));
            r.expect(is_lnat(f, LnatVariant::A).status == Status::Yes, "sep not L-natural");
            r.expect(is_mnat(f).status == Status::Yes, "sep not M-natural");
            r.expect(is_multimodular(f).status == Status::Yes, "sep not multimodular");
            r.expect(is_global_dmc(f).status == Status::Yes, "sep not globally d.m.c.");
            r.expect(is_directed_dmc(f).status == Status::Yes, "sep not directed d.m.c.");
        }
        {
            DiscreteFunction f = gen_lnat_function(spec_for("lnat", std::max(2, dim), 2, s));
            r.expect(is_integrally_convex(f).status == Status::Yes, "lnat not integrally convex");
            r.expect(is_global_dmc(f).status == Status::Yes, "lnat not globally d.m.c.");
            r.expect(is_directed_dmc(f).status == Status::Yes, "lnat not directed d.m.c.");
            r.expect(is_submodular(f).status == Status::Yes, "lnat not submodular");
        }
        {
            DiscreteSet b = gen_m_base(spec_for("m_base", std::max(2, dim), 2, s));
            DiscreteFunction f = indicator(b);
            r.expect(is_mnat(f).status == Status::Yes, "M base not M-natural");
            r.expect(is_integrally_convex(f).status == Status::Yes,
                     "M base not integrally convex");
        }
        {
            DiscreteSet m = gen_mnat_set(spec_for("mnat_set", std::max(2, dim), 2, s));
            r.expect(is_integrally_convex(indicator(m)).status == Status::Yes,
                     "M-natural set not integrally convex");
        }
        {
            DiscreteFunction f = gen_multimodular_function(spec_for("mm", std::max(2, dim), 2, s));
            r.expect(is_integrally_convex(f).status == Status::Yes,
                     "multimodular fn not integrally convex");
        }
    }
    return r;
}

SuiteResult table_evidence_suite() {
    SuiteResult r;
    r.name = "table_evidence";
    const auto& reports = catalog_reports();
    auto positive = [&](const std::string& id, ClassId c) {
        return is_positive(reports.at(id).at(c).status);
    };
    auto negative = [&](const std::string& id, ClassId c) {
        return reports.at(id).at(c).status == Status::No;
    };

    for (const auto& c : relation_table()) {
        if (c.symbol == '=') continue;
        std::string tag = std::string(class_code(c.row)) + "/" + class_code(c.col);
        for (const auto& id : c.row_not_col)
            r.expect(positive(id, c.row) && negative(id, c.col),
                     tag + ": witness " + id + " fails the row-not-column direction");
        for (const auto& id : c.col_not_row)
            r.expect(positive(id, c.col) && negative(id, c.row),
                     tag + ": witness " + id + " fails the column-not-row direction");
        if (c.symbol == 'v' || c.symbol == '^')
            r.expect(!c.row_not_col.empty() || !c.col_not_row.empty(),
                     tag + ": incomparable cell has no catalog evidence");

        // no catalog entry may contradict a containment cell
        if (c.symbol == '<')
            for (const auto& [id, rep] : reports)
                r.expect(!(is_positive(rep.at(c.row).status) && rep.at(c.col).status == Status::No),
                         tag + ": " + id + " contradicts the containment");
        if (c.symbol == '>')
            for (const auto& [id, rep] : reports)
                r.expect(!(is_positive(rep.at(c.col).status) && rep.at(c.row).status == Status::No),
                         tag + ": " + id + " contradicts the containment");
        // every separable catalog object must sit inside a ^ cell's intersection
        if (c.symbol == '^')
            for (const auto& [id, rep] : reports)
                if (rep.at(ClassId::Sep).status == Status::Yes)
                    r.expect(is_positive(rep.at(c.row).status) && is_positive(rep.at(c.col).status),
                             tag + ": separable " + id + " missing from the intersection");

        // intersection labels
        auto both = [&](const std::string& id) {
            return is_positive(reports.at(id).at(c.row).status) &&
                   is_positive(reports.at(id).at(c.col).status);
        };
        if (c.label == "point") {
            for (const auto& [id, rep] : reports)
                if (both(id))
                    r.expect(paper_example(id).object.dom_size() == 1,
                             tag + ": " + id + " in a point-intersection cell is not a point");
            r.expect(both("singleton3"), tag + ": singleton missing from point intersection");
        } else if (c.label == "none") {
            for (const auto& [id, rep] : reports)
                r.expect(!both(id), tag + ": " + id + " lies in an empty intersection");
        } else if (c.label == "lin") {
            // linear within the window: separable with constant slopes per coordinate
            for (const auto& [id, rep] : reports)
                if (both(id)) {
                    Verdict sv = is_separable(paper_example(id).object);
                    bool linear = sv.status == Status::Yes;
                    if (linear && sv.parts)
                        for (const auto& phi : sv.parts->phi) {
                            std::optional<Rat> slope;
                            std::optional<Rat> prev;
                            for (const auto& [tt, vv] : phi) {
                                if (prev) {
                                    Rat d = vv - *prev;
                                    if (slope && d != *slope) linear = false;
                                    slope = d;
                                }
                                prev = vv;
                            }
                        }
                    r.expect(linear, tag + ": " + id + " in a linear intersection is not linear");
                }
            r.expect(both("lattice1"), tag + ": windowed lattice missing from lin cell");
        } else if (c.label == "sep") {
            for (const auto& [id, rep] : reports)
                if (both(id))
                    r.expect(rep.at(ClassId::Sep).status == Status::Yes,
                             tag + ": " + id + " in a separable intersection is not separable");
        } else if (c.label == "L") {
            for (const auto& [id, rep] : reports)
                if (both(id))
                    r.expect(rep.at(ClassId::L).status == Status::YesWithinWindow,
                             tag + ": " + id + " in the L intersection is not L within window");
        } else if (c.label == "M") {
            for (const auto& [id, rep] : reports)
                if (both(id))
                    r.expect(rep.at(ClassId::M).status == Status::Yes,
                             tag + ": " + id + " in the M intersection is not M-convex");
        } else if (c.label == ">sep") {
            bool strict = false;
            for (const auto& [id, rep] : reports)
                if (both(id) && rep.at(ClassId::Sep).status == Status::No) strict = true;
            r.expect(strict, tag + ": no witness that the intersection exceeds separable");
        } else if (c.label == ">=L") {
            r.expect(both("l_line"), tag + ": L witness missing from a >=L cell");
        } else if (c.label == ">=Lnat") {
            r.expect(both("box2"), tag + ": L-natural witness missing from a >=Lnat cell");
        }
    }
    return r;
}

std::vector<SuiteResult> run_suite(const std::string& name, int trials, std::uint64_t seed) {
    std::vector<SuiteResult> out;
    auto add = [&](SuiteResult s) { out.push_back(std::move(s)); };
    if (name == "inclusions" || name == "all") add(inclusion_suite(trials, seed));
    if (name == "intersections" || name == "all") {
        add(intersection_exhaustive_n2_suite());
        add(intersection_random_suite(std::max(1, trials / 2), seed));
    }
    if (name == "argmin" || name == "all")
        for (const std::string& cls : {"sep", "Lnat", "Mnat", "mm", "M"})
            add(argmin_preservation_suite(cls, trials, seed));
    if (name == "equivalence" || name == "all") {
        add(equivalence_suite(trials, seed));
        add(dtransform_duality_suite(trials, seed));
    }
    if (name == "all") {
        add(catalog_fidelity_suite());
        add(descriptions_roundtrip_suite(std::max(1, trials / 2), seed));
        add(rank_theorem_suite(std::max(1, trials / 2), seed));
        add(mconvex_mm_dim3_suite(std::max(1, trials / 2), seed));
        add(table_evidence_suite());
    }
    if (out.empty()) throw domain_error("unknown suite name: " + name);
    return out;
}

} // namespace dcx
