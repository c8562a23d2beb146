#include "dcx/classify.hpp"

#include <algorithm>
#include <atomic>
#include <limits>

#include "dcx/geometry.hpp"

namespace dcx {

const char* class_code(ClassId c) {
    switch (c) {
        case ClassId::Sep: return "sep";
        case ClassId::Int: return "int";
        case ClassId::L: return "L";
        case ClassId::L2: return "L2";
        case ClassId::Lnat: return "Lnat";
        case ClassId::L2nat: return "L2nat";
        case ClassId::M: return "M";
        case ClassId::M2: return "M2";
        case ClassId::Mnat: return "Mnat";
        case ClassId::M2nat: return "M2nat";
        case ClassId::Mm: return "mm";
        case ClassId::Gdmc: return "gdmc";
        case ClassId::Ddmc: return "ddmc";
    }
    return "?";
}

const std::vector<ClassId>& all_classes() {
    static const std::vector<ClassId> v = {
        ClassId::Sep, ClassId::Int,  ClassId::L,    ClassId::L2,    ClassId::Lnat,
        ClassId::L2nat, ClassId::M,  ClassId::M2,   ClassId::Mnat,  ClassId::M2nat,
        ClassId::Mm,  ClassId::Gdmc, ClassId::Ddmc};
    return v;
}

std::optional<ClassId> class_from_code(const std::string& code) {
    for (ClassId c : all_classes())
        if (code == class_code(c)) return c;
    return std::nullopt;
}

const char* status_code(Status s) {
    switch (s) {
        case Status::Yes: return "Yes";
        case Status::No: return "No";
        case Status::YesWithinWindow: return "YesWithinWindow";
        case Status::Unknown: return "Unknown";
    }
    return "?";
}

const char* cert_kind_code(CertKind k) {
    switch (k) {
        case CertKind::Minkowski: return "minkowski";
        case CertKind::InfimalConvolution: return "infimal_convolution";
        case CertKind::PointwiseSum: return "pointwise_sum";
        case CertKind::Intersection: return "intersection";
    }
    return "?";
}

std::optional<CertKind> cert_kind_from_code(const std::string& code) {
    for (CertKind k : {CertKind::Minkowski, CertKind::InfimalConvolution, CertKind::PointwiseSum,
                       CertKind::Intersection})
        if (code == cert_kind_code(k)) return k;
    return std::nullopt;
}

ExtVal SeparableParts::eval(const Point& x) const {
    if (x.size() != phi.size()) throw dimension_mismatch("SeparableParts::eval");
    Rat s = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        auto it = phi[i].find(x[i]);
        if (it == phi[i].end()) return ExtVal::infinity();
        s += it->second;
    }
    return ExtVal(s);
}

// ----------------------------------------------------------- helpers

namespace {

Point unit(int dim, int i /*0-based*/, Coord v = 1) {
    Point p(dim, 0);
    p[i] = v;
    return p;
}

Point shifted(const Point& x, Coord mu) {
    Point r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = checked_add(x[i], mu);
    return r;
}

Witness pair_witness(std::string ineq, const Point& x, const Point& y, std::string note = "") {
    Witness w;
    w.inequality = std::move(ineq);
    w.points = {x, y};
    w.note = std::move(note);
    return w;
}

} // namespace

// ----------------------------------------------------------- separable

Verdict is_separable(const DiscreteFunction& f) {
    DiscreteSet dom = f.domain();
    auto [bb, full] = box_ops(dom);
    if (!full) {
        // name the first box point missing from dom
        for (const auto& p : bb.lattice_points())
            if (!dom.contains(p)) {
                Witness w;
                w.inequality = "dom_box";
                w.points = {p};
                w.note = "dom is not a box: this bounding-box point is missing";
                return Verdict::no(std::move(w));
            }
        throw internal_error("box_ops inconsistent with lattice enumeration");
    }
    const int n = f.dim;
    for (const auto& [x, vx] : f.entries) {
        for (int i = 0; i < n; ++i) {
            if (x[i] + 2 <= bb.upper[i]) {
                Point x1 = x, x2 = x;
                ++x1[i];
                x2[i] += 2;
                const Rat& v1 = f.entries.at(x1);
                const Rat& v2 = f.entries.at(x2);
                if (vx + v2 < 2 * v1) {
                    Witness w;
                    w.inequality = "axis_convexity";
                    w.points = {x};
                    w.indices = {i + 1};
                    return Verdict::no(std::move(w));
                }
            }
            for (int j = i + 1; j < n; ++j) {
                if (x[i] + 1 > bb.upper[i] || x[j] + 1 > bb.upper[j]) continue;
                Point xi = x, xj = x, xij = x;
                ++xi[i];
                ++xj[j];
                ++xij[i];
                ++xij[j];
                Rat mixed = f.entries.at(xij) - f.entries.at(xi) - f.entries.at(xj) + vx;
                if (mixed != 0) {
                    Witness w;
                    w.inequality = "mixed_difference";
                    w.points = {x};
                    w.indices = {i + 1, j + 1};
                    return Verdict::no(std::move(w));
                }
            }
        }
    }
    // extract parts anchored at the lower corner
    SeparableParts parts;
    parts.phi.resize(n);
    const Point& a = bb.lower;
    const Rat base = f.entries.at(a);
    for (int i = 0; i < n; ++i) {
        for (Coord t = bb.lower[i]; t <= bb.upper[i]; ++t) {
            Point p = a;
            p[i] = t;
            Rat v = f.entries.at(p);
            parts.phi[i][t] = (i == 0) ? v : v - base;
        }
    }
    for (const auto& [x, vx] : f.entries)
        if (parts.eval(x) != ExtVal(vx))
            throw internal_error("separable part extraction failed to reproduce f");
    Verdict v = Verdict::yes();
    v.parts = std::move(parts);
    return v;
}

// ----------------------------------------------------- integral convexity

Verdict is_integrally_convex(const DiscreteFunction& f) {
    DiscreteSet dom = f.domain();
    CellCheck cc = integrally_convex_set_check(dom);
    if (!cc.equal) {
        Witness w;
        w.inequality = "cell_hull";
        w.rational_point = cc.witness;
        Point cell_lower(f.dim);
        for (int i = 0; i < f.dim; ++i) {
            // lower corner of a unit cell containing the witness
            Rat r = cc.witness[i];
            BigInt q = numerator(r) / denominator(r);
            if (Rat(q) > r) q -= 1;
            cell_lower[i] = Coord(q);
        }
        w.points = {cell_lower};
        w.note = "dom fails the per-cell hull test";
        return Verdict::no(std::move(w));
    }
    // pairs at l_inf distance exactly 2: local extension at the midpoint
    for (auto it = f.entries.begin(); it != f.entries.end(); ++it) {
        auto jt = it;
        for (++jt; jt != f.entries.end(); ++jt) {
            const Point& x = it->first;
            const Point& y = jt->first;
            if (linf_dist(x, y) != 2) continue;
            Rat avg = (it->second + jt->second) / 2;
            bool integral_mid = true;
            for (int i = 0; i < f.dim; ++i)
                if (((x[i] + y[i]) & 1) != 0) integral_mid = false;
            ExtVal ext;
            if (integral_mid) {
                Point mid(f.dim);
                for (int i = 0; i < f.dim; ++i) mid[i] = (x[i] + y[i]) >> 1;
                ext = f.value(mid);
            } else {
                std::vector<Rat> z(f.dim);
                for (int i = 0; i < f.dim; ++i) z[i] = Rat(checked_add(x[i], y[i]), 2);
                ext = local_extension_value(f, z);
            }
            if (ext > ExtVal(avg))
                return Verdict::no(pair_witness("local_extension", x, y));
        }
    }
    return Verdict::yes();
}

// ---------------------------------------------------------- submodularity

Verdict is_submodular(const DiscreteFunction& f) {
    for (auto it = f.entries.begin(); it != f.entries.end(); ++it) {
        auto jt = it;
        for (++jt; jt != f.entries.end(); ++jt) {
            const Point& x = it->first;
            const Point& y = jt->first;
            auto [jn, mt] = join_meet(x, y);
            if (jn == x || jn == y) continue; // comparable: trivial
            ExtVal rhs = f.value(jn) + f.value(mt);
            if (ExtVal(it->second + jt->second) < rhs)
                return Verdict::no(pair_witness("submodularity", x, y));
        }
    }
    return Verdict::yes();
}

Verdict is_translation_submodular(const DiscreteFunction& f, MuRange range) {
    Coord diam = f.effective_window().diameter();
    Coord lo = range == MuRange::NonNegative ? 0 : -diam;
    for (const auto& [x, vx] : f.entries)
        for (const auto& [y, vy] : f.entries) {
            ExtVal lhs(vx + vy);
            // beyond max_i(x_i - y_i) - 1 the shifted join/meet return the pair itself
            Coord spread = std::numeric_limits<Coord>::min();
            for (size_t i = 0; i < x.size(); ++i) spread = std::max(spread, x[i] - y[i]);
            Coord hi = std::min(diam, spread - 1);
            for (Coord mu = lo; mu <= hi; ++mu) {
                if (range == MuRange::NonNegative && mu < 0) continue;
                Point xs = shifted(x, -mu);
                auto [jn, mt0] = join_meet(xs, y);
                Point ys = shifted(y, mu);
                auto [jn2, mt] = join_meet(x, ys);
                ExtVal rhs = f.value(jn) + f.value(mt);
                if (lhs < rhs) {
                    Witness w = pair_witness("translation_submodularity", x, y);
                    w.indices = {mu};
                    return Verdict::no(std::move(w));
                }
            }
        }
    return Verdict::yes();
}

// --------------------------------------------------------------- L-natural

namespace {

Verdict lnat_variant_a(const DiscreteFunction& f) {
    for (auto it = f.entries.begin(); it != f.entries.end(); ++it) {
        auto jt = it;
        for (++jt; jt != f.entries.end(); ++jt) {
            const Point& x = it->first;
            const Point& y = jt->first;
            auto [up, down] = midpoint_roundings(x, y);
            if (up == x || up == y) continue; // distance <= 1 and comparable: trivial
            ExtVal rhs = f.value(up) + f.value(down);
            if (ExtVal(it->second + jt->second) < rhs)
                return Verdict::no(pair_witness("discrete_midpoint", x, y));
        }
    }
    return Verdict::yes();
}

Verdict lnat_variant_b(const DiscreteFunction& f) {
    for (auto it = f.entries.begin(); it != f.entries.end(); ++it) {
        auto jt = it;
        for (++jt; jt != f.entries.end(); ++jt) {
            const Point& x = it->first;
            const Point& y = jt->first;
            auto [up, down] = midpoint_roundings(x, y);
            if (up == x || up == y) continue;
            bool up_in = f.entries.count(up), down_in = f.entries.count(down);
            if (!up_in || !down_in)
                return Verdict::no(
                    pair_witness("dom_midpoint", x, y, "midpoint rounding leaves dom"));
            if (linf_dist(x, y) <= 2) {
                ExtVal rhs = f.value(up) + f.value(down);
                if (ExtVal(it->second + jt->second) < rhs)
                    return Verdict::no(pair_witness("discrete_midpoint", x, y));
            }
        }
    }
    return Verdict::yes();
}

Verdict lnat_variant_e(const DiscreteFunction& f) {
    const int n = f.dim;
    for (const auto& [x, vx] : f.entries)
        for (const auto& [y, vy] : f.entries) {
            Coord best = std::numeric_limits<Coord>::min();
            for (int i = 0; i < n; ++i) best = std::max(best, checked_sub(x[i], y[i]));
            if (best <= 0) continue; // supp+(x-y) empty
            Point xa = x, ya = y;
            for (int i = 0; i < n; ++i)
                if (checked_sub(x[i], y[i]) == best) {
                    --xa[i];
                    ++ya[i];
                }
            ExtVal rhs = f.value(xa) + f.value(ya);
            if (ExtVal(vx + vy) < rhs)
                return Verdict::no(pair_witness("argmax_step", x, y));
        }
    return Verdict::yes();
}

constexpr Coord kLiftDiameterGuard = 64;

Verdict lnat_variant_f(const DiscreteFunction& f) {
    Coord d = f.effective_window().diameter();
    if (d > kLiftDiameterGuard)
        throw scale_guard_error("variant (f): window diameter " + std::to_string(d) +
                                " exceeds the lift guard");
    // submodularity of (x0, x) -> f(x - x0*1); any violating pair has a diagonal
    // translate whose first member sits at x0 = 0
    const int n = f.dim;
    for (const auto& [u, vu] : f.entries)
        for (const auto& [v, vv] : f.entries) {
            // outside (min(0,B), max(0,A)) the lifted points are comparable
            Coord a = std::numeric_limits<Coord>::min(), b = std::numeric_limits<Coord>::max();
            for (size_t i = 0; i < u.size(); ++i) {
                a = std::max(a, u[i] - v[i]);
                b = std::min(b, u[i] - v[i]);
            }
            Coord lo = std::max(-d, std::min<Coord>(0, b) + 1);
            Coord hi = std::min(d, std::max<Coord>(0, a) - 1);
            for (Coord y0 = lo; y0 <= hi; ++y0) {
                Point y = shifted(v, y0); // lifted point (y0, y) carries value f(v)
                auto [jn, mt] = join_meet(u, y);
                Coord j0 = std::max<Coord>(0, y0), m0 = std::min<Coord>(0, y0);
                ExtVal rhs = f.value(shifted(jn, -j0)) + f.value(shifted(mt, -m0));
                if (ExtVal(vu + vv) < rhs) {
                    Witness w;
                    w.inequality = "lifted_submodularity";
                    Point lu(size_t(n) + 1, 0), lv(size_t(n) + 1, 0);
                    lu[0] = 0;
                    std::copy(u.begin(), u.end(), lu.begin() + 1);
                    lv[0] = y0;
                    std::copy(y.begin(), y.end(), lv.begin() + 1);
                    w.points = {lu, lv};
                    return Verdict::no(std::move(w));
                }
            }
        }
    return Verdict::yes();
}

} // namespace

Verdict is_lnat(const DiscreteFunction& f, LnatVariant variant) {
    switch (variant) {
        case LnatVariant::A: return lnat_variant_a(f);
        case LnatVariant::B: return lnat_variant_b(f);
        case LnatVariant::C: {
            Verdict ic = is_integrally_convex(f);
            if (ic.status != Status::Yes) return ic;
            return is_submodular(f);
        }
        case LnatVariant::D: return is_translation_submodular(f, MuRange::NonNegative);
        case LnatVariant::E: return lnat_variant_e(f);
        case LnatVariant::F: return lnat_variant_f(f);
    }
    throw internal_error("unknown variant");
}

// --------------------------------------------------------------------- L

namespace {

struct SlopeScan {
    enum Kind { Consistent, Violation, NoPair } kind = NoPair;
    Rat r;
    Witness w;
};

// translation slope within the window: f(x + 1) = f(x) + r for pairs inside it
SlopeScan window_slope(const DiscreteFunction& f) {
    Box win = f.effective_window();
    SlopeScan out;
    bool have_r = false;
    auto consider = [&](const Point& a) -> bool {
        Point b = shifted(a, 1);
        if (!win.contains(a) || !win.contains(b)) return true;
        ExtVal va = f.value(a), vb = f.value(b);
        if (va.is_inf() && vb.is_inf()) return true;
        if (va.is_inf() || vb.is_inf()) {
            out.kind = SlopeScan::Violation;
            out.w = pair_witness("translation_slope", a, b,
                                 "shift by the all-ones vector leaves dom inside the window");
            return false;
        }
        Rat rr = vb.value() - va.value();
        if (!have_r) {
            have_r = true;
            out.r = rr;
        } else if (rr != out.r) {
            out.kind = SlopeScan::Violation;
            out.w = pair_witness("translation_slope", a, b, "inconsistent slope along all-ones");
            return false;
        }
        return true;
    };
    for (const auto& [x, vx] : f.entries) {
        if (!consider(x)) return out;
        if (!consider(shifted(x, -1))) return out;
    }
    if (!have_r) return out; // NoPair
    out.kind = SlopeScan::Consistent;
    return out;
}

} // namespace

Verdict is_l(const DiscreteFunction& f) {
    Verdict ln = is_lnat(f, LnatVariant::A);
    if (ln.status == Status::No) return ln;
    SlopeScan s = window_slope(f);
    if (s.kind == SlopeScan::Violation) return Verdict::no(std::move(s.w));
    if (s.kind == SlopeScan::NoPair)
        return Verdict::unknown("window too small: no (x, x+1) pair to test the slope");
    Verdict v = Verdict::yes_within_window();
    v.slope = s.r;
    return v;
}

// --------------------------------------------------------------- M-natural

Verdict is_mnat(const DiscreteFunction& f) {
    const int n = f.dim;
    for (const auto& [x, vx] : f.entries)
        for (const auto& [y, vy] : f.entries) {
            ExtVal lhs(vx + vy);
            for (int i = 0; i < n; ++i) {
                if (x[i] <= y[i]) continue; // need i in supp+(x-y)
                ExtVal best = ExtVal::infinity();
                { // j = 0
                    Point xi = x, yi = y;
                    --xi[i];
                    ++yi[i];
                    best = f.value(xi) + f.value(yi);
                }
                if (lhs < best)
                    for (int j = 0; j < n; ++j) {
                        if (x[j] >= y[j]) continue; // j in supp-(x-y)
                        Point xj = x, yj = y;
                        --xj[i];
                        ++xj[j];
                        ++yj[i];
                        --yj[j];
                        ExtVal cand = f.value(xj) + f.value(yj);
                        if (cand < best) best = cand;
                        if (!(lhs < best)) break;
                    }
                if (lhs < best) {
                    Witness w = pair_witness("exchange", x, y);
                    w.indices = {i + 1};
                    return Verdict::no(std::move(w));
                }
            }
        }
    return Verdict::yes();
}

Verdict is_m(const DiscreteFunction& f) {
    auto it = f.entries.begin();
    Coord s0 = coord_sum(it->first);
    for (const auto& [x, vx] : f.entries)
        if (coord_sum(x) != s0)
            return Verdict::no(pair_witness("component_sum", it->first, x,
                                            "dom must lie on a constant component-sum hyperplane"));
    return is_mnat(f);
}

// ----------------------------------------------------------- multimodular

Verdict is_multimodular(const DiscreteFunction& f) {
    DiscreteFunction g = d_transform(f, DTransformDirection::ToLnat);
    Verdict v = is_lnat(g, LnatVariant::A);
    if (v.status == Status::Yes) return Verdict::yes();
    Witness w;
    w.inequality = "multimodular_transform";
    if (v.witness) {
        w.points = v.witness->points; // pair in the transformed (L-natural) space
        if (w.points.size() == 2) {
            auto [up, down] = midpoint_roundings(w.points[0], w.points[1]);
            Point mapped = d_transform_point(up, DTransformDirection::FromLnat);
            w.note = "transform violates discrete midpoint convexity; D*ceil-mid = " +
                     point_to_string(mapped);
        }
    }
    return Verdict::no(std::move(w));
}

bool multimodular_direct_applicable(const DiscreteFunction& f) {
    Box win = f.effective_window();
    long long cells = win.lattice_count_capped(1 << 20);
    return cells == (long long)f.entries.size();
}

Verdict is_multimodular_direct(const DiscreteFunction& f) {
    if (!multimodular_direct_applicable(f))
        throw domain_error("direct multimodularity route needs a finite-valued window box");
    const int n = f.dim;
    std::vector<Point> dirs;
    dirs.push_back(unit(n, 0, -1));
    for (int i = 0; i + 1 < n; ++i) {
        Point d(n, 0);
        d[i] = 1;
        d[i + 1] = -1;
        dirs.push_back(d);
    }
    dirs.push_back(unit(n, n - 1, 1));
    Box win = f.effective_window();
    for (const auto& [z, vz] : f.entries)
        for (size_t a = 0; a < dirs.size(); ++a)
            for (size_t b = a + 1; b < dirs.size(); ++b) {
                Point za = add(z, dirs[a]), zb = add(z, dirs[b]);
                Point zab = add(za, dirs[b]);
                if (!win.contains(za) || !win.contains(zb) || !win.contains(zab)) continue;
                if (f.entries.at(za) + f.entries.at(zb) < vz + f.entries.at(zab)) {
                    Witness w;
                    w.inequality = "multimodular_direct";
                    w.points = {z};
                    w.indices = {Coord(a), Coord(b)};
                    return Verdict::no(std::move(w));
                }
            }
    return Verdict::yes();
}

// -------------------------------------------------- discrete midpoint convex

Verdict is_global_dmc(const DiscreteFunction& f) {
    for (auto it = f.entries.begin(); it != f.entries.end(); ++it) {
        auto jt = it;
        for (++jt; jt != f.entries.end(); ++jt) {
            const Point& x = it->first;
            const Point& y = jt->first;
            if (linf_dist(x, y) < 2) continue;
            auto [up, down] = midpoint_roundings(x, y);
            ExtVal rhs = f.value(up) + f.value(down);
            if (ExtVal(it->second + jt->second) < rhs)
                return Verdict::no(pair_witness("global_midpoint", x, y));
        }
    }
    return Verdict::yes();
}

Verdict is_directed_dmc(const DiscreteFunction& f) {
    for (auto it = f.entries.begin(); it != f.entries.end(); ++it) {
        auto jt = it;
        for (++jt; jt != f.entries.end(); ++jt) {
            const Point& x = it->first;
            const Point& y = jt->first;
            Point mxy = directed_rounding(x, y);
            Point myx = directed_rounding(y, x);
            if (mxy == x || mxy == y) continue; // distance <= 1: roundings give the pair back
            ExtVal rhs = f.value(mxy) + f.value(myx);
            if (ExtVal(it->second + jt->second) < rhs)
                return Verdict::no(pair_witness("directed_midpoint", x, y));
        }
    }
    return Verdict::yes();
}

// ------------------------------------------------------------ certificates

namespace {

bool same_entries_within(const DiscreteFunction& recombined, const DiscreteFunction& obj) {
    // compare within the object's window when it has one (windowed semantics for
    // classes with translation-invariant parts), exactly otherwise
    if (recombined.dim != obj.dim) return false;
    if (!obj.window) return recombined.entries == obj.entries;
    size_t inside = 0;
    for (const auto& [x, v] : recombined.entries) {
        if (!obj.window->contains(x)) continue;
        ++inside;
        auto it = obj.entries.find(x);
        if (it == obj.entries.end() || it->second != v) return false;
    }
    return inside == obj.entries.size();
}

} // namespace

Verdict verify_certificate(const DiscreteFunction& obj, const Certificate& cert, ClassId claimed) {
    if (cert.part1.dim != obj.dim || cert.part2.dim != obj.dim)
        throw dimension_mismatch("certificate parts must match the object dimension");

    std::optional<DiscreteFunction> recombined;
    try {
        switch (cert.kind) {
            case CertKind::Minkowski:
            case CertKind::InfimalConvolution:
                recombined = infimal_convolution(cert.part1, cert.part2);
                break;
            case CertKind::PointwiseSum:
            case CertKind::Intersection:
                recombined = pointwise_sum(cert.part1, cert.part2);
                break;
        }
    } catch (const empty_result_error&) {
        Witness w;
        w.inequality = "recombination";
        w.note = "parts recombine to an empty object";
        return Verdict::no(std::move(w));
    }
    if (!same_entries_within(*recombined, obj)) {
        Witness w;
        w.inequality = "recombination";
        w.note = "recombining the parts does not reproduce the object";
        return Verdict::no(std::move(w));
    }

    auto component = [&](const DiscreteFunction& part, int which) -> Verdict {
        Verdict v;
        switch (claimed) {
            case ClassId::L2: v = is_l(part); break;
            case ClassId::L2nat: v = is_lnat(part, LnatVariant::A); break;
            case ClassId::M2: v = is_m(part); break;
            case ClassId::M2nat: v = is_mnat(part); break;
            default: throw domain_error("verify_certificate: claimed class must be composite");
        }
        if (v.status == Status::No) {
            Witness w = v.witness ? *v.witness : Witness{};
            w.inequality = "component_class";
            w.note = "part " + std::to_string(which) + " fails the component-class check";
            v.witness = std::move(w);
        }
        return v;
    };

    Verdict v1 = component(cert.part1, 1);
    if (v1.status == Status::No || v1.status == Status::Unknown) return v1;
    Verdict v2 = component(cert.part2, 2);
    if (v2.status == Status::No || v2.status == Status::Unknown) return v2;
    if (claimed == ClassId::L2)
        return Verdict::yes_within_window("both parts L-convex within their windows");
    return Verdict::yes();
}

// ----------------------------------------------------- composite search

namespace {
std::atomic<long long> g_guard{14};

bool set_is_lnat(const std::set<Point>& pts) {
    for (auto it = pts.begin(); it != pts.end(); ++it) {
        auto jt = it;
        for (++jt; jt != pts.end(); ++jt) {
            auto [up, down] = midpoint_roundings(*it, *jt);
            if (up == *it || up == *jt) continue;
            if (!pts.count(up) || !pts.count(down)) return false;
        }
    }
    return true;
}
} // namespace

long long composite_guard() { return g_guard.load(); }
void set_composite_guard(long long guard) {
    if (guard < 1) throw domain_error("guard must be positive");
    g_guard.store(guard);
}

Verdict refute_or_search_composite(const DiscreteSet& s, ClassId target, long long guard) {
    if (target == ClassId::M2nat) {
        if (box_ops(s).second) return Verdict::yes("a box is M-natural, so a self-intersection");
        // any M-natural superset contains the box [x,y] for comparable x <= y,
        // so an intersection equal to S forces S to be box-closed
        for (const auto& x : s.points)
            for (const auto& y : s.points) {
                if (x == y || !leq(x, y)) continue;
                Box b(x, y);
                if (b.lattice_count_capped(1000000) > 1000000)
                    return Verdict::unknown("comparable box too large to enumerate");
                for (const auto& z : b.lattice_points())
                    if (!s.contains(z)) {
                        Witness w;
                        w.inequality = "comparable_box";
                        w.points = {x, y, z};
                        w.note = "box between comparable members leaves the set";
                        return Verdict::no(std::move(w));
                    }
            }
        Verdict mn = is_mnat(indicator(s));
        if (mn.status == Status::Yes) return Verdict::yes("self-intersection certificate");
        return Verdict::unknown("box-closed but no decomposition decision at this scale");
    }
    if (target != ClassId::L2nat)
        throw domain_error("refute_or_search_composite: target must be L2nat or M2nat");

    auto [bb, full] = box_ops(s);
    if (full) return Verdict::yes("a box is L-natural, so a sum with {0}");
    if (bb.lattice_count_capped(guard) > guard)
        return Verdict::unknown("bounding box exceeds the search guard");
    if (set_is_lnat(s.points)) return Verdict::yes("already L-natural: S + {0}");

    // normalized decompositions: S = S1 + S2 with lexmin(S2) = 0, so S1 is a subset
    // of S containing lexmin(S), and S2 lies in the translate set {d : S1 + d <= S}
    const Point lexmin = *s.points.begin();
    std::vector<Point> rest(s.points.begin(), s.points.end());
    rest.erase(rest.begin());
    const size_t k = rest.size();
    if (k > 30) return Verdict::unknown("set too large for decomposition search");

    for (unsigned long long mask = 0; mask < (1ull << k); ++mask) {
        std::set<Point> s1 = {lexmin};
        for (size_t i = 0; i < k; ++i)
            if (mask & (1ull << i)) s1.insert(rest[i]);
        if (!set_is_lnat(s1)) continue;

        // candidate translates (normalized: 0 and lexicographically nonnegative)
        std::vector<Point> ds;
        for (const auto& t : s.points) {
            Point d = sub(t, lexmin);
            bool ok = true;
            for (const auto& p : s1)
                if (!s.contains(add(p, d))) {
                    ok = false;
                    break;
                }
            if (ok) ds.push_back(d);
        }
        // maximal S2 candidate must already cover S
        std::set<Point> covered;
        for (const auto& p : s1)
            for (const auto& d : ds) covered.insert(add(p, d));
        if (covered.size() != s.size()) continue;

        const size_t m = ds.size();
        if (m > 20) continue; // cannot happen under the guard
        for (unsigned long long m2 = 0; m2 < (1ull << m); ++m2) {
            std::set<Point> s2;
            for (size_t i = 0; i < m; ++i)
                if (m2 & (1ull << i)) s2.insert(ds[i]);
            if (s2.empty() || *s2.begin() != Point(s.dim, 0)) continue;
            if (!set_is_lnat(s2)) continue;
            std::set<Point> sum;
            for (const auto& p : s1)
                for (const auto& d : s2) sum.insert(add(p, d));
            if (sum == s.points) {
                Verdict v = Verdict::yes("Minkowski decomposition found");
                return v;
            }
        }
    }
    Witness w;
    w.inequality = "decomposition_search";
    w.note = "exhaustive normalized Minkowski decomposition search found no L-natural split";
    return Verdict::no(std::move(w));
}

// -------------------------------------------------------------- classify_all

namespace {

bool set_like(const DiscreteFunction& f) {
    const Rat& v0 = f.entries.begin()->second;
    for (const auto& [x, v] : f.entries)
        if (v != v0) return false;
    return true;
}

} // namespace

ClassReport classify_all(const DiscreteFunction& f, const CertificateMap& certs) {
    ClassReport r;
    auto& vd = r.verdicts;
    vd[ClassId::Sep] = is_separable(f);
    vd[ClassId::Int] = is_integrally_convex(f);
    vd[ClassId::Lnat] = is_lnat(f, LnatVariant::A);
    vd[ClassId::L] = is_l(f);
    vd[ClassId::Mnat] = is_mnat(f);
    vd[ClassId::M] = is_m(f);
    vd[ClassId::Mm] = is_multimodular(f);
    vd[ClassId::Gdmc] = is_global_dmc(f);
    vd[ClassId::Ddmc] = is_directed_dmc(f);

    auto cert_for = [&](ClassId c) -> const Certificate* {
        auto it = certs.find(c);
        return it == certs.end() ? nullptr : &it->second;
    };

    // L2
    if (const Certificate* c = cert_for(ClassId::L2)) {
        vd[ClassId::L2] = verify_certificate(f, *c, ClassId::L2);
    } else if (vd[ClassId::L].status == Status::YesWithinWindow) {
        vd[ClassId::L2] = Verdict::yes_within_window("L-convex, hence L2 within the window");
        vd[ClassId::L2].slope = vd[ClassId::L].slope;
    } else {
        SlopeScan s = window_slope(f);
        if (s.kind == SlopeScan::Violation)
            vd[ClassId::L2] = Verdict::no(std::move(s.w));
        else
            vd[ClassId::L2] = Verdict::unknown("no certificate; L2 has no recognition algorithm");
    }

    // L2nat
    if (const Certificate* c = cert_for(ClassId::L2nat)) {
        vd[ClassId::L2nat] = verify_certificate(f, *c, ClassId::L2nat);
    } else if (vd[ClassId::Lnat].status == Status::Yes) {
        vd[ClassId::L2nat] = Verdict::yes("L-natural, trivially a sum with {0}");
    } else {
        Verdict sv = refute_or_search_composite(f.domain(), ClassId::L2nat);
        if (sv.status == Status::No)
            vd[ClassId::L2nat] = std::move(sv); // dom obstruction applies to functions too
        else if (sv.status == Status::Yes && set_like(f))
            vd[ClassId::L2nat] = std::move(sv);
        else
            vd[ClassId::L2nat] = Verdict::unknown("no certificate at this scale");
    }

    // M2
    if (const Certificate* c = cert_for(ClassId::M2)) {
        vd[ClassId::M2] = verify_certificate(f, *c, ClassId::M2);
    } else if (vd[ClassId::M].status == Status::Yes) {
        vd[ClassId::M2] = Verdict::yes("M-convex, trivially a self-intersection");
    } else if (vd[ClassId::M].witness && vd[ClassId::M].witness->inequality == "component_sum") {
        vd[ClassId::M2] = Verdict::no(*vd[ClassId::M].witness); // M2 forces constant sums
    } else {
        vd[ClassId::M2] = Verdict::unknown("no certificate; M2 has no recognition algorithm");
    }

    // M2nat
    if (const Certificate* c = cert_for(ClassId::M2nat)) {
        vd[ClassId::M2nat] = verify_certificate(f, *c, ClassId::M2nat);
    } else if (vd[ClassId::Mnat].status == Status::Yes) {
        vd[ClassId::M2nat] = Verdict::yes("M-natural, trivially a self-intersection");
    } else {
        Verdict sv = refute_or_search_composite(f.domain(), ClassId::M2nat);
        if (sv.status == Status::No || (sv.status == Status::Yes && set_like(f)))
            vd[ClassId::M2nat] = std::move(sv);
        else
            vd[ClassId::M2nat] = Verdict::unknown("no certificate at this scale");
    }

    check_inclusion_consistency(r);
    return r;
}

ClassReport classify_all(const DiscreteSet& s, std::optional<Box> window,
                         const CertificateMap& certs) {
    return classify_all(indicator(s, std::move(window)), certs);
}

Verdict classify_set(const DiscreteSet& s, ClassId cls, std::optional<Box> window) {
    DiscreteFunction f = indicator(s, std::move(window));
    switch (cls) {
        case ClassId::Sep: return is_separable(f);
        case ClassId::Int: return is_integrally_convex(f);
        case ClassId::L: return is_l(f);
        case ClassId::Lnat: return is_lnat(f, LnatVariant::A);
        case ClassId::M: return is_m(f);
        case ClassId::Mnat: return is_mnat(f);
        case ClassId::Mm: return is_multimodular(f);
        case ClassId::Gdmc: return is_global_dmc(f);
        case ClassId::Ddmc: return is_directed_dmc(f);
        default: return classify_all(f).at(cls);
    }
}

// -------------------------------------------------------- witness recheck

bool recheck_witness(const DiscreteFunction& f, const Witness& w) {
    auto val = [&](const Point& p) { return f.value(p); };
    const auto& pts = w.points;
    if (w.inequality == "dom_box") {
        return pts.size() == 1 && f.domain().bounding_box().contains(pts[0]) &&
               val(pts[0]).is_inf();
    }
    if (w.inequality == "axis_convexity") {
        if (pts.size() != 1 || w.indices.size() != 1) return false;
        int i = int(w.indices[0]) - 1;
        Point x1 = pts[0], x2 = pts[0];
        ++x1[i];
        x2[i] += 2;
        ExtVal a = val(pts[0]), b = val(x1), c = val(x2);
        if (a.is_inf() || b.is_inf() || c.is_inf()) return false;
        return a.value() + c.value() < 2 * b.value();
    }
    if (w.inequality == "mixed_difference") {
        if (pts.size() != 1 || w.indices.size() != 2) return false;
        int i = int(w.indices[0]) - 1, j = int(w.indices[1]) - 1;
        Point xi = pts[0], xj = pts[0], xij = pts[0];
        ++xi[i];
        ++xj[j];
        ++xij[i];
        ++xij[j];
        ExtVal a = val(pts[0]), b = val(xi), c = val(xj), d = val(xij);
        if (a.is_inf() || b.is_inf() || c.is_inf() || d.is_inf()) return false;
        return d.value() - b.value() - c.value() + a.value() != 0;
    }
    if (w.inequality == "discrete_midpoint" || w.inequality == "global_midpoint") {
        if (pts.size() != 2) return false;
        auto [up, down] = midpoint_roundings(pts[0], pts[1]);
        return val(pts[0]) + val(pts[1]) < val(up) + val(down);
    }
    if (w.inequality == "dom_midpoint") {
        if (pts.size() != 2) return false;
        auto [up, down] = midpoint_roundings(pts[0], pts[1]);
        return val(pts[0]).finite() && val(pts[1]).finite() &&
               (val(up).is_inf() || val(down).is_inf());
    }
    if (w.inequality == "directed_midpoint") {
        if (pts.size() != 2) return false;
        return val(pts[0]) + val(pts[1]) <
               val(directed_rounding(pts[0], pts[1])) + val(directed_rounding(pts[1], pts[0]));
    }
    if (w.inequality == "submodularity") {
        if (pts.size() != 2) return false;
        auto [jn, mt] = join_meet(pts[0], pts[1]);
        return val(pts[0]) + val(pts[1]) < val(jn) + val(mt);
    }
    if (w.inequality == "translation_submodularity") {
        if (pts.size() != 2 || w.indices.size() != 1) return false;
        Coord mu = w.indices[0];
        auto [jn, mt0] = join_meet(shifted(pts[0], -mu), pts[1]);
        auto [jn2, mt] = join_meet(pts[0], shifted(pts[1], mu));
        return val(pts[0]) + val(pts[1]) < val(jn) + val(mt);
    }
    if (w.inequality == "argmax_step") {
        if (pts.size() != 2) return false;
        const Point &x = pts[0], &y = pts[1];
        Coord best = std::numeric_limits<Coord>::min();
        for (size_t i = 0; i < x.size(); ++i) best = std::max(best, x[i] - y[i]);
        if (best <= 0) return false;
        Point xa = x, ya = y;
        for (size_t i = 0; i < x.size(); ++i)
            if (x[i] - y[i] == best) {
                --xa[i];
                ++ya[i];
            }
        return val(x) + val(y) < val(xa) + val(ya);
    }
    if (w.inequality == "lifted_submodularity") {
        if (pts.size() != 2) return false;
        Point u(pts[0].begin() + 1, pts[0].end()), v(pts[1].begin() + 1, pts[1].end());
        Coord x0 = pts[0][0], y0 = pts[1][0];
        auto [jn, mt] = join_meet(u, v);
        Coord j0 = std::max(x0, y0), m0 = std::min(x0, y0);
        return val(sub(u, Point(u.size(), x0))) + val(sub(v, Point(v.size(), y0))) <
               val(sub(jn, Point(jn.size(), j0))) + val(sub(mt, Point(mt.size(), m0)));
    }
    if (w.inequality == "exchange") {
        if (pts.size() != 2 || w.indices.size() != 1) return false;
        const Point &x = pts[0], &y = pts[1];
        int i = int(w.indices[0]) - 1;
        if (x[i] <= y[i]) return false;
        ExtVal lhs = val(x) + val(y);
        Point xi = x, yi = y;
        --xi[i];
        ++yi[i];
        ExtVal best = val(xi) + val(yi);
        for (size_t j = 0; j < x.size(); ++j) {
            if (x[j] >= y[j]) continue;
            Point xj = x, yj = y;
            --xj[i];
            ++xj[j];
            ++yj[i];
            --yj[j];
            ExtVal cand = val(xj) + val(yj);
            if (cand < best) best = cand;
        }
        return lhs < best;
    }
    if (w.inequality == "component_sum") {
        return pts.size() == 2 && coord_sum(pts[0]) != coord_sum(pts[1]) &&
               val(pts[0]).finite() && val(pts[1]).finite();
    }
    if (w.inequality == "multimodular_transform") {
        if (pts.size() != 2) return false;
        DiscreteFunction g = d_transform(f, DTransformDirection::ToLnat);
        auto [up, down] = midpoint_roundings(pts[0], pts[1]);
        return g.value(pts[0]) + g.value(pts[1]) < g.value(up) + g.value(down);
    }
    if (w.inequality == "multimodular_direct") {
        if (pts.size() != 1 || w.indices.size() != 2) return false;
        const int n = f.dim;
        std::vector<Point> dirs;
        dirs.push_back(unit(n, 0, -1));
        for (int i = 0; i + 1 < n; ++i) {
            Point d(n, 0);
            d[i] = 1;
            d[i + 1] = -1;
            dirs.push_back(d);
        }
        dirs.push_back(unit(n, n - 1, 1));
        const Point& z = pts[0];
        Point za = add(z, dirs[size_t(w.indices[0])]), zb = add(z, dirs[size_t(w.indices[1])]);
        Point zab = add(za, dirs[size_t(w.indices[1])]);
        return val(za) + val(zb) < val(z) + val(zab);
    }
    if (w.inequality == "translation_slope") {
        if (pts.size() != 2) return false;
        ExtVal a = val(pts[0]), b = val(pts[1]);
        if (a.is_inf() != b.is_inf()) return true;             // shift leaves dom
        return w.note.find("inconsistent") != std::string::npos; // slope mismatch case
    }
    if (w.inequality == "local_extension") {
        if (pts.size() != 2) return false;
        std::vector<Rat> z(pts[0].size());
        for (size_t i = 0; i < z.size(); ++i)
            z[i] = Rat(checked_add(pts[0][i], pts[1][i]), 2);
        ExtVal lhs = val(pts[0]) + val(pts[1]);
        if (lhs.is_inf()) return false;
        return local_extension_value(f, z) > ExtVal(lhs.value() / 2);
    }
    if (w.inequality == "cell_hull") {
        if (w.rational_point.empty() || pts.size() != 1) return false;
        DiscreteSet dom = f.domain();
        Point up(pts[0].size());
        for (size_t i = 0; i < up.size(); ++i) up[i] = checked_add(pts[0][i], 1);
        CellCheck cc = cell_hull_equal(dom, Box(pts[0], up));
        return !cc.equal;
    }
    if (w.inequality == "comparable_box") {
        return pts.size() == 3 && val(pts[0]).finite() && val(pts[1]).finite() &&
               leq(pts[0], pts[2]) && leq(pts[2], pts[1]) && val(pts[2]).is_inf();
    }
    return false;
}

// ------------------------------------------------------ inclusion diagram

const std::vector<std::pair<ClassId, ClassId>>& inclusion_edges() {
    using C = ClassId;
    static const std::vector<std::pair<C, C>> edges = {
        {C::Sep, C::Lnat},  {C::Sep, C::Mnat},   {C::Sep, C::Mm},    {C::Sep, C::L2nat},
        {C::Sep, C::M2nat}, {C::Sep, C::Int},    {C::Sep, C::Gdmc},  {C::Sep, C::Ddmc},
        {C::L, C::Lnat},    {C::L, C::L2},       {C::L, C::L2nat},   {C::L, C::Gdmc},
        {C::L, C::Ddmc},    {C::L, C::Int},      {C::L2, C::L2nat},  {C::L2, C::Int},
        {C::Lnat, C::L2nat},{C::Lnat, C::Int},   {C::Lnat, C::Gdmc}, {C::Lnat, C::Ddmc},
        {C::L2nat, C::Int}, {C::M, C::Mnat},     {C::M, C::M2},      {C::M, C::M2nat},
        {C::M, C::Int},     {C::M2, C::M2nat},   {C::M2, C::Int},    {C::Mnat, C::M2nat},
        {C::Mnat, C::Int},  {C::M2nat, C::Int},  {C::Mm, C::Int},    {C::Gdmc, C::Int},
        {C::Ddmc, C::Int}};
    return edges;
}

void check_inclusion_consistency(const ClassReport& r) {
    for (const auto& [a, b] : inclusion_edges()) {
        auto ia = r.verdicts.find(a);
        auto ib = r.verdicts.find(b);
        if (ia == r.verdicts.end() || ib == r.verdicts.end()) continue;
        if (is_positive(ia->second.status) && ib->second.status == Status::No)
            throw internal_error(std::string("inclusion violated: ") + class_code(a) + " positive but " +
                                 class_code(b) + " negative");
    }
}

} // namespace dcx
