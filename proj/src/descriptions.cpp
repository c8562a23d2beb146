#include "dcx/descriptions.hpp"

#include <nlohmann/json.hpp>

namespace dcx {

namespace {

std::optional<Coord> opt_add(const std::optional<Coord>& a, const std::optional<Coord>& b) {
    if (!a || !b) return std::nullopt; // +inf absorbs
    return checked_add(*a, *b);
}

bool opt_lt(const std::optional<Coord>& a, const std::optional<Coord>& b) {
    if (!b) return a.has_value(); // finite < +inf
    if (!a) return false;
    return *a < *b;
}

} // namespace

std::optional<Coord> LnatDescription::gamma_ext(int i, int j) const {
    if (i == j) return 0;
    if (i == 0) return beta[size_t(j) - 1];
    if (j == 0) {
        if (!alpha[size_t(i) - 1]) return std::nullopt; // -alpha_i = +inf when alpha_i = -inf
        return checked_sub(0, *alpha[size_t(i) - 1]);
    }
    return gamma[size_t(i) - 1][size_t(j) - 1];
}

bool LnatDescription::triangle_closed() const {
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            for (int k = 0; k <= n; ++k) {
                auto lhs = opt_add(gamma_ext(i, j), gamma_ext(j, k));
                if (opt_lt(lhs, gamma_ext(i, k))) return false;
            }
    return true;
}

LnatDescription extract_lnat_description(const DiscreteSet& s) {
    Verdict v = is_lnat(indicator(s), LnatVariant::A);
    if (v.status != Status::Yes)
        throw domain_error("extract_lnat_description: input set is not L-natural convex");
    LnatDescription d;
    d.n = s.dim;
    d.alpha.assign(s.dim, std::nullopt);
    d.beta.assign(s.dim, std::nullopt);
    d.gamma.assign(s.dim, std::vector<std::optional<Coord>>(s.dim, std::nullopt));
    Box bb = s.bounding_box();
    for (int i = 0; i < s.dim; ++i) {
        d.alpha[i] = bb.lower[i];
        d.beta[i] = bb.upper[i];
        d.gamma[i][i] = 0;
    }
    for (int i = 0; i < s.dim; ++i)
        for (int j = 0; j < s.dim; ++j) {
            if (i == j) continue;
            Coord best = std::numeric_limits<Coord>::min();
            for (const auto& x : s.points) best = std::max(best, checked_sub(x[j], x[i]));
            d.gamma[i][j] = best;
        }
    return d;
}

DiscreteSet build_lnat_set(const LnatDescription& desc, const Box& window) {
    if (window.dim() != desc.n) throw dimension_mismatch("build_lnat_set: window dimension");
    // negative-cycle check via Floyd-Warshall closure of gamma~
    const int m = desc.n + 1;
    std::vector<std::vector<std::optional<Coord>>> dist(m, std::vector<std::optional<Coord>>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) dist[i][j] = desc.gamma_ext(i, j);
    for (int k = 0; k < m; ++k)
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                auto via = opt_add(dist[i][k], dist[k][j]);
                if (opt_lt(via, dist[i][j])) dist[i][j] = via;
            }
    for (int i = 0; i < m; ++i)
        if (opt_lt(dist[i][i], 0))
            throw empty_result_error("build_lnat_set: negative cycle, the system is empty");

    std::set<Point> pts;
    for (const auto& x : window.lattice_points()) {
        bool ok = true;
        for (int i = 0; i < desc.n && ok; ++i) {
            if (desc.alpha[i] && x[i] < *desc.alpha[i]) ok = false;
            if (desc.beta[i] && x[i] > *desc.beta[i]) ok = false;
        }
        for (int i = 0; i < desc.n && ok; ++i)
            for (int j = 0; j < desc.n && ok; ++j) {
                if (i == j) continue;
                if (desc.gamma[i][j] && checked_sub(x[j], x[i]) > *desc.gamma[i][j]) ok = false;
            }
        if (ok) pts.insert(x);
    }
    if (pts.empty()) throw empty_result_error("build_lnat_set: no window point satisfies the system");
    DiscreteSet s(desc.n, std::move(pts));
    Verdict v = is_lnat(indicator(s), LnatVariant::A);
    if (v.status != Status::Yes)
        throw internal_error("build_lnat_set produced a non-L-natural set");
    return s;
}

IntervalBounds extract_interval_bounds(const DiscreteSet& s) {
    Verdict v = is_multimodular(indicator(s));
    if (v.status != Status::Yes)
        throw domain_error("extract_interval_bounds: input set is not multimodular");
    IntervalBounds out;
    out.n = s.dim;
    for (int a = 1; a <= s.dim; ++a)
        for (int b = a; b <= s.dim; ++b) {
            Coord lo = std::numeric_limits<Coord>::max(), hi = std::numeric_limits<Coord>::min();
            for (const auto& x : s.points) {
                Coord sum = 0;
                for (int i = a; i <= b; ++i) sum = checked_add(sum, x[size_t(i) - 1]);
                lo = std::min(lo, sum);
                hi = std::max(hi, sum);
            }
            out.bounds[{a, b}] = {lo, hi};
        }
    return out;
}

DiscreteSet build_multimodular_set(const IntervalBounds& bounds, const Box& window) {
    if (window.dim() != bounds.n) throw dimension_mismatch("build_multimodular_set: window");
    std::set<Point> pts;
    for (const auto& x : window.lattice_points()) {
        bool ok = true;
        for (const auto& [iv, ab] : bounds.bounds) {
            Coord sum = 0;
            for (int i = iv.first; i <= iv.second; ++i) sum = checked_add(sum, x[size_t(i) - 1]);
            if (ab.first && sum < *ab.first) ok = false;
            if (ab.second && sum > *ab.second) ok = false;
            if (!ok) break;
        }
        if (ok) pts.insert(x);
    }
    if (pts.empty())
        throw empty_result_error("build_multimodular_set: infeasible bounds in this window");
    DiscreteSet s(bounds.n, std::move(pts));
    Verdict v = is_multimodular(indicator(s));
    if (v.status != Status::Yes)
        throw internal_error("build_multimodular_set produced a non-multimodular set");
    return s;
}

Verdict validate_interval_rank(const IntervalRank& r) {
    auto fail = [](const char* ineq, int a, int b) {
        Witness w;
        w.inequality = ineq;
        w.indices = {a, b};
        return Verdict::no(std::move(w));
    };
    for (int a = 1; a <= r.n; ++a)
        if (r.at(a, a) < 0) return fail("rank_nonneg", a, a);
    for (int a = 1; a <= r.n; ++a)
        for (int b = a + 1; b <= r.n; ++b) {
            if (std::max(r.at(a, b - 1), r.at(a + 1, b)) > r.at(a, b))
                return fail("rank_monotone", a, b);
            Coord inner = a + 1 <= b - 1 ? r.at(a + 1, b - 1) : 0;
            if (r.at(a, b) > checked_sub(checked_add(r.at(a, b - 1), r.at(a + 1, b)), inner))
                return fail("rank_submodular", a, b);
        }
    return Verdict::yes();
}

Coord rho_from_rank(const IntervalRank& r, const IndexSet& X) {
    Coord total = 0;
    int run_start = 0, prev = 0;
    for (int i : X) {
        if (i < 1 || i > r.n) throw domain_error("rho_from_rank: index out of range");
        if (run_start == 0) {
            run_start = prev = i;
        } else if (i == prev + 1) {
            prev = i;
        } else {
            total = checked_add(total, r.at(run_start, prev));
            run_start = prev = i;
        }
    }
    if (run_start != 0) total = checked_add(total, r.at(run_start, prev));
    return total;
}

Coord RankFunction::at(const IndexSet& X) const {
    unsigned mask = 0;
    for (int i : X) {
        if (i < 1 || i > n) throw domain_error("RankFunction::at: index out of range");
        mask |= 1u << (i - 1);
    }
    return values.at(mask);
}

RankFunction rank_to_rho(const IntervalRank& r) {
    RankFunction rho;
    rho.n = r.n;
    rho.values.assign(size_t(1) << r.n, 0);
    for (unsigned mask = 0; mask < rho.values.size(); ++mask) {
        IndexSet X;
        for (int i = 1; i <= r.n; ++i)
            if (mask & (1u << (i - 1))) X.insert(i);
        rho.values[mask] = rho_from_rank(r, X);
    }
    return rho;
}

RankFunction monotonize(const RankFunction& rho) {
    RankFunction out = rho;
    // sweep from large to small subsets: rho*(X) = min(rho(X), min_i rho*(X + i))
    for (unsigned x = unsigned(out.values.size()) - 1; x + 1 > 0; --x)
        for (int i = 0; i < out.n; ++i) {
            unsigned y = x | (1u << i);
            if (y != x && out.values[y] < out.values[x]) out.values[x] = out.values[y];
        }
    return out;
}

Verdict validate_rank_function(const RankFunction& rho, bool require_monotone) {
    const unsigned full = (1u << rho.n) - 1;
    if (rho.values.size() != size_t(full) + 1)
        throw domain_error("validate_rank_function: table size mismatch");
    if (rho.values[0] != 0) {
        Witness w;
        w.inequality = "rho_normalized";
        return Verdict::no(std::move(w));
    }
    if (require_monotone)
        for (unsigned x = 0; x <= full; ++x)
            for (int i = 0; i < rho.n; ++i) {
                unsigned y = x | (1u << i);
                if (y != x && rho.values[x] > rho.values[y]) {
                    Witness w;
                    w.inequality = "rho_monotone";
                    w.indices = {Coord(x), Coord(y)};
                    return Verdict::no(std::move(w));
                }
            }
    for (unsigned x = 0; x <= full; ++x)
        for (unsigned y = 0; y <= full; ++y)
            if (checked_add(rho.values[x], rho.values[y]) <
                checked_add(rho.values[x | y], rho.values[x & y])) {
                Witness w;
                w.inequality = "rho_submodular";
                w.indices = {Coord(x), Coord(y)};
                return Verdict::no(std::move(w));
            }
    return Verdict::yes();
}

namespace {

DiscreteSet enumerate_polymatroid(int n, const std::function<bool(const Point&)>& feasible,
                                  const Point& upper, bool base, Coord base_sum) {
    Point lower(size_t(n), 0);
    std::set<Point> pts;
    for (const auto& x : Box(lower, upper).lattice_points()) {
        if (base && coord_sum(x) != base_sum) continue;
        if (feasible(x)) pts.insert(x);
    }
    if (pts.empty()) throw empty_result_error("polymatroid enumeration came up empty");
    return DiscreteSet(n, std::move(pts));
}

} // namespace

DiscreteSet polymatroid_from_rank(const IntervalRank& r) {
    Verdict v = validate_interval_rank(r);
    if (v.status != Status::Yes) throw domain_error("polymatroid_from_rank: invalid rank table");
    Point upper(size_t(r.n));
    for (int i = 1; i <= r.n; ++i) upper[size_t(i) - 1] = r.at(i, i);
    auto feasible = [&](const Point& x) {
        for (int a = 1; a <= r.n; ++a) {
            Coord sum = 0;
            for (int b = a; b <= r.n; ++b) {
                sum = checked_add(sum, x[size_t(b) - 1]);
                if (sum > r.at(a, b)) return false;
            }
        }
        return true;
    };
    return enumerate_polymatroid(r.n, feasible, upper, false, 0);
}

DiscreteSet polymatroid_from_rho(const RankFunction& rho) {
    Verdict v = validate_rank_function(rho);
    if (v.status != Status::Yes) throw domain_error("polymatroid_from_rho: invalid rank function");
    Point upper(size_t(rho.n));
    for (int i = 0; i < rho.n; ++i) upper[size_t(i)] = rho.values[1u << i];
    auto feasible = [&](const Point& x) {
        for (unsigned mask = 1; mask < rho.values.size(); ++mask) {
            Coord sum = 0;
            for (int i = 0; i < rho.n; ++i)
                if (mask & (1u << i)) sum = checked_add(sum, x[size_t(i)]);
            if (sum > rho.values[mask]) return false;
        }
        return true;
    };
    return enumerate_polymatroid(rho.n, feasible, upper, false, 0);
}

DiscreteSet m_base_from_rho(const RankFunction& rho) {
    Verdict v = validate_rank_function(rho);
    if (v.status != Status::Yes) throw domain_error("m_base_from_rho: invalid rank function");
    Point upper(size_t(rho.n));
    for (int i = 0; i < rho.n; ++i) upper[size_t(i)] = rho.values[1u << i];
    Coord total = rho.values.back();
    auto feasible = [&](const Point& x) {
        for (unsigned mask = 1; mask + 1 < rho.values.size(); ++mask) {
            Coord sum = 0;
            for (int i = 0; i < rho.n; ++i)
                if (mask & (1u << i)) sum = checked_add(sum, x[size_t(i)]);
            if (sum > rho.values[mask]) return false;
        }
        return true;
    };
    return enumerate_polymatroid(rho.n, feasible, upper, true, total);
}

IntervalRank extract_interval_rank(const DiscreteSet& s) {
    IntervalRank r;
    r.n = s.dim;
    for (int a = 1; a <= s.dim; ++a)
        for (int b = a; b <= s.dim; ++b) {
            Coord best = std::numeric_limits<Coord>::min();
            for (const auto& x : s.points) {
                Coord sum = 0;
                for (int i = a; i <= b; ++i) sum = checked_add(sum, x[size_t(i) - 1]);
                best = std::max(best, sum);
            }
            r.r[{a, b}] = best;
        }
    return r;
}

// ------------------------------------------------------------------ JSON

using nlohmann::json;

namespace {
json opt_to_json(const std::optional<Coord>& v) {
    if (!v) return nullptr;
    return *v;
}
} // namespace

json to_json(const LnatDescription& d) {
    json alpha = json::array(), beta = json::array(), gamma = json::array();
    for (int i = 0; i < d.n; ++i) {
        alpha.push_back(opt_to_json(d.alpha[size_t(i)]));
        beta.push_back(opt_to_json(d.beta[size_t(i)]));
        json row = json::array();
        for (int j = 0; j < d.n; ++j) row.push_back(opt_to_json(d.gamma[size_t(i)][size_t(j)]));
        gamma.push_back(std::move(row));
    }
    return json{{"n", d.n}, {"alpha", alpha}, {"beta", beta}, {"gamma", gamma}};
}

json to_json(const IntervalBounds& b) {
    json arr = json::array();
    for (const auto& [iv, ab] : b.bounds)
        arr.push_back(json{{"a", iv.first},
                           {"b", iv.second},
                           {"lo", opt_to_json(ab.first)},
                           {"hi", opt_to_json(ab.second)}});
    return json{{"n", b.n}, {"bounds", std::move(arr)}};
}

json to_json(const IntervalRank& r) {
    json arr = json::array();
    for (const auto& [iv, v] : r.r)
        arr.push_back(json{{"a", iv.first}, {"b", iv.second}, {"v", v}});
    return json{{"n", r.n}, {"r", std::move(arr)}};
}

json to_json(const RankFunction& rho) {
    json arr = json::array();
    for (unsigned mask = 0; mask < rho.values.size(); ++mask) {
        json x = json::array();
        for (int i = 1; i <= rho.n; ++i)
            if (mask & (1u << (i - 1))) x.push_back(i);
        arr.push_back(json{{"X", std::move(x)}, {"v", rho.values[mask]}});
    }
    return json{{"n", rho.n}, {"rho", std::move(arr)}};
}

IntervalRank interval_rank_from_json(const json& j) {
    IntervalRank r;
    if (!j.contains("n") || !j.contains("r")) throw parse_error("rank table needs 'n' and 'r'");
    r.n = j["n"].get<int>();
    for (const auto& e : j["r"]) r.r[{e.at("a").get<int>(), e.at("b").get<int>()}] = e.at("v").get<Coord>();
    for (int a = 1; a <= r.n; ++a)
        for (int b = a; b <= r.n; ++b)
            if (!r.r.count({a, b})) throw parse_error("rank table is missing an (a,b) entry");
    return r;
}

RankFunction rank_function_from_json(const json& j) {
    RankFunction rho;
    if (!j.contains("n") || !j.contains("rho")) throw parse_error("rho needs 'n' and 'rho'");
    rho.n = j["n"].get<int>();
    rho.values.assign(size_t(1) << rho.n, std::numeric_limits<Coord>::min());
    for (const auto& e : j["rho"]) {
        unsigned mask = 0;
        for (const auto& i : e.at("X")) mask |= 1u << (i.get<int>() - 1);
        rho.values.at(mask) = e.at("v").get<Coord>();
    }
    for (const auto& v : rho.values)
        if (v == std::numeric_limits<Coord>::min()) throw parse_error("rho table is incomplete");
    return rho;
}

} // namespace dcx
