#include "dcx/geometry.hpp"

#include <algorithm>
#include <numeric>

namespace dcx {

namespace {

// ---------------------------------------------------------------- simplex

struct Tableau {
    std::vector<std::vector<Rat>> t; // m constraint rows + cost row; last col = rhs
    std::vector<int> basis;          // basis[i] = column basic in row i
    int m = 0;
    int ncols = 0; // excluding rhs
};

void pivot(Tableau& T, int row, int col) {
    auto& t = T.t;
    Rat p = t[row][col];
    for (auto& v : t[row]) v /= p;
    for (int i = 0; i <= T.m; ++i) {
        if (i == row) continue;
        Rat f = t[i][col];
        if (f == 0) continue;
        for (int j = 0; j <= T.ncols; ++j)
            if (t[row][j] != 0) t[i][j] -= f * t[row][j];
    }
    T.basis[row] = col;
}

enum class Step { Optimal, Pivoted, Unbounded };

// One Bland step on the min-form tableau (cost row holds reduced costs).
Step simplex_step(Tableau& T, const std::vector<bool>& allowed) {
    int enter = -1;
    for (int j = 0; j < T.ncols; ++j)
        if (allowed[j] && T.t[T.m][j] < 0) {
            enter = j;
            break;
        }
    if (enter < 0) return Step::Optimal;
    int leave = -1;
    Rat best;
    for (int i = 0; i < T.m; ++i)
        if (T.t[i][enter] > 0) {
            Rat ratio = T.t[i][T.ncols] / T.t[i][enter];
            if (leave < 0 || ratio < best ||
                (ratio == best && T.basis[i] < T.basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
    if (leave < 0) return Step::Unbounded;
    pivot(T, leave, enter);
    return Step::Pivoted;
}

Step run_simplex(Tableau& T, const std::vector<bool>& allowed) {
    while (true) {
        Step s = simplex_step(T, allowed);
        if (s != Step::Pivoted) return s;
    }
}

} // namespace

LpResult lp_min_nonneg(const std::vector<std::vector<Rat>>& A, const std::vector<RowRel>& rel,
                       const std::vector<Rat>& b, const std::vector<Rat>& c) {
    const int m = int(A.size());
    const int k = int(c.size());
    if (int(rel.size()) != m || int(b.size()) != m)
        throw internal_error("lp_min_nonneg: inconsistent sizes");

    std::vector<std::vector<Rat>> rows(A);
    std::vector<RowRel> rr(rel);
    std::vector<Rat> rhs(b);
    for (int i = 0; i < m; ++i) {
        if (int(rows[i].size()) != k) throw internal_error("lp_min_nonneg: bad row width");
        if (rhs[i] < 0) {
            for (auto& v : rows[i]) v = -v;
            rhs[i] = -rhs[i];
            if (rr[i] == RowRel::LE)
                rr[i] = RowRel::GE;
            else if (rr[i] == RowRel::GE)
                rr[i] = RowRel::LE;
        }
    }

    int nslack = 0, nart = 0;
    for (int i = 0; i < m; ++i) {
        if (rr[i] != RowRel::EQ) ++nslack;
        if (rr[i] != RowRel::LE) ++nart;
    }
    const int ncols = k + nslack + nart;

    Tableau T;
    T.m = m;
    T.ncols = ncols;
    T.t.assign(m + 1, std::vector<Rat>(ncols + 1, Rat(0)));
    T.basis.assign(m, -1);

    int scol = k, acol = k + nslack;
    std::vector<bool> artificial(ncols, false);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < k; ++j) T.t[i][j] = rows[i][j];
        T.t[i][ncols] = rhs[i];
        if (rr[i] == RowRel::LE) {
            T.t[i][scol] = 1;
            T.basis[i] = scol++;
        } else if (rr[i] == RowRel::GE) {
            T.t[i][scol++] = -1;
        }
        if (rr[i] != RowRel::LE) {
            T.t[i][acol] = 1;
            artificial[acol] = true;
            T.basis[i] = acol++;
        }
    }

    std::vector<bool> allowed(ncols, true);

    if (nart > 0) {
        // phase 1: min sum of artificials
        for (int j = 0; j < ncols; ++j) T.t[m][j] = artificial[j] ? Rat(1) : Rat(0);
        T.t[m][ncols] = 0;
        for (int i = 0; i < m; ++i)
            if (artificial[T.basis[i]])
                for (int j = 0; j <= ncols; ++j) T.t[m][j] -= T.t[i][j];
        if (run_simplex(T, allowed) == Step::Unbounded)
            throw internal_error("phase-1 unbounded");
        if (-T.t[m][ncols] > 0) return {LpStatus::Infeasible, Rat(0), {}};

        // drive remaining artificials out of the basis (their value is 0)
        for (int i = 0; i < T.m; ++i) {
            if (!artificial[T.basis[i]]) continue;
            int col = -1;
            for (int j = 0; j < ncols; ++j)
                if (!artificial[j] && T.t[i][j] != 0) {
                    col = j;
                    break;
                }
            if (col >= 0) {
                pivot(T, i, col);
            } else {
                // redundant row: drop it
                T.t.erase(T.t.begin() + i);
                T.basis.erase(T.basis.begin() + i);
                --T.m;
                --i;
            }
        }
        for (int j = 0; j < ncols; ++j)
            if (artificial[j]) allowed[j] = false;
    }

    // phase 2
    for (int j = 0; j <= ncols; ++j) T.t[T.m][j] = 0;
    for (int j = 0; j < k; ++j) T.t[T.m][j] = c[j];
    for (int i = 0; i < T.m; ++i) {
        int bj = T.basis[i];
        if (bj < k && c[bj] != 0)
            for (int j = 0; j <= ncols; ++j) T.t[T.m][j] -= c[bj] * T.t[i][j];
    }
    if (run_simplex(T, allowed) == Step::Unbounded) return {LpStatus::Unbounded, Rat(0), {}};

    LpResult res;
    res.status = LpStatus::Optimal;
    res.value = -T.t[T.m][ncols];
    res.x.assign(k, Rat(0));
    for (int i = 0; i < T.m; ++i)
        if (T.basis[i] < k) res.x[T.basis[i]] = T.t[i][ncols];
    return res;
}

bool HPolytope::contains(const std::vector<Rat>& x) const {
    for (const auto& f : facets) {
        Rat s = 0;
        for (int i = 0; i < dim; ++i) s += f.normal[i] * x[i];
        if (s > f.offset) return false;
    }
    return true;
}

bool HPolytope::contains(const Point& x) const {
    std::vector<Rat> r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = Rat(x[i]);
    return contains(r);
}

LpResult lp_solve(const std::vector<Rat>& objective, const HPolytope& poly, LpSense sense) {
    const int n = poly.dim;
    if (int(objective.size()) != n) throw dimension_mismatch("lp_solve: objective dimension");
    // free x split as u - w, both >= 0
    std::vector<std::vector<Rat>> A;
    std::vector<RowRel> rel;
    std::vector<Rat> b;
    for (const auto& f : poly.facets) {
        std::vector<Rat> row(2 * n);
        for (int i = 0; i < n; ++i) {
            row[i] = f.normal[i];
            row[n + i] = -f.normal[i];
        }
        A.push_back(std::move(row));
        rel.push_back(RowRel::LE);
        b.push_back(f.offset);
    }
    std::vector<Rat> c(2 * n);
    for (int i = 0; i < n; ++i) {
        Rat v = sense == LpSense::Max ? -objective[i] : objective[i];
        c[i] = v;
        c[n + i] = -v;
    }
    LpResult inner = lp_min_nonneg(A, rel, b, c);
    if (inner.status == LpStatus::Unbounded)
        throw internal_error("lp_solve: unbounded over an HPolytope");
    if (inner.status != LpStatus::Optimal) return inner;
    LpResult res;
    res.status = LpStatus::Optimal;
    res.value = sense == LpSense::Max ? -inner.value : inner.value;
    res.x.assign(n, Rat(0));
    for (int i = 0; i < n; ++i) res.x[i] = inner.x[i] - inner.x[n + i];
    return res;
}

// ------------------------------------------------------- hull machinery

namespace {

bool in_convex_hull_lp(const Point& p, const std::vector<Point>& gens) {
    const int n = int(p.size());
    const int k = int(gens.size());
    if (k == 0) return false;
    std::vector<std::vector<Rat>> A(n + 1, std::vector<Rat>(k));
    std::vector<RowRel> rel(n + 1, RowRel::EQ);
    std::vector<Rat> b(n + 1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < k; ++j) A[i][j] = Rat(gens[j][i]);
        b[i] = Rat(p[i]);
    }
    for (int j = 0; j < k; ++j) A[n][j] = 1;
    b[n] = 1;
    std::vector<Rat> c(k, Rat(0));
    return lp_min_nonneg(A, rel, b, c).status == LpStatus::Optimal;
}

// determinant of a small integer matrix (fraction-free Bareiss)
Coord int_det(std::vector<std::vector<Coord>> a) {
    const int n = int(a.size());
    if (n == 0) return 1;
    Coord prev = 1;
    int sign = 1;
    for (int i = 0; i < n; ++i) {
        int piv = -1;
        for (int r = i; r < n; ++r)
            if (a[r][i] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return 0;
        if (piv != i) {
            std::swap(a[piv], a[i]);
            sign = -sign;
        }
        for (int r = i + 1; r < n; ++r) {
            for (int col = i + 1; col < n; ++col) {
                Coord num = checked_sub(checked_mul(a[r][col], a[i][i]),
                                        checked_mul(a[r][i], a[i][col]));
                a[r][col] = num / prev; // exact by Bareiss
            }
            a[r][i] = 0;
        }
        prev = a[i][i];
    }
    Coord d = a[n - 1][n - 1];
    return sign > 0 ? d : -d;
}

// generalized cross product: for (n-1) rows, the vector orthogonal to all of them
Point cross_normal(const std::vector<Point>& rows, int n) {
    Point normal(n, 0);
    std::vector<std::vector<Coord>> minor(n - 1, std::vector<Coord>(n - 1));
    for (int j = 0; j < n; ++j) {
        for (int r = 0; r < n - 1; ++r) {
            int cc = 0;
            for (int col = 0; col < n; ++col)
                if (col != j) minor[r][cc++] = rows[r][col];
        }
        Coord d = int_det(minor);
        normal[j] = (j % 2 == 0) ? d : checked_sub(0, d);
    }
    return normal;
}

Point primitive(Point v) {
    Coord g = 0;
    for (Coord c : v) g = std::gcd(g, c < 0 ? -c : c);
    if (g > 1)
        for (Coord& c : v) c /= g;
    return v;
}

// integer row echelon; returns pivot columns, matrix reduced in place
std::vector<int> int_echelon(std::vector<Point>& rows, int n) {
    std::vector<int> pivots;
    size_t r = 0;
    for (int col = 0; col < n && r < rows.size(); ++col) {
        size_t piv = r;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col] == 0) continue;
            Coord a = rows[r][col], bb = rows[i][col];
            Coord g = std::gcd(a < 0 ? -a : a, bb < 0 ? -bb : bb);
            Coord fa = bb / g, fr = a / g;
            for (int j = 0; j < n; ++j)
                rows[i][j] = checked_sub(checked_mul(rows[i][j], fr), checked_mul(rows[r][j], fa));
            rows[i] = primitive(std::move(rows[i]));
        }
        rows[r] = primitive(std::move(rows[r]));
        pivots.push_back(col);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

// integer basis of the orthogonal complement of span(rows)
std::vector<Point> complement_basis(std::vector<Point> rows, int n) {
    std::vector<int> pivots = int_echelon(rows, n);
    std::vector<bool> is_pivot(n, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<Point> basis;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        // solve span(rows) ⟂ v with v_f = 1 via rational back-substitution, then scale
        std::vector<Rat> v(n, Rat(0));
        v[f] = 1;
        for (int i = int(rows.size()) - 1; i >= 0; --i) {
            int pc = pivots[i];
            Rat s = 0;
            for (int j = pc + 1; j < n; ++j)
                if (v[j] != 0) s += Rat(rows[i][j]) * v[j];
            v[pc] = -s / Rat(rows[i][pc]);
        }
        BigInt lcm = 1;
        for (const auto& x : v) lcm = boost::multiprecision::lcm(lcm, denominator(x));
        Point iv(n);
        for (int j = 0; j < n; ++j) {
            BigInt scaled = numerator(v[j]) * (lcm / denominator(v[j]));
            if (scaled > std::numeric_limits<Coord>::max() || scaled < std::numeric_limits<Coord>::min())
                throw overflow_error("complement basis overflow");
            iv[j] = Coord(scaled);
        }
        basis.push_back(primitive(std::move(iv)));
    }
    return basis;
}

struct HullData {
    std::vector<Point> verts; // hull-supporting subset
    int rank = 0;             // affine dimension
    std::vector<Point> inormals; // primitive integer facet normals
    std::vector<Coord> ioffsets; // a.x <= b
    HPolytope poly;
};

Coord idot(const Point& a, const Point& x) {
    Coord s = 0;
    for (size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], x[i]));
    return s;
}

HullData build_hull(const std::vector<Point>& input) {
    if (input.empty()) throw domain_error("convex_hull: empty input");
    const int n = int(input[0].size());
    check_dim(n);
    for (const auto& p : input)
        if (int(p.size()) != n) throw dimension_mismatch("convex_hull: mixed dimensions");

    HullData H;
    H.verts = hull_support_points(input);
    const auto& V = H.verts;
    const Point& v0 = V[0];

    std::vector<Point> dirs;
    for (size_t i = 1; i < V.size(); ++i) dirs.push_back(sub(V[i], v0));
    std::vector<Point> echelon = dirs;
    H.rank = int(int_echelon(echelon, n).size());
    const int r = H.rank;

    std::set<std::pair<Point, Coord>> found;
    // primitive normal first, then the offset through a point of the face
    auto emit = [&](Point a, const Point& through) {
        a = primitive(std::move(a));
        Coord b = idot(a, through);
        found.insert({std::move(a), b});
    };

    std::vector<Point> comp = complement_basis(dirs, n);
    for (const auto& w : comp) {
        emit(w, v0);
        emit(neg(w), v0);
    }

    if (r >= 1) {
        // every facet of the r-dim hull contains r affinely independent vertices
        std::vector<int> idx(r);
        std::vector<Point> rows(size_t(r - 1 + int(comp.size())), Point(n, 0));
        for (size_t i = 0; i < comp.size(); ++i) rows[r - 1 + i] = comp[i];
        const int m = int(V.size());
        std::vector<int> comb(r);
        for (int i = 0; i < r; ++i) comb[i] = i;
        if (m >= r) {
            while (true) {
                for (int i = 1; i < r; ++i) rows[i - 1] = sub(V[comb[i]], V[comb[0]]);
                Point a = cross_normal(rows, n);
                bool zero = std::all_of(a.begin(), a.end(), [](Coord c) { return c == 0; });
                if (!zero) {
                    Coord base = idot(a, V[comb[0]]);
                    bool any_lt = false, any_gt = false;
                    for (const auto& v : V) {
                        Coord s = idot(a, v);
                        if (s < base) any_lt = true;
                        if (s > base) any_gt = true;
                        if (any_lt && any_gt) break;
                    }
                    if (!(any_lt && any_gt)) {
                        if (!any_gt) emit(a, V[comb[0]]);
                        if (!any_lt) emit(neg(a), V[comb[0]]);
                    }
                }
                // next combination
                int i = r - 1;
                while (i >= 0 && comb[i] == m - r + i) --i;
                if (i < 0) break;
                ++comb[i];
                for (int j = i + 1; j < r; ++j) comb[j] = comb[j - 1] + 1;
            }
        }
    }

    for (const auto& [a, b] : found) {
        H.inormals.push_back(a);
        H.ioffsets.push_back(b);
    }
    H.poly.dim = n;
    for (size_t i = 0; i < H.inormals.size(); ++i) {
        Facet f;
        f.normal.resize(n);
        for (int j = 0; j < n; ++j) f.normal[j] = Rat(H.inormals[i][j]);
        f.offset = Rat(H.ioffsets[i]);
        H.poly.facets.push_back(std::move(f));
    }
    return H;
}

} // namespace

std::vector<Point> hull_support_points(const std::vector<Point>& points) {
    std::set<Point> s(points.begin(), points.end());
    if (s.empty()) throw domain_error("hull_support_points: empty input");
    bool changed = true;
    while (changed && s.size() > 2) {
        changed = false;
        std::vector<Point> snapshot(s.begin(), s.end());
        for (const auto& p : snapshot) {
            if (!s.count(p)) continue;
            for (const auto& q : s) {
                if (q == p) continue;
                bool ok = true;
                Point mirror(p.size());
                for (size_t i = 0; i < p.size(); ++i) {
                    Coord two_p = checked_mul(2, p[i]);
                    mirror[i] = checked_sub(two_p, q[i]);
                }
                ok = s.count(mirror) > 0 && mirror != p;
                if (ok) {
                    s.erase(p);
                    changed = true;
                    break;
                }
            }
        }
    }
    std::vector<Point> v(s.begin(), s.end());
    if (v.size() > 18) {
        // exact reduction pass on the survivors; keeps facet enumeration cheap
        std::vector<Point> kept;
        std::set<Point> live(v.begin(), v.end());
        for (const auto& p : v) {
            live.erase(p);
            std::vector<Point> others(live.begin(), live.end());
            others.insert(others.end(), kept.begin(), kept.end());
            if (!in_convex_hull_lp(p, others)) {
                kept.push_back(p);
            }
        }
        std::sort(kept.begin(), kept.end());
        return kept;
    }
    return v;
}

HPolytope convex_hull(const std::vector<Point>& points) { return build_hull(points).poly; }

HPolytope convex_hull(const DiscreteSet& s) {
    return convex_hull(std::vector<Point>(s.points.begin(), s.points.end()));
}

// ------------------------------------------------- local convex extension

namespace {

Coord rat_floor(const Rat& r) {
    BigInt q = numerator(r) / denominator(r);
    if (Rat(q) > r) q -= 1;
    if (q > std::numeric_limits<Coord>::max() || q < std::numeric_limits<Coord>::min())
        throw overflow_error("rat_floor overflow");
    return Coord(q);
}

} // namespace

std::vector<Point> integral_neighborhood(const std::vector<Rat>& z) {
    const int n = int(z.size());
    std::vector<std::vector<Coord>> choices(n);
    for (int i = 0; i < n; ++i) {
        Coord fl = rat_floor(z[i]);
        if (Rat(fl) == z[i])
            choices[i] = {fl};
        else
            choices[i] = {fl, checked_add(fl, 1)};
    }
    std::vector<Point> out;
    Point cur(n);
    std::vector<size_t> pos(n, 0);
    while (true) {
        for (int i = 0; i < n; ++i) cur[i] = choices[i][pos[i]];
        out.push_back(cur);
        int i = 0;
        for (; i < n; ++i) {
            if (pos[i] + 1 < choices[i].size()) {
                ++pos[i];
                for (int j = 0; j < i; ++j) pos[j] = 0;
                break;
            }
        }
        if (i == n) break;
    }
    return out;
}

ExtVal NeighborhoodLP::solve() const {
    const int n = int(target.size());
    const int k = int(generators.size());
    if (k == 0) return ExtVal::infinity();
    for (const auto& g : generators) {
        if (int(g.size()) != n) throw dimension_mismatch("NeighborhoodLP: generator dimension");
        for (int i = 0; i < n; ++i) {
            Rat diff = Rat(g[i]) - target[i];
            if (diff >= 1 || diff <= -1)
                throw domain_error("NeighborhoodLP: generator outside integral neighborhood");
        }
    }
    std::vector<std::vector<Rat>> A(n + 1, std::vector<Rat>(k));
    std::vector<RowRel> rel(n + 1, RowRel::EQ);
    std::vector<Rat> b(n + 1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < k; ++j) A[i][j] = Rat(generators[j][i]);
        b[i] = target[i];
    }
    for (int j = 0; j < k; ++j) A[n][j] = 1;
    b[n] = 1;
    LpResult r = lp_min_nonneg(A, rel, b, costs);
    if (r.status != LpStatus::Optimal) return ExtVal::infinity();
    return ExtVal(r.value);
}

ExtVal local_extension_value(const DiscreteFunction& f, const std::vector<Rat>& z) {
    if (int(z.size()) != f.dim) throw dimension_mismatch("local_extension_value");
    NeighborhoodLP lp;
    lp.target = z;
    for (const auto& g : integral_neighborhood(z)) {
        auto it = f.entries.find(g);
        if (it != f.entries.end()) {
            lp.generators.push_back(g);
            lp.costs.push_back(it->second);
        }
    }
    return lp.solve();
}

// --------------------------------------------------------- cell checks

namespace {

// optimize a linear functional over conv(verts) ∩ cell in convex-combination form:
// rows stay tiny (2n+1) no matter how many facets conv(S) has
LpResult conv_box_lp(const std::vector<Point>& verts, const Box& cell,
                     const std::vector<Rat>& objective, LpSense sense) {
    const int n = cell.dim();
    const int k = int(verts.size());
    std::vector<std::vector<Rat>> A(2 * n + 1, std::vector<Rat>(k));
    std::vector<RowRel> rel;
    std::vector<Rat> b;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < k; ++j) {
            A[2 * i][j] = Rat(verts[size_t(j)][i]);
            A[2 * i + 1][j] = -Rat(verts[size_t(j)][i]);
        }
    }
    for (int j = 0; j < k; ++j) A[2 * n][j] = 1;
    for (int i = 0; i < n; ++i) {
        rel.push_back(RowRel::LE);
        b.push_back(Rat(cell.upper[i]));
        rel.push_back(RowRel::LE);
        b.push_back(Rat(-cell.lower[i]));
    }
    rel.push_back(RowRel::EQ);
    b.push_back(1);
    std::vector<Rat> c(k);
    for (int j = 0; j < k; ++j) {
        Rat v = dot(objective, verts[size_t(j)]);
        c[j] = sense == LpSense::Max ? -v : v;
    }
    LpResult inner = lp_min_nonneg(A, rel, b, c);
    if (inner.status != LpStatus::Optimal) return inner;
    LpResult out;
    out.status = LpStatus::Optimal;
    out.value = sense == LpSense::Max ? -inner.value : inner.value;
    out.x.assign(n, Rat(0));
    for (int j = 0; j < k; ++j)
        if (inner.x[j] != 0)
            for (int i = 0; i < n; ++i) out.x[i] += inner.x[j] * Rat(verts[size_t(j)][i]);
    return out;
}

CellCheck cell_check_core(const HullData& H, const DiscreteSet& s, const Box& cell) {
    const int n = s.dim;
    std::vector<Point> corners = cell.lattice_points(); // exactly the 2^n cell vertices
    std::vector<char> in_s(corners.size());
    size_t count_in_s = 0;
    for (size_t i = 0; i < corners.size(); ++i) {
        in_s[i] = s.contains(corners[i]);
        count_in_s += in_s[i];
    }
    if (count_in_s == corners.size()) return {true, {}};

    bool all_in_hull = true;
    for (size_t i = 0; i < corners.size() && all_in_hull; ++i)
        for (size_t fidx = 0; fidx < H.inormals.size(); ++fidx)
            if (idot(H.inormals[fidx], corners[i]) > H.ioffsets[fidx]) {
                all_in_hull = false;
                break;
            }
    if (all_in_hull) {
        // whole cell lies in conv(S), so equality needs every corner in S
        for (size_t i = 0; i < corners.size(); ++i)
            if (!in_s[i]) {
                std::vector<Rat> w(n);
                for (int j = 0; j < n; ++j) w[j] = Rat(corners[i][j]);
                return {false, std::move(w)};
            }
    }

    std::vector<Point> vq;
    for (size_t i = 0; i < corners.size(); ++i)
        if (in_s[i]) vq.push_back(corners[i]);

    if (vq.empty()) {
        // P must be empty as well
        std::vector<Rat> zero(n, Rat(0));
        LpResult r = conv_box_lp(H.verts, cell, zero, LpSense::Min);
        if (r.status == LpStatus::Optimal) return {false, r.x};
        return {true, {}};
    }

    HPolytope q = convex_hull(vq);
    for (const auto& f : q.facets) {
        LpResult r = conv_box_lp(H.verts, cell, f.normal, LpSense::Max);
        if (r.status != LpStatus::Optimal) throw internal_error("cell LP infeasible with vq nonempty");
        if (r.value > f.offset) return {false, r.x};
    }
    return {true, {}};
}

} // namespace

CellCheck cell_hull_equal(const DiscreteSet& s, const Box& cell) {
    if (cell.dim() != s.dim) throw dimension_mismatch("cell_hull_equal");
    for (int i = 0; i < s.dim; ++i)
        if (cell.upper[i] != cell.lower[i] + 1)
            throw domain_error("cell_hull_equal: cell must have side 1");
    HullData H = build_hull(std::vector<Point>(s.points.begin(), s.points.end()));
    return cell_check_core(H, s, cell);
}

CellCheck integrally_convex_set_check(const DiscreteSet& s) {
    auto [bb, full] = box_ops(s);
    if (full) return {true, {}};

    HullData H = build_hull(std::vector<Point>(s.points.begin(), s.points.end()));
    const int n = s.dim;

    Point lo = bb.lower;
    Point hi(n);
    for (int i = 0; i < n; ++i) hi[i] = std::max(bb.lower[i], checked_sub(bb.upper[i], 1));

    Point cur = lo;
    while (true) {
        Point up(n);
        for (int i = 0; i < n; ++i) up[i] = checked_add(cur[i], 1);
        CellCheck c = cell_check_core(H, s, Box(cur, up));
        if (!c.equal) return c;
        int i = 0;
        for (; i < n; ++i) {
            if (cur[i] < hi[i]) {
                ++cur[i];
                for (int j = 0; j < i; ++j) cur[j] = lo[j];
                break;
            }
        }
        if (i == n) break;
    }
    return {true, {}};
}

} // namespace dcx
