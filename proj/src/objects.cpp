#include "dcx/objects.hpp"

#include <algorithm>
#include <atomic>

namespace dcx {

namespace {
std::atomic<int> g_max_dim{8};
} // namespace

int max_dim() { return g_max_dim.load(); }
void set_max_dim(int n) {
    if (n < 1) throw domain_error("max_dim must be >= 1");
    g_max_dim.store(n);
}

void check_dim(int dim) {
    if (dim < 1) throw domain_error("dimension must be >= 1");
    if (dim > max_dim())
        throw scale_guard_error("dimension " + std::to_string(dim) + " exceeds limit " +
                                std::to_string(max_dim()));
}

Box::Box(Point lo, Point up) : lower(std::move(lo)), upper(std::move(up)) {
    require_same_dim(lower, upper);
    check_dim(int(lower.size()));
    if (!leq(lower, upper)) throw domain_error("Box: lower must be <= upper");
}

bool Box::contains(const Point& x) const {
    if (x.size() != lower.size()) throw dimension_mismatch("Box::contains");
    for (size_t i = 0; i < x.size(); ++i)
        if (x[i] < lower[i] || x[i] > upper[i]) return false;
    return true;
}

Coord Box::diameter() const {
    Coord d = 0;
    for (size_t i = 0; i < lower.size(); ++i) d = std::max(d, checked_sub(upper[i], lower[i]));
    return d;
}

std::vector<Point> Box::lattice_points() const {
    std::vector<Point> out;
    Point cur = lower;
    while (true) {
        out.push_back(cur);
        size_t i = 0;
        for (; i < cur.size(); ++i) {
            if (cur[i] < upper[i]) {
                ++cur[i];
                for (size_t j = 0; j < i; ++j) cur[j] = lower[j];
                break;
            }
        }
        if (i == cur.size()) break;
    }
    return out;
}

long long Box::lattice_count_capped(long long cap) const {
    long long n = 1;
    for (size_t i = 0; i < lower.size(); ++i) {
        Coord ext = checked_sub(upper[i], lower[i]) + 1;
        if (n > cap / ext + 1) return cap + 1;
        n *= ext;
        if (n > cap) return cap + 1;
    }
    return n;
}

DiscreteSet::DiscreteSet(int d, std::set<Point> pts) : dim(d), points(std::move(pts)) {
    check_dim(dim);
    if (points.empty()) throw domain_error("DiscreteSet must be nonempty");
    for (const auto& p : points)
        if (int(p.size()) != dim) throw dimension_mismatch("DiscreteSet: point of wrong dimension");
}

Box DiscreteSet::bounding_box() const {
    Point lo = *points.begin(), up = *points.begin();
    for (const auto& p : points)
        for (int i = 0; i < dim; ++i) {
            lo[i] = std::min(lo[i], p[i]);
            up[i] = std::max(up[i], p[i]);
        }
    return Box(lo, up);
}

DiscreteFunction::DiscreteFunction(int d, std::map<Point, Rat> e, std::optional<Box> w)
    : dim(d), entries(std::move(e)), window(std::move(w)) {
    check_dim(dim);
    if (entries.empty()) throw domain_error("DiscreteFunction: dom must be nonempty");
    for (const auto& [p, v] : entries)
        if (int(p.size()) != dim) throw dimension_mismatch("DiscreteFunction: point of wrong dimension");
    if (window) {
        if (window->dim() != dim) throw dimension_mismatch("DiscreteFunction: window dimension");
        for (const auto& [p, v] : entries)
            if (!window->contains(p)) throw domain_error("DiscreteFunction: window must contain dom");
    }
}

ExtVal DiscreteFunction::value(const Point& x) const {
    auto it = entries.find(x);
    if (it == entries.end()) return ExtVal::infinity();
    return ExtVal(it->second);
}

DiscreteSet DiscreteFunction::domain() const {
    std::set<Point> pts;
    for (const auto& [p, v] : entries) pts.insert(p);
    return DiscreteSet(dim, std::move(pts));
}

Box DiscreteFunction::effective_window() const {
    if (window) return *window;
    return domain().bounding_box();
}

DiscreteFunction indicator(const DiscreteSet& s, std::optional<Box> window) {
    std::map<Point, Rat> e;
    for (const auto& p : s.points) e.emplace(p, Rat(0));
    return DiscreteFunction(s.dim, std::move(e), std::move(window));
}

DiscreteSet argmin_set(const DiscreteFunction& f) {
    const Rat* best = nullptr;
    for (const auto& [p, v] : f.entries)
        if (!best || v < *best) best = &v;
    std::set<Point> pts;
    for (const auto& [p, v] : f.entries)
        if (v == *best) pts.insert(p);
    return DiscreteSet(f.dim, std::move(pts));
}

DiscreteFunction tilt(const DiscreteFunction& f, const std::vector<Rat>& p) {
    if (int(p.size()) != f.dim) throw dimension_mismatch("tilt: p has wrong length");
    std::map<Point, Rat> e;
    for (const auto& [x, v] : f.entries) e.emplace(x, v - dot(p, x));
    return DiscreteFunction(f.dim, std::move(e), f.window);
}

Point d_transform_point(const Point& x, DTransformDirection dir) {
    Point y(x.size());
    if (dir == DTransformDirection::ToLnat) {
        Coord acc = 0;
        for (size_t i = 0; i < x.size(); ++i) {
            acc = checked_add(acc, x[i]);
            y[i] = acc;
        }
    } else {
        for (size_t i = 0; i < x.size(); ++i) y[i] = i == 0 ? x[0] : checked_sub(x[i], x[i - 1]);
    }
    return y;
}

DiscreteFunction d_transform(const DiscreteFunction& f, DTransformDirection dir) {
    std::map<Point, Rat> e;
    for (const auto& [x, v] : f.entries) e.emplace(d_transform_point(x, dir), v);
    return DiscreteFunction(f.dim, std::move(e));
}

DiscreteSet d_transform(const DiscreteSet& s, DTransformDirection dir) {
    std::set<Point> pts;
    for (const auto& p : s.points) pts.insert(d_transform_point(p, dir));
    return DiscreteSet(s.dim, std::move(pts));
}

DiscreteSet minkowski_sum(const DiscreteSet& a, const DiscreteSet& b) {
    if (a.dim != b.dim) throw dimension_mismatch("minkowski_sum");
    std::set<Point> pts;
    for (const auto& x : a.points)
        for (const auto& y : b.points) pts.insert(add(x, y));
    return DiscreteSet(a.dim, std::move(pts));
}

DiscreteFunction infimal_convolution(const DiscreteFunction& f1, const DiscreteFunction& f2) {
    if (f1.dim != f2.dim) throw dimension_mismatch("infimal_convolution");
    std::map<Point, Rat> e;
    for (const auto& [y, v1] : f1.entries)
        for (const auto& [z, v2] : f2.entries) {
            Point x = add(y, z);
            Rat v = v1 + v2;
            auto it = e.find(x);
            if (it == e.end())
                e.emplace(std::move(x), std::move(v));
            else if (v < it->second)
                it->second = v;
        }
    std::optional<Box> w;
    if (f1.window && f2.window)
        w = Box(add(f1.window->lower, f2.window->lower), add(f1.window->upper, f2.window->upper));
    return DiscreteFunction(f1.dim, std::move(e), std::move(w));
}

DiscreteFunction pointwise_sum(const DiscreteFunction& f1, const DiscreteFunction& f2) {
    if (f1.dim != f2.dim) throw dimension_mismatch("pointwise_sum");
    std::map<Point, Rat> e;
    for (const auto& [x, v1] : f1.entries) {
        auto it = f2.entries.find(x);
        if (it != f2.entries.end()) e.emplace(x, v1 + it->second);
    }
    if (e.empty()) throw empty_result_error("pointwise_sum: empty common domain");
    std::optional<Box> w = f1.window ? f1.window : f2.window;
    if (w) {
        // keep a window only when it still contains the (smaller) domain of the sum
        for (const auto& [x, v] : e)
            if (!w->contains(x)) { w.reset(); break; }
    }
    return DiscreteFunction(f1.dim, std::move(e), std::move(w));
}

DiscreteSet intersect(const DiscreteSet& a, const DiscreteSet& b) {
    if (a.dim != b.dim) throw dimension_mismatch("intersect");
    std::set<Point> pts;
    for (const auto& p : a.points)
        if (b.contains(p)) pts.insert(p);
    if (pts.empty()) throw empty_result_error("intersect: empty intersection");
    return DiscreteSet(a.dim, std::move(pts));
}

std::pair<Box, bool> box_ops(const DiscreteSet& s) {
    Box bb = s.bounding_box();
    long long count = bb.lattice_count_capped((long long)s.size());
    bool full = count == (long long)s.size();
    return {bb, full};
}

DiscreteFunction mnat_to_m_lift(const DiscreteFunction& f) {
    check_dim(f.dim + 1);
    std::map<Point, Rat> e;
    for (const auto& [x, v] : f.entries) {
        Point q(x.size() + 1);
        q[0] = checked_sub(0, coord_sum(x));
        std::copy(x.begin(), x.end(), q.begin() + 1);
        e.emplace(std::move(q), v);
    }
    return DiscreteFunction(f.dim + 1, std::move(e));
}

DiscreteSet mnat_to_m_lift(const DiscreteSet& s) {
    check_dim(s.dim + 1);
    std::set<Point> pts;
    for (const auto& x : s.points) {
        Point q(x.size() + 1);
        q[0] = checked_sub(0, coord_sum(x));
        std::copy(x.begin(), x.end(), q.begin() + 1);
        pts.insert(std::move(q));
    }
    return DiscreteSet(s.dim + 1, std::move(pts));
}

} // namespace dcx
