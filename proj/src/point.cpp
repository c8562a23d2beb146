#include "dcx/point.hpp"

#include <sstream>

namespace dcx {

std::string rat_to_string(const Rat& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}

Rat rat_from_string(const std::string& s) {
    auto is_int = [](const std::string& t) {
        if (t.empty()) return false;
        size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            if (!is_int(s)) throw parse_error("bad rational: '" + s + "'");
            return Rat(BigInt(s));
        }
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!is_int(num) || !is_int(den)) throw parse_error("bad rational: '" + s + "'");
        BigInt d(den);
        if (d == 0) throw parse_error("zero denominator: '" + s + "'");
        return Rat(BigInt(num), d);
    } catch (const std::exception& e) {
        throw parse_error(std::string("bad rational: '") + s + "': " + e.what());
    }
}

Point add(const Point& x, const Point& y) {
    require_same_dim(x, y);
    Point r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = checked_add(x[i], y[i]);
    return r;
}

Point sub(const Point& x, const Point& y) {
    require_same_dim(x, y);
    Point r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = checked_sub(x[i], y[i]);
    return r;
}

Point neg(const Point& x) {
    Point r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = checked_sub(0, x[i]);
    return r;
}

std::pair<Point, Point> join_meet(const Point& x, const Point& y) {
    require_same_dim(x, y);
    Point jn(x.size()), mt(x.size());
    for (size_t i = 0; i < x.size(); ++i) {
        jn[i] = x[i] > y[i] ? x[i] : y[i];
        mt[i] = x[i] < y[i] ? x[i] : y[i];
    }
    return {jn, mt};
}

namespace {
// floor((a+b)/2) for checked a+b
Coord floor_half(Coord s) { return s >> 1; }
Coord ceil_half(Coord s) { return (s >> 1) + (s & 1); }
} // namespace

std::pair<Point, Point> midpoint_roundings(const Point& x, const Point& y) {
    require_same_dim(x, y);
    Point up(x.size()), down(x.size());
    for (size_t i = 0; i < x.size(); ++i) {
        Coord s = checked_add(x[i], y[i]);
        up[i] = ceil_half(s);
        down[i] = floor_half(s);
    }
    return {up, down};
}

Point directed_rounding(const Point& x, const Point& y) {
    require_same_dim(x, y);
    Point r(x.size());
    for (size_t i = 0; i < x.size(); ++i) {
        Coord s = checked_add(x[i], y[i]);
        r[i] = x[i] >= y[i] ? ceil_half(s) : floor_half(s);
    }
    return r;
}

std::pair<IndexSet, IndexSet> supports(const Point& x) {
    IndexSet pos, negs;
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i] > 0) pos.insert(int(i) + 1);
        if (x[i] < 0) negs.insert(int(i) + 1);
    }
    return {pos, negs};
}

Coord coord_sum(const Point& x) {
    Coord s = 0;
    for (Coord c : x) s = checked_add(s, c);
    return s;
}

Coord linf_dist(const Point& x, const Point& y) {
    require_same_dim(x, y);
    Coord d = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        Coord a = checked_sub(x[i], y[i]);
        if (a < 0) a = -a;
        if (a > d) d = a;
    }
    return d;
}

bool leq(const Point& x, const Point& y) {
    require_same_dim(x, y);
    for (size_t i = 0; i < x.size(); ++i)
        if (x[i] > y[i]) return false;
    return true;
}

Rat dot(const std::vector<Rat>& p, const Point& x) {
    if (p.size() != x.size()) throw dimension_mismatch("dot: dimension mismatch");
    Rat s = 0;
    for (size_t i = 0; i < x.size(); ++i) s += p[i] * Rat(x[i]);
    return s;
}

std::string point_to_string(const Point& x) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < x.size(); ++i) {
        if (i) os << ",";
        os << x[i];
    }
    os << ")";
    return os.str();
}

} // namespace dcx
