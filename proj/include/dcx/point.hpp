#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dcx/rational.hpp"

namespace dcx {

using Coord = std::int64_t;
using Point = std::vector<Coord>;
using IndexSet = std::set<int>;

struct overflow_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct dimension_mismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline Coord checked_add(Coord a, Coord b) {
    Coord r;
    if (__builtin_add_overflow(a, b, &r)) throw overflow_error("coordinate overflow in add");
    return r;
}

inline Coord checked_sub(Coord a, Coord b) {
    Coord r;
    if (__builtin_sub_overflow(a, b, &r)) throw overflow_error("coordinate overflow in sub");
    return r;
}

inline Coord checked_mul(Coord a, Coord b) {
    Coord r;
    if (__builtin_mul_overflow(a, b, &r)) throw overflow_error("coordinate overflow in mul");
    return r;
}

inline void require_same_dim(const Point& x, const Point& y) {
    if (x.size() != y.size()) throw dimension_mismatch("points of different dimension");
}

Point add(const Point& x, const Point& y);
Point sub(const Point& x, const Point& y);
Point neg(const Point& x);

/// componentwise max / min
std::pair<Point, Point> join_meet(const Point& x, const Point& y);

/// (ceil((x+y)/2), floor((x+y)/2))
std::pair<Point, Point> midpoint_roundings(const Point& x, const Point& y);

/// directed rounding of the midpoint: up where x_i >= y_i, down where x_i <= y_i
Point directed_rounding(const Point& x, const Point& y);

/// ({i : x_i > 0}, {i : x_i < 0}), 1-based indices
std::pair<IndexSet, IndexSet> supports(const Point& x);

Coord coord_sum(const Point& x);
Coord linf_dist(const Point& x, const Point& y);
bool leq(const Point& x, const Point& y); // componentwise

Rat dot(const std::vector<Rat>& p, const Point& x);

std::string point_to_string(const Point& x);

} // namespace dcx
