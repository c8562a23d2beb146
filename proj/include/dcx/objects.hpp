#pragma once

#include <map>
#include <optional>
#include <set>

#include "dcx/point.hpp"

namespace dcx {

/// Dimensions above this are rejected (desk scale). Overridable, e.g. from DCX_MAX_DIM.
int max_dim();
void set_max_dim(int n);

void check_dim(int dim);

struct Box {
    Point lower;
    Point upper;

    Box() = default;
    Box(Point lo, Point up);

    int dim() const { return int(lower.size()); }
    bool contains(const Point& x) const;
    Coord diameter() const; // max upper_i - lower_i
    std::vector<Point> lattice_points() const;
    long long lattice_count_capped(long long cap) const; // count, or cap+1 if larger

    bool operator==(const Box& o) const { return lower == o.lower && upper == o.upper; }
};

/// Finite nonempty subset of Z^dim.
struct DiscreteSet {
    int dim = 0;
    std::set<Point> points;

    DiscreteSet() = default;
    DiscreteSet(int d, std::set<Point> pts);

    size_t size() const { return points.size(); }
    bool contains(const Point& x) const { return points.count(x) > 0; }
    Box bounding_box() const;

    bool operator==(const DiscreteSet& o) const { return dim == o.dim && points == o.points; }
};

/// Finite map point -> exact rational; off-map means +inf. Optional explicit check window.
struct DiscreteFunction {
    int dim = 0;
    std::map<Point, Rat> entries;
    std::optional<Box> window;

    DiscreteFunction() = default;
    DiscreteFunction(int d, std::map<Point, Rat> e, std::optional<Box> w = std::nullopt);

    ExtVal value(const Point& x) const;
    DiscreteSet domain() const;
    size_t dom_size() const { return entries.size(); }
    Box effective_window() const; // explicit window, else dom bounding box

    bool operator==(const DiscreteFunction& o) const {
        return dim == o.dim && entries == o.entries && window == o.window;
    }
};

enum class DTransformDirection { ToLnat, FromLnat };

// lattice_core operations
DiscreteFunction indicator(const DiscreteSet& s, std::optional<Box> window = std::nullopt);
DiscreteSet argmin_set(const DiscreteFunction& f);
DiscreteFunction tilt(const DiscreteFunction& f, const std::vector<Rat>& p);

/// ToLnat maps each domain point x to D^{-1}x (cumulative sums); FromLnat maps y to Dy
/// (consecutive differences). Values are preserved; windows are dropped (a box does not
/// transform to a box).
DiscreteFunction d_transform(const DiscreteFunction& f, DTransformDirection dir);
DiscreteSet d_transform(const DiscreteSet& s, DTransformDirection dir);
Point d_transform_point(const Point& x, DTransformDirection dir);

DiscreteSet minkowski_sum(const DiscreteSet& a, const DiscreteSet& b);
DiscreteFunction infimal_convolution(const DiscreteFunction& f1, const DiscreteFunction& f2);
DiscreteFunction pointwise_sum(const DiscreteFunction& f1, const DiscreteFunction& f2);

struct empty_result_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Throws empty_result_error when disjoint (class definitions require nonemptiness).
DiscreteSet intersect(const DiscreteSet& a, const DiscreteSet& b);

/// Componentwise (min,max) bounds and whether s fills the whole box between them.
std::pair<Box, bool> box_ops(const DiscreteSet& s);

/// (n+1)-dimensional lift with prepended x0 = -x(N); equals f(x) there, +inf elsewhere.
DiscreteFunction mnat_to_m_lift(const DiscreteFunction& f);
DiscreteSet mnat_to_m_lift(const DiscreteSet& s);

} // namespace dcx
