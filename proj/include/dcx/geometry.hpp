#pragma once

#include <optional>
#include <vector>

#include "dcx/objects.hpp"

namespace dcx {

/// One inequality <a,x> <= b with exact rational data.
struct Facet {
    std::vector<Rat> normal;
    Rat offset;
};

/// Bounded H-polytope; degenerate (lower-dimensional) hulls carry equality pairs
/// (a,b) and (-a,-b). Facet list is nonredundant and sorted for stable output.
struct HPolytope {
    int dim = 0;
    std::vector<Facet> facets;

    bool contains(const std::vector<Rat>& x) const;
    bool contains(const Point& x) const;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };
enum class LpSense { Min, Max };
enum class RowRel { LE, EQ, GE };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Rat value;
    std::vector<Rat> x;
};

/// Exact two-phase simplex with Bland's rule: min c.x, A x (<=|=|>=) b, x >= 0.
LpResult lp_min_nonneg(const std::vector<std::vector<Rat>>& A, const std::vector<RowRel>& rel,
                       const std::vector<Rat>& b, const std::vector<Rat>& c);

/// Optimize a free-variable linear objective over a bounded polytope.
/// Unbounded is impossible for a true HPolytope; throws internal_error if detected.
LpResult lp_solve(const std::vector<Rat>& objective, const HPolytope& poly, LpSense sense);

/// Exact H-representation of conv(points); dim <= max_dim(), points nonempty.
HPolytope convex_hull(const std::vector<Point>& points);
HPolytope convex_hull(const DiscreteSet& s);

/// Subset of points with the same convex hull (midpoint filtering plus an exact
/// LP pass on what remains); cheap way to shrink hull/LP inputs.
std::vector<Point> hull_support_points(const std::vector<Point>& points);

/// Integral neighborhood N(z): integer points g with |g_i - z_i| < 1 for all i.
std::vector<Point> integral_neighborhood(const std::vector<Rat>& z);

/// Houses the LP over N(target): min sum(costs_y * lambda_y), sum lambda_y y = target,
/// lambda in Lambda(target).
struct NeighborhoodLP {
    std::vector<Rat> target;
    std::vector<Point> generators;
    std::vector<Rat> costs;

    ExtVal solve() const; // +inf when infeasible
};

/// Local convex extension f~(z): exact min of sum lambda_y f(y) over Lambda(z)
/// with sum lambda_y y = z, generators N(z); +inf if infeasible over dom f.
ExtVal local_extension_value(const DiscreteFunction& f, const std::vector<Rat>& z);

struct CellCheck {
    bool equal = true;
    std::vector<Rat> witness; // rational point in conv(S) ∩ cell but outside conv(S ∩ cell-vertices)
};

/// conv(S) ∩ cell == conv(S ∩ cell-vertices) as polytopes? cell must have upper = lower + 1.
CellCheck cell_hull_equal(const DiscreteSet& s, const Box& cell);

/// Set integral convexity: per-cell hull equality over every unit cell meeting the
/// bounding box. Returns the first failing cell's witness otherwise.
CellCheck integrally_convex_set_check(const DiscreteSet& s);

} // namespace dcx
