#pragma once

#include <nlohmann/json_fwd.hpp>

#include "dcx/classify.hpp"

namespace dcx {

/// (alpha, beta, gamma) description of an L-natural set: alpha_i <= x_i <= beta_i,
/// x_j - x_i <= gamma_ij. nullopt encodes the infinite bound of the matching sign.
struct LnatDescription {
    int n = 0;
    std::vector<std::optional<Coord>> alpha; // -inf when absent
    std::vector<std::optional<Coord>> beta;  // +inf when absent
    std::vector<std::vector<std::optional<Coord>>> gamma; // +inf when absent, diag 0

    /// extended matrix gamma~ on indices 0..n (0 is the origin row/column)
    std::optional<Coord> gamma_ext(int i, int j) const;
    bool triangle_closed() const;
};

/// Bounds a_I <= x(I) <= b_I over consecutive intervals I = I(a,b), 1-based.
struct IntervalBounds {
    int n = 0;
    // keyed by (a,b), a <= b
    std::map<std::pair<int, int>, std::pair<std::optional<Coord>, std::optional<Coord>>> bounds;
};

/// Interval rank table r(a,b) for 1 <= a <= b <= n.
struct IntervalRank {
    int n = 0;
    std::map<std::pair<int, int>, Coord> r;

    Coord at(int a, int b) const { return r.at({a, b}); }
};

/// Normalized monotone submodular set function on subsets of {1..n}, n <= 6 here.
struct RankFunction {
    int n = 0;
    std::vector<Coord> values; // indexed by subset bitmask

    Coord at_mask(unsigned mask) const { return values.at(mask); }
    Coord at(const IndexSet& X) const;
};

LnatDescription extract_lnat_description(const DiscreteSet& s);
DiscreteSet build_lnat_set(const LnatDescription& desc, const Box& window);

IntervalBounds extract_interval_bounds(const DiscreteSet& s);
DiscreteSet build_multimodular_set(const IntervalBounds& bounds, const Box& window);

Verdict validate_interval_rank(const IntervalRank& r);

/// rho(X) = sum of r over the maximal consecutive runs of X.
Coord rho_from_rank(const IntervalRank& r, const IndexSet& X);
RankFunction rank_to_rho(const IntervalRank& r);

/// The true rank function of {x >= 0 : x(X) <= rho(X)}: minimize over supersets.
/// Run-decomposition tables can dip below their run sums when runs merge; the
/// minimization restores monotonicity without changing the polyhedron.
RankFunction monotonize(const RankFunction& rho);

/// nonnegativity / monotonicity / submodularity of a rank function, exhaustively;
/// require_monotone=false checks only normalization and submodularity.
Verdict validate_rank_function(const RankFunction& rho, bool require_monotone = true);

DiscreteSet polymatroid_from_rank(const IntervalRank& r);
DiscreteSet polymatroid_from_rho(const RankFunction& rho);
DiscreteSet m_base_from_rho(const RankFunction& rho);

/// r(a,b) = max x(I(a,b)) over S; the round-trip with polymatroid_from_rank is the
/// correctness contract.
IntervalRank extract_interval_rank(const DiscreteSet& s);

nlohmann::json to_json(const LnatDescription& d);
nlohmann::json to_json(const IntervalBounds& b);
nlohmann::json to_json(const IntervalRank& r);
nlohmann::json to_json(const RankFunction& rho);
IntervalRank interval_rank_from_json(const nlohmann::json& j);
RankFunction rank_function_from_json(const nlohmann::json& j);

} // namespace dcx
