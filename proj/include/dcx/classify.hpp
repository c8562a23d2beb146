#pragma once

#include "dcx/verdict.hpp"

namespace dcx {

// Every recognizer is pure and exhaustive over dom x dom; a No verdict always
// carries the lexicographically smallest violating tuple. Sets are classified
// through their indicator functions (set overloads below take the check window).

Verdict is_separable(const DiscreteFunction& f);

Verdict is_integrally_convex(const DiscreteFunction& f);

Verdict is_submodular(const DiscreteFunction& f);

enum class MuRange { NonNegative, WindowSymmetric };
Verdict is_translation_submodular(const DiscreteFunction& f, MuRange range = MuRange::NonNegative);

enum class LnatVariant { A, B, C, D, E, F };
Verdict is_lnat(const DiscreteFunction& f, LnatVariant variant = LnatVariant::A);

/// YesWithinWindow with the slope r in Verdict::slope, or No / Unknown; never plain
/// Yes (the defining invariance quantifies over all of Z).
Verdict is_l(const DiscreteFunction& f);

Verdict is_mnat(const DiscreteFunction& f);
Verdict is_m(const DiscreteFunction& f);

/// Primary route: L-natural convexity of the D-transformed function.
Verdict is_multimodular(const DiscreteFunction& f);

/// Secondary route: the direct inequality over the difference directions
/// {-e1, e1-e2, ..., e_{n-1}-e_n, e_n}; only applicable when f is finite on its
/// whole window box. Must agree with is_multimodular where both apply (asserted
/// by the relation suites).
Verdict is_multimodular_direct(const DiscreteFunction& f);
bool multimodular_direct_applicable(const DiscreteFunction& f);

Verdict is_global_dmc(const DiscreteFunction& f);
Verdict is_directed_dmc(const DiscreteFunction& f);

Verdict verify_certificate(const DiscreteFunction& obj, const Certificate& cert, ClassId claimed);

long long composite_guard();
void set_composite_guard(long long guard);

/// M2nat: No when the comparable-pair box closure strictly exceeds S; L2nat:
/// exhaustive normalized Minkowski-decomposition search inside the bounding box.
/// Unknown when the scale guard is exceeded, never a wrong answer.
Verdict refute_or_search_composite(const DiscreteSet& s, ClassId target,
                                   long long guard = composite_guard());

using CertificateMap = std::map<ClassId, Certificate>;

ClassReport classify_all(const DiscreteFunction& f, const CertificateMap& certs = {});
ClassReport classify_all(const DiscreteSet& s, std::optional<Box> window = std::nullopt,
                         const CertificateMap& certs = {});

// set-level conveniences (indicator route with the given window)
Verdict classify_set(const DiscreteSet& s, ClassId cls, std::optional<Box> window = std::nullopt);

/// Re-evaluates a witness through its named inequality; true when the violation
/// reproduces exactly.
bool recheck_witness(const DiscreteFunction& f, const Witness& w);

/// Throws internal_error when the report contradicts the inclusion diagram.
void check_inclusion_consistency(const ClassReport& r);

/// The inclusion edges (A,B) with class A contained in class B, as implemented.
const std::vector<std::pair<ClassId, ClassId>>& inclusion_edges();

} // namespace dcx
