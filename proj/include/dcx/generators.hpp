#pragma once

#include <cstdint>
#include <random>

#include "dcx/classify.hpp"
#include "dcx/descriptions.hpp"

namespace dcx {

/// Seeded construction request. Identical specs yield byte-identical objects.
struct GenSpec {
    std::string cls; // target class tag, e.g. "lnat"
    int dim = 2;
    Coord radius = 3;      // window radius around the origin
    Coord value_range = 6; // magnitude scale for generated values
    std::uint64_t seed = 0;
};

/// Deterministic RNG: the mt19937_64 stream is fully specified by the standard;
/// bounded draws avoid std::uniform_int_distribution, whose mapping is not.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    std::uint64_t next() { return eng_(); }
    Coord uniform(Coord lo, Coord hi); // inclusive
    bool coin() { return (next() & 1) != 0; }

private:
    std::mt19937_64 eng_;
};

// Generators construct-then-verify: failures of exact constructions are internal
// errors, randomized routes retry with a derived seed.
DiscreteFunction gen_separable(const GenSpec& spec);
DiscreteFunction gen_linear(const GenSpec& spec); // full-box linear (windowed "lin")

DiscreteSet gen_lnat_set(const GenSpec& spec);
DiscreteFunction gen_lnat_function(const GenSpec& spec);

/// Windowed truncation of a translation-invariant L-convex set; the tight window
/// is attached so L verdicts stay YesWithinWindow.
DiscreteSet gen_l_set(const GenSpec& spec);
Box gen_l_window(const GenSpec& spec);

DiscreteSet gen_mnat_set(const GenSpec& spec);
DiscreteFunction gen_mnat_function(const GenSpec& spec);
DiscreteSet gen_m_base(const GenSpec& spec);
DiscreteFunction gen_m_function(const GenSpec& spec);

DiscreteSet gen_multimodular_set(const GenSpec& spec);
DiscreteFunction gen_multimodular_function(const GenSpec& spec);

IntervalRank gen_interval_rank(const GenSpec& spec);
DiscreteFunction gen_noise(const GenSpec& spec);

/// Generate an object of the named class tag, post-verified. Supported tags:
/// sep, lnat, lnat_set, l_set, mnat, mnat_set, m, m_base, mm, mm_set, rank, noise, linear.
bool known_generator(const std::string& tag);

// -------------------------------------------------------------- catalog

struct CatalogEntry {
    std::string id;
    bool is_set = false;
    DiscreteFunction object; // sets stored as indicator functions, window attached
    std::map<ClassId, Status> expected;
    CertificateMap certs;
    std::string provenance;

    ClassReport classify() const { return classify_all(object, certs); }
};

const std::vector<std::string>& catalog_ids();
CatalogEntry paper_example(const std::string& id);

} // namespace dcx
