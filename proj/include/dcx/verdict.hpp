#pragma once

#include <map>
#include <optional>
#include <string>

#include "dcx/objects.hpp"

namespace dcx {

enum class ClassId { Sep, Int, L, L2, Lnat, L2nat, M, M2, Mnat, M2nat, Mm, Gdmc, Ddmc };

/// Stable ASCII class codes: sep, int, L, L2, Lnat, L2nat, M, M2, Mnat, M2nat, mm, gdmc, ddmc.
const char* class_code(ClassId c);
std::optional<ClassId> class_from_code(const std::string& code);
const std::vector<ClassId>& all_classes();

enum class Status { Yes, No, YesWithinWindow, Unknown };
const char* status_code(Status s);
inline bool is_positive(Status s) { return s == Status::Yes || s == Status::YesWithinWindow; }

/// A concrete re-checkable counterexample: the violated inequality by name plus the
/// points/indices it quantifies over.
struct Witness {
    std::string inequality;
    std::vector<Point> points;
    std::vector<Coord> indices;
    std::vector<Rat> rational_point; // for per-cell hull witnesses
    std::string note;
};

/// Univariate decomposition f(x) = sum_i phi_i(x_i) on a box domain.
struct SeparableParts {
    std::vector<std::map<Coord, Rat>> phi;

    ExtVal eval(const Point& x) const;
};

struct Verdict {
    Status status = Status::Unknown;
    std::optional<Witness> witness;
    std::optional<Rat> slope;            // L-convexity slope r
    std::optional<SeparableParts> parts; // separable decomposition
    std::string note;

    static Verdict yes(std::string note = "") {
        Verdict v;
        v.status = Status::Yes;
        v.note = std::move(note);
        return v;
    }
    static Verdict yes_within_window(std::string note = "") {
        Verdict v;
        v.status = Status::YesWithinWindow;
        v.note = std::move(note);
        return v;
    }
    static Verdict no(Witness w) {
        Verdict v;
        v.status = Status::No;
        v.witness = std::move(w);
        return v;
    }
    static Verdict unknown(std::string note = "") {
        Verdict v;
        v.status = Status::Unknown;
        v.note = std::move(note);
        return v;
    }
};

enum class CertKind { Minkowski, InfimalConvolution, PointwiseSum, Intersection };
const char* cert_kind_code(CertKind k);
std::optional<CertKind> cert_kind_from_code(const std::string& code);

/// Claimed two-part decomposition backing a composite-class verdict. Set parts are
/// stored as indicator functions; Minkowski/intersection recombine through the
/// indicator identities.
struct Certificate {
    CertKind kind = CertKind::Minkowski;
    DiscreteFunction part1, part2;
};

struct ClassReport {
    std::map<ClassId, Verdict> verdicts;

    const Verdict& at(ClassId c) const { return verdicts.at(c); }
};

} // namespace dcx
